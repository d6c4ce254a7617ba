#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posadd {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success / affirmative, 1 semantic negative (rejected word,
/// mismatch, fooling violation, inequivalence), 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posadd
