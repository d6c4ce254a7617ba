#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "posadd/fooling.hpp"
#include "posadd/nfa.hpp"

namespace posadd {

// Text format for automata, one keyword per line:
//
//   k 9
//   states 2
//   initial 0
//   accepting 1
//   trans 0 1 1
//
// `accepting` may list zero indices. Lines starting with `#` are comments and
// blank lines are ignored; the special comment `# label <state> <text>`
// carries an optional display label. Printing normalizes: header first, then
// labels, then transitions in sorted order.

Nfa parse_automaton(std::istream& in);
Nfa load_automaton(const std::string& path);
void print_automaton(std::ostream& out, const Nfa& nfa);
void save_automaton(const std::string& path, const Nfa& nfa);

/// `eps` for the empty word, otherwise comma-separated decimal digit values,
/// LSD-first: `5,4,3,5`.
std::string format_word(const Word& w);
Word parse_word(const std::string& text);

/// One pair per line: `<word>;<word>`. Order is preserved.
std::vector<FoolingPair> parse_pairs(std::istream& in);
std::vector<FoolingPair> load_pairs(const std::string& path);
void print_pairs(std::ostream& out, const std::vector<FoolingPair>& pairs);

/// Graphviz export. When display labels are present, states are grouped and
/// colored by label shape and carry-1 states are drawn dashed.
void print_dot(std::ostream& out, const Nfa& nfa);

}  // namespace posadd
