#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <utility>

#include "posadd/nfa.hpp"

namespace posadd {

/// Arbitrary-precision non-negative integer.
using Natural = boost::multiprecision::cpp_int;

/// The number a word denotes: sum of digit[i] * k^i (LSD-first indexing).
Natural value_of(const Word& w, int k);

/// The unique LSD-first notation of `value` with no trailing zero digit;
/// canonical(0) is the empty word.
Word canonical(const Natural& value, int k);

/// Digits in range and no trailing zero (the empty word is canonical).
bool is_canonical_word(const Word& w, int k);

/// Ripple-carry addition of two canonical words; the result is canonical.
Word add_words(const Word& u, const Word& v, int k);

/// Brute-force bounded sum language, used as the independent reference for
/// the constructed sum automata.
struct OracleResult {
  std::set<Word> words;                              // canonical sums, |w| <= max_len
  std::pair<std::size_t, std::size_t> operand_counts;  // enumerated operand words
  int max_len = 0;
};

/// Enumerates both operand languages to max_len, adds every pair of values,
/// and keeps the canonical sums of length <= max_len. A canonical sum is
/// never shorter than either canonical operand, so the cutoff loses nothing.
/// Both operand languages must be canonical (no accepted word ends in 0).
OracleResult sum_language_oracle(const Nfa& a, const Nfa& b, int max_len);

}  // namespace posadd
