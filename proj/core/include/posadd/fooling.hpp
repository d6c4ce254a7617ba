#pragma once

#include <string>
#include <vector>

#include "posadd/nfa.hpp"

namespace posadd {

/// One pair (x, y) of a fooling set. A fooling set certifies a lower bound on
/// the number of states of every NFA for a language: all concatenations
/// x_i y_i must lie in the language (F1), while for i != j at least one of
/// x_i y_j and x_j y_i must not (F2). The bound is the number of pairs.
struct FoolingPair {
  Word x;
  Word y;

  friend bool operator==(const FoolingPair&, const FoolingPair&) = default;
};

/// Outcome of checking a pair list against a language. Indices are 1-based.
struct FoolingVerdict {
  enum class Kind { Certified, F1Violation, F2Violation, DuplicatePair };

  Kind kind = Kind::Certified;
  int bound = 0;       // Certified: number of pairs = certified lower bound
  int i = 0, j = 0;    // offending pair indices
  Word word;           // F1Violation: the concatenation x_i y_i not in L
  Word cross_ij;       // F2Violation: x_i y_j, which is in L
  Word cross_ji;       // F2Violation: x_j y_i, which is also in L

  bool certified() const { return kind == Kind::Certified; }
  std::string describe() const;
};

/// Checks F1 and F2 by membership in L(lang). Violations are reported in
/// deterministic order: duplicate pairs first, then F1 by index, then F2 by
/// (i, j) lexicographic order; both cross words of an F2 violation are kept
/// so the report stands on its own.
FoolingVerdict verify_fooling(const std::vector<FoolingPair>& pairs, const Nfa& lang);

/// The 2mn+2m+2n+1 pairs certifying that the sum automaton of witness_a(k,m)
/// and witness_b(k,n) is minimal. Requires k >= 9, m >= 1, n >= 2.
std::vector<FoolingPair> gen_fooling_addition(int k, int m, int n);

/// The 6 pairs certifying minimality of the merged one-state sum automaton.
/// Requires k >= 9.
std::vector<FoolingPair> gen_fooling_one_state(int k);

/// The n pairs (1^i, 1^{n-i}) certifying that a mod-n counter needs n states.
std::vector<FoolingPair> gen_fooling_unary(int n);

}  // namespace posadd
