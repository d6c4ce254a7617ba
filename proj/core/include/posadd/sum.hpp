#pragma once

#include <string>
#include <vector>

#include "posadd/nfa.hpp"

namespace posadd {

/// Role of a state in a constructed sum automaton.
///
/// Pair(p, q, carry) tracks both operands running; OnlyA(p, carry) and
/// OnlyB(q, carry) track the remaining operand after the other one finished;
/// Accept is the sink entered when only a carry is left to emit. MergedCarry
/// appears only in the one-state construction, where OnlyA(0, 1) and
/// OnlyB(0, 1) collapse into a single state.
struct SumState {
  enum class Kind { Pair, OnlyA, OnlyB, Accept, MergedCarry };

  Kind kind = Kind::Accept;
  int p = -1;     // operand A state (Pair, OnlyA)
  int q = -1;     // operand B state (Pair, OnlyB)
  int carry = 0;  // pending carry digit, 0 or 1

  static SumState pair(int p, int q, int carry) { return {Kind::Pair, p, q, carry}; }
  static SumState only_a(int p, int carry) { return {Kind::OnlyA, p, -1, carry}; }
  static SumState only_b(int q, int carry) { return {Kind::OnlyB, -1, q, carry}; }
  static SumState accept() { return {Kind::Accept, -1, -1, 0}; }
  static SumState merged_carry() { return {Kind::MergedCarry, -1, -1, 1}; }

  /// Display name: "(p,q,c)", "(A,p,c)", "(B,q,c)", "q_acc" or "q_01".
  std::string name() const;

  friend bool operator==(const SumState&, const SumState&) = default;
};

struct SumCensus {
  int pair = 0;
  int only_a = 0;
  int only_b = 0;
  int accept = 0;
  int merged_carry = 0;

  int total() const { return pair + only_a + only_b + accept + merged_carry; }
};

/// A sum automaton together with the role of every state. The embedded Nfa
/// carries the role names as display labels.
struct SumNfa {
  Nfa nfa;
  std::vector<SumState> roles;  // one per state

  SumCensus census() const;
  int state_of(const SumState& role) const;  // index, or -1 when absent
};

/// The general sum construction: for operands with m and n states the result
/// has exactly 2mn + 2m + 2n + 1 states (2mn Pair, 2m OnlyA, 2n OnlyB, one
/// accepting sink), untrimmed, and accepts exactly the canonical notations of
/// sums s + t with s drawn from L(a) and t from L(b), both read LSD-first.
SumNfa build_sum_nfa(const Nfa& a, const Nfa& b);

/// Specialized construction for two single-state operands: the two carry
/// states of the general construction are merged when both are reachable,
/// and unreachable states are dropped, leaving at most 6 states. The language
/// equals that of build_sum_nfa(a, b).
SumNfa build_sum_one_state(const Nfa& a, const Nfa& b);

/// Sum automaton for operands in MSD-first notation, obtained by reversing
/// the operands, building the LSD-first sum, and reversing the result.
Nfa build_sum_msd(const Nfa& a_msd, const Nfa& b_msd);

/// Worst-case size of a sum NFA for m- and n-state operands:
/// 6 when m = n = 1, otherwise 2mn + 2m + 2n + 1.
long long bound_states(int m, int n);

}  // namespace posadd
