#pragma once

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "posadd/nfa.hpp"
#include "posadd/sum.hpp"
#include "posadd/witnesses.hpp"

namespace posadd::testutil {

/// Cycle of `len` states on a single digit: accepts (d^len)^*.
inline Nfa cycle_automaton(int k, int len, Digit d) {
  std::vector<Transition> trans;
  for (int i = 0; i < len; ++i) trans.push_back({i, d, (i + 1) % len});
  return Nfa(k, len, 0, {0}, std::move(trans));
}

/// Automaton accepting exactly the given word.
inline Nfa single_word_automaton(int k, const Word& w) {
  std::vector<Transition> trans;
  for (std::size_t i = 0; i < w.size(); ++i)
    trans.push_back({static_cast<int>(i), w[i], static_cast<int>(i) + 1});
  return Nfa(k, static_cast<int>(w.size()) + 1, 0, {static_cast<int>(w.size())},
             std::move(trans));
}

inline Nfa empty_language_automaton(int k) { return Nfa(k, 1, 0, {}, {}); }

/// Random NFA over the given digit set (may be properly nondeterministic).
inline Nfa random_nfa(std::mt19937& rng, int k, int max_states,
                      const std::vector<Digit>& digits) {
  std::uniform_int_distribution<int> state_dist(1, max_states);
  int states = state_dist(rng);
  std::uniform_int_distribution<int> target(0, states - 1);
  std::bernoulli_distribution arc(0.35);
  std::bernoulli_distribution acc(0.5);
  std::vector<Transition> trans;
  for (int s = 0; s < states; ++s)
    for (Digit d : digits) {
      if (arc(rng)) trans.push_back({s, d, target(rng)});
      if (arc(rng)) trans.push_back({s, d, target(rng)});
    }
  std::vector<int> accepting;
  for (int s = 0; s < states; ++s)
    if (acc(rng)) accepting.push_back(s);
  return Nfa(k, states, 0, std::move(accepting), std::move(trans));
}

/// Random trimmed partial DFA over the given digit set. May degenerate to the
/// one-state empty-language automaton.
inline Nfa random_trimmed_partial_dfa(std::mt19937& rng, int k, int max_states,
                                      const std::vector<Digit>& digits) {
  std::uniform_int_distribution<int> state_dist(1, max_states);
  int states = state_dist(rng);
  std::uniform_int_distribution<int> target(0, states - 1);
  std::bernoulli_distribution arc(0.5);
  std::bernoulli_distribution acc(0.5);
  std::vector<Transition> trans;
  for (int s = 0; s < states; ++s)
    for (Digit d : digits)
      if (arc(rng)) trans.push_back({s, d, target(rng)});
  std::vector<int> accepting;
  for (int s = 0; s < states; ++s)
    if (acc(rng)) accepting.push_back(s);
  return trim(Nfa(k, states, 0, std::move(accepting), std::move(trans)));
}

/// All words over `digits` of length <= max_len satisfying `pred`.
inline std::set<Word> words_matching(const std::vector<Digit>& digits, int max_len,
                                     const std::function<bool(const Word&)>& pred) {
  std::set<Word> out;
  Word w;
  auto go = [&](auto&& self) -> void {
    if (pred(w)) out.insert(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (Digit d : digits) {
      w.push_back(d);
      self(self);
      w.pop_back();
    }
  };
  go(go);
  return out;
}

/// Pairwise distinguishability of all states of a complete DFA, by table
/// filling. Minimal DFAs must return true.
inline bool all_states_distinguishable(const Nfa& dfa) {
  const int n = dfa.state_count();
  auto succ = [&](int s, Digit d) {
    for (const Transition& t : dfa.from(s))
      if (t.digit == d) return t.dst;
    return -1;
  };
  std::vector<std::vector<bool>> marked(n, std::vector<bool>(n, false));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (dfa.is_accepting(p) != dfa.is_accepting(q)) marked[p][q] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (marked[p][q]) continue;
        for (Digit d = 0; d < dfa.k(); ++d)
          if (marked[succ(p, d)][succ(q, d)]) {
            marked[p][q] = marked[q][p] = true;
            changed = true;
            break;
          }
      }
  }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (!marked[p][q]) return false;
  return true;
}

/// Checks that the sum automaton of witness_a(k,m) and witness_b(k,n)
/// contains every transition used in the lower-bound argument, and that no
/// digit-5 or digit-6 transition leaves an A-only or B-only state.
/// Returns human-readable violations; empty means the audit passed.
inline std::vector<std::string> audit_sum_of_witnesses(int k, int m, int n) {
  SumNfa sum = build_sum_nfa(witness_a(k, m), witness_b(k, n));
  std::vector<std::string> bad;
  auto need = [&](const SumState& src, Digit d, const SumState& dst) {
    int s = sum.state_of(src);
    int t = sum.state_of(dst);
    if (s < 0 || t < 0 || !sum.nfa.has_transition(s, d, t))
      bad.push_back(src.name() + " --" + std::to_string(d) + "--> " + dst.name() +
                    " missing");
  };
  using S = SumState;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      need(S::pair(i, j, 0), 5, S::pair(i, j, 0));
      need(S::pair(i, j, 0), 3, S::pair(i, (j + 1) % n, 0));
      need(S::pair(i, j, 0), 4, S::pair((i + 1) % m, j, 0));
      need(S::pair(i, j, 0), k - 2, S::pair(i, (j + 1) % n, 1));
      need(S::pair(i, j, 1), 6, S::pair(i, j, 0));
    }
  }
  for (int j = 0; j < n; ++j) {
    need(S::pair(m - 1, j, 0), 3, S::only_b(j, 0));
    need(S::pair(m - 1, j, 1), 0, S::only_b((j + 1) % n, 1));
    need(S::only_b(j, 1), 0, S::only_b((j + 1) % n, 1));
    need(S::only_b(j, 1), 4, S::only_b(j, 0));
    need(S::only_b(j, 1), 2, S::only_b((j + 1) % n, 0));
    need(S::only_b(j, 0), 3, S::only_b(j, 0));
    need(S::only_b(j, 0), 1, S::only_b((j + 1) % n, 0));
    need(S::only_b(j, 0), k - 1, S::only_b((j + 1) % n, 0));
  }
  for (int i = 0; i < m; ++i) {
    need(S::pair(i, n - 1, 1), 0, S::only_a(i, 1));
    need(S::only_a(i, 1), 0, S::only_a(i, 1));
    need(S::only_a(i, 1), 3, S::only_a(i, 0));
    need(S::only_a(i, 1), 2, S::only_a((i + 1) % m, 0));
    need(S::only_a(i, 0), 2, S::only_a(i, 0));
    need(S::only_a(i, 0), k - 1, S::only_a(i, 0));
    need(S::only_a(i, 0), 1, S::only_a((i + 1) % m, 0));
  }
  need(S::only_a(m - 1, 1), 1, S::accept());

  for (const Transition& t : sum.nfa.transitions()) {
    SumState::Kind kind = sum.roles[t.src].kind;
    if ((kind == SumState::Kind::OnlyA || kind == SumState::Kind::OnlyB) &&
        (t.digit == 5 || t.digit == 6))
      bad.push_back(sum.roles[t.src].name() + " has a transition on digit " +
                    std::to_string(t.digit));
  }
  return bad;
}

}  // namespace posadd::testutil
