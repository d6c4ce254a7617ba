#pragma once

#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace posadd {

/// Thrown when an operation is handed input that violates its contract
/// (digit out of range, mismatched bases, malformed files, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A digit in base k, 0 <= value < k.
using Digit = int;

/// A number written least-significant-digit first. The empty word denotes 0.
using Word = std::vector<Digit>;

struct Transition {
  int src;
  Digit digit;
  int dst;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// A nondeterministic finite automaton over the digit alphabet {0, ..., k-1}.
///
/// States are dense indices 0..state_count-1. Transitions are kept sorted and
/// deduplicated; per-state display labels are optional and purely diagnostic.
/// Instances are immutable: every operation below is a pure function.
class Nfa {
 public:
  Nfa(int k, int state_count, int initial, std::vector<int> accepting,
      std::vector<Transition> transitions, std::vector<std::string> labels = {});

  int k() const { return k_; }
  int state_count() const { return state_count_; }
  int initial() const { return initial_; }
  const std::vector<int>& accepting() const { return accepting_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_accepting(int state) const;
  bool has_transition(int src, Digit digit, int dst) const;

  /// At most one outgoing transition per (state, digit).
  bool is_partial_dfa() const;
  /// Exactly one outgoing transition per (state, digit).
  bool is_complete_dfa() const;

  /// Transitions leaving `state`, sorted by (digit, dst).
  std::span<const Transition> from(int state) const;

  /// Subset step: all states reachable from `states` by one `digit` move.
  /// `states` must be sorted; the result is sorted and duplicate-free.
  std::vector<int> step(const std::vector<int>& states, Digit digit) const;

 private:
  int k_;
  int state_count_;
  int initial_;
  std::vector<int> accepting_;
  std::vector<Transition> transitions_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> row_;  // CSR offsets into transitions_, per source state
};

/// Membership: does some run of `nfa` on `w` end in an accepting state?
bool accepts(const Nfa& nfa, const Word& w);

/// All accepted words of length <= max_len, by lazy subset exploration of the
/// prefix tree (dead prefixes are pruned, subset successors are cached).
std::set<Word> enumerate_accepted(const Nfa& nfa, int max_len);

/// Language reversal. Adds a fresh initial state only when the accepting set
/// is not a singleton, so the result has at most state_count + 1 states.
Nfa reverse(const Nfa& nfa);

/// Product automaton for the intersection; state count is the full product
/// (no trimming).
Nfa intersect(const Nfa& a, const Nfa& b);

/// Same states, transitions filtered to the given labels:
/// L(result) = L(nfa) restricted to words over `digits`.
Nfa restrict_alphabet(const Nfa& nfa, const std::set<Digit>& digits);

/// Subset construction. The result is a complete DFA; the dead state (empty
/// subset) is materialized only when some reachable subset needs it.
Nfa determinize(const Nfa& nfa);

/// Minimal complete DFA equivalent to `dfa` (which must be a complete DFA):
/// unreachable states removed, no two remaining states equivalent.
Nfa minimize(const Nfa& dfa);

/// Language equality, decided as isomorphism of minimized determinizations.
bool equivalent(const Nfa& a, const Nfa& b);

/// Drops states that are unreachable or cannot reach an accepting state.
/// If nothing remains, yields the 1-state automaton of the empty language.
Nfa trim(const Nfa& nfa);

bool is_empty(const Nfa& nfa);

/// True iff no accepted word ends with digit 0. Words are LSD-first, so a
/// trailing 0 is a leading zero of the written number; languages passing this
/// check contain only canonical notations.
bool is_canonical_language(const Nfa& nfa);

/// Shortest accepted word ending with digit 0, if any. Used to report
/// canonicity violations by name.
std::optional<Word> find_word_ending_in_zero(const Nfa& nfa);

}  // namespace posadd
