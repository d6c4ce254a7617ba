#include "posadd/nfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace posadd {

namespace {

void check_state(int state, int state_count, const char* what) {
  if (state < 0 || state >= state_count)
    throw InputError(std::string(what) + " index " + std::to_string(state) +
                     " out of range [0, " + std::to_string(state_count) + ")");
}

std::vector<bool> reachable_from_initial(const Nfa& nfa) {
  std::vector<bool> seen(nfa.state_count(), false);
  std::deque<int> queue{nfa.initial()};
  seen[nfa.initial()] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (const Transition& t : nfa.from(s)) {
      if (!seen[t.dst]) {
        seen[t.dst] = true;
        queue.push_back(t.dst);
      }
    }
  }
  return seen;
}

std::vector<bool> coreachable_to_accepting(const Nfa& nfa) {
  std::vector<std::vector<int>> rev(nfa.state_count());
  for (const Transition& t : nfa.transitions()) rev[t.dst].push_back(t.src);
  std::vector<bool> seen(nfa.state_count(), false);
  std::deque<int> queue;
  for (int f : nfa.accepting()) {
    seen[f] = true;
    queue.push_back(f);
  }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int p : rev[s]) {
      if (!seen[p]) {
        seen[p] = true;
        queue.push_back(p);
      }
    }
  }
  return seen;
}

/// Automaton of all words whose last digit is 0 (i.e. written with a leading
/// zero): state 0 loops on every digit and moves to the accepting state 1 on 0.
Nfa ends_with_zero_automaton(int k) {
  std::vector<Transition> trans;
  for (Digit d = 0; d < k; ++d) trans.push_back({0, d, 0});
  trans.push_back({0, 0, 1});
  return Nfa(k, 2, 0, {1}, std::move(trans));
}

}  // namespace

Nfa::Nfa(int k, int state_count, int initial, std::vector<int> accepting,
         std::vector<Transition> transitions, std::vector<std::string> labels)
    : k_(k),
      state_count_(state_count),
      initial_(initial),
      accepting_(std::move(accepting)),
      transitions_(std::move(transitions)),
      labels_(std::move(labels)) {
  if (k_ < 2) throw InputError("base must be at least 2, got " + std::to_string(k_));
  if (state_count_ < 1)
    throw InputError("automaton needs at least one state, got " + std::to_string(state_count_));
  check_state(initial_, state_count_, "initial state");
  for (int f : accepting_) check_state(f, state_count_, "accepting state");
  std::sort(accepting_.begin(), accepting_.end());
  accepting_.erase(std::unique(accepting_.begin(), accepting_.end()), accepting_.end());
  for (const Transition& t : transitions_) {
    check_state(t.src, state_count_, "transition source");
    check_state(t.dst, state_count_, "transition target");
    if (t.digit < 0 || t.digit >= k_)
      throw InputError("transition digit " + std::to_string(t.digit) +
                       " out of range for base " + std::to_string(k_));
  }
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
  if (!labels_.empty() && static_cast<int>(labels_.size()) != state_count_)
    throw InputError("label list must be empty or have one entry per state");

  row_.assign(static_cast<std::size_t>(state_count_) + 1, 0);
  for (const Transition& t : transitions_) ++row_[static_cast<std::size_t>(t.src) + 1];
  for (std::size_t i = 1; i < row_.size(); ++i) row_[i] += row_[i - 1];
}

bool Nfa::is_accepting(int state) const {
  return std::binary_search(accepting_.begin(), accepting_.end(), state);
}

bool Nfa::has_transition(int src, Digit digit, int dst) const {
  return std::binary_search(transitions_.begin(), transitions_.end(),
                            Transition{src, digit, dst});
}

bool Nfa::is_partial_dfa() const {
  for (std::size_t i = 1; i < transitions_.size(); ++i) {
    if (transitions_[i].src == transitions_[i - 1].src &&
        transitions_[i].digit == transitions_[i - 1].digit)
      return false;
  }
  return true;
}

bool Nfa::is_complete_dfa() const {
  if (!is_partial_dfa()) return false;
  for (int s = 0; s < state_count_; ++s)
    if (row_[static_cast<std::size_t>(s) + 1] - row_[s] != static_cast<std::size_t>(k_))
      return false;
  return true;
}

std::span<const Transition> Nfa::from(int state) const {
  check_state(state, state_count_, "state");
  return {transitions_.data() + row_[state], transitions_.data() + row_[state + 1]};
}

std::vector<int> Nfa::step(const std::vector<int>& states, Digit digit) const {
  std::vector<int> out;
  for (int s : states) {
    auto range = from(s);
    auto lo = std::lower_bound(range.begin(), range.end(), Transition{s, digit, 0});
    for (auto it = lo; it != range.end() && it->digit == digit; ++it) out.push_back(it->dst);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool accepts(const Nfa& nfa, const Word& w) {
  for (Digit d : w) {
    if (d < 0 || d >= nfa.k())
      throw InputError("word digit " + std::to_string(d) + " out of range for base " +
                       std::to_string(nfa.k()));
  }
  std::vector<int> current{nfa.initial()};
  for (Digit d : w) {
    if (current.empty()) return false;
    current = nfa.step(current, d);
  }
  return std::any_of(current.begin(), current.end(),
                     [&](int s) { return nfa.is_accepting(s); });
}

std::set<Word> enumerate_accepted(const Nfa& nfa, int max_len) {
  if (max_len < 0) throw InputError("max_len must be non-negative");
  std::set<Word> out;
  // successor cache: subset -> live (digit, subset) moves
  std::map<std::vector<int>, std::vector<std::pair<Digit, std::vector<int>>>> succ;

  auto successors = [&](const std::vector<int>& subset)
      -> const std::vector<std::pair<Digit, std::vector<int>>>& {
    auto it = succ.find(subset);
    if (it != succ.end()) return it->second;
    std::vector<Digit> digits;
    for (int s : subset)
      for (const Transition& t : nfa.from(s)) digits.push_back(t.digit);
    std::sort(digits.begin(), digits.end());
    digits.erase(std::unique(digits.begin(), digits.end()), digits.end());
    std::vector<std::pair<Digit, std::vector<int>>> moves;
    for (Digit d : digits) moves.emplace_back(d, nfa.step(subset, d));
    return succ.emplace(subset, std::move(moves)).first->second;
  };

  Word word;
  auto dfs = [&](auto&& self, const std::vector<int>& subset, int depth) -> void {
    if (std::any_of(subset.begin(), subset.end(),
                    [&](int s) { return nfa.is_accepting(s); }))
      out.insert(word);
    if (depth == max_len) return;
    for (const auto& [digit, next] : successors(subset)) {
      word.push_back(digit);
      self(self, next, depth + 1);
      word.pop_back();
    }
  };
  dfs(dfs, {nfa.initial()}, 0);
  return out;
}

Nfa reverse(const Nfa& nfa) {
  std::vector<Transition> flipped;
  flipped.reserve(nfa.transitions().size());
  for (const Transition& t : nfa.transitions()) flipped.push_back({t.dst, t.digit, t.src});

  const std::vector<int>& acc = nfa.accepting();
  if (acc.size() == 1)
    return Nfa(nfa.k(), nfa.state_count(), acc.front(), {nfa.initial()}, std::move(flipped));

  // Several (or zero) accepting states: a fresh initial state unions their
  // outgoing moves in the flipped graph.
  int fresh = nfa.state_count();
  for (const Transition& t : nfa.transitions())
    if (nfa.is_accepting(t.dst)) flipped.push_back({fresh, t.digit, t.src});
  std::vector<int> new_accepting{nfa.initial()};
  if (nfa.is_accepting(nfa.initial())) new_accepting.push_back(fresh);
  return Nfa(nfa.k(), nfa.state_count() + 1, fresh, std::move(new_accepting),
             std::move(flipped));
}

Nfa intersect(const Nfa& a, const Nfa& b) {
  if (a.k() != b.k())
    throw InputError("cannot intersect automata over different bases (" +
                     std::to_string(a.k()) + " vs " + std::to_string(b.k()) + ")");
  const int nb = b.state_count();
  auto index = [nb](int p, int q) { return p * nb + q; };

  std::vector<Transition> trans;
  for (const Transition& ta : a.transitions())
    for (const Transition& tb : b.transitions())
      if (ta.digit == tb.digit)
        trans.push_back({index(ta.src, tb.src), ta.digit, index(ta.dst, tb.dst)});

  std::vector<int> accepting;
  for (int p : a.accepting())
    for (int q : b.accepting()) accepting.push_back(index(p, q));

  return Nfa(a.k(), a.state_count() * nb, index(a.initial(), b.initial()),
             std::move(accepting), std::move(trans));
}

Nfa restrict_alphabet(const Nfa& nfa, const std::set<Digit>& digits) {
  for (Digit d : digits)
    if (d < 0 || d >= nfa.k())
      throw InputError("digit " + std::to_string(d) + " out of range for base " +
                       std::to_string(nfa.k()));
  std::vector<Transition> trans;
  for (const Transition& t : nfa.transitions())
    if (digits.contains(t.digit)) trans.push_back(t);
  return Nfa(nfa.k(), nfa.state_count(), nfa.initial(), nfa.accepting(), std::move(trans),
             nfa.labels());
}

Nfa determinize(const Nfa& nfa) {
  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> subset) {
    auto [it, fresh] = id.emplace(std::move(subset), static_cast<int>(subsets.size()));
    if (fresh) subsets.push_back(it->first);
    return it->second;
  };

  std::vector<Transition> trans;
  std::vector<int> accepting;
  int start = intern({nfa.initial()});
  for (int s = start; s < static_cast<int>(subsets.size()); ++s) {
    std::vector<int> subset = subsets[s];  // copy: subsets may reallocate
    if (std::any_of(subset.begin(), subset.end(),
                    [&](int q) { return nfa.is_accepting(q); }))
      accepting.push_back(s);
    for (Digit d = 0; d < nfa.k(); ++d)
      trans.push_back({s, d, intern(nfa.step(subset, d))});
  }
  return Nfa(nfa.k(), static_cast<int>(subsets.size()), start, std::move(accepting),
             std::move(trans));
}

namespace {

/// Unique successor in a complete DFA.
int dfa_successor(const Nfa& dfa, int state, Digit digit) {
  auto range = dfa.from(state);
  auto it = std::lower_bound(range.begin(), range.end(), Transition{state, digit, 0});
  return it->dst;
}

}  // namespace

Nfa minimize(const Nfa& dfa) {
  if (!dfa.is_complete_dfa()) throw InputError("minimize requires a complete DFA");

  // Keep reachable states only, preserving index order.
  std::vector<bool> reach = reachable_from_initial(dfa);
  std::vector<int> renum(dfa.state_count(), -1);
  std::vector<int> old_of;
  for (int s = 0; s < dfa.state_count(); ++s)
    if (reach[s]) {
      renum[s] = static_cast<int>(old_of.size());
      old_of.push_back(s);
    }
  const int n = static_cast<int>(old_of.size());

  // Moore refinement over the reachable part.
  std::vector<int> cls(n);
  for (int s = 0; s < n; ++s) cls[s] = dfa.is_accepting(old_of[s]) ? 1 : 0;
  int class_count = 2;
  for (;;) {
    std::map<std::vector<int>, int> sig_id;
    std::vector<int> next(n);
    for (int s = 0; s < n; ++s) {
      std::vector<int> sig{cls[s]};
      for (Digit d = 0; d < dfa.k(); ++d)
        sig.push_back(cls[renum[dfa_successor(dfa, old_of[s], d)]]);
      auto [it, fresh] = sig_id.emplace(std::move(sig), static_cast<int>(sig_id.size()));
      (void)fresh;
      next[s] = it->second;
    }
    int next_count = static_cast<int>(sig_id.size());
    if (next_count == class_count) {
      cls = std::move(next);
      break;
    }
    cls = std::move(next);
    class_count = next_count;
  }

  // Renumber classes by first occurrence so the result is deterministic.
  std::vector<int> order(class_count, -1);
  int assigned = 0;
  for (int s = 0; s < n; ++s)
    if (order[cls[s]] < 0) order[cls[s]] = assigned++;
  for (int s = 0; s < n; ++s) cls[s] = order[cls[s]];

  std::vector<Transition> trans;
  std::vector<int> accepting;
  std::vector<bool> done(assigned, false);
  for (int s = 0; s < n; ++s) {
    if (done[cls[s]]) continue;
    done[cls[s]] = true;
    if (dfa.is_accepting(old_of[s])) accepting.push_back(cls[s]);
    for (Digit d = 0; d < dfa.k(); ++d)
      trans.push_back({cls[s], d, cls[renum[dfa_successor(dfa, old_of[s], d)]]});
  }
  return Nfa(dfa.k(), assigned, cls[renum[dfa.initial()]], std::move(accepting),
             std::move(trans));
}

bool equivalent(const Nfa& a, const Nfa& b) {
  if (a.k() != b.k())
    throw InputError("cannot compare automata over different bases (" +
                     std::to_string(a.k()) + " vs " + std::to_string(b.k()) + ")");
  Nfa da = minimize(determinize(a));
  Nfa db = minimize(determinize(b));
  if (da.state_count() != db.state_count()) return false;
  if (da.accepting().size() != db.accepting().size()) return false;

  // Both are minimal complete DFAs, so language equality is isomorphism,
  // checked by walking the two automata in lockstep.
  std::vector<int> map_ab(da.state_count(), -1);
  std::deque<std::pair<int, int>> queue{{da.initial(), db.initial()}};
  map_ab[da.initial()] = db.initial();
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    if (da.is_accepting(p) != db.is_accepting(q)) return false;
    for (Digit d = 0; d < da.k(); ++d) {
      int ps = dfa_successor(da, p, d);
      int qs = dfa_successor(db, q, d);
      if (map_ab[ps] < 0) {
        map_ab[ps] = qs;
        queue.emplace_back(ps, qs);
      } else if (map_ab[ps] != qs) {
        return false;
      }
    }
  }
  return true;
}

Nfa trim(const Nfa& nfa) {
  std::vector<bool> reach = reachable_from_initial(nfa);
  std::vector<bool> coreach = coreachable_to_accepting(nfa);
  std::vector<int> renum(nfa.state_count(), -1);
  std::vector<int> kept;
  for (int s = 0; s < nfa.state_count(); ++s)
    if (reach[s] && coreach[s]) {
      renum[s] = static_cast<int>(kept.size());
      kept.push_back(s);
    }
  if (renum[nfa.initial()] < 0) return Nfa(nfa.k(), 1, 0, {}, {});

  std::vector<Transition> trans;
  for (const Transition& t : nfa.transitions())
    if (renum[t.src] >= 0 && renum[t.dst] >= 0)
      trans.push_back({renum[t.src], t.digit, renum[t.dst]});
  std::vector<int> accepting;
  for (int f : nfa.accepting())
    if (renum[f] >= 0) accepting.push_back(renum[f]);
  std::vector<std::string> labels;
  if (!nfa.labels().empty())
    for (int s : kept) labels.push_back(nfa.labels()[s]);
  return Nfa(nfa.k(), static_cast<int>(kept.size()), renum[nfa.initial()],
             std::move(accepting), std::move(trans), std::move(labels));
}

bool is_empty(const Nfa& nfa) {
  std::vector<bool> reach = reachable_from_initial(nfa);
  return std::none_of(nfa.accepting().begin(), nfa.accepting().end(),
                      [&](int f) { return reach[f]; });
}

bool is_canonical_language(const Nfa& nfa) {
  return is_empty(intersect(nfa, ends_with_zero_automaton(nfa.k())));
}

std::optional<Word> find_word_ending_in_zero(const Nfa& nfa) {
  Nfa product = intersect(nfa, ends_with_zero_automaton(nfa.k()));
  // Shortest accepted word = shortest path to an accepting state.
  std::vector<std::pair<int, Digit>> parent(product.state_count(), {-1, -1});
  std::vector<bool> seen(product.state_count(), false);
  std::deque<int> queue{product.initial()};
  seen[product.initial()] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    if (product.is_accepting(s)) {
      Word w;
      for (int cur = s; parent[cur].first >= 0; cur = parent[cur].first)
        w.push_back(parent[cur].second);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (const Transition& t : product.from(s)) {
      if (!seen[t.dst]) {
        seen[t.dst] = true;
        parent[t.dst] = {s, t.digit};
        queue.push_back(t.dst);
      }
    }
  }
  return std::nullopt;
}

}  // namespace posadd
