#include "posadd/sum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace posadd {

std::string SumState::name() const {
  switch (kind) {
    case Kind::Pair:
      return "(" + std::to_string(p) + "," + std::to_string(q) + "," +
             std::to_string(carry) + ")";
    case Kind::OnlyA:
      return "(A," + std::to_string(p) + "," + std::to_string(carry) + ")";
    case Kind::OnlyB:
      return "(B," + std::to_string(q) + "," + std::to_string(carry) + ")";
    case Kind::Accept:
      return "q_acc";
    case Kind::MergedCarry:
      return "q_01";
  }
  return {};
}

SumCensus SumNfa::census() const {
  SumCensus c;
  for (const SumState& s : roles) {
    switch (s.kind) {
      case SumState::Kind::Pair: ++c.pair; break;
      case SumState::Kind::OnlyA: ++c.only_a; break;
      case SumState::Kind::OnlyB: ++c.only_b; break;
      case SumState::Kind::Accept: ++c.accept; break;
      case SumState::Kind::MergedCarry: ++c.merged_carry; break;
    }
  }
  return c;
}

int SumNfa::state_of(const SumState& role) const {
  for (std::size_t i = 0; i < roles.size(); ++i)
    if (roles[i] == role) return static_cast<int>(i);
  return -1;
}

SumNfa build_sum_nfa(const Nfa& a, const Nfa& b) {
  if (a.k() != b.k())
    throw InputError("sum construction requires operands over the same base (" +
                     std::to_string(a.k()) + " vs " + std::to_string(b.k()) + ")");
  const int k = a.k();
  const int m = a.state_count();
  const int n = b.state_count();

  // Fixed layout: the 2mn pair states, then 2m A-only, 2n B-only, then the sink.
  auto pair_id = [n](int p, int q, int c) { return ((p * n) + q) * 2 + c; };
  auto only_a_id = [m, n](int p, int c) { return 2 * m * n + 2 * p + c; };
  auto only_b_id = [m, n](int q, int c) { return 2 * m * n + 2 * m + 2 * q + c; };
  const int accept_id = 2 * m * n + 2 * m + 2 * n;
  const int total = accept_id + 1;

  std::vector<SumState> roles(total);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < n; ++q)
      for (int c = 0; c < 2; ++c) roles[pair_id(p, q, c)] = SumState::pair(p, q, c);
  for (int p = 0; p < m; ++p)
    for (int c = 0; c < 2; ++c) roles[only_a_id(p, c)] = SumState::only_a(p, c);
  for (int q = 0; q < n; ++q)
    for (int c = 0; c < 2; ++c) roles[only_b_id(q, c)] = SumState::only_b(q, c);
  roles[accept_id] = SumState::accept();

  std::vector<Transition> trans;

  // Both operands running: emit a+b+c and track the new carry.
  for (const Transition& ta : a.transitions()) {
    for (const Transition& tb : b.transitions()) {
      for (int c = 0; c < 2; ++c) {
        int s = ta.digit + tb.digit + c;
        trans.push_back({pair_id(ta.src, tb.src, c), s % k,
                         pair_id(ta.dst, tb.dst, s / k)});
      }
    }
  }

  // Operand B may stop in any accepting state; A continues alone, emitting a+c.
  for (const Transition& ta : a.transitions()) {
    for (int c = 0; c < 2; ++c) {
      int s = ta.digit + c;
      for (int q : b.accepting())
        trans.push_back({pair_id(ta.src, q, c), s % k, only_a_id(ta.dst, s / k)});
      trans.push_back({only_a_id(ta.src, c), s % k, only_a_id(ta.dst, s / k)});
    }
  }

  // Symmetrically, operand A may stop and B continues alone.
  for (const Transition& tb : b.transitions()) {
    for (int c = 0; c < 2; ++c) {
      int s = tb.digit + c;
      for (int p : a.accepting())
        trans.push_back({pair_id(p, tb.src, c), s % k, only_b_id(tb.dst, s / k)});
      trans.push_back({only_b_id(tb.src, c), s % k, only_b_id(tb.dst, s / k)});
    }
  }

  // A pending carry after both operands finished is emitted as a final digit 1.
  for (int p : a.accepting()) {
    for (int q : b.accepting()) trans.push_back({pair_id(p, q, 1), 1, accept_id});
    trans.push_back({only_a_id(p, 1), 1, accept_id});
  }
  for (int q : b.accepting()) trans.push_back({only_b_id(q, 1), 1, accept_id});

  std::vector<int> accepting{accept_id};
  for (int p : a.accepting())
    for (int q : b.accepting()) accepting.push_back(pair_id(p, q, 0));
  for (int p : a.accepting()) accepting.push_back(only_a_id(p, 0));
  for (int q : b.accepting()) accepting.push_back(only_b_id(q, 0));

  std::vector<std::string> labels;
  labels.reserve(roles.size());
  for (const SumState& r : roles) labels.push_back(r.name());

  Nfa nfa(k, total, pair_id(a.initial(), b.initial(), 0), std::move(accepting),
          std::move(trans), std::move(labels));
  return {std::move(nfa), std::move(roles)};
}

namespace {

std::vector<bool> reachable(int state_count, int initial,
                            const std::vector<Transition>& trans) {
  std::vector<std::vector<int>> adj(state_count);
  for (const Transition& t : trans) adj[t.src].push_back(t.dst);
  std::vector<bool> seen(state_count, false);
  std::deque<int> queue{initial};
  seen[initial] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int d : adj[s])
      if (!seen[d]) {
        seen[d] = true;
        queue.push_back(d);
      }
  }
  return seen;
}

}  // namespace

SumNfa build_sum_one_state(const Nfa& a, const Nfa& b) {
  if (a.state_count() != 1 || b.state_count() != 1)
    throw InputError("one-state sum construction requires single-state operands");
  SumNfa full = build_sum_nfa(a, b);

  // Layout of the 7-state construction for m = n = 1.
  const int carry_a = full.state_of(SumState::only_a(0, 1));
  const int carry_b = full.state_of(SumState::only_b(0, 1));

  std::vector<Transition> trans = full.nfa.transitions();
  std::vector<SumState> roles = full.roles;

  std::vector<bool> reach =
      reachable(full.nfa.state_count(), full.nfa.initial(), trans);
  // The two carry states may be merged (in- and out-edges united) only when
  // both are reachable; an unreachable one is just dropped below.
  if (reach[carry_a] && reach[carry_b]) {
    for (Transition& t : trans) {
      if (t.src == carry_b) t.src = carry_a;
      if (t.dst == carry_b) t.dst = carry_a;
    }
    roles[carry_a] = SumState::merged_carry();
    reach = reachable(full.nfa.state_count(), full.nfa.initial(), trans);
  }

  std::vector<int> renum(full.nfa.state_count(), -1);
  int kept = 0;
  for (int s = 0; s < full.nfa.state_count(); ++s)
    if (reach[s]) renum[s] = kept++;

  std::vector<Transition> new_trans;
  for (const Transition& t : trans)
    if (renum[t.src] >= 0 && renum[t.dst] >= 0)
      new_trans.push_back({renum[t.src], t.digit, renum[t.dst]});
  std::vector<int> new_accepting;
  for (int f : full.nfa.accepting())
    if (renum[f] >= 0) new_accepting.push_back(renum[f]);
  std::vector<SumState> new_roles(kept);
  std::vector<std::string> labels(kept);
  for (int s = 0; s < full.nfa.state_count(); ++s)
    if (renum[s] >= 0) {
      new_roles[renum[s]] = roles[s];
      labels[renum[s]] = roles[s].name();
    }

  Nfa nfa(a.k(), kept, renum[full.nfa.initial()], std::move(new_accepting),
          std::move(new_trans), std::move(labels));
  return {std::move(nfa), std::move(new_roles)};
}

Nfa build_sum_msd(const Nfa& a_msd, const Nfa& b_msd) {
  return reverse(build_sum_nfa(reverse(a_msd), reverse(b_msd)).nfa);
}

long long bound_states(int m, int n) {
  if (m < 1 || n < 1) throw InputError("operand state counts must be positive");
  if (m == 1 && n == 1) return 6;
  return 2LL * m * n + 2 * m + 2 * n + 1;
}

}  // namespace posadd
