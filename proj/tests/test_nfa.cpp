#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "posadd/nfa.hpp"
#include "posadd/witnesses.hpp"

using namespace posadd;
using namespace posadd::testutil;

namespace {

std::set<Word> reversed_words(const std::set<Word>& words) {
  std::set<Word> out;
  for (Word w : words) {
    std::reverse(w.begin(), w.end());
    out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("construction validates invariants") {
  CHECK_THROWS_AS(Nfa(1, 1, 0, {}, {}), InputError);
  CHECK_THROWS_AS(Nfa(9, 0, 0, {}, {}), InputError);
  CHECK_THROWS_AS(Nfa(9, 2, 2, {}, {}), InputError);
  CHECK_THROWS_AS(Nfa(9, 2, 0, {2}, {}), InputError);
  CHECK_THROWS_AS(Nfa(9, 2, 0, {}, {{0, 9, 1}}), InputError);
  CHECK_THROWS_AS(Nfa(9, 2, 0, {}, {}, {"only one label"}), InputError);

  // duplicate triples are normalized away
  Nfa n(9, 2, 0, {1, 1}, {{0, 1, 1}, {0, 1, 1}});
  CHECK(n.transitions().size() == 1);
  CHECK(n.accepting().size() == 1);
}

TEST_CASE("accepts") {
  Nfa a1 = witness_a(9, 1);
  CHECK(accepts(a1, {}));  // single accepting initial state

  Nfa a2 = witness_a(9, 2);
  CHECK_FALSE(accepts(a2, {0}));  // no transition on digit 0
  CHECK(accepts(a2, {1}));
  CHECK_FALSE(accepts(a2, {1, 1}));
  CHECK(accepts(a2, {2, 1, 8}));
  CHECK_THROWS_AS(accepts(a2, {9}), InputError);
  CHECK_THROWS_AS(accepts(a2, {-1}), InputError);
}

TEST_CASE("enumerate_accepted") {
  CHECK(enumerate_accepted(one_state_witness_a(9), 1) ==
        std::set<Word>{{}, {2}, {8}});
  CHECK(enumerate_accepted(empty_language_automaton(9), 5).empty());
  CHECK(enumerate_accepted(witness_a(9, 2), 1) == std::set<Word>{{1}});

  // agrees with a per-word membership scan
  Nfa a2 = witness_a(9, 2);
  std::set<Word> scanned = words_matching(
      {0, 1, 2, 3, 4, 5, 6, 7, 8}, 3, [&](const Word& w) { return accepts(a2, w); });
  CHECK(enumerate_accepted(a2, 3) == scanned);

  CHECK_THROWS_AS(enumerate_accepted(a2, -1), InputError);
}

TEST_CASE("reverse basics") {
  Nfa a2 = witness_a(9, 2);
  Nfa rev = reverse(a2);
  CHECK(rev.state_count() == 2);  // single accepting state, no fresh state
  CHECK(accepts(rev, {2, 1}));    // [1,2] is accepted by a2

  // zero accepting states: reversal stays empty
  Nfa none = reverse(empty_language_automaton(9));
  CHECK(is_empty(none));
  CHECK(none.state_count() <= 2);
}

TEST_CASE("reverse properties on random automata") {
  std::mt19937 rng(7001);
  for (int round = 0; round < 40; ++round) {
    Nfa n = random_nfa(rng, 6, 4, {0, 1, 2, 5});
    Nfa rev = reverse(n);
    CHECK(rev.state_count() <= n.state_count() + 1);
    CHECK(enumerate_accepted(rev, 5) == reversed_words(enumerate_accepted(n, 5)));
    CHECK(equivalent(reverse(rev), n));
  }
}

TEST_CASE("intersect") {
  Nfa a2 = witness_a(9, 2);
  Nfa b2 = witness_b(9, 2);
  Nfa both = intersect(a2, b2);
  CHECK(both.state_count() == 4);  // full product, no trimming
  std::set<Word> expected;
  std::ranges::set_intersection(enumerate_accepted(a2, 5), enumerate_accepted(b2, 5),
                                std::inserter(expected, expected.end()));
  CHECK(enumerate_accepted(both, 5) == expected);

  CHECK(enumerate_accepted(intersect(a2, a2), 5) == enumerate_accepted(a2, 5));
  CHECK(is_empty(intersect(a2, empty_language_automaton(9))));
  CHECK_THROWS_AS(intersect(a2, witness_a(10, 2)), InputError);
}

TEST_CASE("restrict_alphabet") {
  Nfa b2 = witness_b(9, 2);
  CHECK(restrict_alphabet(b2, {0, 1, 2, 3, 4, 5, 6, 7, 8}).transitions() ==
        b2.transitions());
  std::set<Word> none = enumerate_accepted(restrict_alphabet(b2, {}), 5);
  for (const Word& w : none) CHECK(w.empty());

  Nfa only3 = restrict_alphabet(b2, {3});
  std::set<Word> expected;
  for (const Word& w : enumerate_accepted(b2, 5))
    if (std::ranges::all_of(w, [](Digit d) { return d == 3; })) expected.insert(w);
  CHECK(enumerate_accepted(only3, 5) == expected);

  CHECK_THROWS_AS(restrict_alphabet(b2, {9}), InputError);
}

TEST_CASE("determinize") {
  Nfa det_b2 = determinize(witness_b(9, 2));
  CHECK(det_b2.state_count() == 3);  // two live subsets plus the dead state
  CHECK(det_b2.is_complete_dfa());

  // complete DFA in, same reachable size out
  CHECK(determinize(det_b2).state_count() == 3);

  std::mt19937 rng(7002);
  for (int round = 0; round < 30; ++round) {
    Nfa n = random_nfa(rng, 5, 4, {0, 1, 4});
    Nfa d = determinize(n);
    CHECK(d.is_complete_dfa());
    CHECK(enumerate_accepted(d, 5) == enumerate_accepted(n, 5));
  }
}

TEST_CASE("minimize") {
  // fixpoint on an already-minimal DFA
  Nfa det = determinize(witness_b(9, 2));
  Nfa min = minimize(det);
  CHECK(min.state_count() == minimize(min).state_count());

  // two interchangeable accepting sinks collapse
  std::vector<Transition> trans{{0, 0, 1}, {0, 1, 2}, {1, 0, 1}, {1, 1, 1},
                                {2, 0, 2}, {2, 1, 2}};
  Nfa twin_sinks(2, 3, 0, {1, 2}, std::move(trans));
  CHECK(twin_sinks.is_complete_dfa());
  CHECK(minimize(twin_sinks).state_count() == 2);

  CHECK_THROWS_AS(minimize(witness_a(9, 2)), InputError);  // not complete
}

TEST_CASE("minimize: cycle language over a big alphabet") {
  // (2^6)^* over base 9: a mod-6 counter plus a dead state
  Nfa cyc = cycle_automaton(9, 6, 2);
  Nfa min = minimize(determinize(cyc));
  CHECK(min.state_count() == 7);
  CHECK(all_states_distinguishable(min));

  // cross-check the language on digit-2 words up to two full cycles
  for (int len = 0; len <= 13; ++len) {
    Word w(len, 2);
    CHECK(accepts(min, w) == (len % 6 == 0));
  }
  CHECK_FALSE(accepts(min, {2, 2, 2, 2, 2, 1}));
}

TEST_CASE("minimize output has no equivalent state pair") {
  std::mt19937 rng(7003);
  for (int round = 0; round < 30; ++round) {
    Nfa n = random_nfa(rng, 4, 4, {0, 1, 2, 3});
    Nfa min = minimize(determinize(n));
    CHECK(min.is_complete_dfa());
    CHECK(all_states_distinguishable(min));
    CHECK(enumerate_accepted(min, 5) == enumerate_accepted(n, 5));
  }
}

TEST_CASE("equivalent") {
  Nfa a2 = witness_a(9, 2);
  CHECK(equivalent(a2, a2));

  Nfa empty = empty_language_automaton(9);
  Nfa eps_only(9, 1, 0, {0}, {});
  CHECK_FALSE(equivalent(empty, eps_only));
  CHECK_THROWS_AS(equivalent(a2, witness_a(10, 2)), InputError);

  std::mt19937 rng(7004);
  for (int round = 0; round < 25; ++round) {
    Nfa x = random_nfa(rng, 4, 4, {0, 1, 3});
    Nfa y = random_nfa(rng, 4, 4, {0, 1, 3});
    CHECK(equivalent(x, trim(x)));
    CHECK(equivalent(x, reverse(reverse(x))));
    // agreement with exhaustive comparison at length 6
    CHECK(equivalent(x, y) == (enumerate_accepted(x, 6) == enumerate_accepted(y, 6)));
  }
}

TEST_CASE("trim") {
  Nfa a2 = witness_a(9, 2);
  CHECK(trim(a2).state_count() == a2.state_count());

  // isolated state disappears
  Nfa with_island(9, 3, 0, {1}, {{0, 1, 1}, {2, 2, 2}});
  CHECK(trim(with_island).state_count() == 2);

  // nothing useful: one-state rejecting automaton
  Nfa useless(9, 3, 0, {}, {{0, 1, 1}, {1, 2, 2}});
  Nfa trimmed = trim(useless);
  CHECK(trimmed.state_count() == 1);
  CHECK(trimmed.accepting().empty());
  CHECK(is_empty(trimmed));
}

TEST_CASE("is_empty") {
  CHECK(is_empty(empty_language_automaton(9)));
  CHECK_FALSE(is_empty(Nfa(9, 1, 0, {0}, {})));
  CHECK_FALSE(is_empty(witness_a(9, 3)));  // [1,1] reaches state 2
  // accepting state exists but is unreachable
  CHECK(is_empty(Nfa(9, 2, 0, {1}, {})));
}

TEST_CASE("is_canonical_language") {
  CHECK(is_canonical_language(witness_a(9, 2)));  // digit 0 unused
  CHECK_FALSE(is_canonical_language(single_word_automaton(9, {1, 0})));
  CHECK(is_canonical_language(single_word_automaton(9, {0, 1})));

  CHECK(find_word_ending_in_zero(single_word_automaton(9, {1, 0})) == Word{1, 0});
  CHECK_FALSE(find_word_ending_in_zero(witness_a(9, 2)).has_value());
}

TEST_CASE("partial and complete DFA predicates") {
  CHECK(witness_a(9, 3).is_partial_dfa());
  CHECK_FALSE(witness_a(9, 3).is_complete_dfa());
  Nfa forked(9, 2, 0, {1}, {{0, 1, 0}, {0, 1, 1}});
  CHECK_FALSE(forked.is_partial_dfa());
  CHECK(determinize(forked).is_complete_dfa());
}
