#include "posadd/fooling.hpp"

#include <algorithm>

#include "posadd/io.hpp"

namespace posadd {

std::string FoolingVerdict::describe() const {
  switch (kind) {
    case Kind::Certified:
      return "CERTIFIED " + std::to_string(bound);
    case Kind::F1Violation:
      return "F1 VIOLATION pair " + std::to_string(i) + ": " + format_word(word) +
             " not in language";
    case Kind::F2Violation:
      return "F2 VIOLATION pairs " + std::to_string(i) + "," + std::to_string(j) +
             ": cross words " + format_word(cross_ij) + " and " + format_word(cross_ji) +
             " both in language";
    case Kind::DuplicatePair:
      return "DUPLICATE pairs " + std::to_string(i) + "," + std::to_string(j);
  }
  return {};
}

FoolingVerdict verify_fooling(const std::vector<FoolingPair>& pairs, const Nfa& lang) {
  const int n = static_cast<int>(pairs.size());

  // A repeated pair can never satisfy F2, so reject it outright.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pairs[i] == pairs[j])
        return {.kind = FoolingVerdict::Kind::DuplicatePair, .i = i + 1, .j = j + 1};

  auto concat = [](const Word& x, const Word& y) {
    Word w = x;
    w.insert(w.end(), y.begin(), y.end());
    return w;
  };

  for (int i = 0; i < n; ++i) {
    Word w = concat(pairs[i].x, pairs[i].y);
    if (!accepts(lang, w))
      return {.kind = FoolingVerdict::Kind::F1Violation, .i = i + 1, .word = std::move(w)};
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Word ij = concat(pairs[i].x, pairs[j].y);
      Word ji = concat(pairs[j].x, pairs[i].y);
      if (accepts(lang, ij) && accepts(lang, ji))
        return {.kind = FoolingVerdict::Kind::F2Violation,
                .i = i + 1,
                .j = j + 1,
                .cross_ij = std::move(ij),
                .cross_ji = std::move(ji)};
    }
  }
  return {.kind = FoolingVerdict::Kind::Certified, .bound = n};
}

namespace {

Word rep(Digit d, int count) { return Word(static_cast<std::size_t>(count), d); }

Word cat(std::initializer_list<Word> parts) {
  Word w;
  for (const Word& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

}  // namespace

std::vector<FoolingPair> gen_fooling_addition(int k, int m, int n) {
  if (k < 9) throw InputError("addition fooling set requires base k >= 9");
  if (m < 1) throw InputError("addition fooling set requires m >= 1");
  if (n < 2) throw InputError("addition fooling set requires n >= 2");

  std::vector<FoolingPair> pairs;
  pairs.reserve(static_cast<std::size_t>(2 * m * n + 2 * m + 2 * n + 1));

  // Family A: mn pairs meeting again in the pair-state grid.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      pairs.push_back({cat({rep(4, i), rep(3, j)}),
                       cat({{5}, rep(4, m - 1 - i), rep(3, n - 1 - j), {5}})});

  // Family B: mn pairs routed through carry states; j-1 wraps modulo n.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      pairs.push_back({cat({rep(4, i), rep(3, (j - 1 + n) % n), {k - 2}}),
                       cat({{6}, rep(4, m - 1 - i), rep(3, n - 1 - j), {5}})});

  // Family C: 2m pairs pinning the A-side tail states.
  for (int i = 0; i < m; ++i)
    pairs.push_back({cat({rep(4, i), rep(3, n - 2), {k - 2}, {0}}),
                     cat({{3}, rep(1, m - 1 - i), {2}, {2}})});
  for (int i = 0; i < m; ++i)
    pairs.push_back({cat({rep(4, i), rep(3, n - 2), {k - 2}, {0}, {3}}),
                     cat({rep(1, m - 1 - i), {2}, {2}})});

  // Family D: 2n pairs pinning the B-side tail states.
  for (int j = 0; j < n; ++j)
    pairs.push_back({cat({rep(4, m - 1), rep(3, n - 1), {k - 2}, {0}, rep(0, j)}),
                     cat({rep(0, n - 1 - j), {4}, rep(1, n - 1), {3}, {3}})});
  for (int j = 0; j < n; ++j)
    pairs.push_back({cat({rep(4, m - 1), rep(3, n - 1), {k - 2}, rep(0, n), {4}, rep(1, j)}),
                     cat({rep(1, n - 1 - j), {3}, {3}})});

  // One more pair ending in the accepting sink.
  pairs.push_back({cat({rep(4, m - 1), rep(3, n - 2), {k - 2}, {0}, {1}}), {}});
  return pairs;
}

std::vector<FoolingPair> gen_fooling_one_state(int k) {
  if (k < 9) throw InputError("one-state fooling set requires base k >= 9");
  return {
      {{}, {5}},
      {{k - 2}, {6}},
      {{k - 2, 0}, {3, 2}},
      {{k - 2, 0, 3}, {2}},
      {{k - 2, 0, 4}, {3}},
      {{k - 2, 0, 1}, {}},
  };
}

std::vector<FoolingPair> gen_fooling_unary(int n) {
  if (n < 1) throw InputError("unary fooling set requires n >= 1");
  std::vector<FoolingPair> pairs;
  for (int i = 1; i <= n; ++i) pairs.push_back({rep(1, i), rep(1, n - i)});
  return pairs;
}

}  // namespace posadd
