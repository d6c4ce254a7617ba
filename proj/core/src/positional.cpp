#include "posadd/positional.hpp"

#include <algorithm>
#include <string>

#include "posadd/io.hpp"

namespace posadd {

namespace {

void check_digits(const Word& w, int k) {
  for (Digit d : w)
    if (d < 0 || d >= k)
      throw InputError("digit " + std::to_string(d) + " out of range for base " +
                       std::to_string(k));
}

}  // namespace

Natural value_of(const Word& w, int k) {
  if (k < 2) throw InputError("base must be at least 2");
  check_digits(w, k);
  Natural value = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) value = value * k + *it;
  return value;
}

Word canonical(const Natural& value, int k) {
  if (k < 2) throw InputError("base must be at least 2");
  Word w;
  Natural rest = value;
  while (rest > 0) {
    w.push_back(static_cast<Digit>(rest % k));
    rest /= k;
  }
  return w;
}

bool is_canonical_word(const Word& w, int k) {
  for (Digit d : w)
    if (d < 0 || d >= k) return false;
  return w.empty() || w.back() != 0;
}

Word add_words(const Word& u, const Word& v, int k) {
  if (k < 2) throw InputError("base must be at least 2");
  check_digits(u, k);
  check_digits(v, k);
  if (!is_canonical_word(u, k) || !is_canonical_word(v, k))
    throw InputError("add_words requires canonical operands (no trailing zero digit)");
  Word sum;
  int carry = 0;
  for (std::size_t i = 0; i < std::max(u.size(), v.size()); ++i) {
    int s = carry;
    if (i < u.size()) s += u[i];
    if (i < v.size()) s += v[i];
    sum.push_back(s % k);
    carry = s / k;
  }
  if (carry != 0) sum.push_back(carry);
  return sum;
}

OracleResult sum_language_oracle(const Nfa& a, const Nfa& b, int max_len) {
  if (a.k() != b.k())
    throw InputError("sum oracle requires operands over the same base (" +
                     std::to_string(a.k()) + " vs " + std::to_string(b.k()) + ")");
  for (const Nfa* operand : {&a, &b}) {
    if (auto bad = find_word_ending_in_zero(*operand))
      throw InputError("operand language is not canonical: accepts " + format_word(*bad) +
                       ", which ends with digit 0");
  }
  const int k = a.k();
  std::set<Word> left = enumerate_accepted(a, max_len);
  std::set<Word> right = enumerate_accepted(b, max_len);

  std::vector<Natural> right_values;
  right_values.reserve(right.size());
  for (const Word& v : right) right_values.push_back(value_of(v, k));

  OracleResult result;
  result.max_len = max_len;
  result.operand_counts = {left.size(), right.size()};
  for (const Word& u : left) {
    Natural base = value_of(u, k);
    for (const Natural& rv : right_values) {
      Word sum = canonical(base + rv, k);
      if (static_cast<int>(sum.size()) <= max_len) result.words.insert(std::move(sum));
    }
  }
  return result;
}

}  // namespace posadd
