#include "posadd/witnesses.hpp"

namespace posadd {

namespace {

void check_params(const char* family, int k, int min_k, int size) {
  if (k < min_k)
    throw InputError(std::string("witness family ") + family + " requires base k >= " +
                     std::to_string(min_k) + ", got " + std::to_string(k));
  if (size < 1)
    throw InputError(std::string("witness family ") + family +
                     " requires a positive state count, got " + std::to_string(size));
}

}  // namespace

Nfa witness_a(int k, int m) {
  check_params("a", k, 9, m);
  std::vector<Transition> trans;
  for (int i = 0; i < m; ++i) {
    trans.push_back({i, 1, (i + 1) % m});
    trans.push_back({i, 2, i});
    trans.push_back({i, k - 1, i});
  }
  return Nfa(k, m, 0, {m - 1}, std::move(trans));
}

Nfa witness_b(int k, int n) {
  check_params("b", k, 9, n);
  std::vector<Transition> trans;
  for (int j = 0; j < n; ++j) {
    trans.push_back({j, 1, (j + 1) % n});
    trans.push_back({j, 3, j});
    trans.push_back({j, k - 1, (j + 1) % n});
  }
  return Nfa(k, n, 0, {n - 1}, std::move(trans));
}

Nfa unary_witness(int k, int m) {
  check_params("unary", k, 2, m);
  std::vector<Transition> trans;
  for (int i = 0; i < m; ++i) trans.push_back({i, 1, (i + 1) % m});
  return Nfa(k, m, 0, {0}, std::move(trans));
}

Nfa one_state_witness_a(int k) {
  check_params("one-a", k, 9, 1);
  return Nfa(k, 1, 0, {0}, {{0, 2, 0}, {0, k - 1, 0}});
}

Nfa one_state_witness_b(int k) {
  check_params("one-b", k, 9, 1);
  return Nfa(k, 1, 0, {0}, {{0, 3, 0}, {0, k - 1, 0}});
}

}  // namespace posadd
