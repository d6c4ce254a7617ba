#include <benchmark/benchmark.h>

#include "posadd/fooling.hpp"
#include "posadd/positional.hpp"
#include "posadd/sum.hpp"
#include "posadd/witnesses.hpp"

using namespace posadd;

namespace {

void BM_BuildSum(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  Nfa a = witness_a(9, m);
  Nfa b = witness_b(9, n);
  for (auto _ : state) {
    SumNfa sum = build_sum_nfa(a, b);
    benchmark::DoNotOptimize(sum);
  }
  state.counters["states"] = static_cast<double>(bound_states(m, n));
}
BENCHMARK(BM_BuildSum)->Args({2, 2})->Args({3, 4})->Args({6, 6})->Args({10, 10});

void BM_EnumerateAccepted(benchmark::State& state) {
  const int max_len = static_cast<int>(state.range(0));
  SumNfa sum = build_sum_nfa(witness_a(9, 2), witness_b(9, 2));
  for (auto _ : state) {
    auto words = enumerate_accepted(sum.nfa, max_len);
    benchmark::DoNotOptimize(words);
    state.counters["words"] = static_cast<double>(words.size());
  }
}
BENCHMARK(BM_EnumerateAccepted)->Arg(3)->Arg(4)->Arg(5);

void BM_SumOracle(benchmark::State& state) {
  const int max_len = static_cast<int>(state.range(0));
  Nfa a = witness_a(9, 2);
  Nfa b = witness_b(9, 2);
  for (auto _ : state) {
    OracleResult oracle = sum_language_oracle(a, b, max_len);
    benchmark::DoNotOptimize(oracle);
  }
}
BENCHMARK(BM_SumOracle)->Arg(3)->Arg(4)->Arg(5);

void BM_VerifyFooling(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  SumNfa sum = build_sum_nfa(witness_a(9, m), witness_b(9, n));
  std::vector<FoolingPair> pairs = gen_fooling_addition(9, m, n);
  for (auto _ : state) {
    FoolingVerdict verdict = verify_fooling(pairs, sum.nfa);
    benchmark::DoNotOptimize(verdict);
  }
}
BENCHMARK(BM_VerifyFooling)->Args({2, 2})->Args({3, 4})->Args({5, 5});

void BM_EquivalenceCheck(benchmark::State& state) {
  Nfa a = one_state_witness_a(9);
  Nfa b = one_state_witness_b(9);
  Nfa merged = build_sum_one_state(a, b).nfa;
  Nfa general = build_sum_nfa(a, b).nfa;
  for (auto _ : state) {
    bool same = equivalent(merged, general);
    benchmark::DoNotOptimize(same);
  }
}
BENCHMARK(BM_EquivalenceCheck);

}  // namespace

BENCHMARK_MAIN();
