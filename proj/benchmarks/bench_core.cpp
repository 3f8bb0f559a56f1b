#include <benchmark/benchmark.h>

#include "f1cong/corpus.hpp"
#include "f1cong/valuation.hpp"

using namespace f1cong;

namespace {

void BM_hnf(benchmark::State& state) {
  imat rows;
  unsigned s = 42;
  for (int i = 0; i < 6; ++i) {
    ivec r(6);
    for (auto& x : r) {
      s = s * 1103515245u + 12345u;
      x = (long long)((s >> 16) % 9) - 4;
    }
    rows.push_back(r);
  }
  for (auto _ : state) benchmark::DoNotOptimize(hnf(6, rows));
}
BENCHMARK(BM_hnf);

void BM_enumerate_congruences(benchmark::State& state) {
  FiniteMonoid L = truncated_line((int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_congruences(L, 8));
}
BENCHMARK(BM_enumerate_congruences)->Arg(2)->Arg(4);

void BM_cong_space_corpus(benchmark::State& state) {
  auto monoids = corpus_monoids(4);
  for (auto _ : state)
    for (const auto& A : monoids) benchmark::DoNotOptimize(cong_space(A));
}
BENCHMARK(BM_cong_space_corpus);

void BM_solve_lifts_p1(benchmark::State& state) {
  SchemeMorphism p1 = p1_to_point();
  ValuationData val = ValuationData::make(1, 1, {{1}});
  ChartHom eta{p1.source.charts[0], val.group(), {Monomial{false, {-1}}}};
  auto d = make_test_diagram(val, p1, 0, eta);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lifts(*d));
}
BENCHMARK(BM_solve_lifts_p1);

void BM_radical_oracle(benchmark::State& state) {
  FiniteMonoid L = truncated_line_nil(3);
  auto congs = enumerate_congruences(L);
  for (auto _ : state)
    for (const auto& c : congs) benchmark::DoNotOptimize(radical(L, c));
}
BENCHMARK(BM_radical_oracle);

}  // namespace

BENCHMARK_MAIN();
