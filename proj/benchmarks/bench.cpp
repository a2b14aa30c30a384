#include <benchmark/benchmark.h>

#include "toricap/capacities.hpp"
#include "toricap/oracle.hpp"
#include "toricap/words.hpp"

using namespace toricap;

namespace {

ToricDomain e71() {
  return ToricDomain::validate(ToricDomainSpec::ellipsoid(7, 1));
}

void BM_support(benchmark::State& state) {
  auto d = e71();
  long k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.support({k % 13, (k * 7) % 11}));
    ++k;
  }
}
BENCHMARK(BM_support);

void BM_gt_candidates(benchmark::State& state) {
  auto d = e71();
  for (auto _ : state) benchmark::DoNotOptimize(gt(d, state.range(0)).value);
}
BENCHMARK(BM_gt_candidates)->Arg(10)->Arg(50)->Arg(200);

void BM_gt_enumeration(benchmark::State& state) {
  auto d = e71();
  for (auto _ : state)
    benchmark::DoNotOptimize(gt(d, state.range(0), Method::Enumeration).value);
}
BENCHMARK(BM_gt_enumeration)->Arg(6)->Arg(8)->Arg(10);

void BM_ech_lattice(benchmark::State& state) {
  auto d = e71();
  for (auto _ : state) benchmark::DoNotOptimize(ech(d, state.range(0)).value);
}
BENCHMARK(BM_ech_lattice)->Arg(6)->Arg(10);

void BM_reduce(benchmark::State& state) {
  auto d = e71();
  Word w = Word::parse("e(2,2)*h(1,1)*h(1,1)*e(0,3)");
  for (auto _ : state) benchmark::DoNotOptimize(reduce(w, d));
}
BENCHMARK(BM_reduce);

}  // namespace

BENCHMARK_MAIN();
