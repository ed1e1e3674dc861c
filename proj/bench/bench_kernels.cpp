// Serial reference against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "flateta/family.hpp"
#include "flateta/kernels.hpp"
#include "flateta/trig.hpp"

using namespace flateta;

namespace {

CyclicEtaInput input_for(int r) {
  // J_{r-1} J_2 J_1: a Z_{2^r} generator with many admissible powers
  std::vector<int> j(r - 1, 0);
  j.front() = 1;
  j.back() = 1;
  if (r > 3)
    j[r - 3] = 1;
  ManifoldSpec s = family_spec(BlockSpec::from_j(r, j));
  HolonomyData d = analyze(s);
  CyclicEtaInput in;
  in.sigma = d.sigma_coordinates;
  in.m = (d.n - 1) / 2;
  in.N = d.N;
  for (const AngleRational& a : d.angles)
    in.angles.push_back(a.value());
  in.ell_gamma = Rational(d.ell_gamma);
  for (std::uint64_t k = 1; k < d.N; k += 2)
    in.ks.push_back(k);
  return in;
}

void BM_CyclicEtaSerial(benchmark::State& state) {
  CyclicEtaInput in = input_for(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(cyclic_eta_sum_serial(in));
  state.SetItemsProcessed(state.iterations() * in.ks.size());
}

void BM_CyclicEtaParallel(benchmark::State& state) {
  CyclicEtaInput in = input_for(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(cyclic_eta_sum_parallel(in));
  state.SetItemsProcessed(state.iterations() * in.ks.size());
}

void BM_IdentitySuite(benchmark::State& state) {
  IdentitySuiteOptions opt;
  opt.max_r = 8;
  bool parallel = state.range(0) != 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(identity_suite(opt, parallel));
}

void BM_EnumerateFamily(benchmark::State& state) {
  bool parallel = state.range(0) != 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_family(63, std::nullopt, true, parallel));
}

}  // namespace

BENCHMARK(BM_CyclicEtaSerial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclicEtaParallel)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IdentitySuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EnumerateFamily)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
