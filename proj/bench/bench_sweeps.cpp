// Serial reference kernels against their OpenMP sweeps. The argument is the
// job count: 1 runs the serial path, 0 uses every core.

#include <benchmark/benchmark.h>

#include <random>

#include "battery.hpp"
#include "precy/ainfinity.hpp"
#include "precy/correspondence.hpp"
#include "precy/fixtures.hpp"
#include "precy/repspaces.hpp"

using namespace precy;

namespace {

SweepOptions opts(const benchmark::State& state) { return {static_cast<int>(state.range(0)), 16}; }

void BM_MC5(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto alg = testkit::truncated_polynomial(3);
  const MCStructure s(alg, m3_from_bracket(testkit::random_sparse_bracket(3, 8, rng)));
  for (auto _ : state) benchmark::DoNotOptimize(check_mc_arity(s, 5, opts(state)));
}

void BM_DoubleJacobi(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto d = testkit::random_sparse_bracket(4, 20, rng);
  for (auto _ : state) benchmark::DoNotOptimize(check_double_jacobi(d, opts(state)));
}

void BM_RepJacobi(benchmark::State& state) {
  const auto alg = fixtures::dual_numbers();
  std::vector<RepPoint> seeds;
  for (const auto& s : fixtures::dual_numbers_seeds()) seeds.push_back({s.n, s.mats});
  const auto pts = sample_rep_points(alg, 3, seeds, 10, 3);
  const auto d = fixtures::dual_numbers_bracket();
  for (auto _ : state) benchmark::DoNotOptimize(check_jacobi_at_points(d, 3, pts, opts(state)));
}

}  // namespace

BENCHMARK(BM_MC5)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DoubleJacobi)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RepJacobi)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
