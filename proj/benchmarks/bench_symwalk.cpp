#include "symwalk/fourier.hpp"
#include "symwalk/jsr.hpp"
#include "symwalk/montecarlo.hpp"
#include "symwalk/symrep.hpp"
#include "symwalk/walks.hpp"

#include <benchmark/benchmark.h>

using namespace symwalk;

namespace {

GroupDistribution example_q(int which) {
  std::map<Permutation, double> w;
  const double a[6] = {0.25, 0.125, 0.125, 0.25, 0.125, 0.125};
  const double b[6] = {0.125, 0.125, 0.125, 0.25, 0.125, 0.25};
  const auto g = enumerate_group(3);
  for (int i = 0; i < 6; ++i) w[g[static_cast<std::size_t>(i)]] = which == 1 ? a[i] : b[i];
  return GroupDistribution(3, w);
}

}  // namespace

static void BM_CharacterMN(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition lambda = Partition::two_row(n - n / 2, n / 2);
  const auto c = CycleType::k_cycle(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(character_mn(lambda, c));
}
BENCHMARK(BM_CharacterMN)->Arg(12)->Arg(24)->Arg(52);

static void BM_CharacterTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(character_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CharacterTable)->Arg(6)->Arg(10);

static void BM_TabloidCycleSweep(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double s = 0.0;
    for (int N = 1; N <= 400; ++N) s += tabloid_cycle_bound(52, 26, 26, k, N);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_TabloidCycleSweep)->DenseRange(2, 5);

static void BM_IrrepMatrices(benchmark::State& state) {
  const auto g = enumerate_group(6);
  for (auto _ : state) {
    const Irrep rho({3, 2, 1});
    for (std::size_t i = 0; i < g.size(); i += 7) benchmark::DoNotOptimize(rho.matrix(g[i]));
  }
}
BENCHMARK(BM_IrrepMatrices);

static void BM_FourierTransformUniform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto q = GroupDistribution::uniform(n);
  const Irrep rho(Partition::two_row(n - 1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(fourier_transform(q, rho));
}
BENCHMARK(BM_FourierTransformUniform)->Arg(5)->Arg(6)->Arg(7);

static void BM_JsrExample(benchmark::State& state) {
  const std::vector<GroupDistribution> qs{example_q(1), example_q(2)};
  JsrOptions o;
  o.degrees = {2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(fourier_jsr(qs, HomogeneousSpace::group(3), o));
}
BENCHMARK(BM_JsrExample)->Unit(benchmark::kMillisecond);

static void BM_ProductSearch(benchmark::State& state) {
  const Irrep rho({2, 1});
  const MatrixSet s({fourier_transform(example_q(1), rho).entries,
                     fourier_transform(example_q(2), rho).entries});
  for (auto _ : state) benchmark::DoNotOptimize(search_products(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ProductSearch)->Arg(6)->Arg(10);

static void BM_SimulateWalk(benchmark::State& state) {
  const PermutationSampler q(ClassDistribution::lazy_transposition(52));
  const auto x = HomogeneousSpace::tabloids({26, 26});
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_walk(q, x, x.base_point(), 50, 1, 1000, 1));
  }
}
BENCHMARK(BM_SimulateWalk)->Unit(benchmark::kMillisecond);

static void BM_AnnealingEstimate(benchmark::State& state) {
  Eigen::MatrixXd d(5, 5);
  d << 0, 2, 3, 4, 5, 2, 0, 3, 4, 5, 3, 3, 0, 4, 5, 4, 4, 4, 0, 5, 5, 5, 5, 5, 0;
  const auto inst = TourInstance::from_matrix(d / 10.0);
  const PermutationSampler u(GroupDistribution::uniform(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(annealing_length_estimate(inst, 0.1, u, 1, 0.0, 0.1, 0.05, 20000, 3, 1));
  }
}
BENCHMARK(BM_AnnealingEstimate)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
