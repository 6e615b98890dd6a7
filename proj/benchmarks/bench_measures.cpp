#include <benchmark/benchmark.h>

#include <qcorr/correlations.hpp>
#include <qcorr/sampler.hpp>

using namespace qcorr;

namespace {

DensityOperator state(int d) { return ginibre_density(d, d, Seed{1}); }

void BM_Spectral(benchmark::State& s) {
  const DensityOperator rho = state(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(spectral(rho));
}
BENCHMARK(BM_Spectral)->Arg(4)->Arg(8)->Arg(16);

void BM_VonNeumann(benchmark::State& s) {
  const DensityOperator rho = state(4);
  for (auto _ : s) benchmark::DoNotOptimize(von_neumann(rho));
}
BENCHMARK(BM_VonNeumann);

void BM_Dephase(benchmark::State& s) {
  const DensityOperator rho = state(4);
  const MeasurementBasis basis = MeasurementBasis::from_columns(random_unitary(4, Seed{2}));
  for (auto _ : s) benchmark::DoNotOptimize(dephase(rho, basis));
}
BENCHMARK(BM_Dephase);

void BM_DiscordGiven(benchmark::State& s) {
  const BipartiteState st(2, 2, state(4));
  const MeasurementBasis basis = basis_from_params({2, {0.4, 1.1}});
  for (auto _ : s) benchmark::DoNotOptimize(discord_given(st, basis));
}
BENCHMARK(BM_DiscordGiven);

void BM_ScanObjective(benchmark::State& s) {
  const BipartiteState st(2, 2, state(4));
  const MeasurementScan scan(st);
  const Eigen::MatrixXcd columns = basis_from_params({2, {0.4, 1.1}}).columns();
  for (auto _ : s) benchmark::DoNotOptimize(scan.discord_objective(columns));
}
BENCHMARK(BM_ScanObjective);

void BM_DiscordOptimization(benchmark::State& s) {
  const BipartiteState st(2, 2, state(4));
  OptimizerConfig cfg;
  cfg.seed = Seed{3};
  for (auto _ : s) benchmark::DoNotOptimize(discord(st, cfg));
}
BENCHMARK(BM_DiscordOptimization)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
