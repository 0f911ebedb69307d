#include <benchmark/benchmark.h>

#include "siegel/boundary.hpp"
#include "siegel/contraction.hpp"
#include "siegel/fixedset.hpp"
#include "siegel/rng.hpp"

using namespace siegel;

namespace {

geo::SiegelPoint sample(std::uint64_t seed) {
  rng::Xoshiro256pp g(seed);
  return rng::sample_interior_point(g);
}

void BM_SymEig2(benchmark::State& state) {
  const mat::RealSym2 m{1.3, -0.4, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(mat::sym_eig2(m));
}
BENCHMARK(BM_SymEig2);

void BM_Schatten(benchmark::State& state) {
  rng::Xoshiro256pp g(5);
  mat::CMat a(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = mat::cplx(g.uniform(-2, 2), g.uniform(-2, 2));
  for (auto _ : state) benchmark::DoNotOptimize(mat::schatten(a, 4.0));
}
BENCHMARK(BM_Schatten);

void BM_Polar(benchmark::State& state) {
  const auto z = sample(7);
  for (auto _ : state) benchmark::DoNotOptimize(geo::polar(z, 1.0));
}
BENCHMARK(BM_Polar);

void BM_ToBall(benchmark::State& state) {
  const auto z = sample(8);
  for (auto _ : state) benchmark::DoNotOptimize(geo::to_ball(z));
}
BENCHMARK(BM_ToBall);

void BM_MuStar(benchmark::State& state) {
  const auto z1 = sample(9);
  const auto z2 = sample(10);
  for (auto _ : state) benchmark::DoNotOptimize(contraction::mu_star(z1, z2, 1.0));
}
BENCHMARK(BM_MuStar);

void BM_PsiApply(benchmark::State& state) {
  const auto rot = contraction::psi_blocks(0.6);
  const auto z = sample(11);
  for (auto _ : state) benchmark::DoNotOptimize(contraction::psi_apply(rot, z));
}
BENCHMARK(BM_PsiApply);

void BM_RunCase(benchmark::State& state) {
  const auto spec = boundary::witness_spec(boundary::CaseId::parse("0-,0-"));
  std::vector<double> schedule;
  for (int k = 1; k <= state.range(0); ++k) schedule.push_back(std::pow(2.0, k));
  for (auto _ : state) benchmark::DoNotOptimize(boundary::run_case(spec, schedule, 1.0));
}
BENCHMARK(BM_RunCase)->Arg(8)->Arg(20);

void BM_BoundaryScan(benchmark::State& state) {
  const auto grid = fixedset::lambda_grid(10);
  for (auto _ : state)
    benchmark::DoNotOptimize(fixedset::boundary_fixed_scan(grid, state.range(0), 42));
}
BENCHMARK(BM_BoundaryScan)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
