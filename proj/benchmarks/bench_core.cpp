#include <benchmark/benchmark.h>

#include <complex>

#include "starrad/oracle.hpp"
#include "starrad/regions.hpp"
#include "starrad/report.hpp"
#include "starrad/solver.hpp"

namespace {

using namespace starrad;

void BM_SolveRadius(benchmark::State& state) {
  const TargetRegion region = region_of(RegionKind::Lemniscate);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_radius(SeedClass::K1, region));
}
BENCHMARK(BM_SolveRadius);

void BM_MembershipAnalytic(benchmark::State& state) {
  const TargetRegion region = region_of(RegionKind::Lemniscate);
  const std::complex<double> w(1.1, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(membership(region, w));
}
BENCHMARK(BM_MembershipAnalytic);

void BM_MembershipWinding(benchmark::State& state) {
  const TargetRegion region = region_of(RegionKind::Cardioid);
  const std::complex<double> w(1.1, 0.2);
  // first call pays for the cached boundary grid
  winding_membership(region, w);
  for (auto _ : state) benchmark::DoNotOptimize(winding_membership(region, w));
}
BENCHMARK(BM_MembershipWinding);

void BM_Inradius(benchmark::State& state) {
  const TargetRegion region = region_of(RegionKind::Cardioid);
  double a = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inradius(region, a));
    a = a < 2.5 ? a + 1e-6 : 0.5;
  }
}
BENCHMARK(BM_Inradius);

void BM_ContainmentOracle(benchmark::State& state) {
  const TargetRegion region = region_of(RegionKind::Cardioid);
  for (auto _ : state)
    benchmark::DoNotOptimize(containment_holds(SeedClass::K1, region, 0.1));
}
BENCHMARK(BM_ContainmentOracle);

void BM_BuildTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_table());
}
BENCHMARK(BM_BuildTable);

}  // namespace

BENCHMARK_MAIN();
