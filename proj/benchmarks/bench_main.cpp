#include <benchmark/benchmark.h>

#include <memory>

#include "ppm/amodel.hpp"
#include "ppm/chain.hpp"
#include "ppm/floer.hpp"
#include "ppm/koszul.hpp"
#include "ppm/ksmap.hpp"
#include "ppm/mfcat.hpp"

using namespace ppm;

namespace {

void BM_CyclotomicInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CycNum a = CycNum(1) + CycNum::root_of_unity(n, 1) + CycNum::root_of_unity(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a.inv());
}
BENCHMARK(BM_CyclotomicInverse)->Arg(5)->Arg(12)->Arg(24);

void BM_FloerSectorHilbert(benchmark::State& state) {
  const CoverSpec spec = CoverSpec::parse("Z3xZ3", "1,0", "0,1");
  auto cf = std::make_shared<TwistedComplex>(cf_curve_data(spec));
  const Character chi = enumerate_characters(spec.group())[4];
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_hilbert(build_sector(cf, chi), cutoff));
}
BENCHMARK(BM_FloerSectorHilbert)->Arg(12)->Arg(24);

void BM_SymplecticSectorHilbert(benchmark::State& state) {
  const CoverSpec spec = CoverSpec::parse("Z2xZ4", "1,0", "0,1");
  const int cutoff = static_cast<int>(state.range(0));
  auto sc = std::make_shared<TwistedComplex>(sc_curve_data(spec, default_winding(cutoff)));
  const Character chi = enumerate_characters(spec.group())[1];
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_hilbert(build_sector(sc, chi), cutoff));
}
BENCHMARK(BM_SymplecticSectorHilbert)->Arg(12)->Arg(24);

void BM_KoszulHilbert(benchmark::State& state) {
  const CoverSpec t = CoverSpec::trivial();
  const KoszulSector k(t, enumerate_characters(t.group()).front());
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_hilbert(k, cutoff));
}
BENCHMARK(BM_KoszulHilbert)->Arg(12)->Arg(24);

void BM_SolveKS(benchmark::State& state) {
  const CoverSpec spec = CoverSpec::parse("Z3", "1", "1");
  const Character chi = enumerate_characters(spec.group())[1];
  const int cutoff = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_ks(spec, chi, cutoff));
}
BENCHMARK(BM_SolveKS)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_LiftCocycle(benchmark::State& state) {
  const CoverSpec t = CoverSpec::trivial();
  const KoszulSector k(t, enumerate_characters(t.group()).front());
  const Chain lz = lambda_class(2);
  for (auto _ : state) benchmark::DoNotOptimize(lift_cocycle_to_hom(lz, k));
}
BENCHMARK(BM_LiftCocycle)->Unit(benchmark::kMillisecond);

void BM_TwistedProductTable(benchmark::State& state) {
  const CoverSpec z2 = CoverSpec::parse("Z2", "1", "1");
  for (auto _ : state) benchmark::DoNotOptimize(twisted_product_table(z2));
}
BENCHMARK(BM_TwistedProductTable)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
