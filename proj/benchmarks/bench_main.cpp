#include <benchmark/benchmark.h>

#include "fermat/certificate.hpp"
#include "fermat/groebner.hpp"
#include "fermat/modular.hpp"
#include "fermat/rational_map.hpp"
#include "fermat/varieties.hpp"

namespace {

void BM_CubeSumTable(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fermat::cube_sum_table(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CubeSumTable)->Arg(2503)->Arg(5003)->Arg(10007)->Arg(20011)->Unit(benchmark::kMillisecond)->Complexity(
    benchmark::oNSquared);

void BM_CountV33(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fermat::count_V33(p, fermat::CountMethod::table, fermat::kDefaultBudget, threads));
  }
}
BENCHMARK(BM_CountV33)->Args({10007, 1})->Args({10007, 4})->Unit(benchmark::kMillisecond);

void BM_EtaExpand(benchmark::State& state) {
  const auto bound = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fermat::eta_expand(fermat::eta_products::weight4(), bound));
    benchmark::DoNotOptimize(fermat::eta_expand(fermat::eta_products::weight2(), bound));
  }
}
BENCHMARK(BM_EtaExpand)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_HeckeCheck(benchmark::State& state) {
  const auto series = fermat::eta_expand(fermat::eta_products::weight4(), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(fermat::hecke_check(series, 4, fermat::eta_products::kWeight4Level, 1000));
}
BENCHMARK(BM_HeckeCheck)->Unit(benchmark::kMillisecond);

void BM_Buchberger(benchmark::State& state) {
  const auto ring = fermat::make_ring({"x", "y", "z"});
  const std::vector<fermat::MultiPoly> gens{fermat::parse_poly(ring, "x^2 + y*z - 2"),
                                            fermat::parse_poly(ring, "y^2 - x*z + 1"),
                                            fermat::parse_poly(ring, "z^2 - x*y - 3")};
  for (auto _ : state) benchmark::DoNotOptimize(fermat::buchberger(gens));
}
BENCHMARK(BM_Buchberger)->Unit(benchmark::kMillisecond);

void BM_VerifyMap(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fermat::verify_map_well_defined());
}
BENCHMARK(BM_VerifyMap)->Unit(benchmark::kMicrosecond);

void BM_FiberCensus(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fermat::fiber_census(p));
}
BENCHMARK(BM_FiberCensus)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
