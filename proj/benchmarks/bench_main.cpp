#include "nilbound/bounds.hpp"
#include "nilbound/constructions.hpp"
#include "nilbound/perm_group.hpp"
#include "nilbound/search.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_SylowChain(benchmark::State &state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(nilbound::iterated_wreath_sylow(2, k).order());
}
BENCHMARK(BM_SylowChain)->DenseRange(3, 5);

void BM_LowerCentralSeries(benchmark::State &state) {
  const auto g = nilbound::iterated_wreath_sylow(2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(nilbound::lower_central_series(g).nilpotency_class);
}
BENCHMARK(BM_LowerCentralSeries)->DenseRange(3, 5);

void BM_CompositionMax(benchmark::State &state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(nilbound::f_upper(k, 3).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CompositionMax)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_SubgroupEnumeration(benchmark::State &state) {
  const auto s = nilbound::iterated_wreath_sylow(2, 3);
  nilbound::SubgroupSearchOptions options;
  options.dedupe = state.range(0) ? nilbound::SubgroupSearchOptions::Dedupe::Conjugacy
                                  : nilbound::SubgroupSearchOptions::Dedupe::Set;
  for (auto _ : state)
    benchmark::DoNotOptimize(nilbound::enumerate_subgroups(s, options).size());
}
BENCHMARK(BM_SubgroupEnumeration)->Arg(0)->Arg(1);

void BM_ExhaustiveRow(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(nilbound::fnil_exact(2, 3, 8).exponents);
}
BENCHMARK(BM_ExhaustiveRow);

} // namespace
BENCHMARK_MAIN();
