#include <benchmark/benchmark.h>

#include "circact/constraints.hpp"
#include "circact/hp2.hpp"
#include "circact/localization.hpp"
#include "circact/verifier.hpp"

namespace {

using namespace circact;

const FixedPointData& standard() {
  static const FixedPointData data = weights_from_params(Hp2ActionParams(0, 2, 6));
  return data;
}

void BM_PontryaginReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pontryagin_report(standard()));
}
BENCHMARK(BM_PontryaginReport);

void BM_LocalizationSumE2(benchmark::State& state) {
  const auto sigma = SymmetricPolynomial::e(2);
  for (auto _ : state) benchmark::DoNotOptimize(localization_sum(standard(), sigma));
}
BENCHMARK(BM_LocalizationSumE2);

void BM_CanonicalForm(benchmark::State& state) {
  const auto data = reverse_orientation(standard());
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(data));
}
BENCHMARK(BM_CanonicalForm);

void BM_EnumeratePairings(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pairings(standard()));
}
BENCHMARK(BM_EnumeratePairings);

void BM_Admissible(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(admissible(standard()));
}
BENCHMARK(BM_Admissible);

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify(standard()));
}
BENCHMARK(BM_Classify);

void BM_Search(benchmark::State& state) {
  const auto bound = static_cast<Weight>(state.range(0));
  for (auto _ : state) {
    const auto summary = search(bound, 1);
    state.counters["admissible"] = static_cast<double>(summary.admissible_configs.size());
    state.counters["pairings"] = static_cast<double>(summary.pairings_enumerated);
  }
}
BENCHMARK(BM_Search)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
