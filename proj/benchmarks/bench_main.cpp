#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <string>

#include "lingagree/agreement.hpp"
#include "lingagree/iaa.hpp"
#include "lingagree/survey.hpp"
#include "oracles.hpp"

namespace {

using namespace lingagree;

IntervalCollection sample(std::size_t n) {
  std::mt19937_64 rng(n);
  return testing::random_collection(rng, n, 0.0, 100.0);
}

void BM_LevelSets(benchmark::State& state) {
  const IntervalCollection c = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(level_sets(c));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LevelSets)->RangeMultiplier(4)->Range(8, 8192)->Complexity(benchmark::oNLogN);

void BM_GammaExact(benchmark::State& state) {
  const IntervalCollection c = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_exact(c));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GammaExact)->RangeMultiplier(4)->Range(8, 8192)->Complexity(benchmark::oNLogN);

// Same quantity through the tuple enumeration, for contrast.
void BM_GammaTupleOracle(benchmark::State& state) {
  const IntervalCollection c = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::vector<double> lengths;
    for (std::size_t k = 1; k <= c.size(); ++k) lengths.push_back(tuple_length_oracle(c, k));
    benchmark::DoNotOptimize(gamma_from_lengths(lengths));
  }
}
BENCHMARK(BM_GammaTupleOracle)->DenseRange(4, 16, 4);

void BM_SampledAlphaLength(benchmark::State& state) {
  const MembershipFunction g = Gaussian(5, 1, Interval(0, 10));
  const Discretization disc(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alpha_length(g, 0.5, disc));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampledAlphaLength)->RangeMultiplier(10)->Range(101, 100001)->Complexity(benchmark::oN);

void BM_GaussianGammaAlpha(benchmark::State& state) {
  const MembershipFunction g = Gaussian(5, 1, Interval(0, 10));
  for (auto _ : state) benchmark::DoNotOptimize(gamma_alpha(g, 10, 10001));
}
BENCHMARK(BM_GaussianGammaAlpha);

void BM_Report(benchmark::State& state) {
  std::ifstream in(std::string(LINGAGREE_FIXTURES) + "/table_survey.csv");
  const SurveyDataset ds = load_survey(in, DataFormat::Csv);
  for (auto _ : state) benchmark::DoNotOptimize(report(ds));
}
BENCHMARK(BM_Report);

}  // namespace
BENCHMARK_MAIN();
