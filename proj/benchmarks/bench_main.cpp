#include <benchmark/benchmark.h>

#include "cusp/branchdata.hpp"
#include "cusp/gradedroots.hpp"
#include "cusp/localinv.hpp"
#include "cusp/search.hpp"
#include "cusp/semidist.hpp"
#include "cusp/swtorsion.hpp"

namespace {

const std::vector<cusp::NewtonPair> kPairs{{2, 7}, {4, 17}};

void BM_SemigroupOfBranch(benchmark::State& state) {
  const auto b = cusp::branch_from_newton_pairs(kPairs);
  for (auto _ : state) benchmark::DoNotOptimize(cusp::semigroup_of(b));
}
BENCHMARK(BM_SemigroupOfBranch);

void BM_Spectrum(benchmark::State& state) {
  const auto b = cusp::branch_from_newton_pairs(kPairs);
  for (auto _ : state) benchmark::DoNotOptimize(cusp::spectrum(b));
}
BENCHMARK(BM_Spectrum);

void BM_DistributionReport(benchmark::State& state) {
  const auto sg = cusp::semigroup_of(cusp::branch_from_newton_pairs(kPairs));
  for (auto _ : state) benchmark::DoNotOptimize(cusp::distribution_report(sg, 17));
}
BENCHMARK(BM_DistributionReport);

void BM_SwBothWays(benchmark::State& state) {
  const auto sg = cusp::semigroup_of(cusp::branch_from_newton_pairs(kPairs));
  for (auto _ : state) benchmark::DoNotOptimize(cusp::sw_both_ways(sg, 17));
}
BENCHMARK(BM_SwBothWays);

void BM_GradedRoot(benchmark::State& state) {
  const auto tau = cusp::tau_for_brieskorn(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cusp::root_from_tau(tau));
}
BENCHMARK(BM_GradedRoot)->Arg(10)->Arg(40)->Arg(160);

void BM_EnumerateOnePair(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cusp::enumerate_one_pair(state.range(0)));
}
BENCHMARK(BM_EnumerateOnePair)->Arg(20)->Arg(34)->Unit(benchmark::kMillisecond);

void BM_EnumerateBranches(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cusp::enumerate_branches(state.range(0)));
}
BENCHMARK(BM_EnumerateBranches)->Arg(90)->Arg(342)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
