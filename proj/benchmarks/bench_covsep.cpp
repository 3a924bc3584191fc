#include <benchmark/benchmark.h>

#include "covsep/classical.hpp"
#include "covsep/quantum.hpp"
#include "covsep/random.hpp"
#include "covsep/rng.hpp"
#include "covsep/separation.hpp"

namespace {

const covsep::Mat2 kRefQ{{covsep::Complex(3.0), covsep::Complex(1.0),
                          covsep::Complex(1.0), covsep::Complex(1.0)}};
const covsep::Mat2 kRefR{{covsep::Complex(1.0), covsep::Complex(1.0),
                          covsep::Complex(1.0), covsep::Complex(3.0)}};

void BM_ReferenceCounterexample(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(covsep::verify_paper_counterexample());
  }
}
BENCHMARK(BM_ReferenceCounterexample);

void BM_Theorem1Instance(benchmark::State& state) {
  covsep::SplitMix64 rng(1);
  for (auto _ : state) {
    const covsep::BinaryParameterization p =
        covsep::random_feasible_parameterization(rng);
    const covsep::JointDistribution d = covsep::from_parameterization(p);
    benchmark::DoNotOptimize(covsep::covariance(d));
    benchmark::DoNotOptimize(covsep::independence_defect(d));
  }
}
BENCHMARK(BM_Theorem1Instance);

void BM_QuantumCovariance(benchmark::State& state) {
  const covsep::TwoQubitState s = covsep::bell_state();
  const covsep::Observable2 q(kRefQ);
  const covsep::Observable2 r(kRefR);
  for (auto _ : state) {
    benchmark::DoNotOptimize(covsep::quantum_covariance(s, q, r));
  }
}
BENCHMARK(BM_QuantumCovariance);

void BM_SolvePartner(benchmark::State& state) {
  const covsep::Observable2 q(kRefQ);
  const covsep::PartnerSeed seed{1.0, 3.0, 0.0, 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(covsep::solve_partner(q, seed));
  }
}
BENCHMARK(BM_SolvePartner);

void BM_InducedTable(benchmark::State& state) {
  const covsep::TwoQubitState s = covsep::bell_state();
  const covsep::Observable2 q(kRefQ);
  const covsep::Observable2 r(kRefR);
  for (auto _ : state) {
    benchmark::DoNotOptimize(covsep::induced_joint_distribution(s, q, r));
  }
}
BENCHMARK(BM_InducedTable);

void BM_RandomInstance(benchmark::State& state) {
  uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(covsep::random_separation_instance(seed++));
  }
}
BENCHMARK(BM_RandomInstance);

void BM_Sample(benchmark::State& state) {
  const covsep::JointDistribution table = covsep::three_value_counterexample();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        covsep::sample(table, static_cast<std::size_t>(state.range(0)), 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Range(1000, 1000000);

}  // namespace

BENCHMARK_MAIN();
