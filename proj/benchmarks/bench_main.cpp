#include <benchmark/benchmark.h>

#include "expdist/closed_forms.hpp"
#include "expdist/edm.hpp"
#include "expdist/oracle.hpp"
#include "expdist/verify.hpp"

namespace {

using expdist::BiBlockGraph;
using expdist::Rational;

BiBlockGraph graph_with_blocks(std::int64_t r) { return expdist::random_bi_block(17, static_cast<std::size_t>(r), 4, 4); }

void BM_ExponentialMatrix(benchmark::State& state) {
  const BiBlockGraph g = graph_with_blocks(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expdist::exponential_matrix(g, Rational(3, 7)));
  state.counters["n"] = static_cast<double>(g.vertex_count());
}

void BM_OracleDet(benchmark::State& state) {
  const BiBlockGraph g = graph_with_blocks(state.range(0));
  const auto f = expdist::exponential_matrix(g, Rational(3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(expdist::oracle_det(f));
  state.counters["n"] = static_cast<double>(g.vertex_count());
}

void BM_ClosedFormDet(benchmark::State& state) {
  const BiBlockGraph g = graph_with_blocks(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expdist::det_bi_block(g, Rational(3, 7)));
}

void BM_OracleInverse(benchmark::State& state) {
  const BiBlockGraph g = graph_with_blocks(state.range(0));
  const auto f = expdist::exponential_matrix(g, Rational(3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(expdist::oracle_inverse(f));
  state.counters["n"] = static_cast<double>(g.vertex_count());
}

void BM_ClosedFormInverse(benchmark::State& state) {
  const BiBlockGraph g = graph_with_blocks(state.range(0));
  const auto bundle = expdist::build_bundle(g, Rational(3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(expdist::inverse_bi_block(bundle));
}

void BM_SingularAdjugateSum(benchmark::State& state) {
  // K_{s,s} with 1 - q^2 (s-1)^2 = 0 at q = 1/(s-1).
  const auto s = static_cast<std::size_t>(state.range(0));
  const auto f = expdist::exponential_matrix(expdist::build_graph({{s, s}}, {}),
                                             Rational(1, static_cast<std::int64_t>(s - 1)));
  for (auto _ : state) benchmark::DoNotOptimize(expdist::oracle_adjugate_sum(f));
}

void BM_RunCaseAllChecks(benchmark::State& state) {
  const BiBlockGraph g = graph_with_blocks(state.range(0));
  const expdist::CheckCase c{expdist::GraphDescriptor::of(g), Rational(1, 2),
                             {std::begin(expdist::kAllChecks), std::end(expdist::kAllChecks)}};
  for (auto _ : state) benchmark::DoNotOptimize(expdist::run_case(c));
}

}  // namespace

BENCHMARK(BM_ExponentialMatrix)->Arg(2)->Arg(6)->Arg(12);
BENCHMARK(BM_OracleDet)->Arg(2)->Arg(6)->Arg(12);
BENCHMARK(BM_ClosedFormDet)->Arg(2)->Arg(6)->Arg(12);
BENCHMARK(BM_OracleInverse)->Arg(2)->Arg(6)->Arg(12);
BENCHMARK(BM_ClosedFormInverse)->Arg(2)->Arg(6)->Arg(12);
BENCHMARK(BM_SingularAdjugateSum)->Arg(3)->Arg(5)->Arg(8);
BENCHMARK(BM_RunCaseAllChecks)->Arg(2)->Arg(6);
BENCHMARK_MAIN();
