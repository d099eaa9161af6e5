#include <benchmark/benchmark.h>

#include "dunkl/bochner_solver.hpp"
#include "dunkl/jacobi_m1.hpp"
#include "dunkl/quadrature.hpp"

namespace {

using namespace dunkl;

const BigJacobiParams kParams{Rational(1, 2), Rational(3, 2), Rational(1, 3)};

void BM_ApplyMonomial(benchmark::State& state) {
  const DunklOperator op = build(big_operator(kParams));
  const Polynomial p = Polynomial::monomial(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply(op, p));
}
BENCHMARK(BM_ApplyMonomial)->Arg(10)->Arg(50);

void BM_EigenSequence(benchmark::State& state) {
  const DunklOperator op = build(big_operator(kParams));
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eigen_sequence(op, N));
}
BENCHMARK(BM_EigenSequence)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_GramMatrix(benchmark::State& state) {
  const DunklOperator op = build(big_operator(kParams));
  const WeightFunction w = big_weight(kParams);
  std::vector<Polynomial> polys;
  for (auto& e : eigen_sequence(op, static_cast<int>(state.range(0)))) polys.push_back(e.poly);
  for (auto _ : state) benchmark::DoNotOptimize(gram_matrix(w, polys, {}, GramBasis::Eigen));
}
BENCHMARK(BM_GramMatrix)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
