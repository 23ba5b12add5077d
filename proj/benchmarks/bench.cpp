#include <benchmark/benchmark.h>

#include "lie4/classification.hpp"
#include "lie4/curvature.hpp"
#include "lie4/kowalski.hpp"
#include "lie4/models.hpp"

using namespace lie4;
using R = Rational;

static void BM_ExactCurvature(benchmark::State& state) {
  MetricLieAlgebra<R> m{family_algebra(R(1), R(2)), identity_mat4<R>()};
  for (auto _ : state) {
    CurvatureData<R> cd = curvature(m);
    benchmark::DoNotOptimize(cd.scal);
  }
}
BENCHMARK(BM_ExactCurvature);

static void BM_BranchVerification(benchmark::State& state) {
  const auto& b = classification::branch(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cert = classification::verify_branch(b);
    benchmark::DoNotOptimize(cert.all_zero);
  }
}
BENCHMARK(BM_BranchVerification)->Arg(5)->Arg(16);

static void BM_FiniteDifferenceRicci(benchmark::State& state) {
  kowalski::Point p{0.5, -0.5, 1.0, 0.5};
  for (auto _ : state) {
    auto rep = kowalski::ricci_fd(p, 1.0);
    benchmark::DoNotOptimize(rep.scal);
  }
}
BENCHMARK(BM_FiniteDifferenceRicci);

BENCHMARK_MAIN();
