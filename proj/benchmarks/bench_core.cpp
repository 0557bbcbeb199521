#include <benchmark/benchmark.h>

#include "cylat/cremona.hpp"
#include "cylat/curves.hpp"
#include "cylat/smoothing.hpp"

using namespace cylat;

namespace {

void BM_PsiStep(benchmark::State& state) {
  const LatticeVector start = phi_pullback_closed(25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_step(start));
  }
}
BENCHMARK(BM_PsiStep);

void BM_PullbackIterative(benchmark::State& state) {
  const Int m = make_int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_pullback_iterative(m, LatticeVector::h()));
  }
}
BENCHMARK(BM_PullbackIterative)->Arg(10)->Arg(100)->Arg(1000);

void BM_PullbackClosed(benchmark::State& state) {
  const Int m = make_int(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_pullback_closed(m));
  }
}
BENCHMARK(BM_PullbackClosed)->Arg(1000);

void BM_EnumerateClasses(benchmark::State& state) {
  const long long cap = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_minus_one_classes(cap));
  }
}
BENCHMARK(BM_EnumerateClasses)->Arg(2)->Arg(4)->Arg(8)->Arg(12);

void BM_AmpleCertificate(benchmark::State& state) {
  const long long m = state.range(0);
  const LatticeVector L = build_L(make_int(m));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ample_test(L, m, make_int(m)));
  }
}
BENCHMARK(BM_AmpleCertificate)->Arg(4)->Arg(12);

void BM_BettiSmith(benchmark::State& state) {
  const SurfaceModel model = SurfaceModel::for_dimension(static_cast<int>(state.range(0)));
  const long long m = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(b2_of_X0(model, m));
  }
}
BENCHMARK(BM_BettiSmith)->Args({2, 10})->Args({2, 50})->Args({3, 50});

}  // namespace

BENCHMARK_MAIN();
