#include "regcalc/atlas.hpp"
#include "regcalc/composition.hpp"
#include "regcalc/oracle/closed_form.hpp"
#include "regcalc/oracle/quadrature.hpp"
#include "regcalc/partitions.hpp"

#include <benchmark/benchmark.h>

using namespace regcalc;

static void BM_EnumeratePartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(n));
  state.counters["partitions"] = static_cast<double>(bell_number(n));
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_AlphaComposed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const UnaryMap alpha = UnaryMap::constant(24);
  for (auto _ : state) {
    benchmark::DoNotOptimize(alpha_composed(alpha, IndexFn::holder(), IndexFn::min(), n));
  }
}
BENCHMARK(BM_AlphaComposed)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static Atlas complete_ck(int m) {
  Atlas a(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) a.add_overlap(i, j);
  }
  return a;
}

static void BM_RetractAtlas(benchmark::State& state) {
  const Atlas a = complete_ck(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(retract_atlas(a, AbsorbMode::left));
}
BENCHMARK(BM_RetractAtlas)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

static void BM_TransitionMagmaIdeal(benchmark::State& state) {
  const Atlas a = complete_ck(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FiniteMagma m = transition_magma(a, AbsorbMode::left);
    benchmark::DoNotOptimize(check_ideal(m, b_elements(m), IdealSide::left));
  }
}
BENCHMARK(BM_TransitionMagmaIdeal)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

static void BM_LpNormBump(benchmark::State& state) {
  using namespace regcalc::oracle;
  const ClosedFormFn f = ClosedFormFn::bump(-1, 1) * ClosedFormFn::sin(3.0 * ClosedFormFn::x());
  const ExtIndex p = state.range(0) == 0 ? ExtIndex::inf() : ExtIndex(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lp_norm(f, p, Interval::whole_line()));
}
BENCHMARK(BM_LpNormBump)->Arg(1)->Arg(2)->Arg(6)->Arg(0)->Unit(benchmark::kMicrosecond);

static void BM_SymbolicDerivative(benchmark::State& state) {
  using namespace regcalc::oracle;
  const auto x = ClosedFormFn::x();
  const ClosedFormFn f = ClosedFormFn::exp(ClosedFormFn::sin(x) * x);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(derivative(f, n));
}
BENCHMARK(BM_SymbolicDerivative)->DenseRange(1, 5, 1)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
