#include <benchmark/benchmark.h>

#include <cmath>

#include "hlog/hilbert_operator.hpp"
#include "hlog/quadrature.hpp"
#include "hlog/space_norms.hpp"
#include "hlog/specfun.hpp"
#include "hlog/sup_search.hpp"
#include "hlog/verification.hpp"

namespace {

void BM_Gamma(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hlog::gamma(x));
    x = x < 30.0 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_Gamma);

void BM_GaussKronrod(benchmark::State& state) {
  for (auto _ : state) {
    auto r = hlog::integrate([](double t) { return std::sin(40.0 * t) * std::exp(t); }, 0.0, 3.0, 1e-12);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_GaussKronrod);

void BM_IntegrateSingular(benchmark::State& state) {
  auto f = [](const hlog::Abscissa& p) { return std::pow(p.from_left, -0.5) * std::pow(p.to_right, -0.5); };
  for (auto _ : state) {
    auto r = hlog::integrate_singular(f, 0.0, 1.0, {-0.5, -0.5}, 1e-12);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_IntegrateSingular);

void BM_SupremumUnit(benchmark::State& state) {
  for (auto _ : state) {
    auto s = hlog::supremum_unit([](const hlog::UnitPoint& p) { return hlog::b_objective(p.r, p.complement, 1e-11); },
                                 1e-9);
    benchmark::DoNotOptimize(s.value);
  }
}
BENCHMARK(BM_SupremumUnit)->Unit(benchmark::kMillisecond);

void BM_ApplyMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = hlog::taylor_coeffs(hlog::TestFunction::half_log(), n);
  for (auto _ : state) {
    auto b = hlog::apply_matrix(s, n);
    benchmark::DoNotOptimize(b.coeffs.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplyMatrix)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);

void BM_HardyNormH1(benchmark::State& state) {
  const auto f = hlog::TestFunction::hardy_extremal(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(hlog::hardy_norm(f, 1.0, false, 1e-8));
}
BENCHMARK(BM_HardyNormH1)->Unit(benchmark::kMillisecond);

void BM_ComputeA(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hlog::compute_A(1e-8).computed);
}
BENCHMARK(BM_ComputeA)->Unit(benchmark::kMillisecond);

void BM_ComputeB(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hlog::compute_B(1e-8).computed);
}
BENCHMARK(BM_ComputeB)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
