#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "aplus/kernels.hpp"
#include "aplus/norms.hpp"
#include "aplus/quadrature.hpp"
#include "aplus/symbols.hpp"

namespace {

using aplus::cplx;
using aplus::Exec;

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_SampleThm1Boundary(benchmark::State& state) {
  const aplus::SymbolHandle h = aplus::build_thm1_symbol();
  const std::size_t count = std::size_t{1} << state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(aplus::boundary_values(h, count, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(count));
}
BENCHMARK(BM_SampleThm1Boundary)->ArgsProduct({{0, 1}, {14, 17}})->Unit(benchmark::kMillisecond);

void BM_SampleSectorBoundary(benchmark::State& state) {
  const aplus::SymbolHandle h = aplus::build_thm2_symbol(2.0);
  const std::size_t count = std::size_t{1} << state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(aplus::boundary_values(h, count, exec_of(state)));
}
BENCHMARK(BM_SampleSectorBoundary)->ArgsProduct({{0, 1}, {12}})->Unit(benchmark::kMillisecond);

void BM_ConvolveDirect(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  std::vector<cplx> a(n), b(n), out(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = {1.0 / (i + 1.0), 0.5};
    b[i] = {std::cos(0.1 * i), std::sin(0.3 * i)};
  }
  for (auto _ : state) {
    aplus::convolve_direct(a, b, out, exec_of(state));
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_ConvolveDirect)->ArgsProduct({{0, 1}, {512, 4096}})->Unit(benchmark::kMicrosecond);

void BM_ArclengthQuadrature(benchmark::State& state) {
  const aplus::SymbolHandle h = aplus::build_thm1_symbol();
  aplus::QuadratureConfig cfg;
  cfg.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(aplus::image_arclength(h, 10, cfg).value);
}
BENCHMARK(BM_ArclengthQuadrature)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
