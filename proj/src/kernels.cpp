#include "aplus/kernels.hpp"

#include <cmath>
#include <numbers>

#include <omp.h>

namespace aplus {

void convolve_direct(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out,
                     Exec exec) {
  const auto n_out = static_cast<std::ptrdiff_t>(out.size());
  const auto na = static_cast<std::ptrdiff_t>(a.size());
  const auto nb = static_cast<std::ptrdiff_t>(b.size());
  auto body = [&](std::ptrdiff_t n) {
    cplx acc{0.0, 0.0};
    const std::ptrdiff_t j_lo = std::max<std::ptrdiff_t>(0, n - nb + 1);
    const std::ptrdiff_t j_hi = std::min<std::ptrdiff_t>(n, na - 1);
    for (std::ptrdiff_t j = j_lo; j <= j_hi; ++j) acc += a[j] * b[n - j];
    out[n] = acc;
  };
  if (exec == Exec::parallel && n_out > 256) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t n = 0; n < n_out; ++n) body(n);
  } else {
    for (std::ptrdiff_t n = 0; n < n_out; ++n) body(n);
  }
}

namespace {

CirclePoint grid_point(std::size_t j, std::size_t count, double rho) {
  const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count);
  return {std::polar(rho, t), t};
}

}  // namespace

std::vector<cplx> sample_circle(const CircleSampler& sampler, std::size_t count, double rho,
                                Exec exec) {
  std::vector<cplx> values(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) values[j] = sampler(grid_point(j, count, rho));
  } else {
    for (std::ptrdiff_t j = 0; j < n; ++j) values[j] = sampler(grid_point(j, count, rho));
  }
  return values;
}

std::vector<double> evaluate_indexed(const std::function<double(std::size_t)>& fn, std::size_t count,
                                     Exec exec) {
  std::vector<double> values(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) values[i] = fn(static_cast<std::size_t>(i));
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) values[i] = fn(static_cast<std::size_t>(i));
  }
  return values;
}

double ordered_sum(std::span<const double> values) {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

void set_workers(int workers) {
  if (workers > 0) omp_set_num_threads(workers);
}

int max_workers() { return omp_get_max_threads(); }

}  // namespace aplus
