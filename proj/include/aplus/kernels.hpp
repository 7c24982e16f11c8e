#pragma once

// Data-parallel inner loops. Each kernel has a serial reference path and an
// OpenMP path; both write results by index so the parallel path is
// bit-identical to the serial one. Reductions are always done serially in
// index order on the gathered values.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace aplus {

using cplx = std::complex<double>;

enum class Exec { serial, parallel };

/// out[n] = sum_{j=0}^{n} a[j] * b[n-j] for n < out.size(); missing entries of
/// a or b count as zero.
void convolve_direct(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out,
                     Exec exec = Exec::parallel);

/// Point on a sampling circle: z = rho * exp(i t).
struct CirclePoint {
  cplx z;
  double t;
};

using CircleSampler = std::function<cplx(const CirclePoint&)>;

/// Samples at the P equispaced points t_j = 2 pi j / P of the circle |z| = rho.
std::vector<cplx> sample_circle(const CircleSampler& sampler, std::size_t count, double rho,
                                Exec exec = Exec::parallel);

/// values[i] = fn(i) for i < count.
std::vector<double> evaluate_indexed(const std::function<double(std::size_t)>& fn, std::size_t count,
                                     Exec exec = Exec::parallel);

/// Left-to-right sum; the single reduction order used everywhere.
double ordered_sum(std::span<const double> values);

/// Sets the OpenMP worker count (0 keeps the runtime default).
void set_workers(int workers);
int max_workers();

}  // namespace aplus
