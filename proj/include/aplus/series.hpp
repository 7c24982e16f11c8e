#pragma once

// Truncated complex power series c_0 + c_1 z + ... + c_M z^M.
//
// The same representation carries Taylor coefficients of maps on the unit
// disk and single-prime Dirichlet coefficients (z = p^{-s}). Every operation
// is a pure function of its inputs; coefficient n of a result depends only on
// input coefficients 0..n, so truncation commutes with the algebra.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "aplus/kernels.hpp"

namespace aplus {

class TruncatedSeries {
 public:
  /// The zero series of order 0.
  TruncatedSeries();
  /// Throws InvalidSeries for an empty or non-finite coefficient list or a
  /// negative truncation bound.
  explicit TruncatedSeries(std::vector<cplx> coeffs, std::optional<double> trunc_bound = {});

  static TruncatedSeries constant(cplx c, std::size_t order);
  /// 1 + z + z^2 + ... + z^order.
  static TruncatedSeries geometric(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  cplx operator[](std::size_t n) const { return coeffs_[n]; }
  std::optional<double> trunc_bound() const noexcept { return trunc_bound_; }

  /// Keeps coefficients 0..order (zero-padding when order exceeds the
  /// current one). The truncation bound is dropped.
  TruncatedSeries truncated(std::size_t order) const;
  /// Horner evaluation of the retained polynomial.
  cplx evaluate(cplx z) const;
  double max_abs() const;

 private:
  std::vector<cplx> coeffs_;
  std::optional<double> trunc_bound_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(cplx k, const TruncatedSeries& a);
TruncatedSeries operator+(cplx k, const TruncatedSeries& a);

struct SeriesOptions {
  /// Orders at or above this use transform-based convolution.
  std::size_t crossover = 512;
  /// |c_0| must exceed this times max |c_n| for log, sqrt and division.
  double zero_threshold = 1e-12;
  /// Principal-branch stages refuse constant terms whose argument is within
  /// this margin of +-pi.
  double branch_margin = 0.01;
  Exec exec = Exec::parallel;
};

enum class AnalyticKind { exp, log, sqrt };

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b,
                           const SeriesOptions& opts = {});
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b,
                           const SeriesOptions& opts = {});
TruncatedSeries series_analytic(AnalyticKind kind, const TruncatedSeries& s,
                                const SeriesOptions& opts = {});
/// Coefficient n of the result is (n+1) c_{n+1}; order drops by one (order-0
/// input gives the zero series of order 0).
TruncatedSeries series_derivative(const TruncatedSeries& s);
/// Antiderivative with constant term c0; order grows by one.
TruncatedSeries series_integral(const TruncatedSeries& s, cplx c0 = {});

struct BoundarySampling {
  double rho = 1.0;
  /// Number of samples; 0 picks the smallest power of two >= 2(M+1).
  std::size_t samples = 0;
  Exec exec = Exec::parallel;
};

/// Taylor coefficients 0..M recovered from equispaced samples on |z| = rho:
/// the discrete Fourier coefficient divided by rho^n. Throws SampleSingularity
/// on any non-finite sample.
TruncatedSeries coeffs_from_boundary(const CircleSampler& sampler, std::size_t order,
                                     const BoundarySampling& sampling = {});
/// Same recovery from precomputed samples at t_j = 2 pi j / P.
TruncatedSeries coeffs_from_samples(std::vector<cplx> values, std::size_t order, double rho = 1.0);

}  // namespace aplus
