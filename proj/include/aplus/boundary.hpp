#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace aplus {

/// Point e^{it} of the unit circle with t = anchor + offset.
///
/// Quadrature nodes graded toward a singular parameter are stored as
/// (singular parameter, tiny offset) so the offset survives even when it is
/// far below the spacing of doubles near the anchor.
struct BoundaryParam {
  double anchor = 0.0;
  double offset = 0.0;

  double value() const { return anchor + offset; }
  BoundaryParam mirrored() const { return {-anchor, -offset}; }
};

/// t - theta reduced to [-pi, pi]; exact when anchor == theta.
inline double offset_from(const BoundaryParam& p, double theta) {
  double d = std::remainder(p.anchor - theta, 2.0 * std::numbers::pi) + p.offset;
  if (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
  if (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
  return d;
}

/// e^{it} - e^{i theta} without cancellation when t is close to theta.
inline std::complex<double> chord(const BoundaryParam& p, double theta) {
  const double d = offset_from(p, theta);
  const std::complex<double> i{0.0, 1.0};
  return std::polar(1.0, theta + 0.5 * d) * (2.0 * i * std::sin(0.5 * d));
}

inline std::complex<double> unit_point(const BoundaryParam& p) {
  return std::polar(1.0, p.value());
}

/// Boundary value f(e^{it}) and its derivative d/dt f(e^{it}) = i e^{it} f'(e^{it}).
struct BoundaryJet {
  std::complex<double> value;
  std::complex<double> d_dt;
};

}  // namespace aplus
