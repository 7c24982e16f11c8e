#pragma once

// Boundary quadrature on the unit circle: Gauss-Legendre panels with dyadic
// grading toward declared singular parameters.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "aplus/boundary.hpp"
#include "aplus/kernels.hpp"

namespace aplus {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (cached, thread-safe).
const GaussRule& gauss_legendre(int n);

/// Integral of a smooth function over [a, b] with `panels` equal panels.
template <class F>
auto integrate_gl(F&& f, double a, double b, int panels = 1, int n = 24) {
  const GaussRule& g = gauss_legendre(n);
  const double h = (b - a) / panels;
  decltype(f(a)) acc{};
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int k = 0; k < n; ++k) acc += f(mid + 0.5 * h * g.nodes[k]) * (0.5 * h * g.weights[k]);
  }
  return acc;
}

struct QuadratureConfig {
  /// Gauss-Legendre points per panel.
  int gauss_points = 20;
  /// Sub-panels per dyadic shell at the first refinement.
  int initial_subpanels = 1;
  /// Sub-panel doublings tried before deepening.
  int max_subpanel_doublings = 4;
  /// Dyadic shells toward each singular parameter at the first refinement.
  int initial_depth = 24;
  /// Shells added per deepening step.
  int depth_step = 8;
  /// Deepest grading allowed; reaching it without stabilizing diverges.
  int max_depth = 480;
  /// Successive refinements must differ by less than rel_tol (relative) or
  /// abs_tol (absolute).
  double rel_tol = 1e-3;
  double abs_tol = 1e-9;
  Exec exec = Exec::parallel;
};

struct QuadratureResult {
  double value = 0.0;
  /// |last - previous| refinement difference.
  double error_estimate = 0.0;
  int depth = 0;
  int subpanels = 0;
  int refinements = 0;
  bool converged = false;
  /// Refinement history, in order.
  std::vector<double> history;
};

/// Integral over t in [0, 2pi) of a non-negative integrand given on boundary
/// parameters. The circle is split at the declared singular parameters; each
/// piece is halved and each half graded dyadically toward its singular end,
/// nodes never touching the singular parameter itself. Refinement first
/// doubles sub-panels at fixed depth, then deepens the grading; reported
/// values are those of the last refinement. Does not throw on divergence;
/// inspect `converged`.
QuadratureResult integrate_circle(const std::function<double(const BoundaryParam&)>& integrand,
                                  std::span<const double> singular_params, const QuadratureConfig& cfg = {});

}  // namespace aplus
