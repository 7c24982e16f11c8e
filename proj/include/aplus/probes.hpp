#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aplus/series.hpp"
#include "aplus/symbols.hpp"

namespace aplus {

enum class PathShape { radial, parabolic, custom };

/// A path s_k in the right half-plane approaching the boundary point i*a.
/// Radial: s = sigma + i a with sigma geometric from sigma_start to sigma_end.
/// Parabolic: s = t^2 + i (a + t) with t geometric from t_start to t_end.
struct PathSpec {
  double a = 0.0;
  PathShape shape = PathShape::radial;
  double sigma_start = 1e-1;
  double sigma_end = 1e-12;
  double t_start = 1e-1;
  double t_end = 1e-6;
  std::vector<cplx> custom;
};

/// K points of the path (custom paths return their samples unchanged).
std::vector<cplx> path_points(const PathSpec& path, std::size_t K);

enum class ProbeKind { limit, re_divergence, oscillation, inconclusive };
std::string to_string(ProbeKind k);

struct ProbeConfig {
  double limit_tol = 1e-6;
  double modulus_variation_tol = 0.10;
};

struct ProbeVerdict {
  ProbeKind kind = ProbeKind::inconclusive;
  std::optional<cplx> value;
  /// Largest distance between two tail values.
  double tail_diameter = 0.0;
  /// Same for the Aitken-accelerated tail.
  double extrapolated_diameter = 0.0;
  /// Total argument variation of phi - center over the tail, in radians.
  double tail_arg_range = 0.0;
  /// Mean |phi - center| over the tail, center = least-squares circle center.
  double tail_modulus = 0.0;
  /// (max - min) / mean of |phi - center| over the tail.
  double tail_modulus_variation = 0.0;
  std::size_t samples = 0;
};

/// Evaluates phi(s) along the path and classifies the last K/4 values.
ProbeVerdict limit_probe(const SymbolHandle& h, const PathSpec& path, std::size_t K = 256,
                         const ProbeConfig& cfg = {});
/// Classification of an already sampled sequence (at least 32 values).
ProbeVerdict classify_tail(std::span<const cplx> values, const ProbeConfig& cfg = {});

struct LogFitConfig {
  double center = 1.5707963267948966;
  std::vector<int> exponents = {2, 3, 4, 5, 6};  // half-widths 10^{-k}
  double margin = 1e-9;
  std::size_t samples_per_side = 64;
  double slope_tol = 0.05;
  /// Slopes below this magnitude count as zero.
  double zero_slope = 1e-8;
};

struct LogFitWindow {
  double half_width = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  /// sup |Re f - slope * log|e^{i c} - e^{it}|| over the window.
  double g_sup = 0.0;
  /// sup of the least-squares residual.
  double residual_sup = 0.0;
};

struct LogFitResult {
  double alpha = 0.0;
  double g_sup = 0.0;
  std::vector<LogFitWindow> windows;
};

/// Least-squares fit of Re f(e^{it}) against log|e^{ic} - e^{it}| on nested
/// windows around the parameter c. Throws FitUnstable when window slopes
/// differ by more than slope_tol relative to the innermost one.
LogFitResult log_singularity_fit(const SymbolHandle& h, const LogFitConfig& cfg = {});

enum class DivergenceVerdict { no_convergence_detected, stabilizing };
std::string to_string(DivergenceVerdict v);

struct DivergenceReport {
  std::vector<std::size_t> orders;
  std::vector<double> partial_sums;
  /// partial_sums[i + 1] - partial_sums[i].
  std::vector<double> increments;
  /// Least-squares fit partial_sum ~ kappa ln M + c.
  double kappa = 0.0;
  double intercept = 0.0;
  DivergenceVerdict verdict = DivergenceVerdict::stabilizing;
};

using SeriesSupplier = std::function<TruncatedSeries(std::size_t order)>;

/// Partial sums of |a_n| on a strictly increasing schedule of at least three
/// orders; "no convergence detected" when every block increment exceeds delta.
DivergenceReport aplus_divergence_probe(const SeriesSupplier& supplier, std::span<const std::size_t> schedule,
                                        double delta = 1e-3);

}  // namespace aplus
