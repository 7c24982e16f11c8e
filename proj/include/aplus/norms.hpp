#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "aplus/quadrature.hpp"
#include "aplus/series.hpp"
#include "aplus/symbols.hpp"

namespace aplus {

struct PartialSum {
  std::size_t order;
  double value;
};

struct AplusNormResult {
  /// sum_{n <= M} |a_n| at the largest scheduled order M.
  double truncated_norm = 0.0;
  std::size_t order = 0;
  /// Hardy-route bound on the full norm, when one is available.
  std::optional<double> certified_upper;
  /// |last - previous| / max(last, eps) over the schedule.
  double stabilization = 0.0;
  std::vector<PartialSum> partial_sums;
};

/// Partial sums of |a_n| at each scheduled order (orders above the series
/// order are clamped to it). An empty schedule means {series.order()}.
AplusNormResult aplus_norm(const TruncatedSeries& series, std::span<const std::size_t> schedule = {});

/// Default truncation schedule {2^12, 2^14, 2^16}.
std::vector<std::size_t> default_schedule();
/// Relative stabilization below which a truncated norm counts as converged.
inline constexpr double kConvergedStabilization = 1e-4;

using JetFn = std::function<BoundaryJet(const BoundaryParam&)>;

/// Boundary jet of N^{-f} from that of f: value exp(-f ln N) and derivative
/// -ln N f_t exp(-f ln N). +inf real parts map to the limit value 0.
BoundaryJet power_jet(const BoundaryJet& f, double ln_n);

struct HardyBound {
  double value = 0.0;
  double center_abs = 0.0;
  QuadratureResult arclength;
};

/// |F(0)| + (1/2) ∫_0^{2pi} |d/dt F(e^{it})| dt, an upper bound for the A+
/// norm of F through Hardy's coefficient inequality applied to F'. Throws
/// QuadratureDivergence when the arclength quadrature does not stabilize.
HardyBound hardy_upper_bound(const JetFn& F, cplx center, std::span<const double> singular_params,
                             const QuadratureConfig& cfg = {});

struct HpNormResult {
  double value = 0.0;
  double error_estimate = 0.0;
  QuadratureResult quadrature;
};

/// ((1/2pi) ∫ |f(e^{it})|^p dt)^{1/p} by graded quadrature avoiding the
/// declared singular parameters. Throws QuadratureDivergence when the graded
/// refinements do not stabilize.
HpNormResult hp_norm(const std::function<cplx(const BoundaryParam&)>& eval, double p,
                     std::span<const double> singular_params, const QuadratureConfig& cfg = {});
/// Same integral, never throwing; for divergence reporting.
QuadratureResult hp_integral(const std::function<cplx(const BoundaryParam&)>& eval, double p,
                             std::span<const double> singular_params, const QuadratureConfig& cfg = {});

/// ∫_0^{2pi} |d/dt F_N(e^{it})| dt for F_N = N^{-f}; 0 for N = 1. Throws
/// QuadratureDivergence on failure and SampleSingularity for symbols without
/// a continuous boundary extension.
QuadratureResult image_arclength(const SymbolHandle& h, int N, const QuadratureConfig& cfg = {});

/// Closed-form arclength where the image boundary is known: 2/N + 2pi ln N / N
/// for the half-strip map, (2/cos b)/N + (tan b / pi) ln N / N for the sector
/// cap, 0 for constants.
std::optional<double> predicted_arclength(const SymbolHandle& h, int N);

/// F_N(0) = N^{-f(0)}.
cplx power_center(const SymbolHandle& h, int N);

struct PowerCoefficientConfig {
  /// Samples per coefficient for the boundary route (power of two >= 2).
  std::size_t oversample = 2;
  /// Floor on the sample count (power of two; 0 for none).
  std::size_t min_samples = 0;
  SeriesOptions series;
  Exec exec = Exec::parallel;
};

/// Sample count used by the boundary route for order M.
std::size_t boundary_sample_count(std::size_t order, const PowerCoefficientConfig& cfg);
/// f(e^{it_j}) at t_j = 2 pi j / count; +inf real parts are kept.
std::vector<cplx> boundary_values(const SymbolHandle& h, std::size_t count, Exec exec = Exec::parallel);
/// Coefficients 0..M of N^{-f} from boundary values of f.
TruncatedSeries power_coefficients_from_values(std::span<const cplx> f_values, int N, std::size_t order);

/// Taylor coefficients 0..M of F_N = N^{-f} sampled on the unit circle
/// (requires a continuous boundary extension).
TruncatedSeries power_coefficients_boundary(const SymbolHandle& h, int N, std::size_t order,
                                            const PowerCoefficientConfig& cfg = {});
/// Same coefficients as exp(-ln N * f-series), when a formal route exists.
std::optional<TruncatedSeries> power_coefficients_formal(const SymbolHandle& h, int N, std::size_t order,
                                                         const SeriesOptions& opts = {});

struct NormRow {
  int N = 2;
  AplusNormResult aplus;
  /// Measured arclength; nullopt when the boundary is not rectifiable.
  std::optional<double> arclength;
  std::optional<double> predicted_arclength;
  std::optional<double> hardy_bound;
  /// certified_upper * N / ln N.
  std::optional<double> c_fit;
  /// |measured - predicted| / predicted.
  std::optional<double> rel_err;
};

struct NormTable {
  std::vector<NormRow> rows;
  /// sup over rows of the c_fit column.
  std::optional<double> c_fit;
};

struct NormTableConfig {
  std::size_t order = 1 << 12;
  std::vector<std::size_t> schedule;  // empty: {order/4, order/2, order}
  QuadratureConfig quadrature;
  PowerCoefficientConfig coefficients;
};

/// One row per N (ascending, N >= 2).
NormTable norm_table(const SymbolHandle& h, std::span<const int> N_list, const NormTableConfig& cfg = {});
NormRow norm_row(const SymbolHandle& h, int N, const NormTableConfig& cfg = {});

}  // namespace aplus
