#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aplus/norms.hpp"
#include "aplus/series.hpp"
#include "aplus/symbols.hpp"

namespace aplus {

enum class CoefficientRoute {
  trivial,   // N = 1
  boundary,  // unit-circle samples of the closed form
  formal,    // series exp(-ln N * f)
  interior,  // samples on a circle of radius < 1
};

struct BasisImageConfig {
  std::size_t check_indices = 1024;
  double route_tol = 1e-8;
  /// Samples per coefficient on the unit circle, with a floor that keeps
  /// aliasing below the route tolerance at small orders.
  std::size_t oversample = 8;
  std::size_t min_samples = 1 << 19;
  /// Interior cross-check radius and index range when no second exact route exists.
  double interior_rho = 0.9;
  std::size_t interior_indices = 64;
  double interior_tol = 1e-8;
  std::vector<std::size_t> schedule;  // empty: {M/4, M/2, M}
  SeriesOptions series;
  Exec exec = Exec::parallel;
};

/// Coefficients of F_N = N^{-f}, i.e. the Dirichlet coefficients of N^{-phi}
/// on powers of the prime base.
struct BasisImage {
  int N = 1;
  TruncatedSeries series;
  AplusNormResult aplus;
  CoefficientRoute route = CoefficientRoute::trivial;
  CoefficientRoute check_route = CoefficientRoute::trivial;
  /// True when the returned coefficients passed a cross-check against an
  /// exact second route on the unit circle.
  bool certified = false;
  /// max |difference| over the cross-checked indices.
  double route_defect = 0.0;
  std::size_t checked_indices = 0;
};

/// Throws RouteDisagreement when the two routes differ by more than the
/// configured tolerance on the checked indices.
BasisImage basis_image(const SymbolHandle& h, int N, std::size_t order, const BasisImageConfig& cfg = {});

struct HarnessConfig {
  NormTableConfig table;
  double growth_multiple = 10.0;
  double decay_threshold = 0.05;
};

enum class Evidence { bounded, unbounded, inconclusive };
std::string to_string(Evidence e);

struct BoundednessReport {
  Evidence verdict = Evidence::inconclusive;
  NormTable table;
  /// last / first truncated norm.
  double growth_ratio = 0.0;
  bool truncated_monotone = false;
  bool certified_available = false;
  /// First N from which certified bounds decrease through N_max.
  std::optional<int> decreasing_from;
};

/// Norm table over N = 2..N_max with an evidence verdict for
/// sup_N ||N^{-phi}|| < infinity.
BoundednessReport boundedness_check(const SymbolHandle& h, int N_max, const HarnessConfig& cfg = {});
BoundednessReport assess_boundedness(NormTable table, const HarnessConfig& cfg = {});

struct CompactnessReport {
  NormTable table;
  /// max over rows of certified * N / ln N.
  std::optional<double> c_fit;
  std::optional<double> last_certified;
  std::optional<int> decreasing_from;
  bool below_threshold = false;
  /// Decay evidence: finite c_fit, eventually decreasing, last value below the threshold.
  bool decays = false;
};

CompactnessReport compactness_check(const SymbolHandle& h, std::span<const int> N_list, const HarnessConfig& cfg = {});
CompactnessReport assess_compactness(NormTable table, const HarnessConfig& cfg = {});

struct L2Report {
  int N_max = 0;
  /// sum_{N=2}^{N_max} certified(N)^2, summed in ascending N.
  double partial_sum = 0.0;
  /// c_fit^2 (ln^2 N + 2 ln N + 2) / N at N = N_max.
  double tail_bound = 0.0;
  double total = 0.0;
  /// tail_bound / partial_sum.
  double tail_fraction = 0.0;
  double c_fit = 0.0;
};

L2Report l2_summability(const SymbolHandle& h, int N_max, const HarnessConfig& cfg = {});
/// Same sums from precomputed rows in any order; rows must carry certified bounds.
L2Report l2_summability(std::span<const NormRow> rows);

/// Bound on sum_{N > N_max} (ln N)^2 / N^2 by comparison with the integral.
double log_square_tail(int N_max);

using DirichletCoefficients = std::map<std::uint64_t, cplx>;

/// a_k -> index base^k. Throws IndexOverflow if base^order does not fit in 64 bits.
DirichletCoefficients bohr_lift_single_prime(const TruncatedSeries& series, int base);
double dirichlet_norm(const DirichletCoefficients& coeffs);

}  // namespace aplus
