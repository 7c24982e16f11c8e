#include "aplus/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aplus/errors.hpp"

namespace aplus {

namespace {

std::vector<std::size_t> schedule_for(std::size_t order, const std::vector<std::size_t>& requested) {
  if (!requested.empty()) return requested;
  return {std::max<std::size_t>(order / 4, 1), std::max<std::size_t>(order / 2, 1), order};
}

double max_difference(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t last) {
  double d = 0.0;
  for (std::size_t n = 0; n <= last; ++n) d = std::max(d, std::abs(a[n] - b[n]));
  return d;
}

TruncatedSeries interior_coefficients(const SymbolHandle& h, double ln_n, const BasisImageConfig& cfg) {
  constexpr std::size_t kInteriorSamples = 4096;
  BoundarySampling sampling{cfg.interior_rho, kInteriorSamples, cfg.exec};
  return coeffs_from_boundary([&](const CirclePoint& p) { return std::exp(-ln_n * h.eval_disk(p.z)); },
                              cfg.interior_indices, sampling);
}

// Index of the first row from which the values strictly decrease to the end,
// or nullopt when the last two values do not decrease.
std::optional<std::size_t> decreasing_tail(const std::vector<double>& v) {
  if (v.size() < 2 || !(v[v.size() - 1] < v[v.size() - 2])) return std::nullopt;
  std::size_t i = v.size() - 2;
  while (i > 0 && v[i - 1] > v[i]) --i;
  return i;
}

}  // namespace

std::string to_string(Evidence e) {
  switch (e) {
    case Evidence::bounded: return "bounded-evidence";
    case Evidence::unbounded: return "unbounded-evidence";
    case Evidence::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

BasisImage basis_image(const SymbolHandle& h, int N, std::size_t order, const BasisImageConfig& cfg) {
  require(N >= 1, "basis index N must be >= 1");
  require(order >= 1, "order must be >= 1");
  BasisImage img;
  img.N = N;
  const std::vector<std::size_t> schedule = schedule_for(order, cfg.schedule);

  if (N == 1) {
    std::vector<cplx> c(order + 1);
    c[0] = 1.0;
    img.series = TruncatedSeries(std::move(c), 0.0);
    img.certified = true;
    img.aplus = aplus_norm(img.series, schedule);
    return img;
  }

  const double ln_n = std::log(static_cast<double>(N));
  std::optional<TruncatedSeries> formal;
  if (h.continuous_on_boundary()) {
    PowerCoefficientConfig pc{cfg.oversample, cfg.min_samples, cfg.series, cfg.exec};
    img.series = power_coefficients_boundary(h, N, order, pc);
    img.route = CoefficientRoute::boundary;
    formal = power_coefficients_formal(h, N, order, cfg.series);
    if (formal) {
      img.check_route = CoefficientRoute::formal;
      img.checked_indices = std::min(cfg.check_indices, order);
      img.route_defect = max_difference(img.series, *formal, img.checked_indices);
      if (!(img.route_defect <= cfg.route_tol))
        fail(ErrorKind::RouteDisagreement, "boundary and formal coefficients of N^{-f} differ by " +
                                               std::to_string(img.route_defect) + " for N = " + std::to_string(N));
      img.certified = true;
    }
  } else {
    formal = power_coefficients_formal(h, N, order, cfg.series);
    if (!formal)
      fail(ErrorKind::SampleSingularity,
           family_name(h.spec()) + " symbol has neither a boundary extension nor a formal series");
    img.series = std::move(*formal);
    img.route = CoefficientRoute::formal;
  }

  if (img.check_route == CoefficientRoute::trivial) {
    const TruncatedSeries inner = interior_coefficients(h, ln_n, cfg);
    img.check_route = CoefficientRoute::interior;
    img.checked_indices = std::min(cfg.interior_indices, order);
    img.route_defect = max_difference(img.series, inner, img.checked_indices);
    if (!(img.route_defect <= cfg.interior_tol))
      fail(ErrorKind::RouteDisagreement, "interior samples disagree with the coefficient route by " +
                                             std::to_string(img.route_defect) + " for N = " + std::to_string(N));
    // An interior circle only sees the low coefficients.
    img.certified = false;
  }
  img.aplus = aplus_norm(img.series, schedule);
  return img;
}

BoundednessReport boundedness_check(const SymbolHandle& h, int N_max, const HarnessConfig& cfg) {
  require(N_max >= 4, "boundedness check needs N_max >= 4");
  std::vector<int> ns;
  for (int n = 2; n <= N_max; ++n) ns.push_back(n);
  return assess_boundedness(norm_table(h, ns, cfg.table), cfg);
}

BoundednessReport assess_boundedness(NormTable table, const HarnessConfig& cfg) {
  require(table.rows.size() >= 2, "boundedness check needs at least two rows");
  BoundednessReport rep;
  rep.table = std::move(table);

  std::vector<double> truncated, certified;
  rep.certified_available = true;
  for (const NormRow& r : rep.table.rows) {
    truncated.push_back(r.aplus.truncated_norm);
    if (r.aplus.certified_upper && std::isfinite(*r.aplus.certified_upper))
      certified.push_back(*r.aplus.certified_upper);
    else
      rep.certified_available = false;
  }
  rep.truncated_monotone = std::adjacent_find(truncated.begin(), truncated.end(), std::greater_equal<>()) ==
                           truncated.end();
  rep.growth_ratio = truncated.back() / std::max(truncated.front(), std::numeric_limits<double>::min());

  if (rep.certified_available) {
    if (auto i = decreasing_tail(certified)) rep.decreasing_from = rep.table.rows[*i].N;
  }
  if (rep.truncated_monotone && rep.growth_ratio >= cfg.growth_multiple)
    rep.verdict = Evidence::unbounded;
  else if (rep.certified_available && rep.decreasing_from)
    rep.verdict = Evidence::bounded;
  return rep;
}

CompactnessReport compactness_check(const SymbolHandle& h, std::span<const int> N_list, const HarnessConfig& cfg) {
  require(!N_list.empty(), "compactness check needs at least one N");
  for (int n : N_list) require(n >= 2, "compactness check needs N >= 2");
  return assess_compactness(norm_table(h, N_list, cfg.table), cfg);
}

CompactnessReport assess_compactness(NormTable table, const HarnessConfig& cfg) {
  require(!table.rows.empty(), "compactness check needs at least one row");
  CompactnessReport rep;
  rep.table = std::move(table);
  rep.c_fit = rep.table.c_fit;

  std::vector<double> certified;
  for (const NormRow& r : rep.table.rows) {
    if (!r.aplus.certified_upper) return rep;
    certified.push_back(*r.aplus.certified_upper);
  }
  rep.last_certified = certified.back();
  if (auto i = decreasing_tail(certified)) rep.decreasing_from = rep.table.rows[*i].N;
  rep.below_threshold = *rep.last_certified < cfg.decay_threshold;
  rep.decays = rep.c_fit && std::isfinite(*rep.c_fit) && rep.decreasing_from && rep.below_threshold;
  return rep;
}

double log_square_tail(int N_max) {
  require(N_max >= 3, "tail comparison needs N_max >= 3");
  const double l = std::log(static_cast<double>(N_max));
  return (l * l + 2.0 * l + 2.0) / N_max;
}

L2Report l2_summability(std::span<const NormRow> rows) {
  std::vector<const NormRow*> sorted;
  for (const NormRow& r : rows) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const NormRow* a, const NormRow* b) { return a->N < b->N; });
  require(!sorted.empty(), "no rows");

  L2Report rep;
  std::vector<double> squares;
  for (const NormRow* r : sorted) {
    if (!r->aplus.certified_upper || !r->c_fit)
      fail(ErrorKind::InvalidArgument, "row N = " + std::to_string(r->N) + " has no certified bound");
    squares.push_back(*r->aplus.certified_upper * *r->aplus.certified_upper);
    rep.c_fit = std::max(rep.c_fit, *r->c_fit);
  }
  rep.N_max = sorted.back()->N;
  rep.partial_sum = ordered_sum(squares);
  rep.tail_bound = rep.c_fit * rep.c_fit * log_square_tail(rep.N_max);
  rep.total = rep.partial_sum + rep.tail_bound;
  rep.tail_fraction = rep.tail_bound / rep.partial_sum;
  return rep;
}

L2Report l2_summability(const SymbolHandle& h, int N_max, const HarnessConfig& cfg) {
  require(N_max >= 8, "l2 summability needs N_max >= 8");
  std::vector<int> ns;
  for (int n = 2; n <= N_max; ++n) ns.push_back(n);
  const NormTable table = norm_table(h, ns, cfg.table);
  return l2_summability(table.rows);
}

DirichletCoefficients bohr_lift_single_prime(const TruncatedSeries& series, int base) {
  require(base >= 2, "prime base must be >= 2");
  DirichletCoefficients out;
  std::uint64_t index = 1;
  const std::uint64_t b = static_cast<std::uint64_t>(base);
  for (std::size_t k = 0; k <= series.order(); ++k) {
    out.emplace(index, series[k]);
    if (k == series.order()) break;
    if (index > std::numeric_limits<std::uint64_t>::max() / b)
      fail(ErrorKind::IndexOverflow, std::to_string(base) + "^" + std::to_string(k + 1) +
                                         " exceeds 64-bit Dirichlet indices; last representable power is k = " +
                                         std::to_string(k));
    index *= b;
  }
  return out;
}

double dirichlet_norm(const DirichletCoefficients& coeffs) {
  std::vector<double> mags;
  mags.reserve(coeffs.size());
  for (const auto& [n, a] : coeffs) mags.push_back(std::abs(a));
  return ordered_sum(mags);
}

}  // namespace aplus
