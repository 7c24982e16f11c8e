#include "aplus/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <string>
#include <type_traits>
#include <variant>

#include "aplus/errors.hpp"

namespace aplus {

std::vector<std::size_t> default_schedule() { return {1u << 12, 1u << 14, 1u << 16}; }

AplusNormResult aplus_norm(const TruncatedSeries& series, std::span<const std::size_t> schedule) {
  std::vector<std::size_t> orders(schedule.begin(), schedule.end());
  if (orders.empty()) orders.push_back(series.order());
  for (std::size_t& m : orders) m = std::min(m, series.order());
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());

  AplusNormResult res;
  double acc = 0.0;
  std::size_t n = 0;
  for (std::size_t m : orders) {
    for (; n <= m; ++n) acc += std::abs(series[n]);
    res.partial_sums.push_back({m, acc});
  }
  res.truncated_norm = acc;
  res.order = orders.back();
  if (res.partial_sums.size() >= 2) {
    const double prev = res.partial_sums[res.partial_sums.size() - 2].value;
    res.stabilization = std::abs(acc - prev) / std::max(acc, 1e-300);
  }
  return res;
}

BoundaryJet power_jet(const BoundaryJet& f, double ln_n) {
  if (f.value.real() == std::numeric_limits<double>::infinity()) return {{0.0, 0.0}, {0.0, 0.0}};
  const cplx F = std::exp(-ln_n * f.value);
  if (F == cplx{}) return {F, {0.0, 0.0}};
  return {F, -ln_n * f.d_dt * F};
}

HardyBound hardy_upper_bound(const JetFn& F, cplx center, std::span<const double> singular_params,
                             const QuadratureConfig& cfg) {
  HardyBound hb;
  hb.center_abs = std::abs(center);
  hb.arclength = integrate_circle([&](const BoundaryParam& t) { return std::abs(F(t).d_dt); }, singular_params, cfg);
  if (!hb.arclength.converged)
    fail(ErrorKind::QuadratureDivergence,
         "arclength integral did not stabilize (last change " + std::to_string(hb.arclength.error_estimate) + ")");
  hb.value = hb.center_abs + 0.5 * hb.arclength.value;
  return hb;
}

QuadratureResult hp_integral(const std::function<cplx(const BoundaryParam&)>& eval, double p,
                             std::span<const double> singular_params, const QuadratureConfig& cfg) {
  require(p >= 1.0, "H^p norm needs p >= 1");
  const double inv_2pi = 0.5 / std::numbers::pi;
  return integrate_circle([&](const BoundaryParam& t) { return inv_2pi * std::pow(std::abs(eval(t)), p); },
                          singular_params, cfg);
}

HpNormResult hp_norm(const std::function<cplx(const BoundaryParam&)>& eval, double p,
                     std::span<const double> singular_params, const QuadratureConfig& cfg) {
  HpNormResult res;
  res.quadrature = hp_integral(eval, p, singular_params, cfg);
  if (!res.quadrature.converged)
    fail(ErrorKind::QuadratureDivergence, "H^" + std::to_string(p) + " integral did not stabilize at depth " +
                                              std::to_string(res.quadrature.depth));
  res.value = std::pow(res.quadrature.value, 1.0 / p);
  // d(I^{1/p}) = I^{1/p} dI / (p I)
  res.error_estimate = res.value * res.quadrature.error_estimate / (p * std::max(res.quadrature.value, 1e-300));
  return res;
}

QuadratureResult image_arclength(const SymbolHandle& h, int N, const QuadratureConfig& cfg) {
  require(N >= 1, "arclength needs N >= 1");
  if (N == 1) {
    QuadratureResult zero;
    zero.converged = true;
    zero.history = {0.0};
    return zero;
  }
  if (!h.continuous_on_boundary())
    fail(ErrorKind::SampleSingularity, family_name(h.spec()) + " symbol has no continuous boundary extension");
  const double ln_n = std::log(static_cast<double>(N));
  const std::vector<double> sing = h.singular_params();
  QuadratureResult r = integrate_circle(
      [&](const BoundaryParam& t) { return std::abs(power_jet(h.boundary(t), ln_n).d_dt); }, sing, cfg);
  if (!r.converged)
    fail(ErrorKind::QuadratureDivergence, "arclength for N = " + std::to_string(N) + " did not stabilize");
  return r;
}

std::optional<double> predicted_arclength(const SymbolHandle& h, int N) {
  const double n = static_cast<double>(N);
  const double ln_n = std::log(n);
  return std::visit(
      [&](const auto& s) -> std::optional<double> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Thm1Spec>) return 2.0 / n + 2.0 * std::numbers::pi * ln_n / n;
        if constexpr (std::is_same_v<T, Thm2Spec>)
          return 2.0 / (std::cos(s.beta) * n) + std::tan(s.beta) / std::numbers::pi * ln_n / n;
        if constexpr (std::is_same_v<T, ConstantSpec>) return 0.0;
        return std::nullopt;
      },
      h.spec());
}

cplx power_center(const SymbolHandle& h, int N) {
  return std::exp(-std::log(static_cast<double>(N)) * h.eval_disk(0.0));
}

std::size_t boundary_sample_count(std::size_t order, const PowerCoefficientConfig& cfg) {
  require(cfg.oversample >= 2 && (cfg.oversample & (cfg.oversample - 1)) == 0,
          "oversample must be a power of two >= 2");
  std::size_t count = 1;
  while (count < order + 1) count <<= 1;
  return std::max(count * cfg.oversample, cfg.min_samples);
}

std::vector<cplx> boundary_values(const SymbolHandle& h, std::size_t count, Exec exec) {
  if (!h.continuous_on_boundary())
    fail(ErrorKind::SampleSingularity, family_name(h.spec()) + " symbol has no continuous boundary extension");
  return sample_circle([&](const CirclePoint& p) { return h.boundary({p.t, 0.0}).value; }, count, 1.0, exec);
}

TruncatedSeries power_coefficients_from_values(std::span<const cplx> f_values, int N, std::size_t order) {
  require(N >= 1, "basis index must be >= 1");
  const double ln_n = std::log(static_cast<double>(N));
  std::vector<cplx> F(f_values.size());
  for (std::size_t j = 0; j < F.size(); ++j) F[j] = power_jet({f_values[j], {}}, ln_n).value;
  return coeffs_from_samples(std::move(F), order);
}

TruncatedSeries power_coefficients_boundary(const SymbolHandle& h, int N, std::size_t order,
                                            const PowerCoefficientConfig& cfg) {
  require(N >= 1, "basis index must be >= 1");
  const std::size_t count = boundary_sample_count(order, cfg);
  return power_coefficients_from_values(boundary_values(h, count, cfg.exec), N, order);
}

std::optional<TruncatedSeries> power_coefficients_formal(const SymbolHandle& h, int N, std::size_t order,
                                                         const SeriesOptions& opts) {
  std::optional<TruncatedSeries> f = h.series(order, opts);
  if (!f) return std::nullopt;
  const double ln_n = std::log(static_cast<double>(N));
  return series_analytic(AnalyticKind::exp, cplx{-ln_n, 0.0} * *f, opts);
}

namespace {

NormRow make_row(const SymbolHandle& h, int N, const NormTableConfig& cfg, const std::vector<cplx>* f_values) {
  require(N >= 2, "norm table rows need N >= 2");
  NormRow row;
  row.N = N;
  TruncatedSeries coeffs;
  if (f_values) {
    coeffs = power_coefficients_from_values(*f_values, N, cfg.order);
  } else if (auto formal = power_coefficients_formal(h, N, cfg.order, cfg.coefficients.series)) {
    coeffs = std::move(*formal);
  } else {
    fail(ErrorKind::SampleSingularity, "no coefficient route for " + family_name(h.spec()));
  }
  std::vector<std::size_t> schedule = cfg.schedule;
  if (schedule.empty())
    schedule = {std::max<std::size_t>(cfg.order / 4, 1), std::max<std::size_t>(cfg.order / 2, 1), cfg.order};
  row.aplus = aplus_norm(coeffs, schedule);
  row.predicted_arclength = predicted_arclength(h, N);
  if (h.continuous_on_boundary()) {
    const double len = image_arclength(h, N, cfg.quadrature).value;
    row.arclength = len;
    row.hardy_bound = std::abs(power_center(h, N)) + 0.5 * len;
    row.aplus.certified_upper = row.hardy_bound;
    row.c_fit = *row.hardy_bound * N / std::log(static_cast<double>(N));
    if (row.predicted_arclength && *row.predicted_arclength > 0.0)
      row.rel_err = std::abs(len - *row.predicted_arclength) / *row.predicted_arclength;
  }
  return row;
}

}  // namespace

NormRow norm_row(const SymbolHandle& h, int N, const NormTableConfig& cfg) {
  std::vector<cplx> values;
  if (h.continuous_on_boundary())
    values = boundary_values(h, boundary_sample_count(cfg.order, cfg.coefficients), cfg.coefficients.exec);
  return make_row(h, N, cfg, h.continuous_on_boundary() ? &values : nullptr);
}

NormTable norm_table(const SymbolHandle& h, std::span<const int> N_list, const NormTableConfig& cfg) {
  std::vector<int> ns(N_list.begin(), N_list.end());
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  // Boundary samples of f are shared by every row.
  std::vector<cplx> values;
  if (h.continuous_on_boundary())
    values = boundary_values(h, boundary_sample_count(cfg.order, cfg.coefficients), cfg.coefficients.exec);
  NormTable table;
  for (int N : ns) {
    table.rows.push_back(make_row(h, N, cfg, h.continuous_on_boundary() ? &values : nullptr));
    if (const auto& c = table.rows.back().c_fit) table.c_fit = std::max(table.c_fit.value_or(0.0), *c);
  }
  return table;
}

}  // namespace aplus
