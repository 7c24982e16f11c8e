#include "aplus/sector_map.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "aplus/errors.hpp"
#include "aplus/quadrature.hpp"
#include "aplus/series.hpp"

namespace aplus {
namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};
constexpr double kExpansionRadius = 0.5;
constexpr std::size_t kExpansionTerms = 64;
constexpr double kMatchDistance = 0.4;

// Coefficients of exp(sum_j e_j log(c_j + d_j x)) as a power series in x.
std::vector<cplx> power_product_series(std::initializer_list<std::tuple<double, cplx, cplx>> factors) {
  SeriesOptions opts;
  opts.exec = Exec::serial;
  TruncatedSeries acc = TruncatedSeries::constant(0.0, kExpansionTerms);
  for (const auto& [e, c, d] : factors) {
    std::vector<cplx> lin(kExpansionTerms + 1);
    lin[0] = c;
    lin[1] = d;
    acc = acc + cplx{e, 0.0} * series_analytic(AnalyticKind::log, TruncatedSeries(lin), opts);
  }
  TruncatedSeries p = series_analytic(AnalyticKind::exp, acc, opts);
  return {p.coeffs().begin(), p.coeffs().end()};
}

cplx horner(const std::vector<cplx>& q, cplx x) {
  cplx acc{};
  for (auto it = q.rbegin(); it != q.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

SectorCapMap::SectorCapMap(double p) : p_(p) {
  require(p > 1.0 && std::isfinite(p), "sector-cap map needs p > 1");
  beta_ = std::numbers::pi / (2.0 * p);
  a_ = beta_ / std::numbers::pi - 0.5;
  b_ = -1.0 - 2.0 * beta_ / std::numbers::pi;

  // Around ζ = 1, w = 1 - ζ: g = ((1+i) - i w)^a ((1-i) + i w)^a w^b.
  std::vector<cplx> e = power_product_series({{a_, {1.0, 1.0}, -I}, {a_, {1.0, -1.0}, I}});
  q_one_.resize(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) q_one_[k] = e[k] / (static_cast<double>(k) + b_ + 1.0);
  // Around ζ = i, v = 1 + iζ: g = v^a (2 - v)^a ((1-i) + i v)^b.
  std::vector<cplx> d = power_product_series({{a_, {2.0, 0.0}, {-1.0, 0.0}}, {b_, {1.0, -1.0}, I}});
  q_i_.resize(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) q_i_[k] = d[k] / (static_cast<double>(k) + a_ + 1.0);

  g0_ = integrate_gl([&](double x) { return integrand(factors(cplx{x, 0.0})).real(); }, -1.0, 0.0, 4, 24);

  const cplx z_one{1.0 - kMatchDistance, 0.0};
  const cplx w_one = 1.0 - z_one;
  k_one_ = primitive_by_segment(z_one) + std::pow(w_one, b_ + 1.0) * horner(q_one_, w_one);
  const cplx z_i = I * (1.0 - kMatchDistance);
  const cplx v_i = 1.0 + I * z_i;
  k_i_ = primitive_by_segment(z_i) + I * std::pow(v_i, a_ + 1.0) * horner(q_i_, v_i);

  if (!(std::abs(k_i_.real()) <= 1e-10 * std::abs(k_i_)) || !(k_i_.imag() > 0.0))
    fail(ErrorKind::MapConstructionFailure,
         "finite-vertex integral not vertical: " + std::to_string(k_i_.real()) + " + i" +
             std::to_string(k_i_.imag()));
  scale_ = std::tan(beta_) / k_i_.imag();
  validate();
}

cplx SectorCapMap::upper_vertex() const { return {1.0, std::tan(beta_)}; }

SectorCapMap::Factors SectorCapMap::factors(cplx z) { return {1.0 + I * z, 1.0 - I * z, 1.0 - z}; }

SectorCapMap::Factors SectorCapMap::factors(const BoundaryParam& t) {
  return {I * chord(t, std::numbers::pi / 2), -I * chord(t, -std::numbers::pi / 2), -chord(t, 0.0)};
}

cplx SectorCapMap::integrand(const Factors& f) const {
  return std::pow(f.plus, a_) * std::pow(f.minus, a_) * std::pow(f.one, b_);
}

cplx SectorCapMap::primitive_by_segment(cplx z) const {
  const cplx seg = integrate_gl([&](double x) { return integrand(factors(z * x)); }, 0.0, 1.0, 4, 24);
  return g0_ + z * seg;
}

cplx SectorCapMap::primitive(cplx z, const Factors& f) const {
  if (std::abs(f.one) < kExpansionRadius)
    return k_one_ - std::pow(f.one, b_ + 1.0) * horner(q_one_, f.one);
  if (std::abs(f.plus) < kExpansionRadius)
    return k_i_ - I * std::pow(f.plus, a_ + 1.0) * horner(q_i_, f.plus);
  return primitive_by_segment(z);
}

cplx SectorCapMap::primitive_any(cplx z, const Factors& f) const {
  if (z.imag() >= 0.0) return primitive(z, f);
  const Factors mirrored{std::conj(f.minus), std::conj(f.plus), std::conj(f.one)};
  return std::conj(primitive(std::conj(z), mirrored));
}

cplx SectorCapMap::eval(cplx z) const { return 1.0 + scale_ * primitive_any(z, factors(z)); }

cplx SectorCapMap::derivative(cplx z) const { return scale_ * integrand(factors(z)); }

BoundaryJet SectorCapMap::boundary(const BoundaryParam& t) const {
  const bool lower = offset_from(t, 0.0) < 0.0;
  const BoundaryParam u = lower ? t.mirrored() : t;
  const Factors f = factors(u);
  if (f.one == cplx{}) {
    const double inf = std::numeric_limits<double>::infinity();
    return {{inf, 0.0}, {inf, 0.0}};
  }
  const cplx zeta = 1.0 - f.one;
  cplx value = 1.0 + scale_ * primitive(unit_point(u), f);
  // d/dt at -t equals minus the conjugate of d/dt at t.
  cplx d_dt = scale_ * integrand(f) * I * zeta;
  if (lower) {
    value = std::conj(value);
    d_dt = -std::conj(d_dt);
  }
  return {value, d_dt};
}

void SectorCapMap::validate() {
  const double f0 = 1.0 + scale_ * g0_;
  if (!(scale_ > 0.0) || !std::isfinite(scale_) || !(f0 > 1.0))
    fail(ErrorKind::MapConstructionFailure, "bad normalization: C = " + std::to_string(scale_));

  // Expansions must agree with the segment route where their disks overlap it.
  double defect = 0.0;
  for (double th : {0.3, 1.0, 1.8, 2.5}) {
    const cplx z1 = 1.0 - 0.45 * std::polar(1.0, th);
    if (std::abs(z1) < 1.0 && z1.imag() >= 0.0)
      defect = std::max(defect, std::abs(primitive(z1, factors(z1)) - primitive_by_segment(z1)));
    const cplx zi = I + 0.45 * std::polar(1.0, -th - 0.3);
    if (std::abs(zi) < 1.0)
      defect = std::max(defect, std::abs(primitive(zi, factors(zi)) - primitive_by_segment(zi)));
  }
  // Boundary correspondence: the arc through -1 lands on Re w = 1 and the
  // arc from 1 to i lands on the ray arg w = beta.
  for (int k = 1; k < 64; ++k) {
    const double s = k / 64.0;
    const BoundaryJet seg = boundary({std::numbers::pi / 2 + s * std::numbers::pi / 2, 0.0});
    defect = std::max(defect, std::abs(seg.value.real() - 1.0));
    const BoundaryJet ray = boundary({s * std::numbers::pi / 2, 0.0});
    defect = std::max(defect, std::abs(std::arg(ray.value) - beta_));
  }
  defect_ = defect;
  if (!(defect < 1e-8))
    fail(ErrorKind::MapConstructionFailure, "boundary correspondence defect " + std::to_string(defect));
}

}  // namespace aplus
