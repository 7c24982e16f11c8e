#include "aplus/symbols.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "aplus/errors.hpp"
#include "aplus/sector_map.hpp"

namespace aplus {
namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_branch(cplx w, const char* stage) {
  if (std::abs(std::arg(w)) > kPi - halfstrip::kBranchMargin)
    fail(ErrorKind::BranchCutProximity,
         std::string(stage) + " stage argument " + std::to_string(std::arg(w)) + " too close to the cut");
}

cplx complex_expm1(cplx w) {
  const double half = std::sin(0.5 * w.imag());
  return {std::expm1(w.real()) * std::cos(w.imag()) - 2.0 * half * half, std::exp(w.real()) * std::sin(w.imag())};
}

// 1 - base^{-s} without cancellation for small s.
cplx one_minus_power(cplx s, int base) { return -complex_expm1(-s * std::log(static_cast<double>(base))); }

// ---------------------------------------------------------------------------

class HalfStripModel final : public SymbolModel {
 public:
  cplx eval_disk(cplx z) const override { return halfstrip::map(z); }

  cplx derivative_disk(cplx z) const override {
    const cplx t = halfstrip::cayley(z);
    const cplx c = halfstrip::rotated_sqrt(t);
    const cplx h = halfstrip::quadrant_to_disk(c);
    const cplx dT = 2.0 / ((1.0 - z) * (1.0 - z));
    const cplx dc = c / (2.0 * t);
    const cplx dh = -2.0 / ((c + I) * (c + I));
    const cplx dL = -2.0 / h;
    return dL * dh * dc * dT;
  }

  cplx eval_dirichlet(cplx s, int base) const override {
    const cplx w = one_minus_power(s, base);  // 1 - z
    const cplx t = (2.0 - w) / w;
    return 1.0 + halfstrip::log_stage(halfstrip::quadrant_to_disk(halfstrip::rotated_sqrt(t)));
  }

  // Closed-form boundary values. On the arc 0 < t < pi the image is one of the
  // horizontal rays Im = ∓pi, with Re f = 1 + 4 artanh(sqrt(tau)),
  // tau = tan(pi/4 - |t - pi/2|/2); on pi < t < 2pi it is the segment Re = 1
  // with Im f = pi - 4 atan(x), x^2 = tan(pi/4 + (t - 3pi/2)/2).
  std::optional<BoundaryJet> boundary(const BoundaryParam& t) const override {
    const double delta = offset_from(t, kPi / 2);
    if (std::abs(delta) <= kPi / 2) {
      if (delta == 0.0) return BoundaryJet{{kInf, 0.0}, {kInf, 0.0}};
      const double te = std::tan(0.5 * std::abs(delta));
      const double tau = (1.0 - te) / (1.0 + te);
      const double one_minus_tau = 2.0 * te / (1.0 + te);
      const double sigma = std::sqrt(tau);
      const double re = 1.0 + 4.0 * std::log1p(sigma) - 2.0 * std::log(one_minus_tau);
      const double im = delta < 0.0 ? -kPi : kPi;
      const double slope = (1.0 + tau * tau) / (one_minus_tau * sigma);
      return BoundaryJet{{re, im}, {delta < 0.0 ? slope : -slope, 0.0}};
    }
    const double d2 = offset_from(t, 3 * kPi / 2);
    const double te = std::tan(0.5 * d2);
    const double x2 = (1.0 + te) / (1.0 - te);
    const double x = std::sqrt(x2);
    const double im = kPi - 4.0 * std::atan(x);
    const double slope = (1.0 + x2 * x2) / ((1.0 + x2) * x);
    return BoundaryJet{{1.0, im}, {0.0, -slope}};
  }

  bool continuous_on_boundary() const override { return true; }
  std::vector<double> singular_params() const override { return {0.0, kPi / 2, kPi}; }

  std::optional<TruncatedSeries> formal_series(std::size_t order, const SeriesOptions& opts) const override {
    std::vector<cplx> num(order + 1), den(order + 1);
    num[0] = 1.0;
    den[0] = 1.0;
    if (order >= 1) {
      num[1] = 1.0;
      den[1] = -1.0;
    }
    const TruncatedSeries t = series_div(TruncatedSeries(num), TruncatedSeries(den), opts);
    const TruncatedSeries c = std::polar(1.0, kPi / 4) * series_analytic(AnalyticKind::sqrt, t, opts);
    const TruncatedSeries h = series_div(1.0 + I * c, I + c, opts);
    const TruncatedSeries l = cplx{-2.0, 0.0} * series_analytic(AnalyticKind::log, h, opts);
    return 1.0 + l;
  }
};

class SectorCapModel final : public SymbolModel {
 public:
  explicit SectorCapModel(double p) : map_(p) {}

  cplx eval_disk(cplx z) const override { return map_.eval(z); }
  cplx derivative_disk(cplx z) const override { return map_.derivative(z); }
  std::optional<BoundaryJet> boundary(const BoundaryParam& t) const override { return map_.boundary(t); }
  bool continuous_on_boundary() const override { return true; }
  std::vector<double> singular_params() const override { return {0.0, kPi / 2, 3 * kPi / 2}; }
  std::optional<TruncatedSeries> formal_series(std::size_t, const SeriesOptions&) const override {
    return std::nullopt;
  }
  const SectorCapMap& map() const { return map_; }

 private:
  SectorCapMap map_;
};

class CounterexampleModel final : public SymbolModel {
 public:
  explicit CounterexampleModel(double A) : A_(A) {}

  cplx eval_disk(cplx z) const override { return A_ + 1.0 + std::exp(-halfstrip::cayley(z)); }
  cplx derivative_disk(cplx z) const override {
    const cplx dT = 2.0 / ((1.0 - z) * (1.0 - z));
    return -dT * std::exp(-halfstrip::cayley(z));
  }
  cplx eval_dirichlet(cplx s, int base) const override {
    const cplx w = one_minus_power(s, base);
    return A_ + 1.0 + std::exp(-(2.0 - w) / w);
  }
  std::optional<BoundaryJet> boundary(const BoundaryParam&) const override { return std::nullopt; }
  bool continuous_on_boundary() const override { return false; }
  std::vector<double> singular_params() const override { return {0.0}; }
  std::optional<TruncatedSeries> formal_series(std::size_t order, const SeriesOptions& opts) const override {
    std::vector<cplx> num(order + 1), den(order + 1);
    num[0] = 1.0;
    den[0] = 1.0;
    if (order >= 1) {
      num[1] = 1.0;
      den[1] = -1.0;
    }
    const TruncatedSeries t = series_div(TruncatedSeries(num), TruncatedSeries(den), opts);
    return cplx{A_ + 1.0, 0.0} + series_analytic(AnalyticKind::exp, cplx{-1.0, 0.0} * t, opts);
  }

 private:
  double A_;
};

class PolynomialModel final : public SymbolModel {
 public:
  explicit PolynomialModel(std::vector<cplx> c) : c_(std::move(c)) {}

  cplx eval_disk(cplx z) const override {
    cplx acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }
  cplx derivative_disk(cplx z) const override {
    cplx acc{};
    for (std::size_t k = c_.size() - 1; k >= 1; --k) acc = acc * z + static_cast<double>(k) * c_[k];
    return acc;
  }
  std::optional<BoundaryJet> boundary(const BoundaryParam& t) const override {
    const cplx z = unit_point(t);
    return BoundaryJet{eval_disk(z), I * z * derivative_disk(z)};
  }
  bool continuous_on_boundary() const override { return true; }
  std::vector<double> singular_params() const override { return {}; }
  std::optional<TruncatedSeries> formal_series(std::size_t order, const SeriesOptions&) const override {
    std::vector<cplx> v(order + 1);
    for (std::size_t k = 0; k < c_.size() && k <= order; ++k) v[k] = c_[k];
    // Exact polynomial: nothing is discarded once order covers the degree.
    std::optional<double> tb;
    if (order + 1 >= c_.size()) tb = 0.0;
    return TruncatedSeries(std::move(v), tb);
  }

 private:
  std::vector<cplx> c_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Regions
// ---------------------------------------------------------------------------

Region checked(Region region) {
  std::visit(
      [](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, HalfStrip>) require(r.im_bound > 0.0, "HalfStrip needs im_bound > 0");
        if constexpr (std::is_same_v<T, SectorCap>)
          require(r.beta > 0.0 && r.beta < kPi / 2, "SectorCap needs 0 < beta < pi/2");
        if constexpr (std::is_same_v<T, ScaledHalfStrip>) require(r.N >= 2, "ScaledHalfStrip needs N >= 2");
      },
      region);
  return region;
}

bool region_contains(const Region& region, cplx w) {
  return std::visit(
      [w](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, HalfPlane>) {
          return w.real() > r.theta;
        } else if constexpr (std::is_same_v<T, HalfStrip>) {
          return w.real() > r.re_min && std::abs(w.imag()) < r.im_bound;
        } else if constexpr (std::is_same_v<T, ScaledHalfStrip>) {
          const double ln_n = std::log(static_cast<double>(r.N));
          return w.real() > ln_n && std::abs(w.imag()) < kPi * ln_n;
        } else {
          return w.real() > r.re_min && std::abs(std::arg(w)) < r.beta;
        }
      },
      region);
}

std::string describe(const Region& region) {
  std::ostringstream os;
  os.precision(17);
  std::visit(
      [&os](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, HalfPlane>) os << "HalfPlane(" << r.theta << ")";
        if constexpr (std::is_same_v<T, HalfStrip>) os << "HalfStrip(" << r.re_min << ", " << r.im_bound << ")";
        if constexpr (std::is_same_v<T, ScaledHalfStrip>) os << "ScaledHalfStrip(" << r.N << ")";
        if constexpr (std::is_same_v<T, SectorCap>) os << "SectorCap(" << r.beta << ", " << r.re_min << ")";
      },
      region);
  return os.str();
}

// ---------------------------------------------------------------------------
// Handles
// ---------------------------------------------------------------------------

std::string family_name(const SymbolSpec& spec) {
  static const char* names[] = {"thm1", "thm2", "counterexample", "bflq", "constant"};
  return names[spec.index()];
}

cplx SymbolModel::eval_dirichlet(cplx s, int base) const {
  return eval_disk(std::exp(-s * std::log(static_cast<double>(base))));
}

SymbolHandle::SymbolHandle(SymbolSpec spec, std::optional<Region> target, int prime_base,
                           std::shared_ptr<const SymbolModel> model)
    : spec_(std::move(spec)), target_(std::move(target)), prime_base_(prime_base), model_(std::move(model)) {
  require(prime_base_ >= 2, "prime base must be >= 2");
  if (target_) target_ = checked(*target_);
}

BoundaryJet SymbolHandle::boundary(const BoundaryParam& t) const {
  auto jet = model_->boundary(t);
  if (!jet) fail(ErrorKind::SampleSingularity, family_name(spec_) + " symbol has no continuous boundary extension");
  return *jet;
}

SymbolHandle build_thm1_symbol() {
  return SymbolHandle(Thm1Spec{}, HalfStrip{1.0, kPi}, 2, std::make_shared<HalfStripModel>());
}

SymbolHandle build_thm2_symbol(double p) {
  require(p > 1.0, "Thm2 symbol needs p > 1");
  auto model = std::make_shared<SectorCapModel>(p);
  const double beta = model->map().beta();
  return SymbolHandle(Thm2Spec{p, beta}, SectorCap{beta, 1.0}, 2, std::move(model));
}

SymbolHandle build_counterexample_symbol(double A) {
  require(A >= 0.0 && std::isfinite(A), "counterexample needs A >= 0");
  return SymbolHandle(CounterexampleSpec{A}, HalfPlane{A}, 2, std::make_shared<CounterexampleModel>(A));
}

SymbolHandle build_bflq_symbol(cplx c1, double cr, double cr2, int r) {
  require(cr > 0.0 && cr2 > 0.0, "BFLQ polynomial needs c_r, c_{r^2} > 0");
  require(r >= 2, "BFLQ polynomial needs r >= 2");
  return SymbolHandle(BflqSpec{c1, cr, cr2, r}, std::nullopt, r,
                      std::make_shared<PolynomialModel>(std::vector<cplx>{c1, cr, cr2}));
}

SymbolHandle build_constant_symbol(cplx value) {
  std::optional<Region> target;
  if (value.real() > 0.0) target = HalfPlane{0.0};
  return SymbolHandle(ConstantSpec{value}, target, 2, std::make_shared<PolynomialModel>(std::vector<cplx>{value}));
}

SymbolHandle build_symbol(const SymbolSpec& spec) {
  return std::visit(
      [](const auto& s) -> SymbolHandle {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Thm1Spec>) return build_thm1_symbol();
        if constexpr (std::is_same_v<T, Thm2Spec>) return build_thm2_symbol(s.p);
        if constexpr (std::is_same_v<T, CounterexampleSpec>) return build_counterexample_symbol(s.A);
        if constexpr (std::is_same_v<T, BflqSpec>) return build_bflq_symbol(s.c1, s.cr, s.cr2, s.r);
        if constexpr (std::is_same_v<T, ConstantSpec>) return build_constant_symbol(s.value);
      },
      spec);
}

cplx symbol_eval_dirichlet(const SymbolHandle& h, cplx s) {
  require(s.real() > 0.0, "Dirichlet evaluation needs Re s > 0");
  return h.model().eval_dirichlet(s, h.prime_base());
}

// ---------------------------------------------------------------------------
// Half-strip chain
// ---------------------------------------------------------------------------

namespace halfstrip {

cplx cayley(cplx z) { return (1.0 + z) / (1.0 - z); }

cplx rotated_sqrt(cplx w) {
  check_branch(w, "sqrt");
  return std::polar(1.0, kPi / 4) * std::sqrt(w);
}

cplx quadrant_to_disk(cplx u) { return (I * u + 1.0) / (u + I); }

cplx log_stage(cplx v) {
  check_branch(v, "log");
  return -2.0 * std::log(v);
}

cplx map(cplx z) { return 1.0 + log_stage(quadrant_to_disk(rotated_sqrt(cayley(z)))); }

double center_value() { return 1.0 + 2.0 * std::log(1.0 + std::sqrt(2.0)); }

}  // namespace halfstrip
}  // namespace aplus
