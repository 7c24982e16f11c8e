#include "aplus/series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "aplus/errors.hpp"
#include "aplus/fft.hpp"

namespace aplus {

TruncatedSeries::TruncatedSeries() : coeffs_{cplx{}} {}

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs, std::optional<double> trunc_bound)
    : coeffs_(std::move(coeffs)), trunc_bound_(trunc_bound) {
  if (coeffs_.empty()) fail(ErrorKind::InvalidSeries, "empty coefficient list");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!std::isfinite(coeffs_[n].real()) || !std::isfinite(coeffs_[n].imag()))
      fail(ErrorKind::InvalidSeries, "non-finite coefficient at index " + std::to_string(n));
  }
  if (trunc_bound_ && !(*trunc_bound_ >= 0.0))
    fail(ErrorKind::InvalidSeries, "truncation bound must be >= 0");
}

TruncatedSeries TruncatedSeries::constant(cplx c, std::size_t order) {
  std::vector<cplx> v(order + 1);
  v[0] = c;
  return TruncatedSeries(std::move(v), 0.0);
}

TruncatedSeries TruncatedSeries::geometric(std::size_t order) {
  return TruncatedSeries(std::vector<cplx>(order + 1, cplx{1.0, 0.0}));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<cplx> v(order + 1);
  std::copy_n(coeffs_.begin(), std::min(coeffs_.size(), order + 1), v.begin());
  return TruncatedSeries(std::move(v));
}

cplx TruncatedSeries::evaluate(cplx z) const {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double TruncatedSeries::max_abs() const {
  double m = 0.0;
  for (const cplx& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

namespace {

std::optional<double> sum_bounds(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.trunc_bound() && b.trunc_bound()) return *a.trunc_bound() + *b.trunc_bound();
  return std::nullopt;
}

double l1(std::span<const cplx> c) {
  double s = 0.0;
  for (const cplx& x : c) s += std::abs(x);
  return s;
}

void check_constant_term(const TruncatedSeries& s, const SeriesOptions& opts, const char* what) {
  const double c0 = std::abs(s[0]);
  if (!(c0 > opts.zero_threshold * s.max_abs()) || c0 == 0.0)
    fail(ErrorKind::NearZeroConstantTerm, std::string(what) + ": |c0| = " + std::to_string(c0));
}

void check_branch(cplx c0, const SeriesOptions& opts, const char* what) {
  if (std::abs(std::arg(c0)) > std::numbers::pi - opts.branch_margin)
    fail(ErrorKind::BranchCutProximity,
         std::string(what) + ": constant term argument " + std::to_string(std::arg(c0)));
}

std::vector<cplx> convolve_any(std::span<const cplx> a, std::span<const cplx> b, std::size_t out_len,
                               const SeriesOptions& opts) {
  if (std::min(a.size(), b.size()) >= 64 && out_len >= opts.crossover) return fft::convolve(a, b, out_len);
  std::vector<cplx> out(out_len);
  convolve_direct(a, b, out, opts.exec);
  return out;
}

// Online (relaxed) solver for sequences defined by
//   d_n = step(n, acc_n),  acc_n = sum_{j=1}^{n} u_j d_{n-j}.
// Below the crossover the sum is evaluated directly; above it a
// divide-and-conquer split feeds completed blocks of d into later
// accumulators through transform-based products.
class OnlineSolver {
 public:
  using Step = std::function<cplx(std::size_t, cplx)>;

  OnlineSolver(std::span<const cplx> u, std::size_t len, Step step, const SeriesOptions& opts)
      : u_(u), step_(std::move(step)), opts_(opts), d_(len), acc_(len) {}

  std::vector<cplx> run() {
    const std::size_t len = d_.size();
    if (len <= opts_.crossover) {
      leaf(0, len);
    } else {
      split(0, len);
    }
    return std::move(d_);
  }

 private:
  cplx u(std::size_t j) const { return j < u_.size() ? u_[j] : cplx{}; }

  void leaf(std::size_t l, std::size_t r) {
    for (std::size_t n = l; n < r; ++n) {
      cplx s = acc_[n];
      for (std::size_t k = l; k < n; ++k) s += d_[k] * u(n - k);
      d_[n] = step_(n, s);
    }
  }

  void split(std::size_t l, std::size_t r) {
    if (r - l <= kLeaf) {
      leaf(l, r);
      return;
    }
    const std::size_t m = l + (r - l) / 2;
    split(l, m);
    std::vector<cplx> uu(r - l);
    for (std::size_t j = 1; j < r - l; ++j) uu[j] = u(j);
    std::span<const cplx> block(d_.data() + l, m - l);
    std::vector<cplx> contrib;
    if (m - l >= 64) {
      contrib = fft::convolve(block, uu, r - l);
    } else {
      contrib.resize(r - l);
      convolve_direct(block, uu, contrib, Exec::serial);
    }
    for (std::size_t n = m; n < r; ++n) acc_[n] += contrib[n - l];
    split(m, r);
  }

  static constexpr std::size_t kLeaf = 64;
  std::span<const cplx> u_;
  Step step_;
  SeriesOptions opts_;
  std::vector<cplx> d_;
  std::vector<cplx> acc_;
};

TruncatedSeries exp_series(const TruncatedSeries& s, const SeriesOptions& opts) {
  const std::size_t len = s.order() + 1;
  std::vector<cplx> u(len);
  for (std::size_t j = 1; j < len; ++j) u[j] = static_cast<double>(j) * s[j];
  const cplx b0 = std::exp(s[0]);
  OnlineSolver solver(u, len,
                      [b0](std::size_t n, cplx acc) { return n == 0 ? b0 : acc / static_cast<double>(n); },
                      opts);
  return TruncatedSeries(solver.run());
}

TruncatedSeries log_series(const TruncatedSeries& s, const SeriesOptions& opts) {
  check_constant_term(s, opts, "log");
  check_branch(s[0], opts, "log");
  if (s.order() == 0) return TruncatedSeries({std::log(s[0])});
  TruncatedSeries ds = series_derivative(s);
  TruncatedSeries q = series_div(ds, s.truncated(ds.order()), opts);
  return series_integral(q, std::log(s[0]));
}

TruncatedSeries sqrt_series(const TruncatedSeries& s, const SeriesOptions& opts) {
  check_constant_term(s, opts, "sqrt");
  check_branch(s[0], opts, "sqrt");
  const std::size_t len = s.order() + 1;
  const cplx r0 = std::sqrt(s[0]);
  if (len > opts.crossover) {
    // sqrt(s) = sqrt(s0) exp(log(s / s0) / 2); both stages are recurrences.
    TruncatedSeries normalized = (1.0 / s[0]) * s;
    TruncatedSeries half_log = 0.5 * series_analytic(AnalyticKind::log, normalized, opts);
    return r0 * series_analytic(AnalyticKind::exp, half_log, opts);
  }
  std::vector<cplx> r(len);
  r[0] = r0;
  const cplx inv2r0 = 1.0 / (2.0 * r0);
  for (std::size_t n = 1; n < len; ++n) {
    cplx acc{};
    for (std::size_t k = 1; k < n; ++k) acc += r[k] * r[n - k];
    r[n] = (s[n] - acc) * inv2r0;
  }
  return TruncatedSeries(std::move(r));
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t m = std::min(a.order(), b.order());
  std::vector<cplx> v(m + 1);
  for (std::size_t n = 0; n <= m; ++n) v[n] = a[n] + b[n];
  return TruncatedSeries(std::move(v), sum_bounds(a, b));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a + cplx{-1.0, 0.0} * b;
}

TruncatedSeries operator*(cplx k, const TruncatedSeries& a) {
  std::vector<cplx> v(a.coeffs().begin(), a.coeffs().end());
  for (cplx& c : v) c *= k;
  std::optional<double> tb;
  if (a.trunc_bound()) tb = std::abs(k) * *a.trunc_bound();
  return TruncatedSeries(std::move(v), tb);
}

TruncatedSeries operator+(cplx k, const TruncatedSeries& a) {
  std::vector<cplx> v(a.coeffs().begin(), a.coeffs().end());
  v[0] += k;
  return TruncatedSeries(std::move(v), a.trunc_bound());
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b, const SeriesOptions& opts) {
  const std::size_t m = std::min(a.order(), b.order());
  std::span<const cplx> ca = a.coeffs().first(m + 1);
  std::span<const cplx> cb = b.coeffs().first(m + 1);
  if (!(a.trunc_bound() && b.trunc_bound())) {
    return TruncatedSeries(convolve_any(ca, cb, m + 1, opts));
  }
  // Both tails certified: |ab - a_M b_M| <= ea |b_M| + eb |a_M| + ea eb on the
  // closed disk, plus the dropped part of a_M b_M itself.
  std::vector<cplx> full = convolve_any(ca, cb, 2 * m + 1, opts);
  const double ea = *a.trunc_bound(), eb = *b.trunc_bound();
  double bound = ea * l1(cb) + eb * l1(ca) + ea * eb;
  for (std::size_t n = m + 1; n < full.size(); ++n) bound += std::abs(full[n]);
  full.resize(m + 1);
  return TruncatedSeries(std::move(full), bound);
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b, const SeriesOptions& opts) {
  check_constant_term(b, opts, "division");
  const std::size_t len = std::min(a.order(), b.order()) + 1;
  const cplx inv_b0 = 1.0 / b[0];
  std::span<const cplx> ca = a.coeffs();
  OnlineSolver solver(b.coeffs().first(len), len,
                      [ca, inv_b0](std::size_t n, cplx acc) { return (ca[n] - acc) * inv_b0; }, opts);
  return TruncatedSeries(solver.run());
}

TruncatedSeries series_analytic(AnalyticKind kind, const TruncatedSeries& s, const SeriesOptions& opts) {
  switch (kind) {
    case AnalyticKind::exp: return exp_series(s, opts);
    case AnalyticKind::log: return log_series(s, opts);
    case AnalyticKind::sqrt: return sqrt_series(s, opts);
  }
  fail(ErrorKind::InvalidArgument, "unknown analytic kind");
}

TruncatedSeries series_derivative(const TruncatedSeries& s) {
  if (s.order() == 0) return TruncatedSeries();
  std::vector<cplx> v(s.order());
  for (std::size_t n = 0; n < v.size(); ++n) v[n] = static_cast<double>(n + 1) * s[n + 1];
  return TruncatedSeries(std::move(v));
}

TruncatedSeries series_integral(const TruncatedSeries& s, cplx c0) {
  std::vector<cplx> v(s.order() + 2);
  v[0] = c0;
  for (std::size_t n = 0; n <= s.order(); ++n) v[n + 1] = s[n] / static_cast<double>(n + 1);
  return TruncatedSeries(std::move(v));
}

TruncatedSeries coeffs_from_samples(std::vector<cplx> values, std::size_t order, double rho) {
  require(rho > 0.0 && rho <= 1.0, "sampling radius must lie in (0, 1]");
  const std::size_t count = values.size();
  require(count > 0 && (count & (count - 1)) == 0 && count >= 2 * (order + 1),
          "sample count must be a power of two >= 2(M+1)");
  for (std::size_t j = 0; j < count; ++j) {
    if (!std::isfinite(values[j].real()) || !std::isfinite(values[j].imag()))
      fail(ErrorKind::SampleSingularity,
           "non-finite sample at t = 2 pi * " + std::to_string(j) + "/" + std::to_string(count));
  }
  std::vector<cplx> spectrum = fft::forward(values);
  std::vector<cplx> c(order + 1);
  double scale = 1.0 / static_cast<double>(count);
  for (std::size_t n = 0; n <= order; ++n) {
    c[n] = spectrum[n] * scale;
    if (rho != 1.0) scale /= rho;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries coeffs_from_boundary(const CircleSampler& sampler, std::size_t order,
                                     const BoundarySampling& sampling) {
  require(sampling.rho > 0.0 && sampling.rho <= 1.0, "sampling radius must lie in (0, 1]");
  std::size_t count = sampling.samples;
  if (count == 0) {
    count = 1;
    while (count < 2 * (order + 1)) count <<= 1;
  }
  require((count & (count - 1)) == 0 && count >= 2 * (order + 1),
          "sample count must be a power of two >= 2(M+1)");
  return coeffs_from_samples(sample_circle(sampler, count, sampling.rho, sampling.exec), order, sampling.rho);
}

}  // namespace aplus
