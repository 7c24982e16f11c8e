#include "aplus/probes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aplus/boundary.hpp"
#include "aplus/errors.hpp"

namespace aplus {

namespace {

std::vector<double> geometric(double from, double to, std::size_t K) {
  std::vector<double> v(K);
  const double ratio = std::log(to / from) / static_cast<double>(K - 1);
  for (std::size_t k = 0; k < K; ++k) v[k] = from * std::exp(ratio * static_cast<double>(k));
  v.back() = to;
  return v;
}

double diameter(std::span<const cplx> v) {
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) d = std::max(d, std::abs(v[i] - v[j]));
  return d;
}

std::vector<cplx> aitken(std::span<const cplx> x) {
  std::vector<cplx> out;
  for (std::size_t k = 0; k + 2 < x.size(); ++k) {
    const cplx d2 = x[k + 2] - 2.0 * x[k + 1] + x[k];
    out.push_back(std::abs(d2) > 1e-300 ? x[k + 2] - (x[k + 2] - x[k + 1]) * (x[k + 2] - x[k + 1]) / d2 : x[k + 2]);
  }
  return out;
}

// Algebraic (Kasa) circle fit; falls back to the mean for degenerate tails.
cplx circle_center(std::span<const cplx> v) {
  cplx mean{};
  for (cplx x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double m[3][4] = {};
  for (cplx z : v) {
    const cplx d = z - mean;
    const double row[3] = {d.real(), d.imag(), 1.0};
    const double rhs = -std::norm(d);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) m[i][j] += row[i] * row[j];
      m[i][3] += row[i] * rhs;
    }
  }
  const double scale = std::abs(m[0][0]) + std::abs(m[1][1]) + std::abs(m[2][2]);
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (!(std::abs(m[piv][c]) > 1e-12 * scale)) return mean;
    std::swap(m[c], m[piv]);
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return mean + cplx{-0.5 * m[0][3] / m[0][0], -0.5 * m[1][3] / m[1][1]};
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxx > 0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  return f;
}

}  // namespace

std::string to_string(ProbeKind k) {
  switch (k) {
    case ProbeKind::limit: return "limit";
    case ProbeKind::re_divergence: return "re-divergence";
    case ProbeKind::oscillation: return "oscillation";
    case ProbeKind::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_string(DivergenceVerdict v) {
  return v == DivergenceVerdict::no_convergence_detected ? "no convergence detected" : "stabilizing";
}

std::vector<cplx> path_points(const PathSpec& path, std::size_t K) {
  if (path.shape == PathShape::custom) {
    for (cplx s : path.custom) require(s.real() > 0.0, "custom path samples need Re s > 0");
    return path.custom;
  }
  require(K >= 2, "path needs at least two points");
  std::vector<cplx> pts(K);
  if (path.shape == PathShape::radial) {
    require(path.sigma_start > path.sigma_end && path.sigma_end > 0.0, "radial path needs sigma_start > sigma_end > 0");
    const std::vector<double> sigma = geometric(path.sigma_start, path.sigma_end, K);
    for (std::size_t k = 0; k < K; ++k) pts[k] = {sigma[k], path.a};
  } else {
    require(path.t_start > path.t_end && path.t_end > 0.0, "parabolic path needs t_start > t_end > 0");
    const std::vector<double> t = geometric(path.t_start, path.t_end, K);
    for (std::size_t k = 0; k < K; ++k) pts[k] = {t[k] * t[k], path.a + t[k]};
  }
  return pts;
}

ProbeVerdict classify_tail(std::span<const cplx> values, const ProbeConfig& cfg) {
  require(values.size() >= 32, "probe needs at least 32 samples");
  for (cplx v : values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      fail(ErrorKind::SampleSingularity, "non-finite symbol value along the probe path");
  ProbeVerdict v;
  v.samples = values.size();
  const std::span<const cplx> tail = values.subspan(values.size() - values.size() / 4);

  v.tail_diameter = diameter(tail);
  const std::vector<cplx> acc = aitken(tail);
  v.extrapolated_diameter = diameter(acc);

  const cplx center = circle_center(tail);
  double mod_min = HUGE_VAL, mod_max = 0.0, mod_sum = 0.0;
  for (std::size_t k = 0; k < tail.size(); ++k) {
    const double m = std::abs(tail[k] - center);
    mod_min = std::min(mod_min, m);
    mod_max = std::max(mod_max, m);
    mod_sum += m;
    const cplx prev = k > 0 ? tail[k - 1] - center : cplx{};
    if (prev != cplx{} && tail[k] != center) v.tail_arg_range += std::abs(std::arg((tail[k] - center) / prev));
  }
  v.tail_modulus = mod_sum / static_cast<double>(tail.size());
  v.tail_modulus_variation = v.tail_modulus > 0 ? (mod_max - mod_min) / v.tail_modulus : 0.0;

  // Real parts increasing without slowing down across the tail.
  bool re_increasing = true;
  for (std::size_t k = 1; k < tail.size(); ++k) re_increasing = re_increasing && tail[k].real() > tail[k - 1].real();
  const std::size_t mid = tail.size() / 2;
  const double first_rise = tail[mid].real() - tail.front().real();
  const double second_rise = tail.back().real() - tail[mid].real();

  if (v.tail_diameter < cfg.limit_tol) {
    v.kind = ProbeKind::limit;
    v.value = tail.back();
  } else if (re_increasing && second_rise >= 0.5 * first_rise && second_rise > 10.0 * cfg.limit_tol) {
    v.kind = ProbeKind::re_divergence;
  } else if (v.tail_arg_range > 2.0 * std::numbers::pi && v.tail_modulus_variation < cfg.modulus_variation_tol) {
    v.kind = ProbeKind::oscillation;
  } else if (v.extrapolated_diameter < cfg.limit_tol) {
    v.kind = ProbeKind::limit;
    v.value = acc.back();
  }
  return v;
}

ProbeVerdict limit_probe(const SymbolHandle& h, const PathSpec& path, std::size_t K, const ProbeConfig& cfg) {
  require(K >= 32, "probe needs K >= 32");
  const std::vector<cplx> s = path_points(path, K);
  std::vector<cplx> values(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) values[k] = symbol_eval_dirichlet(h, s[k]);
  return classify_tail(values, cfg);
}

LogFitResult log_singularity_fit(const SymbolHandle& h, const LogFitConfig& cfg) {
  require(!cfg.exponents.empty(), "log fit needs at least one window");
  require(cfg.margin >= 1e-9, "log fit margin must be at least 1e-9");
  require(cfg.samples_per_side >= 4, "log fit needs at least 4 samples per side");
  LogFitResult res;
  for (int k : cfg.exponents) {
    const double half = std::pow(10.0, -k);
    require(half > cfg.margin, "window narrower than the exclusion margin");
    const std::vector<double> offsets = geometric(cfg.margin, half, cfg.samples_per_side);
    std::vector<double> x, y;
    for (double sign : {-1.0, 1.0})
      for (double d : offsets) {
        const BoundaryParam t{cfg.center, sign * d};
        x.push_back(std::log(std::abs(chord(t, cfg.center))));
        y.push_back(h.boundary(t).value.real());
      }
    const LineFit fit = least_squares(x, y);
    LogFitWindow w{half, fit.slope, fit.intercept, 0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) {
      w.g_sup = std::max(w.g_sup, std::abs(y[i] - fit.slope * x[i]));
      w.residual_sup = std::max(w.residual_sup, std::abs(y[i] - fit.slope * x[i] - fit.intercept));
    }
    res.windows.push_back(w);
  }
  const double ref = res.windows.back().slope;
  for (const LogFitWindow& w : res.windows) {
    const double diff = std::abs(w.slope - ref);
    const bool both_zero = std::abs(ref) < cfg.zero_slope && std::abs(w.slope) < cfg.zero_slope;
    if (!both_zero && diff > cfg.slope_tol * std::abs(ref))
      fail(ErrorKind::FitUnstable, "log-fit slope " + std::to_string(w.slope) + " on half-width " +
                                       std::to_string(w.half_width) + " differs from " + std::to_string(ref));
    res.g_sup = std::max(res.g_sup, w.g_sup);
  }
  res.alpha = ref;
  return res;
}

DivergenceReport aplus_divergence_probe(const SeriesSupplier& supplier, std::span<const std::size_t> schedule,
                                        double delta) {
  require(schedule.size() >= 3, "divergence probe needs at least three orders");
  require(std::adjacent_find(schedule.begin(), schedule.end(), std::greater_equal<>()) == schedule.end(),
          "divergence schedule must be strictly increasing");
  const TruncatedSeries s = supplier(schedule.back());
  require(s.order() >= schedule.back(), "supplier returned a series below the requested order");

  DivergenceReport rep;
  rep.orders.assign(schedule.begin(), schedule.end());
  double acc = 0.0;
  std::size_t n = 0;
  for (std::size_t m : schedule) {
    for (; n <= m; ++n) acc += std::abs(s[n]);
    rep.partial_sums.push_back(acc);
  }
  bool all_above = true;
  for (std::size_t i = 1; i < rep.partial_sums.size(); ++i) {
    rep.increments.push_back(rep.partial_sums[i] - rep.partial_sums[i - 1]);
    all_above = all_above && rep.increments.back() > delta;
  }
  std::vector<double> lx;
  for (std::size_t m : schedule) lx.push_back(std::log(static_cast<double>(std::max<std::size_t>(m, 1))));
  const LineFit fit = least_squares(lx, rep.partial_sums);
  rep.kappa = fit.slope;
  rep.intercept = fit.intercept;
  rep.verdict = all_above ? DivergenceVerdict::no_convergence_detected : DivergenceVerdict::stabilizing;
  return rep;
}

}  // namespace aplus
