#include "aplus/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace aplus {
namespace {

GaussRule make_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

struct Half {
  double anchor;
  double direction;  // +1: offsets grow away from the anchor; -1: shrink below it
  double length;
};

std::vector<Half> make_halves(std::span<const double> singular) {
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> s(singular.begin(), singular.end());
  for (double& x : s) x = std::fmod(std::fmod(x, two_pi) + two_pi, two_pi);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) s.push_back(0.0);
  std::vector<Half> halves;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const double next = (k + 1 < s.size()) ? s[k + 1] : s[0] + two_pi;
    const double half_len = 0.5 * (next - s[k]);
    halves.push_back({s[k], +1.0, half_len});
    halves.push_back({k + 1 < s.size() ? s[k + 1] : s[0], -1.0, half_len});
  }
  return halves;
}

struct Node {
  BoundaryParam t;
  double weight;
};

void shell_nodes(const Half& h, int k, int subpanels, const GaussRule& g, std::vector<Node>& out) {
  const double hi = std::ldexp(h.length, -k);
  const double lo = 0.5 * hi;
  const double w = (hi - lo) / subpanels;
  for (int j = 0; j < subpanels; ++j) {
    const double mid = lo + (j + 0.5) * w;
    for (std::size_t q = 0; q < g.nodes.size(); ++q) {
      const double x = mid + 0.5 * w * g.nodes[q];
      out.push_back({{h.anchor, h.direction * x}, 0.5 * w * g.weights[q]});
    }
  }
}

// Shell sums for every half at shells [k_lo, k_hi), flattened half-major.
std::vector<double> shell_sums(const std::function<double(const BoundaryParam&)>& f,
                               const std::vector<Half>& halves, int k_lo, int k_hi, int subpanels,
                               const QuadratureConfig& cfg) {
  const GaussRule& g = gauss_legendre(cfg.gauss_points);
  std::vector<Node> nodes;
  const std::size_t per_shell = static_cast<std::size_t>(subpanels) * g.nodes.size();
  nodes.reserve(halves.size() * (k_hi - k_lo) * per_shell);
  for (const Half& h : halves)
    for (int k = k_lo; k < k_hi; ++k) shell_nodes(h, k, subpanels, g, nodes);
  std::vector<double> values =
      evaluate_indexed([&](std::size_t i) { return nodes[i].weight * f(nodes[i].t); }, nodes.size(), cfg.exec);
  std::vector<double> sums;
  sums.reserve(values.size() / per_shell);
  for (std::size_t i = 0; i < values.size(); i += per_shell)
    sums.push_back(ordered_sum(std::span<const double>(values).subspan(i, per_shell)));
  return sums;
}

// One panel per half over [0, length 2^-depth], the gap the shells leave
// around each anchor.
double core_sum(const std::function<double(const BoundaryParam&)>& f, const std::vector<Half>& halves, int depth,
                const QuadratureConfig& cfg) {
  const GaussRule& g = gauss_legendre(cfg.gauss_points);
  std::vector<Node> nodes;
  for (const Half& h : halves) {
    const double w = std::ldexp(h.length, -depth);
    for (std::size_t q = 0; q < g.nodes.size(); ++q)
      nodes.push_back({{h.anchor, h.direction * 0.5 * w * (1.0 + g.nodes[q])}, 0.5 * w * g.weights[q]});
  }
  const std::vector<double> values =
      evaluate_indexed([&](std::size_t i) { return nodes[i].weight * f(nodes[i].t); }, nodes.size(), cfg.exec);
  return ordered_sum(values);
}

bool close_enough(double a, double b, const QuadratureConfig& cfg) {
  const double d = std::abs(a - b);
  return std::isfinite(a) && std::isfinite(b) && (d <= cfg.rel_tol * std::abs(a) || d <= cfg.abs_tol);
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> rules;
  std::lock_guard lock(mu);
  auto it = rules.find(n);
  if (it == rules.end()) it = rules.emplace(n, make_rule(n)).first;
  return it->second;
}

QuadratureResult integrate_circle(const std::function<double(const BoundaryParam&)>& integrand,
                                  std::span<const double> singular_params, const QuadratureConfig& cfg) {
  const std::vector<Half> halves = make_halves(singular_params);
  QuadratureResult res;

  // Phase 1: resolve the shells at fixed depth.
  int subpanels = cfg.initial_subpanels;
  int depth = cfg.initial_depth;
  std::vector<std::vector<double>> per_half(halves.size());
  auto total = [&]() {
    double s = core_sum(integrand, halves, depth, cfg);
    for (const auto& shells : per_half)
      for (double v : shells) s += v;
    return s;
  };
  auto recompute = [&]() {
    std::vector<double> flat = shell_sums(integrand, halves, 0, depth, subpanels, cfg);
    for (std::size_t h = 0; h < halves.size(); ++h)
      per_half[h].assign(flat.begin() + h * depth, flat.begin() + (h + 1) * depth);
  };
  recompute();
  res.history.push_back(total());
  bool resolved = false;
  for (int d = 0; d < cfg.max_subpanel_doublings; ++d) {
    subpanels *= 2;
    recompute();
    res.history.push_back(total());
    if (close_enough(res.history.back(), res.history[res.history.size() - 2], cfg)) {
      resolved = true;
      break;
    }
  }

  // Phase 2: deepen the grading, reusing resolved shells.
  bool deep_ok = false;
  while (depth + cfg.depth_step <= cfg.max_depth) {
    std::vector<double> flat = shell_sums(integrand, halves, depth, depth + cfg.depth_step, subpanels, cfg);
    for (std::size_t h = 0; h < halves.size(); ++h)
      per_half[h].insert(per_half[h].end(), flat.begin() + h * cfg.depth_step,
                         flat.begin() + (h + 1) * cfg.depth_step);
    depth += cfg.depth_step;
    res.history.push_back(total());
    if (close_enough(res.history.back(), res.history[res.history.size() - 2], cfg)) {
      deep_ok = true;
      break;
    }
    if (!std::isfinite(res.history.back())) break;
  }

  res.value = res.history.back();
  res.error_estimate = std::abs(res.history.back() - res.history[res.history.size() - 2]);
  res.depth = depth;
  res.subpanels = subpanels;
  res.refinements = static_cast<int>(res.history.size());
  res.converged = resolved && deep_ok;
  return res;
}

}  // namespace aplus
