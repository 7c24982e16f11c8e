#include "aplus/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "aplus/errors.hpp"
#include "aplus/harness.hpp"
#include "aplus/kernels.hpp"
#include "aplus/probes.hpp"
#include "aplus/sector_map.hpp"

namespace aplus {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

class SuiteRunner {
 public:
  explicit SuiteRunner(const SuiteConfig& cfg) : cfg_(cfg) {
    table_cfg_.order = cfg.order;
    if (cfg.tol) table_cfg_.quadrature.rel_tol = *cfg.tol;
    harness_cfg_.table = table_cfg_;
  }

  VerificationReport run() {
    report_.config = cfg_;
    const bool all = cfg_.suite == "all";
    if (all || cfg_.suite == "thm1") thm1();
    if (all || cfg_.suite == "thm2") thm2();
    if (all || cfg_.suite == "counterexample") counterexample();
    if (all || cfg_.suite == "bflq") bflq();
    return std::move(report_);
  }

 private:
  using Body = std::function<void(Record&)>;

  void check(std::string id, std::string anchor, json inputs, const Body& body) {
    Record r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.inputs = std::move(inputs);
    try {
      body(r);
    } catch (const Error& e) {
      r.verdict = e.kind() == ErrorKind::RouteDisagreement ? Verdict::fail : Verdict::inconclusive;
      r.note = e.what();
    } catch (const std::exception& e) {
      r.verdict = Verdict::fail;
      r.note = e.what();
    }
    report_.records.push_back(std::move(r));
  }

  std::vector<cplx> disk_samples(std::size_t count) const {
    std::mt19937_64 rng(cfg_.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<cplx> z(count);
    for (cplx& w : z) w = std::polar((1.0 - 1e-6) * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
    return z;
  }

  void containment(const std::string& prefix, const SymbolHandle& h, std::size_t count) {
    check(prefix + ".containment", "f(D) inside " + describe(*h.target()), {{"samples", count}, {"seed", cfg_.seed}},
          [&](Record& r) {
            const std::vector<cplx> z = disk_samples(count);
            const std::vector<double> outside = evaluate_indexed(
                [&](std::size_t i) { return region_contains(*h.target(), h.eval_disk(z[i])) ? 0.0 : 1.0; }, count);
            const double misses = ordered_sum(outside);
            r.measured = {{"outside", misses}};
            r.predicted = 0;
            r.verdict = misses == 0.0 ? Verdict::pass : Verdict::fail;
          });
  }

  void arclength(const std::string& prefix, const SymbolHandle& h, int N, const std::string& anchor) {
    check(prefix + ".arclength.N" + std::to_string(N), anchor, {{"N", N}}, [&](Record& r) {
      const QuadratureResult q = image_arclength(h, N, table_cfg_.quadrature);
      const double pred = *predicted_arclength(h, N);
      const double rel = std::abs(q.value - pred) / pred;
      r.measured = {{"arclength", q.value}, {"rel_err", rel}, {"quadrature_depth", q.depth}};
      r.predicted = pred;
      r.tolerance = 0.01;
      r.verdict = rel <= 0.01 ? Verdict::pass : Verdict::fail;
    });
  }

  // Checks shared by the two families with continuous boundary values.
  void norm_checks(const std::string& prefix, const SymbolHandle& h) {
    std::vector<int> ns;
    for (int n = 2; n <= std::max(cfg_.n_max, 2); ++n) ns.push_back(n);
    std::optional<NormTable> table;
    check(prefix + ".hardy_dominance", "sum |a_n| <= |F_N(0)| + (1/2) int |F_N'|",
          {{"N_max", cfg_.n_max}, {"order", cfg_.order}}, [&](Record& r) {
            table = norm_table(h, ns, table_cfg_);
            double worst = -HUGE_VAL;
            int worst_n = 0;
            for (const NormRow& row : table->rows) {
              const double margin = row.aplus.truncated_norm - *row.aplus.certified_upper;
              if (margin > worst) {
                worst = margin;
                worst_n = row.N;
              }
            }
            r.measured = {{"max_excess", worst}, {"at_N", worst_n}};
            r.tolerance = 1e-6;
            r.verdict = worst <= 1e-6 ? Verdict::pass : Verdict::fail;
          });
    if (!table) return;
    report_.tables.push_back({prefix + "_norms", *table});

    check(prefix + ".constant_term", "|F_N(0)| = N^{-Re f(0)} < 1/N", {{"N_max", cfg_.n_max}}, [&](Record& r) {
      double worst = 0.0;
      for (const NormRow& row : table->rows)
        worst = std::max(worst, std::abs(power_center(h, row.N)) * row.N);
      r.measured = {{"max_N_times_center", worst}};
      r.predicted = "< 1";
      r.verdict = worst < 1.0 ? Verdict::pass : Verdict::fail;
    });

    check(prefix + ".aplus_stabilization", "plumbing", {{"order", cfg_.order}}, [&](Record& r) {
      double worst = 0.0;
      for (const NormRow& row : table->rows) worst = std::max(worst, row.aplus.stabilization);
      r.measured = {{"max_stabilization", worst}};
      r.tolerance = kConvergedStabilization;
      // Truncated sums are lower bounds under the certified ones; slow
      // stabilization only weakens them.
      if (worst < kConvergedStabilization)
        r.verdict = Verdict::pass;
      else if (worst < 1e-2)
        r.verdict = Verdict::evidence;
      else
        r.verdict = Verdict::inconclusive;
    });

    check(prefix + ".boundedness", "sup_N ||N^{-phi}||_A+ < inf", {{"N_max", cfg_.n_max}}, [&](Record& r) {
      require(cfg_.n_max >= 4, "boundedness evidence needs N_max >= 4");
      const BoundednessReport b = assess_boundedness(*table, harness_cfg_);
      r.measured = {{"classification", to_string(b.verdict)},
                    {"growth_ratio", b.growth_ratio},
                    {"decreasing_from", opt(b.decreasing_from)}};
      r.predicted = to_string(Evidence::bounded);
      r.verdict = b.verdict == Evidence::bounded     ? Verdict::evidence
                  : b.verdict == Evidence::unbounded ? Verdict::fail
                                                     : Verdict::inconclusive;
    });

    check(prefix + ".compactness", "||N^{-phi}||_A+ <= C ln N / N -> 0", {{"N_max", cfg_.n_max}}, [&](Record& r) {
      const CompactnessReport c = assess_compactness(*table, harness_cfg_);
      r.measured = {{"c_fit", opt(c.c_fit)},
                    {"last_certified", opt(c.last_certified)},
                    {"decreasing_from", opt(c.decreasing_from)}};
      r.tolerance = harness_cfg_.decay_threshold;
      r.verdict = c.decays ? Verdict::evidence : Verdict::inconclusive;
      if (!c.decays && c.last_certified)
        r.note = "certified bound at N_max has not dropped below the decay threshold";
    });

    check(prefix + ".l2_summability", "sum_N ||N^{-phi}||^2 <= C^2 sum (ln N)^2 / N^2 < inf",
          {{"N_max", cfg_.n_max}}, [&](Record& r) {
            require(cfg_.n_max >= 8, "l2 summability needs N_max >= 8");
            const L2Report l2 = l2_summability(table->rows);
            r.measured = {{"partial_sum", l2.partial_sum},
                          {"tail_bound", l2.tail_bound},
                          {"total", l2.total},
                          {"tail_fraction", l2.tail_fraction},
                          {"c_fit", l2.c_fit}};
            r.tolerance = 0.01;
            r.verdict = std::isfinite(l2.total) && l2.tail_fraction < 0.01 ? Verdict::pass : Verdict::inconclusive;
          });
  }

  std::vector<std::size_t> dyadic_schedule() const {
    std::vector<std::size_t> s;
    for (std::size_t m = 1 << 10; m <= cfg_.order; m <<= 1) s.push_back(m);
    return s;
  }

  void thm1() {
    const SymbolHandle h = build_thm1_symbol();
    const std::string arc_anchor = "int |F_N'| = 2/N + 2 pi ln N / N";

    check("thm1.center", "f(0) = 1 + 2 ln(1 + sqrt 2)", {}, [&](Record& r) {
      const cplx f0 = h.eval_disk(0.0);
      const double expected = 1.0 + 2.0 * std::log1p(std::numbers::sqrt2);
      r.measured = cjson(f0);
      r.predicted = expected;
      r.tolerance = 1e-12;
      r.verdict = std::abs(f0 - expected) <= 1e-12 ? Verdict::pass : Verdict::fail;
    });
    containment("thm1", h, 100000);
    for (int N : {2, 3, 5, 10, 100}) arclength("thm1", h, N, arc_anchor);

    for (int N : {2, 3, 5}) {
      check("thm1.dual_route.N" + std::to_string(N), "N^{-f} = exp(-f ln N)", {{"N", N}, {"order", cfg_.order}},
            [&](Record& r) {
              const BasisImage img = basis_image(h, N, cfg_.order);
              r.measured = {{"max_difference", img.route_defect}, {"indices", img.checked_indices}};
              r.tolerance = 1e-8;
              r.verdict = Verdict::pass;
            });
    }
    norm_checks("thm1", h);

    check("thm1.hp_growth", "||f||_p = O(p)", {{"p", {2, 4, 8, 16, 32, 64}}}, [&](Record& r) {
      const std::vector<double> ps = {2, 4, 8, 16, 32, 64};
      std::vector<double> norms;
      for (double p : ps)
        norms.push_back(
            hp_norm([&](const BoundaryParam& t) { return h.boundary(t).value; }, p, h.singular_params(),
                    table_cfg_.quadrature)
                .value);
      double mx = 0, my = 0;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        mx += ps[i];
        my += norms[i];
      }
      mx /= ps.size();
      my /= ps.size();
      double sxx = 0, sxy = 0;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        sxx += (ps[i] - mx) * (ps[i] - mx);
        sxy += (ps[i] - mx) * (norms[i] - my);
      }
      const double slope = sxy / sxx;
      bool ratio_nonincreasing = true;
      for (std::size_t i = 1; i < ps.size(); ++i)
        ratio_nonincreasing = ratio_nonincreasing && norms[i] / ps[i] <= norms[i - 1] / ps[i - 1];
      r.measured = {{"norms", norms}, {"slope", slope}, {"intercept", my - slope * mx},
                    {"norm_over_p_nonincreasing", ratio_nonincreasing}};
      r.verdict = slope > 0 && ratio_nonincreasing ? Verdict::evidence : Verdict::inconclusive;
    });

    check("thm1.log_singularity", "Re f(e^{it}) = alpha log|i - e^{it}| + g(t), g bounded", {}, [&](Record& r) {
      const LogFitResult fit = log_singularity_fit(h);
      json slopes = json::array(), sups = json::array();
      for (const LogFitWindow& w : fit.windows) {
        slopes.push_back(w.slope);
        sups.push_back(w.g_sup);
      }
      r.measured = {{"alpha", fit.alpha}, {"g_sup", fit.g_sup}, {"window_slopes", slopes}, {"window_g_sup", sups}};
      r.verdict = Verdict::evidence;
    });

    check("thm1.divergence_contrast", "f not in A+, N^{-f} in A+", {{"max_order", cfg_.order}}, [&](Record& r) {
      const std::vector<std::size_t> sched = dyadic_schedule();
      require(sched.size() >= 3, "divergence contrast needs order >= 4096");
      const DivergenceReport fr = aplus_divergence_probe(
          [&](std::size_t m) { return *h.series(m, table_cfg_.coefficients.series); }, sched);
      const BasisImageConfig bcfg;
      PowerCoefficientConfig pc{bcfg.oversample, bcfg.min_samples, {}, Exec::parallel};
      const DivergenceReport Fr = aplus_divergence_probe(
          [&](std::size_t m) { return power_coefficients_boundary(h, 2, m, pc); }, sched);
      const double cert = std::abs(power_center(h, 2)) + 0.5 * image_arclength(h, 2, table_cfg_.quadrature).value;
      bool shrinking = true;
      for (std::size_t i = 1; i < Fr.increments.size(); ++i)
        shrinking = shrinking && Fr.increments[i] < Fr.increments[i - 1];
      r.measured = {{"f_kappa", fr.kappa},
                    {"f_verdict", to_string(fr.verdict)},
                    {"f_increments", fr.increments},
                    {"F2_partial_sums", Fr.partial_sums},
                    {"F2_increments", Fr.increments},
                    {"F2_certified", cert}};
      const bool ok = fr.verdict == DivergenceVerdict::no_convergence_detected && fr.kappa > 0 && shrinking &&
                      Fr.partial_sums.back() <= cert + 1e-6;
      r.verdict = ok ? Verdict::evidence : Verdict::inconclusive;
    });

    check("thm1.conjugate_symmetry", "plumbing", {{"samples", 10000}, {"seed", cfg_.seed}}, [&](Record& r) {
      const std::vector<cplx> z = disk_samples(10000);
      double worst = 0.0;
      for (cplx w : z) worst = std::max(worst, std::abs(h.eval_disk(std::conj(w)) - std::conj(h.eval_disk(w))));
      r.measured = {{"max_defect", worst}};
      r.verdict = Verdict::evidence;
      r.note = "measured only";
    });
  }

  void thm2() {
    const double p = cfg_.p;
    std::optional<SymbolHandle> h;
    check("thm2.map_validation", "plumbing", {{"p", p}}, [&](Record& r) {
      const SectorCapMap map(p);
      h = build_thm2_symbol(p);
      r.measured = {{"boundary_defect", map.validation_defect()}, {"scale", map.scale()}};
      r.tolerance = 1e-8;
      r.verdict = Verdict::pass;
    });
    if (!h) return;
    const double beta = kPi / (2.0 * p);

    check("thm2.center", "f(0) real and > 1", {{"p", p}}, [&](Record& r) {
      const cplx f0 = h->eval_disk(0.0);
      r.measured = cjson(f0);
      r.verdict = std::abs(f0.imag()) <= 1e-12 * std::abs(f0) && f0.real() > 1.0 ? Verdict::pass : Verdict::fail;
    });
    containment("thm2", *h, 20000);
    for (int N : {2, 10}) arclength("thm2", *h, N, "int |F_N'| = (2/cos b)/N + (tan b/pi) ln N / N");
    for (int N : {2, 10}) {
      check("thm2.arclength_geometry.N" + std::to_string(N), "two rays (1/cos b)/N each plus arc 2 tan b ln N / N",
            {{"N", N}, {"p", p}}, [&](Record& r) {
              const double len = image_arclength(*h, N, table_cfg_.quadrature).value;
              const double geo = 2.0 / (std::cos(beta) * N) + 2.0 * std::tan(beta) * std::log(double(N)) / N;
              const double rel = std::abs(len - geo) / geo;
              r.measured = {{"arclength", len}, {"rel_err", rel}};
              r.predicted = geo;
              r.tolerance = 0.01;
              r.verdict = rel <= 0.01 ? Verdict::pass : Verdict::fail;
            });
    }
    check("thm2.interior_route.N2", "plumbing", {{"order", std::min<std::size_t>(cfg_.order, 4096)}},
          [&](Record& r) {
            BasisImageConfig bc;
            bc.min_samples = 0;
            const BasisImage img = basis_image(*h, 2, std::min<std::size_t>(cfg_.order, 4096), bc);
            r.measured = {{"max_difference", img.route_defect}, {"indices", img.checked_indices}};
            r.tolerance = bc.interior_tol;
            r.verdict = Verdict::pass;
          });
    norm_checks("thm2", *h);

    check("thm2.hp_threshold", "f in H^q for q < p, f not in H^p", {{"q_below", p - 0.1}, {"q_above", p + 0.1}},
          [&](Record& r) {
            auto eval = [&](const BoundaryParam& t) { return h->boundary(t).value; };
            const QuadratureResult below = hp_integral(eval, p - 0.1, h->singular_params(), table_cfg_.quadrature);
            const QuadratureResult above = hp_integral(eval, p + 0.1, h->singular_params(), table_cfg_.quadrature);
            r.measured = {{"below_converged", below.converged},
                          {"below_value", below.value},
                          {"above_converged", above.converged},
                          {"above_last_value", above.value}};
            r.verdict = below.converged && !above.converged ? Verdict::evidence : Verdict::inconclusive;
          });
  }

  void counterexample() {
    const double A = cfg_.A;
    const SymbolHandle h = build_counterexample_symbol(A);
    check("counterexample.value_at_1", "phi(s) = A + 1 + exp(-(1 + 2^{-s})/(1 - 2^{-s}))", {{"A", A}, {"s", 1}},
          [&](Record& r) {
            const cplx v = symbol_eval_dirichlet(h, 1.0);
            const double expected = A + 1.0 + std::exp(-3.0);
            r.measured = cjson(v);
            r.predicted = expected;
            r.tolerance = 1e-12;
            r.verdict = std::abs(v - expected) <= 1e-12 ? Verdict::pass : Verdict::fail;
          });
    check("counterexample.containment", "A < Re phi <= A + 2", {{"samples", 100000}, {"seed", cfg_.seed}},
          [&](Record& r) {
            const std::vector<cplx> z = disk_samples(100000);
            double lo = HUGE_VAL, hi = -HUGE_VAL;
            for (cplx w : z) {
              const double re = h.eval_disk(w).real();
              lo = std::min(lo, re);
              hi = std::max(hi, re);
            }
            r.measured = {{"min_re", lo}, {"max_re", hi}};
            r.verdict = lo > A && hi <= A + 2.0 ? Verdict::pass : Verdict::fail;
          });

    std::optional<ProbeVerdict> radial, parabolic;
    check("counterexample.radial_limit", "phi(s) -> A + 1 along s = sigma", {{"a", 0}, {"K", 256}}, [&](Record& r) {
      radial = limit_probe(h, PathSpec{});
      r.measured = {{"kind", to_string(radial->kind)}, {"tail_diameter", radial->tail_diameter}};
      if (radial->value) r.measured["value"] = cjson(*radial->value);
      r.predicted = A + 1.0;
      r.tolerance = 1e-5;
      if (radial->kind != ProbeKind::limit)
        r.verdict = Verdict::inconclusive;
      else
        r.verdict = std::abs(*radial->value - (A + 1.0)) <= 1e-5 ? Verdict::evidence : Verdict::fail;
    });
    check("counterexample.parabolic_oscillation", "no limit as s -> 0 along s = t^2 + i t", {{"a", 0}, {"K", 256}},
          [&](Record& r) {
            PathSpec path;
            path.shape = PathShape::parabolic;
            parabolic = limit_probe(h, path);
            const double expected = std::exp(-2.0 / std::numbers::ln2);
            r.measured = {{"kind", to_string(parabolic->kind)},
                          {"tail_modulus", parabolic->tail_modulus},
                          {"tail_arg_range", parabolic->tail_arg_range}};
            r.predicted = expected;
            r.tolerance = 0.1;
            const bool close = std::abs(parabolic->tail_modulus - expected) <= 0.1 * expected;
            r.verdict = parabolic->kind == ProbeKind::oscillation && close ? Verdict::evidence : Verdict::inconclusive;
          });
    check("counterexample.dichotomy", "limit or Re phi -> inf at every boundary point", {}, [&](Record& r) {
      require(radial && parabolic, "probe results unavailable");
      r.measured = {{"radial", to_string(radial->kind)}, {"parabolic", to_string(parabolic->kind)}};
      r.verdict = radial->kind != parabolic->kind && parabolic->kind == ProbeKind::oscillation ? Verdict::evidence
                                                                                                : Verdict::inconclusive;
    });
    check("counterexample.non_convergence", "N^{-phi} not in A+", {{"N", 2}, {"max_order", cfg_.order}},
          [&](Record& r) {
            const std::vector<std::size_t> sched = dyadic_schedule();
            require(sched.size() >= 3, "non-convergence evidence needs order >= 4096");
            BasisImageConfig bc;
            bc.schedule = sched;
            const BasisImage img = basis_image(h, 2, cfg_.order, bc);
            const DivergenceReport d = aplus_divergence_probe([&](std::size_t) { return img.series; }, sched);
            r.measured = {{"partial_sums", d.partial_sums},
                          {"increments", d.increments},
                          {"interior_check_defect", img.route_defect},
                          {"certified", img.certified}};
            r.tolerance = 1e-3;
            r.verdict =
                d.verdict == DivergenceVerdict::no_convergence_detected ? Verdict::evidence : Verdict::inconclusive;
          });
  }

  void bflq() {
    const SymbolHandle h = build_bflq_symbol(cfg_.c1, cfg_.cr, cfg_.cr2, cfg_.r);
    const json params = {{"c1", cjson(cfg_.c1)}, {"cr", cfg_.cr}, {"cr2", cfg_.cr2}, {"r", cfg_.r}};
    check("bflq.symbol_norm", "phi = c1 + c_r r^{-s} + c_{r^2} r^{-2s}", params, [&](Record& r) {
      const TruncatedSeries s = *h.series(2);
      const double norm = aplus_norm(s).truncated_norm;
      const double expected = std::abs(cfg_.c1) + cfg_.cr + cfg_.cr2;
      r.measured = norm;
      r.predicted = expected;
      r.tolerance = 0;
      r.verdict = norm == expected ? Verdict::pass : Verdict::fail;
    });
    check("bflq.bohr_lift", "plumbing", params, [&](Record& r) {
      const TruncatedSeries s = *h.series(2);
      const DirichletCoefficients d = bohr_lift_single_prime(s, cfg_.r);
      r.measured = {{"dirichlet_norm", dirichlet_norm(d)}, {"series_norm", aplus_norm(s).truncated_norm}};
      r.verdict = dirichlet_norm(d) == aplus_norm(s).truncated_norm ? Verdict::pass : Verdict::fail;
    });
    check("bflq.boundedness", "unbounded if Re c1 < c_r^2 / (8 c_{r^2})", params, [&](Record& r) {
      std::vector<int> ns;
      for (int n = 2; n <= cfg_.n_max; ++n) ns.push_back(n);
      require(cfg_.n_max >= 4, "boundedness evidence needs N_max >= 4");
      const BoundednessReport b = assess_boundedness(norm_table(h, ns, table_cfg_), harness_cfg_);
      report_.tables.push_back({"bflq_norms", b.table});
      const bool predicts_unbounded = cfg_.c1.real() < cfg_.cr * cfg_.cr / (8.0 * cfg_.cr2);
      r.measured = {{"classification", to_string(b.verdict)},
                    {"growth_ratio", b.growth_ratio},
                    {"strictly_increasing", b.truncated_monotone}};
      if (predicts_unbounded) {
        r.predicted = to_string(Evidence::unbounded);
        r.verdict = b.verdict == Evidence::unbounded ? Verdict::evidence
                    : b.verdict == Evidence::bounded ? Verdict::fail
                                                     : Verdict::inconclusive;
      } else {
        r.note = "no prediction for these parameters; classification reported only";
        r.verdict = b.verdict == Evidence::inconclusive ? Verdict::inconclusive : Verdict::evidence;
      }
    });
  }

  SuiteConfig cfg_;
  NormTableConfig table_cfg_;
  HarnessConfig harness_cfg_;
  VerificationReport report_;
};

json row_json(const NormRow& row) {
  return {{"N", row.N},
          {"aplus_truncated", row.aplus.truncated_norm},
          {"aplus_certified", opt(row.aplus.certified_upper)},
          {"stabilization", row.aplus.stabilization},
          {"arclength_measured", opt(row.arclength)},
          {"arclength_predicted", opt(row.predicted_arclength)},
          {"c_fit", opt(row.c_fit)},
          {"rel_err", opt(row.rel_err)}};
}

void append_number(std::string& out, double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

std::optional<double> parse_cell(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc() || res.ptr != cell.data() + cell.size())
    fail(ErrorKind::InvalidArgument, "malformed CSV cell '" + std::string(cell) + "'");
  return v;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::evidence: return "evidence";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

void validate(const SuiteConfig& cfg) {
  static const std::vector<std::string> suites = {"thm1", "thm2", "counterexample", "bflq", "all"};
  require(std::find(suites.begin(), suites.end(), cfg.suite) != suites.end(), "unknown suite '" + cfg.suite + "'");
  require(cfg.p > 1.0, "--p must be > 1");
  require(cfg.A >= 0.0, "--A must be >= 0");
  require(cfg.cr > 0.0 && cfg.cr2 > 0.0, "--cr and --cr2 must be > 0");
  require(cfg.r >= 2, "--r must be an integer >= 2");
  require(cfg.n_max >= 2, "--nmax must be >= 2");
  require(cfg.order >= 1, "--order must be >= 1");
  require(!cfg.tol || (*cfg.tol > 0.0 && *cfg.tol < 1.0), "--tol must lie in (0, 1)");
  require(cfg.workers >= 0, "--workers must be >= 0");
}

int VerificationReport::count(Verdict v) const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [v](const Record& r) { return r.verdict == v; }));
}

int VerificationReport::exit_code() const {
  if (count(Verdict::fail) > 0) return 1;
  if (count(Verdict::inconclusive) > 0) return 2;
  return 0;
}

json VerificationReport::to_json() const {
  json cfg = {{"suite", config.suite},
              {"p", config.p},
              {"A", config.A},
              {"c1", cjson(config.c1)},
              {"cr", config.cr},
              {"cr2", config.cr2},
              {"r", config.r},
              {"n_max", config.n_max},
              {"order", config.order},
              {"tol", opt(config.tol)},
              {"seed", config.seed}};
  json recs = json::array();
  for (const Record& r : records) {
    recs.push_back({{"id", r.id},
                    {"anchor", r.anchor},
                    {"inputs", r.inputs},
                    {"measured", r.measured},
                    {"predicted", r.predicted},
                    {"tolerance", r.tolerance},
                    {"verdict", to_string(r.verdict)},
                    {"note", r.note}});
  }
  json tabs = json::object();
  for (const NamedTable& t : tables) {
    json rows = json::array();
    for (const NormRow& row : t.table.rows) rows.push_back(row_json(row));
    tabs[t.name] = {{"rows", rows}, {"c_fit", opt(t.table.c_fit)}};
  }
  return {{"schema_version", kReportSchemaVersion},
          {"environment",
           {{"version", kWorkbenchVersion}, {"precision", "binary64"}, {"seed", config.seed}, {"log", "natural"}}},
          {"config", cfg},
          {"records", recs},
          {"tables", tabs},
          {"totals",
           {{"pass", count(Verdict::pass)},
            {"fail", count(Verdict::fail)},
            {"evidence", count(Verdict::evidence)},
            {"inconclusive", count(Verdict::inconclusive)},
            {"exit_code", exit_code()}}}};
}

VerificationReport run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  set_workers(cfg.workers);
  return SuiteRunner(cfg).run();
}

void write_json(const VerificationReport& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot open " + path.string() + " for writing");
  out << report.to_json().dump(2) << '\n';
}

std::vector<CsvRow> csv_rows(const NormTable& table) {
  std::vector<CsvRow> rows;
  for (const NormRow& r : table.rows)
    rows.push_back({r.N, r.aplus.truncated_norm, r.aplus.certified_upper, r.arclength, r.predicted_arclength,
                    r.rel_err});
  return rows;
}

std::string to_csv(const NormTable& table) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const CsvRow& r : csv_rows(table)) {
    out += std::to_string(r.N);
    for (const std::optional<double>& v :
         {std::optional<double>(r.aplus_truncated), r.aplus_certified, r.arclength_measured, r.arclength_predicted,
          r.rel_err}) {
      out += ',';
      if (v) append_number(out, *v);
    }
    out += '\n';
  }
  return out;
}

std::vector<CsvRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) fail(ErrorKind::InvalidArgument, "unexpected CSV header");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> cells;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1))
      cells.push_back(rest.substr(0, pos));
    cells.push_back(rest);
    if (cells.size() != 6) fail(ErrorKind::InvalidArgument, "CSV row with " + std::to_string(cells.size()) + " cells");
    CsvRow r;
    const std::optional<double> n = parse_cell(cells[0]);
    const std::optional<double> trunc = parse_cell(cells[1]);
    if (!n || !trunc) fail(ErrorKind::InvalidArgument, "CSV row missing N or aplus_truncated");
    r.N = static_cast<int>(*n);
    r.aplus_truncated = *trunc;
    r.aplus_certified = parse_cell(cells[2]);
    r.arclength_measured = parse_cell(cells[3]);
    r.arclength_predicted = parse_cell(cells[4]);
    r.rel_err = parse_cell(cells[5]);
    rows.push_back(r);
  }
  return rows;
}

std::vector<std::filesystem::path> write_csv(const VerificationReport& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> paths;
  for (const NamedTable& t : report.tables) {
    const std::filesystem::path path = dir / (t.name + ".csv");
    std::ofstream out(path);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot open " + path.string() + " for writing");
    out << to_csv(t.table);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace aplus
