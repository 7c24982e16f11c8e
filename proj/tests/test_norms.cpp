#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "aplus/errors.hpp"
#include "aplus/norms.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

using namespace aplus;

namespace {
constexpr double kPi = std::numbers::pi;

// Length of the polyline through F_N(e^{it_j}) on a uniform grid.
double polyline_length(const SymbolHandle& h, int N, std::size_t count) {
  const double ln_n = std::log(double(N));
  auto F = [&](double t) {
    const cplx f = h.boundary({t, 0.0}).value;
    return std::isinf(f.real()) ? cplx{} : std::exp(-ln_n * f);
  };
  double len = 0.0;
  cplx prev = F(0.0);
  for (std::size_t j = 1; j <= count; ++j) {
    const cplx cur = F(2.0 * kPi * double(j) / double(count) + 1e-7);
    len += std::abs(cur - prev);
    prev = cur;
  }
  return len;
}
}  // namespace

TEST_CASE("A+ partial sums") {
  std::mt19937_64 rng(11);
  const auto c = oracle::random_series(rng, 300);
  const TruncatedSeries s(c);
  const std::vector<std::size_t> schedule{10, 100, 300, 1000};
  const AplusNormResult r = aplus_norm(s, schedule);
  // 1000 clamps to 300 and merges with it.
  REQUIRE(r.partial_sums.size() == 3);
  for (const PartialSum& ps : r.partial_sums) {
    const std::size_t m = std::min<std::size_t>(ps.order, 300);
    const double ref = oracle::abs_sum({c.begin(), c.begin() + m + 1});
    CHECK(ps.value == doctest::Approx(ref).epsilon(1e-14));
  }
  CHECK(r.order == 300);
  CHECK(r.truncated_norm == doctest::Approx(oracle::abs_sum(c)).epsilon(1e-14));
  const double s100 = oracle::abs_sum({c.begin(), c.begin() + 101});
  CHECK(r.stabilization == doctest::Approx((r.truncated_norm - s100) / r.truncated_norm).epsilon(1e-12));
  const AplusNormResult whole = aplus_norm(s);
  CHECK(whole.truncated_norm == doctest::Approx(r.truncated_norm));
  CHECK(default_schedule() == std::vector<std::size_t>{1u << 12, 1u << 14, 1u << 16});
}

TEST_CASE("power jets") {
  const BoundaryJet f{cplx(1.0, 2.0), cplx(0.5, -1.0)};
  const double ln_n = std::log(3.0);
  const BoundaryJet F = power_jet(f, ln_n);
  CHECK(std::abs(F.value - std::pow(3.0, -f.value)) < 1e-15);
  CHECK(std::abs(F.d_dt + ln_n * f.d_dt * F.value) < 1e-15);
  const BoundaryJet inf = power_jet({cplx(HUGE_VAL, 0.0), cplx(1.0, 0.0)}, ln_n);
  CHECK(inf.value == cplx{});
  CHECK(inf.d_dt == cplx{});
}

TEST_CASE("Hp norms of explicit functions") {
  const std::vector<double> none;
  const auto one_plus_z = [](const BoundaryParam& t) { return 1.0 + unit_point(t); };
  // (1/2pi) ∫ |1 + e^{it}|^2 dt = 2.
  CHECK(hp_norm(one_plus_z, 2.0, none).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  // (1/2pi) ∫ |1 + e^{it}|^4 dt = 6.
  CHECK(hp_norm(one_plus_z, 4.0, none).value == doctest::Approx(std::pow(6.0, 0.25)).epsilon(1e-10));
  const auto constant = [](const BoundaryParam&) { return cplx(3.0, 4.0); };
  CHECK(hp_norm(constant, 3.0, none).value == doctest::Approx(5.0).epsilon(1e-12));
  // |e^{it} - 1|^{-1/2} is in L^p for p < 2 only.
  const std::vector<double> at_zero{0.0};
  const auto spike = [](const BoundaryParam& t) { return cplx(1.0 / std::sqrt(std::abs(chord(t, 0.0)))); };
  CHECK(hp_norm(spike, 1.5, at_zero).quadrature.converged);
  CHECK_ERROR_KIND(hp_norm(spike, 2.5, at_zero), QuadratureDivergence);
  CHECK_FALSE(hp_integral(spike, 2.5, at_zero).converged);
}

TEST_CASE("arclength of the half-strip images") {
  const SymbolHandle h = build_thm1_symbol();
  QuadratureConfig q;
  q.rel_tol = 1e-10;
  for (int N : {2, 3, 10}) {
    const double geometric = 2.0 / N + 2.0 * kPi * std::log(double(N)) / N;
    const QuadratureResult L = image_arclength(h, N, q);
    CHECK(L.converged);
    CHECK(L.value == doctest::Approx(geometric).epsilon(1e-7));
    CHECK(*predicted_arclength(h, N) == doctest::Approx(geometric).epsilon(1e-15));
    CHECK(polyline_length(h, N, 1 << 18) == doctest::Approx(geometric).epsilon(1e-3));
  }
  CHECK(image_arclength(h, 1).value == 0.0);
}

TEST_CASE("arclength of the sector-cap image matches its geometry") {
  const SymbolHandle h = build_thm2_symbol(2.0);
  const double beta = kPi / 4;
  for (int N : {2, 5}) {
    const double ln_n = std::log(double(N));
    const double geometric = 2.0 / (N * std::cos(beta)) + 2.0 * std::tan(beta) * ln_n / N;
    const double measured = image_arclength(h, N).value;
    CHECK(measured == doctest::Approx(geometric).epsilon(1e-3));
    CHECK(polyline_length(h, N, 1 << 16) == doctest::Approx(geometric).epsilon(1e-2));
  }
}

TEST_CASE("constant and counterexample arclength") {
  const SymbolHandle c = build_constant_symbol(2.0);
  CHECK(image_arclength(c, 5).value == 0.0);
  CHECK(*predicted_arclength(c, 5) == 0.0);
  const SymbolHandle ce = build_counterexample_symbol(0.0);
  CHECK_ERROR_KIND(image_arclength(ce, 2), SampleSingularity);
  CHECK_FALSE(predicted_arclength(ce, 2).has_value());
}

TEST_CASE("Hardy bound dominates the truncated norm") {
  const SymbolHandle h = build_thm1_symbol();
  for (int N : {2, 3, 7}) {
    const double ln_n = std::log(double(N));
    const JetFn F = [&](const BoundaryParam& t) { return power_jet(h.boundary(t), ln_n); };
    const HardyBound b = hardy_upper_bound(F, power_center(h, N), h.singular_params());
    const TruncatedSeries s = *power_coefficients_formal(h, N, 4096);
    CHECK(b.center_abs == doctest::Approx(std::abs(s[0])).epsilon(1e-13));
    CHECK(b.value == doctest::Approx(b.center_abs + 0.5 * b.arclength.value));
    CHECK(oracle::abs_sum({s.coeffs().begin(), s.coeffs().end()}) <= b.value);
  }
}

TEST_CASE("coefficient routes") {
  const SymbolHandle h = build_thm1_symbol();
  PowerCoefficientConfig cfg;
  cfg.oversample = 8;
  cfg.min_samples = 1 << 19;
  CHECK(boundary_sample_count(100, cfg) == (1u << 19));
  CHECK(boundary_sample_count(1 << 16, cfg) == (1u << 20));  // 2^16 + 1 coefficients round up to 2^17
  const TruncatedSeries b = power_coefficients_boundary(h, 2, 512, cfg);
  const TruncatedSeries f = *power_coefficients_formal(h, 2, 512);
  double worst = 0.0;
  for (std::size_t n = 0; n <= 512; ++n) worst = std::max(worst, std::abs(b[n] - f[n]));
  CHECK(worst < 1e-8);
  CHECK(std::abs(f[0] - power_center(h, 2)) < 1e-15);
  // exp(-ln N * f) against the direct recurrence on the f-series.
  const TruncatedSeries fs = *h.series(256);
  std::vector<cplx> scaled(257);
  for (std::size_t n = 0; n <= 256; ++n) scaled[n] = -std::log(3.0) * fs[n];
  const auto ref = oracle::exp_series(scaled);
  const TruncatedSeries f3 = *power_coefficients_formal(h, 3, 256);
  for (std::size_t n = 0; n <= 256; ++n) CHECK(std::abs(f3[n] - ref[n]) < 1e-12);

  const std::vector<cplx> flat(64, cplx(2.0));
  const TruncatedSeries k = power_coefficients_from_values(flat, 2, 10);
  CHECK(std::abs(k[0] - 0.25) < 1e-15);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(std::abs(k[n]) < 1e-15);
  CHECK_ERROR_KIND(power_coefficients_boundary(build_counterexample_symbol(0.0), 2, 16), SampleSingularity);
}

TEST_CASE("norm table") {
  const SymbolHandle h = build_thm1_symbol();
  NormTableConfig cfg;
  cfg.order = 1 << 12;
  const std::vector<int> Ns{5, 2, 3};
  const NormTable t = norm_table(h, Ns, cfg);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].N == 2);
  CHECK(t.rows[2].N == 5);
  double sup = 0.0;
  for (const NormRow& r : t.rows) {
    REQUIRE(r.hardy_bound);
    REQUIRE(r.c_fit);
    REQUIRE(r.arclength);
    REQUIRE(r.rel_err);
    CHECK(*r.c_fit == doctest::Approx(*r.hardy_bound * r.N / std::log(double(r.N))));
    CHECK(r.aplus.truncated_norm <= *r.hardy_bound);
    CHECK(*r.rel_err == doctest::Approx(std::abs(*r.arclength - *r.predicted_arclength) / *r.predicted_arclength));
    CHECK(r.aplus.partial_sums.size() == 3);
    sup = std::max(sup, *r.c_fit);
    const NormRow single = norm_row(h, r.N, cfg);
    CHECK(single.aplus.truncated_norm == doctest::Approx(r.aplus.truncated_norm).epsilon(1e-12));
  }
  CHECK(*t.c_fit == sup);
}
