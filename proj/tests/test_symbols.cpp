#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "aplus/errors.hpp"
#include "aplus/symbols.hpp"
#include "oracles.hpp"

using namespace aplus;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<cplx> disk_samples(std::size_t count, std::uint64_t seed, double max_radius = 1.0 - 1e-6) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> z(count);
  for (cplx& w : z) w = std::polar(max_radius * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
  return z;
}

// Stage-by-stage evaluation of the half-strip chain with plain complex arithmetic.
cplx chain_oracle(cplx z) {
  const cplx i{0.0, 1.0};
  const cplx t = (1.0 + z) / (1.0 - z);
  const cplx c = std::exp(i * kPi / 4.0) * std::sqrt(t);
  const cplx h = (i * c + 1.0) / (c + i);
  return 1.0 - 2.0 * std::log(h);
}

}  // namespace

TEST_CASE("regions") {
  CHECK(region_contains(HalfStrip{1.0, kPi}, 2.0));
  CHECK_FALSE(region_contains(HalfStrip{1.0, kPi}, cplx(2.0, 4.0)));
  CHECK(region_contains(ScaledHalfStrip{2}, 1.0));  // 1 > ln 2
  CHECK_FALSE(region_contains(ScaledHalfStrip{2}, 0.6));
  CHECK(region_contains(SectorCap{kPi / 4, 1.0}, cplx(2.0, 1.9)));
  CHECK_FALSE(region_contains(SectorCap{kPi / 4, 1.0}, cplx(2.0, 2.1)));
  CHECK_FALSE(region_contains(SectorCap{kPi / 4, 1.0}, 0.9));
  CHECK(region_contains(HalfPlane{0.5}, 0.6));
  CHECK_THROWS_AS(checked(HalfStrip{1.0, 0.0}), Error);
  CHECK_THROWS_AS(checked(SectorCap{kPi / 2, 1.0}), Error);
  CHECK_THROWS_AS(checked(ScaledHalfStrip{1}), Error);
  CHECK_FALSE(describe(SectorCap{}).empty());
}

TEST_CASE("half-strip symbol: center value and stages") {
  const SymbolHandle h = build_thm1_symbol();
  const double expected = 1.0 + 2.0 * std::log(1.0 + std::sqrt(2.0));
  CHECK(std::abs(chain_oracle(0.0) - expected) < 1e-15);
  CHECK(std::abs(h.eval_disk(0.0) - expected) < 1e-14);
  CHECK(std::abs(expected - 2.76275) < 1e-5);
  CHECK(halfstrip::center_value() == doctest::Approx(expected).epsilon(1e-15));
  CHECK(halfstrip::cayley(0.0) == cplx(1.0));
  CHECK(std::abs(halfstrip::rotated_sqrt(1.0) - std::polar(1.0, kPi / 4)) < 1e-15);
  CHECK(std::get_if<HalfStrip>(&*h.target()) != nullptr);
  CHECK(h.prime_base() == 2);
}

TEST_CASE("half-strip symbol: sampled stage ranges") {
  const SymbolHandle h = build_thm1_symbol();
  const auto z = disk_samples(100000, 42);
  std::size_t bad_t = 0, bad_c = 0, bad_h = 0, bad_l = 0, bad_f = 0, near_cut = 0, mismatch = 0;
  for (cplx w : z) {
    const cplx t = halfstrip::cayley(w);
    const cplx c = halfstrip::rotated_sqrt(t);
    const cplx d = halfstrip::quadrant_to_disk(c);
    const cplx l = halfstrip::log_stage(d);
    const cplx f = h.eval_disk(w);
    bad_t += !(t.real() > 0);
    bad_c += !(c.real() > 0 && c.imag() > 0);
    bad_h += !(std::abs(d) < 1 && d.real() > 0);
    bad_l += !(l.real() > 0 && std::abs(l.imag()) < kPi);
    bad_f += !region_contains(*h.target(), f);
    near_cut += std::abs(std::arg(t)) > kPi - 0.01 || std::abs(std::arg(d)) > kPi - 0.01;
    mismatch += std::abs(f - chain_oracle(w)) > 1e-9 * std::max(1.0, std::abs(f));
  }
  CHECK(bad_t == 0);
  CHECK(bad_c == 0);
  CHECK(bad_h == 0);
  CHECK(bad_l == 0);
  CHECK(bad_f == 0);
  CHECK(near_cut == 0);
  CHECK(mismatch == 0);
}

TEST_CASE("half-strip symbol: formal series matches interior samples of the closed form") {
  const SymbolHandle h = build_thm1_symbol();
  const TruncatedSeries formal = *h.series(2048);
  const double rho = 0.9;
  const std::size_t P = 4096;
  for (std::size_t n : {0u, 1u, 5u, 17u, 40u, 64u}) {
    cplx acc{};
    for (std::size_t j = 0; j < P; ++j) {
      const double t = 2.0 * kPi * j / P;
      acc += chain_oracle(std::polar(rho, t)) * std::polar(1.0, -double(n) * t);
    }
    const cplx coeff = acc / double(P) / std::pow(rho, double(n));
    CHECK(std::abs(coeff - formal[n]) < 1e-10);
  }
}

TEST_CASE("half-strip symbol: boundary jets") {
  const SymbolHandle h = build_thm1_symbol();
  for (double t : {0.3, 1.2, 2.0, 3.5, 4.4, 5.0, 6.0}) {
    const BoundaryJet j = h.boundary({t, 0.0});
    const cplx inner = chain_oracle(std::polar(1.0 - 1e-10, t));
    CHECK(std::abs(j.value - inner) < 1e-6);
    const double step = 1e-6;
    const cplx fd = (h.boundary({t + step, 0.0}).value - h.boundary({t - step, 0.0}).value) / (2 * step);
    CHECK(std::abs(fd - j.d_dt) < 1e-5 * std::max(1.0, std::abs(j.d_dt)));
    // Boundary values lie on the boundary of the strip.
    const bool horizontal = std::abs(std::abs(j.value.imag()) - kPi) < 1e-9 && j.value.real() >= 1.0 - 1e-12;
    const bool vertical = std::abs(j.value.real() - 1.0) < 1e-9 && std::abs(j.value.imag()) <= kPi + 1e-12;
    CHECK((horizontal || vertical));
  }
  const BoundaryJet at_i = h.boundary({kPi / 2, 0.0});
  CHECK(std::isinf(at_i.value.real()));
  CHECK(h.continuous_on_boundary());
}

TEST_CASE("sector-cap symbol") {
  CHECK_THROWS_AS(build_thm2_symbol(1.0), Error);
  const SymbolHandle h = build_thm2_symbol(2.0);
  const cplx f0 = h.eval_disk(0.0);
  CHECK(std::abs(f0.imag()) < 1e-14);
  CHECK(f0.real() > 1.0);
  const auto z = disk_samples(100000, 7);
  std::size_t outside = 0;
  for (cplx w : z) outside += !region_contains(*h.target(), h.eval_disk(w));
  CHECK(outside == 0);
  const auto* cap = std::get_if<SectorCap>(&*h.target());
  REQUIRE(cap != nullptr);
  CHECK(cap->beta == doctest::Approx(kPi / 4));
}

TEST_CASE("counterexample symbol") {
  for (double A : {0.0, 1.5}) {
    const SymbolHandle h = build_counterexample_symbol(A);
    CHECK(std::abs(h.eval_disk(0.0) - (A + 1.0 + std::exp(-1.0))) < 1e-15);
    const auto z = disk_samples(100000, 3);
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (cplx w : z) {
      lo = std::min(lo, h.eval_disk(w).real());
      hi = std::max(hi, h.eval_disk(w).real());
    }
    CHECK(lo > A);
    CHECK(hi <= A + 2.0);
    CHECK(std::abs(h.eval_disk(1.0 - 1e-3) - (A + 1.0)) < 1e-15);
    CHECK_FALSE(h.continuous_on_boundary());
    CHECK_THROWS_AS(h.boundary({0.5, 0.0}), Error);
  }
  CHECK_THROWS_AS(build_counterexample_symbol(-0.1), Error);
}

TEST_CASE("counterexample series against Laguerre coefficients") {
  // exp(-(1+z)/(1-z)) = e^{-1} sum_n L_n^{(-1)}(2) z^n.
  const std::size_t M = 5000;
  const SymbolHandle h = build_counterexample_symbol(0.0);
  const TruncatedSeries s = *h.series(M);
  const std::vector<double> L = oracle::laguerre(-1.0, 2.0, M);
  CHECK(std::abs(s[0] - (1.0 + std::exp(-1.0))) < 1e-15);
  double worst = 0.0;
  for (std::size_t n = 1; n <= M; ++n) worst = std::max(worst, std::abs(s[n] - std::exp(-1.0) * L[n]));
  CHECK(worst < 1e-12);
}

TEST_CASE("polynomial symbol") {
  const SymbolHandle h = build_bflq_symbol(2.5, 4.0, 1.0, 2);
  const TruncatedSeries s = *h.series(2);
  CHECK(s[0] == cplx(2.5));
  CHECK(s[1] == cplx(4.0));
  CHECK(s[2] == cplx(1.0));
  CHECK(s.trunc_bound() == 0.0);
  CHECK(h.eval_disk(0.0) == cplx(2.5));
  CHECK_FALSE(h.target().has_value());
  CHECK(h.prime_base() == 2);
  // r^{-s} -> 0 as Re s grows.
  CHECK(std::abs(symbol_eval_dirichlet(h, 60.0) - 2.5) < 1e-15);
  CHECK_THROWS_AS(build_bflq_symbol(0.0, -1.0, 1.0, 2), Error);
  CHECK_THROWS_AS(build_bflq_symbol(0.0, 4.0, 1.0, 1), Error);
  CHECK(build_bflq_symbol(0.0, 4.0, 1.0, 3).prime_base() == 3);
}

TEST_CASE("Dirichlet evaluation") {
  const SymbolHandle t1 = build_thm1_symbol();
  CHECK(std::abs(symbol_eval_dirichlet(t1, 60.0) - halfstrip::center_value()) < 1e-12);
  const SymbolHandle ce = build_counterexample_symbol(0.0);
  CHECK(std::abs(symbol_eval_dirichlet(ce, 1.0) - (1.0 + std::exp(-3.0))) < 1e-15);
  CHECK(std::abs(1.0 + std::exp(-3.0) - 1.049787) < 1e-6);
  for (cplx s : {cplx(0.3, 1.0), cplx(2.0, -0.5), cplx(1e-3, 0.2)}) {
    const cplx z = std::exp(-s * std::log(2.0));
    CHECK(std::abs(symbol_eval_dirichlet(t1, s) - t1.eval_disk(z)) < 1e-10);
    CHECK(std::abs(symbol_eval_dirichlet(ce, s) - ce.eval_disk(z)) < 1e-10);
    CHECK(region_contains(*t1.target(), symbol_eval_dirichlet(t1, s)));
  }
  CHECK_THROWS_AS(symbol_eval_dirichlet(t1, cplx(0.0, 1.0)), Error);
}

TEST_CASE("constant symbol and spec dispatch") {
  const SymbolHandle c = build_symbol(ConstantSpec{2.0});
  CHECK(c.eval_disk(0.7) == cplx(2.0));
  CHECK(family_name(c.spec()) == "constant");
  CHECK(family_name(build_symbol(Thm2Spec{3.0, kPi / 6}).spec()) == "thm2");
  CHECK(family_name(build_symbol(BflqSpec{}).spec()) == "bflq");
}
