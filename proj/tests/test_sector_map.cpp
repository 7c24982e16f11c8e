#include <doctest.h>

#include <cmath>
#include <numbers>

#include "aplus/errors.hpp"
#include "aplus/sector_map.hpp"

using namespace aplus;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;

bool on_cap_boundary(cplx w, double beta, double tol) {
  const bool wall = std::abs(std::abs(w.imag()) - std::tan(beta) * w.real()) < tol * std::max(1.0, std::abs(w)) &&
                    w.real() >= 1.0 - tol;
  const bool cap = std::abs(w.real() - 1.0) < tol && std::abs(w.imag()) <= std::tan(beta) + tol;
  return wall || cap;
}
}  // namespace

TEST_CASE("sector map: construction and vertices") {
  for (double p : {1.5, 2.0, 4.0}) {
    const SectorCapMap m(p);
    CHECK(m.beta() == doctest::Approx(kPi / (2 * p)));
    CHECK(m.validation_defect() < 1e-10);
    CHECK(m.scale() > 0.0);
    CHECK(std::abs(m.eval(cplx(0.0, 1.0)) - m.upper_vertex()) < 1e-10);
    CHECK(std::abs(m.upper_vertex() - cplx(1.0, std::tan(m.beta()))) < 1e-12);
    CHECK(std::abs(m.eval(cplx(0.0, -1.0)) - std::conj(m.upper_vertex())) < 1e-10);
    CHECK(std::abs(m.eval(0.0).imag()) < 1e-13);
    CHECK(m.eval(0.0).real() > 1.0);
  }
  CHECK_THROWS_AS(SectorCapMap(1.0), Error);
  CHECK_THROWS_AS(SectorCapMap(0.5), Error);
}

TEST_CASE("sector map: boundary lands on the region boundary") {
  for (double p : {1.5, 2.0, 4.0}) {
    const SectorCapMap m(p);
    for (int k = 1; k < 64; ++k) {
      const double t = 2.0 * kPi * k / 64.0 + 0.013;
      const BoundaryJet j = m.boundary({t, 0.0});
      CHECK(on_cap_boundary(j.value, m.beta(), 1e-9));
      // Interior limit agrees with the boundary value.
      const cplx inner = m.eval(std::polar(1.0 - 1e-9, t));
      CHECK(std::abs(inner - j.value) < 1e-5 * std::max(1.0, std::abs(j.value)));
    }
  }
}

TEST_CASE("sector map: derivatives and symmetry") {
  const SectorCapMap m(2.0);
  const double h = 1e-5;
  for (cplx z : {cplx(0.0), cplx(0.3, 0.4), cplx(-0.7, 0.2), cplx(0.5, -0.6), cplx(0.1, 0.95)}) {
    const cplx fd = (m.eval(z + h) - m.eval(z - h)) / (2 * h);
    CHECK(std::abs(fd - m.derivative(z)) < 1e-6 * std::max(1.0, std::abs(fd)));
    CHECK(std::abs(m.eval(std::conj(z)) - std::conj(m.eval(z))) < 1e-12 * std::max(1.0, std::abs(m.eval(z))));
  }
  for (double t : {0.4, 2.2, 4.0}) {
    const BoundaryJet j = m.boundary({t, 0.0});
    const cplx fd = (m.boundary({t + 1e-6, 0.0}).value - m.boundary({t - 1e-6, 0.0}).value) / 2e-6;
    CHECK(std::abs(fd - j.d_dt) < 1e-5 * std::max(1.0, std::abs(fd)));
  }
}

TEST_CASE("sector map: growth at the infinite vertex") {
  // |f(e^{it})| ~ C |t|^{-1/p} as t -> 0.
  for (double p : {1.5, 2.0, 4.0}) {
    const SectorCapMap m(p);
    const double a = std::abs(m.boundary({0.0, 1e-8}).value);
    const double b = std::abs(m.boundary({0.0, 1e-10}).value);
    const double slope = std::log(b / a) / std::log(1e-10 / 1e-8);
    CHECK(slope == doctest::Approx(-1.0 / p).epsilon(1e-2));
    CHECK(std::isinf(m.boundary({0.0, 0.0}).value.real()));
  }
}
