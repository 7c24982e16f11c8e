#pragma once

#include <complex>
#include <vector>

#include "aplus/boundary.hpp"

namespace aplus {

/// Conformal map of the unit disk onto {|arg w| < beta} ∩ {Re w > 1},
/// beta = pi / (2p), as a three-prevertex Schwarz-Christoffel integral
///
///   f(z) = 1 + C ∫_{-1}^{z} (1 + iζ)^a (1 - iζ)^a (1 - ζ)^b dζ,
///   a = beta/pi - 1/2,  b = -1 - 2 beta/pi,
///
/// with prevertices ±i for the finite vertices 1 ± i tan(beta) and 1 for the
/// vertex at infinity. C > 0 is fixed by f(i) = 1 + i tan(beta); symmetry
/// f(conj z) = conj f(z) then makes f(0) real.
///
/// The integral is evaluated by Gauss-Legendre on straight segments away
/// from the prevertices and by local power-series expansions (radius 1/2)
/// around 1 and i, so evaluation keeps full relative precision arbitrarily
/// close to the prevertices.
class SectorCapMap {
 public:
  /// Throws MapConstructionFailure when the construction fails validation.
  explicit SectorCapMap(double p);

  double p() const { return p_; }
  double beta() const { return beta_; }
  double scale() const { return scale_; }
  std::complex<double> upper_vertex() const;

  std::complex<double> eval(std::complex<double> z) const;
  std::complex<double> derivative(std::complex<double> z) const;
  /// Value is +inf (real) at the infinite-vertex prevertex t = 0.
  BoundaryJet boundary(const BoundaryParam& t) const;

  /// Maximum boundary-correspondence defect found during construction.
  double validation_defect() const { return defect_; }

 private:
  struct Factors {
    std::complex<double> plus;   // 1 + iζ
    std::complex<double> minus;  // 1 - iζ
    std::complex<double> one;    // 1 - ζ
  };

  std::complex<double> integrand(const Factors& f) const;
  std::complex<double> primitive(std::complex<double> z, const Factors& f) const;  // G(z), Im z >= 0
  std::complex<double> primitive_any(std::complex<double> z, const Factors& f) const;
  std::complex<double> primitive_by_segment(std::complex<double> z) const;
  static Factors factors(std::complex<double> z);
  static Factors factors(const BoundaryParam& t);
  void validate();

  double p_, beta_, a_, b_;
  double scale_ = 1.0;
  double g0_ = 0.0;                      // G(0), real
  std::complex<double> k_one_, k_i_;     // expansion constants at 1 and i
  std::vector<std::complex<double>> q_one_, q_i_;  // expansion coefficients
  double defect_ = 0.0;
};

}  // namespace aplus
