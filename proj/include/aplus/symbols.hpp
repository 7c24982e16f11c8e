#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "aplus/boundary.hpp"
#include "aplus/series.hpp"

namespace aplus {

// ---------------------------------------------------------------------------
// Target regions
// ---------------------------------------------------------------------------

/// C_theta = {Re w > theta}.
struct HalfPlane {
  double theta = 0.0;
};
/// {Re w > re_min, |Im w| < im_bound}.
struct HalfStrip {
  double re_min = 1.0;
  double im_bound = std::numbers::pi;
};
/// {Re w > ln N, |Im w| < pi ln N}: the image of the unit half-strip under w -> w ln N.
struct ScaledHalfStrip {
  int N = 2;
};
/// {|arg w| < beta} intersected with {Re w > re_min}.
struct SectorCap {
  double beta = std::numbers::pi / 4;
  double re_min = 1.0;
};

using Region = std::variant<HalfPlane, HalfStrip, ScaledHalfStrip, SectorCap>;

/// Validates the variant's invariants (im_bound > 0, 0 < beta < pi/2, N >= 2).
Region checked(Region region);
bool region_contains(const Region& region, cplx w);
std::string describe(const Region& region);

// ---------------------------------------------------------------------------
// Symbol families
// ---------------------------------------------------------------------------

/// Conformal map of the disk onto the half-strip {Re > 1, |Im| < pi}.
struct Thm1Spec {};
/// Conformal map onto the sector cap with half-opening beta = pi / (2p).
struct Thm2Spec {
  double p = 2.0;
  double beta = std::numbers::pi / 4;
};
/// A + 1 + exp(-(1+z)/(1-z)).
struct CounterexampleSpec {
  double A = 0.0;
};
/// c1 + c_r w + c_{r^2} w^2 with w = r^{-s}.
struct BflqSpec {
  cplx c1{0.0, 0.0};
  double cr = 4.0;
  double cr2 = 1.0;
  int r = 2;
};
/// Constant symbol; the trivial sanity case of every norm computation.
struct ConstantSpec {
  cplx value{2.0, 0.0};
};

using SymbolSpec = std::variant<Thm1Spec, Thm2Spec, CounterexampleSpec, BflqSpec, ConstantSpec>;

std::string family_name(const SymbolSpec& spec);

/// Pointwise model behind a handle. Implementations are immutable.
class SymbolModel {
 public:
  virtual ~SymbolModel() = default;
  virtual cplx eval_disk(cplx z) const = 0;
  virtual cplx derivative_disk(cplx z) const = 0;
  /// phi(s) = eval_disk(base^{-s}); overridden where 1 - base^{-s} needs care.
  virtual cplx eval_dirichlet(cplx s, int base) const;
  /// Boundary jet when the map extends continuously to the closed disk
  /// (value may be +inf in real part at declared singular parameters).
  virtual std::optional<BoundaryJet> boundary(const BoundaryParam& t) const = 0;
  virtual bool continuous_on_boundary() const = 0;
  /// Parameters in [0, 2pi) where the boundary function or its derivative
  /// is singular.
  virtual std::vector<double> singular_params() const = 0;
  /// Taylor coefficients by formal series algebra, when a formal route exists.
  virtual std::optional<TruncatedSeries> formal_series(std::size_t order, const SeriesOptions& opts) const = 0;
};

/// A realized symbol phi(s) = f(prime_base^{-s}).
class SymbolHandle {
 public:
  SymbolHandle(SymbolSpec spec, std::optional<Region> target, int prime_base,
               std::shared_ptr<const SymbolModel> model);

  const SymbolSpec& spec() const { return spec_; }
  const std::optional<Region>& target() const { return target_; }
  int prime_base() const { return prime_base_; }
  const SymbolModel& model() const { return *model_; }

  cplx eval_disk(cplx z) const { return model_->eval_disk(z); }
  cplx derivative_disk(cplx z) const { return model_->derivative_disk(z); }
  bool continuous_on_boundary() const { return model_->continuous_on_boundary(); }
  /// Throws SampleSingularity when the symbol has no continuous boundary extension.
  BoundaryJet boundary(const BoundaryParam& t) const;
  std::vector<double> singular_params() const { return model_->singular_params(); }
  std::optional<TruncatedSeries> series(std::size_t order, const SeriesOptions& opts = {}) const {
    return model_->formal_series(order, opts);
  }

 private:
  SymbolSpec spec_;
  std::optional<Region> target_;
  int prime_base_;
  std::shared_ptr<const SymbolModel> model_;
};

SymbolHandle build_thm1_symbol();
/// Throws InvalidArgument for p <= 1 and MapConstructionFailure when the
/// numerical map fails its validation checks.
SymbolHandle build_thm2_symbol(double p);
SymbolHandle build_counterexample_symbol(double A);
SymbolHandle build_bflq_symbol(cplx c1, double cr, double cr2, int r);
SymbolHandle build_constant_symbol(cplx value);
SymbolHandle build_symbol(const SymbolSpec& spec);

/// phi(s) for Re s > 0.
cplx symbol_eval_dirichlet(const SymbolHandle& h, cplx s);

/// The five stages of the half-strip map f = tau_1 o L o h o c o T, with
/// principal branches. The sqrt and log stages throw BranchCutProximity when
/// their argument comes within the branch margin of the negative axis.
namespace halfstrip {
inline constexpr double kBranchMargin = 0.01;
cplx cayley(cplx z);            // T(z) = (1+z)/(1-z)
cplx rotated_sqrt(cplx w);      // c(w) = e^{i pi/4} sqrt(w)
cplx quadrant_to_disk(cplx u);  // h(u) = (iu+1)/(u+i)
cplx log_stage(cplx v);         // L(v) = -2 log v
cplx map(cplx z);
/// f(0) = 1 + 2 ln(1 + sqrt 2).
double center_value();
}  // namespace halfstrip

}  // namespace aplus
