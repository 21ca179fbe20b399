#ifndef DEGBURGERS_SPECIAL_FUNCTIONS_HPP
#define DEGBURGERS_SPECIAL_FUNCTIONS_HPP

#include <memory>
#include <string>
#include <vector>

#include "degburgers/ode.hpp"

namespace dgb::sf {

enum class FnStatus { kOk, kOutOfDomain, kReducedAccuracy };

struct FnValue {
  double value = 0;
  double derivative = 0;
  FnStatus status = FnStatus::kOk;
  double err_estimate = 0;  // meaningful when status == kReducedAccuracy
};

struct AiryValues {
  double ai = 0, aip = 0, bi = 0, bip = 0;
  FnStatus status = FnStatus::kOk;
};

/// Ai, Ai', Bi, Bi'.  Series for |z| <= 4.5, ODE continuation to |z| <= 30,
/// asymptotic expansions beyond (flagged reduced accuracy).
AiryValues airy(double z);

enum class BesselKind { kJ0, kJ1, kY0, kY1, kI0, kI1, kK0, kK1 };
BesselKind bessel_kind_from_name(const std::string& name);

/// Value and d/dz.  Y and K require z > 0.
FnValue bessel(BesselKind kind, double z);

FnValue kummer_m(double a, double b, double z);
FnValue tricomi_u(double a, double b, double z);
FnValue gamma_fn(double x);
/// log|Gamma(re + i im)| (Lanczos continued to complex arguments).
double log_abs_gamma(double re, double im);

struct WeierstrassValues {
  double p = 0, pprime = 0;
  FnStatus status = FnStatus::kOk;
};

/// Weierstrass elliptic function with g2 = 0, real z, cached per g3.
class WeierstrassP {
 public:
  explicit WeierstrassP(double g3);
  WeierstrassValues eval(double z) const;
  double g3() const { return g3_; }
  /// First positive pole location if one was detected in the cached range.
  double pole_estimate() const { return pole_; }

 private:
  double g3_;
  double series_edge_;
  std::vector<double> laurent_;  // c_k for k >= 2
  DenseOde ode_;
  double pole_;
};

WeierstrassValues weierstrass_p(double z, double g3);

/// Confluent Heun function as the solution of the Cauchy problem at z = 0
/// with Y(0) = 1; evaluable on z in [-z_span, 1 - guard).
class HeunC {
 public:
  HeunC(double alpha, double beta, double gamma, double delta, double eta, double z_span = 60.0);
  FnValue eval(double z) const;

 private:
  double series(double z, double* deriv) const;
  double al_, be_, ga_, de_, eta_;
  std::vector<double> coef_;
  double series_edge_ = 0.3;
  DenseOde neg_, pos_;
};

struct LameBasis {
  double phi1 = 0, dphi1 = 0, phi2 = 0, dphi2 = 0;
  FnStatus status = FnStatus::kOk;
};

/// Normalized solution basis of phi'' = 6 (C3 + wp(z;0,C1)) phi anchored at
/// z0: phi1(z0)=1, phi1'(z0)=0, phi2(z0)=0, phi2'(z0)=1.
class LameSolutions {
 public:
  LameSolutions(double c1, double c3, double z0);
  LameBasis eval(double z) const;
  double z0() const { return z0_; }

 private:
  double c1_, c3_, z0_;
  DenseOde fwd_, bwd_;
};

FnValue erf_fn(double z);
FnValue erfi_fn(double z);
/// Probabilists' Hermite polynomial He_n, n <= 30.
FnValue hermite_he(int n, double z);

enum class PcfKind { kU, kV, kW };
/// Parabolic cylinder functions: U,V solve f'' = (z^2/4 + b) f and W solves
/// f'' = -(z^2/4 - b) f, with the standard normalizations at z = 0.
FnValue parabolic_cylinder(PcfKind kind, double b, double z);

// Series-only reference paths, exposed for the dual-computation checks.
namespace series_oracle {
AiryValues airy(double z);
FnValue bessel_j0(double z);
FnValue bessel_j1(double z);
FnValue bessel_i0(double z);
FnValue bessel_i1(double z);
}  // namespace series_oracle

struct SelfTestEntry {
  std::string name;
  double max_residual = 0;
  double tolerance = 0;
  int points = 0;
  bool pass = false;
};
struct SelfTestReport {
  std::vector<SelfTestEntry> entries;
  bool pass = false;
};

/// Runs the defining-equation residual grid from the checked-in config.
SelfTestReport specfun_selftest(const std::string& config_path);

}  // namespace dgb::sf

#endif
