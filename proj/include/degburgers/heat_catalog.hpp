#ifndef DEGBURGERS_HEAT_CATALOG_HPP
#define DEGBURGERS_HEAT_CATALOG_HPP

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace dgb {

/// A solution w(t,y) of the heat equation w_t = w_yy with derivative access.
/// Every (i,j) partial reduces to a pure y-derivative of order 2i + j via the
/// equation, so implementations provide y_derivative only.
class HeatSolution {
 public:
  HeatSolution(std::string id, int y_budget,
               std::function<double(int k, double t, double y)> y_derivative,
               std::function<bool(double, double)> guard = nullptr)
      : id_(std::move(id)), y_budget_(y_budget), ydn_(std::move(y_derivative)),
        guard_(std::move(guard)) {}

  const std::string& id() const { return id_; }
  int y_budget() const { return y_budget_; }
  bool guard(double t, double y) const { return guard_ ? guard_(t, y) : true; }

  double eval(double t, double y) const { return y_derivative(0, t, y); }
  double y_derivative(int k, double t, double y) const;
  /// d^{i+j} w / dt^i dy^j, via w_t = w_yy.
  double partial(int i, int j, double t, double y) const {
    return y_derivative(2 * i + j, t, y);
  }

 private:
  std::string id_;
  int y_budget_;
  std::function<double(int, double, double)> ydn_;
  std::function<bool(double, double)> guard_;
};

using HeatSolutionPtr = std::shared_ptr<const HeatSolution>;

struct HeatGateReport {
  std::string id;
  double max_scaled_residual = 0;
  int probes = 0;
  bool pass = false;
};

/// Residual gate |w_t - w_yy| < tol * scale over a probe box; registration
/// helper used by every factory below.
HeatGateReport heat_residual_gate(const HeatSolution& w, double t0, double t1, double y0,
                                  double y1, int probes = 25, double tol = 1e-7);

struct HeatGateError : std::runtime_error {
  HeatGateError(const std::string& msg, HeatGateReport rep)
      : std::runtime_error(msg), report(std::move(rep)) {}
  HeatGateReport report;
};

// ---- catalog families ----
// Heat polynomial of degree n (n <= 8).
HeatSolutionPtr heat_polynomial(int n);
/// c1 e^{t+y} + c2 e^{t-y}
HeatSolutionPtr heat_exponential(double c1, double c2);
/// c1 y + c2
HeatSolutionPtr heat_linear(double c1, double c2);
/// e^{-t} (c1 cos y + c2 sin y)
HeatSolutionPtr heat_trig(double c1, double c2);
/// t^{-1/2} e^{-y^2/(4t)}, t > 0
HeatSolutionPtr heat_source();
/// t^{-(n+1)/2} e^{-y^2/(4t)} He_n(y / sqrt(2t)), t > 0
HeatSolutionPtr heat_hermite(int n);
/// erf(y / (2 sqrt(t))), t > 0
HeatSolutionPtr heat_erf();
/// exp(yt + 2t^3/3) (c1 Ai(y + t^2) + c2 Bi(y + t^2))
HeatSolutionPtr heat_airy(double c1, double c2);
/// t^a e^{-y^2/(8t)} (c1 U(2a+1/2, y/sqrt(2t)) + c2 V(...)), t > 0
HeatSolutionPtr heat_pcf_uv(double a, double c1, double c2);
/// (4t^2+1)^{-1/4} e^{-t y^2/q - (a/2) atan 2t} (c1 W(-a/2, s) + c2 W(-a/2, -s))
HeatSolutionPtr heat_pcf_w(double a, double c1, double c2);
/// w1 + w2 (linearity)
HeatSolutionPtr heat_sum(HeatSolutionPtr a, HeatSolutionPtr b);
/// constant offset: w + c
HeatSolutionPtr heat_shifted(HeatSolutionPtr w, double c);

enum class HeatGenOp {
  kDy,          // d/dy, consumes one order of the budget
  kBoost,       // 2t d/dy + y, consumes one order
};

/// Applies a solution-generating operator; output passes the residual gate.
HeatSolutionPtr heat_generate(HeatGenOp op, const HeatSolutionPtr& w);

/// Point-symmetry transform of the heat equation:
/// w~(t,y) = d3/sqrt(1+4 d6 t) exp(-(d6 y^2 + d5 y - d5^2 t)/(1+4 d6 t))
///           * w(d4^2 t/(1+4 d6 t) - d2, d4 (y - 2 d5 t)/(1+4 d6 t) - d1) + h
struct HeatSymmetryParams {
  double d1 = 0, d2 = 0, d3 = 1, d4 = 1, d5 = 0, d6 = 0;
};
HeatSolutionPtr heat_symmetry(const HeatSymmetryParams& p, const HeatSolutionPtr& w,
                              const HeatSolutionPtr& additive = nullptr);

/// Registry of the default catalog instances (id -> solution), all gated.
std::vector<HeatSolutionPtr> default_heat_catalog();

}  // namespace dgb

#endif
