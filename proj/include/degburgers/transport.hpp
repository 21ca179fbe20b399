#ifndef DEGBURGERS_TRANSPORT_HPP
#define DEGBURGERS_TRANSPORT_HPP

#include <functional>
#include <optional>
#include <string>

namespace dgb {

/// Implicit solution w = g(x - w t) of w_t + w w_x = 0, solved pointwise by
/// damped Newton iteration; valid before the shock time 1/max(-g').
class TransportSolution {
 public:
  struct Profile {
    std::string name;
    std::function<double(double)> g, g1, g2, g3;
  };
  static Profile tanh_profile();
  static Profile linear_profile();

  explicit TransportSolution(Profile p);

  double shock_time() const { return shock_time_; }
  const std::string& profile_name() const { return profile_.name; }

  std::optional<double> solve(double t, double x) const;

  struct Jet {
    double w = 0, wx = 0, wxx = 0, wxxx = 0;
    double wt = 0, wtx = 0, wtt = 0, wtxx = 0;
  };
  /// All derivatives from implicit differentiation of w = g(x - w t).
  std::optional<Jet> jet(double t, double x) const;

  /// zeta^0 = x - w t, zeta^k = (w_x^{-1} d/dx)^k zeta^0, by nested central
  /// differences in x on the implicit solution (k <= 3).
  std::optional<double> zeta(int k, double t, double x) const;

 private:
  Profile profile_;
  double shock_time_;
};

}  // namespace dgb

#endif
