#ifndef DEGBURGERS_ODE_HPP
#define DEGBURGERS_ODE_HPP

#include <array>
#include <functional>
#include <stdexcept>
#include <vector>

namespace dgb {

struct OdeError : std::runtime_error {
  explicit OdeError(const std::string& w) : std::runtime_error(w) {}
};

/// Adaptive Dormand-Prince 5(4) with cached accepted steps and the standard
/// fourth-order continuous output.  Integration direction follows
/// sign(t1 - t0).  Pass atol = 0 for pure relative control (needed when the
/// solution traverses many orders of magnitude).
class DenseOde {
 public:
  using Rhs = std::function<void(double, const std::vector<double>&, std::vector<double>&)>;
  /// stop(t, y) may end integration early (e.g. pole detection); the reached
  /// endpoint is then t_end().
  using StopFn = std::function<bool(double, const std::vector<double>&)>;

  DenseOde() = default;
  void integrate(const Rhs& rhs, std::vector<double> y0, double t0, double t1,
                 double atol = 1e-10, double rtol = 1e-10, const StopFn& stop = nullptr,
                 double max_step = 0);  // 0 = unlimited

  bool covers(double t) const;
  std::vector<double> eval(double t) const;
  double t_begin() const { return ts_.front(); }
  double t_end() const { return ts_.back(); }
  bool stopped_early() const { return stopped_early_; }
  std::size_t steps() const { return ts_.empty() ? 0 : ts_.size() - 1; }

 private:
  std::vector<double> ts_;
  std::vector<std::vector<double>> ys_;
  std::vector<std::array<std::vector<double>, 5>> cont_;  // dense-output coefficients per step
  bool forward_ = true;
  bool stopped_early_ = false;
};

}  // namespace dgb

#endif
