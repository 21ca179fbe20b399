#include "degburgers/ode.hpp"

#include <algorithm>
#include <cmath>

namespace dgb {

namespace {
// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                 e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                 e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
// continuous-output coefficients (Hairer's contd5)
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;
}  // namespace

void DenseOde::integrate(const Rhs& rhs, std::vector<double> y0, double t0, double t1,
                         double atol, double rtol, const StopFn& stop, double max_step) {
  ts_.clear();
  ys_.clear();
  cont_.clear();
  stopped_early_ = false;
  forward_ = t1 >= t0;
  const double dir = forward_ ? 1.0 : -1.0;
  const std::size_t n = y0.size();

  std::vector<double> y = y0, f0(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), y5(n);
  rhs(t0, y, f0);
  ts_.push_back(t0);
  ys_.push_back(y);

  double t = t0;
  double h = dir * std::min(1e-3, std::abs(t1 - t0));
  if (h == 0) return;
  const double hcap = (max_step > 0) ? max_step : 1e300;
  auto clamp_h = [&](double hh) {
    const double m = std::min(std::abs(hh), hcap);
    return (hh >= 0) ? m : -m;
  };
  h = clamp_h(h);
  const int max_steps = 2000000;
  for (int step = 0; step < max_steps; ++step) {
    if ((t - t1) * dir >= 0) return;
    if ((t + h - t1) * dir > 0) h = t1 - t;

    auto stage = [&](std::vector<double>& k, double ci,
                     std::initializer_list<std::pair<double, const std::vector<double>*>> coeffs) {
      for (std::size_t i = 0; i < n; ++i) {
        double acc = y[i];
        for (const auto& [a, kv] : coeffs) acc += h * a * (*kv)[i];
        ytmp[i] = acc;
      }
      rhs(t + ci * h, ytmp, k);
    };
    stage(k2, c2, {{a21, &f0}});
    stage(k3, c3, {{a31, &f0}, {a32, &k2}});
    stage(k4, c4, {{a41, &f0}, {a42, &k2}, {a43, &k3}});
    stage(k5, c5, {{a51, &f0}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
    stage(k6, 1.0, {{a61, &f0}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
    for (std::size_t i = 0; i < n; ++i)
      y5[i] = y[i] + h * (b1 * f0[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    rhs(t + h, y5, k7);

    double err = 0;
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      double e = h * (e1 * f0[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
      if (sc == 0) sc = rtol;  // both components exactly zero
      err += (e / sc) * (e / sc);
      finite = finite && std::isfinite(y5[i]);
    }
    err = std::sqrt(err / static_cast<double>(n));
    if (!finite) {
      h *= 0.25;
      if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t)))
        throw OdeError("step size underflow (blow-up?) at t = " + std::to_string(t));
      continue;
    }
    if (err <= 1.0) {
      std::array<std::vector<double>, 5> rc;
      for (auto& v : rc) v.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const double dy = y5[i] - y[i];
        const double bspl = h * f0[i] - dy;
        rc[0][i] = y[i];
        rc[1][i] = dy;
        rc[2][i] = bspl;
        rc[3][i] = dy - h * k7[i] - bspl;
        rc[4][i] = h * (d1 * f0[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
      }
      cont_.push_back(std::move(rc));
      t += h;
      y = y5;
      f0 = k7;  // FSAL
      ts_.push_back(t);
      ys_.push_back(y);
      if (stop && stop(t, y)) {
        stopped_early_ = true;
        return;
      }
    }
    double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h = clamp_h(h * std::clamp(fac, 0.2, 5.0));
    if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t)))
      throw OdeError("step size underflow at t = " + std::to_string(t));
  }
  throw OdeError("max step count exceeded");
}

bool DenseOde::covers(double t) const {
  if (ts_.empty()) return false;
  return forward_ ? (t >= ts_.front() - 1e-12 && t <= ts_.back() + 1e-12)
                  : (t <= ts_.front() + 1e-12 && t >= ts_.back() - 1e-12);
}

std::vector<double> DenseOde::eval(double t) const {
  if (!covers(t)) throw OdeError("dense output queried outside the integrated interval");
  if (cont_.empty()) return ys_.front();
  std::size_t lo = 0, hi = ts_.size() - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (forward_ ? (ts_[mid] <= t) : (ts_[mid] >= t))
      lo = mid;
    else
      hi = mid;
  }
  const double h = ts_[hi] - ts_[lo];
  const double th = (h == 0) ? 0.0 : (t - ts_[lo]) / h;
  const double th1 = 1.0 - th;
  const auto& rc = cont_[lo];
  std::vector<double> out(ys_[lo].size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = rc[0][i] + th * (rc[1][i] + th1 * (rc[2][i] + th * (rc[3][i] + th1 * rc[4][i])));
  return out;
}

}  // namespace dgb
