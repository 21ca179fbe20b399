#include "degburgers/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dgb {

TransportSolution::Profile TransportSolution::tanh_profile() {
  return {"tanh", [](double s) { return std::tanh(s); },
          [](double s) {
            double c = std::cosh(s);
            return 1.0 / (c * c);
          },
          [](double s) {
            double c = std::cosh(s);
            return -2.0 * std::tanh(s) / (c * c);
          },
          [](double s) {
            const double c = std::cosh(s);
            const double sech2 = 1.0 / (c * c), th = std::tanh(s);
            return 4 * sech2 * th * th - 2 * sech2 * sech2;
          }};
}

TransportSolution::Profile TransportSolution::linear_profile() {
  return {"linear", [](double s) { return s; }, [](double) { return 1.0; },
          [](double) { return 0.0; }, [](double) { return 0.0; }};
}

TransportSolution::TransportSolution(Profile p) : profile_(std::move(p)) {
  // shock time from sampled slopes: t* = 1 / max(-g')
  double worst = 0;
  for (double s = -6.0; s <= 6.0; s += 1.0 / 128) worst = std::max(worst, -profile_.g1(s));
  shock_time_ = (worst <= 0) ? std::numeric_limits<double>::infinity() : 1.0 / worst;
}

std::optional<double> TransportSolution::solve(double t, double x) const {
  if (!(t < shock_time_)) return std::nullopt;
  double w = profile_.g(x);
  for (int it = 0; it < 80; ++it) {
    const double s = x - w * t;
    const double r = w - profile_.g(s);
    const double dr = 1.0 + t * profile_.g1(s);
    if (std::abs(dr) < 1e-12) return std::nullopt;
    double step = r / dr;
    // damping for far starts
    if (std::abs(step) > 1.0) step = (step > 0) ? 1.0 : -1.0;
    w -= step;
    if (std::abs(r) < 1e-14 * std::max(1.0, std::abs(w)) && std::abs(step) < 1e-13) return w;
  }
  const double s = x - w * t;
  if (std::abs(w - profile_.g(s)) < 1e-12) return w;
  return std::nullopt;
}

std::optional<TransportSolution::Jet> TransportSolution::jet(double t, double x) const {
  auto w0 = solve(t, x);
  if (!w0) return std::nullopt;
  Jet j;
  j.w = *w0;
  const double s = x - j.w * t;
  const double g1 = profile_.g1(s), g2 = profile_.g2(s), g3 = profile_.g3(s);
  const double A = 1.0 + t * g1;
  if (std::abs(A) < 1e-10) return std::nullopt;
  j.wx = g1 / A;
  j.wxx = g2 / (A * A * A);
  j.wxxx = g3 / std::pow(A, 4) - 3 * t * g2 * g2 / std::pow(A, 5);
  j.wt = -j.w * j.wx;
  j.wtx = -(j.wx * j.wx + j.w * j.wxx);
  j.wtt = 2 * j.w * j.wx * j.wx + j.w * j.w * j.wxx;
  j.wtxx = -(3 * j.wx * j.wxx + j.w * j.wxxx);
  return j;
}

std::optional<double> TransportSolution::zeta(int k, double t, double x) const {
  if (k < 0 || k > 3) throw std::invalid_argument("zeta: order must be 0..3");
  std::function<std::optional<double>(int, double)> zk = [&](int kk,
                                                             double xx) -> std::optional<double> {
    auto w = solve(t, xx);
    if (!w) return std::nullopt;
    if (kk == 0) return xx - *w * t;
    auto j = jet(t, xx);
    if (!j || std::abs(j->wx) < 1e-8) return std::nullopt;
    const double h = 1e-4 * std::max(1.0, std::abs(xx));
    auto zm = zk(kk - 1, xx - h), zp = zk(kk - 1, xx + h);
    if (!zm || !zp) return std::nullopt;
    return (*zp - *zm) / (2 * h) / j->wx;
  };
  return zk(k, x);
}

}  // namespace dgb
