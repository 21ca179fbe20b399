#include "degburgers/heat_catalog.hpp"

#include <cmath>
#include <stdexcept>

#include "degburgers/rng.hpp"
#include "degburgers/special_functions.hpp"

namespace dgb {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kTMin = 1e-3;

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// polynomial-in-xi coefficient vectors used by the special-function families
using Poly = std::vector<double>;
Poly dpoly(const Poly& p) {
  Poly d(p.size() > 1 ? p.size() - 1 : 1, 0.0);
  for (size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<double>(k);
  return d;
}
Poly shift_mul(const Poly& p, int power, double factor) {  // factor * xi^power * p
  Poly r(p.size() + static_cast<size_t>(power), 0.0);
  for (size_t k = 0; k < p.size(); ++k) r[k + static_cast<size_t>(power)] += factor * p[k];
  return r;
}
Poly axpy(Poly a, const Poly& b, double fb = 1.0) {
  if (b.size() > a.size()) a.resize(b.size(), 0.0);
  for (size_t k = 0; k < b.size(); ++k) a[k] += fb * b[k];
  return a;
}
double peval(const Poly& p, double x) {
  double v = 0;
  for (size_t k = p.size(); k-- > 0;) v = v * x + p[k];
  return v;
}
}  // namespace

double HeatSolution::y_derivative(int k, double t, double y) const {
  if (k < 0 || k > y_budget_)
    throw std::out_of_range("HeatSolution '" + id_ + "': y-derivative order " + std::to_string(k) +
                            " exceeds the declared budget " + std::to_string(y_budget_));
  return ydn_(k, t, y);
}

HeatGateReport heat_residual_gate(const HeatSolution& w, double t0, double t1, double y0,
                                  double y1, int probes, double tol) {
  HeatGateReport rep;
  rep.id = w.id();
  Rng rng(0x9e247u ^ static_cast<std::uint64_t>(std::hash<std::string>{}(w.id())));
  int done = 0, attempts = 0;
  while (done < probes && attempts < probes * 40) {
    ++attempts;
    const double t = rng.uniform(t0, t1), y = rng.uniform(y0, y1);
    if (!w.guard(t, y)) continue;
    const double ht = 1e-3 * std::max(0.05, std::abs(t));
    if (!w.guard(t - 2 * ht, y) || !w.guard(t + 2 * ht, y)) continue;
    const double hy = 1e-3 * std::max(1.0, std::abs(y));
    auto f = [&](double tt, double yy) { return w.eval(tt, yy); };
    const double wt = (f(t - 2 * ht, y) - 8 * f(t - ht, y) + 8 * f(t + ht, y) - f(t + 2 * ht, y)) /
                      (12 * ht);
    const double wyy = (-f(t, y - 2 * hy) + 16 * f(t, y - hy) - 30 * f(t, y) + 16 * f(t, y + hy) -
                        f(t, y + 2 * hy)) /
                       (12 * hy * hy);
    const double claimed = w.y_derivative(std::min(2, w.y_budget()), t, y);
    const double scale = std::max({1.0, std::abs(wt), std::abs(wyy)});
    double r = std::abs(wt - wyy) / scale;
    if (w.y_budget() >= 2) r = std::max(r, std::abs(wyy - claimed) / scale);
    rep.max_scaled_residual = std::max(rep.max_scaled_residual, r);
    ++done;
  }
  rep.probes = done;
  rep.pass = done == probes && rep.max_scaled_residual < tol;
  return rep;
}

HeatSolutionPtr heat_polynomial(int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("heat_polynomial: degree out of range");
  auto poly_val = [](int deg, double t, double y) {
    double s = 0;
    for (int k = 0; 2 * k <= deg; ++k)
      s += std::pow(t, k) * std::pow(y, deg - 2 * k) / (factorial(k) * factorial(deg - 2 * k));
    return factorial(deg) * s;
  };
  return std::make_shared<HeatSolution>(
      "heat.poly" + std::to_string(n), 8,
      [n, poly_val](int k, double t, double y) {
        if (k > n) return 0.0;
        // d/dy of the degree-n heat polynomial is n times the degree-(n-1) one
        return factorial(n) / factorial(n - k) * poly_val(n - k, t, y);
      });
}

HeatSolutionPtr heat_exponential(double c1, double c2) {
  return std::make_shared<HeatSolution>("heat.exp", 8, [c1, c2](int k, double t, double y) {
    const double s = (k % 2 == 0) ? 1.0 : -1.0;
    return c1 * std::exp(t + y) + s * c2 * std::exp(t - y);
  });
}

HeatSolutionPtr heat_linear(double c1, double c2) {
  return std::make_shared<HeatSolution>("heat.linear", 8, [c1, c2](int k, double, double y) {
    if (k == 0) return c1 * y + c2;
    if (k == 1) return c1;
    return 0.0;
  });
}

HeatSolutionPtr heat_trig(double c1, double c2) {
  return std::make_shared<HeatSolution>("heat.trig", 8, [c1, c2](int k, double t, double y) {
    // derivative cycle of (c1 cos + c2 sin)
    const double e = std::exp(-t);
    switch (k % 4) {
      case 0: return e * (c1 * std::cos(y) + c2 * std::sin(y));
      case 1: return e * (-c1 * std::sin(y) + c2 * std::cos(y));
      case 2: return e * (-c1 * std::cos(y) - c2 * std::sin(y));
      default: return e * (c1 * std::sin(y) - c2 * std::cos(y));
    }
  });
}

namespace {
// t^{-(n+1)/2} e^{-y^2/(4t)} He_n(y/sqrt(2t)); del_y w_n = -w_{n+1}/sqrt(2)
double hermite_w(int n, double t, double y) {
  const double xi = y / std::sqrt(2 * t);
  return std::pow(t, -(n + 1) / 2.0) * std::exp(-y * y / (4 * t)) *
         sf::hermite_he(n, xi).value;
}
}  // namespace

HeatSolutionPtr heat_hermite(int n) {
  if (n < 0 || n > 22) throw std::invalid_argument("heat_hermite: order out of range");
  auto guard = [](double t, double) { return t > kTMin; };
  return std::make_shared<HeatSolution>(
      n == 0 ? "heat.source" : "heat.hermite" + std::to_string(n), 8,
      [n](int k, double t, double y) {
        return std::pow(-1.0 / std::sqrt(2.0), k) * hermite_w(n + k, t, y);
      },
      guard);
}

HeatSolutionPtr heat_source() { return heat_hermite(0); }

HeatSolutionPtr heat_erf() {
  auto guard = [](double t, double) { return t > kTMin; };
  return std::make_shared<HeatSolution>(
      "heat.erf", 8,
      [](int k, double t, double y) {
        if (k == 0) return sf::erf_fn(y / (2 * std::sqrt(t))).value;
        // del_y erf(y/(2 sqrt t)) = source / sqrt(pi)
        return std::pow(-1.0 / std::sqrt(2.0), k - 1) * hermite_w(k - 1, t, y) / kSqrtPi;
      },
      guard);
}

HeatSolutionPtr heat_airy(double c1, double c2) {
  return std::make_shared<HeatSolution>(
      "heat.airy", 6, [c1, c2](int k, double t, double y) {
        // w = e^{g} (P F + Q F') with F = c1 Ai + c2 Bi at xi = y + t^2,
        // g = y t + 2 t^3/3;  del_y maps (P,Q) -> (tP + P' + xi Q, tQ + P + Q')
        Poly P{1.0}, Q{0.0};
        for (int i = 0; i < k; ++i) {
          Poly Pn = axpy(axpy(shift_mul(P, 0, t), dpoly(P)), shift_mul(Q, 1, 1.0));
          Poly Qn = axpy(axpy(shift_mul(Q, 0, t), P), dpoly(Q));
          P = std::move(Pn);
          Q = std::move(Qn);
        }
        const double xi = y + t * t;
        auto a = sf::airy(xi);
        const double F = c1 * a.ai + c2 * a.bi, Fp = c1 * a.aip + c2 * a.bip;
        return std::exp(y * t + 2 * t * t * t / 3) * (peval(P, xi) * F + peval(Q, xi) * Fp);
      });
}

HeatSolutionPtr heat_pcf_uv(double a, double c1, double c2) {
  auto guard = [](double t, double) { return t > kTMin; };
  const double b = 2 * a + 0.5;
  return std::make_shared<HeatSolution>(
      "heat.pcf-uv", 6,
      [a, b, c1, c2](int k, double t, double y) {
        // w = t^a e^{-y^2/(8t)} G(xi), xi = y/sqrt(2t); G'' = (xi^2/4 + b) G
        const double s = 1.0 / std::sqrt(2 * t);
        Poly P{1.0}, Q{0.0};
        for (int i = 0; i < k; ++i) {
          // del_y: P -> -s/2 xi P + s P' + s (xi^2/4 + b) Q ; Q -> -s/2 xi Q + s P + s Q'
          Poly Pn = axpy(axpy(shift_mul(P, 1, -s / 2), dpoly(P), s),
                         axpy(shift_mul(Q, 2, s / 4), shift_mul(Q, 0, s * b)));
          Poly Qn = axpy(axpy(shift_mul(Q, 1, -s / 2), P, s), dpoly(Q), s);
          P = std::move(Pn);
          Q = std::move(Qn);
        }
        const double xi = y * s;
        auto U = sf::parabolic_cylinder(sf::PcfKind::kU, b, xi);
        auto V = sf::parabolic_cylinder(sf::PcfKind::kV, b, xi);
        const double G = c1 * U.value + c2 * V.value, Gp = c1 * U.derivative + c2 * V.derivative;
        return std::pow(t, a) * std::exp(-y * y / (8 * t)) * (peval(P, xi) * G + peval(Q, xi) * Gp);
      },
      guard);
}

HeatSolutionPtr heat_pcf_w(double a, double c1, double c2) {
  const double b = -a / 2;
  return std::make_shared<HeatSolution>(
      "heat.pcf-w", 6, [a, b, c1, c2](int k, double t, double y) {
        const double q = 4 * t * t + 1;
        const double s = std::sqrt(2.0) / std::sqrt(q);
        Poly P{1.0}, Q{0.0};
        for (int i = 0; i < k; ++i) {
          // g_y = -t s xi; G'' = -(xi^2/4 - b) G
          Poly Pn = axpy(axpy(shift_mul(P, 1, -t * s), dpoly(P), s),
                         axpy(shift_mul(Q, 2, -s / 4), shift_mul(Q, 0, s * b)));
          Poly Qn = axpy(axpy(shift_mul(Q, 1, -t * s), P, s), dpoly(Q), s);
          P = std::move(Pn);
          Q = std::move(Qn);
        }
        const double xi = std::sqrt(2.0) * y / std::sqrt(q);
        auto Wp = sf::parabolic_cylinder(sf::PcfKind::kW, b, xi);
        auto Wm = sf::parabolic_cylinder(sf::PcfKind::kW, b, -xi);
        const double G = c1 * Wp.value + c2 * Wm.value;
        const double Gp = c1 * Wp.derivative - c2 * Wm.derivative;
        const double pref = std::pow(q, -0.25) *
                            std::exp(-t * y * y / q - a / 2 * std::atan(2 * t));
        return pref * (peval(P, xi) * G + peval(Q, xi) * Gp);
      });
}

HeatSolutionPtr heat_sum(HeatSolutionPtr a, HeatSolutionPtr b) {
  const int budget = std::min(a->y_budget(), b->y_budget());
  return std::make_shared<HeatSolution>(
      a->id() + "+" + b->id(), budget,
      [a, b](int k, double t, double y) {
        return a->y_derivative(k, t, y) + b->y_derivative(k, t, y);
      },
      [a, b](double t, double y) { return a->guard(t, y) && b->guard(t, y); });
}

HeatSolutionPtr heat_shifted(HeatSolutionPtr w, double c) {
  return std::make_shared<HeatSolution>(
      w->id() + "+const", w->y_budget(),
      [w, c](int k, double t, double y) {
        return w->y_derivative(k, t, y) + (k == 0 ? c : 0.0);
      },
      [w](double t, double y) { return w->guard(t, y); });
}

HeatSolutionPtr heat_generate(HeatGenOp op, const HeatSolutionPtr& w) {
  if (w->y_budget() < 1)
    throw std::out_of_range("heat_generate: derivative budget of '" + w->id() + "' exhausted");
  const int budget = w->y_budget() - 1;
  if (op == HeatGenOp::kDy) {
    return std::make_shared<HeatSolution>(
        "Dy(" + w->id() + ")", budget,
        [w](int k, double t, double y) { return w->y_derivative(k + 1, t, y); },
        [w](double t, double y) { return w->guard(t, y); });
  }
  // 2t w_y + y w
  return std::make_shared<HeatSolution>(
      "boost(" + w->id() + ")", budget,
      [w](int k, double t, double y) {
        double v = 2 * t * w->y_derivative(k + 1, t, y) + y * w->y_derivative(k, t, y);
        if (k >= 1) v += k * w->y_derivative(k - 1, t, y);
        return v;
      },
      [w](double t, double y) { return w->guard(t, y); });
}

HeatSolutionPtr heat_symmetry(const HeatSymmetryParams& p, const HeatSolutionPtr& w,
                              const HeatSolutionPtr& additive) {
  if (p.d3 == 0 || p.d4 == 0)
    throw std::invalid_argument("heat_symmetry: d3 and d4 must be nonzero");
  const int budget = additive ? std::min(w->y_budget(), additive->y_budget()) : w->y_budget();
  auto val = [p, w, additive](int k, double t, double y) -> double {
    const double u = 1 + 4 * p.d6 * t;
    const double tau = p.d4 * p.d4 * t / u - p.d2;
    const double eta = p.d4 * (y - 2 * p.d5 * t) / u - p.d1;
    const double s = p.d4 / u;  // d eta / dy
    // g(y) = -(d6 y^2 + d5 y - d5^2 t)/u; c_m(y) polynomial coefficients of
    // e^g sum c_m W^(m): del_y adds g_y c_m + c_m' to order m and s c_m to m+1
    const double gy1 = -2 * p.d6 / u;   // coefficient of y in g_y
    const double gy0 = -p.d5 / u;       // constant part of g_y
    std::vector<Poly> c{{1.0}};         // polynomials in y, per derivative order m
    for (int i = 0; i < k; ++i) {
      std::vector<Poly> n(c.size() + 1, Poly{0.0});
      for (size_t m = 0; m < c.size(); ++m) {
        n[m] = axpy(axpy(n[m], shift_mul(c[m], 1, gy1)), shift_mul(c[m], 0, gy0));
        n[m] = axpy(n[m], dpoly(c[m]));
        n[m + 1] = axpy(n[m + 1], shift_mul(c[m], 0, s));
      }
      c = std::move(n);
    }
    const double g = -(p.d6 * y * y + p.d5 * y - p.d5 * p.d5 * t) / u;
    const double pref = p.d3 / std::sqrt(u) * std::exp(g);
    double sum = 0;
    for (size_t m = 0; m < c.size(); ++m)
      sum += peval(c[m], y) * w->y_derivative(static_cast<int>(m), tau, eta);
    double out = pref * sum;
    if (additive) out += additive->y_derivative(k, t, y);
    return out;
  };
  auto guard = [p, w, additive](double t, double y) {
    const double u = 1 + 4 * p.d6 * t;
    if (u <= 1e-6) return false;
    const double tau = p.d4 * p.d4 * t / u - p.d2;
    const double eta = p.d4 * (y - 2 * p.d5 * t) / u - p.d1;
    if (!w->guard(tau, eta)) return false;
    return !additive || additive->guard(t, y);
  };
  return std::make_shared<HeatSolution>("sym(" + w->id() + ")", budget, val, guard);
}

std::vector<HeatSolutionPtr> default_heat_catalog() {
  std::vector<HeatSolutionPtr> out;
  for (int n = 0; n <= 4; ++n) out.push_back(heat_polynomial(n));
  out.push_back(heat_exponential(1.0, 2.0));
  out.push_back(heat_linear(1.0, 2.0));
  out.push_back(heat_trig(1.0, 1.0));
  out.push_back(heat_source());
  out.push_back(heat_hermite(3));
  out.push_back(heat_erf());
  out.push_back(heat_airy(1.0, 0.5));
  out.push_back(heat_pcf_uv(0.3, 1.0, 0.7));
  out.push_back(heat_pcf_w(0.4, 1.0, 0.6));
  for (const auto& w : out) {
    auto rep = heat_residual_gate(*w, 0.4, 1.4, -1.5, 1.5);
    if (!rep.pass)
      throw HeatGateError("heat catalog registration failed for " + w->id() +
                              " (max residual " + std::to_string(rep.max_scaled_residual) + ")",
                          rep);
  }
  return out;
}

}  // namespace dgb
