#include "degburgers/solution_catalog.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "degburgers/special_functions.hpp"
#include "degburgers/transport.hpp"

namespace dgb {

namespace {
constexpr double kGuardEps = 1e-6;
constexpr double kSqrt6 = 2.4494897427831780982;

double fd1(const std::function<double(double)>& f, double x) {
  const double h = 1e-4 * std::max(1.0, std::abs(x));
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}
double fd2(const std::function<double(double)>& f, double x) {
  const double h = 1e-3 * std::max(1.0, std::abs(x));
  return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) /
         (12 * h * h);
}
double get(const std::map<std::string, double>& m, const std::string& k, double dflt) {
  auto it = m.find(k);
  return it == m.end() ? dflt : it->second;
}
bool den_ok(double den, double num) { return std::abs(den) > kGuardEps * (1 + std::abs(num)); }
}  // namespace

GateClass gate_class_from_name(const std::string& s) {
  if (s == "analytic") return GateClass::kAnalytic;
  if (s == "fd") return GateClass::kFd;
  if (s == "ode") return GateClass::kOde;
  throw std::invalid_argument("unknown gate class: " + s);
}
std::string gate_class_name(GateClass g) {
  switch (g) {
    case GateClass::kAnalytic: return "analytic";
    case GateClass::kFd: return "fd";
    default: return "ode";
  }
}
double gate_tolerance(GateClass g) {
  switch (g) {
    case GateClass::kAnalytic: return 1e-10;
    case GateClass::kFd: return 1e-6;
    default: return 1e-4;
  }
}

double pde_residual(const SolutionFamily& f, double t, double x, double y) {
  double ut, ux, uyy;
  if (f.has_analytic_partials()) {
    ut = f.du_t(t, x, y);
    ux = f.du_x(t, x, y);
    uyy = f.du_yy(t, x, y);
  } else {
    ut = fd1([&](double s) { return f.eval(s, x, y); }, t);
    ux = fd1([&](double s) { return f.eval(t, s, y); }, x);
    uyy = fd2([&](double s) { return f.eval(t, x, s); }, y);
  }
  const double u = f.eval(t, x, y);
  const double conv = u * ux;
  const double scale = std::max({1.0, std::abs(ut), std::abs(conv), std::abs(uyy)});
  return (ut + conv - uyy) / scale;
}

GateReport run_gate(const SolutionFamily& f, int probes, std::uint64_t seed) {
  GateReport rep;
  rep.id = f.id;
  rep.gate = gate_class_name(f.gate);
  rep.tolerance = gate_tolerance(f.gate);
  Rng rng(seed ^ std::hash<std::string>{}(f.id));
  int done = 0, attempts = 0;
  while (done < probes && attempts < probes * 80) {
    ++attempts;
    const double t = rng.uniform(f.box.t0, f.box.t1);
    const double x = rng.uniform(f.box.x0, f.box.x1);
    const double y = rng.uniform(f.box.y0, f.box.y1);
    const double ht = 2.2e-3 * std::max(1.0, std::abs(t));
    const double hx = 2.2e-3 * std::max(1.0, std::abs(x));
    const double hy = 2.2e-3 * std::max(1.0, std::abs(y));
    bool ok = true;
    for (double dt : {-ht, 0.0, ht})
      for (double dx : {-hx, 0.0, hx})
        for (double dy : {-hy, 0.0, hy}) ok = ok && f.ok(t + dt, x + dx, y + dy);
    if (!ok) {
      ++rep.skipped;
      continue;
    }
    rep.max_scaled_residual = std::max(rep.max_scaled_residual, std::abs(pde_residual(f, t, x, y)));
    ++done;
  }
  rep.probes = done;
  rep.pass = done == probes && rep.max_scaled_residual < rep.tolerance;
  return rep;
}

// ----------------------------------------------------------- group action --

GroupElement::GroupElement(double a1, double a2, double a3, double a4, double a5, double a6)
    : d1(a1), d2(a2), d3(a3), d4(a4), d5(a5), d6(a6) {
  if (d1 == 0 || d2 == 0) throw std::invalid_argument("GroupElement: d1*d2 must be nonzero");
}

std::array<double, 3> GroupElement::apply(double t, double x, double y) const {
  return {d1 * d1 * t + d3, d2 * x + d4 * t + d6, d1 * y + d5};
}

GroupElement GroupElement::inverse() const {
  GroupElement e;
  e.d1 = 1.0 / d1;
  e.d2 = 1.0 / d2;
  e.d3 = -d3 / (d1 * d1);
  e.d5 = -d5 / d1;
  e.d4 = -d4 / (d1 * d1 * d2);
  e.d6 = (d4 * d3 / (d1 * d1) - d6) / d2;
  return e;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  GroupElement c;
  c.d1 = a.d1 * b.d1;
  c.d2 = a.d2 * b.d2;
  c.d3 = a.d1 * a.d1 * b.d3 + a.d3;
  c.d5 = a.d1 * b.d5 + a.d5;
  c.d4 = a.d2 * b.d4 + a.d4 * b.d1 * b.d1;
  c.d6 = a.d2 * b.d6 + a.d4 * b.d3 + a.d6;
  return c;
}

GroupElement GroupElement::mirror_x() { return GroupElement(1, -1, 0, 0, 0, 0); }
GroupElement GroupElement::mirror_y() { return GroupElement(-1, 1, 0, 0, 0, 0); }

SolutionFamily act(const GroupElement& g, const SolutionFamily& s) {
  SolutionFamily out;
  out.id = "act(" + s.id + ")";
  out.description = "pushforward of " + s.id;
  out.params = s.params;
  out.gate = GateClass::kFd;
  const GroupElement inv = g.inverse();
  out.eval = [g, inv, base = s.eval](double t, double x, double y) {
    auto p = inv.apply(t, x, y);
    return g.apply_u(base(p[0], p[1], p[2]));
  };
  out.guard = [inv, base = s](double t, double x, double y) {
    auto p = inv.apply(t, x, y);
    return base.ok(p[0], p[1], p[2]);
  };
  // bounding box of the transformed probe box
  double lo[3] = {1e300, 1e300, 1e300}, hi[3] = {-1e300, -1e300, -1e300};
  for (double t : {s.box.t0, s.box.t1})
    for (double x : {s.box.x0, s.box.x1})
      for (double y : {s.box.y0, s.box.y1}) {
        auto p = g.apply(t, x, y);
        for (int i = 0; i < 3; ++i) {
          lo[i] = std::min(lo[i], p[static_cast<size_t>(i)]);
          hi[i] = std::max(hi[i], p[static_cast<size_t>(i)]);
        }
      }
  out.box = {lo[0], hi[0], lo[1], hi[1], lo[2], hi[2]};
  return out;
}

AffinePairReport affine_pair_check(const std::function<double(double, double)>& w1,
                                   const std::function<double(double, double)>& w0,
                                   double t0, double t1, double y0, double y1, int probes,
                                   double tol, std::uint64_t seed) {
  AffinePairReport rep;
  Rng rng(seed);
  for (int i = 0; i < probes; ++i) {
    const double t = rng.uniform(t0, t1), y = rng.uniform(y0, y1);
    const double w1t = fd1([&](double s) { return w1(s, y); }, t);
    const double w1yy = fd2([&](double s) { return w1(t, s); }, y);
    const double w0t = fd1([&](double s) { return w0(s, y); }, t);
    const double w0yy = fd2([&](double s) { return w0(t, s); }, y);
    const double a = w1(t, y), b = w0(t, y);
    const double r1 = (w1t - w1yy + a * a) / std::max({1.0, std::abs(w1t), std::abs(w1yy), a * a});
    const double r0 =
        (w0t - w0yy + a * b) / std::max({1.0, std::abs(w0t), std::abs(w0yy), std::abs(a * b)});
    rep.max_w1_residual = std::max(rep.max_w1_residual, std::abs(r1));
    rep.max_w0_residual = std::max(rep.max_w0_residual, std::abs(r0));
    // reconstructed u = w1 x + w0 under the full equation at a random x
    const double x = rng.uniform(-2.0, 2.0);
    const double ut = w1t * x + w0t;
    const double ux = a;
    const double uyy = w1yy * x + w0yy;
    const double u = a * x + b;
    const double rp = (ut + u * ux - uyy) / std::max({1.0, std::abs(ut), std::abs(u * ux),
                                                      std::abs(uyy)});
    rep.max_pde_residual = std::max(rep.max_pde_residual, std::abs(rp));
  }
  rep.probes = probes;
  rep.pass = rep.max_w1_residual < tol && rep.max_w0_residual < tol && rep.max_pde_residual < tol;
  return rep;
}

// ------------------------------------------------------------ u-families --

namespace {

SolutionFamily make_base(const std::string& id, const std::string& desc, GateClass gate,
                         const ProbeBox3& box, const std::map<std::string, double>& params,
                         const std::string& branch) {
  SolutionFamily f;
  f.id = id;
  f.description = desc;
  f.gate = gate;
  f.box = box;
  f.params = params;
  f.branch = branch;
  return f;
}

}  // namespace

SolutionFamily build_u_family(const std::string& id, const std::map<std::string, double>& params,
                              const HeatSolutionPtr& theta, GateClass gate, const ProbeBox3& box,
                              const std::string& branch, const std::string& desc) {
  SolutionFamily f = make_base(id, desc, gate, box, params, branch);
  f.theta = theta;

  if (id == "constant") {
    const double c = get(params, "c", 1.0);
    f.eval = [c](double, double, double) { return c; };
    f.du_t = f.du_x = f.du_y = f.du_yy = [](double, double, double) { return 0.0; };
    return f;
  }
  if (id == "simple-xt") {
    f.eval = [](double t, double x, double) { return x / t; };
    f.guard = [](double t, double, double) { return std::abs(t) > kGuardEps; };
    f.du_t = [](double t, double x, double) { return -x / (t * t); };
    f.du_x = [](double t, double, double) { return 1.0 / t; };
    f.du_y = [](double, double, double) { return 0.0; };
    f.du_yy = [](double, double, double) { return 0.0; };
    return f;
  }
  if (id == "simple-exp") {
    const double eps = get(params, "eps", 1.0);
    f.eval = [eps](double t, double, double y) { return eps * std::exp(t - y); };
    f.du_t = [eps](double t, double, double y) { return eps * std::exp(t - y); };
    f.du_x = [](double, double, double) { return 0.0; };
    f.du_y = [eps](double t, double, double y) { return -eps * std::exp(t - y); };
    f.du_yy = [eps](double t, double, double y) { return eps * std::exp(t - y); };
    return f;
  }
  if (id == "simple-1.5-log") {
    auto den = [](double t, double x, double y) { return y + std::log(std::abs(x)) - 2 * t; };
    f.eval = [den](double t, double x, double y) { return -2 * x / den(t, x, y); };
    f.guard = [den](double t, double x, double y) {
      return std::abs(x) > kGuardEps && den_ok(den(t, x, y), 2 * x);
    };
    f.du_t = [den](double t, double x, double y) {
      const double D = den(t, x, y);
      return -4 * x / (D * D);
    };
    f.du_x = [den](double t, double x, double y) {
      const double D = den(t, x, y);
      return -2 / D + 2 / (D * D);
    };
    f.du_y = [den](double t, double x, double y) {
      const double D = den(t, x, y);
      return 2 * x / (D * D);
    };
    f.du_yy = [den](double t, double x, double y) {
      const double D = den(t, x, y);
      return -4 * x / (D * D * D);
    };
    return f;
  }
  if (id == "1.8") {
    if (!theta) throw std::invalid_argument(id + ": requires a heat solution theta");
    f.eval = [theta](double t, double x, double y) { return (x + theta->eval(t, y)) / t; };
    f.guard = [theta](double t, double, double y) {
      return std::abs(t) > kGuardEps && theta->guard(t, y);
    };
    f.du_t = [theta](double t, double x, double y) {
      return theta->y_derivative(2, t, y) / t - (x + theta->eval(t, y)) / (t * t);
    };
    f.du_x = [](double t, double, double) { return 1.0 / t; };
    f.du_y = [theta](double t, double, double y) { return theta->y_derivative(1, t, y) / t; };
    f.du_yy = [theta](double t, double, double y) { return theta->y_derivative(2, t, y) / t; };
    return f;
  }
  if (id == "1.9") {
    if (!theta) throw std::invalid_argument(id + ": requires a heat solution theta");
    f.eval = [theta](double t, double, double y) { return theta->eval(t, y); };
    f.guard = [theta](double t, double, double y) { return theta->guard(t, y); };
    f.du_t = [theta](double t, double, double y) { return theta->y_derivative(2, t, y); };
    f.du_x = [](double, double, double) { return 0.0; };
    f.du_y = [theta](double t, double, double y) { return theta->y_derivative(1, t, y); };
    f.du_yy = [theta](double t, double, double y) { return theta->y_derivative(2, t, y); };
    return f;
  }
  if (id == "1.10") {
    if (!theta) throw std::invalid_argument(id + ": requires a heat solution theta");
    auto vals = [theta](double t, double z) {
      const double th = theta->eval(t, z);
      const double t1 = theta->y_derivative(1, t, z);
      const double t2 = theta->y_derivative(2, t, z);
      const double t3 = theta->y_derivative(3, t, z);
      return std::array<double, 4>{th, t1, t2, t3};
    };
    f.eval = [theta](double t, double x, double y) {
      const double z = x + y;
      return -2 * theta->y_derivative(1, t, z) / theta->eval(t, z);
    };
    f.guard = [theta](double t, double x, double y) {
      const double z = x + y;
      if (!theta->guard(t, z)) return false;
      return den_ok(theta->eval(t, z), theta->y_derivative(1, t, z));
    };
    auto u_z = [vals](double t, double z) {
      auto v = vals(t, z);
      const double p = v[1] / v[0];
      return -2 * (v[2] / v[0] - p * p);
    };
    f.du_x = [u_z](double t, double x, double y) { return u_z(t, x + y); };
    f.du_y = f.du_x;
    f.du_t = [vals](double t, double x, double y) {
      auto v = vals(t, x + y);
      return -2 * (v[3] * v[0] - v[1] * v[2]) / (v[0] * v[0]);
    };
    f.du_yy = [vals](double t, double x, double y) {
      auto v = vals(t, x + y);
      const double p = v[1] / v[0];
      const double pz = v[2] / v[0] - p * p;
      const double pzz = v[3] / v[0] - p * v[2] / v[0] - 2 * p * pz;
      return -2 * pzz;
    };
    return f;
  }
  if (id == "1.11-linear") {
    f.eval = [](double t, double x, double) { return x / (1 + t); };
    f.guard = [](double t, double, double) { return std::abs(1 + t) > kGuardEps; };
    f.du_t = [](double t, double x, double) { return -x / ((1 + t) * (1 + t)); };
    f.du_x = [](double t, double, double) { return 1.0 / (1 + t); };
    f.du_y = [](double, double, double) { return 0.0; };
    f.du_yy = [](double, double, double) { return 0.0; };
    return f;
  }
  if (id == "1.11-tanh") {
    auto tr = std::make_shared<TransportSolution>(TransportSolution::tanh_profile());
    f.eval = [tr](double t, double x, double) {
      auto w = tr->solve(t, x);
      return w ? *w : std::nan("");
    };
    f.guard = [tr](double t, double x, double) {
      return t >= 0 && t < 0.9 * tr->shock_time() && tr->solve(t, x).has_value();
    };
    f.du_t = [tr](double t, double x, double) { return tr->jet(t, x)->wt; };
    f.du_x = [tr](double t, double x, double) { return tr->jet(t, x)->wx; };
    f.du_y = [](double, double, double) { return 0.0; };
    f.du_yy = [](double, double, double) { return 0.0; };
    return f;
  }
  if (id == "2.2-airy") {
    const double c1 = get(params, "C1", 1.0), c2 = get(params, "C2", 0.5);
    auto FV = [c1, c2](double om) {
      auto a = sf::airy(om);
      return std::array<double, 2>{c1 * a.ai + c2 * a.bi, c1 * a.aip + c2 * a.bip};
    };
    f.eval = [FV](double, double x, double y) {
      const double om = std::pow(x, -2.0 / 3) * y;
      auto v = FV(om);
      return 3 * std::pow(x, -1.0 / 3) * v[0] / v[1];
    };
    f.guard = [FV](double, double x, double y) {
      if (x < 100 * kGuardEps) return false;
      const double om = std::pow(x, -2.0 / 3) * y;
      if (std::abs(om) > 25) return false;
      auto v = FV(om);
      return den_ok(v[1], v[0]);
    };
    f.du_t = [](double, double, double) { return 0.0; };
    f.du_y = [FV](double, double x, double y) {
      const double om = std::pow(x, -2.0 / 3) * y;
      auto v = FV(om);
      const double R = v[0] / v[1];
      return 3 / x * (1 - om * R * R);
    };
    f.du_yy = [FV](double, double x, double y) {
      const double om = std::pow(x, -2.0 / 3) * y;
      auto v = FV(om);
      const double R = v[0] / v[1];
      const double Rp = 1 - om * R * R;
      return 3 * std::pow(x, -5.0 / 3) * (-R * R - 2 * om * R * Rp);
    };
    f.du_x = [FV](double, double x, double y) {
      const double om = std::pow(x, -2.0 / 3) * y;
      auto v = FV(om);
      const double R = v[0] / v[1];
      const double Rp = 1 - om * R * R;
      return -std::pow(x, -4.0 / 3) * R + 3 * std::pow(x, -1.0 / 3) * Rp *
                                              (-2.0 / 3 * std::pow(x, -5.0 / 3) * y);
    };
    return f;
  }
  if (id == "2.2-rational-a") {
    const double c1 = get(params, "C1", 1.0);
    auto den = [c1](double x, double y) { return y * y + c1 * std::pow(x, 4.0 / 3); };
    f.eval = [den](double, double x, double y) { return 6 * x / den(x, y); };
    f.guard = [den](double, double x, double y) {
      return x > 100 * kGuardEps && den_ok(den(x, y), 6 * x);
    };
    f.du_t = [](double, double, double) { return 0.0; };
    f.du_x = [den, c1](double, double x, double y) {
      const double D = den(x, y);
      return 6 / D - 8 * c1 * std::pow(x, 4.0 / 3) / (D * D);
    };
    f.du_y = [den](double, double x, double y) {
      const double D = den(x, y);
      return -12 * x * y / (D * D);
    };
    f.du_yy = [den](double, double x, double y) {
      const double D = den(x, y);
      return -12 * x / (D * D) + 48 * x * y * y / (D * D * D);
    };
    return f;
  }
  if (id == "2.2-rational-b") {
    const double c1 = get(params, "C1", 1.0);
    auto den = [c1](double x, double y) { return c1 * x * x * x + y * y * y; };
    f.eval = [den](double, double x, double y) { return 6 * x * y / den(x, y); };
    f.guard = [den](double, double x, double y) { return den_ok(den(x, y), 6 * x * y); };
    f.du_t = [](double, double, double) { return 0.0; };
    f.du_x = [den, c1](double, double x, double y) {
      const double D = den(x, y);
      return 6 * y / D - 18 * c1 * x * x * x * y / (D * D);
    };
    f.du_y = [den](double, double x, double y) {
      const double D = den(x, y);
      return 6 * x / D - 18 * x * y * y * y / (D * D);
    };
    f.du_yy = [den](double, double x, double y) {
      const double D = den(x, y);
      return -72 * x * y * y / (D * D) + 108 * x * std::pow(y, 5) / (D * D * D);
    };
    return f;
  }
  if (id == "2.2-exp" || id == "2.2-trig") {
    const double c1 = get(params, "C1", 1.0), c2 = get(params, "C2", 0.4);
    const bool trig = id == "2.2-trig";
    auto num_den = [c1, c2, trig](double x, double y) -> std::array<double, 2> {
      const double q = y / x;
      if (!trig) {
        const double ep = std::exp(q), em = std::exp(-q);
        return {2 * (c1 * ep - c2 * em), c1 * ep * (y - x) + c2 * em * (y + x)};
      }
      const double sn = std::sin(q), cn = std::cos(q);
      return {2 * (-c1 * sn + c2 * cn),
              c1 * (y * cn - x * sn) + c2 * (y * sn + x * cn)};
    };
    f.eval = [num_den](double, double x, double y) {
      auto v = num_den(x, y);
      return v[0] / v[1];
    };
    f.guard = [num_den](double, double x, double y) {
      if (std::abs(x) < 100 * kGuardEps) return false;
      auto v = num_den(x, y);
      return den_ok(v[1], v[0]);
    };
    return f;
  }
  if (id == "2.3") {
    const double c0 = get(params, "C0", 0.0);
    f.eval = [c0](double, double x, double y) { return 6 * (x + c0) / (y * y); };
    f.guard = [c0](double, double x, double y) { return den_ok(y * y, 6 * (x + c0)); };
    f.du_t = [](double, double, double) { return 0.0; };
    f.du_x = [](double, double, double y) { return 6 / (y * y); };
    f.du_y = [c0](double, double x, double y) { return -12 * (x + c0) / (y * y * y); };
    f.du_yy = [c0](double, double x, double y) { return 36 * (x + c0) / (y * y * y * y); };
    return f;
  }
  if (id == "2.7-log") {
    auto den = [](double t, double x, double y) { return y + 2 * std::log(std::abs(x)) - t; };
    f.eval = [den](double t, double x, double y) { return -x / den(t, x, y); };
    f.guard = [den](double t, double x, double y) {
      return std::abs(x) > kGuardEps && den_ok(den(t, x, y), x);
    };
    f.du_t = [den](double t, double x, double y) {
      const double D = den(t, x, y);
      return -x / (D * D);
    };
    f.du_x = [den](double t, double x, double y) {
      const double D = den(t, x, y);
      return -1 / D + 2 / (D * D);
    };
    f.du_y = [den](double t, double x, double y) {
      const double D = den(t, x, y);
      return x / (D * D);
    };
    f.du_yy = [den](double t, double x, double y) {
      const double D = den(t, x, y);
      return -2 * x / (D * D * D);
    };
    return f;
  }
  if (id == "2.7-besselJY" || id == "2.7-besselIK") {
    const double c1 = get(params, "C1", 1.0), c2 = get(params, "C2", 0.4);
    const bool jy = id == "2.7-besselJY";
    auto quotient = [c1, c2, jy](double xi) -> std::array<double, 2> {
      using sf::BesselKind;
      if (jy) {
        auto n1 = sf::bessel(BesselKind::kJ1, xi), n2 = sf::bessel(BesselKind::kY1, xi);
        auto d1v = sf::bessel(BesselKind::kJ0, xi), d2v = sf::bessel(BesselKind::kY0, xi);
        return {c1 * n1.value + c2 * n2.value, c1 * d1v.value + c2 * d2v.value};
      }
      auto n1 = sf::bessel(BesselKind::kI1, xi), n2 = sf::bessel(BesselKind::kK1, xi);
      auto d1v = sf::bessel(BesselKind::kI0, xi), d2v = sf::bessel(BesselKind::kK0, xi);
      return {c1 * n1.value - c2 * n2.value, c1 * d1v.value + c2 * d2v.value};
    };
    const double sign = jy ? -0.5 : 0.5;
    f.eval = [quotient, sign](double t, double x, double y) {
      const double e = std::exp((t - y) / 2);
      const double xi = e / x;
      auto q = quotient(xi);
      return sign * e * q[0] / q[1];
    };
    f.guard = [quotient](double t, double x, double y) {
      if (x < 100 * kGuardEps) return false;
      const double xi = std::exp((t - y) / 2) / x;
      if (xi <= 0.05 || xi > 18) return false;
      auto q = quotient(xi);
      return den_ok(q[1], q[0]);
    };
    return f;
  }
  if (id == "2.8-weierstrass") {
    const double c1 = get(params, "C1", 1.0), c2 = get(params, "C2", 0.0);
    auto wp = std::make_shared<sf::WeierstrassP>(c1);
    f.eval = [wp, c2](double, double x, double y) {
      return wp->eval(y / kSqrt6 + c2).p * x;
    };
    f.guard = [wp, c2](double, double, double y) {
      auto v = wp->eval(y / kSqrt6 + c2);
      return v.status == sf::FnStatus::kOk && std::abs(v.p) < 1e4;
    };
    return f;
  }
  if (id == "7-lame") {
    const double c1 = get(params, "C1", 1.0), c3 = get(params, "C3", 0.5);
    const double a1 = get(params, "a1", 1.0), a2 = get(params, "a2", 0.4);
    const double z0 = get(params, "z0", 1.0);
    auto wp = std::make_shared<sf::WeierstrassP>(c1);
    auto lame = std::make_shared<sf::LameSolutions>(c1, c3, z0);
    f.eval = [wp, lame, c3, a1, a2](double t, double x, double y) {
      const double z = y / kSqrt6;
      auto b = lame->eval(z);
      return wp->eval(z).p * x + std::exp(c3 * t) * (a1 * b.phi1 + a2 * b.phi2);
    };
    f.guard = [wp, lame](double, double, double y) {
      const double z = y / kSqrt6;
      auto v = wp->eval(z);
      auto b = lame->eval(z);
      return v.status == sf::FnStatus::kOk && b.status == sf::FnStatus::kOk &&
             std::abs(v.p) < 1e4;
    };
    return f;
  }
  if (id == "7-darboux") {
    if (!theta) throw std::invalid_argument(id + ": requires a heat solution theta");
    f.eval = [theta](double t, double x, double y) {
      const double th = theta->eval(t, y), t1 = theta->y_derivative(1, t, y),
                   t2 = theta->y_derivative(2, t, y);
      return 6 * x / (y * y) + t2 - 3 * t1 / y + 3 * th / (y * y);
    };
    f.guard = [theta](double t, double, double y) {
      return std::abs(y) > 50 * kGuardEps && theta->guard(t, y);
    };
    f.du_t = [theta](double t, double, double y) {
      const double t2 = theta->y_derivative(2, t, y), t3 = theta->y_derivative(3, t, y),
                   t4 = theta->y_derivative(4, t, y);
      return t4 - 3 * t3 / y + 3 * t2 / (y * y);
    };
    f.du_x = [](double, double, double y) { return 6 / (y * y); };
    f.du_y = [theta](double t, double x, double y) {
      const double th = theta->eval(t, y), t1 = theta->y_derivative(1, t, y),
                   t2 = theta->y_derivative(2, t, y), t3 = theta->y_derivative(3, t, y);
      return -12 * x / (y * y * y) + t3 - 3 * t2 / y + 6 * t1 / (y * y) - 6 * th / (y * y * y);
    };
    f.du_yy = [theta](double t, double x, double y) {
      const double th = theta->eval(t, y), t1 = theta->y_derivative(1, t, y),
                   t2 = theta->y_derivative(2, t, y), t3 = theta->y_derivative(3, t, y),
                   t4 = theta->y_derivative(4, t, y);
      return 36 * x / std::pow(y, 4) + t4 - 3 * t3 / y + 9 * t2 / (y * y) -
             18 * t1 / std::pow(y, 3) + 18 * th / std::pow(y, 4);
    };
    return f;
  }
  if (id == "7-heun") {
    const double sgn = get(params, "sign", 1.0);
    const double nu = get(params, "nu", 0.0);
    const double c1 = get(params, "C1", 1.0), c2 = get(params, "C2", 0.5);
    const double lam = 3.0 + sgn * kSqrt6;
    const double al = 2.5 * lam, ga = -5.0;
    const double de = 5.0 / 8 * lam * (4 * nu + 1);
    const double eta = -2.5 * lam * nu - 59.0 / 8 - sgn * 29.0 / 8 * kSqrt6;
    auto even = std::make_shared<sf::HeunC>(al, -0.5, ga, de, eta);
    auto odd = std::make_shared<sf::HeunC>(al, +0.5, ga, de, eta);
    const double cw = 18.0 + sgn * 8.0 * kSqrt6;
    const double aw = 12.0 * (4.0 + sgn * kSqrt6);
    f.eval = [=](double t, double x, double y) {
      const double q = y * y + 10 * lam * t;
      const double w1 = aw * (y * y + cw * t) / (q * q);
      const double z = -y * y / (10 * lam * t);
      const double pref = std::pow(t, nu + 1.5) * std::exp(-y * y / (4 * t)) / (q * q);
      return w1 * x +
             pref * (c1 * y * odd->eval(z).value + c2 * std::sqrt(t) * even->eval(z).value);
    };
    f.guard = [=](double t, double, double y) {
      if (t < 0.05) return false;
      const double z = -y * y / (10 * lam * t);
      if (z < -40) return false;
      return even->eval(z).status == sf::FnStatus::kOk &&
             odd->eval(z).status == sf::FnStatus::kOk;
    };
    return f;
  }
  throw std::invalid_argument("unknown solution family id: " + id);
}

// ------------------------------------------------------------ v-families --

double diffusion_residual(const DiffusionFamily& f, double t, double x) {
  auto v = [&](double tt, double xx) { return f.eval(tt, xx); };
  const double vt = fd1([&](double s) { return v(s, x); }, t);
  const double vx = fd1([&](double s) { return v(t, s); }, x);
  const double vxx = fd2([&](double s) { return v(t, s); }, x);
  const double vv = v(t, x);
  const double flux = std::pow(vv, -0.5) * vxx - 0.5 * std::pow(vv, -1.5) * vx * vx;
  double r = vt - flux;
  double scale = std::max({1.0, std::abs(vt), std::abs(flux)});
  if (f.convective) {
    const double conv = std::pow(vv, -0.5) * vx;
    r -= conv;
    scale = std::max(scale, std::abs(conv));
  }
  return r / scale;
}

GateReport run_gate(const DiffusionFamily& f, int probes, std::uint64_t seed) {
  GateReport rep;
  rep.id = f.id;
  rep.gate = gate_class_name(f.gate);
  rep.tolerance = std::max(gate_tolerance(f.gate), 1e-5);  // spec gate for v-families
  Rng rng(seed ^ std::hash<std::string>{}(f.id));
  int done = 0, attempts = 0;
  while (done < probes && attempts < probes * 80) {
    ++attempts;
    const double t = rng.uniform(f.box.t0, f.box.t1);
    const double x = rng.uniform(f.box.x0, f.box.x1);
    const double ht = 2.2e-3 * std::max(1.0, std::abs(t)), hx = 2.2e-3 * std::max(1.0, std::abs(x));
    bool ok = true;
    for (double dt : {-ht, 0.0, ht})
      for (double dx : {-hx, 0.0, hx}) ok = ok && f.ok(t + dt, x + dx);
    if (!ok) {
      ++rep.skipped;
      continue;
    }
    rep.max_scaled_residual = std::max(rep.max_scaled_residual,
                                       std::abs(diffusion_residual(f, t, x)));
    ++done;
  }
  rep.probes = done;
  rep.pass = done == probes && rep.max_scaled_residual < rep.tolerance;
  return rep;
}

DiffusionFamily build_v_family(const std::string& id, const std::map<std::string, double>& params,
                               GateClass gate, const ProbeBox2& box, const std::string& desc) {
  DiffusionFamily f;
  f.id = id;
  f.description = desc;
  f.params = params;
  f.gate = gate;
  f.box = box;
  const double c1 = get(params, "C1", 1.0), c2 = get(params, "C2", 0.4);

  if (id == "B-rational-a") {
    f.w = [c1](double t, double x) { return 6 * t / (x * x + c1 * std::pow(t, 4.0 / 3)); };
    f.guard = [c1](double t, double x) {
      return t > kGuardEps && den_ok(x * x + c1 * std::pow(t, 4.0 / 3), 6 * t);
    };
    return f;
  }
  if (id == "B-airy") {
    f.w = [c1, c2](double t, double x) {
      const double s = std::pow(t, -2.0 / 3) * x;
      auto a = sf::airy(s);
      return 3 * std::pow(t, -1.0 / 3) * (c1 * a.ai + c2 * a.bi) / (c1 * a.aip + c2 * a.bip);
    };
    f.guard = [c1, c2](double t, double x) {
      if (t < 100 * kGuardEps) return false;
      const double s = std::pow(t, -2.0 / 3) * x;
      if (std::abs(s) > 25) return false;
      auto a = sf::airy(s);
      return den_ok(c1 * a.aip + c2 * a.bip, c1 * a.ai + c2 * a.bi);
    };
    return f;
  }
  if (id == "B-rational-b") {
    f.w = [c1](double t, double x) { return 6 * t * x / (x * x * x + c1 * t * t * t); };
    f.guard = [c1](double t, double x) {
      return den_ok(x * x * x + c1 * t * t * t, 6 * t * x);
    };
    return f;
  }
  if (id == "B-exp") {
    f.w = [c1, c2](double t, double x) {
      const double q = x / t, ep = std::exp(q), em = std::exp(-q);
      return 2 * (c1 * ep - c2 * em) / (c1 * ep * (x - t) + c2 * em * (x + t));
    };
    f.guard = [c1, c2](double t, double x) {
      if (std::abs(t) < 100 * kGuardEps || std::abs(x / t) > 60) return false;
      const double q = x / t, ep = std::exp(q), em = std::exp(-q);
      return den_ok(c1 * ep * (x - t) + c2 * em * (x + t), c1 * ep - c2 * em);
    };
    return f;
  }
  if (id == "B-trig") {
    f.w = [c1, c2](double t, double x) {
      const double q = x / t, sn = std::sin(q), cn = std::cos(q);
      return 2 * (-c1 * sn + c2 * cn) / (c1 * (x * cn - t * sn) + c2 * (x * sn + t * cn));
    };
    f.guard = [c1, c2](double t, double x) {
      if (std::abs(t) < 100 * kGuardEps) return false;
      const double q = x / t, sn = std::sin(q), cn = std::cos(q);
      return den_ok(c1 * (x * cn - t * sn) + c2 * (x * sn + t * cn), 1.0);
    };
    return f;
  }
  if (id == "B-lame") {
    const double z0 = get(params, "z0", 0.5);
    const double a1 = get(params, "a1", 1.0), a2 = get(params, "a2", 0.4);
    auto wp = std::make_shared<sf::WeierstrassP>(c1);
    auto lame = std::make_shared<sf::LameSolutions>(c1, 0.0, z0);  // phi'' = 6 wp phi
    f.w = [wp, lame, a1, a2](double t, double x) {
      const double z = x / kSqrt6;
      auto b = lame->eval(z);
      return wp->eval(z).p * t + a1 * b.phi1 + a2 * b.phi2;
    };
    f.guard = [wp, lame](double, double x) {
      const double z = x / kSqrt6;
      auto v = wp->eval(z);
      auto b = lame->eval(z);
      return v.status == sf::FnStatus::kOk && b.status == sf::FnStatus::kOk &&
             std::abs(v.p) < 1e4;
    };
    f.gate = GateClass::kOde;
    return f;
  }
  if (id == "B-power") {
    const double c4 = get(params, "C4", 0.8);
    f.w = [c4](double t, double x) { return 6 * t / (x * x) + c4 * x * x * x; };
    f.guard = [](double, double x) { return std::abs(x) > 100 * kGuardEps; };
    return f;
  }
  if (id == "B-conv-log") {
    f.convective = true;
    f.w = [](double t, double x) { return -t / (x + 2 * std::log(std::abs(t))); };
    f.guard = [](double t, double x) {
      return t > kGuardEps && den_ok(x + 2 * std::log(std::abs(t)), t);
    };
    return f;
  }
  if (id == "B-conv-besselJY" || id == "B-conv-besselIK") {
    f.convective = true;
    const bool jy = id == "B-conv-besselJY";
    f.w = [c1, c2, jy](double t, double x) {
      using sf::BesselKind;
      const double xi = std::exp(-x / 2) / t;
      if (jy) {
        return -0.5 * std::exp(-x / 2) *
               (c1 * sf::bessel(BesselKind::kJ1, xi).value +
                c2 * sf::bessel(BesselKind::kY1, xi).value) /
               (c1 * sf::bessel(BesselKind::kJ0, xi).value +
                c2 * sf::bessel(BesselKind::kY0, xi).value);
      }
      return 0.5 * std::exp(-x / 2) *
             (c1 * sf::bessel(BesselKind::kI1, xi).value -
              c2 * sf::bessel(BesselKind::kK1, xi).value) /
             (c1 * sf::bessel(BesselKind::kI0, xi).value +
              c2 * sf::bessel(BesselKind::kK0, xi).value);
    };
    f.guard = [c1, c2, jy](double t, double x) {
      using sf::BesselKind;
      if (t < 100 * kGuardEps) return false;
      const double xi = std::exp(-x / 2) / t;
      if (xi <= 0.05 || xi > 18) return false;
      const double den =
          jy ? c1 * sf::bessel(BesselKind::kJ0, xi).value + c2 * sf::bessel(BesselKind::kY0, xi).value
             : c1 * sf::bessel(BesselKind::kI0, xi).value + c2 * sf::bessel(BesselKind::kK0, xi).value;
      return den_ok(den, 1.0);
    };
    return f;
  }
  throw std::invalid_argument("unknown diffusion family id: " + id);
}

// -------------------------------------------------------------- manifest --

namespace {

HeatSolutionPtr build_heat_by_id(const std::string& id) {
  if (id.rfind("heat.poly", 0) == 0) return heat_polynomial(std::stoi(id.substr(9)));
  if (id == "heat.exp") return heat_exponential(1.0, 2.0);
  if (id == "heat.linear") return heat_linear(1.0, 2.0);
  if (id == "heat.trig") return heat_trig(1.0, 1.0);
  if (id == "heat.source") return heat_source();
  if (id.rfind("heat.hermite", 0) == 0) return heat_hermite(std::stoi(id.substr(12)));
  if (id == "heat.erf") return heat_erf();
  if (id == "heat.airy") return heat_airy(1.0, 0.5);
  if (id == "heat.pcf-uv") return heat_pcf_uv(0.3, 1.0, 0.7);
  if (id == "heat.pcf-w") return heat_pcf_w(0.4, 1.0, 0.6);
  if (id == "heat.exp-positive") return heat_exponential(1.0, 2.0);
  if (id == "heat.poly2-positive") return heat_shifted(heat_polynomial(2), 5.0);
  throw std::invalid_argument("unknown heat solution id: " + id);
}

}  // namespace

Catalog::Catalog(const std::string& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) throw std::runtime_error("cannot open catalog manifest: " + manifest_path);
  std::string line;
  std::string id, desc, branch, theta_id, gate = "fd";
  std::map<std::string, double> params;
  std::vector<double> box;
  bool in_family = false;
  auto flush = [&]() {
    GateClass g = gate_class_from_name(gate);
    CatalogEntry e;
    if (id.rfind("B-", 0) == 0) {
      if (box.size() != 4) throw std::runtime_error("manifest: B-family needs a 4-number box");
      e.v = build_v_family(id, params, g, {box[0], box[1], box[2], box[3]}, desc);
    } else {
      if (box.size() != 6) throw std::runtime_error("manifest: family needs a 6-number box");
      HeatSolutionPtr th;
      if (!theta_id.empty()) th = heat(theta_id);
      e.u = build_u_family(id, params, th, g, {box[0], box[1], box[2], box[3], box[4], box[5]},
                           branch, desc);
    }
    index_[id] = entries_.size();
    entries_.push_back(std::move(e));
  };
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;
    if (head == "family") {
      ss >> id;
      desc.clear();
      branch.clear();
      theta_id.clear();
      gate = "fd";
      params.clear();
      box.clear();
      in_family = true;
    } else if (head == "end") {
      if (!in_family) throw std::runtime_error("manifest: stray end");
      flush();
      in_family = false;
    } else if (head == "desc") {
      std::getline(ss, desc);
      if (!desc.empty() && desc[0] == ' ') desc.erase(0, 1);
    } else if (head == "param") {
      std::string k;
      double v;
      ss >> k >> v;
      params[k] = v;
    } else if (head == "theta") {
      ss >> theta_id;
    } else if (head == "branch") {
      ss >> branch;
    } else if (head == "gate") {
      ss >> gate;
    } else if (head == "box") {
      double v;
      while (ss >> v) box.push_back(v);
    } else {
      throw std::runtime_error("manifest: unknown directive " + head);
    }
  }
}

std::vector<std::string> Catalog::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.id());
  return out;
}

const CatalogEntry& Catalog::entry(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::out_of_range("no catalog entry: " + id);
  return entries_[it->second];
}

const SolutionFamily& Catalog::family(const std::string& id) const {
  const auto& e = entry(id);
  if (!e.u) throw std::out_of_range(id + " is not a u(t,x,y) family");
  return *e.u;
}

HeatSolutionPtr Catalog::heat(const std::string& id) const {
  auto& cache = const_cast<Catalog*>(this)->heat_;
  auto it = cache.find(id);
  if (it != cache.end()) return it->second;
  auto w = build_heat_by_id(id);
  cache[id] = w;
  return w;
}

std::vector<GateReport> Catalog::verify(const std::string& id_or_all, std::uint64_t seed) const {
  std::vector<GateReport> out;
  auto run_one = [&](const CatalogEntry& e) {
    if (e.u)
      out.push_back(run_gate(*e.u, 25, seed));
    else
      out.push_back(run_gate(*e.v, 25, seed));
  };
  if (id_or_all == "all") {
    for (const auto& e : entries_) run_one(e);
  } else {
    run_one(entry(id_or_all));
  }
  return out;
}

}  // namespace dgb
