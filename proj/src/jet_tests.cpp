#include "degburgers/jet_tests.hpp"

#include <cmath>

namespace dgb::jets {

namespace {

struct PowerLaw final : Univariate {
  double p;
  explicit PowerLaw(double p_) : p(p_) {}
  double eval(double s, int k) const override {
    if (s <= 0) throw std::domain_error("fpow: base must be positive");
    double f = 1;
    for (int i = 0; i < k; ++i) f *= (p - i);
    return f * std::pow(s, p - k);
  }
};

}  // namespace

Expr fpow(const Expr& base, double p) {
  return smooth1d(std::make_shared<PowerLaw>(p), base);
}

JetPoint random_jet_point(const JetSpec& spec, Rng& rng, int order, double lo, double hi) {
  JetPoint p(spec);
  for (int mu = 0; mu < spec.n_indep(); ++mu) p.set_z(mu, rng.uniform(lo, hi));
  for (const auto& a : spec.indices_up_to(order)) p.set_u(a, rng.uniform(lo, hi));
  return p;
}

JetPoint random_manifold_point(const JetSpec& spec, Rng& rng, int spatial_order, const Expr& rhs,
                               double lo, double hi) {
  JetPoint p(spec);
  for (int mu = 0; mu < spec.n_indep(); ++mu) p.set_z(mu, rng.uniform(lo, hi));
  for (const auto& a : spec.indices_up_to(spatial_order))
    if (a.a[0] == 0) p.set_u(a, rng.uniform(lo, hi));
  p.set_resolver(manifold_resolver(rhs, spec));
  return p;
}

std::vector<Expr> euler_terms(const Expr& density, const JetSpec& spec) {
  std::vector<Expr> terms;
  for (const auto& a : density.jet_deps()) {
    Expr term = density.du(a);
    for (int mu = 0; mu < 3; ++mu)
      for (int k = 0; k < a.a[static_cast<size_t>(mu)]; ++k)
        term = total_derivative(term, mu, spec);
    const double sign = (a.order() % 2 == 0) ? 1.0 : -1.0;
    terms.push_back(sign * term);
  }
  return terms;
}

namespace {

JetTestReport run_term_test(const std::string& name, const std::vector<Expr>& terms,
                            const std::function<JetPoint(Rng&)>& make_point, int samples,
                            std::uint64_t seed, double tol) {
  JetTestReport rep;
  rep.test = name;
  rep.seed = seed;
  rep.samples = samples;
  rep.tolerance = tol;
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    JetPoint p = make_point(rng);
    double sum = 0, max_term = 0;
    for (const auto& t : terms) {
      double v = t(p);
      sum += v;
      max_term = std::max(max_term, std::abs(v));
    }
    rep.max_abs = std::max(rep.max_abs, std::abs(sum));
    rep.max_scaled = std::max(rep.max_scaled, std::abs(sum) / std::max(1.0, max_term));
  }
  rep.pass = rep.max_scaled < tol;
  return rep;
}

}  // namespace

JetTestReport characteristic_test(const Expr& gamma, const Expr& delta, const JetSpec& spec,
                                  int samples, std::uint64_t seed, double tol) {
  auto terms = euler_terms(gamma * delta, spec);
  const int order_needed = [&] {
    int m = 0;
    for (const auto& a : (gamma * delta).jet_deps()) m = std::max(m, a.order());
    for (const auto& t : terms) m = std::max(m, t.order());
    return m;
  }();
  return run_term_test(
      "characteristic_test", terms,
      [&](Rng& rng) { return random_jet_point(spec, rng, order_needed); }, samples, seed, tol);
}

JetTestReport symmetry_characteristic_test(const Expr& eta, const JetSpec& spec, int samples,
                                           std::uint64_t seed, double tol) {
  for (const auto& a : eta.jet_deps())
    if (a.a[0] != 0)
      throw std::invalid_argument("symmetry characteristic must not read t-derivatives, got u" +
                                  a.str());
  const Expr rhs = u(mi(0, 0, 2)) - u(mi(0, 0, 0)) * u(mi(0, 1, 0));  // u_t on the manifold
  std::vector<Expr> terms{total_derivative(eta, 0, spec), u(mi(0, 0, 0)) * total_derivative(eta, 1, spec),
                          u(mi(0, 1, 0)) * eta,
                          -total_derivative(total_derivative(eta, 2, spec), 2, spec)};
  int spatial_order = 0;
  for (const auto& a : eta.jet_deps()) spatial_order = std::max(spatial_order, a.order());
  spatial_order += 2;  // D2^2 raises spatial order by two
  return run_term_test(
      "symmetry_characteristic_test", terms,
      [&](Rng& rng) { return random_manifold_point(spec, rng, spatial_order, rhs); }, samples,
      seed, tol);
}

JetTestReport cosymmetry_test(const Expr& gamma, const JetSpec& spec, int samples,
                              std::uint64_t seed, double tol) {
  for (const auto& a : gamma.jet_deps())
    if (a.a[0] != 0)
      throw std::invalid_argument("cosymmetry must not read t-derivatives, got u" + a.str());
  const Expr rhs = u(mi(0, 0, 2)) - u(mi(0, 0, 0)) * u(mi(0, 1, 0));
  std::vector<Expr> terms{total_derivative(gamma, 0, spec),
                          u(mi(0, 0, 0)) * total_derivative(gamma, 1, spec),
                          total_derivative(total_derivative(gamma, 2, spec), 2, spec)};
  int spatial_order = 0;
  for (const auto& a : gamma.jet_deps()) spatial_order = std::max(spatial_order, a.order());
  spatial_order += 2;
  auto rep = run_term_test(
      "cosymmetry_test", terms,
      [&](Rng& rng) { return random_manifold_point(spec, rng, spatial_order, rhs); }, samples,
      seed, tol);
  return rep;
}

JetTestReport divergence_residual(const std::vector<Expr>& current, const JetSpec& spec,
                                  const std::function<std::optional<JetPoint>(Rng&)>& sampler,
                                  int samples, std::uint64_t seed, double tol) {
  if (static_cast<int>(current.size()) != spec.n_indep())
    throw std::invalid_argument("divergence_residual: one current component per variable");
  std::vector<Expr> terms;
  for (int mu = 0; mu < spec.n_indep(); ++mu)
    terms.push_back(total_derivative(current[static_cast<size_t>(mu)], mu, spec));
  JetTestReport rep;
  rep.test = "divergence_residual";
  rep.seed = seed;
  rep.samples = samples;
  rep.tolerance = tol;
  Rng rng(seed);
  int produced = 0;
  int attempts = 0;
  while (produced < samples && attempts < samples * 20) {
    ++attempts;
    auto p = sampler(rng);
    if (!p) {
      ++rep.skipped_points;
      continue;
    }
    ++produced;
    double sum = 0, max_term = 0;
    for (const auto& t : terms) {
      double v = t(*p);
      sum += v;
      max_term = std::max(max_term, std::abs(v));
    }
    rep.max_abs = std::max(rep.max_abs, std::abs(sum));
    rep.max_scaled = std::max(rep.max_scaled, std::abs(sum) / std::max(1.0, max_term));
  }
  rep.pass = produced == samples && rep.max_scaled < tol;
  return rep;
}

std::vector<NamedExpr> lie_characteristics() {
  const Expr uu = u(mi(0, 0, 0)), ux = u(mi(0, 1, 0)), uy = u(mi(0, 0, 1)), uyy = u(mi(0, 0, 2));
  const Expr t = z(0), x = z(1), y = z(2);
  const Expr ut_manifold = uyy - uu * ux;
  return {
      {"Dt", -2.0 * uu - 2.0 * (t * ut_manifold) - y * uy},
      {"Dx", uu - x * ux},
      {"Pt", -ut_manifold},
      {"Gx", constant(1) - t * ux},
      {"Py", -uy},
      {"Px", -ux},
  };
}

std::vector<NamedExpr> non_lie_characteristics() {
  const Expr uu = u(mi(0, 0, 0)), ux = u(mi(0, 1, 0)), uy = u(mi(0, 0, 1)), uyy = u(mi(0, 0, 2));
  return {
      {"u2", uu * uu},
      {"ux2", ux * ux},
      {"u_uy", uu * uy},
      {"u_uyy", uu * uyy},
      {"exp_u", exp(uu)},
  };
}

std::vector<NamedExpr> backward_heat_gammas() {
  const Expr t = z(0), y = z(2);
  const Expr y2 = y * y, y3 = y2 * y, y4 = y2 * y2;
  // reversed source solution: (3-t)^{-1/2} exp(-y^2/(4(3-t))), smooth for t <= 2
  Expr rev_src = fpow(constant(3) - t, -0.5) * exp(-0.25 * (y2 * fpow(constant(3) - t, -1.0)));
  return {
      {"one", constant(1)},
      {"y", y},
      {"y2-2t", y2 - 2.0 * t},
      {"y3-6ty", y3 - 6.0 * (t * y)},
      {"y4-12ty2+12t2", y4 - 12.0 * (t * y2) + 12.0 * (t * t)},
      {"exp_t_sin_y", exp(t) * sin(y)},
      {"exp_t_cos_y", exp(t) * cos(y)},
      {"exp_y-t", exp(y - t)},
      {"exp_-y-t", exp(-(y + t))},
      {"rev_source", rev_src},
  };
}

std::vector<NamedExpr> claw_controls() {
  const Expr t = z(0), x = z(1), y = z(2);
  return {
      {"x", x},
      {"u", u(mi(0, 0, 0))},
      {"y2+2t", y * y + 2.0 * t},
  };
}

std::optional<Expr> named_gamma(const std::string& name) {
  for (const auto& g : backward_heat_gammas())
    if (g.name == name) return g.expr;
  for (const auto& g : claw_controls())
    if (g.name == name) return g.expr;
  return std::nullopt;
}

std::optional<Expr> named_eta(const std::string& name) {
  for (const auto& e : lie_characteristics())
    if (e.name == name) return e.expr;
  for (const auto& e : non_lie_characteristics())
    if (e.name == name) return e.expr;
  return std::nullopt;
}

std::vector<Expr> proposition_current(const Expr& gamma) {
  const Expr uu = u(mi(0, 0, 0)), uy = u(mi(0, 0, 1));
  return {gamma * uu, 0.5 * (gamma * (uu * uu)), gamma.dz(2) * uu - gamma * uy};
}

}  // namespace dgb::jets
