#include <cmath>

#include "doctest.h"

#include "degburgers/fixtures.hpp"
#include "degburgers/jet_tests.hpp"
#include "degburgers/solution_catalog.hpp"
#include "degburgers/special_functions.hpp"
#include "degburgers/transport.hpp"

using namespace dgb;

namespace {
const Catalog& catalog() {
  static const Catalog c(default_data_dir() + "/catalog_manifest.txt");
  return c;
}
}  // namespace

TEST_CASE("catalog spans the expected families") {
  auto ids = catalog().ids();
  CHECK(ids.size() >= 25);
}

TEST_CASE("reference evaluations") {
  const auto& rb = catalog().family("2.2-rational-b");
  CHECK(rb.eval(0, 1, 1) == doctest::Approx(3.0));
  const auto& f23 = catalog().family("2.3");
  CHECK(build_u_family("2.3", {{"C0", 0.0}}, nullptr, GateClass::kAnalytic, f23.box, "", "")
            .eval(1, 2, 1) == doctest::Approx(12.0));
}

TEST_CASE("every registered family passes its residual gate") {
  for (const auto& rep : catalog().verify("all")) {
    CHECK_MESSAGE(rep.pass, rep.id, " gate=", rep.gate, " residual=", rep.max_scaled_residual,
                  " probes=", rep.probes);
  }
}

TEST_CASE("Cole-Hopf families pass for five distinct heat inputs") {
  const auto& base = catalog().family("1.10");
  const std::vector<std::string> thetas{"heat.exp", "heat.poly2-positive", "heat.trig",
                                        "heat.source", "heat.erf"};
  for (const auto& tid : thetas) {
    auto th = catalog().heat(tid);
    ProbeBox3 box = base.box;
    if (tid == "heat.source" || tid == "heat.erf") box = {0.3, 1.0, 0.1, 1.5, 0.1, 1.5};
    if (tid == "heat.trig") box = {0.1, 0.6, -0.4, 0.4, -0.4, 0.4};  // keep theta away from 0
    auto fam = build_u_family("1.10", {}, th, GateClass::kAnalytic, box, "", "");
    auto rep = run_gate(fam);
    CHECK_MESSAGE(rep.pass, tid, " residual=", rep.max_scaled_residual);
  }
  // theta = const collapses to u = 0
  auto flat = build_u_family("1.10", {}, catalog().heat("heat.poly0"), GateClass::kAnalytic,
                             base.box, "", "");
  CHECK(flat.eval(0.5, 0.3, -0.2) == doctest::Approx(0.0));
}

TEST_CASE("Darboux family identities") {
  // seed theta = y^3 + 6ty is annihilated: u collapses to 6x/y^2
  auto fam = build_u_family("7-darboux", {}, catalog().heat("heat.poly3"), GateClass::kAnalytic,
                            {0.2, 1.0, -2, 2, 0.7, 2.2}, "", "");
  for (double y : {0.8, 1.4, 2.0})
    CHECK(fam.eval(0.7, 1.1, y) == doctest::Approx(6 * 1.1 / (y * y)).epsilon(1e-12));
  // theta = 1 shifts it to the 2.3 family with C0 = 1/2
  auto one = build_u_family("7-darboux", {}, catalog().heat("heat.poly0"), GateClass::kAnalytic,
                            {0.2, 1.0, -2, 2, 0.7, 2.2}, "", "");
  auto f23 = build_u_family("2.3", {{"C0", 0.5}}, nullptr, GateClass::kAnalytic,
                            {0.2, 1.0, -2, 2, 0.7, 2.2}, "", "");
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    double t = rng.uniform(0.2, 1.0), x = rng.uniform(-2, 2), y = rng.uniform(0.7, 2.2);
    CHECK(one.eval(t, x, y) == doctest::Approx(f23.eval(t, x, y)).epsilon(1e-10));
  }
}

TEST_CASE("analytic partials match finite differences") {
  for (const auto& id : catalog().ids()) {
    const auto& e = catalog().entry(id);
    if (!e.u || !e.u->has_analytic_partials()) continue;
    const auto& f = *e.u;
    Rng rng(31);
    int tested = 0;
    for (int i = 0; i < 40 && tested < 5; ++i) {
      double t = rng.uniform(f.box.t0, f.box.t1), x = rng.uniform(f.box.x0, f.box.x1),
             y = rng.uniform(f.box.y0, f.box.y1);
      bool ok = true;
      for (double dt : {-0.01, 0.0, 0.01})
        for (double dy : {-0.01, 0.0, 0.01}) ok = ok && f.ok(t + dt, x, y + dy);
      if (!ok) continue;
      ++tested;
      auto fd_t = [&](double s) { return f.eval(s, x, y); };
      auto fd_x = [&](double s) { return f.eval(t, s, y); };
      auto fd_y = [&](double s) { return f.eval(t, x, s); };
      const double h = 1e-4;
      auto d1 = [&](auto g, double c) {
        return (g(c - 2 * h) - 8 * g(c - h) + 8 * g(c + h) - g(c + 2 * h)) / (12 * h);
      };
      const double scale = std::max(1.0, std::abs(f.eval(t, x, y)));
      CHECK_MESSAGE(std::abs(d1(fd_t, t) - f.du_t(t, x, y)) < 2e-6 * scale, id, " du_t");
      CHECK_MESSAGE(std::abs(d1(fd_x, x) - f.du_x(t, x, y)) < 2e-6 * scale, id, " du_x");
      CHECK_MESSAGE(std::abs(d1(fd_y, y) - f.du_y(t, x, y)) < 2e-6 * scale, id, " du_y");
    }
    CHECK_MESSAGE(tested > 0, id);
  }
}

TEST_CASE("group element algebra") {
  CHECK_THROWS_AS(GroupElement(0, 1, 0, 0, 0, 0), std::invalid_argument);
  Rng rng(20250809);
  for (int i = 0; i < 30; ++i) {
    GroupElement g(rng.uniform(0.3, 2.0) * (rng.next_double() < 0.5 ? -1 : 1),
                   rng.uniform(0.3, 2.0) * (rng.next_double() < 0.5 ? -1 : 1),
                   rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                   rng.uniform(-1, 1));
    auto inv = g.inverse();
    const double t = rng.uniform(-1, 1), x = rng.uniform(-1, 1), y = rng.uniform(-1, 1);
    auto p = g.apply(t, x, y);
    auto q = inv.apply(p[0], p[1], p[2]);
    CHECK(q[0] == doctest::Approx(t).epsilon(1e-12));
    CHECK(q[1] == doctest::Approx(x).epsilon(1e-12));
    CHECK(q[2] == doctest::Approx(y).epsilon(1e-12));
    const double u = rng.uniform(-2, 2);
    CHECK(inv.apply_u(g.apply_u(u)) == doctest::Approx(u).epsilon(1e-12));
  }
}

TEST_CASE("composition law on families (pointwise)") {
  Rng rng(99);
  const char* targets[3] = {"2.3", "simple-xt", "1.9"};
  for (const char* id : targets) {
    const auto& s = catalog().family(id);
    for (int trial = 0; trial < 50; ++trial) {
      GroupElement g1(rng.uniform(0.5, 1.5), rng.uniform(0.5, 1.5), rng.uniform(-0.3, 0.3),
                      rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3));
      GroupElement g2(rng.uniform(0.5, 1.5), rng.uniform(0.5, 1.5), rng.uniform(-0.3, 0.3),
                      rng.uniform(-0.5, 0.5), rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3));
      auto a = act(g2, act(g1, s));
      auto b = act(g2 * g1, s);
      // compare on probes of the doubly-mapped box
      for (int i = 0; i < 4; ++i) {
        double t = rng.uniform(b.box.t0, b.box.t1), x = rng.uniform(b.box.x0, b.box.x1),
               y = rng.uniform(b.box.y0, b.box.y1);
        if (!a.ok(t, x, y) || !b.ok(t, x, y)) continue;
        const double va = a.eval(t, x, y), vb = b.eval(t, x, y);
        CHECK(std::abs(va - vb) < 1e-9 * std::max(1.0, std::abs(vb)));
      }
    }
  }
}

TEST_CASE("group action examples and discrete involutions") {
  // Galilean boost acting on u == 0 produces the constant c
  auto zero = build_u_family("constant", {{"c", 0.0}}, nullptr, GateClass::kAnalytic,
                             {0.2, 1.0, -1, 1, -1, 1}, "", "");
  GroupElement boost(1, 1, 0, 0.75, 0, 0);
  auto moved = act(boost, zero);
  CHECK(moved.eval(0.5, 0.2, 0.1) == doctest::Approx(0.75));
  CHECK(run_gate(moved).pass);

  // scaling d2 = 2 fixes u = x/t
  const auto& xt = catalog().family("simple-xt");
  GroupElement scale(1, 2, 0, 0, 0, 0);
  auto scaled = act(scale, xt);
  for (double t : {0.5, 0.9})
    for (double x : {-1.0, 0.7}) CHECK(scaled.eval(t, x, 0.3) == doctest::Approx(x / t));

  // the two discrete maps are involutions and preserve the residual gate
  for (auto g : {GroupElement::mirror_x(), GroupElement::mirror_y()}) {
    auto twice = g * g;
    CHECK(twice.d1 == 1.0);
    CHECK(twice.d2 == 1.0);
    CHECK(twice.d3 == 0.0);
    CHECK(twice.d4 == 0.0);
    CHECK(twice.d5 == 0.0);
    CHECK(twice.d6 == 0.0);
    const auto& s = catalog().family("1.9");
    auto once = act(g, s);
    auto back = act(g, once);
    for (double t : {0.4, 0.8})
      for (double y : {-0.5, 0.5})
        CHECK(back.eval(t, 0.3, y) == doctest::Approx(s.eval(t, 0.3, y)).epsilon(1e-14));
    CHECK(run_gate(once).pass);
  }
}

TEST_CASE("affine pair checks") {
  // w1 = 6/y^2 with the Darboux-transformed w0
  auto theta = catalog().heat("heat.exp");
  auto w1 = [](double, double y) { return 6.0 / (y * y); };
  auto w0 = [theta](double t, double y) {
    return theta->y_derivative(2, t, y) - 3 * theta->y_derivative(1, t, y) / y +
           3 * theta->eval(t, y) / (y * y);
  };
  auto rep = affine_pair_check(w1, w0, 0.3, 1.0, 0.8, 2.0);
  CHECK_MESSAGE(rep.pass, rep.max_w1_residual, " ", rep.max_w0_residual, " ",
                rep.max_pde_residual);

  // w1 = 0 with w0 = theta reduces to case 1.9
  auto rep2 = affine_pair_check([](double, double) { return 0.0; },
                                [theta](double t, double y) { return theta->eval(t, y); }, 0.3,
                                1.0, -1.5, 1.5);
  CHECK(rep2.pass);

  // Weierstrass coefficient with a Lame-basis tail (ODE-integrated, 1e-4)
  sf::WeierstrassP wp(1.0);
  sf::LameSolutions lame(1.0, 0.5, 1.0);
  auto w1w = [&](double, double y) { return wp.eval(y / 2.4494897427831781).p; };
  auto w0w = [&](double t, double y) {
    auto b = lame.eval(y / 2.4494897427831781);
    return std::exp(0.5 * t) * (b.phi1 + 0.4 * b.phi2);
  };
  auto rep3 = affine_pair_check(w1w, w0w, 0.2, 1.0, 1.6, 3.2, 25, 1e-4);
  CHECK_MESSAGE(rep3.pass, rep3.max_w1_residual, " ", rep3.max_w0_residual, " ",
                rep3.max_pde_residual);

  // control: w1 = y is not a solution of the first equation
  auto bad = affine_pair_check([](double, double y) { return y; },
                               [](double, double) { return 0.0; }, 0.3, 1.0, 0.8, 2.0);
  CHECK(!bad.pass);
}

TEST_CASE("appendix-B values and w^2 correspondence") {
  const auto& e = catalog().entry("B-rational-a");
  REQUIRE(e.v.has_value());
  CHECK(e.v->eval(1, 1) == doctest::Approx(9.0));  // 36/(1+1)^2

  // B-rational-b is the square of the 2.2-rational-b reduced solution with
  // the roles of (x,y) relabeled to (t,x)
  const auto& eb = catalog().entry("B-rational-b");
  const auto& ub = catalog().family("2.2-rational-b");
  for (double t : {0.7, 1.0})
    for (double x : {1.0, 1.5}) {
      const double w = ub.eval(0.0, t, x);  // u(t_B -> x-slot, x_B -> y-slot)
      CHECK(eb.v->eval(t, x) == doctest::Approx(w * w).epsilon(1e-12));
    }

  // v == 1 solves the diffusion equation exactly
  DiffusionFamily one;
  one.id = "const";
  one.box = {0.2, 1.0, -1, 1};
  one.w = [](double, double) { return 1.0; };
  CHECK(run_gate(one).pass);
  CHECK(diffusion_residual(one, 0.5, 0.3) == doctest::Approx(0.0));
}

TEST_CASE("transport solution and zeta invariants") {
  TransportSolution lin(TransportSolution::linear_profile());
  // w = x/(1+t) in closed form
  for (double t : {0.2, 0.7})
    for (double x : {-1.0, 0.5, 2.0}) {
      auto w = lin.solve(t, x);
      REQUIRE(w.has_value());
      CHECK(*w == doctest::Approx(x / (1 + t)).epsilon(1e-12));
    }
  // zeta^1 for the linear profile is identically 1
  for (double t : {0.1, 0.5})
    for (double x : {-0.7, 1.2}) CHECK(*lin.zeta(1, t, x) == doctest::Approx(1.0).epsilon(1e-7));

  TransportSolution th(TransportSolution::tanh_profile());
  CHECK(std::isinf(th.shock_time()));
  // residual w_t + w w_x on a probe grid at t = 0.3
  for (double x = -1.5; x <= 1.5; x += 0.25) {
    auto j = th.jet(0.3, x);
    REQUIRE(j.has_value());
    CHECK(std::abs(j->wt + j->w * j->wx) < 1e-8);
  }
  // zeta^0 recovers the characteristic label s
  for (double s : {-0.8, 0.2, 1.1}) {
    const double t = 0.4, x = s + std::tanh(s) * t;
    CHECK(*th.zeta(0, t, x) == doctest::Approx(s).epsilon(1e-8));
  }
  // zeta^0 at t = 0 is x
  CHECK(*th.zeta(0, 0, 0.37) == doctest::Approx(0.37));
  // zeta^2 nested-FD value agrees with the closed form -w_xx / w_x^3
  for (double x : {-0.6, 0.9}) {
    auto j = th.jet(0.35, x);
    CHECK(*th.zeta(2, 0.35, x) ==
          doctest::Approx(-j->wxx / std::pow(j->wx, 3)).epsilon(1e-5));
  }
  // constant profile stays constant
  TransportSolution cst({"const", [](double) { return 0.8; }, [](double) { return 0.0; },
                         [](double) { return 0.0; }, [](double) { return 0.0; }});
  CHECK(*cst.solve(5.0, 1.3) == doctest::Approx(0.8));
}

TEST_CASE("transport conserved currents") {
  using namespace dgb::jets;
  auto tr = std::make_shared<TransportSolution>(TransportSolution::tanh_profile());
  const JetSpec spec2(2, 6);
  auto sampler = [tr, &spec2](Rng& rng) -> std::optional<JetPoint> {
    const double t = rng.uniform(0.05, 0.6), x = rng.uniform(-1.5, 1.5);
    auto j = tr->jet(t, x);
    if (!j || std::abs(j->wx) < 1e-8) return std::nullopt;
    JetPoint p(spec2);
    p.set_z(0, t);
    p.set_z(1, x);
    p.set_u(mi(0, 0, 0), j->w);
    p.set_u(mi(1, 0, 0), j->wt);
    p.set_u(mi(0, 1, 0), j->wx);
    p.set_u(mi(1, 1, 0), j->wtx);
    p.set_u(mi(0, 2, 0), j->wxx);
    p.set_u(mi(2, 0, 0), j->wtt);
    p.set_u(mi(0, 3, 0), j->wxxx);
    p.set_u(mi(1, 2, 0), j->wtxx);
    return p;
  };
  const Expr w = u(mi(0, 0, 0)), wx = u(mi(0, 1, 0));
  const Expr zeta0 = z(1) - w * z(0);
  const Expr zeta1 = pow(wx, -1) - z(0);
  for (const auto& [name, rho] : {std::pair{"zeta0", zeta0}, std::pair{"zeta0^2", zeta0 * zeta0},
                                  std::pair{"zeta0*zeta1", zeta0 * zeta1}}) {
    std::vector<Expr> current{wx * rho, w * wx * rho};
    auto rep = divergence_residual(current, spec2, sampler, 40, 20250809, 1e-5);
    CHECK_MESSAGE(rep.pass, name, " max_scaled=", rep.max_scaled, " skipped=", rep.skipped_points);
  }
  // a non-invariant density fails
  std::vector<Expr> badcur{wx * z(1), w * wx * z(1)};
  CHECK(!divergence_residual(badcur, spec2, sampler, 40, 20250809, 1e-5).pass);
}

TEST_CASE("divergence of the conservation-law current on catalog solutions") {
  using namespace dgb::jets;
  const JetSpec spec3(3, 6);
  auto family_sampler = [&spec3](const SolutionFamily& f) {
    return [&spec3, &f](Rng& rng) -> std::optional<JetPoint> {
      const double t = rng.uniform(f.box.t0, f.box.t1);
      const double x = rng.uniform(f.box.x0, f.box.x1);
      const double y = rng.uniform(f.box.y0, f.box.y1);
      bool ok = true;
      for (double dt : {-0.01, 0.0, 0.01})
        for (double dx : {-0.01, 0.0, 0.01})
          for (double dy : {-0.01, 0.0, 0.01}) ok = ok && f.ok(t + dt, x + dx, y + dy);
      if (!ok) return std::nullopt;
      JetPoint p(spec3);
      p.set_z(0, t);
      p.set_z(1, x);
      p.set_z(2, y);
      p.set_u(mi(0, 0, 0), f.eval(t, x, y));
      p.set_u(mi(1, 0, 0), f.du_t(t, x, y));
      p.set_u(mi(0, 1, 0), f.du_x(t, x, y));
      p.set_u(mi(0, 0, 1), f.du_y(t, x, y));
      p.set_u(mi(0, 0, 2), f.du_yy(t, x, y));
      return p;
    };
  };
  const Expr t = z(0), y = z(2);
  const std::vector<Expr> gammas{constant(1), y, y * y - 2.0 * t};
  const char* fams[] = {"2.3", "1.10", "simple-xt", "7-darboux", "1.8"};
  for (const char* id : fams) {
    const auto& f = catalog().family(id);
    REQUIRE(f.has_analytic_partials());
    for (const auto& g : gammas) {
      auto rep = divergence_residual(proposition_current(g), spec3, family_sampler(f), 25,
                                     20250809, 1e-5);
      CHECK_MESSAGE(rep.pass, id, " max_scaled=", rep.max_scaled);
    }
  }
}
