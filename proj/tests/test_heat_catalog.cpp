#include <cmath>

#include "doctest.h"

#include "degburgers/heat_catalog.hpp"

using namespace dgb;

TEST_CASE("heat catalog reference points") {
  auto p2 = heat_polynomial(2);
  CHECK(p2->eval(1, 2) == doctest::Approx(6.0));  // y^2 + 2t at (1,2)
  auto src = heat_source();
  CHECK(src->eval(1, 0) == doctest::Approx(1.0));
  auto ex = heat_exponential(1.0, 0.0);
  CHECK(ex->eval(0.3, 0.4) == doctest::Approx(std::exp(0.7)));
}

TEST_CASE("default heat catalog passes the residual gate") {
  auto catalog = default_heat_catalog();  // throws on gate failure
  CHECK(catalog.size() >= 12);
  for (const auto& w : catalog) {
    auto rep = heat_residual_gate(*w, 0.4, 1.4, -1.5, 1.5);
    CHECK_MESSAGE(rep.pass, w->id(), " residual=", rep.max_scaled_residual);
  }
}

TEST_CASE("y-derivatives agree with finite differences") {
  for (const auto& w : default_heat_catalog()) {
    const double t = 0.8, y = 0.6;
    if (!w->guard(t, y)) continue;
    for (int k = 1; k <= 2; ++k) {
      const double h = 1e-4;
      double fd;
      if (k == 1)
        fd = (w->eval(t, y - 2 * h) - 8 * w->eval(t, y - h) + 8 * w->eval(t, y + h) -
              w->eval(t, y + 2 * h)) /
             (12 * h);
      else
        fd = (-w->eval(t, y - 2 * h) + 16 * w->eval(t, y - h) - 30 * w->eval(t, y) +
              16 * w->eval(t, y + h) - w->eval(t, y + 2 * h)) /
             (12 * h * h);
      const double an = w->y_derivative(k, t, y);
      CHECK_MESSAGE(std::abs(fd - an) < 1e-6 * std::max(1.0, std::abs(an)), w->id(), " k=", k,
                    " fd=", fd, " an=", an);
    }
  }
}

TEST_CASE("generation operators") {
  // Dy on y^2 + 2t gives 2y
  auto dy = heat_generate(HeatGenOp::kDy, heat_polynomial(2));
  CHECK(dy->eval(0.7, 1.3) == doctest::Approx(2.6));
  CHECK(heat_residual_gate(*dy, 0.4, 1.4, -1.5, 1.5).pass);
  // boost on w = 1 gives y
  auto b = heat_generate(HeatGenOp::kBoost, heat_polynomial(0));
  CHECK(b->eval(0.9, -0.4) == doctest::Approx(-0.4));
  CHECK(heat_residual_gate(*b, 0.4, 1.4, -1.5, 1.5).pass);
  // budget bookkeeping
  auto w = heat_airy(1.0, 0.5);
  CHECK(w->y_budget() == 6);
  auto w1 = heat_generate(HeatGenOp::kDy, w);
  CHECK(w1->y_budget() == 5);
  CHECK_THROWS_AS(w1->y_derivative(6, 0.5, 0.1), std::out_of_range);
  auto chain = w1;
  for (int i = 0; i < 5; ++i) chain = heat_generate(HeatGenOp::kDy, chain);
  CHECK_THROWS_AS(heat_generate(HeatGenOp::kDy, chain), std::out_of_range);
}

TEST_CASE("point-symmetry transform of the heat equation") {
  // pure time shift of the source solution
  HeatSymmetryParams shift;
  shift.d2 = -0.5;  // tau = t + 0.5
  auto moved = heat_symmetry(shift, heat_source());
  CHECK(moved->eval(0.5, 0.3) ==
        doctest::Approx(heat_source()->eval(1.0, 0.3)).epsilon(1e-12));
  CHECK(heat_residual_gate(*moved, 0.4, 1.4, -1.5, 1.5).pass);
  // generic parameters plus an additive solution stay in the solution set
  HeatSymmetryParams p;
  p.d1 = 0.3;
  p.d2 = -0.2;
  p.d3 = 1.2;
  p.d4 = 0.9;
  p.d5 = 0.25;
  p.d6 = 0.15;
  auto moved2 = heat_symmetry(p, heat_polynomial(3), heat_trig(0.5, 1.0));
  auto rep = heat_residual_gate(*moved2, 0.4, 1.4, -1.5, 1.5);
  CHECK_MESSAGE(rep.pass, "residual=", rep.max_scaled_residual);
  CHECK_THROWS_AS(heat_symmetry(HeatSymmetryParams{0, 0, 0, 1, 0, 0}, heat_source()),
                  std::invalid_argument);
}

TEST_CASE("registration gate rejects a non-solution") {
  // w = y^3 is not a heat solution; the gate must fail
  auto bad = std::make_shared<HeatSolution>(
      "bad", 4, [](int k, double, double y) {
        switch (k) {
          case 0: return y * y * y;
          case 1: return 3 * y * y;
          case 2: return 6 * y;
          case 3: return 6.0;
          default: return 0.0;
        }
      });
  CHECK(!heat_residual_gate(*bad, 0.4, 1.4, -1.5, 1.5).pass);
}
