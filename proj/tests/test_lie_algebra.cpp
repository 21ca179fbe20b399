#include "doctest.h"

#include "degburgers/fixtures.hpp"
#include "degburgers/lie_algebra.hpp"
#include "degburgers/rng.hpp"

using namespace dgb;

namespace {
RatVec rv(std::initializer_list<int> v) {
  RatVec r;
  for (int x : v) r.push_back(Rational(x));
  return r;
}
const std::vector<VectorField>& basis() {
  static const auto b = main_algebra_basis();
  return b;
}
const StructureConstants& sc() {
  static const auto c = structure_constants(basis());
  return c;
}
}  // namespace

TEST_CASE("bracket: commutation relations of the main basis") {
  const auto& b = basis();
  const auto &Dt = b[0], &Dx = b[1], &Pt = b[2], &Gx = b[3], &Py = b[4], &Px = b[5];
  CHECK(bracket(Pt, Dt) == Pt * Rational(2));
  CHECK(bracket(Px, Py).is_zero());
  CHECK(bracket(Pt, Gx) == Px);
  CHECK(bracket(Gx, Dt) == Gx * Rational(-2));
  CHECK(bracket(Py, Dt) == Py);
  CHECK(bracket(Gx, Dx) == Gx);
  CHECK(bracket(Px, Dx) == Px);
  // antisymmetry, exact, all pairs
  for (const auto& X : b)
    for (const auto& Y : b) CHECK((bracket(X, Y) + bracket(Y, X)).is_zero());
}

TEST_CASE("bracket: Jacobi identity exact for main and heat bases") {
  for (const auto& b : {main_algebra_basis(), heat_algebra_basis()}) {
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j)
        for (size_t k = j + 1; k < b.size(); ++k) {
          VectorField s = bracket(b[i], bracket(b[j], b[k])) +
                          bracket(b[j], bracket(b[k], b[i])) +
                          bracket(b[k], bracket(b[i], b[j]));
          CHECK(s.is_zero());
        }
  }
}

TEST_CASE("structure constants match the expected table entry-for-entry") {
  const auto expected = main_structure_constants_expected();
  REQUIRE(sc().dim == 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k) CHECK(sc().at(i, j, k) == expected.at(i, j, k));
  CHECK(sc().jacobi_holds());
}

TEST_CASE("structure constants: abelian pair and heat fixture") {
  auto b = basis();
  auto cab = structure_constants({b[5], b[4]});  // (Px, Py)
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) CHECK(cab.at(i, j, k) == 0);
  auto ch = structure_constants(heat_algebra_basis());  // closure asserted by no-throw
  CHECK(ch.jacobi_holds());
}

TEST_CASE("structure constants: non-closed span reports the offending pair") {
  auto b = basis();
  CHECK_THROWS_AS(structure_constants({b[2], b[3]}), NotClosedError);  // [Pt,Gx]=Px outside
}

TEST_CASE("Poly4 degree cap") {
  Poly4 t2 = Poly4::variable(0) * Poly4::variable(0);
  Poly4 t4 = t2 * t2;
  CHECK_THROWS_AS(t4 * Poly4::variable(0), DegreeCapError);
}

TEST_CASE("derived series dimensions") {
  LieSubspace g(identity(6));
  auto ds = derived_series(g, sc());
  std::vector<int> dims;
  for (const auto& s : ds) dims.push_back(s.dim());
  CHECK(dims == std::vector<int>{6, 4, 1, 0});
  // g' = <Pt,Gx,Py,Px>
  LieSubspace gp(RatMat{rv({0, 0, 1, 0, 0, 0}), rv({0, 0, 0, 1, 0, 0}), rv({0, 0, 0, 0, 1, 0}),
                        rv({0, 0, 0, 0, 0, 1})});
  CHECK(ds[1].same_space(gp));
  auto dsp = derived_series(gp, sc());
  dims.clear();
  for (const auto& s : dsp) dims.push_back(s.dim());
  CHECK(dims == std::vector<int>{4, 1, 0});
  LieSubspace px(RatMat{rv({0, 0, 0, 0, 0, 1})});
  auto dspx = derived_series(px, sc());
  CHECK(dspx.size() == 2);
  CHECK(dspx[0].dim() == 1);
  CHECK(dspx[1].dim() == 0);
  // nilradical claim: lower central series of g' reaches zero
  auto lcs = lower_central_series(gp, sc());
  CHECK(lcs.back().dim() == 0);
}

TEST_CASE("center computations") {
  LieSubspace gp(RatMat{rv({0, 0, 1, 0, 0, 0}), rv({0, 0, 0, 1, 0, 0}), rv({0, 0, 0, 0, 1, 0}),
                        rv({0, 0, 0, 0, 0, 1})});
  LieSubspace pypx(RatMat{rv({0, 0, 0, 0, 1, 0}), rv({0, 0, 0, 0, 0, 1})});
  CHECK(center(gp, sc()).same_space(pypx));
  CHECK(center(pypx, sc()).same_space(pypx));
  LieSubspace g(identity(6));
  CHECK(center(g, sc()).dim() == 0);
}

TEST_CASE("normalizers of the classified one-dimensional subalgebras") {
  auto fx = load_algebra_fixtures(default_data_dir() + "/algebra_fixtures.txt");
  REQUIRE(fx.version == 1);
  for (const auto& [id, sub] : fx.subalgebras) {
    if (id.rfind("g1.", 0) != 0) continue;
    auto n = normalizer(sub, sc());
    REQUIRE_MESSAGE(fx.normalizer_dim.count(id) == 1, id);
    CHECK_MESSAGE(n.dim() == fx.normalizer_dim.at(id), id);
    if (fx.normalizer_space.count(id)) CHECK_MESSAGE(n.same_space(fx.normalizer_space.at(id)), id);
    CHECK(n.contains(sub));  // a subalgebra normalizes itself
  }
  // the algebra normalizes itself
  LieSubspace g(identity(6));
  CHECK(normalizer(g, sc()).same_space(g));
}

TEST_CASE("fixtures file agrees with compiled basis fields") {
  auto fx = load_algebra_fixtures(default_data_dir() + "/algebra_fixtures.txt");
  const auto& names = main_algebra_basis_names();
  const auto& b = basis();
  for (size_t i = 0; i < names.size(); ++i) {
    REQUIRE(fx.fields.count(names[i]) == 1);
    CHECK(fx.fields.at(names[i]) == b[i]);
  }
  auto hb = heat_algebra_basis();
  const char* hnames[6] = {"heat.Pt", "heat.Py", "heat.Gy", "heat.D", "heat.K", "heat.I"};
  for (size_t i = 0; i < 6; ++i) {
    REQUIRE(fx.fields.count(hnames[i]) == 1);
    CHECK(fx.fields.at(hnames[i]) == hb[i]);
  }
  // subalgebra instances are genuinely closed
  for (const auto& [id, sub] : fx.subalgebras) CHECK_MESSAGE(is_subalgebra(sub, sc()), id);
}

TEST_CASE("is_automorphism") {
  CHECK(is_automorphism(identity(6), sc()).ok);
  auto m = aut_family(1, 1, 1, 1, 1, 1, 1);
  CHECK(is_automorphism(m, sc()).ok);
  // swapping the Dt and Pt columns of the identity breaks [Pt,Dt]=2Pt
  RatMat swapped = identity(6);
  std::swap(swapped[0][0], swapped[2][0]);
  std::swap(swapped[0][2], swapped[2][2]);
  auto chk = is_automorphism(swapped, sc());
  CHECK(!chk.ok);
  CHECK(chk.reason.find("Pt") != std::string::npos);
  RatMat singular(6, RatVec(6, Rational(0)));
  CHECK(is_automorphism(singular, sc()).reason == std::string("singular"));
}

TEST_CASE("aut family instances are automorphisms at random rational parameters") {
  Rng rng(12345);
  for (int k = 0; k < 25; ++k) {
    auto m = random_aut_instance(rng);
    CHECK(is_automorphism(m, sc()).ok);
  }
}

TEST_CASE("inner family") {
  CHECK(inner_family(1, 1, 0, 0, 0, 0) == identity(6));
  auto m = inner_family(2, 1, 0, 0, 0, 0);
  CHECK(m[2][2] == Rational(4));  // e^{2 delta1} at the Pt column
  CHECK(is_automorphism(m, sc()).ok);
  CHECK_THROWS_AS(inner_family(0, 1, 0, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(inner_family(1, Rational(-2), 0, 0, 0, 0), std::invalid_argument);

  Rng rng(777);
  for (int k = 0; k < 20; ++k) {
    Rational r1(rng.uniform_int(1, 9), rng.uniform_int(1, 9));
    Rational r2(rng.uniform_int(1, 9), rng.uniform_int(1, 9));
    auto mi = inner_family(r1, r2, rng.rational(5, 5), rng.rational(5, 5), rng.rational(5, 5),
                           rng.rational(5, 5));
    CHECK(is_automorphism(mi, sc()).ok);
  }
}

TEST_CASE("composition of inner automorphisms stays in the inner family") {
  Rng rng(4242);
  for (int k = 0; k < 15; ++k) {
    Rational r1(rng.uniform_int(1, 9), rng.uniform_int(1, 9));
    Rational r2(rng.uniform_int(1, 9), rng.uniform_int(1, 9));
    auto a = inner_family(r1, r2, rng.rational(5, 5), rng.rational(5, 5), rng.rational(5, 5),
                          rng.rational(5, 5));
    Rational s1(rng.uniform_int(1, 9), rng.uniform_int(1, 9));
    Rational s2(rng.uniform_int(1, 9), rng.uniform_int(1, 9));
    auto b = inner_family(s1, s2, rng.rational(5, 5), rng.rational(5, 5), rng.rational(5, 5),
                          rng.rational(5, 5));
    auto prod = mat_mul(a, b);
    auto params = inner_params_from_matrix(prod);
    REQUIRE(params.has_value());
  }
}

TEST_CASE("invariant subspaces under automorphisms") {
  Rng rng(5150);
  LieSubspace m1(RatMat{rv({0, 0, 0, 0, 0, 1})});
  LieSubspace g(identity(6));
  LieSubspace dt(RatMat{rv({1, 0, 0, 0, 0, 0})});
  for (int k = 0; k < 10; ++k) {
    auto m = random_aut_instance(rng);
    CHECK(is_invariant_subspace(m1, m));
    CHECK(is_invariant_subspace(g, m));
  }
  auto m = aut_family(1, 1, 0, 1, 0, 1, 0);  // a31 = 1 pushes Dt off its line
  CHECK(!is_invariant_subspace(dt, m));
}

TEST_CASE("megaideal table verification (small sample run)") {
  auto rep = verify_megaideal_table(20, 20250809);
  CHECK(rep.pass);
  CHECK(rep.random_controls == 5);
  CHECK(rep.random_controls_falsified == 5);
  // spot identities: m2+m3+m4 equals g', m3+m6 equals m7(2)
  auto list = megaideal_list();
  auto find = [&](const std::string& n) -> const LieSubspace& {
    for (const auto& e : list)
      if (e.name == n) return e.space;
    throw std::runtime_error("missing " + n);
  };
  LieSubspace g(identity(6));
  auto ds = derived_series(g, sc());
  CHECK(find("m2+m3+m4").same_space(ds[1]));
  CHECK(find("m3+m6").same_space(megaideal_m7(Rational(2))));
  // m1 = g'', m1+m2 = center of g'
  CHECK(find("m1").same_space(ds[2]));
  CHECK(find("m1+m2").same_space(center(ds[1], sc())));
}
