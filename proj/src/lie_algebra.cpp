#include "degburgers/lie_algebra.hpp"

#include <algorithm>
#include <set>

#include "degburgers/rng.hpp"

namespace dgb {

RatVec StructureConstants::bracket(const RatVec& x, const RatVec& y) const {
  RatVec r(static_cast<size_t>(dim), Rational(0));
  for (int i = 0; i < dim; ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[static_cast<size_t>(j)] == 0) continue;
      Rational f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      for (int k = 0; k < dim; ++k) {
        const Rational& cc = at(i, j, k);
        if (cc != 0) r[static_cast<size_t>(k)] += f * cc;
      }
    }
  }
  return r;
}

bool StructureConstants::jacobi_holds() const {
  auto unit = [&](int i) {
    RatVec v(static_cast<size_t>(dim), Rational(0));
    v[static_cast<size_t>(i)] = 1;
    return v;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        RatVec a = bracket(unit(i), bracket(unit(j), unit(k)));
        RatVec b = bracket(unit(j), bracket(unit(k), unit(i)));
        RatVec c2 = bracket(unit(k), bracket(unit(i), unit(j)));
        for (int l = 0; l < dim; ++l) {
          auto ll = static_cast<size_t>(l);
          if (a[ll] + b[ll] + c2[ll] != 0) return false;
        }
      }
  return true;
}

bool LieSubspace::contains(const LieSubspace& other) const {
  for (const auto& row : other.basis_)
    if (!in_span(basis_, row)) return false;
  return true;
}

bool LieSubspace::same_space(const LieSubspace& other) const {
  return dim() == other.dim() && contains(other);
}

std::vector<VectorField> main_algebra_basis() {
  const Poly4 one = Poly4::constant(1);
  const Poly4 t = Poly4::variable(0), x = Poly4::variable(1), y = Poly4::variable(2),
              u = Poly4::variable(3);
  const Poly4 zero;
  VectorField Dt{t * Rational(2), zero, y, u * Rational(-2)};
  VectorField Dx{zero, x, zero, u};
  VectorField Pt{one, zero, zero, zero};
  VectorField Gx{zero, t, zero, one};
  VectorField Py{zero, zero, one, zero};
  VectorField Px{zero, one, zero, zero};
  return {Dt, Dx, Pt, Gx, Py, Px};
}

const std::vector<std::string>& main_algebra_basis_names() {
  static const std::vector<std::string> names{"Dt", "Dx", "Pt", "Gx", "Py", "Px"};
  return names;
}

std::vector<VectorField> heat_algebra_basis() {
  const Poly4 one = Poly4::constant(1);
  const Poly4 t = Poly4::variable(0), y = Poly4::variable(2), u = Poly4::variable(3);
  const Poly4 zero;
  VectorField Pt{one, zero, zero, zero};
  VectorField Py{zero, zero, one, zero};
  VectorField Gy{zero, zero, t * Rational(2), -(y * u)};
  VectorField D{t * Rational(2), zero, y, zero};
  VectorField K{t * t * Rational(4), zero, t * y * Rational(4), -((y * y + t * Rational(2)) * u)};
  VectorField I{zero, zero, zero, u};
  return {Pt, Py, Gy, D, K, I};
}

namespace {

// Coordinates of a vector field in the monomial-component space spanned by a
// field list; used to solve span membership exactly.
using MonoKey = std::pair<int, Poly4::Exponents>;  // (component, exponents)

std::vector<MonoKey> mono_union(const std::vector<VectorField>& fields,
                                const VectorField& extra) {
  std::set<MonoKey> keys;
  auto add = [&](const VectorField& f) {
    for (int c = 0; c < 4; ++c)
      for (const auto& [e, coef] : f.comp[static_cast<size_t>(c)].terms()) {
        (void)coef;
        keys.insert({c, e});
      }
  };
  for (const auto& f : fields) add(f);
  add(extra);
  return {keys.begin(), keys.end()};
}

RatVec field_coords(const VectorField& f, const std::vector<MonoKey>& keys) {
  RatVec v;
  v.reserve(keys.size());
  for (const auto& [c, e] : keys) {
    const auto& terms = f.comp[static_cast<size_t>(c)].terms();
    auto it = terms.find(e);
    v.push_back(it == terms.end() ? Rational(0) : it->second);
  }
  return v;
}

}  // namespace

StructureConstants structure_constants(const std::vector<VectorField>& basis) {
  const int n = static_cast<int>(basis.size());
  StructureConstants sc;
  sc.dim = n;
  sc.c.assign(static_cast<size_t>(n),
              std::vector<RatVec>(static_cast<size_t>(n), RatVec(static_cast<size_t>(n), Rational(0))));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      VectorField br = bracket(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
      auto keys = mono_union(basis, br);
      RatMat a(keys.size(), RatVec(static_cast<size_t>(n), Rational(0)));
      for (int k = 0; k < n; ++k) {
        RatVec col = field_coords(basis[static_cast<size_t>(k)], keys);
        for (size_t r = 0; r < keys.size(); ++r) a[r][static_cast<size_t>(k)] = col[r];
      }
      auto sol = solve(a, field_coords(br, keys));
      if (!sol) {
        const auto& nm = main_algebra_basis_names();
        std::string pair = (n == 6) ? nm[static_cast<size_t>(i)] + "," + nm[static_cast<size_t>(j)]
                                    : std::to_string(i) + "," + std::to_string(j);
        throw NotClosedError("bracket of pair (" + pair + ") is outside the span: not closed");
      }
      for (int k = 0; k < n; ++k) {
        sc.c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = (*sol)[static_cast<size_t>(k)];
        sc.c[static_cast<size_t>(j)][static_cast<size_t>(i)][static_cast<size_t>(k)] = -(*sol)[static_cast<size_t>(k)];
      }
    }
  return sc;
}

StructureConstants main_structure_constants_expected() {
  StructureConstants sc;
  sc.dim = 6;
  sc.c.assign(6, std::vector<RatVec>(6, RatVec(6, Rational(0))));
  // basis order (Dt, Dx, Pt, Gx, Py, Px) = (0..5)
  auto set = [&](int i, int j, int k, int v) {
    sc.c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = v;
    sc.c[static_cast<size_t>(j)][static_cast<size_t>(i)][static_cast<size_t>(k)] = -v;
  };
  set(2, 0, 2, 2);   // [Pt,Dt] = 2Pt
  set(3, 0, 3, -2);  // [Gx,Dt] = -2Gx
  set(4, 0, 4, 1);   // [Py,Dt] = Py
  set(3, 1, 3, 1);   // [Gx,Dx] = Gx
  set(5, 1, 5, 1);   // [Px,Dx] = Px
  set(2, 3, 5, 1);   // [Pt,Gx] = Px
  return sc;
}

bool is_subalgebra(const LieSubspace& a, const StructureConstants& c) {
  const auto& b = a.basis();
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = i + 1; j < b.size(); ++j)
      if (!a.contains(c.bracket(b[i], b[j]))) return false;
  return true;
}

std::vector<LieSubspace> derived_series(const LieSubspace& a, const StructureConstants& c) {
  if (!is_subalgebra(a, c)) throw NotClosedError("derived_series: input is not a subalgebra");
  std::vector<LieSubspace> series{a};
  for (;;) {
    const auto& prev = series.back();
    RatMat gens;
    const auto& b = prev.basis();
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) gens.push_back(c.bracket(b[i], b[j]));
    LieSubspace next(gens);
    if (next.dim() == prev.dim()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

std::vector<LieSubspace> lower_central_series(const LieSubspace& a, const StructureConstants& c) {
  if (!is_subalgebra(a, c)) throw NotClosedError("lower_central_series: input is not a subalgebra");
  std::vector<LieSubspace> series{a};
  for (;;) {
    const auto& prev = series.back();
    RatMat gens;
    for (const auto& x : a.basis())
      for (const auto& y : prev.basis()) gens.push_back(c.bracket(x, y));
    LieSubspace next(gens);
    if (next.dim() == prev.dim()) break;
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

LieSubspace center(const LieSubspace& a, const StructureConstants& c) {
  if (!is_subalgebra(a, c)) throw NotClosedError("center: input is not a subalgebra");
  // X = sum x_i b_i with [X, b_j] = 0 for all j.  Unknowns x_i.
  const auto& b = a.basis();
  const size_t m = b.size();
  if (m == 0) return a;
  RatMat sys;  // rows: one equation per (j, ambient coordinate k)
  const size_t n = b[0].size();
  for (size_t j = 0; j < m; ++j) {
    std::vector<RatVec> cols;  // [b_i, b_j] per i
    cols.reserve(m);
    for (size_t i = 0; i < m; ++i) cols.push_back(c.bracket(b[i], b[j]));
    for (size_t k = 0; k < n; ++k) {
      RatVec row(m, Rational(0));
      bool nonzero = false;
      for (size_t i = 0; i < m; ++i) {
        row[i] = cols[i][k];
        nonzero = nonzero || row[i] != 0;
      }
      if (nonzero) sys.push_back(std::move(row));
    }
  }
  RatMat coeffs = sys.empty() ? identity(static_cast<int>(m)) : null_space(sys);
  RatMat gens;
  for (const auto& coef : coeffs) {
    RatVec v(n, Rational(0));
    for (size_t i = 0; i < m; ++i)
      for (size_t k = 0; k < n; ++k) v[k] += coef[i] * b[i][k];
    gens.push_back(std::move(v));
  }
  return LieSubspace(gens);
}

LieSubspace normalizer(const LieSubspace& s, const StructureConstants& c) {
  // Q = sum q_i e_i with [Q, s_j] in s for all j.  Complement condition:
  // write [e_i, s_j] and require the component of the result transversal to s
  // to vanish.  Implemented by extending s's basis to a full basis and
  // requiring the coordinates along the complement to be zero.
  const int n = c.dim;
  const auto& sb = s.basis();
  // complement coordinates: full RREF of [s-basis; identity] tells which unit
  // vectors extend the basis; simpler exact route: for membership-with-
  // parameters, solve per (j): [Q, s_j] must be in span(sb).  Condition is
  // linear in q; build matrix rows by eliminating span components.
  // Build projector onto quotient by s: rows of identity reduced mod sb.
  RatMat red = sb;
  int rk = rref(red);
  (void)rk;
  auto reduce_mod_s = [&](RatVec v) {
    // eliminate pivots of red from v
    for (const auto& row : red) {
      size_t lead = v.size();
      for (size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) {
          lead = j;
          break;
        }
      if (lead == v.size()) continue;
      if (v[lead] != 0) {
        Rational f = v[lead] / row[lead];
        for (size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
      }
    }
    return v;
  };
  RatMat sys;
  for (const auto& sj : sb) {
    // columns: reduce_mod_s([e_i, s_j]) for each i; equations per coordinate.
    std::vector<RatVec> cols;
    for (int i = 0; i < n; ++i) {
      RatVec ei(static_cast<size_t>(n), Rational(0));
      ei[static_cast<size_t>(i)] = 1;
      cols.push_back(reduce_mod_s(c.bracket(ei, sj)));
    }
    for (int k = 0; k < n; ++k) {
      RatVec row(static_cast<size_t>(n), Rational(0));
      bool nonzero = false;
      for (int i = 0; i < n; ++i) {
        row[static_cast<size_t>(i)] = cols[static_cast<size_t>(i)][static_cast<size_t>(k)];
        nonzero = nonzero || row[static_cast<size_t>(i)] != 0;
      }
      if (nonzero) sys.push_back(std::move(row));
    }
  }
  RatMat gens = sys.empty() ? identity(n) : null_space(sys);
  return LieSubspace(gens);
}

AutCheck is_automorphism(const RatMat& m, const StructureConstants& c) {
  if (det(m) == 0) return {false, "singular"};
  const int n = c.dim;
  auto col = [&](int j) {
    RatVec v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RatVec lhs = c.bracket(col(i), col(j));
      RatVec ei(static_cast<size_t>(n), Rational(0)), ej(static_cast<size_t>(n), Rational(0));
      ei[static_cast<size_t>(i)] = 1;
      ej[static_cast<size_t>(j)] = 1;
      RatVec rhs = mat_vec(m, c.bracket(ei, ej));
      if (lhs != rhs) {
        const auto& nm = main_algebra_basis_names();
        std::string pair = (n == 6) ? nm[static_cast<size_t>(i)] + "," + nm[static_cast<size_t>(j)]
                                    : std::to_string(i) + "," + std::to_string(j);
        return {false, "structure constants not preserved for pair (" + pair + ")"};
      }
    }
  return {true, ""};
}

RatMat aut_family(const Rational& a31, const Rational& a33, const Rational& a42,
                  const Rational& a44, const Rational& a51, const Rational& a55,
                  const Rational& a62) {
  if (a33 == 0 || a44 == 0 || a55 == 0)
    throw std::invalid_argument("aut_family: a33*a44*a55 must be nonzero");
  RatMat m = identity(6);
  m[2][0] = a31;
  m[2][2] = a33;
  m[3][0] = Rational(-2) * a42;
  m[3][1] = a42;
  m[3][3] = a44;
  m[4][0] = a51;
  m[4][4] = a55;
  m[5][0] = -a31 * a42;
  m[5][1] = a62;
  m[5][2] = -a33 * a42;
  m[5][3] = a31 * a44 / 2;
  m[5][5] = a33 * a44;
  return m;
}

RatMat inner_family(const Rational& r1, const Rational& r2, const Rational& d3,
                    const Rational& d4, const Rational& d5, const Rational& d6) {
  if (r1 <= 0 || r2 <= 0)
    throw std::invalid_argument("inner_family: scale parameters must be positive");
  const Rational e2d1 = r1 * r1;          // e^{2 delta1}
  const Rational ed2m2d1 = r2 / (r1 * r1);  // e^{delta2 - 2 delta1}
  RatMat m = identity(6);
  m[2][0] = Rational(2) * e2d1 * d3;
  m[2][2] = e2d1;
  m[3][0] = Rational(2) * ed2m2d1 * d4;
  m[3][1] = -ed2m2d1 * d4;
  m[3][3] = ed2m2d1;
  m[4][0] = r1 * d5;
  m[4][4] = r1;
  m[5][0] = Rational(2) * r2 * d3 * d4;
  m[5][1] = r2 * (d6 - d3 * d4);
  m[5][2] = r2 * d4;
  m[5][3] = r2 * d3;
  m[5][5] = r2;
  return m;
}

std::optional<std::array<Rational, 6>> inner_params_from_matrix(const RatMat& m) {
  const Rational e2d1 = m[2][2], ed2 = m[5][5], ed1 = m[4][4];
  if (e2d1 <= 0 || ed2 <= 0 || ed1 <= 0) return std::nullopt;
  if (ed1 * ed1 != e2d1) return std::nullopt;
  Rational d3 = m[2][0] / (Rational(2) * e2d1);
  Rational d4 = m[5][2] / ed2;
  Rational d5 = m[4][0] / ed1;
  Rational d6 = m[5][1] / ed2 + d3 * d4;
  std::array<Rational, 6> p{ed1, ed2, d3, d4, d5, d6};
  if (inner_family(p[0], p[1], p[2], p[3], p[4], p[5]) != m) return std::nullopt;
  return p;
}

bool is_invariant_subspace(const LieSubspace& s, const RatMat& m) {
  for (const auto& g : s.basis())
    if (!s.contains(mat_vec(m, g))) return false;
  return true;
}

namespace {
RatVec coords(std::initializer_list<int> v) {
  RatVec r;
  for (int x : v) r.push_back(Rational(x));
  return r;
}
}  // namespace

std::vector<NamedSubspace> megaideal_list() {
  // basis order (Dt, Dx, Pt, Gx, Py, Px)
  const RatVec Dt = coords({1, 0, 0, 0, 0, 0}), Dx = coords({0, 1, 0, 0, 0, 0}),
               Pt = coords({0, 0, 1, 0, 0, 0}), Gx = coords({0, 0, 0, 1, 0, 0}),
               Py = coords({0, 0, 0, 0, 1, 0}), Px = coords({0, 0, 0, 0, 0, 1});
  RatVec Dt2Dx(6);
  for (int i = 0; i < 6; ++i)
    Dt2Dx[static_cast<size_t>(i)] = Dt[static_cast<size_t>(i)] + Rational(2) * Dx[static_cast<size_t>(i)];
  std::vector<NamedSubspace> out;
  auto add = [&](const std::string& name, RatMat gens) {
    out.push_back({name, LieSubspace(std::move(gens))});
  };
  add("m1", {Px});
  add("m2", {Py});
  add("m3", {Gx, Px});
  add("m4", {Pt, Px});
  add("m5", {Dx, Gx, Px});
  add("m6", {Dt2Dx, Pt, Py, Px});
  add("m1+m2", {Py, Px});
  add("m2+m3", {Gx, Py, Px});
  add("m2+m4", {Pt, Py, Px});
  add("m3+m4", {Pt, Gx, Px});
  add("m2+m3+m4", {Pt, Gx, Py, Px});
  add("m2+m5", {Dx, Gx, Py, Px});
  add("m4+m5", {Dx, Pt, Gx, Px});
  add("m2+m4+m5", {Dx, Pt, Gx, Py, Px});
  add("m3+m6", {Dt2Dx, Pt, Gx, Py, Px});
  return out;
}

LieSubspace megaideal_m7(const Rational& alpha) {
  RatMat gens;
  RatVec lead(6, Rational(0));
  lead[0] = 1;
  lead[1] = alpha;
  gens.push_back(lead);
  gens.push_back(coords({0, 0, 1, 0, 0, 0}));
  gens.push_back(coords({0, 0, 0, 1, 0, 0}));
  gens.push_back(coords({0, 0, 0, 0, 1, 0}));
  gens.push_back(coords({0, 0, 0, 0, 0, 1}));
  return LieSubspace(gens);
}

RatMat random_aut_instance(Rng& rng) {
  return aut_family(rng.rational(), rng.rational(50, 50, true), rng.rational(),
                    rng.rational(50, 50, true), rng.rational(), rng.rational(50, 50, true),
                    rng.rational());
}

MegaidealReport verify_megaideal_table(int samples, std::uint64_t seed) {
  MegaidealReport rep;
  rep.seed = seed;
  rep.samples = samples;
  Rng rng(seed);
  std::vector<RatMat> mats;
  mats.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) mats.push_back(random_aut_instance(rng));

  std::vector<NamedSubspace> targets = megaideal_list();
  // m7 at sampled alphas including 2
  const Rational alphas[10] = {Rational(2),      Rational(0),     Rational(1),
                               Rational(-1),     Rational(3),     Rational(1, 2),
                               Rational(-5, 3),  Rational(7, 4),  Rational(22, 7),
                               Rational(-13, 9)};
  for (const auto& a : alphas)
    targets.push_back({"m7(" + rational_to_string(a) + ")", megaideal_m7(a)});

  bool all = true;
  for (const auto& t : targets) {
    MegaidealReport::Entry e;
    e.name = t.name;
    e.invariant = true;
    for (const auto& m : mats)
      if (!is_invariant_subspace(t.space, m)) {
        e.invariant = false;
        ++e.failures;
      }
    all = all && e.invariant;
    rep.entries.push_back(e);
  }

  // random non-listed subspaces must be falsified by at least one instance
  auto coincides_with_listed = [&](const LieSubspace& s) {
    for (const auto& t : targets)
      if (t.space.same_space(s)) return true;
    if (s.dim() == 6 || s.dim() == 0) return true;
    return false;
  };
  int controls = 0, falsified = 0;
  while (controls < 5) {
    int d = static_cast<int>(rng.uniform_int(1, 5));
    RatMat gens;
    for (int i = 0; i < d; ++i) {
      RatVec v;
      for (int j = 0; j < 6; ++j) v.push_back(rng.rational(9, 5));
      gens.push_back(std::move(v));
    }
    LieSubspace s(gens);
    if (s.dim() != d || coincides_with_listed(s)) continue;
    ++controls;
    for (const auto& m : mats)
      if (!is_invariant_subspace(s, m)) {
        ++falsified;
        break;
      }
  }
  rep.random_controls = controls;
  rep.random_controls_falsified = falsified;
  rep.pass = all && falsified == controls;
  return rep;
}

}  // namespace dgb
