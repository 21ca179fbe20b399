#ifndef DEGBURGERS_LIE_ALGEBRA_HPP
#define DEGBURGERS_LIE_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "degburgers/exact_linalg.hpp"
#include "degburgers/vector_field.hpp"

namespace dgb {

/// Structure constants c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k.
struct StructureConstants {
  int dim = 0;
  std::vector<std::vector<RatVec>> c;

  Rational at(int i, int j, int k) const {
    return c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
  }
  /// Bracket of coordinate vectors.
  RatVec bracket(const RatVec& x, const RatVec& y) const;
  bool jacobi_holds() const;
};

/// Subspace of a fixed finite-dimensional algebra, stored as generators plus
/// a row-reduced basis.
class LieSubspace {
 public:
  LieSubspace() = default;
  explicit LieSubspace(RatMat generators)
      : generators_(generators), basis_(row_space_basis(std::move(generators))) {}

  int dim() const { return static_cast<int>(basis_.size()); }
  const RatMat& basis() const { return basis_; }
  const RatMat& generators() const { return generators_; }
  bool contains(const RatVec& v) const { return in_span(basis_, v); }
  bool contains(const LieSubspace& other) const;
  bool same_space(const LieSubspace& other) const;

 private:
  RatMat generators_;
  RatMat basis_;
};

struct NotClosedError : std::runtime_error {
  NotClosedError(const std::string& what) : std::runtime_error(what) {}
};

/// Fixed basis of the invariance algebra of u_t + u u_x - u_yy = 0:
/// (Dt, Dx, Pt, Gx, Py, Px); generating scalings of (t,y,u), scalings of
/// (x,u), t-shifts, Galilean x-boosts, y-shifts and x-shifts.
std::vector<VectorField> main_algebra_basis();
const std::vector<std::string>& main_algebra_basis_names();

/// Basis of the invariance algebra of the heat equation w_t = w_yy
/// (finite-dimensional part), realized on (t,x,y,u)-space with x unused.
std::vector<VectorField> heat_algebra_basis();

/// c with [e_i,e_j] = sum c^k_ij e_k; throws NotClosedError naming the pair
/// whose bracket leaves the span.
StructureConstants structure_constants(const std::vector<VectorField>& basis);

/// Expected nonzero table for the main algebra (from the commutation list).
StructureConstants main_structure_constants_expected();

std::vector<LieSubspace> derived_series(const LieSubspace& a, const StructureConstants& c);
std::vector<LieSubspace> lower_central_series(const LieSubspace& a, const StructureConstants& c);
bool is_subalgebra(const LieSubspace& a, const StructureConstants& c);
LieSubspace center(const LieSubspace& a, const StructureConstants& c);
LieSubspace normalizer(const LieSubspace& s, const StructureConstants& c);

struct AutCheck {
  bool ok = false;
  std::string reason;  // "singular" or the offending pair, empty when ok
};

/// Columns-as-images convention: column j holds the coordinates of M(e_j).
AutCheck is_automorphism(const RatMat& m, const StructureConstants& c);

/// Automorphism family of the main algebra; requires a33*a44*a55 != 0.
RatMat aut_family(const Rational& a31, const Rational& a33, const Rational& a42,
                  const Rational& a44, const Rational& a51, const Rational& a55,
                  const Rational& a62);

/// Inner family with exponentials e^{delta1}, e^{delta2} replaced by positive
/// rationals r1, r2. Throws std::invalid_argument for non-positive scales.
RatMat inner_family(const Rational& r1, const Rational& r2, const Rational& d3,
                    const Rational& d4, const Rational& d5, const Rational& d6);

/// Recovers (r1, r2, d3..d6) if m is exactly an inner-family matrix.
std::optional<std::array<Rational, 6>> inner_params_from_matrix(const RatMat& m);

bool is_invariant_subspace(const LieSubspace& s, const RatMat& m);

struct NamedSubspace {
  std::string name;
  LieSubspace space;
};

/// Megaideals m1..m6 and the listed sums; m7(alpha) generated separately.
std::vector<NamedSubspace> megaideal_list();
LieSubspace megaideal_m7(const Rational& alpha);

struct MegaidealReport {
  std::uint64_t seed = 0;
  int samples = 0;
  struct Entry {
    std::string name;
    bool invariant = false;
    int failures = 0;
  };
  std::vector<Entry> entries;
  int random_controls = 0;
  int random_controls_falsified = 0;
  bool pass = false;
};

MegaidealReport verify_megaideal_table(int samples, std::uint64_t seed);

RatMat random_aut_instance(class Rng& rng);

}  // namespace dgb

#endif
