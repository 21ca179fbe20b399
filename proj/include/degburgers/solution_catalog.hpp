#ifndef DEGBURGERS_SOLUTION_CATALOG_HPP
#define DEGBURGERS_SOLUTION_CATALOG_HPP

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "degburgers/heat_catalog.hpp"
#include "degburgers/rng.hpp"

namespace dgb {

enum class GateClass { kAnalytic, kFd, kOde };
GateClass gate_class_from_name(const std::string& s);
std::string gate_class_name(GateClass g);

/// Gate tolerances per class (normalized residual).
double gate_tolerance(GateClass g);

struct ProbeBox3 {
  double t0 = 0, t1 = 1, x0 = -1, x1 = 1, y0 = -1, y1 = 1;
};

/// One closed-form solution u(t,x,y) of u_t + u u_x - u_yy = 0.
struct SolutionFamily {
  std::string id;
  std::string description;
  std::string branch;
  std::map<std::string, double> params;
  GateClass gate = GateClass::kFd;
  ProbeBox3 box;
  std::function<double(double, double, double)> eval;
  std::function<bool(double, double, double)> guard;  // null = everywhere
  // optional analytic partials (all four or none)
  std::function<double(double, double, double)> du_t, du_x, du_y, du_yy;
  HeatSolutionPtr theta;  // functional parameter, when the family uses one

  bool has_analytic_partials() const { return static_cast<bool>(du_t); }
  bool ok(double t, double x, double y) const { return !guard || guard(t, x, y); }
};

/// Scaled PDE residual at a point; analytic partials when present, otherwise
/// finite differences (first derivatives h~1e-4, second h~1e-3 scaled).
double pde_residual(const SolutionFamily& f, double t, double x, double y);

struct GateReport {
  std::string id;
  std::string gate;
  double tolerance = 0;
  double max_scaled_residual = 0;
  int probes = 0;
  int skipped = 0;
  bool pass = false;
};

GateReport run_gate(const SolutionFamily& f, int probes = 25, std::uint64_t seed = 20250809);

/// Point transformation of the symmetry group:
/// (t,x,y,u) -> (d1^2 t + d3, d2 x + d4 t + d6, d1 y + d5, (d2 u + d4)/d1^2).
struct GroupElement {
  double d1 = 1, d2 = 1, d3 = 0, d4 = 0, d5 = 0, d6 = 0;

  GroupElement() = default;
  GroupElement(double a1, double a2, double a3, double a4, double a5, double a6);

  std::array<double, 3> apply(double t, double x, double y) const;
  double apply_u(double u) const { return (d2 * u + d4) / (d1 * d1); }
  GroupElement inverse() const;
  /// Composition: (a * b) acts as a after b.
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

  static GroupElement mirror_x();  // (t,x,y,u) -> (t,-x,y,-u)
  static GroupElement mirror_y();  // (t,x,y,u) -> (t,x,-y,u)
};

/// Pushforward of a solution family by a group element (gate class kFd).
SolutionFamily act(const GroupElement& g, const SolutionFamily& s);

struct AffinePairReport {
  double max_w1_residual = 0;   // w1_t - w1_yy + w1^2
  double max_w0_residual = 0;   // w0_t - w0_yy + w1 w0
  double max_pde_residual = 0;  // u = w1 x + w0 under the full equation
  int probes = 0;
  bool pass = false;
};

/// Checks the x-affine reduction system for a pair of (t,y)-functions.
AffinePairReport affine_pair_check(const std::function<double(double, double)>& w1,
                                   const std::function<double(double, double)>& w0,
                                   double t0, double t1, double y0, double y1,
                                   int probes = 25, double tol = 1e-5,
                                   std::uint64_t seed = 20250809);

// ----------------------------------------------------------- Appendix B ---

struct ProbeBox2 {
  double t0 = 0, t1 = 1, x0 = -1, x1 = 1;
};

/// Solution v(t,x) of v_t = (v^{-1/2} v_x)_x (+ v^{-1/2} v_x when convective),
/// represented as v = w^2 with an explicit underlying w kept for the sign
/// guard (v solves the equation where w > 0).
struct DiffusionFamily {
  std::string id;
  std::string description;
  std::map<std::string, double> params;
  bool convective = false;
  GateClass gate = GateClass::kFd;
  ProbeBox2 box;
  std::function<double(double, double)> w;  // v = w^2
  std::function<bool(double, double)> guard;

  double eval(double t, double x) const {
    const double ww = w(t, x);
    return ww * ww;
  }
  bool ok(double t, double x) const { return (!guard || guard(t, x)) && w(t, x) > 1e-6; }
};

double diffusion_residual(const DiffusionFamily& f, double t, double x);
GateReport run_gate(const DiffusionFamily& f, int probes = 25, std::uint64_t seed = 20250809);

// -------------------------------------------------------------- catalog ---

struct CatalogEntry {
  std::optional<SolutionFamily> u;   // exactly one of u / v is set
  std::optional<DiffusionFamily> v;
  const std::string& id() const { return u ? u->id : v->id; }
};

class Catalog {
 public:
  /// Loads the manifest and builds every declared family (heat catalog
  /// instances are created on demand for theta parameters).
  explicit Catalog(const std::string& manifest_path);

  std::vector<std::string> ids() const;
  const CatalogEntry& entry(const std::string& id) const;
  const SolutionFamily& family(const std::string& id) const;
  HeatSolutionPtr heat(const std::string& id) const;

  std::vector<GateReport> verify(const std::string& id_or_all,
                                 std::uint64_t seed = 20250809) const;

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t> index_;
  std::map<std::string, HeatSolutionPtr> heat_;
};

/// Family builder used by the manifest loader; exposed for tests.
SolutionFamily build_u_family(const std::string& id,
                              const std::map<std::string, double>& params,
                              const HeatSolutionPtr& theta, GateClass gate, const ProbeBox3& box,
                              const std::string& branch, const std::string& desc);
DiffusionFamily build_v_family(const std::string& id,
                               const std::map<std::string, double>& params, GateClass gate,
                               const ProbeBox2& box, const std::string& desc);

}  // namespace dgb

#endif
