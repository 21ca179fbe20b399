#ifndef DEGBURGERS_JETS_HPP
#define DEGBURGERS_JETS_HPP

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgb::jets {

struct OrderCapError : std::runtime_error {
  explicit OrderCapError(int cap)
      : std::runtime_error("jet order cap " + std::to_string(cap) + " exceeded") {}
};

/// Derivative multi-index (a0,a1,a2); a0 counts t-, a1 x-, a2 y-derivatives.
struct MultiIndex {
  std::array<int, 3> a{0, 0, 0};
  int order() const { return a[0] + a[1] + a[2]; }
  MultiIndex bump(int mu) const {
    MultiIndex b = *this;
    b.a[static_cast<size_t>(mu)] += 1;
    return b;
  }
  auto operator<=>(const MultiIndex&) const = default;
  std::string str() const;
};

inline MultiIndex mi(int a0, int a1, int a2) { return MultiIndex{{a0, a1, a2}}; }

/// Declares how many independent variables are in play and the order cap.
class JetSpec {
 public:
  JetSpec(int n_indep, int max_order, std::vector<std::string> names = {});
  int n_indep() const { return n_indep_; }
  int max_order() const { return max_order_; }
  const std::string& var_name(int mu) const { return names_[static_cast<size_t>(mu)]; }
  std::vector<MultiIndex> indices_up_to(int order) const;

 private:
  int n_indep_;
  int max_order_;
  std::vector<std::string> names_;
};

/// Point of the finite jet space: independent variables plus derivative
/// coordinates.  An optional resolver supplies coordinates lazily (used for
/// on-manifold substitution of t-derivatives).
class JetPoint {
 public:
  explicit JetPoint(const JetSpec& spec) : spec_(&spec) {}

  const JetSpec& spec() const { return *spec_; }
  double z(int mu) const { return z_[static_cast<size_t>(mu)]; }
  void set_z(int mu, double v) { z_[static_cast<size_t>(mu)] = v; }
  void set_u(const MultiIndex& a, double v) { u_[a] = v; }
  bool has(const MultiIndex& a) const { return u_.count(a) > 0; }
  double u(const MultiIndex& a) const;
  void set_resolver(std::function<double(const JetPoint&, const MultiIndex&)> r) {
    resolver_ = std::move(r);
  }

  /// Perturbed copy (for finite differences in jet coordinates).
  JetPoint with_u(const MultiIndex& a, double v) const {
    JetPoint p = *this;
    p.u_[a] = v;
    return p;
  }
  JetPoint with_z(int mu, double v) const {
    JetPoint p = *this;
    p.z_[static_cast<size_t>(mu)] = v;
    return p;
  }

 private:
  const JetSpec* spec_;
  std::array<double, 3> z_{0, 0, 0};
  mutable std::map<MultiIndex, double> u_;
  std::function<double(const JetPoint&, const MultiIndex&)> resolver_;
};

class JetFunction;

/// Value-semantics handle for a differential function of finitely many jet
/// coordinates.  Supports exact partials for tree-built expressions and
/// finite-difference partials for opaque evaluators.
class Expr {
 public:
  Expr() = default;
  explicit Expr(std::shared_ptr<const JetFunction> n) : node_(std::move(n)) {}
  bool valid() const { return node_ != nullptr; }
  double operator()(const JetPoint& p) const;
  int order() const;
  Expr du(const MultiIndex& a) const;
  Expr dz(int mu) const;
  std::set<MultiIndex> jet_deps() const;
  const std::shared_ptr<const JetFunction>& node() const { return node_; }

 private:
  std::shared_ptr<const JetFunction> node_;
};

// --- constructors ---
Expr constant(double c);
Expr z(int mu);
Expr u(const MultiIndex& a);
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr operator*(double s, const Expr& a);
Expr operator+(const Expr& a, double c);
Expr operator-(const Expr& a, double c);
Expr pow(const Expr& base, int n);  // n may be negative (guarded at eval)
Expr exp(const Expr& a);
Expr sin(const Expr& a);
Expr cos(const Expr& a);

/// Family of univariate functions closed under differentiation: eval(s, k)
/// is the k-th derivative at s.
struct Univariate {
  virtual ~Univariate() = default;
  virtual double eval(double s, int k) const = 0;
};
Expr smooth1d(std::shared_ptr<const Univariate> f, const Expr& inner, int deriv_shift = 0);

/// Opaque evaluator; partials fall back to central finite differences with
/// one Richardson level.  `deps` must list every coordinate possibly read.
Expr opaque(std::function<double(const JetPoint&)> f, int order, std::set<MultiIndex> deps,
            std::set<int> z_deps);

/// D_mu f = d_mu f + sum_alpha u_{alpha+e_mu} df/du_alpha.
Expr total_derivative(const Expr& f, int mu, const JetSpec& spec);

/// E_u(f) = sum_alpha (-D)^alpha df/du_alpha.
Expr euler_operator(const Expr& density, const JetSpec& spec);

/// Residual of u_t + u u_x - u_yy as a jet expression (3 independent vars).
Expr burgers_residual_expr();

/// On-manifold resolver: derivative coordinates with a0 >= 1 are produced
/// from rhs (a spatial expression for u_t) and its prolongations.
std::function<double(const JetPoint&, const MultiIndex&)> manifold_resolver(const Expr& rhs,
                                                                            const JetSpec& spec);

}  // namespace dgb::jets

#endif
