#include "degburgers/jets.hpp"

#include <cmath>

namespace dgb::jets {

std::string MultiIndex::str() const {
  return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + ")";
}

JetSpec::JetSpec(int n_indep, int max_order, std::vector<std::string> names)
    : n_indep_(n_indep), max_order_(max_order), names_(std::move(names)) {
  if (n_indep_ != 2 && n_indep_ != 3) throw std::invalid_argument("JetSpec: n_indep must be 2 or 3");
  if (names_.empty()) names_ = (n_indep_ == 3) ? std::vector<std::string>{"t", "x", "y"}
                                               : std::vector<std::string>{"z1", "z2"};
}

std::vector<MultiIndex> JetSpec::indices_up_to(int order) const {
  std::vector<MultiIndex> out;
  const int amax = order;
  for (int a0 = 0; a0 <= amax; ++a0)
    for (int a1 = 0; a0 + a1 <= amax; ++a1) {
      if (n_indep_ == 2) {
        out.push_back(mi(a0, a1, 0));
      } else {
        for (int a2 = 0; a0 + a1 + a2 <= amax; ++a2) out.push_back(mi(a0, a1, a2));
      }
    }
  return out;
}

double JetPoint::u(const MultiIndex& a) const {
  auto it = u_.find(a);
  if (it != u_.end()) return it->second;
  if (resolver_) {
    double v = resolver_(*this, a);
    u_[a] = v;
    return v;
  }
  throw std::out_of_range("jet coordinate u" + a.str() + " not populated");
}

// ---------------------------------------------------------------- nodes ---

class JetFunction {
 public:
  virtual ~JetFunction() = default;
  virtual double eval(const JetPoint&) const = 0;
  virtual int order() const = 0;  // highest jet order read; -1 when none
  virtual Expr du(const MultiIndex&) const = 0;
  virtual Expr dz(int mu) const = 0;
  virtual void deps(std::set<MultiIndex>&) const = 0;
};

double Expr::operator()(const JetPoint& p) const { return node_->eval(p); }
int Expr::order() const { return node_->order(); }
Expr Expr::du(const MultiIndex& a) const { return node_->du(a); }
Expr Expr::dz(int mu) const { return node_->dz(mu); }
std::set<MultiIndex> Expr::jet_deps() const {
  std::set<MultiIndex> s;
  node_->deps(s);
  return s;
}

namespace {

class ConstNode final : public JetFunction {
 public:
  explicit ConstNode(double c) : c_(c) {}
  double eval(const JetPoint&) const override { return c_; }
  int order() const override { return -1; }
  Expr du(const MultiIndex&) const override { return constant(0); }
  Expr dz(int) const override { return constant(0); }
  void deps(std::set<MultiIndex>&) const override {}
  double value() const { return c_; }

 private:
  double c_;
};

const ConstNode* as_const(const Expr& e) {
  return dynamic_cast<const ConstNode*>(e.node().get());
}
bool is_const(const Expr& e, double v) {
  const auto* c = as_const(e);
  return c && c->value() == v;
}

class ZNode final : public JetFunction {
 public:
  explicit ZNode(int mu) : mu_(mu) {}
  double eval(const JetPoint& p) const override { return p.z(mu_); }
  int order() const override { return -1; }
  Expr du(const MultiIndex&) const override { return constant(0); }
  Expr dz(int mu) const override { return constant(mu == mu_ ? 1 : 0); }
  void deps(std::set<MultiIndex>&) const override {}

 private:
  int mu_;
};

class UNode final : public JetFunction {
 public:
  explicit UNode(MultiIndex a) : a_(a) {}
  double eval(const JetPoint& p) const override { return p.u(a_); }
  int order() const override { return a_.order(); }
  Expr du(const MultiIndex& b) const override { return constant(b == a_ ? 1 : 0); }
  Expr dz(int) const override { return constant(0); }
  void deps(std::set<MultiIndex>& s) const override { s.insert(a_); }

 private:
  MultiIndex a_;
};

class SumNode final : public JetFunction {
 public:
  SumNode(Expr a, Expr b) : a_(std::move(a)), b_(std::move(b)) {}
  double eval(const JetPoint& p) const override { return a_(p) + b_(p); }
  int order() const override { return std::max(a_.order(), b_.order()); }
  Expr du(const MultiIndex& m) const override { return a_.du(m) + b_.du(m); }
  Expr dz(int mu) const override { return a_.dz(mu) + b_.dz(mu); }
  void deps(std::set<MultiIndex>& s) const override {
    a_.node()->deps(s);
    b_.node()->deps(s);
  }

 private:
  Expr a_, b_;
};

class ProdNode final : public JetFunction {
 public:
  ProdNode(Expr a, Expr b) : a_(std::move(a)), b_(std::move(b)) {}
  double eval(const JetPoint& p) const override { return a_(p) * b_(p); }
  int order() const override { return std::max(a_.order(), b_.order()); }
  Expr du(const MultiIndex& m) const override { return a_.du(m) * b_ + a_ * b_.du(m); }
  Expr dz(int mu) const override { return a_.dz(mu) * b_ + a_ * b_.dz(mu); }
  void deps(std::set<MultiIndex>& s) const override {
    a_.node()->deps(s);
    b_.node()->deps(s);
  }

 private:
  Expr a_, b_;
};

class PowNode final : public JetFunction {
 public:
  PowNode(Expr base, int n) : base_(std::move(base)), n_(n) {}
  double eval(const JetPoint& p) const override {
    double b = base_(p);
    if (n_ < 0 && b == 0) throw std::domain_error("pow: zero base with negative exponent");
    return std::pow(b, n_);
  }
  int order() const override { return base_.order(); }
  Expr du(const MultiIndex& m) const override {
    return static_cast<double>(n_) * pow(base_, n_ - 1) * base_.du(m);
  }
  Expr dz(int mu) const override {
    return static_cast<double>(n_) * pow(base_, n_ - 1) * base_.dz(mu);
  }
  void deps(std::set<MultiIndex>& s) const override { base_.node()->deps(s); }

 private:
  Expr base_;
  int n_;
};

class ExpNode final : public JetFunction {
 public:
  explicit ExpNode(Expr a) : a_(std::move(a)) {}
  double eval(const JetPoint& p) const override { return std::exp(a_(p)); }
  int order() const override { return a_.order(); }
  Expr du(const MultiIndex& m) const override { return exp(a_) * a_.du(m); }
  Expr dz(int mu) const override { return exp(a_) * a_.dz(mu); }
  void deps(std::set<MultiIndex>& s) const override { a_.node()->deps(s); }

 private:
  Expr a_;
};

class SinNode final : public JetFunction {
 public:
  explicit SinNode(Expr a) : a_(std::move(a)) {}
  double eval(const JetPoint& p) const override { return std::sin(a_(p)); }
  int order() const override { return a_.order(); }
  Expr du(const MultiIndex& m) const override { return cos(a_) * a_.du(m); }
  Expr dz(int mu) const override { return cos(a_) * a_.dz(mu); }
  void deps(std::set<MultiIndex>& s) const override { a_.node()->deps(s); }

 private:
  Expr a_;
};

class CosNode final : public JetFunction {
 public:
  explicit CosNode(Expr a) : a_(std::move(a)) {}
  double eval(const JetPoint& p) const override { return std::cos(a_(p)); }
  int order() const override { return a_.order(); }
  Expr du(const MultiIndex& m) const override { return -(sin(a_) * a_.du(m)); }
  Expr dz(int mu) const override { return -(sin(a_) * a_.dz(mu)); }
  void deps(std::set<MultiIndex>& s) const override { a_.node()->deps(s); }

 private:
  Expr a_;
};

class Smooth1DNode final : public JetFunction {
 public:
  Smooth1DNode(std::shared_ptr<const Univariate> f, Expr inner, int shift)
      : f_(std::move(f)), inner_(std::move(inner)), shift_(shift) {}
  double eval(const JetPoint& p) const override { return f_->eval(inner_(p), shift_); }
  int order() const override { return inner_.order(); }
  Expr du(const MultiIndex& m) const override {
    return smooth1d(f_, inner_, shift_ + 1) * inner_.du(m);
  }
  Expr dz(int mu) const override { return smooth1d(f_, inner_, shift_ + 1) * inner_.dz(mu); }
  void deps(std::set<MultiIndex>& s) const override { inner_.node()->deps(s); }

 private:
  std::shared_ptr<const Univariate> f_;
  Expr inner_;
  int shift_;
};

// Opaque evaluator with finite-difference partials: 4th-order central
// stencil, one Richardson level, h = 1e-5 * max(1, |coord|).
class OpaqueNode final : public JetFunction,
                         public std::enable_shared_from_this<OpaqueNode> {
 public:
  OpaqueNode(std::function<double(const JetPoint&)> f, int order, std::set<MultiIndex> deps,
             std::set<int> zdeps)
      : f_(std::move(f)), order_(order), deps_(std::move(deps)), zdeps_(std::move(zdeps)) {}
  double eval(const JetPoint& p) const override { return f_(p); }
  int order() const override { return order_; }
  Expr du(const MultiIndex& m) const override;
  Expr dz(int mu) const override;
  void deps(std::set<MultiIndex>& s) const override { s.insert(deps_.begin(), deps_.end()); }
  const std::set<int>& zdeps() const { return zdeps_; }

 private:
  std::function<double(const JetPoint&)> f_;
  int order_;
  std::set<MultiIndex> deps_;
  std::set<int> zdeps_;
};

double fd_derivative(const std::function<double(double)>& g, double x0) {
  const double h = 1e-5 * std::max(1.0, std::abs(x0));
  auto stencil = [&](double hh) {
    return (g(x0 - 2 * hh) - 8 * g(x0 - hh) + 8 * g(x0 + hh) - g(x0 + 2 * hh)) / (12 * hh);
  };
  const double dh = stencil(h), dh2 = stencil(h / 2);
  return (16 * dh2 - dh) / 15;  // one Richardson level
}

class OpaquePartial final : public JetFunction {
 public:
  enum class Kind { kU, kZ };
  OpaquePartial(Expr base, Kind kind, MultiIndex a, int mu)
      : base_(std::move(base)), kind_(kind), a_(a), mu_(mu) {}
  double eval(const JetPoint& p) const override {
    if (kind_ == Kind::kU) {
      const double x0 = p.has(a_) ? p.u(a_) : p.u(a_);
      return fd_derivative([&](double v) { return base_(p.with_u(a_, v)); }, x0);
    }
    return fd_derivative([&](double v) { return base_(p.with_z(mu_, v)); }, p.z(mu_));
  }
  int order() const override { return base_.order(); }
  Expr du(const MultiIndex& m) const override {
    auto self = Expr(std::make_shared<OpaquePartial>(base_, kind_, a_, mu_));
    return Expr(std::make_shared<OpaquePartial>(self, Kind::kU, m, 0));
  }
  Expr dz(int mu) const override {
    auto self = Expr(std::make_shared<OpaquePartial>(base_, kind_, a_, mu_));
    return Expr(std::make_shared<OpaquePartial>(self, Kind::kZ, MultiIndex{}, mu));
  }
  void deps(std::set<MultiIndex>& s) const override { base_.node()->deps(s); }

 private:
  Expr base_;
  Kind kind_;
  MultiIndex a_;
  int mu_;
};

Expr OpaqueNode::du(const MultiIndex& m) const {
  if (!deps_.count(m)) return constant(0);
  return Expr(std::make_shared<OpaquePartial>(Expr(shared_from_this()), OpaquePartial::Kind::kU, m, 0));
}
Expr OpaqueNode::dz(int mu) const {
  if (!zdeps_.count(mu)) return constant(0);
  return Expr(
      std::make_shared<OpaquePartial>(Expr(shared_from_this()), OpaquePartial::Kind::kZ, MultiIndex{}, mu));
}

}  // namespace

// ------------------------------------------------------------- builders ---

Expr constant(double c) { return Expr(std::make_shared<ConstNode>(c)); }
Expr z(int mu) { return Expr(std::make_shared<ZNode>(mu)); }
Expr u(const MultiIndex& a) { return Expr(std::make_shared<UNode>(a)); }

Expr operator+(const Expr& a, const Expr& b) {
  if (is_const(a, 0)) return b;
  if (is_const(b, 0)) return a;
  const auto *ca = as_const(a), *cb = as_const(b);
  if (ca && cb) return constant(ca->value() + cb->value());
  return Expr(std::make_shared<SumNode>(a, b));
}
Expr operator-(const Expr& a) { return constant(-1) * a; }
Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }
Expr operator*(const Expr& a, const Expr& b) {
  if (is_const(a, 0) || is_const(b, 0)) return constant(0);
  if (is_const(a, 1)) return b;
  if (is_const(b, 1)) return a;
  const auto *ca = as_const(a), *cb = as_const(b);
  if (ca && cb) return constant(ca->value() * cb->value());
  return Expr(std::make_shared<ProdNode>(a, b));
}
Expr operator*(double s, const Expr& a) { return constant(s) * a; }
Expr operator+(const Expr& a, double c) { return a + constant(c); }
Expr operator-(const Expr& a, double c) { return a + constant(-c); }
Expr pow(const Expr& base, int n) {
  if (n == 0) return constant(1);
  if (n == 1) return base;
  return Expr(std::make_shared<PowNode>(base, n));
}
Expr exp(const Expr& a) { return Expr(std::make_shared<ExpNode>(a)); }
Expr sin(const Expr& a) { return Expr(std::make_shared<SinNode>(a)); }
Expr cos(const Expr& a) { return Expr(std::make_shared<CosNode>(a)); }
Expr smooth1d(std::shared_ptr<const Univariate> f, const Expr& inner, int deriv_shift) {
  return Expr(std::make_shared<Smooth1DNode>(std::move(f), inner, deriv_shift));
}
Expr opaque(std::function<double(const JetPoint&)> f, int order, std::set<MultiIndex> deps,
            std::set<int> zdeps) {
  return Expr(std::make_shared<OpaqueNode>(std::move(f), order, std::move(deps), std::move(zdeps)));
}

Expr total_derivative(const Expr& f, int mu, const JetSpec& spec) {
  if (mu < 0 || mu >= spec.n_indep())
    throw std::invalid_argument("total_derivative: bad direction");
  Expr s = f.dz(mu);
  for (const auto& a : f.jet_deps()) {
    if (a.order() + 1 > spec.max_order()) throw OrderCapError(spec.max_order());
    Expr p = f.du(a);
    if (is_const(p, 0)) continue;
    s = s + u(a.bump(mu)) * p;
  }
  return s;
}

Expr euler_operator(const Expr& density, const JetSpec& spec) {
  Expr s = constant(0);
  for (const auto& a : density.jet_deps()) {
    Expr term = density.du(a);
    if (is_const(term, 0)) continue;
    for (int mu = 0; mu < 3; ++mu)
      for (int k = 0; k < a.a[static_cast<size_t>(mu)]; ++k)
        term = total_derivative(term, mu, spec);
    const double sign = (a.order() % 2 == 0) ? 1.0 : -1.0;
    s = s + sign * term;
  }
  return s;
}

Expr burgers_residual_expr() {
  return u(mi(1, 0, 0)) + u(mi(0, 0, 0)) * u(mi(0, 1, 0)) - u(mi(0, 0, 2));
}

std::function<double(const JetPoint&, const MultiIndex&)> manifold_resolver(const Expr& rhs,
                                                                            const JetSpec& spec) {
  // u_{(a0,a1,a2)} = D1^{a1} D2^{a2} (D0^{a0-1} rhs); every D0 application
  // re-introduces coordinates with smaller a0, resolved recursively.
  struct Ctx {
    JetSpec wide;
    Expr rhs;
    std::map<int, Expr> h;                 // a0 -> D0^{a0-1} rhs
    std::map<MultiIndex, Expr> resolved;   // full expression per coordinate
  };
  auto ctx = std::make_shared<Ctx>(Ctx{JetSpec(spec.n_indep(), 2 * spec.max_order() + 6), rhs, {}, {}});
  ctx->h[1] = rhs;
  return [ctx](const JetPoint& p, const MultiIndex& a) -> double {
    if (a.a[0] < 1)
      throw std::out_of_range("manifold resolver asked for spatial coordinate u" + a.str());
    auto it = ctx->resolved.find(a);
    if (it == ctx->resolved.end()) {
      int k = a.a[0];
      if (!ctx->h.count(k)) {
        int have = 1;
        while (ctx->h.count(have + 1)) ++have;
        for (; have < k; ++have)
          ctx->h[have + 1] = total_derivative(ctx->h[have], 0, ctx->wide);
      }
      Expr e = ctx->h[k];
      for (int i = 0; i < a.a[1]; ++i) e = total_derivative(e, 1, ctx->wide);
      for (int i = 0; i < a.a[2]; ++i) e = total_derivative(e, 2, ctx->wide);
      it = ctx->resolved.emplace(a, e).first;
    }
    return it->second(p);
  };
}

}  // namespace dgb::jets
