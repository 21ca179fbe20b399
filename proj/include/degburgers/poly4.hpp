#ifndef DEGBURGERS_POLY4_HPP
#define DEGBURGERS_POLY4_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "degburgers/rationals.hpp"

namespace dgb {

struct DegreeCapError : std::runtime_error {
  explicit DegreeCapError(int cap)
      : std::runtime_error("Poly4 degree cap " + std::to_string(cap) + " exceeded") {}
};

/// Sparse polynomial in (t, x, y, u) with exact rational coefficients.
/// Total degree is capped; zero coefficients are never stored.
class Poly4 {
 public:
  static constexpr int kDegreeCap = 4;
  using Exponents = std::array<int, 4>;  // (deg_t, deg_x, deg_y, deg_u)

  Poly4() = default;

  static Poly4 constant(const Rational& c) {
    Poly4 p;
    p.add_term({0, 0, 0, 0}, c);
    return p;
  }
  /// axis: 0=t, 1=x, 2=y, 3=u
  static Poly4 variable(int axis) {
    Poly4 p;
    Exponents e{0, 0, 0, 0};
    e[static_cast<size_t>(axis)] = 1;
    p.add_term(e, 1);
    return p;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    if (e[0] + e[1] + e[2] + e[3] > kDegreeCap) throw DegreeCapError(kDegreeCap);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Poly4 operator+(const Poly4& o) const {
    Poly4 r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  Poly4 operator-() const {
    Poly4 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  Poly4 operator-(const Poly4& o) const { return *this + (-o); }
  Poly4 operator*(const Poly4& o) const {
    Poly4 r;
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_)
        r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]}, c1 * c2);
    return r;
  }
  Poly4 operator*(const Rational& s) const {
    Poly4 r;
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
  }
  bool operator==(const Poly4& o) const { return terms_ == o.terms_; }

  Poly4 derivative(int axis) const {
    Poly4 r;
    auto ax = static_cast<size_t>(axis);
    for (const auto& [e, c] : terms_) {
      if (e[ax] == 0) continue;
      Exponents d = e;
      d[ax] -= 1;
      r.add_term(d, c * e[ax]);
    }
    return r;
  }

  double eval(double t, double x, double y, double u) const;

  std::string str() const;

 private:
  std::map<Exponents, Rational> terms_;
};

inline double Poly4::eval(double t, double x, double y, double u) const {
  auto ipow = [](double b, int n) {
    double r = 1;
    for (int i = 0; i < n; ++i) r *= b;
    return r;
  };
  double s = 0;
  for (const auto& [e, c] : terms_)
    s += to_double(c) * ipow(t, e[0]) * ipow(x, e[1]) * ipow(y, e[2]) * ipow(u, e[3]);
  return s;
}

inline std::string Poly4::str() const {
  if (terms_.empty()) return "0";
  static const char* names[4] = {"t", "x", "y", "u"};
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += rational_to_string(c);
    for (int a = 0; a < 4; ++a)
      for (int k = 0; k < e[static_cast<size_t>(a)]; ++k) out += std::string("*") + names[a];
  }
  return out;
}

}  // namespace dgb

#endif
