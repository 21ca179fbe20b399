#ifndef DEGBURGERS_VECTOR_FIELD_HPP
#define DEGBURGERS_VECTOR_FIELD_HPP

#include <array>
#include <string>

#include "degburgers/poly4.hpp"

namespace dgb {

/// Vector field xi_t*dt + xi_x*dx + xi_y*dy + eta_u*du on (t,x,y,u)-space
/// with polynomial coefficients.
struct VectorField {
  std::array<Poly4, 4> comp;  // indexed by axis: t,x,y,u

  VectorField() = default;
  VectorField(Poly4 xi_t, Poly4 xi_x, Poly4 xi_y, Poly4 eta_u)
      : comp{std::move(xi_t), std::move(xi_x), std::move(xi_y), std::move(eta_u)} {}

  bool is_zero() const {
    for (const auto& c : comp)
      if (!c.is_zero()) return false;
    return true;
  }
  bool operator==(const VectorField& o) const { return comp == o.comp; }

  VectorField operator+(const VectorField& o) const {
    return {comp[0] + o.comp[0], comp[1] + o.comp[1], comp[2] + o.comp[2], comp[3] + o.comp[3]};
  }
  VectorField operator-(const VectorField& o) const {
    return {comp[0] - o.comp[0], comp[1] - o.comp[1], comp[2] - o.comp[2], comp[3] - o.comp[3]};
  }
  VectorField operator*(const Rational& s) const {
    return {comp[0] * s, comp[1] * s, comp[2] * s, comp[3] * s};
  }
};

/// Lie bracket [X,Y]^nu = sum_mu (X^mu d_mu Y^nu - Y^mu d_mu X^nu), exact.
inline VectorField bracket(const VectorField& X, const VectorField& Y) {
  VectorField r;
  for (int nu = 0; nu < 4; ++nu) {
    Poly4 acc;
    for (int mu = 0; mu < 4; ++mu) {
      auto nu_i = static_cast<size_t>(nu);
      auto mu_i = static_cast<size_t>(mu);
      acc = acc + X.comp[mu_i] * Y.comp[nu_i].derivative(mu) -
            Y.comp[mu_i] * X.comp[nu_i].derivative(mu);
    }
    r.comp[static_cast<size_t>(nu)] = acc;
  }
  return r;
}

}  // namespace dgb

#endif
