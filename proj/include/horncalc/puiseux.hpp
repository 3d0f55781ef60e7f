#pragma once

#include <array>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "horncalc/rational.hpp"

namespace horncalc {

// Exponent pair (s, t) of a Puiseux monomial x^s y^t. Ordered lexicographically
// by s then t; this is the canonical iteration order everywhere.
struct ExponentPoint {
  Rational s, t;

  friend bool operator==(const ExponentPoint& a, const ExponentPoint& b) {
    return a.s == b.s && a.t == b.t;
  }
  friend bool operator!=(const ExponentPoint& a, const ExponentPoint& b) { return !(a == b); }
  friend bool operator<(const ExponentPoint& a, const ExponentPoint& b) {
    if (a.s != b.s) return a.s < b.s;
    return a.t < b.t;
  }
  friend ExponentPoint operator+(const ExponentPoint& a, const ExponentPoint& b) {
    return {a.s + b.s, a.t + b.t};
  }
  friend ExponentPoint operator-(const ExponentPoint& a, const ExponentPoint& b) {
    return {a.s - b.s, a.t - b.t};
  }
};

using Support = std::set<ExponentPoint>;

// Primitive integer direction, normalized so the first nonzero component is
// positive.
struct Direction {
  long ds = 0, dt = 0;

  friend bool operator==(const Direction& a, const Direction& b) {
    return a.ds == b.ds && a.dt == b.dt;
  }
  friend bool operator<(const Direction& a, const Direction& b) {
    if (a.ds != b.ds) return a.ds < b.ds;
    return a.dt < b.dt;
  }
  bool is_axis() const { return ds == 0 || dt == 0; }
};

// Clears denominators, divides by the gcd and fixes the sign. Throws on (0,0)
// and when a primitive component does not fit a machine integer.
Direction normalize_direction(const Rational& ds, const Rational& dt);

// Sparse bivariate Puiseux polynomial: finite map from exponent points to
// nonzero rational coefficients.
class PuiseuxPoly {
 public:
  using TermMap = std::map<ExponentPoint, Rational>;

  PuiseuxPoly() = default;

  static PuiseuxPoly zero() { return PuiseuxPoly(); }
  static PuiseuxPoly monomial(const Rational& coeff, const ExponentPoint& e);
  static PuiseuxPoly constant(const Rational& coeff) { return monomial(coeff, {Rational(0), Rational(0)}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const ExponentPoint& e) const;
  Support support() const;

  void add_term(const ExponentPoint& e, const Rational& c);
  PuiseuxPoly shifted(const ExponentPoint& by) const;  // multiply by x^by.s y^by.t

  std::string str() const;

  friend PuiseuxPoly operator-(const PuiseuxPoly& a);
  friend PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);
  friend PuiseuxPoly operator*(const Rational& r, const PuiseuxPoly& a);
  friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PuiseuxPoly& a, const PuiseuxPoly& b) { return !(a == b); }

 private:
  TermMap terms_;
};

// a*theta_x + b*theta_y + gamma; equivalently the affine polynomial
// a*s + b*t + gamma on exponent space.
struct AffineForm {
  Rational a, b, gamma;

  Rational eval(const ExponentPoint& p) const { return a * p.s + b * p.t + gamma; }
  std::string str() const;
};

// Termwise eigenvalue action: c x^s y^t -> (a s + b t + gamma) c x^s y^t.
PuiseuxPoly apply_affine_theta(const AffineForm& form, const PuiseuxPoly& p);

// Left fold of apply_affine_theta; the forms commute, so the result does not
// depend on the list order.
PuiseuxPoly apply_theta_product(std::span<const AffineForm> forms, const PuiseuxPoly& p);

enum class Var { x, y };

PuiseuxPoly partial_derivative(const PuiseuxPoly& p, Var v);

// x^shift * (1 + x^u)^n expanded with exact binomial coefficients.
PuiseuxPoly binomial_power(const ExponentPoint& u, unsigned n, const ExponentPoint& shift);

// Partition of a support into maximal collinear subsets along a direction,
// ordered by line offset.
std::vector<Support> lines_partition(const Support& supp, const Direction& direction);

}  // namespace horncalc
