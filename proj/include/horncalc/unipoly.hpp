#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "horncalc/rational.hpp"

namespace horncalc {

// Exact univariate polynomial over the rationals. Coefficients are indexed
// by degree; the zero polynomial is the empty sequence, otherwise the leading
// coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const Rational& r) { return UniPoly({r}); }
  static UniPoly one() { return constant(Rational(1)); }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  UniPoly derivative() const;
  Rational content() const;        // gcd of |coefficients|, sign of leading
  UniPoly primitive_part() const;  // this / content, positive leading coeff
  std::string str(const std::string& var = "w") const;

  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& r, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
  // lexicographic on (degree, coefficient sequence); total order for set keys
  friend bool operator<(const UniPoly& a, const UniPoly& b);

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// quotient and remainder of exact division a = q*b + r, deg r < deg b
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// primitive gcd with positive leading coefficient; gcd(0,0) = 0
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct SquarefreeFactor {
  UniPoly factor;  // squarefree, primitive, positive leading coefficient
  int multiplicity = 0;
};

// u = content * prod factor_i^multiplicity_i with pairwise coprime factors,
// sorted by descending multiplicity. Throws ZeroPolynomial on zero input.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& u);
Rational squarefree_content(const UniPoly& u,
                            const std::vector<SquarefreeFactor>& factors);

struct PowerBase {
  UniPoly base;      // primitive, positive leading coefficient
  int exponent = 1;  // maximal k with u = content * base^k
  Rational content;
};

// Maximal perfect-power extraction via the gcd of squarefree multiplicities.
// The reconstruction content * base^exponent == u holds exactly.
PowerBase power_base(const UniPoly& u);

}  // namespace horncalc
