#include "horncalc/unipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "horncalc/errors.hpp"

namespace horncalc {

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(long(i)) * c_[i];
  return UniPoly(std::move(d));
}

Rational UniPoly::content() const {
  Rational g(0);
  for (const auto& x : c_) g = rational_gcd(g, x);
  if (!is_zero() && leading().sign() < 0) g = -g;
  return g;
}

UniPoly UniPoly::primitive_part() const {
  if (is_zero()) return UniPoly();
  Rational g = content();
  std::vector<Rational> d(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] / g;
  return UniPoly(std::move(d));
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[i];
    if (a.is_zero()) continue;
    if (!first) os << (a.sign() < 0 ? " - " : " + ");
    else if (a.sign() < 0) os << "-";
    first = false;
    Rational mag = a.sign() < 0 ? -a : a;
    if (i == 0 || mag != Rational(1)) os << mag.str();
    if (i > 0) {
      if (mag != Rational(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Rational> d(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] = -a.c_[i];
  return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(i) + b.coeff(i);
  return UniPoly(std::move(d));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(d));
}

UniPoly operator*(const Rational& r, const UniPoly& a) {
  std::vector<Rational> d(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] = r * a.c_[i];
  return UniPoly(std::move(d));
}

bool operator<(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo;
  int db = b.degree();
  if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    Rational q = rem[i] / b.leading();
    if (!q.is_zero()) {
      quo[i - db] = q;
      for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.coeff(j);
    }
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.primitive_part();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& u) {
  if (u.is_zero()) throw ZeroPolynomial();
  std::vector<SquarefreeFactor> out;
  UniPoly p = u.primitive_part();
  if (p.degree() == 0) return out;

  // Yun's algorithm on the primitive part.
  UniPoly d = gcd(p, p.derivative());
  UniPoly b = divmod(p, d).first;
  UniPoly c = divmod(p.derivative(), d).first;
  UniPoly e = c - b.derivative();
  int mult = 1;
  while (b.degree() > 0) {
    UniPoly a = gcd(b, e);
    if (a.degree() > 0) out.push_back({a.primitive_part(), mult});
    b = divmod(b, a).first;
    c = divmod(e, a).first;
    e = c - b.derivative();
    ++mult;
  }
  std::sort(out.begin(), out.end(), [](const SquarefreeFactor& x, const SquarefreeFactor& y) {
    if (x.multiplicity != y.multiplicity) return x.multiplicity > y.multiplicity;
    return x.factor < y.factor;
  });
  return out;
}

Rational squarefree_content(const UniPoly& u, const std::vector<SquarefreeFactor>& factors) {
  UniPoly prod = UniPoly::one();
  for (const auto& f : factors)
    for (int i = 0; i < f.multiplicity; ++i) prod = prod * f.factor;
  // u = content * prod with prod monic-ish primitive; deg prod == deg u
  return u.leading() / prod.leading();
}

PowerBase power_base(const UniPoly& u) {
  if (u.is_zero()) throw ZeroPolynomial();
  auto factors = squarefree_decomposition(u);
  PowerBase pb;
  if (factors.empty()) {
    pb.base = UniPoly::one();
    pb.exponent = 1;
    pb.content = u.coeff(0);
    return pb;
  }
  long k = 0;
  for (const auto& f : factors) k = std::gcd(k, static_cast<long>(f.multiplicity));
  UniPoly base = UniPoly::one();
  for (const auto& f : factors)
    for (long i = 0; i < f.multiplicity / k; ++i) base = base * f.factor;
  pb.base = base.primitive_part();
  pb.exponent = static_cast<int>(k);
  UniPoly pw = UniPoly::one();
  for (long i = 0; i < k; ++i) pw = pw * pb.base;
  pb.content = u.leading() / pw.leading();
  return pb;
}

}  // namespace horncalc
