#include "horncalc/rational.hpp"

#include <cctype>
#include <ostream>

namespace horncalc {

namespace {

bool valid_integer_token(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw ParseError("not a rational: '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator: '" + text + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.sign() < 0 ? -b : b;
  if (b.is_zero()) return a.sign() < 0 ? -a : a;
  mpz_class n, d;
  mpz_gcd(n.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
  mpz_lcm(d.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

}  // namespace horncalc
