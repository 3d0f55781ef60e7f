#include "horncalc/puiseux.hpp"

#include <numeric>
#include <sstream>

#include "horncalc/errors.hpp"

namespace horncalc {

Direction normalize_direction(const Rational& ds, const Rational& dt) {
  if (ds.is_zero() && dt.is_zero()) throw Error("zero direction");
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), ds.den().get_mpz_t(), dt.den().get_mpz_t());
  mpz_class a = ds.num() * (l / ds.den());
  mpz_class b = dt.num() * (l / dt.den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  a /= g;
  b /= g;
  if (sgn(a) < 0 || (sgn(a) == 0 && sgn(b) < 0)) {
    a = -a;
    b = -b;
  }
  if (!a.fits_slong_p() || !b.fits_slong_p())
    throw Error("direction components overflow");
  return {a.get_si(), b.get_si()};
}

PuiseuxPoly PuiseuxPoly::monomial(const Rational& coeff, const ExponentPoint& e) {
  PuiseuxPoly p;
  if (!coeff.is_zero()) p.terms_[e] = coeff;
  return p;
}

Rational PuiseuxPoly::coeff(const ExponentPoint& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Support PuiseuxPoly::support() const {
  Support s;
  for (const auto& [e, c] : terms_) s.insert(e);
  return s;
}

void PuiseuxPoly::add_term(const ExponentPoint& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PuiseuxPoly PuiseuxPoly::shifted(const ExponentPoint& by) const {
  PuiseuxPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + by, c);
  return out;
}

std::string PuiseuxPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational mag = c.sign() < 0 ? -c : c;
    bool has_var = !e.s.is_zero() || !e.t.is_zero();
    if (!has_var || mag != Rational(1)) os << mag.str();
    if (has_var && mag != Rational(1)) os << "*";
    if (!e.s.is_zero()) {
      os << "x";
      if (e.s != Rational(1)) os << "^" << (e.s.is_integer() ? e.s.str() : "(" + e.s.str() + ")");
    }
    if (!e.t.is_zero()) {
      if (!e.s.is_zero()) os << "*";
      os << "y";
      if (e.t != Rational(1)) os << "^" << (e.t.is_integer() ? e.t.str() : "(" + e.t.str() + ")");
    }
  }
  return os.str();
}

PuiseuxPoly operator-(const PuiseuxPoly& a) {
  PuiseuxPoly out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
  return out;
}

PuiseuxPoly operator+(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  PuiseuxPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

PuiseuxPoly operator-(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  PuiseuxPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

namespace {

// Dense window used when both factors have small integer exponents; keeps the
// big property-test products out of the ordered map.
struct IntWindow {
  long smin = 0, smax = 0, tmin = 0, tmax = 0;
  bool ok = false;
};

IntWindow integer_window(const PuiseuxPoly& p) {
  IntWindow w;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!e.s.is_integer() || !e.t.is_integer()) return w;
    if (!e.s.num().fits_slong_p() || !e.t.num().fits_slong_p()) return w;
    long s = e.s.num().get_si(), t = e.t.num().get_si();
    if (first) {
      w.smin = w.smax = s;
      w.tmin = w.tmax = t;
      first = false;
    } else {
      w.smin = std::min(w.smin, s);
      w.smax = std::max(w.smax, s);
      w.tmin = std::min(w.tmin, t);
      w.tmax = std::max(w.tmax, t);
    }
  }
  w.ok = !first;
  return w;
}

PuiseuxPoly mul_dense(const PuiseuxPoly& a, const PuiseuxPoly& b, const IntWindow& wa,
                      const IntWindow& wb) {
  long smin = wa.smin + wb.smin, smax = wa.smax + wb.smax;
  long tmin = wa.tmin + wb.tmin, tmax = wa.tmax + wb.tmax;
  std::size_t W = static_cast<std::size_t>(tmax - tmin + 1);
  std::vector<Rational> grid(static_cast<std::size_t>(smax - smin + 1) * W, Rational(0));
  for (const auto& [ea, ca] : a.terms()) {
    long as = ea.s.num().get_si(), at = ea.t.num().get_si();
    for (const auto& [eb, cb] : b.terms()) {
      long s = as + eb.s.num().get_si(), t = at + eb.t.num().get_si();
      grid[static_cast<std::size_t>(s - smin) * W + static_cast<std::size_t>(t - tmin)] += ca * cb;
    }
  }
  PuiseuxPoly out;
  for (long s = smin; s <= smax; ++s)
    for (long t = tmin; t <= tmax; ++t) {
      Rational& c = grid[static_cast<std::size_t>(s - smin) * W + static_cast<std::size_t>(t - tmin)];
      if (!c.is_zero()) out.add_term({Rational(s), Rational(t)}, c);
    }
  return out;
}

}  // namespace

PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (a.is_zero() || b.is_zero()) return PuiseuxPoly();
  IntWindow wa = integer_window(a), wb = integer_window(b);
  if (wa.ok && wb.ok) {
    unsigned long area = static_cast<unsigned long>(wa.smax + wb.smax - wa.smin - wb.smin + 1) *
                         static_cast<unsigned long>(wa.tmax + wb.tmax - wa.tmin - wb.tmin + 1);
    if (area <= (1u << 22)) return mul_dense(a, b, wa, wb);
  }
  PuiseuxPoly out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
  return out;
}

PuiseuxPoly operator*(const Rational& r, const PuiseuxPoly& a) {
  PuiseuxPoly out;
  if (r.is_zero()) return out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), e, r * c);
  return out;
}

std::string AffineForm::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& coeff, const char* var) {
    if (coeff.is_zero()) return;
    Rational mag = coeff.sign() < 0 ? -coeff : coeff;
    if (first) {
      if (coeff.sign() < 0) os << "-";
      first = false;
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
    }
    if (var == nullptr || mag != Rational(1)) os << mag.str();
    if (var != nullptr) {
      if (mag != Rational(1)) os << "*";
      os << var;
    }
  };
  emit(a, "s");
  emit(b, "t");
  emit(gamma, nullptr);
  if (first) os << "0";
  return os.str();
}

PuiseuxPoly apply_affine_theta(const AffineForm& form, const PuiseuxPoly& p) {
  PuiseuxPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term(e, form.eval(e) * c);
  return out;
}

PuiseuxPoly apply_theta_product(std::span<const AffineForm> forms, const PuiseuxPoly& p) {
  PuiseuxPoly out = p;
  for (const AffineForm& f : forms) out = apply_affine_theta(f, out);
  return out;
}

PuiseuxPoly partial_derivative(const PuiseuxPoly& p, Var v) {
  PuiseuxPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (v == Var::x) {
      if (e.s.is_zero()) continue;
      out.add_term({e.s - Rational(1), e.t}, e.s * c);
    } else {
      if (e.t.is_zero()) continue;
      out.add_term({e.s, e.t - Rational(1)}, e.t * c);
    }
  }
  return out;
}

PuiseuxPoly binomial_power(const ExponentPoint& u, unsigned n, const ExponentPoint& shift) {
  PuiseuxPoly out;
  for (unsigned j = 0; j <= n; ++j) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, j);
    ExponentPoint e{shift.s + Rational(long(j)) * u.s, shift.t + Rational(long(j)) * u.t};
    out.add_term(e, Rational(binom));
  }
  return out;
}

std::vector<Support> lines_partition(const Support& supp, const Direction& direction) {
  if (direction.ds == 0 && direction.dt == 0) throw Error("zero direction");
  if (std::gcd(direction.ds, direction.dt) != 1 ||
      (direction.ds < 0 || (direction.ds == 0 && direction.dt < 0)))
    throw Error("direction must be primitive and normalized");
  std::map<Rational, Support> lines;
  for (const ExponentPoint& p : supp) {
    Rational offset = Rational(direction.dt) * p.s - Rational(direction.ds) * p.t;
    lines[offset].insert(p);
  }
  std::vector<Support> out;
  out.reserve(lines.size());
  for (auto& [off, pts] : lines) out.push_back(std::move(pts));
  return out;
}

}  // namespace horncalc
