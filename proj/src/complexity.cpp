#include "horncalc/complexity.hpp"

#include <algorithm>
#include <set>

#include "horncalc/errors.hpp"

namespace horncalc {

std::string to_string(BoundRule rule) {
  switch (rule) {
    case BoundRule::alg1: return "alg1";
    case BoundRule::alg3: return "alg3";
    case BoundRule::theorem_raw: return "theorem_raw";
    case BoundRule::theorem_refined: return "theorem_refined";
    case BoundRule::line_support: return "line_support";
    case BoundRule::theta: return "theta";
    case BoundRule::theta_product: return "theta_product";
    case BoundRule::delta1: return "delta1";
    case BoundRule::cl0: return "cl0";
    case BoundRule::manual: return "manual";
  }
  return "manual";
}

BoundRule bound_rule_from_string(const std::string& name) {
  for (BoundRule r : {BoundRule::alg1, BoundRule::alg3, BoundRule::theorem_raw,
                      BoundRule::theorem_refined, BoundRule::line_support, BoundRule::theta,
                      BoundRule::theta_product, BoundRule::delta1, BoundRule::cl0,
                      BoundRule::manual}) {
    if (to_string(r) == name) return r;
  }
  throw ParseError("unknown bound rule: " + name);
}

ComplexityBound sum_bound(const std::vector<long>& bounds) {
  if (bounds.empty()) throw EmptyInput();
  std::multiset<long> pool;
  for (long b : bounds) {
    if (b < 0) throw Error("analytic complexity bounds are non-negative");
    pool.insert(b);
  }
  while (pool.size() > 1) {
    auto it = pool.begin();
    long lo = *it;
    it = pool.erase(it);
    long hi = *it;
    pool.erase(it);
    pool.insert(std::max(lo, hi) + 1);
  }
  return {*pool.begin(), BoundRule::alg1};
}

long theta_bound(long n) {
  if (n < 0) throw Error("class index must be non-negative");
  return 2 * n + 1;
}

long theta_product_bound(long n, long k) {
  if (n < 0 || k < 0) throw Error("class index and factor count must be non-negative");
  mpz_class r = mpz_class(n + 1);
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  r -= 1;
  if (!r.fits_slong_p()) throw Error("bound overflows a machine integer");
  return r.get_si();
}

long ceil_log2(long m) {
  if (m < 1) throw NonPositive();
  long e = 0;
  while ((1L << e) < m) ++e;
  return e;
}

namespace {

mpz_class ceil_log2_mpz(const mpz_class& m) {
  if (m < 1) throw NonPositive();
  mpz_class e = 0, pow = 1;
  while (pow < m) {
    pow *= 2;
    ++e;
  }
  return e;
}

long to_long_checked(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error("bound overflows a machine integer");
  return z.get_si();
}

}  // namespace

ZonotopeBoundResult zonotope_bound(const ZonotopePairing& pairing) {
  if (!is_polynomial_regime(pairing)) throw NonPolynomialRegime();
  const long k = static_cast<long>(pairing.k());
  if (k < 2) throw KTooSmall();

  ZonotopeBoundResult out;
  out.vectors.c_hat_sorted = pairing.c_hat;
  std::sort(out.vectors.c_hat_sorted.begin(), out.vectors.c_hat_sorted.end());

  mpz_class big = 3;  // 3 * 2^(k-2) - 1
  mpz_mul_2exp(big.get_mpz_t(), big.get_mpz_t(), static_cast<mp_bitcnt_t>(k - 2));
  big -= 1;

  mpz_class max_ch = out.vectors.c_hat_sorted.back().num();
  mpz_class term1 = big + ceil_log2_mpz(mpz_class(k) * (k - 1) / 2);
  mpz_class term2 = 2 + ceil_log2_mpz(max_ch + 1) + ceil_log2_mpz(mpz_class(k - 1));
  out.raw = {to_long_checked(std::min(term1, term2)), BoundRule::theorem_raw};

  for (long i = 1; i <= k - 1; ++i) {
    mpz_class ch = out.vectors.c_hat_sorted[static_cast<std::size_t>(i - 1)].num();
    mpz_class line_est = 2 + ceil_log2_mpz(ch + 1);
    mpz_class pair_est = big + ceil_log2_mpz(mpz_class(k - i));
    out.vectors.v.push_back(to_long_checked(std::min(line_est, pair_est)));
  }
  out.refined = {sum_bound(out.vectors.v).value, BoundRule::theorem_refined};
  return out;
}

std::vector<Direction> candidate_directions(const Support& supp) {
  std::set<Direction> dirs{{1, 0}, {0, 1}};
  std::vector<ExponentPoint> pts(supp.begin(), supp.end());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Direction d = normalize_direction(pts[j].s - pts[i].s, pts[j].t - pts[i].t);
      if (std::abs(d.ds) <= 20 && std::abs(d.dt) <= 20) dirs.insert(d);
    }
  }
  return {dirs.begin(), dirs.end()};
}

bool is_cl0(const PuiseuxPoly& f) {
  if (f.is_zero()) return true;
  bool const_s = true, const_t = true;
  const ExponentPoint& first = f.terms().begin()->first;
  for (const auto& [e, c] : f.terms()) {
    if (e.s != first.s) const_s = false;
    if (e.t != first.t) const_t = false;
  }
  return const_s || const_t;
}

namespace {

// depends on at most one variable: every exponent has s = 0, or every t = 0
bool univariate(const PuiseuxPoly& p) {
  bool no_x = true, no_y = true;
  for (const auto& [e, c] : p.terms()) {
    if (!e.s.is_zero()) no_x = false;
    if (!e.t.is_zero()) no_y = false;
  }
  return no_x || no_y;
}

}  // namespace

ComplexityBound line_support_bound(const PuiseuxPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (univariate(p)) return {0, BoundRule::cl0};
  Support supp = p.support();
  long best = -1;
  for (const Direction& d : candidate_directions(supp)) {
    long lines = static_cast<long>(lines_partition(supp, d).size());
    long b = d.is_axis() ? 1 : 2;
    long val = b + ceil_log2(lines);
    if (best < 0 || val < best) best = val;
  }
  return {best, BoundRule::line_support};
}

std::set<ShortBase> get_short(const PuiseuxPoly& slice, const Direction& direction) {
  if (slice.is_zero()) throw ZeroPolynomial();
  Support supp = slice.support();
  if (lines_partition(supp, direction).size() != 1) throw NonCollinear();

  if (supp.size() == 1) return {{direction, UniPoly::one()}};

  // Parametrize points as anchor + tau * direction; tau >= 0 with the anchor
  // at the canonically smallest point.
  const ExponentPoint& anchor = *supp.begin();
  std::vector<std::pair<Rational, Rational>> taus;  // (tau, coefficient)
  for (const auto& [e, c] : slice.terms()) {
    Rational tau = direction.ds != 0 ? (e.s - anchor.s) / Rational(direction.ds)
                                     : (e.t - anchor.t) / Rational(direction.dt);
    taus.emplace_back(tau, c);
  }
  // w steps by the primitive direction vector; fractional offsets are cleared
  // by the lcm of the tau denominators, integer gaps stay as they are
  mpz_class lcm = 1;
  for (const auto& [tau, c] : taus)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), tau.den().get_mpz_t());
  Rational scale{mpz_class(lcm)};

  long max_exp = 0;
  for (const auto& [tau, c] : taus) max_exp = std::max(max_exp, (tau * scale).to_long());
  std::vector<Rational> coeffs(static_cast<std::size_t>(max_exp) + 1, Rational(0));
  for (const auto& [tau, c] : taus) coeffs[static_cast<std::size_t>((tau * scale).to_long())] = c;

  PowerBase pb = power_base(UniPoly(std::move(coeffs)));
  return {{direction, pb.base}};
}

ComplexityBound poly_bound(const PuiseuxPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (is_cl0(p)) return {0, BoundRule::cl0};

  ComplexityBound best = line_support_bound(p);
  Support supp = p.support();
  for (const Direction& d : candidate_directions(supp)) {
    std::set<ShortBase> seen;
    long result = 0;
    for (const Support& line : lines_partition(supp, d)) {
      PuiseuxPoly slice;
      for (const ExponentPoint& e : line) slice.add_term(e, p.coeff(e));
      std::set<ShortBase> curr = get_short(slice, d);
      if (!std::includes(seen.begin(), seen.end(), curr.begin(), curr.end())) result += 1;
      seen.insert(curr.begin(), curr.end());
    }
    long val = 2 + ceil_log2(result);
    if (val < best.value) best = {val, BoundRule::alg3};
  }
  return best;
}

PuiseuxPoly delta1(const PuiseuxPoly& f) {
  PuiseuxPoly fx = partial_derivative(f, Var::x);
  PuiseuxPoly fy = partial_derivative(f, Var::y);
  PuiseuxPoly fxx = partial_derivative(fx, Var::x);
  PuiseuxPoly fxy = partial_derivative(fx, Var::y);
  PuiseuxPoly fyy = partial_derivative(fy, Var::y);
  PuiseuxPoly fxxy = partial_derivative(fxx, Var::y);
  PuiseuxPoly fxyy = partial_derivative(fxy, Var::y);
  PuiseuxPoly fx2 = fx * fx;
  PuiseuxPoly fy2 = fy * fy;
  return fx * fy2 * fxxy - fx2 * fy * fxyy + fxy * fx2 * fyy - fxy * fy2 * fxx;
}

bool is_cl1(const PuiseuxPoly& f) { return delta1(f).is_zero(); }

}  // namespace horncalc
