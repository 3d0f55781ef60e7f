#include <doctest.h>

#include <random>

#include "horncalc/errors.hpp"
#include "horncalc/puiseux.hpp"

using namespace horncalc;

namespace {

ExponentPoint ep(long s, long t) { return {Rational(s), Rational(t)}; }
ExponentPoint ep(const Rational& s, const Rational& t) { return {s, t}; }

PuiseuxPoly random_poly(std::mt19937& rng, int max_terms, int max_exp) {
  std::uniform_int_distribution<long> e(0, max_exp), c(-5, 5);
  PuiseuxPoly p;
  int terms = 1 + int(rng() % max_terms);
  for (int i = 0; i < terms; ++i) p.add_term(ep(e(rng), e(rng)), Rational(c(rng)));
  return p;
}

}  // namespace

TEST_CASE("ring operations") {
  PuiseuxPoly x = PuiseuxPoly::monomial(Rational(1), ep(1, 0));
  PuiseuxPoly y = PuiseuxPoly::monomial(Rational(1), ep(0, 1));
  CHECK((x + (-x)).is_zero());

  PuiseuxPoly half = PuiseuxPoly::monomial(Rational(1), ep(Rational(1, 2), Rational(0)));
  CHECK(half * half == x);

  PuiseuxPoly one = PuiseuxPoly::constant(Rational(1));
  PuiseuxPoly prod = (one + x) * (one + y);
  CHECK(prod.term_count() == 4);
  CHECK(prod.coeff(ep(1, 1)) == Rational(1));
  CHECK(prod.coeff(ep(0, 0)) == Rational(1));
}

TEST_CASE("mul is commutative and associative, distributes over add") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    PuiseuxPoly a = random_poly(rng, 5, 4);
    PuiseuxPoly b = random_poly(rng, 5, 4);
    PuiseuxPoly c = random_poly(rng, 5, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("apply_affine_theta") {
  PuiseuxPoly x2y = PuiseuxPoly::monomial(Rational(1), ep(2, 1));
  CHECK(apply_affine_theta({Rational(1), Rational(0), Rational(0)}, x2y) ==
        PuiseuxPoly::monomial(Rational(2), ep(2, 1)));

  PuiseuxPoly m = PuiseuxPoly::monomial(Rational(1), ep(10, 13));
  CHECK(apply_affine_theta({Rational(1), Rational(1), Rational(-23)}, m).is_zero());

  PuiseuxPoly x = PuiseuxPoly::monomial(Rational(1), ep(1, 0));
  PuiseuxPoly y = PuiseuxPoly::monomial(Rational(1), ep(0, 1));
  PuiseuxPoly got = apply_affine_theta({Rational(2), Rational(3), Rational(-4)}, x + y);
  PuiseuxPoly want = PuiseuxPoly::monomial(Rational(-2), ep(1, 0)) +
                     PuiseuxPoly::monomial(Rational(-1), ep(0, 1));
  CHECK(got == want);
}

TEST_CASE("apply_affine_theta is linear and never grows the support") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    AffineForm f{Rational(c(rng)), Rational(c(rng)), Rational(c(rng))};
    PuiseuxPoly p = random_poly(rng, 6, 5);
    PuiseuxPoly q = random_poly(rng, 6, 5);
    Rational r(c(rng));
    CHECK(apply_affine_theta(f, p + q) == apply_affine_theta(f, p) + apply_affine_theta(f, q));
    CHECK(apply_affine_theta(f, r * p) == r * apply_affine_theta(f, p));
    Support before = p.support(), after = apply_affine_theta(f, p).support();
    CHECK(std::includes(before.begin(), before.end(), after.begin(), after.end()));
  }
}

TEST_CASE("apply_theta_product") {
  PuiseuxPoly p = PuiseuxPoly::monomial(Rational(3), ep(2, 5));
  CHECK(apply_theta_product({}, p) == p);

  std::vector<AffineForm> single{{Rational(1), Rational(2), Rational(-3)}};
  CHECK(apply_theta_product(single, p) == apply_affine_theta(single[0], p));

  std::mt19937 rng(9);
  std::vector<AffineForm> fwd{{Rational(1), Rational(0), Rational(0)},
                              {Rational(0), Rational(1), Rational(0)}};
  std::vector<AffineForm> rev{fwd[1], fwd[0]};
  for (int trial = 0; trial < 20; ++trial) {
    PuiseuxPoly q = random_poly(rng, 6, 5);
    CHECK(apply_theta_product(fwd, q) == apply_theta_product(rev, q));
  }
}

TEST_CASE("partial derivatives with rational exponents") {
  PuiseuxPoly root = PuiseuxPoly::monomial(Rational(1), ep(Rational(1, 2), Rational(0)));
  PuiseuxPoly d = partial_derivative(root, Var::x);
  CHECK(d == PuiseuxPoly::monomial(Rational(1, 2), ep(Rational(-1, 2), Rational(0))));

  PuiseuxPoly f = PuiseuxPoly::monomial(Rational(1), ep(1, 0)) +
                  PuiseuxPoly::monomial(Rational(1), ep(0, 2));
  CHECK(partial_derivative(f, Var::y) == PuiseuxPoly::monomial(Rational(2), ep(0, 1)));
  CHECK(partial_derivative(PuiseuxPoly::constant(Rational(5)), Var::x).is_zero());
}

TEST_CASE("binomial_power") {
  PuiseuxPoly p = binomial_power(ep(-1, 0), 2, ep(0, 0));
  CHECK(p.coeff(ep(0, 0)) == Rational(1));
  CHECK(p.coeff(ep(-1, 0)) == Rational(2));
  CHECK(p.coeff(ep(-2, 0)) == Rational(1));
  CHECK(p.term_count() == 3);

  CHECK(binomial_power(ep(3, 1), 0, ep(2, 7)) == PuiseuxPoly::monomial(Rational(1), ep(2, 7)));

  PuiseuxPoly q = binomial_power(ep(-1, 1), 10, ep(0, 0));
  CHECK(q.term_count() == 11);
  Rational sum(0);
  mpz_class check_sum = 0;
  for (const auto& [e, c] : q.terms()) sum += c;
  CHECK(sum == Rational(1024));  // 2^10 at x = y = 1
  CHECK(q.coeff(ep(-3, 3)) == Rational(120));  // C(10,3)
}

TEST_CASE("binomial_power term count and coefficient sum properties") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> e(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    ExponentPoint u = ep(e(rng), e(rng));
    if (u.s.is_zero() && u.t.is_zero()) continue;
    unsigned n = rng() % 8;
    PuiseuxPoly p = binomial_power(u, n, ep(e(rng), e(rng)));
    CHECK(p.term_count() == n + 1);
    Rational sum(0);
    for (const auto& [pt, c] : p.terms()) sum += c;
    mpz_class want = 1;
    mpz_mul_2exp(want.get_mpz_t(), want.get_mpz_t(), n);
    CHECK(sum == Rational(want));
  }
}

TEST_CASE("normalize_direction") {
  CHECK(normalize_direction(Rational(2), Rational(-2)) == Direction{1, -1});
  CHECK(normalize_direction(Rational(-1, 3), Rational(1, 2)) == Direction{2, -3});
  CHECK(normalize_direction(Rational(0), Rational(-4)) == Direction{0, 1});
  CHECK_THROWS_AS(normalize_direction(Rational(0), Rational(0)), Error);
}

TEST_CASE("lines_partition") {
  Support supp{ep(0, 0), ep(1, 1), ep(2, 0)};
  auto lines = lines_partition(supp, {1, 1});
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == Support{ep(0, 0), ep(1, 1)});
  CHECK(lines[1] == Support{ep(2, 0)});

  // direction (1,0) groups by t
  Support grid;
  for (long s = 0; s <= 10; ++s)
    for (long t = 0; t <= 9; ++t) grid.insert(ep(s, t));
  auto rows = lines_partition(grid, {1, 0});
  CHECK(rows.size() == 10);
  for (const Support& row : rows) {
    CHECK(row.size() == 11);
    const Rational& t0 = row.begin()->t;
    for (const ExponentPoint& p : row) CHECK(p.t == t0);
  }

  CHECK_THROWS_AS(lines_partition(supp, {2, 2}), Error);   // not primitive
  CHECK_THROWS_AS(lines_partition(supp, {-1, 0}), Error);  // not normalized
}
