#include <doctest.h>

#include <random>

#include "horncalc/errors.hpp"
#include "horncalc/matrix.hpp"
#include "horncalc/rational.hpp"
#include "horncalc/unipoly.hpp"

using namespace horncalc;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::parse("12/8").str() == "3/2");
  CHECK(Rational::parse("-9").str() == "-9");
  CHECK(Rational::parse("-9").is_integer());
  CHECK(Rational::parse("5/1").str() == "5");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(Rational(7, 3).is_integer() == false);
  CHECK(Rational(9, 3).is_positive_integer());
  CHECK(Rational(-9, 3).is_positive_integer() == false);
  CHECK_THROWS_AS(a / Rational(0), Error);
}

TEST_CASE("rational gcd") {
  CHECK(rational_gcd(Rational(4), Rational(6)) == Rational(2));
  CHECK(rational_gcd(Rational(1, 2), Rational(1, 3)) == Rational(1, 6));
  CHECK(rational_gcd(Rational(0), Rational(-5)) == Rational(5));
}

TEST_CASE("nullspace single equation") {
  RationalMatrix m(1, 2);
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(1);
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == Rational(-1));
  CHECK(basis[0][1] == Rational(1));
}

TEST_CASE("nullspace of identity is trivial") {
  CHECK(nullspace(RationalMatrix::identity(2)).empty());
}

TEST_CASE("nullspace of duplicated rows") {
  RationalMatrix m(2, 2);
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(2);
  m.at(1, 0) = Rational(2);
  m.at(1, 1) = Rational(4);
  auto basis = nullspace(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == Rational(-2));
  CHECK(basis[0][1] == Rational(1));
}

TEST_CASE("nullspace vectors substituted into the matrix give zero") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(coeff(rng));
    for (const auto& v : nullspace(m)) {
      for (std::size_t i = 0; i < rows; ++i) {
        Rational dot(0);
        for (std::size_t j = 0; j < cols; ++j) dot += m.at(i, j) * v[j];
        CHECK(dot.is_zero());
      }
    }
  }
}

TEST_CASE("inverse2x2") {
  RationalMatrix m(2, 2);
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(1);
  m.at(1, 0) = Rational(1);
  m.at(1, 1) = Rational(0);
  RationalMatrix inv = inverse2x2(m);
  CHECK(inv.at(0, 0) == Rational(0));
  CHECK(inv.at(0, 1) == Rational(1));
  CHECK(inv.at(1, 0) == Rational(1));
  CHECK(inv.at(1, 1) == Rational(-1));
  CHECK(m * inv == RationalMatrix::identity(2));

  CHECK(inverse2x2(RationalMatrix::identity(2)) == RationalMatrix::identity(2));

  RationalMatrix sing(2, 2);
  sing.at(0, 0) = Rational(1);
  sing.at(0, 1) = Rational(1);
  sing.at(1, 0) = Rational(2);
  sing.at(1, 1) = Rational(2);
  CHECK_THROWS_AS(inverse2x2(sing), SingularMatrix);
}

namespace {

UniPoly wpow(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.push_back(Rational(x));
  return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("unipoly basics") {
  UniPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  UniPoly p = wpow({1, 2, 1});  // (w+1)^2
  CHECK(p.degree() == 2);
  CHECK(p.derivative() == wpow({2, 2}));
  CHECK((wpow({0, 1}) * wpow({1, 1})) == wpow({0, 1, 1}));
  CHECK(gcd(wpow({1, 2, 1}), wpow({1, 1})) == wpow({1, 1}));
  CHECK(gcd(wpow({-2, -2}), wpow({2, 2})) == wpow({1, 1}));
}

TEST_CASE("squarefree decomposition examples") {
  // w^2 - 2w + 1
  auto f1 = squarefree_decomposition(wpow({1, -2, 1}));
  REQUIRE(f1.size() == 1);
  CHECK(f1[0].factor == wpow({-1, 1}));
  CHECK(f1[0].multiplicity == 2);

  // w^5 + w^4 -> (w, 4), (w+1, 1)
  auto f2 = squarefree_decomposition(wpow({0, 0, 0, 0, 1, 1}));
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].factor == wpow({0, 1}));
  CHECK(f2[0].multiplicity == 4);
  CHECK(f2[1].factor == wpow({1, 1}));
  CHECK(f2[1].multiplicity == 1);

  // w^3 + 1 is squarefree: gcd with derivative is constant
  UniPoly w31 = wpow({1, 0, 0, 1});
  CHECK(gcd(w31, w31.derivative()).degree() == 0);
  auto f3 = squarefree_decomposition(w31);
  REQUIRE(f3.size() == 1);
  CHECK(f3[0].factor == w31);
  CHECK(f3[0].multiplicity == 1);

  CHECK_THROWS_AS(squarefree_decomposition(UniPoly()), ZeroPolynomial);
}

TEST_CASE("squarefree factors are squarefree and pairwise coprime") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    // product of small random factors with random multiplicities
    UniPoly u = UniPoly::one();
    int parts = 1 + int(rng() % 3);
    for (int i = 0; i < parts; ++i) {
      UniPoly f = wpow({coeff(rng), coeff(rng), 1});
      int mult = 1 + int(rng() % 3);
      for (int m = 0; m < mult; ++m) u = u * f;
    }
    auto factors = squarefree_decomposition(u);
    UniPoly rebuilt = UniPoly::constant(squarefree_content(u, factors));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      CHECK(gcd(factors[i].factor, factors[i].factor.derivative()).degree() == 0);
      for (std::size_t j = i + 1; j < factors.size(); ++j)
        CHECK(gcd(factors[i].factor, factors[j].factor).degree() == 0);
      for (int m = 0; m < factors[i].multiplicity; ++m) rebuilt = rebuilt * factors[i].factor;
    }
    CHECK(rebuilt == u);
  }
}

TEST_CASE("power base examples") {
  // (w+1)^4
  UniPoly p = wpow({1, 1}) * wpow({1, 1}) * wpow({1, 1}) * wpow({1, 1});
  PowerBase pb = power_base(p);
  CHECK(pb.base == wpow({1, 1}));
  CHECK(pb.exponent == 4);
  CHECK(pb.content == Rational(1));

  // w^4 (w+1)^2 -> base w^3 + w^2, k = 2
  UniPoly q = wpow({0, 0, 0, 0, 1}) * wpow({1, 2, 1});
  PowerBase qb = power_base(q);
  CHECK(qb.base == wpow({0, 0, 1, 1}));
  CHECK(qb.exponent == 2);
  CHECK(qb.content == Rational(1));

  PowerBase cb = power_base(wpow({1, 0, 0, 1}));
  CHECK(cb.base == wpow({1, 0, 0, 1}));
  CHECK(cb.exponent == 1);

  PowerBase constant = power_base(UniPoly::constant(Rational(-7)));
  CHECK(constant.base == UniPoly::one());
  CHECK(constant.content == Rational(-7));
}

TEST_CASE("power base reconstruction holds exactly") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> c;
    int deg = 1 + int(rng() % 4);
    for (int i = 0; i <= deg; ++i) c.push_back(Rational(coeff(rng)));
    UniPoly base(std::move(c));
    if (base.degree() < 1) continue;
    int k = 1 + int(rng() % 3);
    UniPoly u = UniPoly::one();
    for (int i = 0; i < k; ++i) u = u * base;
    PowerBase pb = power_base(u);
    UniPoly rebuilt = UniPoly::constant(pb.content);
    for (int i = 0; i < pb.exponent; ++i) rebuilt = rebuilt * pb.base;
    CHECK(rebuilt == u);
    CHECK(pb.exponent % k == 0);  // at least as fine as the constructed power
  }
}
