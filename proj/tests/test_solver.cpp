#include <doctest.h>

#include <random>

#include "horncalc/errors.hpp"
#include "horncalc/json_io.hpp"
#include "horncalc/solver.hpp"

using namespace horncalc;

namespace {

std::string fixture(const std::string& name) {
  return std::string(HORNCALC_FIXTURES_DIR) + "/" + name;
}

HornSystem load(const std::string& name) {
  return io::system_from_json(io::load_file(fixture(name)));
}

ExponentPoint ep(long s, long t) { return {Rational(s), Rational(t)}; }

// x (x+1)^9 y (y+1)^8 expanded
PuiseuxPoly corrected_parallelogram_solution() {
  PuiseuxPoly xpart = binomial_power({Rational(1), Rational(0)}, 9, {Rational(1), Rational(0)});
  PuiseuxPoly ypart = binomial_power({Rational(0), Rational(1)}, 8, {Rational(0), Rational(1)});
  return xpart * ypart;
}

bool proportional(const PuiseuxPoly& a, const PuiseuxPoly& b) {
  if (a.support() != b.support()) return false;
  if (a.is_zero()) return true;
  const auto& [e0, c0] = *a.terms().begin();
  Rational ratio = b.coeff(e0) / c0;
  for (const auto& [e, c] : a.terms())
    if (b.coeff(e) != ratio * c) return false;
  return true;
}

// target = sum of per-element rational multiples; the elements have disjoint
// supports (one recurrence component each)
bool reconstructs(const std::vector<PuiseuxPoly>& elements, const PuiseuxPoly& target) {
  PuiseuxPoly rebuilt;
  for (const PuiseuxPoly& e : elements) {
    const auto& [p0, c0] = *e.terms().begin();
    rebuilt = rebuilt + (target.coeff(p0) / c0) * e;
  }
  return rebuilt == target;
}

HornSystem random_zonotope(std::mt19937& rng, int max_pairs, long max_entry, long max_chat) {
  std::uniform_int_distribution<long> entry(-max_entry, max_entry), a(-5, 5), chat(1, max_chat);
  HornSystem sys;
  int k = 2 + int(rng() % max_pairs);
  for (int i = 0; i < k; ++i) {
    IntVec2 row{0, 0};
    while (row[0] == 0 && row[1] == 0) row = {entry(rng), entry(rng)};
    Rational alpha(a(rng));
    Rational beta = -alpha - Rational(chat(rng));
    sys.rows.push_back(row);
    sys.c.push_back(alpha);
    sys.rows.push_back({-row[0], -row[1]});
    sys.c.push_back(beta);
  }
  return sys;
}

}  // namespace

TEST_CASE("parallelogram closed form: corrected 90-term solution") {
  PuiseuxPoly sol = parallelogram_solution(load("parallelogram.json"));
  CHECK(sol.term_count() == 90);
  CHECK(sol == corrected_parallelogram_solution());
  Support supp = sol.support();
  for (const ExponentPoint& p : supp) {
    CHECK(p.s >= Rational(1));
    CHECK(p.s <= Rational(10));
    CHECK(p.t >= Rational(1));
    CHECK(p.t <= Rational(9));
  }
}

TEST_CASE("parallelogram closed form: unit square with c_hat = (1,1)") {
  HornSystem sys;
  sys.rows = {{1, 0}, {0, 1}, {0, -1}, {-1, 0}};
  sys.c = {Rational(-1), Rational(-1), Rational(0), Rational(0)};
  PuiseuxPoly sol = parallelogram_solution(sys);
  PuiseuxPoly x = PuiseuxPoly::monomial(Rational(1), ep(1, 0));
  PuiseuxPoly y = PuiseuxPoly::monomial(Rational(1), ep(0, 1));
  PuiseuxPoly one = PuiseuxPoly::constant(Rational(1));
  CHECK(sol == (x + one) * (y + one));
}

TEST_CASE("parallelogram error paths") {
  HornSystem half;
  half.rows = {{1, 0}, {0, 1}, {0, -1}, {-1, 0}};
  half.c = {Rational(-1, 2), Rational(-3), Rational(0), Rational(0)};
  CHECK_THROWS_AS(parallelogram_solution(half), NonPolynomialRegime);

  CHECK_THROWS_AS(parallelogram_solution(load("hexagon.json")), NotParallelogram);

  HornSystem singular;
  singular.rows = {{1, 0}, {2, 0}, {-2, 0}, {-1, 0}};
  singular.c = {Rational(-1), Rational(-1), Rational(0), Rational(0)};
  CHECK_THROWS_AS(parallelogram_solution(singular), SingularPair);
}

TEST_CASE("candidate supports: hexagon geometry") {
  SupportReport report = candidate_supports(load("hexagon.json"));
  REQUIRE(report.entries.size() == 3);
  for (const auto& e : report.entries) CHECK(e.status == PairStatus::admissible);

  // pair ((1,1),(1,0)): 2-line strip from (10,13)/(10,12) to (0,23)/(0,22)
  const Support& strip1 = report.entries[0].support;
  CHECK(strip1.size() == 22);
  CHECK(strip1.count(ep(10, 13)) == 1);
  CHECK(strip1.count(ep(10, 12)) == 1);
  CHECK(strip1.count(ep(0, 23)) == 1);
  CHECK(strip1.count(ep(0, 22)) == 1);
  for (const ExponentPoint& p : strip1) {
    Rational line = p.s + p.t;
    CHECK((line == Rational(22) || line == Rational(23)));
  }

  // pair ((1,1),(0,1)): 2-line strip from (14,9)/(13,9) to (23,0)/(22,0)
  const Support& strip2 = report.entries[1].support;
  CHECK(strip2.size() == 20);
  CHECK(strip2.count(ep(14, 9)) == 1);
  CHECK(strip2.count(ep(13, 9)) == 1);
  CHECK(strip2.count(ep(23, 0)) == 1);
  CHECK(strip2.count(ep(22, 0)) == 1);

  // pair ((1,0),(0,1)): the 11 x 10 block
  const Support& block = report.entries[2].support;
  CHECK(block.size() == 110);
  for (long s = 0; s <= 10; ++s)
    for (long t = 0; t <= 9; ++t) CHECK(block.count(ep(s, t)) == 1);

  CHECK(report.union_support.size() == 152);
}

TEST_CASE("candidate supports: per-pair sizes are (c_hat_i + 1)(c_hat_j + 1)") {
  for (const char* name : {"octagon.json", "decagon.json"}) {
    HornSystem sys = load(name);
    ZonotopePairing pairing = zonotope_pairing(sys);
    SupportReport report = candidate_supports(sys);
    for (const auto& entry : report.entries) {
      REQUIRE(entry.status == PairStatus::admissible);
      long n1 = pairing.c_hat[entry.i].to_long(), n2 = pairing.c_hat[entry.j].to_long();
      CHECK(entry.support.size() == static_cast<std::size_t>((n1 + 1) * (n2 + 1)));
    }
  }
  CHECK(candidate_supports(load("octagon.json")).entries.size() == 6);
  CHECK(candidate_supports(load("decagon.json")).entries.size() == 10);
}

TEST_CASE("candidate supports: non-polynomial pairs are reported, not dropped") {
  SupportReport report = candidate_supports(load("hexagon_resonant.json"));
  REQUIRE(report.entries.size() == 3);
  CHECK(report.entries[0].status == PairStatus::skipped_nonpolynomial);
  CHECK(report.entries[1].status == PairStatus::skipped_nonpolynomial);
  // pair ((1,0),(0,1)) has c_hat = (0, 0): still not a positive integer
  CHECK(report.entries[2].status == PairStatus::skipped_nonpolynomial);
}

TEST_CASE("solve_on_support: parallelogram box") {
  HornSystem sys = load("parallelogram.json");
  SolutionBasis basis = solve_on_support(sys, box_support(-1, 12, -1, 12));
  REQUIRE(basis.elements.size() == 1);
  CHECK(basis.elements[0].term_count() == 90);
  CHECK(basis.certified());
  CHECK(proportional(basis.elements[0], corrected_parallelogram_solution()));
  CHECK(proportional(parallelogram_solution(sys), basis.elements[0]));
}

TEST_CASE("solve_on_support: pentagon box spans the printed basis") {
  HornSystem sys = load("pentagon.json");
  SolutionBasis basis = solve_on_support(sys, box_support(0, 5, 0, 5));
  CHECK(basis.elements.size() == 4);
  CHECK(basis.certified());
  for (int i = 1; i <= 4; ++i) {
    PuiseuxPoly printed =
        io::poly_from_json(io::load_file(fixture("pentagon_basis" + std::to_string(i) + ".json")));
    CHECK(is_solution(sys, printed));
  }
}

TEST_CASE("solve_on_support: triangle box contains the printed monomials") {
  HornSystem sys = load("triangle.json");
  SolutionBasis basis = solve_on_support(sys, box_support(-5, 9, -5, 5));
  CHECK(basis.certified());
  std::vector<ExponentPoint> monos{ep(-4, 4), ep(-2, 3), ep(7, -3), ep(8, -4)};
  for (const ExponentPoint& m : monos) {
    bool found = false;
    for (const PuiseuxPoly& e : basis.elements)
      if (e.term_count() == 1 && e.terms().begin()->first == m) found = true;
    CHECK(found);
  }
}

TEST_CASE("verify_solution: pentagon basis and a non-solution") {
  HornSystem sys = load("pentagon.json");
  PuiseuxPoly one = PuiseuxPoly::constant(Rational(1));
  auto residuals = verify_solution(sys, one);
  CHECK(residuals[0] == PuiseuxPoly::monomial(Rational(4), ep(1, 0)));

  PuiseuxPoly b2 = io::poly_from_json(io::load_file(fixture("pentagon_basis2.json")));
  CHECK(is_solution(sys, b2));
}

TEST_CASE("verify_solution: decagon monomial") {
  HornSystem sys = load("decagon.json");
  PuiseuxPoly m = PuiseuxPoly::monomial(Rational(1), ep(6, -9));
  CHECK(is_solution(sys, m));
}

TEST_CASE("full basis sizes match the holonomic rank on the zonotope fixtures") {
  CHECK(full_polynomial_basis(load("parallelogram.json")).elements.size() == 1);
  CHECK(full_polynomial_basis(load("hexagon.json")).elements.size() == 3);
  CHECK(full_polynomial_basis(load("octagon.json")).elements.size() == 31);
  CHECK(full_polynomial_basis(load("decagon.json")).elements.size() == 34);
}

TEST_CASE("every returned element passes operator verification") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    HornSystem sys = random_zonotope(rng, 2, 2, 3);
    SolutionBasis basis = full_polynomial_basis(sys);
    CHECK(basis.certified());
    for (const PuiseuxPoly& e : basis.elements) CHECK(is_solution(sys, e));
  }
}

TEST_CASE("parallelogram closed form agrees with the recurrence solver") {
  std::mt19937 rng(43);
  int done = 0;
  while (done < 20) {
    HornSystem sys = random_zonotope(rng, 1, 2, 3);  // exactly k = 2
    PuiseuxPoly closed;
    try {
      closed = parallelogram_solution(sys);
    } catch (const SingularPair&) {
      continue;
    }
    ++done;
    // the recurrence graph may split the support into independent components
    // when a row entry exceeds 1; the closed form is then the sum of one
    // rational multiple per component
    SolutionBasis basis = solve_on_support(sys, closed.support());
    REQUIRE(!basis.elements.empty());
    CHECK(basis.certified());
    CHECK(reconstructs(basis.elements, closed));
    if (basis.elements.size() == 1) CHECK(proportional(basis.elements[0], closed));
  }
}
