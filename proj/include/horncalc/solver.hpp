#pragma once

#include <array>
#include <optional>
#include <vector>

#include "horncalc/horn.hpp"
#include "horncalc/matrix.hpp"
#include "horncalc/puiseux.hpp"

namespace horncalc {

// The 2x2 subsystem picked by one pair (i, j) of A_hat rows.
struct PairSubsystem {
  std::size_t i = 0, j = 0;           // pair indices into A_hat
  std::array<IntVec2, 2> matrix;      // rows r_i, r_j
  std::array<Rational, 2> alpha, beta;
  RationalMatrix inverse;             // inverse * matrix == identity
};

enum class PairStatus { admissible, skipped_nonpolynomial, skipped_singular };

struct SupportReport {
  struct Entry {
    std::size_t i = 0, j = 0;
    PairStatus status = PairStatus::admissible;
    Support support;  // empty unless admissible
  };
  std::vector<Entry> entries;
  Support union_support;  // union of the admissible supports
};

struct SolutionBasis {
  std::vector<PuiseuxPoly> elements;
  // residual certificates: per element, the two operator-application
  // residuals x_j P_j(theta) f - Q_j(theta) f; all must be zero
  std::vector<std::array<PuiseuxPoly, 2>> residuals;

  bool certified() const {
    for (const auto& r : residuals)
      if (!r[0].is_zero() || !r[1].is_zero()) return false;
    return true;
  }
};

// Closed-form solution of a system defined by a parallelogram (exactly two
// divisor pairs): monomial * (1 + x^{u_1})^{n_1} (1 + x^{u_2})^{n_2} with
// u_i = -A_hat^{-1} e_i and monomial exponent -A_hat^{-1} alpha. Verified by
// operator application before returning.
PuiseuxPoly parallelogram_solution(const HornSystem& sys);

// Support construction over all A_hat row pairs (i < j). Singular pairs and
// pairs whose -alpha - beta is not a positive integer are reported, never
// silently dropped.
SupportReport candidate_supports(const HornSystem& sys);

// Exact recurrence solve with unknowns on S: for every j and every exponent
// point p in S or S + e_j, the coefficient of x^p in (x_j P_j(theta) -
// Q_j(theta)) f must vanish, with coefficients off S fixed at zero. Returns
// the nullspace basis; every element is certified by verify_solution.
SolutionBasis solve_on_support(const HornSystem& sys, const Support& s);

// Exact residuals x_j P_j(theta) f - Q_j(theta) f for j = 1, 2.
std::array<PuiseuxPoly, 2> verify_solution(const HornSystem& sys, const PuiseuxPoly& f);

bool is_solution(const HornSystem& sys, const PuiseuxPoly& f);

// Runs the recurrence solver on every admissible pair support (inflated by
// one lattice step per integer coset so truncation at the boundary would be
// detected), merges, removes rational-linear dependencies and certifies
// every element.
SolutionBasis full_polynomial_basis(const HornSystem& sys);

// Integer box support helper for explicit --box solves.
Support box_support(long smin, long smax, long tmin, long tmax);

}  // namespace horncalc
