#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "horncalc/puiseux.hpp"
#include "horncalc/rational.hpp"

namespace horncalc {

using IntVec2 = std::array<long, 2>;

// Bivariate Horn system: integer row matrix A (rows A_i) and rational
// parameter vector c, one entry per row. The system is the pair of equations
// x_j P_j(theta) f = Q_j(theta) f with the factor products listed below.
struct HornSystem {
  std::vector<IntVec2> rows;
  std::vector<Rational> c;

  std::size_t row_count() const { return rows.size(); }
  void validate() const;  // sizes match, m >= 1, no all-zero rows
};

// Factor lists of one equation. P collects one affine factor per row with
// A_ij > 0 and offset l in 0..A_ij-1; Q the same for A_ij < 0. Factors are
// never expanded into dense polynomials: evaluation is always pointwise.
struct HornOperator {
  int j = 1;  // variable index, 1 or 2
  std::vector<AffineForm> P, Q;

  Rational eval_P(const ExponentPoint& p) const;
  Rational eval_Q(const ExponentPoint& p) const;
};

// Matching of the rows into +/- pairs: A[pair.minus] == -A[pair.plus].
// A_hat keeps the rows at the plus indices; c_hat_i = -alpha_i - beta_i.
struct ZonotopePairing {
  struct Pair {
    std::size_t plus = 0, minus = 0;
  };
  std::vector<Pair> pairs;
  std::vector<IntVec2> a_hat;
  std::vector<Rational> alpha, beta, c_hat;
  // true when duplicate rows admit other matchings; individual c_hat entries
  // (not their sum) can depend on the matching in that case
  bool alternative_matchings = false;

  std::size_t k() const { return pairs.size(); }
};

// Integer convex polygon with outer normals given by the rows. Sides carry
// the primitive tangent l_i and the multiplicity k_i; vertices are listed
// counterclockwise from the bottom-left vertex, translated into the first
// quadrant so both axes are touched.
struct LatticePolygon {
  struct Side {
    IntVec2 normal;   // primitive outer normal direction
    IntVec2 tangent;  // primitive tangent l_i = rot90(normal)
    long multiplicity = 1;
  };
  std::vector<Side> sides;
  std::vector<IntVec2> vertices;
  // one segment k_i * l_i per +/- pair when the system is a zonotope
  std::vector<IntVec2> minkowski_segments;
};

// rank = d1*d2 - sum nu_ij over linearly dependent row pairs lying in
// opposite open quadrants.
struct RankBreakdown {
  long d1 = 0, d2 = 0;
  struct Correction {
    std::size_t i = 0, j = 0;
    long nu = 0;
  };
  std::vector<Correction> corrections;
  long rank = 0;
};

// One Gamma(<vector, (s,t)> + constant)^multiplicity factor of an Ore-Sato
// coefficient product.
struct GammaFactor {
  IntVec2 vector{0, 0};
  Rational constant;
  long multiplicity = 1;
};

HornOperator build_operator(const HornSystem& sys, int j);

bool is_nonconfluent(const HornSystem& sys);

// Greedy matching by ascending row index; throws NotZonotope when the row
// multiset is not symmetric under negation.
ZonotopePairing zonotope_pairing(const HornSystem& sys);

// Throws NotNonconfluent when the rows do not sum to zero.
LatticePolygon polygon(const HornSystem& sys);

RankBreakdown holonomic_rank(const HornSystem& sys);

// true iff every c_hat_i is a positive integer
bool is_polynomial_regime(const ZonotopePairing& pairing);

HornSystem from_gamma_products(const std::vector<GammaFactor>& factors);

}  // namespace horncalc
