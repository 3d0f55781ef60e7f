#pragma once

#include <set>
#include <string>
#include <vector>

#include "horncalc/horn.hpp"
#include "horncalc/puiseux.hpp"
#include "horncalc/unipoly.hpp"

namespace horncalc {

enum class BoundRule {
  alg1,
  alg3,
  theorem_raw,
  theorem_refined,
  line_support,
  theta,
  theta_product,
  delta1,
  cl0,
  manual,
};

std::string to_string(BoundRule rule);
BoundRule bound_rule_from_string(const std::string& name);

// Upper bound N with the meaning "the function lies in Cl_N", plus the rule
// that produced it.
struct ComplexityBound {
  long value = 0;
  BoundRule rule = BoundRule::manual;
};

// Normalized repeated-power base of one collinear slice: the slice equals
// monomial * content * base(w)^k where w steps along the direction. Anchor
// and scale are stripped, so equal structure on parallel lines compares equal.
struct ShortBase {
  Direction direction;
  UniPoly base;

  friend bool operator==(const ShortBase& a, const ShortBase& b) {
    return a.direction == b.direction && a.base == b.base;
  }
  friend bool operator<(const ShortBase& a, const ShortBase& b) {
    if (!(a.direction == b.direction)) return a.direction < b.direction;
    return a.base < b.base;
  }
};

struct EstimateVectors {
  std::vector<Rational> c_hat_sorted;  // ascending
  std::vector<long> v;                 // length k-1
};

struct ZonotopeBoundResult {
  ComplexityBound raw, refined;
  EstimateVectors vectors;
};

// Greedy pairing loop: repeatedly replace the two minima c_i <= c_j by
// c_j + 1. Order-independent by construction.
ComplexityBound sum_bound(const std::vector<long>& bounds);

// Cl_n -> Cl_{2n+1} under one affine theta operator.
long theta_bound(long n);

// Cl_n -> Cl_{2^k (n+1) - 1} under a product of k affine theta operators.
long theta_product_bound(long n, long k);

// smallest e with 2^e >= m; ceil_log2(1) = 0. Throws NonPositive for m < 1.
long ceil_log2(long m);

// The zonotope estimate: raw = min of the intersection-pairing and
// divisor-line bounds; refined feeds the per-pair v vector through the
// summation loop. Requires every c_hat positive integer and k >= 2.
ZonotopeBoundResult zonotope_bound(const ZonotopePairing& pairing);

// min over candidate directions of b + ceil_log2(#support lines), with b = 1
// for axis-parallel directions and 2 otherwise; 0 when the support has
// constant s or constant t.
ComplexityBound line_support_bound(const PuiseuxPoly& p);

// Repeated-power extraction for one collinear slice. Throws NonCollinear when
// the support is not collinear along the direction. Single points yield the
// constant base 1.
std::set<ShortBase> get_short(const PuiseuxPoly& slice, const Direction& direction);

// Slice-decomposition estimate over all candidate directions, min-ed with
// line_support_bound and the Cl_0 short-circuit.
ComplexityBound poly_bound(const PuiseuxPoly& p);

// The differential polynomial whose vanishing characterizes Cl_1 membership.
PuiseuxPoly delta1(const PuiseuxPoly& f);

// Support test: constant s or constant t.
bool is_cl0(const PuiseuxPoly& f);
bool is_cl1(const PuiseuxPoly& f);

// Candidate directions: primitive normalized difference vectors of support
// points with coordinates capped at 20 plus the two axes.
std::vector<Direction> candidate_directions(const Support& supp);

}  // namespace horncalc
