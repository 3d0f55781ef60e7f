#include "horncalc/solver.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "horncalc/errors.hpp"

namespace horncalc {

namespace {

RationalMatrix pair_matrix(const IntVec2& ri, const IntVec2& rj) {
  RationalMatrix m(2, 2);
  m.at(0, 0) = Rational(ri[0]);
  m.at(0, 1) = Rational(ri[1]);
  m.at(1, 0) = Rational(rj[0]);
  m.at(1, 1) = Rational(rj[1]);
  return m;
}

// -A^{-1} * v for a column 2-vector v
ExponentPoint neg_apply(const RationalMatrix& inv, const Rational& v0, const Rational& v1) {
  return {-(inv.at(0, 0) * v0 + inv.at(0, 1) * v1), -(inv.at(1, 0) * v0 + inv.at(1, 1) * v1)};
}

Support pair_support(const RationalMatrix& inv, const std::array<Rational, 2>& alpha,
                     long n1, long n2) {
  Support s;
  for (long k1 = 0; k1 <= n1; ++k1)
    for (long k2 = 0; k2 <= n2; ++k2)
      s.insert(neg_apply(inv, alpha[0] + Rational(k1), alpha[1] + Rational(k2)));
  return s;
}

ExponentPoint fractional_part(const ExponentPoint& p) {
  return {p.s - Rational(mpz_class(p.s.floor())), p.t - Rational(mpz_class(p.t.floor()))};
}

// Inflate the support by one lattice step in each direction, per integer
// coset: the extra ring certifies that solutions genuinely vanish at the
// boundary instead of being truncated there.
Support inflate_support(const Support& s) {
  std::map<std::pair<Rational, Rational>, std::vector<ExponentPoint>> cosets;
  for (const ExponentPoint& p : s) {
    ExponentPoint f = fractional_part(p);
    cosets[{f.s, f.t}].push_back(p);
  }
  Support out;
  for (const auto& [key, pts] : cosets) {
    const ExponentPoint& rep = pts.front();
    long smin = 0, smax = 0, tmin = 0, tmax = 0;
    bool first = true;
    for (const ExponentPoint& p : pts) {
      long ds = (p.s - rep.s).to_long();
      long dt = (p.t - rep.t).to_long();
      if (first) {
        smin = smax = ds;
        tmin = tmax = dt;
        first = false;
      } else {
        smin = std::min(smin, ds);
        smax = std::max(smax, ds);
        tmin = std::min(tmin, dt);
        tmax = std::max(tmax, dt);
      }
    }
    for (long a = smin - 1; a <= smax + 1; ++a)
      for (long b = tmin - 1; b <= tmax + 1; ++b)
        out.insert({rep.s + Rational(a), rep.t + Rational(b)});
  }
  return out;
}

}  // namespace

Support box_support(long smin, long smax, long tmin, long tmax) {
  if (smin > smax || tmin > tmax) throw ParseError("empty solve box");
  Support s;
  for (long a = smin; a <= smax; ++a)
    for (long b = tmin; b <= tmax; ++b) s.insert({Rational(a), Rational(b)});
  return s;
}

SupportReport candidate_supports(const HornSystem& sys) {
  ZonotopePairing pairing = zonotope_pairing(sys);
  SupportReport report;
  for (std::size_t i = 0; i < pairing.k(); ++i) {
    for (std::size_t j = i + 1; j < pairing.k(); ++j) {
      SupportReport::Entry entry;
      entry.i = i;
      entry.j = j;
      RationalMatrix m = pair_matrix(pairing.a_hat[i], pairing.a_hat[j]);
      std::array<Rational, 2> alpha{pairing.alpha[i], pairing.alpha[j]};
      Rational n1 = pairing.c_hat[i], n2 = pairing.c_hat[j];
      Rational det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
      if (det.is_zero()) {
        entry.status = PairStatus::skipped_singular;
      } else if (!n1.is_positive_integer() || !n2.is_positive_integer()) {
        entry.status = PairStatus::skipped_nonpolynomial;
      } else {
        entry.status = PairStatus::admissible;
        entry.support = pair_support(inverse2x2(m), alpha, n1.to_long(), n2.to_long());
        report.union_support.insert(entry.support.begin(), entry.support.end());
      }
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

std::array<PuiseuxPoly, 2> verify_solution(const HornSystem& sys, const PuiseuxPoly& f) {
  std::array<PuiseuxPoly, 2> residuals;
  for (int j = 1; j <= 2; ++j) {
    HornOperator op = build_operator(sys, j);
    PuiseuxPoly lhs = apply_theta_product(op.P, f);
    ExponentPoint ej{Rational(j == 1 ? 1 : 0), Rational(j == 1 ? 0 : 1)};
    lhs = lhs.shifted(ej);
    PuiseuxPoly rhs = apply_theta_product(op.Q, f);
    residuals[j - 1] = lhs - rhs;
  }
  return residuals;
}

bool is_solution(const HornSystem& sys, const PuiseuxPoly& f) {
  auto r = verify_solution(sys, f);
  return r[0].is_zero() && r[1].is_zero();
}

PuiseuxPoly parallelogram_solution(const HornSystem& sys) {
  ZonotopePairing pairing = zonotope_pairing(sys);
  if (pairing.k() != 2) throw NotParallelogram();
  RationalMatrix m = pair_matrix(pairing.a_hat[0], pairing.a_hat[1]);
  Rational det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  if (det.is_zero()) throw SingularPair();
  if (!pairing.c_hat[0].is_positive_integer() || !pairing.c_hat[1].is_positive_integer())
    throw NonPolynomialRegime();

  RationalMatrix inv = inverse2x2(m);
  ExponentPoint mono = neg_apply(inv, pairing.alpha[0], pairing.alpha[1]);
  ExponentPoint u1 = neg_apply(inv, Rational(1), Rational(0));
  ExponentPoint u2 = neg_apply(inv, Rational(0), Rational(1));
  unsigned n1 = static_cast<unsigned>(pairing.c_hat[0].to_long());
  unsigned n2 = static_cast<unsigned>(pairing.c_hat[1].to_long());

  PuiseuxPoly sol = binomial_power(u1, n1, mono) * binomial_power(u2, n2, {Rational(0), Rational(0)});
  if (!is_solution(sys, sol))
    throw Error("parallelogram closed form failed operator verification");
  return sol;
}

SolutionBasis solve_on_support(const HornSystem& sys, const Support& s) {
  sys.validate();
  SolutionBasis basis;
  if (s.empty()) return basis;

  HornOperator ops[2] = {build_operator(sys, 1), build_operator(sys, 2)};
  const ExponentPoint unit[2] = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};

  // Each recurrence constraint P_j(q - e_j) c_{q-e_j} = Q_j(q) c_q couples at
  // most two unknowns. Connected components over the invertible couplings
  // carry one degree of freedom each; a component survives iff the propagated
  // assignment satisfies every constraint incident to it.
  std::set<ExponentPoint> visited;
  for (const ExponentPoint& seed : s) {
    if (visited.count(seed)) continue;

    std::map<ExponentPoint, Rational> value;
    value[seed] = Rational(1);
    std::queue<ExponentPoint> frontier;
    frontier.push(seed);
    visited.insert(seed);
    while (!frontier.empty()) {
      ExponentPoint p = frontier.front();
      frontier.pop();
      for (int j = 0; j < 2; ++j) {
        ExponentPoint up = p + unit[j];
        if (s.count(up) && !visited.count(up)) {
          Rational num = ops[j].eval_P(p), den = ops[j].eval_Q(up);
          if (!num.is_zero() && !den.is_zero()) {
            value[up] = num / den * value[p];
            visited.insert(up);
            frontier.push(up);
          }
        }
        ExponentPoint down = p - unit[j];
        if (s.count(down) && !visited.count(down)) {
          Rational num = ops[j].eval_Q(p), den = ops[j].eval_P(down);
          if (!num.is_zero() && !den.is_zero()) {
            value[down] = num / den * value[p];
            visited.insert(down);
            frontier.push(down);
          }
        }
      }
    }

    // check every constraint that touches the component; off-component
    // coefficients contribute nothing (their multiplier is zero or they are
    // off the support)
    auto val = [&](const ExponentPoint& p) -> Rational {
      auto it = value.find(p);
      return it == value.end() ? Rational(0) : it->second;
    };
    bool consistent = true;
    for (const auto& [p, v] : value) {
      for (int j = 0; j < 2 && consistent; ++j) {
        ExponentPoint q1 = p;  // couples p-e_j with p
        ExponentPoint q2 = p + unit[j];
        Rational r1 = ops[j].eval_P(q1 - unit[j]) * val(q1 - unit[j]) - ops[j].eval_Q(q1) * val(q1);
        Rational r2 = ops[j].eval_P(q2 - unit[j]) * val(q2 - unit[j]) - ops[j].eval_Q(q2) * val(q2);
        if (!r1.is_zero() || !r2.is_zero()) consistent = false;
      }
      if (!consistent) break;
    }
    if (!consistent) continue;

    PuiseuxPoly element;
    for (const auto& [p, v] : value) element.add_term(p, v);
    basis.elements.push_back(std::move(element));
  }

  for (const PuiseuxPoly& e : basis.elements) basis.residuals.push_back(verify_solution(sys, e));
  return basis;
}

namespace {

// Keep the first maximal linearly independent subset, reducing coefficient
// vectors in canonical term order.
std::vector<std::size_t> independent_subset(const std::vector<PuiseuxPoly>& elements) {
  std::map<ExponentPoint, std::size_t> column;
  for (const PuiseuxPoly& e : elements)
    for (const auto& [p, c] : e.terms()) column.emplace(p, 0);
  std::size_t idx = 0;
  for (auto& [p, col] : column) col = idx++;

  std::vector<std::vector<Rational>> pivots;  // reduced rows
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> kept;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    std::vector<Rational> row(column.size(), Rational(0));
    for (const auto& [p, c] : elements[e].terms()) row[column[p]] = c;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Rational& lead = row[pivot_cols[r]];
      if (lead.is_zero()) continue;
      Rational f = lead;
      for (std::size_t c = 0; c < row.size(); ++c) row[c] -= f * pivots[r][c];
    }
    std::size_t lead = row.size();
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_zero()) {
        lead = c;
        break;
      }
    }
    if (lead == row.size()) continue;  // dependent
    Rational f = row[lead];
    for (std::size_t c = 0; c < row.size(); ++c) row[c] /= f;
    pivots.push_back(std::move(row));
    pivot_cols.push_back(lead);
    kept.push_back(e);
  }
  return kept;
}

}  // namespace

SolutionBasis full_polynomial_basis(const HornSystem& sys) {
  SupportReport report = candidate_supports(sys);
  std::vector<PuiseuxPoly> found;
  for (const auto& entry : report.entries) {
    if (entry.status != PairStatus::admissible) continue;
    SolutionBasis partial = solve_on_support(sys, inflate_support(entry.support));
    for (PuiseuxPoly& e : partial.elements) found.push_back(std::move(e));
  }
  SolutionBasis basis;
  for (std::size_t i : independent_subset(found)) basis.elements.push_back(found[i]);
  for (const PuiseuxPoly& e : basis.elements) basis.residuals.push_back(verify_solution(sys, e));
  return basis;
}

}  // namespace horncalc
