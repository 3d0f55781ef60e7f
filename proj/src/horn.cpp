#include "horncalc/horn.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "horncalc/errors.hpp"

namespace horncalc {

namespace {

IntVec2 rot90(const IntVec2& v) { return {-v[1], v[0]}; }

IntVec2 primitive(const IntVec2& v) {
  long g = std::gcd(v[0], v[1]);
  return {v[0] / g, v[1] / g};
}

long content(const IntVec2& v) { return std::gcd(v[0], v[1]); }

// Angle order on nonzero integer vectors, counterclockwise from the positive
// x-axis.
bool angle_less(const IntVec2& a, const IntVec2& b) {
  auto half = [](const IntVec2& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  long cross = a[0] * b[1] - a[1] * b[0];
  if (cross != 0) return cross > 0;
  return false;
}

}  // namespace

void HornSystem::validate() const {
  if (rows.empty()) throw ParseError("system needs at least one row");
  if (rows.size() != c.size()) throw ParseError("row and parameter counts differ");
  for (const IntVec2& r : rows)
    if (r[0] == 0 && r[1] == 0) throw ParseError("all-zero row");
}

Rational HornOperator::eval_P(const ExponentPoint& p) const {
  Rational v(1);
  for (const AffineForm& f : P) v *= f.eval(p);
  return v;
}

Rational HornOperator::eval_Q(const ExponentPoint& p) const {
  Rational v(1);
  for (const AffineForm& f : Q) v *= f.eval(p);
  return v;
}

HornOperator build_operator(const HornSystem& sys, int j) {
  sys.validate();
  if (j != 1 && j != 2) throw Error("variable index must be 1 or 2");
  HornOperator op;
  op.j = j;
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    long a = sys.rows[i][j - 1];
    AffineForm base{Rational(sys.rows[i][0]), Rational(sys.rows[i][1]), sys.c[i]};
    if (a > 0) {
      for (long l = 0; l < a; ++l)
        op.P.push_back({base.a, base.b, base.gamma + Rational(l)});
    } else if (a < 0) {
      for (long l = 0; l < -a; ++l)
        op.Q.push_back({base.a, base.b, base.gamma + Rational(l)});
    }
  }
  return op;
}

bool is_nonconfluent(const HornSystem& sys) {
  sys.validate();
  long s0 = 0, s1 = 0;
  for (const IntVec2& r : sys.rows) {
    s0 += r[0];
    s1 += r[1];
  }
  return s0 == 0 && s1 == 0;
}

ZonotopePairing zonotope_pairing(const HornSystem& sys) {
  sys.validate();
  ZonotopePairing out;
  std::vector<bool> used(sys.rows.size(), false);
  std::map<IntVec2, int> row_count;
  for (const IntVec2& r : sys.rows) ++row_count[r];
  for (const auto& [row, count] : row_count)
    if (count >= 2) out.alternative_matchings = true;

  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    if (used[i]) continue;
    IntVec2 neg{-sys.rows[i][0], -sys.rows[i][1]};
    std::size_t match = sys.rows.size();
    for (std::size_t j = i + 1; j < sys.rows.size(); ++j) {
      if (!used[j] && sys.rows[j] == neg) {
        match = j;
        break;
      }
    }
    if (match == sys.rows.size()) throw NotZonotope();
    used[i] = used[match] = true;
    out.pairs.push_back({i, match});
    out.a_hat.push_back(sys.rows[i]);
    out.alpha.push_back(sys.c[i]);
    out.beta.push_back(sys.c[match]);
    out.c_hat.push_back(-sys.c[i] - sys.c[match]);
  }
  return out;
}

LatticePolygon polygon(const HornSystem& sys) {
  if (!is_nonconfluent(sys)) throw NotNonconfluent();

  // One side per primitive outer normal direction; multiplicity adds up the
  // lattice length contributed by each row (coincident rows per Def. of k_i,
  // with non-primitive rows weighted by their content).
  std::map<IntVec2, long> weight;
  for (const IntVec2& r : sys.rows) weight[primitive(r)] += content(r);

  std::vector<std::pair<IntVec2, long>> normals(weight.begin(), weight.end());
  std::sort(normals.begin(), normals.end(),
            [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });

  LatticePolygon poly;
  std::vector<IntVec2> verts;
  IntVec2 pos{0, 0};
  for (const auto& [n, w] : normals) {
    poly.sides.push_back({n, rot90(n), w});
    verts.push_back(pos);
    IntVec2 edge = rot90(n);
    pos = {pos[0] + w * edge[0], pos[1] + w * edge[1]};
  }
  if (pos != IntVec2{0, 0}) throw Error("polygon does not close");

  long minx = verts[0][0], miny = verts[0][1];
  for (const IntVec2& v : verts) {
    minx = std::min(minx, v[0]);
    miny = std::min(miny, v[1]);
  }
  for (IntVec2& v : verts) v = {v[0] - minx, v[1] - miny};

  // start at the bottom-most, then left-most vertex
  std::size_t start = 0;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    if (verts[i][1] < verts[start][1] ||
        (verts[i][1] == verts[start][1] && verts[i][0] < verts[start][0]))
      start = i;
  }
  std::rotate(verts.begin(), verts.begin() + start, verts.end());
  std::rotate(poly.sides.begin(), poly.sides.begin() + start, poly.sides.end());
  poly.vertices = std::move(verts);

  try {
    ZonotopePairing pairing = zonotope_pairing(sys);
    for (std::size_t i = 0; i < pairing.k(); ++i) {
      IntVec2 p = primitive(pairing.a_hat[i]);
      IntVec2 seg = rot90(p);
      long w = content(pairing.a_hat[i]);
      poly.minkowski_segments.push_back({w * seg[0], w * seg[1]});
    }
  } catch (const NotZonotope&) {
    // not a zonotope: no segment decomposition
  }
  return poly;
}

RankBreakdown holonomic_rank(const HornSystem& sys) {
  sys.validate();
  RankBreakdown out;
  for (const IntVec2& r : sys.rows) {
    if (r[0] > 0) out.d1 += r[0];
    if (r[1] > 0) out.d2 += r[1];
  }
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.rows.size(); ++j) {
      const IntVec2 &a = sys.rows[i], &b = sys.rows[j];
      if (a[0] * b[1] - a[1] * b[0] != 0) continue;  // linearly independent
      // opposite open quadrants: all four coordinates nonzero and
      // componentwise opposite in sign
      bool opposite = a[0] != 0 && a[1] != 0 && b[0] != 0 && b[1] != 0 &&
                      ((a[0] > 0) != (b[0] > 0)) && ((a[1] > 0) != (b[1] > 0));
      if (!opposite) continue;
      long nu = std::min(std::abs(a[0] * b[1]), std::abs(b[0] * a[1]));
      if (nu != 0) out.corrections.push_back({i, j, nu});
    }
  }
  out.rank = out.d1 * out.d2;
  for (const auto& corr : out.corrections) out.rank -= corr.nu;
  return out;
}

bool is_polynomial_regime(const ZonotopePairing& pairing) {
  for (const Rational& ch : pairing.c_hat)
    if (!ch.is_positive_integer()) return false;
  return true;
}

HornSystem from_gamma_products(const std::vector<GammaFactor>& factors) {
  HornSystem sys;
  for (const GammaFactor& f : factors) {
    if (f.multiplicity < 1) throw ParseError("gamma factor multiplicity must be positive");
    for (long m = 0; m < f.multiplicity; ++m) {
      sys.rows.push_back(f.vector);
      sys.c.push_back(f.constant);
    }
  }
  sys.validate();
  return sys;
}

}  // namespace horncalc
