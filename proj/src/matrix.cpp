#include "horncalc/matrix.hpp"

#include "horncalc/errors.hpp"

namespace horncalc {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix dimension mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    Rational lead = m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) / lead;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  RationalMatrix r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = Rational(1);
    for (std::size_t p = 0; p < pivots.size(); ++p)
      v[pivots[p]] = -r.at(p, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix inverse2x2(const RationalMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error("inverse2x2 needs a 2x2 matrix");
  Rational det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  if (det.is_zero()) throw SingularMatrix();
  RationalMatrix inv(2, 2);
  inv.at(0, 0) = m.at(1, 1) / det;
  inv.at(0, 1) = -m.at(0, 1) / det;
  inv.at(1, 0) = -m.at(1, 0) / det;
  inv.at(1, 1) = m.at(0, 0) / det;
  return inv;
}

}  // namespace horncalc
