#pragma once

#include <cstddef>
#include <vector>

#include "horncalc/rational.hpp"

namespace horncalc {

// Dense rectangular matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// In-place reduced row echelon form; returns the pivot column per pivot row.
// Pivoting picks the leftmost nonzero column, no magnitude heuristics.
std::vector<std::size_t> rref(RationalMatrix& m);

// Basis of the right nullspace in the reduced echelon convention: each free
// variable set to 1 in turn, ordered by free-column index.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

// Exact inverse of a 2x2 matrix; throws SingularMatrix on zero determinant.
RationalMatrix inverse2x2(const RationalMatrix& m);

}  // namespace horncalc
