#pragma once

// Exact linear algebra: fraction-free determinants of polynomial matrices
// (Bareiss) and Gaussian elimination over the rationals.

#include <vector>

#include "varch/polynomial.hpp"
#include "varch/rational.hpp"

namespace varch {

// Dense square matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

  int size() const { return n_; }
  const Polynomial& at(int i, int j) const { return entries_[index(i, j)]; }
  Polynomial& at(int i, int j) { return entries_[index(i, j)]; }
  void swap_rows(int a, int b);

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_ = 0;
  std::vector<Polynomial> entries_;
};

// Determinant by fraction-free (Bareiss) elimination; every division along
// the way is exact.  Zero pivots are repaired by row exchanges; a column
// with no pivot short-circuits to 0.
Polynomial det_bareiss(PolyMatrix m);

// Dense rational matrix, row-major, possibly rectangular.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int i, int j) const { return entries_[index(i, j)]; }
  Rational& at(int i, int j) { return entries_[index(i, j)]; }
  void swap_rows(int a, int b);

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> entries_;
};

Rational rat_det(RatMatrix m);  // requires rows() == cols()
int rat_rank(RatMatrix m);

struct RatSolution {
  bool consistent = false;
  // One solution of A x = b (all free variables set to 0).
  std::vector<Rational> particular;
  // Basis of the nullspace of A; solution set = particular + span(nullspace).
  std::vector<std::vector<Rational>> nullspace;
};

// Solves A x = b exactly; reports inconsistency instead of throwing.
RatSolution rat_solve(const RatMatrix& a, const std::vector<Rational>& b);

}  // namespace varch
