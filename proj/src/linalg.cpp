#include "varch/linalg.hpp"

#include <algorithm>
#include <utility>

#include "varch/errors.hpp"

namespace varch {

void PolyMatrix::swap_rows(int a, int b) {
  for (int j = 0; j < n_; ++j) std::swap(at(a, j), at(b, j));
}

void RatMatrix::swap_rows(int a, int b) {
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

Polynomial det_bareiss(PolyMatrix m) {
  const int n = m.size();
  if (n == 0) return Polynomial(1);
  int sign = 1;
  Polynomial prev(1);  // pivot of the previous step, divides the next minors
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!m.at(r, k).is_zero()) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return Polynomial();  // leading columns are rank deficient
      m.swap_rows(k, pivot);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = exact_div(t, prev);
      }
      m.at(i, k) = Polynomial();
    }
    prev = m.at(k, k);
  }
  Polynomial det = m.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

Rational rat_det(RatMatrix m) {
  if (m.rows() != m.cols()) throw Error("rat_det needs a square matrix");
  const int n = m.rows();
  Rational det(1);
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (m.at(r, k) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != k) {
      m.swap_rows(k, pivot);
      det = -det;
    }
    det *= m.at(k, k);
    const Rational inv = Rational(1) / m.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (m.at(i, k) == 0) continue;
      const Rational f = m.at(i, k) * inv;
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return det;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each of the
// first `rank` rows.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.swap_rows(row, pivot);
    const Rational inv = Rational(1) / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const Rational f = m.at(r, col);
      for (int j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rat_rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

RatSolution rat_solve(const RatMatrix& a, const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows()) {
    throw LengthMismatch("rhs length does not match row count");
  }
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  const std::vector<int> pivots = rref(aug);

  RatSolution out;
  if (!pivots.empty() && pivots.back() == a.cols()) return out;  // 0 = 1 row
  out.consistent = true;

  std::vector<int> pivot_of_col(static_cast<std::size_t>(a.cols()), -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    pivot_of_col[static_cast<std::size_t>(pivots[r])] = static_cast<int>(r);
  }

  out.particular.assign(static_cast<std::size_t>(a.cols()), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    out.particular[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), a.cols());
  }

  for (int col = 0; col < a.cols(); ++col) {
    if (pivot_of_col[static_cast<std::size_t>(col)] >= 0) continue;
    std::vector<Rational> v(static_cast<std::size_t>(a.cols()), Rational(0));
    v[static_cast<std::size_t>(col)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = -aug.at(static_cast<int>(r), col);
    }
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

}  // namespace varch
