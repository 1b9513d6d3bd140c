#include <doctest.h>

#include <random>
#include <vector>

#include "varch/linalg.hpp"

using namespace varch;

namespace {

Polynomial var(int h, bool minus) { return Polynomial::variable(Variable{h, minus}); }

// Independent determinant oracle: cofactor expansion along the first row.
Polynomial det_cofactor(const PolyMatrix& m) {
  const int n = m.size();
  if (n == 0) return Polynomial(1);
  if (n == 1) return m.at(0, 0);
  Polynomial acc;
  for (int j = 0; j < n; ++j) {
    PolyMatrix minor(n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Polynomial term = m.at(0, j) * det_cofactor(minor);
    if (j % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

// Random small polynomial: sum of up to two monomials in q1,q2 variables.
Polynomial random_poly(std::mt19937_64& rng) {
  Polynomial p;
  const int terms = static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    Polynomial m(static_cast<long>(rng() % 5) - 2);
    const int deg = static_cast<int>(rng() % 3);
    for (int d = 0; d < deg; ++d) {
      m = m * var(1 + static_cast<int>(rng() % 2), (rng() % 2) != 0);
    }
    p += m;
  }
  return p;
}

QAssignment point(std::mt19937_64& rng, int m) {
  std::vector<std::pair<Rational, Rational>> pairs;
  for (int h = 0; h < m; ++h) {
    Rational plus(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7));
    Rational minus(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7));
    plus.canonicalize();
    minus.canonicalize();
    pairs.emplace_back(plus, minus);
  }
  return QAssignment(std::move(pairs));
}

}  // namespace

TEST_CASE("bareiss agrees with cofactor expansion") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      PolyMatrix m(n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(rng);
      }
      CHECK(det_bareiss(m) == det_cofactor(m));
    }
  }
}

TEST_CASE("bareiss on triangular and singular matrices") {
  PolyMatrix t(3);
  t.at(0, 0) = Polynomial(1) - var(1, false);
  t.at(1, 0) = var(2, true);
  t.at(1, 1) = Polynomial(1) + var(1, true);
  t.at(2, 0) = Polynomial(5);
  t.at(2, 1) = var(2, false);
  t.at(2, 2) = Polynomial(1) - var(2, false) * var(2, true);
  CHECK(det_bareiss(t) == t.at(0, 0) * t.at(1, 1) * t.at(2, 2));

  PolyMatrix zero_pivot(2);
  zero_pivot.at(0, 1) = Polynomial(1);
  zero_pivot.at(1, 0) = Polynomial(1);
  CHECK(det_bareiss(zero_pivot) == Polynomial(-1));

  PolyMatrix singular(2);
  singular.at(0, 0) = var(1, false);
  singular.at(0, 1) = var(1, false) * 2;
  singular.at(1, 0) = var(1, true);
  singular.at(1, 1) = var(1, true) * 2;
  CHECK(det_bareiss(singular) == Polynomial(0));

  CHECK(det_bareiss(PolyMatrix(0)) == Polynomial(1));
  PolyMatrix one(1);
  one.at(0, 0) = var(2, true);
  CHECK(det_bareiss(one) == var(2, true));
}

TEST_CASE("symbolic determinant evaluates like the evaluated matrix") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 6; ++rep) {
    const int n = 3;
    PolyMatrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m.at(i, j) = random_poly(rng);
    }
    const Polynomial d = det_bareiss(m);
    const QAssignment q = point(rng, 2);
    RatMatrix e(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) e.at(i, j) = m.at(i, j).eval(q);
    }
    CHECK(d.eval(q) == rat_det(e));
  }
}

TEST_CASE("rational determinant and rank") {
  RatMatrix m(3, 3);
  const long entries[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m.at(i, j) = Rational(entries[i][j]);
  }
  CHECK(rat_det(m) == Rational(18));
  CHECK(rat_rank(m) == 3);

  RatMatrix r(2, 3);
  r.at(0, 0) = Rational(1);
  r.at(0, 1) = Rational(2);
  r.at(0, 2) = Rational(3);
  r.at(1, 0) = Rational(2);
  r.at(1, 1) = Rational(4);
  r.at(1, 2) = Rational(6);
  CHECK(rat_rank(r) == 1);
  CHECK(rat_rank(RatMatrix(0, 0)) == 0);
}

TEST_CASE("rat_solve consistent underdetermined system") {
  RatMatrix a(2, 2);
  a.at(0, 0) = Rational(1);
  a.at(0, 1) = Rational(2);
  a.at(1, 0) = Rational(2);
  a.at(1, 1) = Rational(4);
  const RatSolution s = rat_solve(a, {Rational(3), Rational(6)});
  REQUIRE(s.consistent);
  CHECK(s.nullspace.size() == 1);
  // particular solves the system
  CHECK(s.particular[0] + Rational(2) * s.particular[1] == Rational(3));
  // nullspace vector is annihilated
  CHECK(s.nullspace[0][0] + Rational(2) * s.nullspace[0][1] == Rational(0));
  CHECK((s.nullspace[0][0] != 0 || s.nullspace[0][1] != 0));
}

TEST_CASE("rat_solve inconsistent system") {
  RatMatrix a(2, 2);
  a.at(0, 0) = Rational(1);
  a.at(0, 1) = Rational(2);
  a.at(1, 0) = Rational(2);
  a.at(1, 1) = Rational(4);
  CHECK_FALSE(rat_solve(a, {Rational(3), Rational(7)}).consistent);
}

TEST_CASE("rat_solve unique solution") {
  RatMatrix a(2, 2);
  a.at(0, 0) = Rational(1);
  a.at(0, 1) = Rational(1);
  a.at(1, 0) = Rational(1);
  a.at(1, 1) = Rational(-1);
  const RatSolution s = rat_solve(a, {Rational(1), Rational(0)});
  REQUIRE(s.consistent);
  CHECK(s.nullspace.empty());
  CHECK(s.particular == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}
