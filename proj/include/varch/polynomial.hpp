#pragma once

// Sparse multivariate polynomials with integer coefficients over the formal
// edge weights q1+, q1-, q2+, q2-, ...  Two weights are attached to every
// hyperplane; exponents are non-negative.  Terms are kept in a canonical
// graded order so printing and iteration are deterministic.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "varch/errors.hpp"
#include "varch/rational.hpp"

namespace varch {

// One of the two weights attached to a hyperplane: q{i}+ (minus == false)
// or q{i}- (minus == true).  Hyperplane indices are 1-based everywhere.
struct Variable {
  int hyperplane = 1;
  bool minus = false;

  // Total order: q1+ < q1- < q2+ < q2- < ...
  int code() const { return 2 * (hyperplane - 1) + (minus ? 1 : 0); }
  friend std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
    return a.code() <=> b.code();
  }
  friend bool operator==(const Variable& a, const Variable& b) {
    return a.code() == b.code();
  }
  std::string str() const;
};

// Product of variables with positive exponents; the empty product is 1.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(const Variable& v, unsigned exp = 1);

  bool is_unit() const { return factors_.empty(); }
  unsigned long total_degree() const { return degree_; }
  const std::vector<std::pair<Variable, unsigned>>& factors() const { return factors_; }
  unsigned exponent_of(const Variable& v) const;

  Monomial operator*(const Monomial& other) const;
  // Whether this divides other (componentwise exponents).
  bool divides(const Monomial& other) const;
  // other / this; caller must ensure divisibility.
  Monomial quotient_of(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  std::string str() const;  // e.g. "q1+*q2-^2"; "1" for the unit

 private:
  std::vector<std::pair<Variable, unsigned>> factors_;  // sorted by Variable
  unsigned long degree_ = 0;
};

// Canonical term order: lower total degree first; within a degree the
// monomial whose exponent vector is lexicographically larger (reading
// variables q1+, q1-, q2+, ... in order) comes first.  So q1+ precedes q2-,
// and q1+^2 precedes q1+*q1-.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// A rational value for both weights of each hyperplane 1..n.
class QAssignment {
 public:
  QAssignment() = default;
  explicit QAssignment(std::vector<std::pair<Rational, Rational>> pairs)
      : pairs_(std::move(pairs)) {}

  int hyperplanes() const { return static_cast<int>(pairs_.size()); }
  // Throws MissingAssignment when v's hyperplane is not covered.
  const Rational& value(const Variable& v) const;
  const std::pair<Rational, Rational>& pair(int hyperplane) const;
  // Same assignment with q{i}+ and q{i}- exchanged for every i.
  QAssignment swapped() const;

 private:
  std::vector<std::pair<Rational, Rational>> pairs_;
};

class Polynomial {
 public:
  Polynomial() = default;  // zero
  Polynomial(long value);  // NOLINT: implicit integer literals are handy
  explicit Polynomial(const Int& value);
  static Polynomial variable(const Variable& v, unsigned exp = 1);
  static Polynomial term(const Monomial& m, const Int& coeff);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  unsigned long degree() const;  // 0 for the zero polynomial
  const std::map<Monomial, Int, MonomialOrder>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  Rational eval(const QAssignment& q) const;
  std::string str() const;  // canonical, e.g. "1 - q1+*q1-*q2+*q2-"

 private:
  void add_term(const Monomial& m, const Int& coeff);
  std::map<Monomial, Int, MonomialOrder> terms_;

  friend Polynomial exact_div(const Polynomial& a, const Polynomial& b);
};

// Exact quotient a / b.  Throws DivisionByZero when b == 0 and NotDivisible
// when b does not divide a over the integers.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

}  // namespace varch
