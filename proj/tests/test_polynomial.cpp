#include <doctest.h>

#include "varch/polynomial.hpp"
#include "varch/rational.hpp"

using namespace varch;

namespace {

Polynomial var(int h, bool minus, unsigned exp = 1) {
  return Polynomial::variable(Variable{h, minus}, exp);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(to_string(Rational(-2, 3)) == "-2/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
}

TEST_CASE("rational_pow") {
  CHECK(rational_pow(Rational(2, 3), 0) == Rational(1));
  CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(rational_pow(Rational(-1, 2), 2) == Rational(1, 4));
}

TEST_CASE("variable naming") {
  CHECK(Variable{1, false}.str() == "q1+");
  CHECK(Variable{3, true}.str() == "q3-");
  CHECK(Variable{1, false}.code() == 0);
  CHECK(Variable{1, true}.code() == 1);
  CHECK(Variable{2, false}.code() == 2);
}

TEST_CASE("monomial order is graded") {
  const MonomialOrder less;
  const Monomial one;
  const Monomial a = Monomial::variable(Variable{1, false});
  const Monomial b = Monomial::variable(Variable{1, true});
  const Monomial a2 = Monomial::variable(Variable{1, false}, 2);
  const Monomial ab = a * b;
  CHECK(less(one, a));
  CHECK(less(a, b));        // same degree, q1+ owns the earlier variable
  CHECK(less(a, ab));       // degree 1 < degree 2
  CHECK(less(a2, ab));      // same degree: larger power of the earlier variable first
  CHECK_FALSE(less(a, a));
  // a valid term order respects multiplication
  CHECK(less(a * a2, a * ab));
}

TEST_CASE("monomial arithmetic") {
  const Monomial a = Monomial::variable(Variable{1, false});
  const Monomial b = Monomial::variable(Variable{2, true}, 2);
  const Monomial ab = a * b;
  CHECK(ab.total_degree() == 3);
  CHECK(ab.exponent_of(Variable{1, false}) == 1);
  CHECK(ab.exponent_of(Variable{2, true}) == 2);
  CHECK(ab.exponent_of(Variable{2, false}) == 0);
  CHECK(a.divides(ab));
  CHECK_FALSE(ab.divides(a));
  CHECK(a.quotient_of(ab) == b);
  CHECK(ab.str() == "q1+*q2-^2");
  CHECK(Monomial().str() == "1");
}

TEST_CASE("polynomial printing") {
  CHECK(Polynomial(0).str() == "0");
  CHECK(Polynomial(1).str() == "1");
  CHECK(Polynomial(-7).str() == "-7");
  CHECK(var(1, false).str() == "q1+");
  CHECK((Polynomial(1) - var(1, false) * var(1, true)).str() == "1 - q1+*q1-");
  CHECK((var(1, false) * 2).str() == "2*q1+");
  CHECK((-var(1, false)).str() == "-q1+");
  CHECK(var(1, false, 2).str() == "q1+^2");
  CHECK((Polynomial(1) + var(2, true) - var(1, false, 2)).str() == "1 + q2- - q1+^2");
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial a = var(1, false);
  const Polynomial b = var(1, true);
  CHECK((Polynomial(1) - a) * (Polynomial(1) + a) == Polynomial(1) - a * a);
  CHECK(a - a == Polynomial(0));
  CHECK(a * Polynomial(0) == Polynomial(0));
  CHECK((a + b) * (a + b) == a * a + a * b * 2 + b * b);
  CHECK(Polynomial(2).degree() == 0);
  CHECK((a * a * b).degree() == 3);
}

TEST_CASE("polynomial evaluation") {
  QAssignment q(std::vector<std::pair<Rational, Rational>>{{Rational(1, 2), Rational(1, 3)}});
  const Polynomial p = Polynomial(1) - var(1, false) * var(1, true);
  CHECK(p.eval(q) == Rational(5, 6));
  CHECK(Polynomial(7).eval(q) == Rational(7));
  CHECK_THROWS_AS(var(2, false).eval(q), MissingAssignment);
}

TEST_CASE("qassignment swap") {
  QAssignment q(std::vector<std::pair<Rational, Rational>>{{Rational(1, 2), Rational(1, 3)},
                                                           {Rational(2, 5), Rational(1, 7)}});
  CHECK(q.value(Variable{1, false}) == Rational(1, 2));
  CHECK(q.value(Variable{2, true}) == Rational(1, 7));
  const QAssignment s = q.swapped();
  CHECK(s.value(Variable{1, false}) == Rational(1, 3));
  CHECK(s.value(Variable{1, true}) == Rational(1, 2));
  CHECK(s.value(Variable{2, false}) == Rational(1, 7));
}

TEST_CASE("exact division") {
  const Polynomial a = var(1, false);
  const Polynomial b = var(2, true);
  const Polynomial p = (Polynomial(1) - a) * (Polynomial(1) - b);
  CHECK(exact_div(p, Polynomial(1) - a) == Polynomial(1) - b);
  CHECK(exact_div(p, p) == Polynomial(1));
  CHECK(exact_div(Polynomial(0), Polynomial(1) - a) == Polynomial(0));
  CHECK(exact_div(a * a * 6, a * 3) == a * 2);
  CHECK_THROWS_AS(exact_div(Polynomial(1) - a, Polynomial(1) - b), NotDivisible);
  CHECK_THROWS_AS(exact_div(a, a * 2), NotDivisible);
  CHECK_THROWS_AS(exact_div(a, Polynomial(0)), DivisionByZero);
}

TEST_CASE("division round trip on products") {
  // (1 - b_F) style factors in several variables
  const Polynomial f1 = Polynomial(1) - var(1, false) * var(1, true);
  const Polynomial f2 = Polynomial(1) - var(2, false) * var(2, true);
  const Polynomial f3 =
      Polynomial(1) - var(1, false) * var(1, true) * var(2, false) * var(2, true);
  const Polynomial p = f1 * f1 * f2 * f3;
  CHECK(exact_div(p, f1) == f1 * f2 * f3);
  CHECK(exact_div(exact_div(p, f3), f1 * f1) == f2);
}
