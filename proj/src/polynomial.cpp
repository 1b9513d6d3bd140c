#include "varch/polynomial.hpp"

#include <limits>

namespace varch {

std::string Variable::str() const {
  return "q" + std::to_string(hyperplane) + (minus ? "-" : "+");
}

Monomial Monomial::variable(const Variable& v, unsigned exp) {
  Monomial m;
  if (exp > 0) {
    m.factors_.emplace_back(v, exp);
    m.degree_ = exp;
  }
  return m;
}

unsigned Monomial::exponent_of(const Variable& v) const {
  for (const auto& [w, e] : factors_) {
    if (w == v) return e;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto ia = factors_.begin(), ib = other.factors_.begin();
  while (ia != factors_.end() || ib != other.factors_.end()) {
    if (ib == other.factors_.end() || (ia != factors_.end() && ia->first < ib->first)) {
      out.factors_.push_back(*ia++);
    } else if (ia == factors_.end() || ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      unsigned sum = ia->second + ib->second;
      if (sum < ia->second) throw Error("monomial exponent overflow");
      out.factors_.emplace_back(ia->first, sum);
      ++ia, ++ib;
    }
  }
  for (const auto& [v, e] : out.factors_) out.degree_ += e;
  if (out.degree_ < degree_) throw Error("monomial degree overflow");
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : factors_) {
    if (other.exponent_of(v) < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  for (const auto& [v, e] : other.factors_) {
    unsigned drop = exponent_of(v);
    if (e > drop) {
      out.factors_.emplace_back(v, e - drop);
      out.degree_ += e - drop;
    }
  }
  return out;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += "*";
    out += v.str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  // Same degree: compare exponent vectors lexicographically along the
  // variable order; the larger vector sorts first (i.e. is "smaller" here
  // because map iteration should meet it first).
  auto ia = a.factors().begin();
  auto ib = b.factors().begin();
  while (ia != a.factors().end() && ib != b.factors().end()) {
    if (!(ia->first == ib->first)) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia, ++ib;
  }
  return false;  // equal degrees force both to exhaust together
}

const Rational& QAssignment::value(const Variable& v) const {
  if (v.hyperplane < 1 || v.hyperplane > hyperplanes()) {
    throw MissingAssignment("no value assigned to " + v.str());
  }
  const auto& p = pairs_[static_cast<std::size_t>(v.hyperplane - 1)];
  return v.minus ? p.second : p.first;
}

const std::pair<Rational, Rational>& QAssignment::pair(int hyperplane) const {
  if (hyperplane < 1 || hyperplane > hyperplanes()) {
    throw MissingAssignment("no values assigned to hyperplane " + std::to_string(hyperplane));
  }
  return pairs_[static_cast<std::size_t>(hyperplane - 1)];
}

QAssignment QAssignment::swapped() const {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(pairs_.size());
  for (const auto& [plus, minus] : pairs_) out.emplace_back(minus, plus);
  return QAssignment(std::move(out));
}

Polynomial::Polynomial(long value) {
  if (value != 0) terms_.emplace(Monomial(), Int(value));
}

Polynomial::Polynomial(const Int& value) {
  if (value != 0) terms_.emplace(Monomial(), value);
}

Polynomial Polynomial::variable(const Variable& v, unsigned exp) {
  return term(Monomial::variable(v, exp), 1);
}

Polynomial Polynomial::term(const Monomial& m, const Int& coeff) {
  Polynomial p;
  if (coeff != 0) p.terms_.emplace(m, coeff);
  return p;
}

unsigned long Polynomial::degree() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first.total_degree();
}

void Polynomial::add_term(const Monomial& m, const Int& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Rational Polynomial::eval(const QAssignment& q) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t(c);
    for (const auto& [v, e] : m.factors()) {
      t *= rational_pow(q.value(v), e);
    }
    acc += t;
  }
  return acc;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    Int mag = abs(c);
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_unit()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += m.str();
    }
  }
  return out;
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Polynomial rem = a;
  Polynomial quot;
  const auto& lead_b = *b.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& lead_r = *rem.terms_.rbegin();
    if (!lead_b.first.divides(lead_r.first)) {
      throw NotDivisible("leading monomial " + lead_b.first.str() +
                         " does not divide " + lead_r.first.str());
    }
    if (!mpz_divisible_p(lead_r.second.get_mpz_t(), lead_b.second.get_mpz_t())) {
      throw NotDivisible("leading coefficient not divisible");
    }
    Monomial qm = lead_b.first.quotient_of(lead_r.first);
    Int qc = lead_r.second / lead_b.second;
    quot.add_term(qm, qc);
    rem -= Polynomial::term(qm, qc) * b;
  }
  return quot;
}

}  // namespace varch
