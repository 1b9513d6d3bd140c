#include "varch/rational.hpp"

#include <cctype>

#include "varch/errors.hpp"

namespace varch {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  std::size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(text, start, text.size());
  } else {
    ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
  }
  if (!ok) throw InputError("not a rational literal: '" + text + "'");
  Rational r(text, 10);
  if (r.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Int& z) { return z.get_str(); }

Rational rational_pow(const Rational& base, unsigned long exp) {
  if (exp == 0) return Rational(1);
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exp);
  // base is canonical, so num/den stay coprime after powering.
  return Rational(num, den);
}

}  // namespace varch
