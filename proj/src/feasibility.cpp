#include "varch/feasibility.hpp"

#include <map>
#include <utility>

#include "varch/errors.hpp"
#include "varch/linalg.hpp"

namespace varch {

namespace {

struct Ineq {
  std::vector<Rational> a;
  Rational b;
  bool strict = false;
};

// Scales to a primitive integer coefficient vector (positive factor only, so
// the constraint is unchanged) and collapses duplicates, keeping the tighter
// rhs.  Comparing against the strongest representative is enough because
// a.x (rel) b1 implies a.x > b2 whenever b1 > b2.
std::vector<Ineq> dedupe(const std::vector<Ineq>& in) {
  std::map<std::vector<Int>, std::pair<Rational, bool>> best;
  for (const Ineq& q : in) {
    Int lcm(1);
    for (const Rational& c : q.a) lcm = lcm * c.get_den() / gcd(lcm, c.get_den());
    lcm = lcm * q.b.get_den() / gcd(lcm, q.b.get_den());
    std::vector<Int> key;
    key.reserve(q.a.size());
    Int content(0);
    for (const Rational& c : q.a) {
      Int scaled = c.get_num() * (lcm / c.get_den());
      content = gcd(content, scaled);
      key.push_back(std::move(scaled));
    }
    Rational rhs = q.b * Rational(lcm);
    if (content != 0) {
      for (Int& c : key) c /= content;
      rhs /= Rational(content);
    }
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(std::move(key), std::make_pair(rhs, q.strict));
    } else if (rhs > it->second.first) {
      it->second = {rhs, q.strict};
    } else if (rhs == it->second.first) {
      it->second.second = it->second.second || q.strict;
    }
  }
  std::vector<Ineq> out;
  out.reserve(best.size());
  for (const auto& [key, val] : best) {
    Ineq q;
    q.a.reserve(key.size());
    for (const Int& c : key) q.a.emplace_back(c);
    q.b = val.first;
    q.strict = val.second;
    out.push_back(std::move(q));
  }
  return out;
}

// False when some constraint with all-zero coefficients is violated.
bool constants_hold(const std::vector<Ineq>& sys) {
  for (const Ineq& q : sys) {
    bool zero = true;
    for (const Rational& c : q.a) {
      if (c != 0) {
        zero = false;
        break;
      }
    }
    if (!zero) continue;
    if (q.strict ? !(0 > q.b) : !(0 >= q.b)) return false;
  }
  return true;
}

// Projects out variable v: every (lower bound, upper bound) pair is combined
// into a constraint free of v; constraints not mentioning v pass through.
std::vector<Ineq> eliminate(const std::vector<Ineq>& in, int v) {
  std::vector<Ineq> out;
  std::vector<const Ineq*> lower, upper;
  for (const Ineq& q : in) {
    const Rational& c = q.a[static_cast<std::size_t>(v)];
    if (c == 0) {
      out.push_back(q);
    } else if (c > 0) {
      lower.push_back(&q);
    } else {
      upper.push_back(&q);
    }
  }
  const std::size_t n = in.empty() ? 0 : in.front().a.size();
  for (const Ineq* l : lower) {
    for (const Ineq* u : upper) {
      const Rational cl = l->a[static_cast<std::size_t>(v)];   // > 0
      const Rational cu = -u->a[static_cast<std::size_t>(v)];  // > 0
      Ineq comb;
      comb.a.resize(n);
      for (std::size_t j = 0; j < n; ++j) {
        comb.a[j] = cu * l->a[j] + cl * u->a[j];
      }
      comb.b = cu * l->b + cl * u->b;
      comb.strict = l->strict || u->strict;
      out.push_back(std::move(comb));
    }
  }
  return dedupe(out);
}

struct Reduced {
  bool consistent = false;
  int free_count = 0;
  std::vector<Rational> x0;               // one solution of the equalities
  std::vector<std::vector<Rational>> n;   // dim x free_count, x = x0 + N y
  std::vector<Ineq> ineqs;                // rewritten over the free variables
};

// Substitutes the affine solution set of the equalities into the
// inequalities, leaving a system over the free variables only.
Reduced substitute_equalities(const LinearSystem& sys) {
  Reduced red;
  const int dim = sys.dim;
  RatMatrix a(static_cast<int>(sys.equalities.size()), dim);
  std::vector<Rational> rhs(sys.equalities.size());
  for (int i = 0; i < a.rows(); ++i) {
    const auto& [row, b] = sys.equalities[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != dim) throw LengthMismatch("equality arity mismatch");
    for (int j = 0; j < dim; ++j) a.at(i, j) = row[static_cast<std::size_t>(j)];
    rhs[static_cast<std::size_t>(i)] = b;
  }
  RatSolution sol = rat_solve(a, rhs);
  if (!sol.consistent) return red;
  red.consistent = true;
  red.x0 = sol.particular;
  red.n = sol.nullspace;
  red.free_count = static_cast<int>(red.n.size());

  for (const auto& q : sys.inequalities) {
    if (static_cast<int>(q.coeffs.size()) != dim) throw LengthMismatch("inequality arity mismatch");
    Ineq out;
    out.a.assign(static_cast<std::size_t>(red.free_count), Rational(0));
    Rational shift(0);
    for (int i = 0; i < dim; ++i) shift += q.coeffs[static_cast<std::size_t>(i)] * red.x0[static_cast<std::size_t>(i)];
    for (int j = 0; j < red.free_count; ++j) {
      Rational c(0);
      for (int i = 0; i < dim; ++i) {
        c += q.coeffs[static_cast<std::size_t>(i)] * red.n[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      }
      out.a[static_cast<std::size_t>(j)] = c;
    }
    out.b = q.rhs - shift;
    out.strict = q.strict;
    red.ineqs.push_back(std::move(out));
  }
  red.ineqs = dedupe(red.ineqs);
  return red;
}

struct PickedBound {
  bool present = false;
  Rational value;
  bool strict = false;
};

void raise_lower(PickedBound& lo, const Rational& v, bool strict) {
  if (!lo.present || v > lo.value) {
    lo = {true, v, strict};
  } else if (v == lo.value) {
    lo.strict = lo.strict || strict;
  }
}

void drop_upper(PickedBound& hi, const Rational& v, bool strict) {
  if (!hi.present || v < hi.value) {
    hi = {true, v, strict};
  } else if (v == hi.value) {
    hi.strict = hi.strict || strict;
  }
}

std::optional<Rational> pick_between(const PickedBound& lo, const PickedBound& hi) {
  if (!lo.present && !hi.present) return Rational(0);
  if (lo.present && !hi.present) return lo.strict ? lo.value + 1 : lo.value;
  if (!lo.present && hi.present) return hi.strict ? hi.value - 1 : hi.value;
  if (lo.value < hi.value) return (lo.value + hi.value) / 2;
  if (lo.value == hi.value && !lo.strict && !hi.strict) return lo.value;
  return std::nullopt;
}

}  // namespace

bool feasible(const LinearSystem& sys) {
  Reduced red = substitute_equalities(sys);
  if (!red.consistent) return false;
  std::vector<Ineq> cur = std::move(red.ineqs);
  if (!constants_hold(cur)) return false;
  for (int v = red.free_count - 1; v >= 0; --v) {
    cur = eliminate(cur, v);
    if (!constants_hold(cur)) return false;
  }
  return true;
}

std::optional<std::vector<Rational>> find_point(const LinearSystem& sys) {
  Reduced red = substitute_equalities(sys);
  if (!red.consistent) return std::nullopt;

  // stages[k] is the projected system over free variables 0..k-1.
  std::vector<std::vector<Ineq>> stages(static_cast<std::size_t>(red.free_count) + 1);
  stages[static_cast<std::size_t>(red.free_count)] = std::move(red.ineqs);
  for (int v = red.free_count - 1; v >= 0; --v) {
    stages[static_cast<std::size_t>(v)] = eliminate(stages[static_cast<std::size_t>(v) + 1], v);
  }
  for (const auto& stage : stages) {
    if (!constants_hold(stage)) return std::nullopt;
  }

  std::vector<Rational> y(static_cast<std::size_t>(red.free_count), Rational(0));
  for (int v = 0; v < red.free_count; ++v) {
    PickedBound lo, hi;
    for (const Ineq& q : stages[static_cast<std::size_t>(v) + 1]) {
      const Rational& c = q.a[static_cast<std::size_t>(v)];
      if (c == 0) continue;
      Rational rest = q.b;
      for (int j = 0; j < v; ++j) rest -= q.a[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];
      Rational bound = rest / c;
      if (c > 0) {
        raise_lower(lo, bound, q.strict);
      } else {
        drop_upper(hi, bound, q.strict);
      }
    }
    std::optional<Rational> v_val = pick_between(lo, hi);
    if (!v_val) return std::nullopt;  // unreachable: projection was feasible
    y[static_cast<std::size_t>(v)] = *v_val;
  }

  std::vector<Rational> x = red.x0;
  for (int j = 0; j < red.free_count; ++j) {
    for (int i = 0; i < sys.dim; ++i) {
      x[static_cast<std::size_t>(i)] += red.n[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    }
  }
  return x;
}

}  // namespace varch
