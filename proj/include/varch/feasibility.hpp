#pragma once

// Exact feasibility of rational linear constraint systems that mix
// equalities with strict and non-strict inequalities.  Equalities are
// substituted away first; the remaining variables are projected out by
// Fourier-Motzkin elimination, which is exact for this constraint class.

#include <optional>
#include <utility>
#include <vector>

#include "varch/rational.hpp"

namespace varch {

struct LinearSystem {
  int dim = 0;
  // a . x == b
  std::vector<std::pair<std::vector<Rational>, Rational>> equalities;
  struct Inequality {
    std::vector<Rational> coeffs;
    Rational rhs;
    bool strict = false;  // a . x > b when strict, a . x >= b otherwise
  };
  std::vector<Inequality> inequalities;
};

bool feasible(const LinearSystem& sys);

// A witness point when the system is satisfiable.
std::optional<std::vector<Rational>> find_point(const LinearSystem& sys);

}  // namespace varch
