#include "varch/amsystem.hpp"

#include <algorithm>

namespace varch {

namespace {

constexpr std::size_t kMaxViolations = 100;

void record(WittReport& report, const std::string& identity, const std::string& witness) {
  if (report.violations.size() < kMaxViolations) {
    report.violations.push_back({identity, witness});
  }
}

int parity(int rank) { return rank % 2 == 0 ? 1 : -1; }

}  // namespace

AMSystem build_system(const Arrangement& a) {
  if (a.mode() != Mode::full) throw ModeError("the linear system needs the full face set");
  AMSystem sys;
  for (const Face& f : a.faces()) {
    sys.cols.push_back(f.sign);
    if (f.rank > 0) sys.rows.push_back(f.sign);
  }
  sys.entries.resize(sys.rows.size());
  for (std::size_t i = 0; i < sys.rows.size(); ++i) {
    const SignVector& g = sys.rows[i];
    sys.entries[i].resize(sys.cols.size());
    for (std::size_t j = 0; j < sys.cols.size(); ++j) {
      const SignVector& f = sys.cols[j];
      if (compose(g, f) == g) {
        sys.entries[i][j] = distance_extended(a, f, g);
      }
    }
  }
  return sys;
}

DimensionReport solution_dimension(const Arrangement& a, const QAssignment& q) {
  const AssemblyMatrix s = assembly(a);
  RatMatrix sq(s.entries.size(), s.entries.size());
  for (int i = 0; i < sq.rows(); ++i) {
    for (int j = 0; j < sq.cols(); ++j) sq.at(i, j) = s.entries.at(i, j).eval(q);
  }
  if (rat_det(std::move(sq)) == 0) {
    throw DegenerateAssignment("det S_A vanishes at the given q");
  }

  const AMSystem sys = build_system(a);
  RatMatrix m(static_cast<int>(sys.rows.size()), static_cast<int>(sys.cols.size()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      m.at(i, j) = sys.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(q);
    }
  }
  DimensionReport report;
  report.rank = rat_rank(std::move(m));
  report.dimension = static_cast<int>(sys.cols.size()) - report.rank;
  report.min_face_count = static_cast<int>(a.min_faces().size());
  return report;
}

AMSolution solve_central(const Arrangement& a, const QAssignment& q, const Rational& x0) {
  if (a.mode() != Mode::full) throw ModeError("solve_central needs the full face set");
  if (!a.is_central()) throw NotCentral("solve_central needs a central arrangement");

  std::vector<const Face*> order;
  order.reserve(a.faces().size());
  for (const Face& f : a.faces()) order.push_back(&f);
  std::stable_sort(order.begin(), order.end(),
                   [](const Face* x, const Face* y) { return x->rank < y->rank; });

  AMSolution sol;
  const SignVector center(static_cast<std::size_t>(a.m()), '0');
  sol.values[center] = x0;

  for (const Face* g : order) {
    if (g->rank == 0) {
      // A central arrangement has the center as its only minimal face.
      if (g->sign != center) {
        throw NotCentral("minimal face " + g->sign + " differs from the center");
      }
      continue;
    }
    const SignVector opp = a.opposite(g->sign);
    const Rational v_to = distance_extended(a, opp, g->sign).eval(q);    // v(~G, G)
    const Rational v_from = distance_extended(a, g->sign, opp).eval(q);  // v(G, ~G)
    const Rational denom = Rational(1) - v_from * v_to;
    if (denom == 0) {
      throw PoleEncountered("1 - v(G,~G) v(~G,G) vanishes at G = " + g->sign);
    }
    const int sgn = parity(g->rank);
    Rational sum(0);
    for (const Face& f : a.faces()) {
      if (f.sign == g->sign || !sign_leq(f.sign, g->sign)) continue;
      const Rational& xf = sol.values.at(f.sign);
      const Rational& xf_opp = sol.values.at(a.opposite(f.sign));
      sum += xf + Rational(sgn) * xf_opp * v_to;
    }
    sol.values[g->sign] = -sum / denom;
  }

  if (!verify_solution(a, q, sol.values)) {
    throw Error("central solve failed verification");  // unreachable on valid input
  }
  return sol;
}

bool verify_solution(const Arrangement& a, const QAssignment& q,
                     const std::map<SignVector, Rational>& x) {
  if (a.mode() != Mode::full) throw ModeError("verify_solution needs the full face set");
  const std::vector<Face>& faces = a.faces();
  const std::size_t n = faces.size();
  std::vector<Rational> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = x.find(faces[i].sign);
    if (it == x.end()) throw InputError("no value for face " + faces[i].sign);
    values[i] = it->second;
  }
  // v(F,G) evaluated for all pairs once.
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dist[i][j] = distance_extended(a, faces[i].sign, faces[j].sign).eval(q);
    }
  }
  for (std::size_t l = 0; l < n; ++l) {
    if (faces[l].rank == 0) continue;
    for (std::size_t g = 0; g < n; ++g) {
      if (!sign_leq(faces[l].sign, faces[g].sign)) continue;
      Rational sum(0);
      for (std::size_t f = 0; f < n; ++f) {
        if (compose(faces[l].sign, faces[f].sign) == faces[g].sign) {
          sum += values[f] * dist[f][g];
        }
      }
      if (sum != 0) return false;
    }
  }
  return true;
}

WittReport witt_check(const Arrangement& a) {
  if (a.mode() != Mode::full) throw ModeError("witt_check needs the full face set");
  WittReport report;
  const std::vector<Face>& faces = a.faces();
  const std::vector<SignVector> chambers = a.chambers();

  for (const Face& g : faces) {
    const int sgn_g = parity(g.rank);
    for (const Face& af : faces) {
      if (!sign_leq(af.sign, g.sign)) continue;  // nested (A, G), A = G included
      SignVector gt;
      try {
        gt = a.tilde(af.sign, g.sign);
      } catch (const TildeMissing&) {
        record(report, "input", "tilde of " + g.sign + " over " + af.sign + " missing");
        continue;
      }
      std::vector<const Face*> between;
      for (const Face& f : faces) {
        if (sign_leq(af.sign, f.sign) && sign_leq(f.sign, g.sign)) between.push_back(&f);
      }

      if (g.is_chamber) {
        for (const SignVector& c : chambers) {
          ++report.witt_tuples;
          int lhs = 0;
          for (const Face* f : between) {
            if (compose(f->sign, c) == g.sign) lhs += parity(f->rank);
          }
          const int rhs = compose(af.sign, c) == gt ? sgn_g : 0;
          if (lhs != rhs) {
            record(report, "witt",
                   "D=" + g.sign + " A=" + af.sign + " C=" + c + ": lhs=" +
                       std::to_string(lhs) + " rhs=" + std::to_string(rhs));
          }
        }
      }

      for (const Face& lf : faces) {
        ++report.eqf1_tuples;
        ++report.eqf2_tuples;
        int lhs1 = 0, lhs2 = 0;
        for (const Face* f : between) {
          const SignVector fl = compose(f->sign, lf.sign);
          if (sign_leq(fl, g.sign)) lhs1 += parity(f->rank);
          if (fl == g.sign) lhs2 += parity(f->rank);
        }
        const SignVector al = compose(af.sign, lf.sign);
        const int rhs1 = al == gt ? sgn_g : 0;
        const int rhs2 = sign_leq(al, gt) ? sgn_g : 0;
        if (lhs1 != rhs1) {
          record(report, "eqf1",
                 "G=" + g.sign + " A=" + af.sign + " L=" + lf.sign + ": lhs=" +
                     std::to_string(lhs1) + " rhs=" + std::to_string(rhs1));
        }
        if (lhs2 != rhs2) {
          record(report, "eqf2",
                 "G=" + g.sign + " A=" + af.sign + " L=" + lf.sign + ": lhs=" +
                     std::to_string(lhs2) + " rhs=" + std::to_string(rhs2));
        }
      }
    }
  }

  if (!a.geometry()) {
    report.prd_skipped = true;
    return report;
  }
  report.bounded_chambers = 0;
  for (const SignVector& d : chambers) {
    if (!bounded_chamber(*a.geometry(), d)) continue;
    ++report.bounded_chambers;
    for (const SignVector& c : chambers) {
      if (c == d) continue;
      ++report.prd_tuples;
      int sum = 0;
      for (const Face& f : faces) {
        if (sign_leq(f.sign, d) && compose(f.sign, c) == d) sum += parity(f.rank);
      }
      if (sum != 0) {
        record(report, "prd",
               "D=" + d + " C=" + c + ": sum=" + std::to_string(sum));
      }
    }
  }
  return report;
}

}  // namespace varch
