#include "varch/checks.hpp"

#include <algorithm>
#include <utility>

#include "varch/linalg.hpp"

namespace varch {

namespace {

// Fixed per-check offsets so every check draws from its own stream and the
// overall seed alone determines all of them.
constexpr std::uint64_t kThdetSalt = 0x7d01;
constexpr std::uint64_t kApartmentSalt = 0x7d02;
constexpr std::uint64_t kPrasSalt = 0x7d03;
constexpr std::uint64_t kDimensionSalt = 0x7d04;
constexpr std::uint64_t kCentralSalt = 0x7d05;

void record(CheckResult& r, const std::string& witness) {
  ++r.violations;
  if (r.samples.size() < 4) r.samples.push_back(witness);
}

CheckResult skipped_result(std::string name, std::string note) {
  CheckResult r;
  r.name = std::move(name);
  r.skipped = true;
  r.note = std::move(note);
  return r;
}

RatMatrix eval_matrix(const PolyMatrix& m, const QAssignment& q) {
  RatMatrix out(m.size(), m.size());
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) out.at(i, j) = m.at(i, j).eval(q);
  }
  return out;
}

Rational eval_closed_form(const std::vector<WeightedFace>& wf, const QAssignment& q) {
  Rational out(1);
  for (const WeightedFace& w : wf) {
    out *= rational_pow(Rational(1) - w.weight.eval(q),
                        static_cast<unsigned long>(w.multiplicity));
  }
  return out;
}

void eval_thdet_points(const Arrangement& a, const Apartment& k, int points,
                       std::mt19937_64& rng, CheckResult& r, const std::string& label) {
  const VarchenkoMatrix v = varchenko_matrix(a, k);
  const std::vector<WeightedFace> wf = weighted_faces(a, k);
  for (int p = 0; p < points; ++p) {
    ++r.instances;
    const QAssignment q = seeded_assignment(a.m(), rng);
    if (rat_det(eval_matrix(v.entries, q)) != eval_closed_form(wf, q)) {
      record(r, label + "point " + std::to_string(p) + ": det differs from closed form");
    }
  }
}

}  // namespace

Rational seeded_value(std::mt19937_64& rng) {
  const std::uint64_t r = rng();
  const long num = 1 + static_cast<long>(r % 9);
  const long den = 10 + static_cast<long>((r >> 33) % 10);
  Rational q(((r >> 32) & 1) ? -num : num, den);
  q.canonicalize();
  return q;
}

QAssignment seeded_assignment(int m, std::mt19937_64& rng) {
  std::vector<std::pair<Rational, Rational>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (int h = 0; h < m; ++h) {
    Rational plus = seeded_value(rng);
    Rational minus = seeded_value(rng);
    pairs.emplace_back(std::move(plus), std::move(minus));
  }
  return QAssignment(std::move(pairs));
}

QAssignment seeded_admissible_assignment(const Arrangement& a, std::mt19937_64& rng) {
  const AssemblyMatrix s = assembly(a);
  for (int attempt = 0; attempt < 64; ++attempt) {
    QAssignment q = seeded_assignment(a.m(), rng);
    if (rat_det(eval_matrix(s.entries, q)) != 0) return q;
  }
  throw Error("no admissible q-assignment found in 64 draws");
}

bool thdet_symbolic_holds(const Arrangement& a, const Apartment& k) {
  return det_bareiss(varchenko_matrix(a, k).entries) == closed_form_det(a, k);
}

bool thdet_eval_holds(const Arrangement& a, const Apartment& k, const QAssignment& q) {
  const VarchenkoMatrix v = varchenko_matrix(a, k);
  return rat_det(eval_matrix(v.entries, q)) == eval_closed_form(weighted_faces(a, k), q);
}

CheckResult check_validate(const Arrangement& a) {
  CheckResult r;
  r.name = "validate";
  r.instances = static_cast<long>(a.faces().size());
  for (const ValidationIssue& issue : a.validate().issues) {
    record(r, issue.check + ": " + issue.witness);
  }
  return r;
}

CheckResult check_distance_cfd(const Arrangement& a) {
  CheckResult r;
  r.name = "distance_cfd";
  const std::vector<SignVector> chambers = a.chambers();
  for (const SignVector& c : chambers) {
    for (const Face& ff : a.faces()) {
      if (!sign_leq(ff.sign, c)) continue;
      for (const SignVector& d : chambers) {
        ++r.instances;
        const SignVector fd = compose(ff.sign, d);
        try {
          if (distance(a, c, d) != distance(a, c, fd) * distance(a, fd, d)) {
            record(r, "C=" + c + " D=" + d + " F=" + ff.sign);
          }
        } catch (const Error& e) {
          record(r, "C=" + c + " D=" + d + " F=" + ff.sign + ": " + e.what());
        }
      }
    }
  }
  return r;
}

CheckResult check_distance_lefg(const Arrangement& a) {
  if (a.mode() != Mode::full) return skipped_result("distance_lefg", "full mode only");
  CheckResult r;
  r.name = "distance_lefg";
  for (const Face& ff : a.faces()) {
    for (const Face& gg : a.faces()) {
      const SignVector fg = compose(ff.sign, gg.sign);
      const Polynomial v_fg = distance_extended(a, ff.sign, gg.sign);
      const Polynomial v_gf = distance_extended(a, gg.sign, ff.sign);
      for (const Face& ll : a.faces()) {
        if (!sign_leq(fg, ll.sign)) continue;
        ++r.instances;
        if (distance_extended(a, ll.sign, gg.sign) != v_fg ||
            distance_extended(a, gg.sign, ll.sign) != v_gf) {
          record(r, "F=" + ff.sign + " G=" + gg.sign + " L=" + ll.sign);
        }
      }
    }
  }
  return r;
}

CheckResult check_distance_leflf(const Arrangement& a) {
  if (a.mode() != Mode::full) return skipped_result("distance_leflf", "full mode only");
  CheckResult r;
  r.name = "distance_leflf";
  for (const Face& ff : a.faces()) {
    for (const Face& gg : a.faces()) {
      const SignVector gf = compose(gg.sign, ff.sign);
      const Polynomial left = distance_extended(a, ff.sign, gf);
      for (const Face& ll : a.faces()) {
        if (!sign_leq(gg.sign, ll.sign)) continue;
        ++r.instances;
        if (distance_extended(a, ff.sign, ll.sign) != left * distance_extended(a, gf, ll.sign)) {
          record(r, "F=" + ff.sign + " G=" + gg.sign + " L=" + ll.sign);
        }
      }
    }
  }
  return r;
}

CheckResult check_distance_literal(const Arrangement& a) {
  if (a.mode() != Mode::full) return skipped_result("distance_literal", "full mode only");
  CheckResult r;
  r.name = "distance_literal";
  for (const Face& ff : a.faces()) {
    for (const Face& gg : a.faces()) {
      ++r.instances;
      const SignVector fg = compose(ff.sign, gg.sign);
      const SignVector gf = compose(gg.sign, ff.sign);
      Flat x;
      x.hyperplanes = zero_support(fg);
      Polynomial literal = 1;
      for (int h : a.restriction_separators(x)) {
        const char cf = fg[static_cast<std::size_t>(h) - 1];
        const char cg = gf[static_cast<std::size_t>(h) - 1];
        if (cf == '0' || cg == '0' || cf == cg) continue;
        literal = literal * Polynomial::variable(Variable{h, cf == '-'});
      }
      if (literal != distance_extended(a, ff.sign, gg.sign)) {
        record(r, "F=" + ff.sign + " G=" + gg.sign);
      }
    }
  }
  return r;
}

CheckResult check_reciprocity(const Arrangement& a) {
  CheckResult r;
  r.name = "reciprocity";
  const std::vector<SignVector> chambers = a.chambers();
  for (const SignVector& c : chambers) {
    for (const SignVector& d : chambers) {
      ++r.instances;
      Polynomial sep = 1;
      for (int h = 1; h <= a.m(); ++h) {
        if (c[static_cast<std::size_t>(h) - 1] != d[static_cast<std::size_t>(h) - 1]) {
          sep = sep * Polynomial::variable(Variable{h, false}) *
                Polynomial::variable(Variable{h, true});
        }
      }
      if (distance(a, c, d) * distance(a, d, c) != sep) record(r, "C=" + c + " D=" + d);
    }
  }
  return r;
}

CheckResult check_thdet(const Arrangement& a, const CheckOptions& opt) {
  if (a.mode() != Mode::full) return skipped_result("thdet", "full mode only");
  CheckResult r;
  r.name = "thdet";
  const std::size_t n = a.chambers().size();
  if (!opt.force_eval && n <= 12) {
    r.note = "symbolic";
    ++r.instances;
    if (!thdet_symbolic_holds(a)) record(r, "det differs from closed form");
  } else {
    r.note = "evaluation-verified (" + std::to_string(opt.points) + " points)";
    std::mt19937_64 rng(opt.seed + kThdetSalt);
    eval_thdet_points(a, {}, opt.points, rng, r, "");
  }
  return r;
}

CheckResult check_thdet_apartments(const Arrangement& a, const CheckOptions& opt) {
  if (a.mode() != Mode::full) return skipped_result("thdet_apartments", "full mode only");
  CheckResult r;
  r.name = "thdet_apartments";
  r.note = "single-constraint apartments";
  std::mt19937_64 rng(opt.seed + kApartmentSalt);
  for (int h = 1; h <= a.m(); ++h) {
    for (char sign : {'+', '-'}) {
      Apartment k;
      k.constraints[h] = sign;
      const std::string label = "K={" + std::to_string(h) + ":" + sign + "} ";
      std::size_t n = 0;
      try {
        n = a.apartment_chambers(k).size();
      } catch (const EmptyApartment&) {
        continue;
      }
      if (!opt.force_eval && n <= 12) {
        ++r.instances;
        if (!thdet_symbolic_holds(a, k)) record(r, label + "det differs from closed form");
      } else {
        eval_thdet_points(a, k, opt.points, rng, r, label);
      }
    }
  }
  return r;
}

CheckResult check_pras(const Arrangement& a, const CheckOptions& opt) {
  if (a.mode() != Mode::full) return skipped_result("pras", "full mode only");
  CheckResult r;
  r.name = "pras";
  const AssemblyMatrix s = assembly(a);
  const std::vector<Flat> flats = a.flats();
  std::vector<VarchenkoMatrix> blocks;
  blocks.reserve(flats.size());
  for (const Flat& x : flats) blocks.push_back(varchenko_matrix_restriction(a, x));
  if (!opt.force_eval && s.entries.size() <= 12) {
    r.note = "symbolic";
    Polynomial prod = 1;
    Polynomial closed = 1;
    for (std::size_t bi = 0; bi < flats.size(); ++bi) {
      prod = prod * det_bareiss(blocks[bi].entries);
      closed = closed * closed_form_det_restriction(a, flats[bi]);
    }
    ++r.instances;
    if (det_bareiss(s.entries) != prod) record(r, "det S differs from block product");
    ++r.instances;
    if (prod != closed) record(r, "block product differs from closed form");
  } else {
    r.note = "evaluation-verified (" + std::to_string(opt.points) + " points)";
    std::vector<std::vector<WeightedFace>> blockwf;
    blockwf.reserve(flats.size());
    for (const Flat& x : flats) blockwf.push_back(weighted_faces_in(a, x));
    std::mt19937_64 rng(opt.seed + kPrasSalt);
    for (int p = 0; p < opt.points; ++p) {
      const QAssignment q = seeded_assignment(a.m(), rng);
      Rational prod(1);
      Rational closed(1);
      for (std::size_t bi = 0; bi < flats.size(); ++bi) {
        prod *= rat_det(eval_matrix(blocks[bi].entries, q));
        closed *= eval_closed_form(blockwf[bi], q);
      }
      ++r.instances;
      if (rat_det(eval_matrix(s.entries, q)) != prod) {
        record(r, "point " + std::to_string(p) + ": det S differs from block product");
      }
      ++r.instances;
      if (prod != closed) {
        record(r, "point " + std::to_string(p) + ": block product differs from closed form");
      }
    }
  }
  return r;
}

CheckResult check_multiplicities(const Arrangement& a) {
  if (a.mode() != Mode::full) return skipped_result("multiplicities", "full mode only");
  CheckResult r;
  r.name = "multiplicities";
  for (const Face& f : a.faces()) {
    if (f.is_chamber) continue;
    ++r.instances;
    try {
      face_multiplicity(a, f.sign);
    } catch (const MultiplicityInconsistent& e) {
      record(r, "F=" + f.sign + ": " + e.what());
    }
  }
  for (const Flat& x : a.flats()) {
    for (const Face& f : a.faces()) {
      const std::vector<int> sup = zero_support(f.sign);
      if (sup.size() <= x.hyperplanes.size()) continue;
      if (!std::includes(sup.begin(), sup.end(), x.hyperplanes.begin(), x.hyperplanes.end())) {
        continue;
      }
      ++r.instances;
      try {
        face_multiplicity_in(a, x, f.sign);
      } catch (const MultiplicityInconsistent& e) {
        record(r, "F=" + f.sign + " in X=" + x.str() + ": " + e.what());
      }
    }
  }
  return r;
}

CheckResult check_am_dimension(const Arrangement& a, const CheckOptions& opt) {
  if (a.mode() != Mode::full) return skipped_result("am_dimension", "full mode only");
  CheckResult r;
  r.name = "am_dimension";
  std::mt19937_64 rng(opt.seed + kDimensionSalt);
  for (int t = 0; t < opt.trials; ++t) {
    ++r.instances;
    const std::string tag = "trial " + std::to_string(t) + ": ";
    try {
      const QAssignment q = seeded_admissible_assignment(a, rng);
      const DimensionReport rep = solution_dimension(a, q);
      if (rep.dimension != rep.min_face_count) {
        record(r, tag + "dimension " + std::to_string(rep.dimension) + " != min faces " +
                   std::to_string(rep.min_face_count));
      }
    } catch (const Error& e) {
      record(r, tag + e.what());
    }
  }
  return r;
}

CheckResult check_am_central(const Arrangement& a, const CheckOptions& opt) {
  if (a.mode() != Mode::full) return skipped_result("am_central", "full mode only");
  if (!a.is_central()) return skipped_result("am_central", "central arrangements only");
  CheckResult r;
  r.name = "am_central";
  const AMSystem sys = build_system(a);
  const SignVector center(static_cast<std::size_t>(a.m()), '0');
  const int rows = static_cast<int>(sys.rows.size());
  const int cols = static_cast<int>(sys.cols.size());
  int center_col = -1;
  for (int j = 0; j < cols; ++j) {
    if (sys.cols[static_cast<std::size_t>(j)] == center) center_col = j;
  }
  std::mt19937_64 rng(opt.seed + kCentralSalt);
  for (int t = 0; t < opt.trials; ++t) {
    const std::string tag = "trial " + std::to_string(t) + ": ";
    ++r.instances;
    try {
      const QAssignment q = seeded_admissible_assignment(a, rng);
      const AMSolution x = solve_central(a, q, Rational(1));
      if (!verify_solution(a, q, x.values)) record(r, tag + "solution fails the extended system");

      // One elimination solve of the same system, pinned at x_center = 1.
      ++r.instances;
      RatMatrix mat(rows + 1, cols);
      std::vector<Rational> rhs(static_cast<std::size_t>(rows) + 1, Rational(0));
      for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
          mat.at(i, j) =
              sys.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(q);
        }
      }
      mat.at(rows, center_col) = 1;
      rhs.back() = 1;
      const RatSolution pinned = rat_solve(mat, rhs);
      bool match = pinned.consistent && pinned.nullspace.empty();
      if (match) {
        for (int j = 0; j < cols; ++j) {
          if (pinned.particular[static_cast<std::size_t>(j)] !=
              x.values.at(sys.cols[static_cast<std::size_t>(j)])) {
            match = false;
            break;
          }
        }
      }
      if (!match) record(r, tag + "recursion disagrees with elimination");

      ++r.instances;
      const Rational c = seeded_value(rng);
      const AMSolution xc = solve_central(a, q, c);
      bool linear = true;
      for (const auto& [face, value] : x.values) {
        if (xc.values.at(face) != c * value) {
          linear = false;
          break;
        }
      }
      if (!linear) record(r, tag + "x0 scaling is not linear");

      ++r.instances;
      const AMSolution xs = solve_central(a, q.swapped(), Rational(1));
      bool symmetric = true;
      for (const auto& [face, value] : x.values) {
        if (xs.values.at(a.opposite(face)) != value) {
          symmetric = false;
          break;
        }
      }
      if (!symmetric) record(r, tag + "opposite-face symmetry fails");
    } catch (const Error& e) {
      record(r, tag + e.what());
    }
  }
  return r;
}

std::vector<CheckResult> split_witt_report(const WittReport& report) {
  CheckResult witt;
  witt.name = "witt";
  witt.instances = report.witt_tuples;
  CheckResult eqf1;
  eqf1.name = "eqf1";
  eqf1.instances = report.eqf1_tuples;
  CheckResult eqf2;
  eqf2.name = "eqf2";
  eqf2.instances = report.eqf2_tuples;
  CheckResult prd;
  prd.name = "prd";
  prd.instances = report.prd_tuples;
  if (report.prd_skipped) {
    prd.skipped = true;
    prd.note = "needs geometric input";
  } else {
    prd.note = "bounded chambers: " + std::to_string(report.bounded_chambers);
  }
  for (const WittViolation& v : report.violations) {
    CheckResult* target = &witt;
    if (v.identity == "eqf1") {
      target = &eqf1;
    } else if (v.identity == "eqf2") {
      target = &eqf2;
    } else if (v.identity == "prd") {
      target = &prd;
    }
    record(*target, v.identity == "input" ? "input: " + v.witness : v.witness);
  }
  return {witt, eqf1, eqf2, prd};
}

std::vector<CheckResult> witt_checks(const Arrangement& a) {
  if (a.mode() == Mode::full) return split_witt_report(witt_check(a));
  std::vector<CheckResult> out;
  for (const char* name : {"witt", "eqf1", "eqf2", "prd"}) {
    out.push_back(skipped_result(name, "full mode only"));
  }
  return out;
}

std::vector<CheckResult> distance_checks(const Arrangement& a) {
  std::vector<CheckResult> out;
  out.push_back(check_distance_cfd(a));
  out.push_back(check_distance_lefg(a));
  out.push_back(check_distance_leflf(a));
  out.push_back(check_distance_literal(a));
  out.push_back(check_reciprocity(a));
  return out;
}

std::vector<CheckResult> run_all_checks(const Arrangement& a, const CheckOptions& opt) {
  std::vector<CheckResult> out;
  out.push_back(check_validate(a));
  for (CheckResult& c : distance_checks(a)) out.push_back(std::move(c));
  for (CheckResult& c : witt_checks(a)) out.push_back(std::move(c));
  out.push_back(check_thdet(a, opt));
  out.push_back(check_thdet_apartments(a, opt));
  out.push_back(check_pras(a, opt));
  out.push_back(check_multiplicities(a));
  out.push_back(check_am_dimension(a, opt));
  out.push_back(check_am_central(a, opt));
  return out;
}

}  // namespace varch
