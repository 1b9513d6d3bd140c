// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "varch/amsystem.hpp"
#include "varch/checks.hpp"
#include "varch/json_io.hpp"
#include "varch/varchenko.hpp"

using namespace varch;

namespace {

const std::string kFixtures = VARCH_FIXTURE_DIR;
constexpr std::uint64_t kSeed = 0x5eed2026;

Arrangement fixture(const std::string& name) {
  return load_arrangement(kFixtures + "/" + name + ".json");
}

Polynomial var(int h, bool minus) { return Polynomial::variable(Variable{h, minus}); }

Polynomial qq(int h) { return var(h, false) * var(h, true); }

// All proper one-constraint apartments, skipping empty ones.
std::vector<Apartment> single_constraint_apartments(const Arrangement& a) {
  std::vector<Apartment> out;
  for (int h = 1; h <= a.m(); ++h) {
    for (char s : {'+', '-'}) {
      Apartment k;
      k.constraints[h] = s;
      try {
        a.apartment_chambers(k);
      } catch (const EmptyApartment&) {
        continue;
      }
      out.push_back(std::move(k));
    }
  }
  return out;
}

bool example_matrix(std::string& detail) {
  const Arrangement a = Arrangement::from_covectors(
      4, Mode::chambers_only, {"+---", "-+--", "--+-", "---+", "----"});
  const VarchenkoMatrix vm = varchenko_matrix(a);
  const std::vector<SignVector> order = {"+---", "-+--", "--+-", "---+", "----"};
  if (vm.chambers != order) {
    detail = "unexpected chamber order";
    return false;
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      Polynomial expected;
      if (i == j) {
        expected = Polynomial(1);
      } else if (i == 4) {
        expected = var(j + 1, true);
      } else if (j == 4) {
        expected = var(i + 1, false);
      } else {
        expected = var(i + 1, false) * var(j + 1, true);
      }
      if (vm.entries.at(i, j) != expected) {
        detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs";
        return false;
      }
    }
  }
  Polynomial product(1);
  for (int h = 1; h <= 4; ++h) product = product * (Polynomial(1) - qq(h));
  if (det_bareiss(vm.entries) != product) {
    detail = "determinant differs from the closed product";
    return false;
  }
  detail = "25 entries and the determinant match";
  return true;
}

bool thdet_symbolic(std::string& detail) {
  long instances = 0;
  for (const char* name :
       {"one_hyperplane", "two_lines", "three_concurrent", "two_points", "three_generic"}) {
    const Arrangement a = fixture(name);
    if (!thdet_symbolic_holds(a)) {
      detail = std::string(name) + ": whole arrangement differs";
      return false;
    }
    ++instances;
    const std::vector<Apartment> apartments = single_constraint_apartments(a);
    // every proper one-constraint apartment; at least 3 exist for every
    // fixture with m >= 2 (one hyperplane has exactly 2 proper apartments)
    if (static_cast<int>(apartments.size()) < (a.m() >= 2 ? 3 : 2)) {
      detail = std::string(name) + ": too few proper apartments";
      return false;
    }
    for (const Apartment& k : apartments) {
      if (!thdet_symbolic_holds(a, k)) {
        detail = std::string(name) + ": apartment instance differs";
        return false;
      }
      ++instances;
    }
  }
  detail = std::to_string(instances) + " symbolic instances";
  return true;
}

bool thdet_eval(std::string& detail) {
  const Arrangement a = fixture("boolean3");
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 20; ++i) {
    if (!thdet_eval_holds(a, {}, seeded_assignment(a.m(), rng))) {
      detail = "disagreement at point " + std::to_string(i + 1);
      return false;
    }
  }
  detail = "20 evaluation points agree";
  return true;
}

bool assembly_product(std::string& detail) {
  for (const char* name : {"one_hyperplane", "two_lines"}) {
    const Arrangement a = fixture(name);
    const AssemblyMatrix s = assembly(a);
    Polynomial product(1);
    for (const Flat& x : s.flats) {
      product = product * det_bareiss(varchenko_matrix_restriction(a, x).entries);
    }
    if (det_bareiss(s.entries) != product) {
      detail = std::string(name) + ": determinant differs from the block product";
      return false;
    }
  }
  detail = "assembly determinants factor over the flats";
  return true;
}

bool multiplicities(std::string& detail) {
  for (const char* name : {"one_hyperplane", "two_lines", "three_concurrent", "two_points",
                           "three_generic", "boolean3"}) {
    const CheckResult r = check_multiplicities(fixture(name));
    if (r.skipped || r.violations > 0) {
      detail = std::string(name) + ": inconsistent multiplicities";
      return false;
    }
  }
  const Arrangement b = fixture("two_lines");
  for (const char* edge : {"0+", "0-", "+0", "-0"}) {
    if (face_multiplicity(b, edge) != 1) {
      detail = std::string("two_lines: edge ") + edge + " has multiplicity != 1";
      return false;
    }
  }
  if (face_multiplicity(b, "00") != 0) {
    detail = "two_lines: center has multiplicity != 0";
    return false;
  }
  if (face_multiplicity(fixture("three_concurrent"), "000") != 1) {
    detail = "three_concurrent: center has multiplicity != 1";
    return false;
  }
  detail = "6 fixtures consistent; pinned multiplicities match";
  return true;
}

bool dimension_counts(std::string& detail) {
  const std::vector<std::pair<const char*, int>> expected = {
      {"one_hyperplane", 1}, {"two_lines", 1}, {"two_points", 2}, {"three_generic", 3}};
  std::mt19937_64 rng(kSeed);
  for (const auto& [name, dim] : expected) {
    const Arrangement a = fixture(name);
    for (int t = 0; t < 5; ++t) {
      const QAssignment q = seeded_admissible_assignment(a, rng);
      const DimensionReport r = solution_dimension(a, q);
      if (r.dimension != dim || r.min_face_count != dim) {
        detail = std::string(name) + ": dimension " + std::to_string(r.dimension) +
                 " != " + std::to_string(dim);
        return false;
      }
    }
  }
  detail = "4 fixtures x 5 admissible assignments";
  return true;
}

bool central_recursion(std::string& detail) {
  for (const char* name : {"one_hyperplane", "two_lines", "three_concurrent"}) {
    CheckOptions opt;
    opt.seed = kSeed;
    opt.trials = 10;
    const CheckResult r = check_am_central(fixture(name), opt);
    if (r.skipped || r.violations > 0 || r.instances != 40) {
      detail = std::string(name) + ": " + std::to_string(r.violations) + " violations in " +
               std::to_string(r.instances) + " instances";
      return false;
    }
  }
  detail = "3 fixtures x 10 assignments: recursion matches the pinned solver and verifies";
  return true;
}

bool witt_suite(std::string& detail) {
  long tuples = 0;
  for (const char* name : {"one_hyperplane", "two_lines", "three_concurrent", "two_points",
                           "three_generic", "boolean3"}) {
    const WittReport r = witt_check(fixture(name));
    if (!r.pass()) {
      detail = std::string(name) + ": " + std::to_string(r.violations.size()) + " violations (" +
               r.violations.front().identity + " " + r.violations.front().witness + ")";
      return false;
    }
    tuples += r.witt_tuples + r.eqf1_tuples + r.eqf2_tuples + r.prd_tuples;
  }
  const WittReport triangle = witt_check(fixture("three_generic"));
  if (triangle.prd_skipped || triangle.bounded_chambers != 1 || triangle.prd_tuples != 6) {
    detail = "three_generic: bounded triangle not exercised";
    return false;
  }
  detail = std::to_string(tuples) + " tuples, zero violations";
  return true;
}

bool distance_lemmas(std::string& detail) {
  long instances = 0;
  for (const char* name : {"one_hyperplane", "two_lines", "three_concurrent", "two_points",
                           "three_generic", "boolean3"}) {
    const Arrangement a = fixture(name);
    for (const CheckResult& r :
         {check_distance_cfd(a), check_distance_lefg(a), check_distance_leflf(a)}) {
      if (r.skipped || r.violations > 0) {
        detail = std::string(name) + ": " + r.name + " fails";
        return false;
      }
      instances += r.instances;
    }
  }
  detail = std::to_string(instances) + " symbolic instances";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    long budget_ms;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Example 1 matrix and determinant", 1000, example_matrix},
      {2, "determinant factorization, symbolic", 30000, thdet_symbolic},
      {3, "determinant factorization, evaluation mode", 60000, thdet_eval},
      {4, "assembly determinant product", 10000, assembly_product},
      {5, "multiplicity consistency", 5000, multiplicities},
      {6, "solution dimension", 10000, dimension_counts},
      {7, "central recursion", 20000, central_recursion},
      {8, "witt identities", 60000, witt_suite},
      {9, "distance lemmas", 30000, distance_lemmas},
  };
  int failed = 0;
  long total_ms = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    total_ms += ms;
    if (ms > c.budget_ms) {
      ok = false;
      detail += " [over the " + std::to_string(c.budget_ms) + " ms budget]";
    }
    if (!ok) ++failed;
    std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << " (" << ms
              << " ms) " << c.title << " - " << detail << '\n';
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed in "
            << total_ms << " ms" << '\n';
  return failed == 0 ? 0 : 1;
}
