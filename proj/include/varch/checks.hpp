#pragma once

// Property-check drivers: each check examines one identity of the library,
// exhaustively where the identity is finite and at seeded random rational
// points where it is not.  A fixed seed fully determines every randomized
// check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "varch/amsystem.hpp"
#include "varch/arrangement.hpp"
#include "varch/polynomial.hpp"
#include "varch/varchenko.hpp"

namespace varch {

struct CheckResult {
  std::string name;
  long instances = 0;   // tuples examined
  long violations = 0;  // tuples that failed
  bool skipped = false;
  std::string note;                  // verification mode or skip reason
  std::vector<std::string> samples;  // first few failure witnesses
  bool pass() const { return skipped || violations == 0; }
};

struct CheckOptions {
  std::uint64_t seed = 0;
  int points = 20;          // evaluation points for determinant checks
  int trials = 5;           // q-assignment draws for linear-system checks
  bool force_eval = false;  // evaluation mode even when symbolic would fit
};

// One q value: +/- n/d with n in 1..9 and d in 10..19, so |q| < 1.
Rational seeded_value(std::mt19937_64& rng);
QAssignment seeded_assignment(int m, std::mt19937_64& rng);
// Redraws until the evaluated assembly determinant is nonzero.
QAssignment seeded_admissible_assignment(const Arrangement& a, std::mt19937_64& rng);

// det V_A^K == prod (1 - b_F)^{beta_F}, symbolically / at one point.
bool thdet_symbolic_holds(const Arrangement& a, const Apartment& k = {});
bool thdet_eval_holds(const Arrangement& a, const Apartment& k, const QAssignment& q);

CheckResult check_validate(const Arrangement& a);
CheckResult check_distance_cfd(const Arrangement& a);
CheckResult check_distance_lefg(const Arrangement& a);
CheckResult check_distance_leflf(const Arrangement& a);
CheckResult check_distance_literal(const Arrangement& a);
CheckResult check_reciprocity(const Arrangement& a);
CheckResult check_thdet(const Arrangement& a, const CheckOptions& opt);
CheckResult check_thdet_apartments(const Arrangement& a, const CheckOptions& opt);
CheckResult check_pras(const Arrangement& a, const CheckOptions& opt);
CheckResult check_multiplicities(const Arrangement& a);
CheckResult check_am_dimension(const Arrangement& a, const CheckOptions& opt);
CheckResult check_am_central(const Arrangement& a, const CheckOptions& opt);

// Repackages a WittReport as one CheckResult per identity, in the order
// witt, eqf1, eqf2, prd.
std::vector<CheckResult> split_witt_report(const WittReport& report);

// Runs witt_check and splits the report; on chambers_only input returns the
// four results marked skipped instead of throwing.
std::vector<CheckResult> witt_checks(const Arrangement& a);

std::vector<CheckResult> distance_checks(const Arrangement& a);
std::vector<CheckResult> run_all_checks(const Arrangement& a, const CheckOptions& opt);

}  // namespace varch
