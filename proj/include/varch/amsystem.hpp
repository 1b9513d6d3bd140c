#pragma once

// The Aguiar-Mahajan linear system attached to an arrangement: one equation
// per non-minimal face, unknowns indexed by all faces.  Includes the exact
// rank/dimension analysis at a rational weight assignment, the recursive
// solution in the central case, and the Witt-style alternating-sum
// identities the equations rest on.

#include <map>
#include <string>
#include <vector>

#include "varch/arrangement.hpp"
#include "varch/linalg.hpp"
#include "varch/polynomial.hpp"
#include "varch/varchenko.hpp"

namespace varch {

struct AMSystem {
  std::vector<SignVector> rows;  // non-minimal faces, sign order
  std::vector<SignVector> cols;  // all faces, sign order
  // entries[i][j] = v(cols[j], rows[i]) when rows[i] * cols[j] == rows[i].
  std::vector<std::vector<Polynomial>> entries;
};

AMSystem build_system(const Arrangement& a);  // full mode only

struct DimensionReport {
  int dimension = 0;       // #cols - rank of the evaluated system
  int min_face_count = 0;  // what the dimension theorem predicts
  int rank = 0;
};

// Evaluates the system at q and measures the solution space.  Throws
// DegenerateAssignment when det S_A(q) == 0 (the theorem needs an
// admissible assignment).
DimensionReport solution_dimension(const Arrangement& a, const QAssignment& q);

struct AMSolution {
  std::map<SignVector, Rational> values;  // face -> x_f
};

// Solves the system of a central arrangement by rank recursion from
// x_O = x0 at the center O.  Throws PoleEncountered when a factor
// 1 - v(G,~G) v(~G,G) vanishes at q; the result always passes
// verify_solution.
AMSolution solve_central(const Arrangement& a, const QAssignment& q, const Rational& x0);

// Whether x satisfies the extended system: for every non-minimal L and every
// G >= L, sum over {F : LF = G} of x_F * v(F,G)(q) vanishes.  (L = G gives
// back the defining equations.)  Throws InputError when x misses a face.
bool verify_solution(const Arrangement& a, const QAssignment& q,
                     const std::map<SignVector, Rational>& x);

struct WittViolation {
  std::string identity;  // "witt", "eqf1", "eqf2" or "prd"
  std::string witness;
};

struct WittReport {
  long witt_tuples = 0;   // (chamber D, face A <= D, chamber C) checked
  long eqf1_tuples = 0;   // (face G, face A <= G, face L) checked
  long eqf2_tuples = 0;
  long prd_tuples = 0;    // (bounded chamber D, chamber C != D) checked
  int bounded_chambers = -1;  // -1 when no geometry is attached
  bool prd_skipped = false;
  std::vector<WittViolation> violations;  // capped at 100 entries
  bool pass() const { return violations.empty(); }
};

// Exhaustively checks the alternating-sum identities over all nested pairs
// (A, G), A <= G:
//   witt: sum over {F in [A,D] : FC = D} of (-1)^rk F
//         = (-1)^rk D when AC = ~D, else 0        (D, C chambers)
//   eqf1: sum over {F in [A,G] : FL <= G} of (-1)^rk F
//         = (-1)^rk G when AL = ~G, else 0
//   eqf2: sum over {F in [A,G] : FL = G} of (-1)^rk F
//         = (-1)^rk G when AL <= ~G, else 0
//   prd:  sum over {F <= D : FC = D} of (-1)^rk F = 0
//         (D bounded chamber, C any other chamber; needs geometry)
// where ~ is tilde(A, .).
WittReport witt_check(const Arrangement& a);

}  // namespace varch
