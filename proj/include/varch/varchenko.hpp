#pragma once

// Varchenko matrices of an arrangement (and of its apartments and flat
// restrictions), the closed-form factorization of their determinants, and
// the assembly matrix gathering all restrictions at once.

#include <vector>

#include "varch/arrangement.hpp"
#include "varch/linalg.hpp"
#include "varch/polynomial.hpp"

namespace varch {

// v(c,d) over chambers: product of q_h^{sign of c at h} over the hyperplanes
// separating c from d.
Polynomial distance(const Arrangement& a, const SignVector& c, const SignVector& d);

// v(f,g) over arbitrary faces: product over the coordinates where f and g
// carry opposite nonzero signs.  Agrees with v^{s(fg)}(fg, gf).
Polynomial distance_extended(const Arrangement& a, const SignVector& f, const SignVector& g);

struct VarchenkoMatrix {
  std::vector<SignVector> chambers;  // row/column labels, sorted by sign
  PolyMatrix entries;                // entries(i,j) = v(chambers[i], chambers[j])
};

// Varchenko matrix of the apartment selected by k (of the whole arrangement
// when k has no constraints).
VarchenkoMatrix varchenko_matrix(const Arrangement& a, const Apartment& k = {});

// Varchenko matrix of the restriction to flat x: chambers are the faces
// supported exactly on x, distances run over the separators of x only.
VarchenkoMatrix varchenko_matrix_restriction(const Arrangement& a, const Flat& x);

// b_f: product of q_h+ * q_h- over the support of f.  Chambers carry no
// weight.  full mode only.
Polynomial face_weight(const Arrangement& a, const SignVector& f);

// beta_f: half the number of chambers whose zero set against any fixed
// support hyperplane h maximizes at f.  The count must come out even and
// independent of the choice of h, else MultiplicityInconsistent.
int face_multiplicity(const Arrangement& a, const SignVector& f);

struct WeightedFace {
  SignVector face;
  Polynomial weight;
  int multiplicity;
};

// All non-chamber faces inside apartment k with their weights and (global)
// multiplicities, in sign order.
std::vector<WeightedFace> weighted_faces(const Arrangement& a, const Apartment& k = {});

// Product of (1 - weight)^multiplicity over weighted_faces(a, k); equals
// det(varchenko_matrix(a, k)).
Polynomial closed_form_det(const Arrangement& a, const Apartment& k = {});

// Weight/multiplicity of f inside the restriction to x (f must have support
// strictly containing x); the restricted closed form multiplies these out.
Polynomial face_weight_in(const Arrangement& a, const Flat& x, const SignVector& f);
int face_multiplicity_in(const Arrangement& a, const Flat& x, const SignVector& f);
std::vector<WeightedFace> weighted_faces_in(const Arrangement& a, const Flat& x);
Polynomial closed_form_det_restriction(const Arrangement& a, const Flat& x);

struct AssemblyMatrix {
  std::vector<SignVector> faces;  // grouped by flat blocks, sign order inside
  std::vector<Flat> flats;        // block order: (cardinality, lex)
  std::vector<int> block_of;      // faces[i] belongs to flats[block_of[i]]
  PolyMatrix entries;             // (f,g) = v(f,g) when gf == g, else 0
};

// The assembly matrix: block lower-triangular in the flat order, with the
// restriction matrices on the block diagonal.
AssemblyMatrix assembly(const Arrangement& a);

// det of the assembly matrix, computed blockwise as the product of the
// restriction determinants.  When the face count is within crosscheck_cap
// the result is verified against a direct Bareiss determinant of the full
// matrix.
Polynomial assembly_det(const Arrangement& a, int crosscheck_cap = 12);

}  // namespace varch
