#pragma once

// Sign-vector combinatorics of dehyperplane arrangements.  A face is a sign
// vector over {+,0,-}, one coordinate per hyperplane; chambers are the faces
// without zeros.  An Arrangement is either the full face set (mode full) or
// just the chambers (mode chambers_only); geometric input enumerates the
// face set of a real rational arrangement exactly.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "varch/errors.hpp"
#include "varch/feasibility.hpp"
#include "varch/rational.hpp"

namespace varch {

// One character per hyperplane: '+', '0' or '-'.
using SignVector = std::string;

bool is_sign_vector(const std::string& s);
char negate_sign(char c);
SignVector negate(const SignVector& f);

// Tits composition: (fg)_h = f_h when f_h != 0, else g_h.
SignVector compose(const SignVector& f, const SignVector& g);

// Face partial order: f <= g iff every coordinate of f is 0 or agrees with g.
bool sign_leq(const SignVector& f, const SignVector& g);

// 1-based indices of the zero coordinates (the support s(f)).
std::vector<int> zero_support(const SignVector& f);

// A flat is a set of hyperplane indices (1-based, strictly increasing) that
// arises as the support of at least one face.  The empty flat is the whole
// space.
struct Flat {
  std::vector<int> hyperplanes;
  friend bool operator==(const Flat&, const Flat&) = default;
  std::string str() const;  // "{1,3}" or "{}"
};

// Sorts flats by (cardinality, lexicographic), the block order used by the
// assembly matrix.
bool flat_before(const Flat& a, const Flat& b);

// A sub-arrangement selector: hyperplane index -> required sign.  Faces of
// the apartment are the faces satisfying every constraint strictly.
struct Apartment {
  std::map<int, char> constraints;  // value is '+' or '-'
};

struct Face {
  SignVector sign;
  int rank = 0;  // length of the longest strictly increasing chain below
  bool is_chamber = false;
};

struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;  // the hyperplane is normal . x == offset
};

struct Geometry {
  int dim = 0;
  std::vector<Hyperplane> hyperplanes;
};

enum class Mode { full, chambers_only };

constexpr int kEnumerationCap = 12;  // max hyperplanes for 3^m enumeration

struct ValidationIssue {
  std::string check;    // which invariant failed
  std::string witness;  // first witness of the failure
};

struct ValidationReport {
  bool pass = true;
  std::vector<ValidationIssue> issues;
};

// Evaluates the sign of every hyperplane at a point.
SignVector sign_vector_at(const Geometry& g, const std::vector<Rational>& point);

// Whether the open cell with the given signs is nonempty.
bool cell_feasible(const Geometry& g, const SignVector& sigma);

// A point of the open cell, when nonempty.
std::optional<std::vector<Rational>> cell_point(const Geometry& g, const SignVector& sigma);

// Whether the closure of the chamber is a bounded set (trivial recession
// cone).  Requires sigma free of zeros.
bool bounded_chamber(const Geometry& g, const SignVector& sigma);

class Arrangement {
 public:
  // Takes the face list as given (duplicates and all) so validate() can
  // report problems; malformed sign strings are rejected outright.
  static Arrangement from_covectors(int m, Mode mode, const std::vector<SignVector>& faces);
  // Enumerates all 3^m candidate sign vectors of a rational arrangement and
  // keeps the feasible ones.  Throws CapExceeded when m > cap.
  static Arrangement from_geometry(Geometry g, int cap = kEnumerationCap);

  int m() const { return m_; }
  Mode mode() const { return mode_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::optional<Geometry>& geometry() const { return geometry_; }

  bool contains(const SignVector& f) const;
  const Face& face(const SignVector& f) const;  // InputError when absent
  int rank_of(const SignVector& f) const { return face(f).rank; }
  std::vector<SignVector> chambers() const;

  ValidationReport validate() const;

  // Distinct supports, sorted by (cardinality, lex).  full mode only.
  std::vector<Flat> flats() const;
  // The support of f as a flat.
  Flat centralization(const SignVector& f) const;
  // Faces with no face strictly below them.  full mode only.
  std::vector<SignVector> min_faces() const;
  // Central iff the all-zero face is present.
  bool is_central() const;

  // The face with every sign negated.  Throws NotCentral when the
  // arrangement is not central, OppositeMissing when absent.
  SignVector opposite(const SignVector& f) const;

  // Opposite of g within the sub-arrangement spanned by base: negates the
  // coordinates in s(base), keeps the rest.  Requires base <= g.
  SignVector tilde(const SignVector& base, const SignVector& g) const;

  // Faces / chambers matching all apartment constraints strictly.
  struct ApartmentSelection {
    std::vector<SignVector> faces;
    std::vector<SignVector> chambers;
  };
  ApartmentSelection apartment_faces(const Apartment& k) const;  // full mode
  std::vector<SignVector> apartment_chambers(const Apartment& k) const;

  // The chambers of the restriction to flat x: faces with support exactly x.
  std::vector<SignVector> restriction_chambers(const Flat& x) const;
  // Hyperplanes outside x that vanish on some face whose support contains x;
  // these carry the weights of the restricted arrangement.
  std::vector<int> restriction_separators(const Flat& x) const;

 private:
  void index_faces();
  void assign_ranks();

  int m_ = 0;
  Mode mode_ = Mode::full;
  std::vector<Face> faces_;            // sorted by sign string
  std::map<SignVector, int> index_;    // sign -> first position in faces_
  std::optional<Geometry> geometry_;
};

void check_apartment(const Apartment& k, int m);  // InputError on bad keys/values

}  // namespace varch
