#include "varch/varchenko.hpp"

#include <algorithm>
#include <optional>

namespace varch {

namespace {

Polynomial conflict_product(const SignVector& f, const SignVector& g,
                            const std::vector<bool>* mask) {
  Monomial m;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (mask && !(*mask)[i]) continue;
    if (f[i] == '0' || g[i] == '0' || f[i] == g[i]) continue;
    m = m * Monomial::variable({static_cast<int>(i) + 1, f[i] == '-'});
  }
  return Polynomial::term(m, 1);
}

// The unique maximum of {g in pool : g <= c, g[h-1] == '0'}, if any.
std::optional<SignVector> max_zero_face(const std::vector<SignVector>& pool,
                                        const SignVector& c, int h) {
  const std::size_t at = static_cast<std::size_t>(h - 1);
  const SignVector* best = nullptr;
  for (const SignVector& g : pool) {
    if (g[at] != '0' || !sign_leq(g, c)) continue;
    if (best == nullptr || sign_leq(*best, g)) best = &g;
  }
  if (best == nullptr) return std::nullopt;
  for (const SignVector& g : pool) {
    if (g[at] != '0' || !sign_leq(g, c)) continue;
    if (!sign_leq(g, *best)) return std::nullopt;  // two incomparable maxima
  }
  return *best;
}

// Shared multiplicity rule: for every usable hyperplane h, count the
// chambers whose maximal zero face at h is exactly f; all counts must agree
// and be even.
int half_count(const std::vector<SignVector>& pool, const std::vector<SignVector>& chambers,
               const std::vector<int>& hyperplanes, const SignVector& f) {
  if (hyperplanes.empty()) {
    throw MultiplicityInconsistent("no hyperplane vanishes on " + f);
  }
  int agreed = -1;
  for (int h : hyperplanes) {
    int count = 0;
    for (const SignVector& c : chambers) {
      std::optional<SignVector> top = max_zero_face(pool, c, h);
      if (top && *top == f) ++count;
    }
    if (agreed == -1) {
      agreed = count;
    } else if (agreed != count) {
      throw MultiplicityInconsistent("counts for " + f + " differ across hyperplanes: " +
                                     std::to_string(agreed) + " vs " + std::to_string(count));
    }
  }
  if (agreed % 2 != 0) {
    throw MultiplicityInconsistent("odd chamber count " + std::to_string(agreed) + " for " + f);
  }
  return agreed / 2;
}

}  // namespace

Polynomial distance(const Arrangement& a, const SignVector& c, const SignVector& d) {
  for (const SignVector* s : {&c, &d}) {
    if (!a.contains(*s) || !a.face(*s).is_chamber) {
      throw NotChamber(*s + " is not a chamber of the arrangement");
    }
  }
  return conflict_product(c, d, nullptr);
}

Polynomial distance_extended(const Arrangement& a, const SignVector& f, const SignVector& g) {
  if (a.mode() != Mode::full) throw ModeError("extended distances need the full face set");
  const SignVector& fs = a.face(f).sign;
  const SignVector& gs = a.face(g).sign;
  return conflict_product(fs, gs, nullptr);
}

VarchenkoMatrix varchenko_matrix(const Arrangement& a, const Apartment& k) {
  VarchenkoMatrix out;
  out.chambers = a.apartment_chambers(k);  // sorted, nonempty
  const int n = static_cast<int>(out.chambers.size());
  out.entries = PolyMatrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.entries.at(i, j) = conflict_product(out.chambers[static_cast<std::size_t>(i)],
                                              out.chambers[static_cast<std::size_t>(j)], nullptr);
    }
  }
  return out;
}

VarchenkoMatrix varchenko_matrix_restriction(const Arrangement& a, const Flat& x) {
  VarchenkoMatrix out;
  out.chambers = a.restriction_chambers(x);
  std::vector<bool> mask(static_cast<std::size_t>(a.m()), false);
  for (int h : a.restriction_separators(x)) mask[static_cast<std::size_t>(h - 1)] = true;
  const int n = static_cast<int>(out.chambers.size());
  out.entries = PolyMatrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.entries.at(i, j) = conflict_product(out.chambers[static_cast<std::size_t>(i)],
                                              out.chambers[static_cast<std::size_t>(j)], &mask);
    }
  }
  return out;
}

Polynomial face_weight(const Arrangement& a, const SignVector& f) {
  if (a.mode() != Mode::full) throw ModeError("face weights need the full face set");
  const Face& face = a.face(f);
  if (face.is_chamber) throw ChamberHasNoWeight("chamber " + f + " has no weight");
  Monomial m;
  for (int h : zero_support(face.sign)) {
    m = m * Monomial::variable({h, false}) * Monomial::variable({h, true});
  }
  return Polynomial::term(m, 1);
}

int face_multiplicity(const Arrangement& a, const SignVector& f) {
  if (a.mode() != Mode::full) throw ModeError("multiplicities need the full face set");
  const Face& face = a.face(f);
  if (face.is_chamber) throw ChamberHasNoWeight("chamber " + f + " has no multiplicity");
  std::vector<SignVector> pool;
  pool.reserve(a.faces().size());
  for (const Face& g : a.faces()) pool.push_back(g.sign);
  return half_count(pool, a.chambers(), zero_support(face.sign), face.sign);
}

std::vector<WeightedFace> weighted_faces(const Arrangement& a, const Apartment& k) {
  if (a.mode() != Mode::full) throw ModeError("face weights need the full face set");
  check_apartment(k, a.m());
  std::vector<WeightedFace> out;
  for (const Face& f : a.faces()) {
    if (f.is_chamber) continue;
    bool match = true;
    for (const auto& [h, sign] : k.constraints) {
      if (f.sign[static_cast<std::size_t>(h - 1)] != sign) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    out.push_back({f.sign, face_weight(a, f.sign), face_multiplicity(a, f.sign)});
  }
  return out;
}

Polynomial closed_form_det(const Arrangement& a, const Apartment& k) {
  Polynomial det(1);
  for (const WeightedFace& wf : weighted_faces(a, k)) {
    const Polynomial factor = Polynomial(1) - wf.weight;
    for (int e = 0; e < wf.multiplicity; ++e) det = det * factor;
  }
  return det;
}

namespace {

// Faces whose support contains x: the face poset of the restriction to x.
std::vector<SignVector> faces_over(const Arrangement& a, const Flat& x) {
  std::vector<SignVector> out;
  for (const Face& f : a.faces()) {
    const std::vector<int> sup = zero_support(f.sign);
    if (std::includes(sup.begin(), sup.end(), x.hyperplanes.begin(), x.hyperplanes.end())) {
      out.push_back(f.sign);
    }
  }
  return out;
}

}  // namespace

Polynomial face_weight_in(const Arrangement& a, const Flat& x, const SignVector& f) {
  const std::vector<int> seps = a.restriction_separators(x);  // checks mode + flat
  const Face& face = a.face(f);
  const std::vector<int> sup = zero_support(face.sign);
  if (!std::includes(sup.begin(), sup.end(), x.hyperplanes.begin(), x.hyperplanes.end())) {
    throw InputError(f + " is not a face of the restriction to " + x.str());
  }
  if (sup == x.hyperplanes) {
    throw ChamberHasNoWeight(f + " is a chamber of the restriction to " + x.str());
  }
  Monomial m;
  for (int h : seps) {
    if (face.sign[static_cast<std::size_t>(h - 1)] == '0') {
      m = m * Monomial::variable({h, false}) * Monomial::variable({h, true});
    }
  }
  return Polynomial::term(m, 1);
}

int face_multiplicity_in(const Arrangement& a, const Flat& x, const SignVector& f) {
  const std::vector<int> seps = a.restriction_separators(x);
  const Face& face = a.face(f);
  const std::vector<int> sup = zero_support(face.sign);
  if (!std::includes(sup.begin(), sup.end(), x.hyperplanes.begin(), x.hyperplanes.end())) {
    throw InputError(f + " is not a face of the restriction to " + x.str());
  }
  if (sup == x.hyperplanes) {
    throw ChamberHasNoWeight(f + " is a chamber of the restriction to " + x.str());
  }
  std::vector<int> usable;
  for (int h : seps) {
    if (face.sign[static_cast<std::size_t>(h - 1)] == '0') usable.push_back(h);
  }
  return half_count(faces_over(a, x), a.restriction_chambers(x), usable, face.sign);
}

std::vector<WeightedFace> weighted_faces_in(const Arrangement& a, const Flat& x) {
  std::vector<WeightedFace> out;
  for (const SignVector& f : faces_over(a, x)) {
    if (zero_support(f) == x.hyperplanes) continue;  // restriction chamber
    out.push_back({f, face_weight_in(a, x, f), face_multiplicity_in(a, x, f)});
  }
  return out;
}

Polynomial closed_form_det_restriction(const Arrangement& a, const Flat& x) {
  Polynomial det(1);
  for (const WeightedFace& wf : weighted_faces_in(a, x)) {
    const Polynomial factor = Polynomial(1) - wf.weight;
    for (int e = 0; e < wf.multiplicity; ++e) det = det * factor;
  }
  return det;
}

AssemblyMatrix assembly(const Arrangement& a) {
  AssemblyMatrix out;
  out.flats = a.flats();  // enforces full mode
  for (std::size_t b = 0; b < out.flats.size(); ++b) {
    for (const Face& f : a.faces()) {
      if (zero_support(f.sign) == out.flats[b].hyperplanes) {
        out.faces.push_back(f.sign);
        out.block_of.push_back(static_cast<int>(b));
      }
    }
  }
  const int n = static_cast<int>(out.faces.size());
  out.entries = PolyMatrix(n);
  for (int i = 0; i < n; ++i) {
    const SignVector& f = out.faces[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      const SignVector& g = out.faces[static_cast<std::size_t>(j)];
      if (compose(g, f) == g) {
        out.entries.at(i, j) = conflict_product(f, g, nullptr);
      }
    }
  }
  return out;
}

Polynomial assembly_det(const Arrangement& a, int crosscheck_cap) {
  Polynomial det(1);
  for (const Flat& x : a.flats()) {
    det = det * det_bareiss(varchenko_matrix_restriction(a, x).entries);
  }
  if (static_cast<int>(a.faces().size()) <= crosscheck_cap) {
    const AssemblyMatrix s = assembly(a);
    if (!(det_bareiss(s.entries) == det)) {
      throw Error("assembly determinant disagrees with the blockwise product");
    }
  }
  return det;
}

}  // namespace varch
