#include "varch/arrangement.hpp"

#include <algorithm>

namespace varch {

bool is_sign_vector(const std::string& s) {
  for (char c : s) {
    if (c != '+' && c != '0' && c != '-') return false;
  }
  return true;
}

char negate_sign(char c) {
  if (c == '+') return '-';
  if (c == '-') return '+';
  return '0';
}

SignVector negate(const SignVector& f) {
  SignVector out = f;
  for (char& c : out) c = negate_sign(c);
  return out;
}

SignVector compose(const SignVector& f, const SignVector& g) {
  if (f.size() != g.size()) {
    throw LengthMismatch("compose: " + f + " vs " + g);
  }
  SignVector out = f;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] == '0') out[i] = g[i];
  }
  return out;
}

bool sign_leq(const SignVector& f, const SignVector& g) {
  if (f.size() != g.size()) {
    throw LengthMismatch("sign_leq: " + f + " vs " + g);
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != '0' && f[i] != g[i]) return false;
  }
  return true;
}

std::vector<int> zero_support(const SignVector& f) {
  std::vector<int> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == '0') out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

std::string Flat::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(hyperplanes[i]);
  }
  return out + "}";
}

bool flat_before(const Flat& a, const Flat& b) {
  if (a.hyperplanes.size() != b.hyperplanes.size()) {
    return a.hyperplanes.size() < b.hyperplanes.size();
  }
  return a.hyperplanes < b.hyperplanes;
}

void check_apartment(const Apartment& k, int m) {
  for (const auto& [h, sign] : k.constraints) {
    if (h < 1 || h > m) {
      throw InputError("apartment constraint on unknown hyperplane " + std::to_string(h));
    }
    if (sign != '+' && sign != '-') {
      throw InputError(std::string("apartment constraint sign must be '+' or '-', got '") +
                       sign + "'");
    }
  }
}

SignVector sign_vector_at(const Geometry& g, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != g.dim) {
    throw LengthMismatch("point dimension mismatch");
  }
  SignVector out(g.hyperplanes.size(), '0');
  for (std::size_t h = 0; h < g.hyperplanes.size(); ++h) {
    Rational v = -g.hyperplanes[h].offset;
    for (int i = 0; i < g.dim; ++i) {
      v += g.hyperplanes[h].normal[static_cast<std::size_t>(i)] * point[static_cast<std::size_t>(i)];
    }
    out[h] = v > 0 ? '+' : (v < 0 ? '-' : '0');
  }
  return out;
}

namespace {

LinearSystem cell_system(const Geometry& g, const SignVector& sigma) {
  if (sigma.size() != g.hyperplanes.size()) {
    throw LengthMismatch("sign vector arity does not match hyperplane count");
  }
  LinearSystem sys;
  sys.dim = g.dim;
  for (std::size_t h = 0; h < sigma.size(); ++h) {
    const Hyperplane& hp = g.hyperplanes[h];
    switch (sigma[h]) {
      case '0':
        sys.equalities.emplace_back(hp.normal, hp.offset);
        break;
      case '+':
        sys.inequalities.push_back({hp.normal, hp.offset, true});
        break;
      case '-': {
        std::vector<Rational> neg;
        neg.reserve(hp.normal.size());
        for (const Rational& c : hp.normal) neg.push_back(-c);
        sys.inequalities.push_back({std::move(neg), -hp.offset, true});
        break;
      }
      default:
        throw InputError("invalid sign character in " + sigma);
    }
  }
  return sys;
}

}  // namespace

bool cell_feasible(const Geometry& g, const SignVector& sigma) {
  return feasible(cell_system(g, sigma));
}

std::optional<std::vector<Rational>> cell_point(const Geometry& g, const SignVector& sigma) {
  return find_point(cell_system(g, sigma));
}

bool bounded_chamber(const Geometry& g, const SignVector& sigma) {
  if (sigma.find('0') != std::string::npos) {
    throw NotChamber("bounded_chamber needs a chamber, got " + sigma);
  }
  if (sigma.size() != g.hyperplanes.size()) {
    throw LengthMismatch("sign vector arity does not match hyperplane count");
  }
  // The closure's recession cone is {y : sigma_h (normal_h . y) >= 0}; the
  // chamber is bounded iff no nonzero direction survives, i.e. iff the cone
  // meets none of the open half-spaces y_k > 0, y_k < 0.
  LinearSystem cone;
  cone.dim = g.dim;
  for (std::size_t h = 0; h < sigma.size(); ++h) {
    std::vector<Rational> row = g.hyperplanes[h].normal;
    if (sigma[h] == '-') {
      for (Rational& c : row) c = -c;
    }
    cone.inequalities.push_back({std::move(row), Rational(0), false});
  }
  for (int k = 0; k < g.dim; ++k) {
    for (int dir = 0; dir < 2; ++dir) {
      LinearSystem probe = cone;
      std::vector<Rational> axis(static_cast<std::size_t>(g.dim), Rational(0));
      axis[static_cast<std::size_t>(k)] = dir == 0 ? 1 : -1;
      probe.inequalities.push_back({std::move(axis), Rational(0), true});
      if (feasible(probe)) return false;
    }
  }
  return true;
}

Arrangement Arrangement::from_covectors(int m, Mode mode, const std::vector<SignVector>& faces) {
  if (m < 0) throw InputError("negative hyperplane count");
  Arrangement a;
  a.m_ = m;
  a.mode_ = mode;
  for (const SignVector& f : faces) {
    if (static_cast<int>(f.size()) != m) {
      throw LengthMismatch("face " + f + " has arity " + std::to_string(f.size()) +
                           ", expected " + std::to_string(m));
    }
    if (!is_sign_vector(f)) throw InputError("invalid sign character in " + f);
    Face face;
    face.sign = f;
    face.is_chamber = f.find('0') == std::string::npos;
    a.faces_.push_back(std::move(face));
  }
  std::sort(a.faces_.begin(), a.faces_.end(),
            [](const Face& x, const Face& y) { return x.sign < y.sign; });
  a.index_faces();
  if (mode == Mode::full) a.assign_ranks();
  return a;
}

Arrangement Arrangement::from_geometry(Geometry g, int cap) {
  if (g.dim < 0) throw InputError("negative dimension");
  const int m = static_cast<int>(g.hyperplanes.size());
  if (m > cap) {
    throw CapExceeded("enumeration over " + std::to_string(m) +
                      " hyperplanes exceeds the cap of " + std::to_string(cap));
  }
  for (const Hyperplane& h : g.hyperplanes) {
    if (static_cast<int>(h.normal.size()) != g.dim) {
      throw LengthMismatch("hyperplane normal arity does not match dimension");
    }
    bool zero = true;
    for (const Rational& c : h.normal) {
      if (c != 0) {
        zero = false;
        break;
      }
    }
    if (zero) throw InputError("hyperplane with zero normal");
  }

  Arrangement a;
  a.m_ = m;
  a.mode_ = Mode::full;
  SignVector sigma(static_cast<std::size_t>(m), '+');
  static const char kSigns[3] = {'+', '0', '-'};
  std::vector<int> digit(static_cast<std::size_t>(m), 0);
  while (true) {
    for (int i = 0; i < m; ++i) sigma[static_cast<std::size_t>(i)] = kSigns[digit[static_cast<std::size_t>(i)]];
    if (cell_feasible(g, sigma)) {
      Face face;
      face.sign = sigma;
      face.is_chamber = sigma.find('0') == std::string::npos;
      a.faces_.push_back(std::move(face));
    }
    int pos = m - 1;
    while (pos >= 0 && digit[static_cast<std::size_t>(pos)] == 2) {
      digit[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++digit[static_cast<std::size_t>(pos)];
  }
  std::sort(a.faces_.begin(), a.faces_.end(),
            [](const Face& x, const Face& y) { return x.sign < y.sign; });
  a.index_faces();
  a.assign_ranks();
  a.geometry_ = std::move(g);
  return a;
}

void Arrangement::index_faces() {
  index_.clear();
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    index_.emplace(faces_[i].sign, static_cast<int>(i));  // keeps the first copy
  }
}

void Arrangement::assign_ranks() {
  // A strictly smaller face has strictly more zeros, so faces processed in
  // order of decreasing zero count see all their predecessors ranked.
  std::vector<int> order(faces_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  auto zeros = [this](int i) {
    return std::count(faces_[static_cast<std::size_t>(i)].sign.begin(),
                      faces_[static_cast<std::size_t>(i)].sign.end(), '0');
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return zeros(x) > zeros(y); });
  for (int i : order) {
    Face& f = faces_[static_cast<std::size_t>(i)];
    int rank = 0;
    for (int j : order) {
      if (j == i) continue;
      const Face& g = faces_[static_cast<std::size_t>(j)];
      if (zeros(j) <= zeros(i)) break;  // no further candidates can be below f
      if (sign_leq(g.sign, f.sign)) rank = std::max(rank, g.rank + 1);
    }
    f.rank = rank;
  }
}

bool Arrangement::contains(const SignVector& f) const { return index_.count(f) > 0; }

const Face& Arrangement::face(const SignVector& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) throw InputError("face " + f + " is not in the arrangement");
  return faces_[static_cast<std::size_t>(it->second)];
}

std::vector<SignVector> Arrangement::chambers() const {
  std::vector<SignVector> out;
  for (const Face& f : faces_) {
    if (f.is_chamber) out.push_back(f.sign);
  }
  return out;
}

ValidationReport Arrangement::validate() const {
  ValidationReport report;
  auto add = [&report](const std::string& check, const std::string& witness) {
    report.pass = false;
    report.issues.push_back({check, witness});
  };

  for (std::size_t i = 1; i < faces_.size(); ++i) {
    if (faces_[i].sign == faces_[i - 1].sign) {
      add("uniqueness", faces_[i].sign);
      break;
    }
  }

  if (mode_ == Mode::chambers_only) {
    for (const Face& f : faces_) {
      if (f.sign.find('0') != std::string::npos) {
        add("no_zeros", f.sign);
        break;
      }
    }
    return report;
  }

  for (const Face& f : faces_) {
    if (f.is_chamber != (f.sign.find('0') == std::string::npos)) {
      add("chamber_flag", f.sign);
      break;
    }
  }

  bool closed = true;
  for (const Face& f : faces_) {
    for (const Face& g : faces_) {
      SignVector fg = compose(f.sign, g.sign);
      if (!contains(fg)) {
        add("composition_closure", f.sign + " * " + g.sign + " = " + fg + " missing");
        closed = false;
        break;
      }
    }
    if (!closed) break;
  }

  {
    Arrangement fresh = *this;
    fresh.assign_ranks();
    for (std::size_t i = 0; i < faces_.size(); ++i) {
      if (faces_[i].rank != fresh.faces_[i].rank) {
        add("rank", faces_[i].sign + " has rank " + std::to_string(faces_[i].rank) +
                        ", longest chain gives " + std::to_string(fresh.faces_[i].rank));
        break;
      }
    }
  }

  for (const Face& f : faces_) {
    if (f.is_chamber) continue;
    bool below = false;
    for (const Face& c : faces_) {
      if (c.is_chamber && sign_leq(f.sign, c.sign)) {
        below = true;
        break;
      }
    }
    if (!below) {
      add("face_below_chamber", f.sign);
      break;
    }
  }

  return report;
}

std::vector<Flat> Arrangement::flats() const {
  if (mode_ != Mode::full) throw ModeError("flats need the full face set");
  std::vector<Flat> out;
  for (const Face& f : faces_) {
    Flat x{zero_support(f.sign)};
    bool seen = false;
    for (const Flat& y : out) {
      if (y == x) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), flat_before);
  return out;
}

Flat Arrangement::centralization(const SignVector& f) const {
  return Flat{zero_support(face(f).sign)};
}

std::vector<SignVector> Arrangement::min_faces() const {
  if (mode_ != Mode::full) throw ModeError("min_faces need the full face set");
  std::vector<SignVector> out;
  for (const Face& f : faces_) {
    if (f.rank == 0) out.push_back(f.sign);
  }
  return out;
}

bool Arrangement::is_central() const {
  return contains(SignVector(static_cast<std::size_t>(m_), '0'));
}

SignVector Arrangement::opposite(const SignVector& f) const {
  if (!is_central()) throw NotCentral("opposite faces need a central arrangement");
  const SignVector opp = negate(face(f).sign);
  if (!contains(opp)) throw OppositeMissing("opposite of " + f + " is not in the face set");
  return opp;
}

SignVector Arrangement::tilde(const SignVector& base, const SignVector& g) const {
  const Face& a = face(base);
  const Face& b = face(g);
  if (!sign_leq(a.sign, b.sign)) {
    throw NotNested("tilde needs " + base + " <= " + g);
  }
  SignVector out = b.sign;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (a.sign[i] == '0') out[i] = negate_sign(out[i]);
  }
  if (!contains(out)) {
    throw TildeMissing("tilde of " + g + " over " + base + " (" + out + ") is missing");
  }
  return out;
}

Arrangement::ApartmentSelection Arrangement::apartment_faces(const Apartment& k) const {
  if (mode_ != Mode::full) throw ModeError("apartment_faces need the full face set");
  check_apartment(k, m_);
  ApartmentSelection sel;
  for (const Face& f : faces_) {
    bool match = true;
    for (const auto& [h, sign] : k.constraints) {
      if (f.sign[static_cast<std::size_t>(h - 1)] != sign) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    sel.faces.push_back(f.sign);
    if (f.is_chamber) sel.chambers.push_back(f.sign);
  }
  if (sel.chambers.empty()) {
    throw EmptyApartment("no chamber satisfies the apartment constraints");
  }
  return sel;
}

std::vector<SignVector> Arrangement::apartment_chambers(const Apartment& k) const {
  check_apartment(k, m_);
  std::vector<SignVector> out;
  for (const Face& f : faces_) {
    if (!f.is_chamber) continue;
    bool match = true;
    for (const auto& [h, sign] : k.constraints) {
      if (f.sign[static_cast<std::size_t>(h - 1)] != sign) {
        match = false;
        break;
      }
    }
    if (match) out.push_back(f.sign);
  }
  if (out.empty()) throw EmptyApartment("no chamber satisfies the apartment constraints");
  return out;
}

std::vector<SignVector> Arrangement::restriction_chambers(const Flat& x) const {
  std::vector<Flat> all = flats();  // also enforces full mode
  bool known = false;
  for (const Flat& y : all) {
    if (y == x) {
      known = true;
      break;
    }
  }
  if (!known) throw UnknownFlat("flat " + x.str() + " is not the support of any face");
  std::vector<SignVector> out;
  for (const Face& f : faces_) {
    if (zero_support(f.sign) == x.hyperplanes) out.push_back(f.sign);
  }
  return out;
}

std::vector<int> Arrangement::restriction_separators(const Flat& x) const {
  std::vector<SignVector> in_flat = restriction_chambers(x);  // validates x
  std::vector<bool> in_x(static_cast<std::size_t>(m_) + 1, false);
  for (int h : x.hyperplanes) in_x[static_cast<std::size_t>(h)] = true;
  std::vector<bool> separates(static_cast<std::size_t>(m_) + 1, false);
  for (const Face& f : faces_) {
    const std::vector<int> sup = zero_support(f.sign);
    if (!std::includes(sup.begin(), sup.end(), x.hyperplanes.begin(), x.hyperplanes.end())) {
      continue;
    }
    for (int h : sup) {
      if (!in_x[static_cast<std::size_t>(h)]) separates[static_cast<std::size_t>(h)] = true;
    }
  }
  std::vector<int> out;
  for (int h = 1; h <= m_; ++h) {
    if (separates[static_cast<std::size_t>(h)]) out.push_back(h);
  }
  return out;
}

}  // namespace varch
