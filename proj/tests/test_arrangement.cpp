#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "varch/arrangement.hpp"
#include "varch/json_io.hpp"

using namespace varch;

namespace {

const std::string kFixtures = VARCH_FIXTURE_DIR;

Arrangement fixture(const std::string& name) {
  return load_arrangement(kFixtures + "/" + name + ".json");
}

std::vector<SignVector> signs_of(const Arrangement& a) {
  std::vector<SignVector> out;
  for (const Face& f : a.faces()) out.push_back(f.sign);
  return out;
}

}  // namespace

TEST_CASE("sign vector primitives") {
  CHECK(is_sign_vector("+0-"));
  CHECK(is_sign_vector(""));
  CHECK_FALSE(is_sign_vector("+x"));
  CHECK(negate("+0-") == "-0+");
  CHECK(compose("0-", "+-") == "+-");
  CHECK(compose("+-", "0-") == "+-");
  CHECK(compose("00", "-+") == "-+");
  CHECK(sign_leq("0-", "+-"));
  CHECK(sign_leq("00", "+-"));
  CHECK_FALSE(sign_leq("+-", "0-"));
  CHECK(sign_leq("+-", "+-"));
  CHECK(zero_support("0+-0") == std::vector<int>{1, 4});
  CHECK(zero_support("++") == std::vector<int>{});
}

TEST_CASE("partial order matches composition") {
  const Arrangement a = fixture("two_lines");
  for (const Face& f : a.faces()) {
    for (const Face& g : a.faces()) {
      // antisymmetry
      if (sign_leq(f.sign, g.sign) && sign_leq(g.sign, f.sign)) CHECK(f.sign == g.sign);
      // F <= G implies FG = G
      if (sign_leq(f.sign, g.sign)) CHECK(compose(f.sign, g.sign) == g.sign);
    }
  }
}

TEST_CASE("one hyperplane enumeration") {
  const Arrangement a = fixture("one_hyperplane");
  CHECK(a.m() == 1);
  CHECK(signs_of(a) == std::vector<SignVector>{"+", "-", "0"});
  CHECK(a.chambers() == std::vector<SignVector>{"+", "-"});
  CHECK(a.rank_of("0") == 0);
  CHECK(a.rank_of("+") == 1);
  CHECK(a.is_central());
  CHECK(a.validate().pass);
  CHECK(a.min_faces() == std::vector<SignVector>{"0"});
}

TEST_CASE("two crossing lines enumeration") {
  const Arrangement a = fixture("two_lines");
  CHECK(a.faces().size() == 9);
  CHECK(a.chambers().size() == 4);
  CHECK(a.rank_of("00") == 0);
  CHECK(a.rank_of("0+") == 1);
  CHECK(a.rank_of("+-") == 2);
  CHECK(a.is_central());
  CHECK(a.min_faces() == std::vector<SignVector>{"00"});
  CHECK(a.validate().pass);
  const std::vector<Flat> flats = a.flats();
  REQUIRE(flats.size() == 4);
  CHECK(flats[0].hyperplanes == std::vector<int>{});
  CHECK(flats[1].hyperplanes == std::vector<int>{1});
  CHECK(flats[2].hyperplanes == std::vector<int>{2});
  CHECK(flats[3].hyperplanes == std::vector<int>{1, 2});
  CHECK(flats[3].str() == "{1,2}");
  CHECK(flats[0].str() == "{}");
  CHECK(a.centralization("0+").hyperplanes == std::vector<int>{1});
  CHECK(a.centralization("+-").hyperplanes == std::vector<int>{});
}

TEST_CASE("two points on a line") {
  const Arrangement a = fixture("two_points");
  CHECK(signs_of(a) == std::vector<SignVector>{"++", "+-", "+0", "--", "0-"});
  CHECK(a.chambers() == std::vector<SignVector>{"++", "+-", "--"});
  CHECK_FALSE(a.is_central());
  CHECK(a.min_faces() == std::vector<SignVector>{"+0", "0-"});
  CHECK(a.rank_of("0-") == 0);
  CHECK(a.rank_of("+-") == 1);
  CHECK_THROWS_AS(a.opposite("++"), NotCentral);
}

TEST_CASE("three generic lines and boundedness") {
  const Arrangement a = fixture("three_generic");
  CHECK(a.faces().size() == 19);
  CHECK(a.chambers().size() == 7);
  int rank0 = 0;
  for (const Face& f : a.faces()) {
    if (f.rank == 0) ++rank0;
  }
  CHECK(rank0 == 3);  // the three vertices
  CHECK(a.min_faces().size() == 3);
  REQUIRE(a.geometry().has_value());
  const Geometry& g = *a.geometry();
  int bounded = 0;
  SignVector triangle;
  for (const SignVector& c : a.chambers()) {
    if (bounded_chamber(g, c)) {
      ++bounded;
      triangle = c;
    }
  }
  CHECK(bounded == 1);
  CHECK(triangle == "++-");  // x>0, y>0, x+y<2
}

TEST_CASE("boolean arrangement in rank 3") {
  const Arrangement a = fixture("boolean3");
  CHECK(a.faces().size() == 27);
  CHECK(a.chambers().size() == 8);
  CHECK(a.rank_of("000") == 0);
  CHECK(a.rank_of("+-+") == 3);
  CHECK(a.is_central());
  CHECK(a.opposite("+-+") == "-+-");
  REQUIRE(a.geometry().has_value());
  for (const SignVector& c : a.chambers()) CHECK_FALSE(bounded_chamber(*a.geometry(), c));
}

TEST_CASE("geometric cells have witness points") {
  const Arrangement a = fixture("three_generic");
  const Geometry& g = *a.geometry();
  for (const Face& f : a.faces()) {
    const auto p = cell_point(g, f.sign);
    REQUIRE(p.has_value());
    CHECK(sign_vector_at(g, *p) == f.sign);
  }
  CHECK_FALSE(cell_feasible(g, "000"));  // generic lines have no common point
  CHECK(cell_feasible(g, "+0-"));
}

TEST_CASE("covector input validation") {
  // duplicates
  Arrangement dup = Arrangement::from_covectors(2, Mode::full, {"++", "++", "00", "+0", "0+",
                                                                "+-", "-+", "--", "0-", "-0"});
  const ValidationReport dup_report = dup.validate();
  CHECK_FALSE(dup_report.pass);
  bool saw_unique = false;
  for (const ValidationIssue& i : dup_report.issues) {
    if (i.check == "uniqueness") saw_unique = true;
  }
  CHECK(saw_unique);

  // zeros in chambers_only mode
  Arrangement zero = Arrangement::from_covectors(2, Mode::chambers_only, {"+0", "--"});
  const ValidationReport zero_report = zero.validate();
  CHECK_FALSE(zero_report.pass);
  CHECK(zero_report.issues[0].check == "no_zeros");

  // composition closure: (+0)(0+) = (++) is missing
  Arrangement open_set =
      Arrangement::from_covectors(2, Mode::full, {"+0", "0+", "+-", "-+", "--"});
  const ValidationReport open_report = open_set.validate();
  CHECK_FALSE(open_report.pass);
  bool saw_closure = false;
  for (const ValidationIssue& i : open_report.issues) {
    if (i.check == "composition_closure") saw_closure = true;
  }
  CHECK(saw_closure);

  // malformed strings are rejected at construction
  CHECK_THROWS_AS(Arrangement::from_covectors(2, Mode::full, {"+x"}), InputError);
  CHECK_THROWS_AS(Arrangement::from_covectors(2, Mode::full, {"+"}), LengthMismatch);
}

TEST_CASE("validate passes on all fixtures") {
  for (const char* name :
       {"a_ex", "one_hyperplane", "two_lines", "three_concurrent", "two_points",
        "three_generic", "boolean3"}) {
    CHECK(fixture(name).validate().pass);
  }
}

TEST_CASE("apartments") {
  const Arrangement a = fixture("two_lines");
  Apartment k;
  k.constraints[1] = '+';
  const Arrangement::ApartmentSelection sel = a.apartment_faces(k);
  CHECK(sel.chambers == std::vector<SignVector>{"++", "+-"});
  CHECK(sel.faces == std::vector<SignVector>{"++", "+-", "+0"});
  CHECK(a.apartment_chambers(k) == sel.chambers);

  Apartment both;
  both.constraints[1] = '+';
  both.constraints[2] = '-';
  CHECK(a.apartment_faces(both).faces == std::vector<SignVector>{"+-"});

  // no chamber satisfies the constraint
  Arrangement half = Arrangement::from_covectors(1, Mode::full, {"0", "+"});
  Apartment minus;
  minus.constraints[1] = '-';
  CHECK_THROWS_AS(half.apartment_faces(minus), EmptyApartment);

  CHECK_NOTHROW(check_apartment(k, 2));
  Apartment bad_index;
  bad_index.constraints[3] = '+';
  CHECK_THROWS_AS(check_apartment(bad_index, 2), InputError);
  Apartment bad_sign;
  bad_sign.constraints[1] = '0';
  CHECK_THROWS_AS(check_apartment(bad_sign, 2), InputError);
}

TEST_CASE("opposites and tilde") {
  const Arrangement a = fixture("two_lines");
  CHECK(a.opposite("+-") == "-+");
  CHECK(a.opposite("00") == "00");
  CHECK(a.tilde("0+", "++") == "-+");
  CHECK(a.tilde("00", "+-") == "-+");
  CHECK(a.tilde("+-", "+-") == "+-");  // empty support: nothing to negate
  CHECK_THROWS_AS(a.tilde("0+", "+-"), NotNested);

  Arrangement partial = Arrangement::from_covectors(2, Mode::full, {"0+", "++"});
  CHECK_THROWS_AS(partial.tilde("0+", "++"), TildeMissing);
}

TEST_CASE("restrictions") {
  const Arrangement a = fixture("two_lines");
  Flat x1;
  x1.hyperplanes = {1};
  CHECK(a.restriction_chambers(x1) == std::vector<SignVector>{"0+", "0-"});
  CHECK(a.restriction_separators(x1) == std::vector<int>{2});
  Flat x12;
  x12.hyperplanes = {1, 2};
  CHECK(a.restriction_chambers(x12) == std::vector<SignVector>{"00"});
  CHECK(a.restriction_separators(x12) == std::vector<int>{});
  Flat empty;
  CHECK(a.restriction_chambers(empty) == a.chambers());
  CHECK(a.restriction_separators(empty) == std::vector<int>{1, 2});
  Flat unknown;
  unknown.hyperplanes = {3};
  CHECK_THROWS_AS(a.restriction_chambers(unknown), UnknownFlat);
}

TEST_CASE("enumeration cap") {
  Geometry g;
  g.dim = 1;
  for (int i = 0; i < 13; ++i) {
    g.hyperplanes.push_back({{Rational(1)}, Rational(i)});
  }
  CHECK_THROWS_AS(Arrangement::from_geometry(g), CapExceeded);
}

TEST_CASE("empty arrangement") {
  const Arrangement a = Arrangement::from_covectors(0, Mode::full, {""});
  CHECK(a.m() == 0);
  CHECK(a.faces().size() == 1);
  CHECK(a.faces()[0].is_chamber);
  CHECK(a.is_central());
  CHECK(a.min_faces() == std::vector<SignVector>{""});
  REQUIRE(a.flats().size() == 1);
  CHECK(a.flats()[0].hyperplanes.empty());
  CHECK(a.validate().pass);
}

TEST_CASE("mode errors") {
  const Arrangement a = fixture("a_ex");
  CHECK(a.mode() == Mode::chambers_only);
  CHECK_THROWS_AS(a.flats(), ModeError);
  CHECK_THROWS_AS(a.min_faces(), ModeError);
  Apartment k;
  k.constraints[1] = '+';
  CHECK_THROWS_AS(a.apartment_faces(k), ModeError);
  CHECK(a.apartment_chambers(k) == std::vector<SignVector>{"+---"});
}
