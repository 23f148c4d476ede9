#include <doctest.h>

#include <set>

#include "lsc/families.hpp"
#include "lsc/oracle.hpp"

using namespace lsc;

TEST_CASE("enumerate_g24 matches the gaussian binomial") {
  // [4 choose 2]_q = q^4 + q^3 + 2q^2 + q + 1
  CHECK(enumerate_g24(2).size() == 35);
  CHECK(enumerate_g24(3).size() == 130);
  CHECK(enumerate_g24(5).size() == 806);
  CHECK(enumerate_g24(7).size() == 2850);
  CHECK_THROWS_WITH_AS(enumerate_g24(11), "enumeration budget exceeded: need q <= 7",
                       InputError);
  CHECK_THROWS_AS(enumerate_g24(4), InputError);  // not prime
}

TEST_CASE("representatives are distinct rank-2 RREFs with valid plucker points") {
  Field f = Field::prime(3);
  std::set<std::string> seen;
  for (const SubspaceRep& rep : enumerate_g24(3)) {
    CHECK(rank_of(rep.mat) == 2);
    std::string key;
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 4; ++c) key += f.to_string(rep.mat.at(r, c)) + ",";
    seen.insert(key);
    // conversion validates the quadric inside the PluckerPoint constructor
    CHECK_NOTHROW(plucker_from_span(f, rep.mat.row(0), rep.mat.row(1)));
  }
  CHECK(seen.size() == 130);
}

TEST_CASE("skew contains every line") {
  Field f = Field::prime(3);
  std::vector<PluckerPoint> lines = brute_force_lines(skew(f));
  CHECK(lines.size() == 130);
}

TEST_CASE("planted lines are found by brute force") {
  Field f = Field::prime(5);
  PlantedInstance inst = planted_instance(42, f);
  std::vector<PluckerPoint> lines = brute_force_lines(inst.relations);
  PluckerPoint planted = plucker_from_span(f, inst.u, inst.v).normalized();
  bool found = false;
  for (const PluckerPoint& p : lines)
    if (p == planted) found = true;
  CHECK(found);
}

TEST_CASE("cross validation: rank test locus equals ideal vanishing locus") {
  SUBCASE("skew over F_3: all 130 members, no discrepancies") {
    CrossValidation cv = cross_validate(skew(Field::prime(3)));
    CHECK(cv.ok);
    CHECK(cv.subspaces == 130);
    CHECK(cv.members == 130);
    CHECK(cv.discrepancies.empty());
  }

  SUBCASE("skew over F_2 (non-curve family, characteristic 2 allowed)") {
    CrossValidation cv = cross_validate(skew(Field::prime(2)));
    CHECK(cv.ok);
    CHECK(cv.subspaces == 35);
    CHECK(cv.members == 35);
  }

  SUBCASE("random spaces over F_3 and F_5") {
    for (std::int64_t q : {std::int64_t{3}, std::int64_t{5}}) {
      Field f = Field::prime(q);
      CrossValidation cv = cross_validate(random_relation_space(2024 + q, f));
      CHECK(cv.ok);
      CHECK(cv.discrepancies.empty());
    }
  }

  SUBCASE("planted instance over F_5") {
    CrossValidation cv = cross_validate(planted_instance(55, Field::prime(5)).relations);
    CHECK(cv.ok);
    CHECK(cv.members >= 1);
  }

  SUBCASE("twisted sklyanin over F_7 with alpha = (2,4,4)") {
    Field f = Field::prime(7);
    // 2 + 4 + 4 + 2*4*4 = 42 = 0 mod 7; all values avoid {0, 1, -1}.
    SklyaninParams p = make_sklyanin_params(f, f.from_int(2), f.from_int(4), f.from_int(4));
    CrossValidation cv = cross_validate(twisted_sklyanin(f, p));
    CHECK(cv.ok);
    CHECK(cv.subspaces == 2850);
  }
}

TEST_CASE("oracle requires a small prime field") {
  Field big = Field::prime(32003);
  CHECK_THROWS_AS(brute_force_lines(skew(big)), InputError);
  Field q = Field::rationals();
  CHECK_THROWS_AS(cross_validate(skew(q)), InputError);
}
