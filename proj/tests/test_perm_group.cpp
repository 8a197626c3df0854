#include <doctest.h>

#include "cover/error.hpp"
#include "cover/group_ops.hpp"
#include "cover/perm_group.hpp"

#include "oracles.hpp"

using namespace cover;

TEST_CASE("orders of small groups match exhaustive closure") {
  struct Case {
    uint32_t degree;
    std::vector<std::string> gens;
    uint64_t order;
  };
  const Case cases[] = {
      {4, {"(1 2 3)", "(1 2)(3 4)"}, 12},             // A4 from the build example
      {4, {"(1 2 3 4)", "(1 2)"}, 24},                // S4
      {4, {"(1 2)(3 4)", "(1 3)(2 4)"}, 4},           // Klein group
      {5, {}, 1},                                     // trivial on 5 points
      {7, {"(1 2 3 4 5 6 7)", "(1 2)"}, 5040},        // S7
      {6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"}, 12},       // dihedral
  };
  for (const auto& c : cases) {
    std::vector<Perm> gens;
    for (const auto& s : c.gens) gens.push_back(Perm::from_cycles(c.degree, s));
    PermGroup g = PermGroup::generated(c.degree, gens);
    CHECK(g.order() == c.order);
    if (c.order <= 5000) {
      CHECK(oracle::closure_elements(c.degree, gens).size() == c.order);
      if (c.order <= 5000) CHECK(g.elements(5000).size() == c.order);
    }
  }
}

TEST_CASE("alternating and symmetric group constructors") {
  CHECK(alternating_group(4).order() == 12);
  CHECK(symmetric_group(5).order() == 120);
  CHECK(alternating_group(10).order() == 1814400);
  CHECK(alternating_group(1).order() == 1);
  CHECK(symmetric_group(2).order() == 2);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("degree-0 groups are rejected, degree-1 allowed") {
  CHECK_THROWS_AS(PermGroup::generated(0, {}), Error);
  CHECK(PermGroup::trivial(1).order() == 1);
}

TEST_CASE("membership agrees with closure membership") {
  std::vector<Perm> gens = {Perm::from_cycles(5, "(1 2 3 4 5)"), Perm::from_cycles(5, "(1 2 3)")};
  PermGroup a5 = PermGroup::generated(5, gens);
  CHECK(a5.order() == 60);
  auto elements = oracle::closure_elements(5, gens);
  for (const Perm& x : elements) CHECK(a5.contains(x));
  CHECK_FALSE(a5.contains(Perm::from_cycles(5, "(1 2)")));
  // products of generators are members
  for (const Perm& x : gens) {
    for (const Perm& y : gens) CHECK(a5.contains(x * y));
  }
}

TEST_CASE("orbit_with_words maps the point to each orbit member") {
  PermGroup a4 = PermGroup::generated(
      4, {Perm::from_cycles(4, "(1 2 3)"), Perm::from_cycles(4, "(2 3 4)")});
  auto words = a4.orbit_with_words(0);
  CHECK(words.size() == 4);
  for (const auto& [point, word] : words) CHECK(word[0] == point);

  auto fixed = PermGroup::trivial(5).orbit_with_words(2);
  CHECK(fixed.size() == 1);
  CHECK(fixed.at(2).is_identity());

  PermGroup swap01 = PermGroup::generated(4, {Perm::from_cycles(4, "(1 2)")});
  auto lone = swap01.orbit_with_words(3);
  CHECK(lone.size() == 1);
  CHECK(lone.at(3).is_identity());
}

TEST_CASE("element_mapping finds tuple carriers and checks them") {
  PermGroup s4 = PermGroup::generated(
      4, {Perm::from_cycles(4, "(1 2 3 4)"), Perm::from_cycles(4, "(1 2)")});
  std::vector<uint32_t> src = {0, 1}, dst = {1, 0};
  auto g = s4.element_mapping(src, dst);
  REQUIRE(g.has_value());
  CHECK((*g)[0] == 1);
  CHECK((*g)[1] == 0);

  PermGroup a4 = PermGroup::generated(
      4, {Perm::from_cycles(4, "(1 2 3)"), Perm::from_cycles(4, "(2 3 4)")});
  std::vector<uint32_t> pt = {0};
  auto h = a4.element_mapping(pt, pt);
  REQUIRE(h.has_value());
  CHECK((*h)[0] == 0);

  // <(1 2 3)> on 3 points cannot map (0,1) to (0,2): exhaustive over the
  // three elements, none fixes 0 while moving 1 to 2.
  PermGroup z3 = PermGroup::generated(3, {Perm::from_cycles(3, "(1 2 3)")});
  for (const Perm& x : oracle::closure_elements(3, z3.generators())) {
    CHECK((x[0] != 0 || x[1] != 2));
  }
  std::vector<uint32_t> s2 = {0, 1}, d2 = {0, 2};
  CHECK_FALSE(z3.element_mapping(s2, d2).has_value());
}

TEST_CASE("pointwise stabilizers enumerate correctly") {
  PermGroup s4 = PermGroup::generated(
      4, {Perm::from_cycles(4, "(1 2 3 4)"), Perm::from_cycles(4, "(1 2)")});
  std::vector<uint32_t> pts = {0};
  auto stab = s4.pointwise_stabilizer_elements(pts);
  CHECK(stab.size() == 6);  // S3 on the other points
  for (const Perm& x : stab) CHECK(x[0] == 0);
  std::vector<uint32_t> two = {0, 1};
  CHECK(s4.pointwise_stabilizer_elements(two).size() == 2);
}

TEST_CASE("BSGS base is deterministic and generators sift to identity") {
  std::vector<Perm> gens = {Perm::from_cycles(6, "(1 2 3 4 5 6)"), Perm::from_cycles(6, "(1 2)")};
  PermGroup g1 = PermGroup::generated(6, gens);
  PermGroup g2 = PermGroup::generated(6, gens);
  CHECK(g1.order() == g2.order());
  const auto& levels1 = g1.bsgs().levels();
  const auto& levels2 = g2.bsgs().levels();
  REQUIRE(levels1.size() == levels2.size());
  for (size_t i = 0; i < levels1.size(); ++i) CHECK(levels1[i].beta == levels2[i].beta);
  for (const Perm& x : gens) CHECK(g1.contains(x));
  // order equals product of fundamental orbit lengths
  BigInt prod = 1;
  for (const auto& level : levels1) prod *= static_cast<uint64_t>(level.orbit.size());
  CHECK(prod == g1.order());
}
