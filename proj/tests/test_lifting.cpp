#include <doctest.h>

#include "cover/error.hpp"
#include "cover/fixtures.hpp"
#include "cover/graph_action.hpp"
#include "cover/lifting.hpp"

using namespace cover;

TEST_CASE("lifting single automorphisms") {
  auto base = k4();
  Cover cdc = derived_cover(base, VoltageAssignment::ones(base));
  CHECK(lift_automorphism(cdc, Perm(4)).is_identity());

  PermGroup s4 = k4_s4();
  for (const Perm& g : s4.generators()) {
    Perm lift = lift_automorphism(cdc, g);
    // covering condition: projection commutes
    for (uint32_t v = 0; v < cdc.derived->vertex_count(); ++v) {
      CHECK(cdc.project(lift[v]) == g[cdc.project(v)]);
    }
    // the chosen lift fixes the root's fibre label
    CHECK(lift[cdc.fibre_vertex(0, 0)] == cdc.fibre_vertex(g[0], 0));
    // the deck is central among lifts
    CHECK(lift * cdc.deck == cdc.deck * lift);
  }
  // composition lands in the lift pair of the product
  const Perm& g = s4.generators()[0];
  const Perm& h = s4.generators()[1];
  Perm both = lift_automorphism(cdc, g) * lift_automorphism(cdc, h);
  Perm of_product = lift_automorphism(cdc, g * h);
  CHECK((both == of_product || both == of_product * cdc.deck));

  // all-ones labels keep the zero section pointwise over the identity walk
  // structure: the lift of any g maps the zero section to a section
  PermGroup a4 = k4_a4();
  for (const Perm& gen : a4.generators()) {
    Perm lift = lift_automorphism(cdc, gen);
    std::vector<bool> hit(4, false);
    for (uint32_t v = 0; v < 4; ++v) {
      uint32_t image = lift[cdc.fibre_vertex(v, 0)];
      CHECK_FALSE(hit[cdc.project(image)]);
      hit[cdc.project(image)] = true;
    }
  }

  // non-liftable automorphism: S5 along the dodecahedral class
  CoverFixture f20a = f20a_fixture();
  PermGroup s5 = petersen_s5();
  CHECK_THROWS_AS(lift_automorphism(f20a.cover, s5.generators()[1]), Error);
}

TEST_CASE("lifted group orders") {
  CHECK(f8_fixture().lifted.group.order() == 48);
  CHECK(f20b_fixture().lifted.group.order() == 240);
  CHECK(f20a_fixture().lifted.group.order() == 120);
  CHECK(f8_a4_fixture().lifted.group.order() == 24);

  auto base = k4();
  Cover disconnected = derived_cover(base, VoltageAssignment::zeros(base));
  CHECK_THROWS_AS(lifted_group(disconnected, k4_a4()), Error);
}

TEST_CASE("split classification of the worked examples") {
  auto base = k4();
  Cover cdc = derived_cover(base, VoltageAssignment::ones(base));
  SplitReport a4 = classify_split(cdc, k4_a4());
  CHECK(a4.kind == SplitKind::SplitSectional);
  SplitReport s4 = classify_split(cdc, k4_s4());
  CHECK(s4.kind == SplitKind::SplitMixed);

  auto pet = petersen();
  Cover pcdc = derived_cover(pet, VoltageAssignment::ones(pet));
  CHECK(classify_split(pcdc, petersen_a5()).kind == SplitKind::SplitSectional);
  CHECK(classify_split(pcdc, petersen_s5()).kind == SplitKind::SplitMixed);

  CoverFixture f20a = f20a_fixture();
  CHECK(classify_split(f20a.cover, petersen_a5()).kind == SplitKind::SplitTransitive);

  // the Mobius-Kantor cover of the cube is non-split for the full lift
  CoverFixture f8 = f8_fixture();
  GraphPtr q3 = f8.cover.derived;
  ClassBasis cb = admissible_classes(q3, f8.lifted.group);
  REQUIRE(cb.basis.size() == 1);
  Cover mk = derived_cover(q3, VoltageAssignment::from_class_vector(q3, cb.tree, cb.basis[0]));
  REQUIRE(isomorphic(*mk.derived, generalized_petersen(8, 3)));
  CHECK(classify_split(mk, f8.lifted.group).kind == SplitKind::NonSplit);

  CHECK_THROWS_AS(classify_split(cdc, PermGroup::trivial(4)), Error);
}

TEST_CASE("complement bookkeeping") {
  auto base = k4();
  Cover cdc = derived_cover(base, VoltageAssignment::ones(base));
  PermGroup s4 = k4_s4();
  SplitReport report = classify_split(cdc, s4);
  REQUIRE(report.complements.size() >= 2);
  for (const ComplementInfo& c : report.complements) {
    CHECK(c.order == s4.order());
    PermGroup cg = PermGroup::generated(8, c.gens);
    CHECK_FALSE(cg.contains(cdc.deck));
    if (!c.transitive) {
      auto [s0, s1] = sections_of(c, cdc);
      CHECK(s0.size() == 4);
      CHECK(s1.size() == 4);
      // the deck maps one section onto the other
      std::vector<uint32_t> image;
      for (uint32_t v : s0) image.push_back(cdc.deck[v]);
      std::sort(image.begin(), image.end());
      CHECK(image == s1);
    } else {
      CHECK_THROWS_AS(sections_of(c, cdc), Error);
    }
  }
}

TEST_CASE("mixed criterion matches the classification") {
  auto base = k4();
  Cover cdc = derived_cover(base, VoltageAssignment::ones(base));
  SplitReport a4 = classify_split(cdc, k4_a4());
  CHECK_FALSE(mixed_criterion(cdc, k4_a4(), &a4));  // A4 has no index-2 subgroup
  SplitReport s4 = classify_split(cdc, k4_s4());
  CHECK(mixed_criterion(cdc, k4_s4(), &s4));

  auto pet = petersen();
  Cover pcdc = derived_cover(pet, VoltageAssignment::ones(pet));
  SplitReport a5 = classify_split(pcdc, petersen_a5());
  CHECK_FALSE(mixed_criterion(pcdc, petersen_a5(), &a5));

  CoverFixture f20a = f20a_fixture();
  SplitReport trans = classify_split(f20a.cover, petersen_a5());
  CHECK_THROWS_AS(mixed_criterion(f20a.cover, petersen_a5(), &trans), Error);
}

TEST_CASE("witness existence tracks sectional complements across fixtures") {
  struct Pair {
    GraphPtr graph;
    VoltageAssignment zeta;
    PermGroup group;
  };
  std::vector<Pair> pairs;
  {
    auto base = k4();
    pairs.push_back({base, VoltageAssignment::ones(base), k4_a4()});
    pairs.push_back({base, VoltageAssignment::ones(base), k4_s4()});
  }
  {
    auto pet = petersen();
    pairs.push_back({pet, VoltageAssignment::ones(pet), petersen_a5()});
    pairs.push_back({pet, VoltageAssignment::ones(pet), petersen_s5()});
    SpanningData t = spanning_data(*pet, 0);
    pairs.push_back({pet, VoltageAssignment::from_class_vector(pet, t, f20a_class_vector()),
                     petersen_a5()});
  }
  for (uint32_t n : {3u, 5u}) {
    CirculantFixture c = circulant_fixture(n);
    pairs.push_back({c.graph, c.zeta, c.full});
    pairs.push_back({c.graph, c.zeta, c.cyclic_half});
    pairs.push_back({c.graph, c.zeta, c.dihedral_half});
    PrismFixture p = prism_fixture(n);
    pairs.push_back({p.graph, p.zeta, p.regular});
  }
  {
    CoverFixture f8 = f8_fixture();
    GraphPtr q3 = f8.cover.derived;
    ClassBasis cb = admissible_classes(q3, f8.lifted.group);
    pairs.push_back({q3, VoltageAssignment::from_class_vector(q3, cb.tree, cb.basis[0]),
                     f8.lifted.group});
  }
  for (const auto& [graph, zeta, group] : pairs) {
    Cover cover = derived_cover(graph, zeta);
    SplitReport report = classify_split(cover, group);
    bool witness = sectional_voltage_witness(zeta, group).has_value();
    CHECK(witness == report.has_sectional());
    // for vertex- and edge-transitive groups, sectional means parity class
    GraphAction act{graph, group};
    if (is_edge_transitive(act)) {
      CHECK(report.has_sectional() == is_canonical_double_cover(zeta));
    }
    if (report.has_sectional()) {
      CHECK(mixed_criterion(cover, group, &report) == (report.kind == SplitKind::SplitMixed));
    }
  }
}

TEST_CASE("transitive complements act with one regularity level less") {
  // cubic s-regular base group with a purely transitive split cover
  CoverFixture f20a = f20a_fixture();
  PermGroup a5 = petersen_a5();
  GraphAction base_act = make_action(f20a.cover.base, a5);
  RegularityResult base_reg = regularity_degree(base_act);
  REQUIRE(base_reg.s == 2u);
  SplitReport report = classify_split(f20a.cover, a5);
  REQUIRE(report.kind == SplitKind::SplitTransitive);
  for (const ComplementInfo& c : report.complements) {
    GraphAction cover_act = make_action(f20a.cover.derived, PermGroup::generated(20, c.gens));
    RegularityResult cover_reg = regularity_degree(cover_act);
    CHECK(cover_reg.s == *base_reg.s - 1);
  }
}
