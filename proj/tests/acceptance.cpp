// Acceptance suite: one pass/fail line per criterion, timed against the
// stated budgets.  Criterion 7 materializes ~900k coset vertices and runs
// only with --long.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "cover/chains.hpp"
#include "cover/error.hpp"
#include "cover/family.hpp"
#include "cover/fixtures.hpp"
#include "cover/graph_action.hpp"
#include "cover/lifting.hpp"

#include "oracles.hpp"

using namespace cover;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream notes;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes << "\n      failed: " << what;
    }
  }
};

void criterion1(Checker& c) {
  auto base = k4();
  Cover cdc = derived_cover(base, VoltageAssignment::ones(base));
  c.require(cdc.derived->vertex_count() == 8, "double cover of K4 has 8 vertices");
  c.require(isomorphic(*cdc.derived, generalized_petersen(4, 1)), "CDC(K4) is the cube");
  c.require(classify_split(cdc, k4_a4()).kind == SplitKind::SplitSectional,
            "CDC(K4) relative to A4 is split-sectional");
  c.require(classify_split(cdc, k4_s4()).kind == SplitKind::SplitMixed,
            "CDC(K4) relative to S4 is split-mixed");
  RegularityResult r1 = regularity_degree(make_action(base, k4_a4()));
  RegularityResult r2 = regularity_degree(make_action(base, k4_s4()));
  c.require(r1.verified && r1.s == 1u, "A4 is 1-regular on K4");
  c.require(r2.verified && r2.s == 2u, "S4 is 2-regular on K4");
}

void criterion2(Checker& c) {
  auto base = petersen();
  PermGroup a5 = petersen_a5();
  ClassBasis cb = admissible_classes(base, a5);
  uint64_t cdc = cdc_class_vector(*base, cb.tree);
  auto span = cb.span_nonzero();
  bool has_cdc = false, has_dodecahedral = false;
  uint64_t dodecahedral = 0;
  for (uint64_t v : span) {
    Cover cover = derived_cover(base, VoltageAssignment::from_class_vector(base, cb.tree, v));
    if (v == cdc) {
      has_cdc = true;
      c.require(isomorphic(*cover.derived, generalized_petersen(10, 3)),
                "the parity class derives the Desargues graph");
      c.require(cover.derived->bipartition().has_value(), "parity cover is bipartite");
      c.require(cover.derived->girth() == 6u, "parity cover has girth 6");
    } else if (!has_dodecahedral &&
               isomorphic(*cover.derived, generalized_petersen(10, 2))) {
      has_dodecahedral = true;
      dodecahedral = v;
      c.require(cover.derived->girth() == 5u, "dodecahedral cover has girth 5");
    }
  }
  c.require(has_cdc, "invariant classes contain the parity class");
  c.require(has_dodecahedral, "invariant classes contain a dodecahedral class");

  Cover pcdc = derived_cover(base, VoltageAssignment::ones(base));
  c.require(classify_split(pcdc, a5).kind == SplitKind::SplitSectional,
            "parity cover relative to A5 is split-sectional");
  c.require(classify_split(pcdc, petersen_s5()).kind == SplitKind::SplitMixed,
            "parity cover relative to S5 is split-mixed");
  auto zeta = VoltageAssignment::from_class_vector(base, cb.tree, dodecahedral);
  Cover dod = derived_cover(base, zeta);
  c.require(classify_split(dod, a5).kind == SplitKind::SplitTransitive,
            "dodecahedral cover relative to A5 is split-transitive");
  c.require(!lifts_group(zeta, petersen_s5()), "S5 does not lift along the dodecahedral class");
}

void criterion3(Checker& c) {
  ChainBudgets budgets;
  budgets.max_depth = 2;
  ChainSummary s = explore(petersen(), petersen_a5(), budgets);
  c.require(s.exhaustive, "exploration exhausted within budgets");

  std::vector<const MergedNode*> d1, d2;
  for (const MergedNode& m : s.merged) {
    if (m.depth == 1) d1.push_back(&m);
    if (m.depth == 2) d2.push_back(&m);
  }
  c.require(s.merged.size() == 4, "diamond has four isomorphism-merged nodes");
  c.require(d1.size() == 2 && d2.size() == 1, "two middle covers meeting in one top cover");
  bool saw_f20a = false, saw_f20b = false;
  for (const MergedNode* m : d1) {
    std::string name = census_name(*s.nodes[m->members.front()].graph);
    if (name == "F20A") saw_f20a = true;
    if (name == "F20B") saw_f20b = true;
  }
  c.require(saw_f20a && saw_f20b, "middle covers are the dodecahedron and the Desargues graph");
  c.require(!d2.empty() && census_name(*s.nodes[d2[0]->members.front()].graph) == "F40",
            "top cover is the order-40 graph");

  size_t split_edges = 0;
  for (const MergedEdge& e : s.merged_edges) {
    if (e.kind == SplitKind::NonSplit) continue;
    ++split_edges;
    std::string from = census_name(*s.nodes[s.merged[e.from].members.front()].graph);
    std::string to = census_name(*s.nodes[s.merged[e.to].members.front()].graph);
    if (from == "F10" && to == "F20B") {
      c.require(e.kind == SplitKind::SplitSectional && e.cdc_edge,
                "first route starts with the sectional parity step");
    } else if (from == "F10" && to == "F20A") {
      c.require(e.kind == SplitKind::SplitTransitive && !e.cdc_edge,
                "second route starts with the transitive non-parity step");
    } else if (from == "F20A" && to == "F40") {
      c.require((e.kind == SplitKind::SplitMixed || e.kind == SplitKind::SplitSectional) &&
                    e.cdc_edge,
                "dodecahedral continuation is the sectional-containing parity step");
    } else if (from == "F20B" && to == "F40") {
      c.require(e.kind == SplitKind::SplitTransitive && !e.cdc_edge,
                "Desargues continuation is the transitive non-parity step");
    } else {
      c.require(false, "unexpected split edge " + from + " -> " + to);
    }
  }
  c.require(split_edges == 4, "exactly the four diamond edges are split");
  c.require(check_split_chain_bound(s), "at most two splits per path, one of each flavor");
  c.require(s.split_length == 2, "split length of the Petersen pair is 2");
}

void criterion4(Checker& c) {
  CoverFixture f8 = f8_fixture();
  c.require(f8.lifted.group.order() == 48, "full lifted group on the cube has order 48");
  GraphPtr q3 = f8.cover.derived;
  ClassBasis cb = admissible_classes(q3, f8.lifted.group);
  bool found = false;
  for (uint64_t v : cb.span_nonzero()) {
    Cover cover = derived_cover(q3, VoltageAssignment::from_class_vector(q3, cb.tree, v));
    if (isomorphic(*cover.derived, generalized_petersen(8, 3))) {
      found = true;
      c.require(classify_split(cover, f8.lifted.group).kind == SplitKind::NonSplit,
                "the Mobius-Kantor cover of the cube is non-split");
      break;
    }
  }
  c.require(found, "a Mobius-Kantor class exists over the cube");
}

void criterion5(Checker& c) {
  auto base = k4();
  PermGroup a4 = k4_a4();
  ClassBasis cb = admissible_classes(base, a4);
  uint64_t cdc = cdc_class_vector(*base, cb.tree);
  for (uint64_t v : cb.span_nonzero()) {
    Cover cover = derived_cover(base, VoltageAssignment::from_class_vector(base, cb.tree, v));
    SplitReport report = classify_split(cover, a4);
    if (report.kind != SplitKind::NonSplit) {
      c.require(v == cdc, "every split class over K4/A4 is the parity class");
      c.require(report.kind == SplitKind::SplitSectional, "and it is split-sectional");
    }
  }
}

void criterion6(Checker& c) {
  for (uint32_t k = 0; k <= 5; ++k) {
    FamilyVerification v = family_verify(k);
    std::string tag = " (k=" + std::to_string(k) + ")";
    c.require(v.order_ok, "group order is half the factorial" + tag);
    c.require(v.conditions.ok, "transitive split conditions hold" + tag);
    c.require(v.cycle_ok, "product is one cycle of length 8k+7 with the stated entries" + tag);
  }
  FamilyInstance f0 = family_generators(0);
  c.require(f0.b * f0.b.conjugated_by(f0.a) == Perm::from_cycles(10, "(7 1 4 10 6 3 9)"),
            "k=0 product equals the literal seven-cycle");
}

void criterion7(Checker& c) {
  FamilyMaterialization m = family_materialize(0);
  c.require(m.base_constructible, "base coset graph is constructible");
  if (m.base) {
    c.require(m.base->graph.vertex_count() == 302400, "base has 302400 vertices");
    c.require(m.base->graph.is_regular(3), "base is cubic");
    c.require(m.base->connected, "base is connected");
    c.require(m.base_two_arcs == 1814400, "base 2-arc count is 1814400");
    c.require(m.base_two_arc_transitive, "group is 2-arc regular on the base");
  } else {
    c.require(false, "base has 302400 vertices");
    c.require(false, "base 2-arc count is 1814400 = |A10|");
  }
  c.require(m.cover.graph.vertex_count() == 604800, "cover has 604800 vertices");
  c.require(m.cover.graph.is_regular(3), "cover is cubic");
  c.require(m.cover.connected, "cover is connected");
  c.require(m.cover_arcs == 1814400, "cover arc count is 1814400");
  c.require(m.cover_arc_transitive, "group is 1-regular on the cover");
}

void criterion8(Checker& c) {
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
  {
    CoverFixture f8 = f8_fixture();
    GraphPtr q3 = f8.cover.derived;
    ClassBasis cb = admissible_classes(q3, f8.lifted.group);
    pairs.push_back({q3, VoltageAssignment::from_class_vector(q3, cb.tree, cb.basis[0]),
                     f8.lifted.group});
  }
  {
    CoverFixture f20b = f20b_fixture();
    GraphPtr g = f20b.cover.derived;
    ClassBasis cb = admissible_classes(g, f20b.lifted.group);
    // first class: the order-40 continuation
    pairs.push_back({g, VoltageAssignment::from_class_vector(g, cb.tree, cb.basis[0]),
                     f20b.lifted.group});
  }
  for (uint32_t n : {3u, 5u, 7u}) {
    CirculantFixture circ = circulant_fixture(n);
    pairs.push_back({circ.graph, circ.zeta, circ.full});
    pairs.push_back({circ.graph, circ.zeta, circ.cyclic_half});
    pairs.push_back({circ.graph, circ.zeta, circ.dihedral_half});
    PrismFixture p = prism_fixture(n);
    pairs.push_back({p.graph, p.zeta, p.regular});
  }
  size_t index = 0;
  for (const auto& [graph, zeta, group] : pairs) {
    std::string tag = " (pair " + std::to_string(index++) + ")";
    Cover cover = derived_cover(graph, zeta);
    SplitReport report = classify_split(cover, group);
    bool witness = sectional_voltage_witness(zeta, group).has_value();
    c.require(witness == report.has_sectional(),
              "sectional witness iff sectional complement" + tag);
    if (is_edge_transitive(GraphAction{graph, group})) {
      c.require(report.has_sectional() == is_canonical_double_cover(zeta),
                "edge-transitive case: sectional iff parity class" + tag);
    }
    if (report.has_sectional()) {
      c.require(mixed_criterion(cover, group, &report) == (report.kind == SplitKind::SplitMixed),
                "index-2 transitive subgroup iff mixed" + tag);
    }
  }
  // parity criterion vs all-cycle brute force on graphs of at most 12 vertices
  std::mt19937 rng(20260810);
  std::vector<GraphPtr> smalls = {k4(), petersen(),
                                  std::make_shared<const Graph>(circulant(6, {1, 3})),
                                  prism_fixture(3).graph};
  for (const GraphPtr& graph : smalls) {
    if (graph->vertex_count() > 12) continue;
    auto cycles = oracle::all_simple_cycles(*graph);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<uint8_t> bits(graph->edge_count());
      for (auto& b : bits) b = rng() & 1;
      if (trial == 0) bits.assign(graph->edge_count(), 1);
      auto zeta = VoltageAssignment::from_bits(graph, bits);
      bool brute = true;
      for (const auto& cycle : cycles) {
        if (walk_voltage(zeta, cycle) != (cycle.size() & 1)) {
          brute = false;
          break;
        }
      }
      c.require(is_canonical_double_cover(zeta) == brute,
                "parity criterion agrees with cycle enumeration");
    }
  }
}

void criterion9(Checker& c) {
  CoverFixture f20b = f20b_fixture();
  ChainBudgets budgets;
  budgets.max_depth = 2;
  ChainSummary s = explore(f20b.cover.derived, f20b.lifted.group, budgets);
  NonsplitProbe p = nonsplit_probe(f20b.cover.derived, f20b.lifted.group, budgets);
  c.require(p.longest_run == 2, "two consecutive non-split covers found");
  if (p.path.size() == 3) {
    const ChainNode& mid = s.nodes[p.path[1]];
    const ChainNode& top = s.nodes[p.path[2]];
    c.require(mid.graph->vertex_count() == 40, "first continuation has order 40");
    c.require(census_name(*mid.graph) == "F40", "first continuation is the order-40 graph");
    c.require(mid.kind == SplitKind::NonSplit, "first step is non-split");
    c.require(top.graph->vertex_count() == 80, "second continuation has order 80");
    c.require(top.kind == SplitKind::NonSplit, "second step is non-split");
  } else {
    c.require(false, "probe path has three nodes");
  }
}

void criterion10(Checker& c) {
  for (uint32_t n : {3u, 5u, 7u}) {
    std::string tag = " (n=" + std::to_string(n) + ")";
    CirculantFixture circ = circulant_fixture(n);
    c.require(lifts_group(circ.zeta, circ.full), "circulant group lifts" + tag);
    c.require(!is_canonical_double_cover(circ.zeta), "circulant class is not parity" + tag);
    c.require(sectional_voltage_witness(circ.zeta, circ.cyclic_half).has_value(),
              "cyclic half has a sectional witness" + tag);
    c.require(sectional_voltage_witness(circ.zeta, circ.dihedral_half).has_value(),
              "dihedral half has a sectional witness" + tag);
    Cover cover = derived_cover(circ.graph, circ.zeta);
    c.require(classify_split(cover, circ.full).kind == SplitKind::SplitMixed,
              "full circulant group classification is split-mixed" + tag);

    PrismFixture p = prism_fixture(n);
    c.require(lifts_group(p.zeta, p.regular), "prism group lifts" + tag);
    c.require(!is_canonical_double_cover(p.zeta), "prism class is not parity" + tag);
    c.require(sectional_voltage_witness(p.zeta, p.regular).has_value(),
              "prism regular group has a sectional witness" + tag);
  }
}

struct Criterion {
  int number;
  const char* label;
  double budget_seconds;
  std::function<void(Checker&)> run;
  bool long_only = false;
};

}  // namespace

int main(int argc, char** argv) {
  bool long_run = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--long") long_run = true;
  }
  std::vector<Criterion> criteria = {
      {1, "double cover of K4", 1.0, criterion1},
      {2, "covers of the Petersen graph", 5.0, criterion2},
      {3, "two-route diamond over the Petersen graph", 30.0, criterion3},
      {4, "Mobius-Kantor cover is non-split", 5.0, criterion4},
      {5, "split classes over K4/A4 are parity classes", 5.0, criterion5},
      {6, "alternating family verification, k = 0..5", 10.0, criterion6},
      {7, "k=0 family materialization", 600.0, criterion7, true},
      {8, "proposition cross-checks", 30.0, criterion8},
      {9, "two consecutive non-split covers over the Desargues graph", 120.0, criterion9},
      {10, "circulant and prism constructions", 10.0, criterion10},
  };
  int failures = 0;
  for (const Criterion& cr : criteria) {
    if (cr.long_only && !long_run) {
      std::cout << "[SKIP] criterion " << cr.number << ": " << cr.label
                << " (run with --long)\n";
      continue;
    }
    Checker checker;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.run(checker);
    } catch (const std::exception& e) {
      checker.ok = false;
      checker.notes << "\n      exception: " << e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > cr.budget_seconds) {
      checker.ok = false;
      checker.notes << "\n      over time budget: " << seconds << "s > " << cr.budget_seconds
                    << "s";
    }
    std::cout << (checker.ok ? "[PASS]" : "[FAIL]") << " criterion " << cr.number << ": "
              << cr.label << " (" << static_cast<int>(seconds * 1000) << " ms)"
              << checker.notes.str() << "\n";
    if (!checker.ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
