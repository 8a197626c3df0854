#include "cover/family.hpp"

#include <algorithm>
#include <unordered_set>

#include "cover/error.hpp"
#include "cover/graph_action.hpp"

namespace cover {

FamilyInstance family_generators(uint32_t k) {
  const uint32_t n = 12 * k + 10;
  FamilyInstance f;
  f.k = k;
  f.degree = n;

  Perm a(n), r(n), b(n);
  {
    std::vector<uint32_t> img(n);
    for (uint32_t i = 0; i < n; ++i) img[i] = i;
    for (uint32_t i = 1; i <= 4 * k + 3; ++i) {
      // 3-cycle (3i-2, 3i-1, 3i), 1-indexed
      uint32_t x = 3 * i - 3, y = 3 * i - 2, z = 3 * i - 1;
      img[x] = y;
      img[y] = z;
      img[z] = x;
    }
    a = Perm::from_images(std::move(img));
  }
  {
    std::vector<uint32_t> img(n);
    for (uint32_t i = 0; i < n; ++i) img[i] = i;
    auto swap_points = [&](uint32_t x, uint32_t y) { std::swap(img[x], img[y]); };
    for (uint32_t i = 1; i <= 2 * k + 1; ++i) {
      swap_points(6 * i - 3, 6 * i - 2);  // (6i-2, 6i-1)
      swap_points(6 * i, 6 * i + 1);      // (6i+1, 6i+2)
    }
    swap_points(0, 1);  // (1, 2)
    r = Perm::from_images(std::move(img));
  }
  {
    std::vector<uint32_t> img(n);
    for (uint32_t i = 0; i < n; ++i) img[i] = i;
    auto swap_points = [&](uint32_t x, uint32_t y) { std::swap(img[x], img[y]); };
    for (uint32_t i = 1; i <= 2 * k + 1; ++i) {
      swap_points(6 * i - 4, 6 * i - 1);  // (6i-3, 6i)
      swap_points(6 * i - 3, 6 * i);      // (6i-2, 6i+1)
      swap_points(6 * i - 2, 6 * i + 1);  // (6i-1, 6i+2)
    }
    swap_points(12 * k + 8, 12 * k + 9);  // (12k+9, 12k+10)
    b = Perm::from_images(std::move(img));
  }
  f.a = std::move(a);
  f.r = std::move(r);
  f.b = std::move(b);
  return f;
}

namespace {

/// Checks that t is one (8k+7)-cycle running first through the residue-0
/// points (1-indexed residue 1) from 12k+7 to 12k+10, then through the
/// residue-2 points (1-indexed residue 0) from 12k+6 to 12k+9, and fixes
/// the middle residue class pointwise.  All points 0-indexed here.
bool check_product_cycle(const Perm& t, uint32_t k) {
  const uint32_t n = 12 * k + 10;
  for (uint32_t p = 1; p < n; p += 3) {
    if (t[p] != p) return false;  // middle class moved
  }
  const uint32_t first_len = 4 * k + 4;
  const uint32_t total_len = 8 * k + 7;
  uint32_t p = 12 * k + 6;  // 1-indexed 12k+7
  std::unordered_set<uint32_t> seen;
  for (uint32_t step = 0; step < total_len; ++step) {
    if (!seen.insert(p).second) return false;
    if (step < first_len) {
      if (p % 3 != 0) return false;
      if (step == 0 && p != 12 * k + 6) return false;
      if (step == first_len - 1 && p != 12 * k + 9) return false;  // 1-indexed 12k+10
    } else {
      if (p % 3 != 2) return false;
      if (step == first_len && p != 12 * k + 5) return false;      // 1-indexed 12k+6
      if (step == total_len - 1 && p != 12 * k + 8) return false;  // 1-indexed 12k+9
    }
    p = t[p];
  }
  return p == 12 * k + 6;  // single cycle closes
}

}  // namespace

FamilyVerification family_verify(uint32_t k, uint32_t degree_budget) {
  const uint32_t n = 12 * k + 10;
  if (n > degree_budget) throw Error::resource("family degree exceeds budget");
  FamilyInstance f = family_generators(k);

  FamilyVerification v;
  v.a_even = f.a.is_even();
  v.b_even = f.b.is_even();
  v.r_even = f.r.is_even();

  PermGroup g = PermGroup::generated(n, {f.a, f.b});
  v.order = g.order();
  v.expected_order = factorial(n) / 2;
  v.order_ok = v.order == v.expected_order;

  Subgroup l = make_subgroup(g, {f.a});
  Subgroup h;  // parentless: its generators need not lie in <a, b>
  h.group = PermGroup::generated(n, {f.a, f.r});
  v.conditions = transitive_split_conditions(g, h, l, f.b);

  Perm t = f.b * f.b.conjugated_by(f.a);
  v.cycle_ok = check_product_cycle(t, k);

  Subgroup inter = conjugate_intersection(h, f.b);
  std::vector<Perm> expected = {Perm(n), f.r};
  std::sort(expected.begin(), expected.end());
  v.h_intersection_ok = inter.element_list() == expected;

  v.pass = v.order_ok && v.conditions.ok && v.cycle_ok && v.h_intersection_ok && v.a_even &&
           v.b_even;
  return v;
}

FamilyMaterialization family_materialize(uint32_t k, size_t size_budget) {
  FamilyInstance f = family_generators(k);
  const uint32_t n = f.degree;
  BigInt cover_count = factorial(n) / 6;  // |G| / |L|
  if (cover_count > size_budget) {
    throw Error::resource("family materialization exceeds the coset budget");
  }
  PermGroup g = PermGroup::generated(n, {f.a, f.b});
  if (g.order() != factorial(n) / 2) {
    throw Error::domain("family group is not the alternating group");
  }
  Subgroup l = make_subgroup(g, {f.a});

  FamilyMaterialization m;
  m.cover = coset_graph(g, l, f.b, size_budget);
  m.cover_arcs = 2ull * m.cover.graph.edge_count();
  {
    auto cover_graph = std::make_shared<Graph>(m.cover.graph);
    GraphAction act{cover_graph, PermGroup::with_certified_order(
                                     m.cover.graph.vertex_count(), m.cover.gen_actions, g.order())};
    RegularityResult reg = regularity_degree(act);
    m.cover_arc_transitive = reg.verified && reg.s == 1u;
  }
  m.group_has_no_index2 = index2_subgroups(g).empty();

  // Base side.  The printed r is odd, so <a, r> is no subgroup of the
  // alternating group; search the full normalizer of <a> for an even
  // element m with m^2 in <a> whose order-6 overgroup meets its b-conjugate
  // in order 2.  (For k = 0 the search is exhaustive and finds none.)
  std::vector<Perm> centralizer_gens;
  const uint32_t triples = 4 * k + 3;
  for (uint32_t i = 0; i < triples; ++i) {
    std::vector<uint32_t> img(n);
    for (uint32_t p = 0; p < n; ++p) img[p] = p;
    img[3 * i] = 3 * i + 1;
    img[3 * i + 1] = 3 * i + 2;
    img[3 * i + 2] = 3 * i;
    centralizer_gens.push_back(Perm::from_images(std::move(img)));
  }
  for (uint32_t i = 0; i + 1 < triples; ++i) {
    std::vector<uint32_t> img(n);
    for (uint32_t p = 0; p < n; ++p) img[p] = p;
    for (uint32_t j = 0; j < 3; ++j) std::swap(img[3 * i + j], img[3 * (i + 1) + j]);
    centralizer_gens.push_back(Perm::from_images(std::move(img)));
  }
  PermGroup centralizer = PermGroup::generated(n, std::move(centralizer_gens));
  std::optional<Perm> repaired;
  for (const Perm& cperm : centralizer.elements(2000)) {
    for (const Perm& t : {cperm, cperm * f.r}) {
      ++m.stabilizer_candidates_searched;
      if (!t.is_even() || t.is_identity()) continue;
      if (l.group.contains(t) || !l.group.contains(t * t)) continue;
      Subgroup h = make_subgroup(g, {f.a, t});
      if (h.order() != 6) continue;
      if (conjugate_intersection(h, f.b).order() != 2) continue;
      if (!repaired || t < *repaired) repaired = t;
    }
  }
  if (repaired) {
    m.base_constructible = true;
    Subgroup h = make_subgroup(g, {f.a, *repaired});
    m.base = coset_graph(g, h, f.b, size_budget);
    m.base_two_arcs = count_s_arcs(m.base->graph, 2);
    auto base_graph = std::make_shared<Graph>(m.base->graph);
    GraphAction act{base_graph, PermGroup::with_certified_order(
                                    m.base->graph.vertex_count(), m.base->gen_actions, g.order())};
    RegularityResult reg = regularity_degree(act);
    m.base_two_arc_transitive = reg.verified && reg.s == 2u;
  }
  return m;
}

}  // namespace cover
