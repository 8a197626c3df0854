#include "cover/fixtures.hpp"

#include <algorithm>
#include <set>

#include "cover/error.hpp"

namespace cover {

Graph complete_graph(uint32_t n) {
  if (n < 1) throw Error::malformed("complete graph needs n >= 1");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < n; ++u) {
    for (uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(uint32_t n) {
  if (n < 3) throw Error::malformed("cycle graph needs n >= 3");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

Graph generalized_petersen(uint32_t n, uint32_t k) {
  if (n < 3 || k == 0 || k >= n || 2 * k == n) {
    throw Error::malformed("generalized Petersen parameters need n >= 3, 0 < k < n/2");
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(n + i, n + (i + k) % n);
    edges.emplace_back(i, n + i);
  }
  return Graph::from_edges(2 * n, std::move(edges));
}

Graph circulant(uint32_t n, const std::vector<uint32_t>& steps) {
  if (n < 3) throw Error::malformed("circulant needs n >= 3");
  std::set<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t raw : steps) {
    uint32_t c = raw % n;
    if (c == 0) throw Error::malformed("circulant step 0 is not allowed");
    for (uint32_t i = 0; i < n; ++i) {
      uint32_t j = (i + c) % n;
      edges.emplace(std::min(i, j), std::max(i, j));
    }
  }
  return Graph::from_edges(n, {edges.begin(), edges.end()});
}

GraphPtr k4() { return std::make_shared<Graph>(complete_graph(4)); }

PermGroup k4_a4() {
  return PermGroup::generated(
      4, {Perm::from_cycles(4, "(1 2 3)"), Perm::from_cycles(4, "(2 3 4)")});
}

PermGroup k4_s4() {
  return PermGroup::generated(
      4, {Perm::from_cycles(4, "(1 2 3 4)"), Perm::from_cycles(4, "(1 2)")});
}

namespace {

std::vector<std::pair<uint32_t, uint32_t>> two_subsets_of_5() {
  std::vector<std::pair<uint32_t, uint32_t>> subsets;
  for (uint32_t a = 0; a < 5; ++a) {
    for (uint32_t b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  }
  return subsets;
}

Perm induced_on_pairs(const Perm& g) {
  auto subsets = two_subsets_of_5();
  auto index_of = [&](uint32_t a, uint32_t b) {
    if (a > b) std::swap(a, b);
    auto it = std::find(subsets.begin(), subsets.end(), std::make_pair(a, b));
    return static_cast<uint32_t>(it - subsets.begin());
  };
  std::vector<uint32_t> images(subsets.size());
  for (uint32_t i = 0; i < subsets.size(); ++i) {
    images[i] = index_of(g[subsets[i].first], g[subsets[i].second]);
  }
  return Perm::from_images(std::move(images));
}

}  // namespace

GraphPtr petersen() {
  auto subsets = two_subsets_of_5();
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t i = 0; i < subsets.size(); ++i) {
    for (uint32_t j = i + 1; j < subsets.size(); ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  }
  return std::make_shared<Graph>(Graph::from_edges(10, std::move(edges)));
}

PermGroup petersen_a5() {
  return PermGroup::generated(10, {induced_on_pairs(Perm::from_cycles(5, "(1 2 3 4 5)")),
                                   induced_on_pairs(Perm::from_cycles(5, "(1 2 3)"))});
}

PermGroup petersen_s5() {
  return PermGroup::generated(10, {induced_on_pairs(Perm::from_cycles(5, "(1 2 3 4 5)")),
                                   induced_on_pairs(Perm::from_cycles(5, "(1 2)"))});
}

PermGroup cycle_dihedral(uint32_t n) {
  std::vector<uint32_t> rot(n), refl(n);
  for (uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return PermGroup::generated(
      n, {Perm::from_images(std::move(rot)), Perm::from_images(std::move(refl))});
}

namespace {

CoverFixture lift_fixture(GraphPtr base, const VoltageAssignment& zeta, const PermGroup& g) {
  Cover cover = derived_cover(std::move(base), zeta);
  LiftedGroup lifted = lifted_group(cover, g);
  return CoverFixture{std::move(cover), std::move(lifted)};
}

}  // namespace

CoverFixture f8_fixture() {
  auto base = k4();
  return lift_fixture(base, VoltageAssignment::ones(base), k4_s4());
}

CoverFixture f8_a4_fixture() {
  auto base = k4();
  return lift_fixture(base, VoltageAssignment::ones(base), k4_a4());
}

uint64_t f20a_class_vector() {
  auto base = petersen();
  PermGroup a5 = petersen_a5();
  ClassBasis cb = admissible_classes(base, a5);
  Graph target = generalized_petersen(10, 2);
  uint64_t cdc = cdc_class_vector(*base, cb.tree);
  for (uint64_t v : cb.span_nonzero()) {
    if (v == cdc) continue;
    Cover cover = derived_cover(base, VoltageAssignment::from_class_vector(base, cb.tree, v));
    if (isomorphic(*cover.derived, target)) return v;
  }
  throw Error::domain("no admissible class over the Petersen graph yields GP(10,2)");
}

CoverFixture f20a_fixture() {
  auto base = petersen();
  SpanningData tree = spanning_data(*base, 0);
  auto zeta = VoltageAssignment::from_class_vector(base, tree, f20a_class_vector());
  return lift_fixture(base, zeta, petersen_a5());
}

CoverFixture f20b_fixture() {
  auto base = petersen();
  return lift_fixture(base, VoltageAssignment::ones(base), petersen_s5());
}

CoverFixture f20b_a5_fixture() {
  auto base = petersen();
  return lift_fixture(base, VoltageAssignment::ones(base), petersen_a5());
}

CoverFixture f40_fixture() {
  CoverFixture f20a = f20a_fixture();
  GraphPtr base = f20a.cover.derived;
  return lift_fixture(base, VoltageAssignment::ones(base), f20a.lifted.group);
}

CirculantFixture circulant_fixture(uint32_t n) {
  if (n < 3 || n % 2 == 0) throw Error::malformed("circulant fixture needs odd n >= 3");
  const uint32_t m = 2 * n;
  auto graph = std::make_shared<Graph>(circulant(m, {1, n}));
  std::vector<uint8_t> bits(graph->edge_count());
  for (uint32_t e = 0; e < graph->edge_count(); ++e) {
    auto [u, v] = graph->edges()[e];
    uint32_t diff = (v - u) % m;
    bits[e] = (diff == n) ? 1 : 0;
  }
  std::vector<uint32_t> rot(m), refl(m);
  for (uint32_t i = 0; i < m; ++i) {
    rot[i] = (i + 1) % m;
    refl[i] = (m - i) % m;
  }
  Perm r = Perm::from_images(std::move(rot));
  Perm f = Perm::from_images(std::move(refl));
  CirculantFixture fx{graph, VoltageAssignment::from_bits(graph, std::move(bits)),
                      PermGroup::generated(m, {r, f}),
                      PermGroup::generated(m, {r}),
                      PermGroup::generated(m, {r * r, r * f})};
  return fx;
}

PrismFixture prism_fixture(uint32_t n) {
  if (n < 3 || n % 2 == 0) throw Error::malformed("prism fixture needs odd n >= 3");
  const uint32_t count = 4 * n;
  auto index = [n](uint32_t i, uint32_t j, uint32_t k) { return i + n * j + 2 * n * k; };
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  std::vector<std::pair<std::pair<uint32_t, uint32_t>, uint8_t>> typed;
  for (uint32_t k = 0; k < 2; ++k) {
    for (uint32_t j = 0; j < 2; ++j) {
      for (uint32_t i = 0; i < n; ++i) {
        uint32_t g = index(i, j, k);
        // left multiplications: by b (voltage 1), by ab (voltage 0), by c (voltage 1)
        typed.push_back({{g, index((n - i) % n, j ^ 1, k)}, 1});
        typed.push_back({{g, index((1 + n - i) % n, j ^ 1, k)}, 0});
        typed.push_back({{g, index(i, j, k ^ 1)}, 1});
      }
    }
  }
  std::set<std::pair<uint32_t, uint32_t>> seen;
  std::vector<std::pair<std::pair<uint32_t, uint32_t>, uint8_t>> unique_typed;
  for (auto& [edge, bit] : typed) {
    auto e = std::minmax(edge.first, edge.second);
    if (seen.emplace(e.first, e.second).second) {
      edges.emplace_back(e.first, e.second);
      unique_typed.push_back({{e.first, e.second}, bit});
    }
  }
  auto graph = std::make_shared<Graph>(Graph::from_edges(count, std::move(edges)));
  std::vector<uint8_t> bits(graph->edge_count());
  for (const auto& [edge, bit] : unique_typed) bits[*graph->edge_id(edge.first, edge.second)] = bit;
  // Right multiplications generate the regular action.
  std::vector<uint32_t> ra(count), rb(count), rc(count);
  for (uint32_t k = 0; k < 2; ++k) {
    for (uint32_t j = 0; j < 2; ++j) {
      for (uint32_t i = 0; i < n; ++i) {
        uint32_t g = index(i, j, k);
        ra[g] = index(j == 0 ? (i + 1) % n : (i + n - 1) % n, j, k);
        rb[g] = index(i, j ^ 1, k);
        rc[g] = index(i, j, k ^ 1);
      }
    }
  }
  PrismFixture fx{graph, VoltageAssignment::from_bits(graph, std::move(bits)),
                  PermGroup::generated(count, {Perm::from_images(std::move(ra)),
                                               Perm::from_images(std::move(rb)),
                                               Perm::from_images(std::move(rc))})};
  return fx;
}

namespace {

std::optional<Graph> parse_parametrized(const std::string& name) {
  if (name.starts_with("GP(") && name.back() == ')') {
    auto body = name.substr(3, name.size() - 4);
    auto comma = body.find(',');
    if (comma == std::string::npos) return std::nullopt;
    return generalized_petersen(std::stoul(body.substr(0, comma)),
                                std::stoul(body.substr(comma + 1)));
  }
  if (name.starts_with("C(") && name.back() == ')') {
    auto body = name.substr(2, name.size() - 3);
    auto semi = body.find(';');
    if (semi == std::string::npos) return std::nullopt;
    uint32_t n = std::stoul(body.substr(0, semi));
    std::vector<uint32_t> steps;
    std::string rest = body.substr(semi + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      steps.push_back(std::stoul(rest.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return circulant(n, steps);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Graph> fixture_graph(const std::string& name) {
  if (name == "F4") return complete_graph(4);
  if (name == "F8") return *f8_fixture().cover.derived;
  if (name == "F10") return *petersen();
  if (name == "F16") return generalized_petersen(8, 3);
  if (name == "F20A") return *f20a_fixture().cover.derived;
  if (name == "F20B") return *f20b_fixture().cover.derived;
  if (name == "F40") return *f40_fixture().cover.derived;
  try {
    return parse_parametrized(name);
  } catch (const std::exception&) {
    throw Error::malformed("bad fixture parameters: " + name);
  }
}

std::optional<PermGroup> fixture_group(const std::string& name) {
  if (name == "A4") return k4_a4();
  if (name == "S4" || name == "AutF4") return k4_s4();
  if (name == "A5") return petersen_a5();
  if (name == "S5" || name == "AutF10") return petersen_s5();
  if (name == "AutF8") return f8_fixture().lifted.group;
  if (name == "AutF20A") return f20a_fixture().lifted.group;
  if (name == "AutF20B") return f20b_fixture().lifted.group;
  return std::nullopt;
}

std::string census_name(const Graph& g) {
  struct Entry {
    const char* name;
    uint32_t n;
  };
  static const Entry entries[] = {{"F4", 4},   {"F8", 8},     {"F10", 10},  {"F16", 16},
                                  {"F20A", 20}, {"F20B", 20}, {"F40", 40}};
  for (const auto& e : entries) {
    if (g.vertex_count() != e.n) continue;
    auto candidate = fixture_graph(e.name);
    if (candidate && isomorphic(g, *candidate)) return e.name;
  }
  return "";
}

}  // namespace cover
