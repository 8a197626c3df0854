#include "cover/voltage.hpp"

#include <algorithm>

#include "cover/error.hpp"
#include "cover/gf2.hpp"

namespace cover {

VoltageAssignment VoltageAssignment::zeros(GraphPtr graph) {
  VoltageAssignment z;
  z.bits_.assign(graph->edge_count(), 0);
  z.graph_ = std::move(graph);
  return z;
}

VoltageAssignment VoltageAssignment::ones(GraphPtr graph) {
  VoltageAssignment z;
  z.bits_.assign(graph->edge_count(), 1);
  z.graph_ = std::move(graph);
  return z;
}

VoltageAssignment VoltageAssignment::from_bits(GraphPtr graph, std::vector<uint8_t> bits) {
  if (bits.size() != graph->edge_count()) {
    throw Error::malformed("voltage bit vector must cover every edge exactly once");
  }
  for (uint8_t b : bits) {
    if (b > 1) throw Error::malformed("voltages must be 0 or 1");
  }
  VoltageAssignment z;
  z.graph_ = std::move(graph);
  z.bits_ = std::move(bits);
  return z;
}

VoltageAssignment VoltageAssignment::from_class_vector(GraphPtr graph,
                                                       const SpanningData& tree,
                                                       uint64_t class_vector) {
  std::vector<uint8_t> bits(graph->edge_count(), 0);
  for (uint32_t e = 0; e < graph->edge_count(); ++e) {
    int32_t j = tree.cotree_index[e];
    if (j >= 0) bits[e] = (class_vector >> j) & 1ull;
  }
  return from_bits(std::move(graph), std::move(bits));
}

uint8_t VoltageAssignment::arc_bit(uint32_t u, uint32_t v) const {
  auto e = graph_->edge_id(u, v);
  if (!e) throw Error::malformed("arc is not an edge of the base graph");
  return bits_[*e];
}

uint8_t walk_voltage(const VoltageAssignment& zeta, std::span<const Arc> walk) {
  uint8_t total = 0;
  for (size_t i = 0; i < walk.size(); ++i) {
    if (i > 0 && walk[i - 1].to != walk[i].from) {
      throw Error::malformed("arcs do not chain into a walk");
    }
    total ^= zeta.arc_bit(walk[i].from, walk[i].to);
  }
  return total;
}

Cover derived_cover(GraphPtr base, const VoltageAssignment& zeta) {
  if (!base->is_connected()) throw Error::domain("derived cover requires a connected base");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(2 * base->edge_count());
  for (uint32_t e = 0; e < base->edge_count(); ++e) {
    auto [u, v] = base->edges()[e];
    uint8_t z = zeta.edge_bit(e);
    edges.emplace_back(2 * u + 0, 2 * v + z);
    edges.emplace_back(2 * u + 1, 2 * v + (1 - z));
  }
  Graph derived = Graph::from_edges(2 * base->vertex_count(), std::move(edges));

  std::vector<uint32_t> deck_images(derived.vertex_count());
  for (uint32_t v = 0; v < base->vertex_count(); ++v) {
    deck_images[2 * v] = 2 * v + 1;
    deck_images[2 * v + 1] = 2 * v;
  }

  Cover c{std::move(base), zeta, std::make_shared<Graph>(std::move(derived)),
          Perm::from_images(std::move(deck_images)), SpanningData{}, {}};
  c.tree = spanning_data(*c.base, 0);
  c.tree_voltage.assign(c.base->vertex_count(), 0);
  // Prefix voltages follow parent links, so fill in BFS depth order.
  std::vector<uint32_t> by_depth(c.base->vertex_count());
  for (uint32_t v = 0; v < c.base->vertex_count(); ++v) by_depth[v] = v;
  std::sort(by_depth.begin(), by_depth.end(),
            [&](uint32_t a, uint32_t b) { return c.tree.depth[a] < c.tree.depth[b]; });
  for (uint32_t v : by_depth) {
    if (c.tree.parent[v] < 0) continue;
    uint32_t p = static_cast<uint32_t>(c.tree.parent[v]);
    c.tree_voltage[v] = c.tree_voltage[p] ^ c.zeta.arc_bit(p, v);
  }
  return c;
}

bool is_connected_cover(const VoltageAssignment& zeta) {
  SpanningData tree = spanning_data(zeta.graph(), 0);
  return class_vector(zeta, tree) != 0;
}

bool is_canonical_double_cover(const VoltageAssignment& zeta) {
  SpanningData tree = spanning_data(zeta.graph(), 0);
  for (const auto& cycle : tree.base_cycles) {
    uint8_t parity = static_cast<uint8_t>(cycle.size() & 1);
    if (walk_voltage(zeta, cycle) != parity) return false;
  }
  return true;
}

namespace {

std::vector<Arc> map_walk(const Perm& g, std::span<const Arc> walk) {
  std::vector<Arc> image;
  image.reserve(walk.size());
  for (const Arc& a : walk) image.push_back(Arc{g[a.from], g[a.to]});
  return image;
}

void require_automorphisms(const Graph& base, const PermGroup& g) {
  for (const Perm& s : g.generators()) {
    if (s.degree() != base.vertex_count()) {
      throw Error::malformed("group degree does not match the vertex count");
    }
    for (const auto& [u, v] : base.edges()) {
      if (!base.has_edge(s[u], s[v])) {
        throw Error::domain("group generator is not a graph automorphism");
      }
    }
  }
}

}  // namespace

bool lifts_group(const VoltageAssignment& zeta, const PermGroup& g) {
  require_automorphisms(zeta.graph(), g);
  SpanningData tree = spanning_data(zeta.graph(), 0);
  for (const Perm& s : g.generators()) {
    for (const auto& cycle : tree.base_cycles) {
      if (walk_voltage(zeta, cycle) != walk_voltage(zeta, map_walk(s, cycle))) return false;
    }
  }
  return true;
}

std::optional<VoltageAssignment> sectional_voltage_witness(const VoltageAssignment& zeta,
                                                           const PermGroup& g) {
  const Graph& base = zeta.graph();
  require_automorphisms(base, g);
  const uint32_t n = base.vertex_count();
  Gf2Matrix system(n);
  std::vector<uint8_t> rhs;
  size_t row = 0;
  for (const Perm& s : g.generators()) {
    for (uint32_t e = 0; e < base.edge_count(); ++e) {
      auto [u, v] = base.edges()[e];
      uint32_t iu = s[u], iv = s[v];
      system.add_empty_row();
      system.toggle(row, u);
      system.toggle(row, v);
      system.toggle(row, iu);
      system.toggle(row, iv);
      rhs.push_back(zeta.edge_bit(e) ^ zeta.arc_bit(iu, iv));
      ++row;
    }
  }
  auto switching = system.solve(rhs);
  if (!switching) return std::nullopt;
  std::vector<uint8_t> bits(base.edge_count());
  for (uint32_t e = 0; e < base.edge_count(); ++e) {
    auto [u, v] = base.edges()[e];
    bits[e] = zeta.edge_bit(e) ^ (*switching)[u] ^ (*switching)[v];
  }
  VoltageAssignment witness = VoltageAssignment::from_bits(zeta.graph_ptr(), std::move(bits));
  // The witness must be arcwise invariant and equivalent to the input.
  for (const Perm& s : g.generators()) {
    for (const auto& [u, v] : base.edges()) {
      if (witness.arc_bit(u, v) != witness.arc_bit(s[u], s[v])) {
        throw Error::domain("sectional witness failed arcwise invariance");
      }
    }
  }
  return witness;
}

std::vector<uint64_t> ClassBasis::span_nonzero(size_t limit) const {
  std::vector<uint64_t> result;
  if (basis.empty()) return result;
  size_t total = (size_t{1} << basis.size()) - 1;
  for (size_t m = 1; m <= total && result.size() < limit; ++m) {
    uint64_t v = 0;
    for (size_t j = 0; j < basis.size(); ++j) {
      if ((m >> j) & 1u) v ^= basis[j];
    }
    result.push_back(v);
  }
  return result;
}

uint64_t walk_class(const SpanningData& tree, const Graph& base, std::span<const Arc> walk) {
  uint64_t bits = 0;
  for (const Arc& a : walk) {
    auto e = base.edge_id(a.from, a.to);
    if (!e) throw Error::malformed("walk leaves the graph");
    int32_t j = tree.cotree_index[*e];
    if (j >= 0) bits ^= 1ull << j;
  }
  return bits;
}

ClassBasis admissible_classes(GraphPtr base, const PermGroup& g) {
  require_automorphisms(*base, g);
  ClassBasis cb;
  cb.tree = spanning_data(*base, 0);
  cb.betti = cb.tree.betti();
  if (cb.betti > 62) throw Error::resource("cycle space dimension exceeds 62");
  Gf2Matrix constraints(cb.betti);
  size_t row = 0;
  for (const Perm& s : g.generators()) {
    for (uint32_t j = 0; j < cb.betti; ++j) {
      uint64_t image = walk_class(cb.tree, *base, map_walk(s, cb.tree.base_cycles[j]));
      uint64_t diff = image ^ (1ull << j);
      constraints.add_empty_row();
      for (uint32_t b = 0; b < cb.betti; ++b) {
        if ((diff >> b) & 1ull) constraints.toggle(row, b);
      }
      ++row;
    }
  }
  for (const auto& v : constraints.nullspace()) {
    uint64_t bits = 0;
    for (uint32_t b = 0; b < cb.betti; ++b) {
      if (v[b]) bits |= 1ull << b;
    }
    cb.basis.push_back(bits);
  }
  return cb;
}

VoltageAssignment normalize_to_tree(const VoltageAssignment& zeta, const SpanningData& tree) {
  const Graph& base = zeta.graph();
  std::vector<uint8_t> prefix(base.vertex_count(), 0);
  std::vector<uint32_t> by_depth(base.vertex_count());
  for (uint32_t v = 0; v < base.vertex_count(); ++v) by_depth[v] = v;
  std::sort(by_depth.begin(), by_depth.end(),
            [&](uint32_t a, uint32_t b) { return tree.depth[a] < tree.depth[b]; });
  for (uint32_t v : by_depth) {
    if (tree.parent[v] < 0) continue;
    uint32_t p = static_cast<uint32_t>(tree.parent[v]);
    prefix[v] = prefix[p] ^ zeta.arc_bit(p, v);
  }
  std::vector<uint8_t> bits(base.edge_count());
  for (uint32_t e = 0; e < base.edge_count(); ++e) {
    auto [u, v] = base.edges()[e];
    bits[e] = zeta.edge_bit(e) ^ prefix[u] ^ prefix[v];
  }
  return VoltageAssignment::from_bits(zeta.graph_ptr(), std::move(bits));
}

uint64_t class_vector(const VoltageAssignment& zeta, const SpanningData& tree) {
  uint64_t bits = 0;
  for (uint32_t j = 0; j < tree.betti(); ++j) {
    if (walk_voltage(zeta, tree.base_cycles[j])) bits |= 1ull << j;
  }
  return bits;
}

uint64_t cdc_class_vector(const Graph&, const SpanningData& tree) {
  uint64_t bits = 0;
  for (uint32_t j = 0; j < tree.betti(); ++j) {
    if (tree.base_cycles[j].size() & 1) bits |= 1ull << j;
  }
  return bits;
}

}  // namespace cover
