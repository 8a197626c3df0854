#pragma once

#include <optional>
#include <span>

#include "cover/graph.hpp"
#include "cover/perm.hpp"
#include "cover/perm_group.hpp"

namespace cover {

/// Z2 labels on the edges of a base graph.  Both arcs of an edge carry the
/// same value (Z2 elements are self-inverse).
class VoltageAssignment {
 public:
  static VoltageAssignment zeros(GraphPtr graph);
  static VoltageAssignment ones(GraphPtr graph);
  static VoltageAssignment from_bits(GraphPtr graph, std::vector<uint8_t> bits);
  /// Tree edges zero, cotree edge j set to bit j of the class vector.
  static VoltageAssignment from_class_vector(GraphPtr graph, const SpanningData& tree,
                                             uint64_t class_vector);

  const Graph& graph() const { return *graph_; }
  GraphPtr graph_ptr() const { return graph_; }
  uint8_t edge_bit(uint32_t edge) const { return bits_[edge]; }
  uint8_t arc_bit(uint32_t u, uint32_t v) const;
  const std::vector<uint8_t>& bits() const { return bits_; }

 private:
  GraphPtr graph_;
  std::vector<uint8_t> bits_;
};

/// Sum of edge voltages along a walk, mod 2.  Validates that consecutive
/// arcs chain and that every arc is an edge of the base graph.
uint8_t walk_voltage(const VoltageAssignment& zeta, std::span<const Arc> walk);

/// Derived 2-cover.  Vertex (v, i) has index 2v + i; each base edge {u, v}
/// lifts to {(u, i), (v, i + zeta(uv))}; the deck transformation swaps fibre
/// labels.  Spanning data of the base (rooted at 0) and the prefix voltages
/// of tree paths are cached for lifting.
struct Cover {
  GraphPtr base;
  VoltageAssignment zeta;
  GraphPtr derived;
  Perm deck;
  SpanningData tree;                  // base spanning tree rooted at 0
  std::vector<uint8_t> tree_voltage;  // zeta of the tree path to each vertex

  uint32_t project(uint32_t derived_vertex) const { return derived_vertex / 2; }
  uint32_t fibre_vertex(uint32_t base_vertex, uint8_t label) const {
    return 2 * base_vertex + label;
  }
};

Cover derived_cover(GraphPtr base, const VoltageAssignment& zeta);

/// True iff some base cycle carries voltage 1 (equivalently, the derived
/// graph is connected).
bool is_connected_cover(const VoltageAssignment& zeta);

/// Parity criterion: the assignment defines the canonical double cover iff
/// every base cycle's voltage equals its length mod 2.
bool is_canonical_double_cover(const VoltageAssignment& zeta);

/// True iff every generator maps 0-voltage closed walks to 0-voltage closed
/// walks, tested on base cycles (sufficient by linearity over the cycle
/// space).  Generators must be automorphisms of the base graph.
bool lifts_group(const VoltageAssignment& zeta, const PermGroup& g);

/// Searches the coboundary class of zeta for an assignment that is arcwise
/// invariant under every generator: a GF(2) system in one switching bit per
/// vertex.  Existence is equivalent to the cover being split with an
/// invariant-section complement when g is vertex-transitive.
std::optional<VoltageAssignment> sectional_voltage_witness(const VoltageAssignment& zeta,
                                                           const PermGroup& g);

/// Cover classes invariant under a group, as a GF(2) basis of cotree-voltage
/// vectors over the BFS tree rooted at 0.  Every nonzero vector in the span
/// is a connected admissible cover class; the zero vector is the trivial
/// disconnected cover.
struct ClassBasis {
  SpanningData tree;
  uint32_t betti = 0;
  std::vector<uint64_t> basis;

  std::vector<uint64_t> span_nonzero(size_t limit = SIZE_MAX) const;
};

ClassBasis admissible_classes(GraphPtr base, const PermGroup& g);

/// Equivalent assignment (same closed-walk voltages) with all tree edges 0.
VoltageAssignment normalize_to_tree(const VoltageAssignment& zeta, const SpanningData& tree);

/// Base-cycle voltages as a bit vector; equal vectors mean equivalent
/// assignments.
uint64_t class_vector(const VoltageAssignment& zeta, const SpanningData& tree);

/// Class vector of the all-ones assignment (base-cycle length parities).
uint64_t cdc_class_vector(const Graph& base, const SpanningData& tree);

/// Voltage vector of a closed walk in cotree coordinates.
uint64_t walk_class(const SpanningData& tree, const Graph& base, std::span<const Arc> walk);

}  // namespace cover
