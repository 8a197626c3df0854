#pragma once

#include <optional>

#include "cover/graph.hpp"
#include "cover/perm_group.hpp"
#include "cover/voltage.hpp"

namespace cover {

/// A permutation group acting on a graph's vertices; every generator is
/// checked to map edges to edges at construction.
struct GraphAction {
  GraphPtr graph;
  PermGroup group;
};

GraphAction make_action(GraphPtr graph, PermGroup group);

/// Number of s-arcs (non-backtracking vertex walks of length s).
uint64_t count_s_arcs(const Graph& g, uint32_t s, uint64_t cap = 10'000'000);

bool is_arc_transitive(const GraphAction& act);
bool is_edge_transitive(const GraphAction& act);

struct RegularityResult {
  std::optional<uint32_t> s;
  bool verified = false;  // false when only order arithmetic was feasible
};

/// The unique s >= 1 with the group transitive on s-arcs and of order equal
/// to the s-arc count, when one exists.  Cycle graphs are rejected (every
/// level matches).  Beyond the enumeration cap the check falls back to order
/// arithmetic on regular graphs and reports verified = false.
RegularityResult regularity_degree(const GraphAction& act);

/// Expected vertex-stabilizer order of an s-regular group on a cubic graph.
uint32_t stabilizer_order_expected(uint32_t s);

/// True iff some involution swaps the endpoints of an edge (any edge, by
/// arc-transitivity).  Searches the coset of the arc stabilizer that
/// reverses a fixed arc.
bool edge_flip_involution_exists(const GraphAction& act, size_t budget = 10000);

/// Quotient by a fixed-point-free involutory automorphism whose orbits span
/// no edges, together with the voltage assignment that reconstructs the
/// input as the derived graph.  Orbits are indexed by ascending smaller
/// representative.
struct Quotient {
  GraphPtr graph;
  VoltageAssignment zeta;
  std::vector<uint32_t> orbit_of;  // input vertex -> quotient vertex
  std::vector<uint8_t> label_of;   // input vertex -> fibre label (0 at representative)
};

Quotient quotient_by_involution(const Graph& g, const Perm& c);

/// Action induced on the quotient's orbit set by an automorphism commuting
/// with the involution.
Perm induced_on_quotient(const Quotient& q, const Perm& g);

}  // namespace cover
