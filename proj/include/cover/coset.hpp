#pragma once

#include <string>

#include "cover/graph.hpp"
#include "cover/group_ops.hpp"

namespace cover {

/// The double coset H b H as an explicit element list.
std::vector<Perm> double_coset(const std::vector<Perm>& h_elements, const Perm& b,
                               size_t budget = 1'000'000);

/// A coset graph materialized on right cosets: vertices are cosets of H,
/// with Hg adjacent to Hdg for d in HbH.  Cosets are canonicalized by the
/// lexicographically least image table over the subgroup, and vertex indices
/// follow canonical key order.
struct CosetGraphResult {
  Graph graph;
  bool connected = false;
  uint32_t valency = 0;
  std::vector<Perm> vertex_reps;   // canonical representative per vertex
  std::vector<Perm> gen_actions;   // right multiplication by each group generator
  BigInt group_order = 0;          // order of the acting group (faithful by core check)
};

CosetGraphResult coset_graph(const PermGroup& g, const Subgroup& h, const Perm& b,
                             size_t size_budget = 1'000'000);

/// The existence conditions for a split cover with a transitive complement
/// over a cubic arc-transitive pair: b^2 in L, <b, L> = G, and
/// |L : L^b n L| = 3.  L must have index 2 in H.
struct ConditionReport {
  bool ok = false;
  bool square_in_subgroup = false;
  bool generates = false;
  bool index_three = false;
  std::string first_failure;
};

ConditionReport transitive_split_conditions(const PermGroup& g, const Subgroup& h,
                                            const Subgroup& l, const Perm& b);

/// Constructs the split-cover pair of coset specifications: the base over H
/// in G, and the cover over D = <L, rc> in K = G x <c>, with c realized as a
/// transposition on two fresh points.  r must be an involution in H outside
/// L normalizing L.
struct SplitCoverSpecs {
  PermGroup k;                 // G x <c> on degree + 2 points
  Perm c;                      // central involution (the fresh transposition)
  Perm b_extended;             // b acting on the extended domain
  std::vector<Perm> d_elements;  // D = L u L r c
  std::vector<Perm> base_h_elements;
  std::vector<Perm> cover_l_elements;  // L on the extended domain
};

SplitCoverSpecs split_cover_from_conditions(const PermGroup& g, const Subgroup& h,
                                            const Subgroup& l, const Perm& b, const Perm& r);

}  // namespace cover
