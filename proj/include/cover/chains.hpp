#pragma once

#include <optional>

#include "cover/lifting.hpp"
#include "cover/voltage.hpp"

namespace cover {

struct ChainBudgets {
  uint32_t max_depth = 3;
  uint32_t vertex_budget = 5000;
  uint32_t class_budget = 64;  // admissible classes expanded per node
};

/// One concrete node of the exploration tree: a graph with the successive
/// lift of the root group acting on it.
struct ChainNode {
  uint32_t id = 0;
  uint32_t depth = 0;
  int64_t parent = -1;                // concrete tree edge
  uint64_t class_vector = 0;          // cover class on the parent's graph
  bool cdc_edge = false;              // class equals the parity class
  SplitKind kind = SplitKind::NonSplit;
  GraphPtr graph;
  PermGroup group = PermGroup::trivial(1);
  uint32_t merged_id = 0;             // isomorphism-merged node for reporting
};

/// Reporting view after isomorphism merging: one row per isomorphism class
/// and depth.
struct MergedNode {
  uint32_t id = 0;
  uint32_t depth = 0;
  uint32_t vertex_count = 0;
  std::optional<uint32_t> girth;
  bool bipartite = false;
  BigInt group_order = 0;
  std::vector<uint32_t> members;  // concrete node ids
};

struct MergedEdge {
  uint32_t from = 0;  // merged ids
  uint32_t to = 0;
  SplitKind kind = SplitKind::NonSplit;
  bool cdc_edge = false;
  uint32_t multiplicity = 0;
  uint64_t class_vector = 0;  // representative
};

struct ChainSummary {
  std::vector<ChainNode> nodes;          // concrete exploration tree, node 0 = root
  std::vector<MergedNode> merged;
  std::vector<MergedEdge> merged_edges;
  uint32_t length = 0;             // deepest explored level
  uint32_t split_length = 0;       // deepest all-split path
  uint32_t sectional_length = 0;   // deepest all-sectional path
  uint32_t transitive_length = 0;  // deepest all-transitive path
  bool exhaustive = true;          // false when a budget truncated the tree
};

/// Breadth-first exploration of consecutive 2-covers: at each node all
/// admissible classes of the node's group are expanded, covers built, lifts
/// classified, and children recursed on.  Lengths are exact when the tree
/// was exhausted within budgets, lower bounds otherwise.
ChainSummary explore(GraphPtr base, const PermGroup& group, ChainBudgets budgets = {});

uint32_t split_length(GraphPtr base, const PermGroup& group, ChainBudgets budgets = {});

/// Scans every root-to-leaf path: at most two split edges, and when exactly
/// two, one transitive and one with a sectional complement.
bool check_split_chain_bound(const ChainSummary& summary);

/// Follows only non-split edges from the root and reports the longest run
/// found (a lower bound when budgets truncate).
struct NonsplitProbe {
  uint32_t longest_run = 0;
  std::vector<uint32_t> path;  // concrete node ids of one longest run
  bool exhaustive = true;
};

NonsplitProbe nonsplit_probe(GraphPtr base, const PermGroup& group, ChainBudgets budgets = {});

/// Rearranges a two-step chain whose upper step is purely transitive or
/// purely sectional: quotients the top cover by the complement's preimage of
/// the lower deck transformation, producing an alternate middle graph whose
/// first step has the upper step's split type.
struct RearrangeResult {
  GraphPtr middle;              // the alternate middle graph
  SplitKind upper_kind;         // classification of the input upper step
  SplitKind new_first_kind;     // classification of the rearranged first step
  bool middle_iso_original = false;
  bool base_recovered = false;  // the double quotient is isomorphic to the base
};

RearrangeResult rearrange_chain(GraphPtr base, const PermGroup& group, uint64_t first_class,
                                uint64_t second_class);

}  // namespace cover
