#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace cover {

struct Arc {
  uint32_t from = 0;
  uint32_t to = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Connected-or-not simple undirected graph on densely indexed vertices.
/// Immutable after construction; adjacency lists are sorted.
class Graph {
 public:
  static Graph from_edges(uint32_t vertex_count,
                          std::vector<std::pair<uint32_t, uint32_t>> edges);

  uint32_t vertex_count() const { return n_; }
  uint32_t edge_count() const { return static_cast<uint32_t>(edges_.size()); }
  const std::vector<std::pair<uint32_t, uint32_t>>& edges() const { return edges_; }
  const std::vector<uint32_t>& neighbors(uint32_t v) const { return adj_[v]; }
  uint32_t degree(uint32_t v) const { return static_cast<uint32_t>(adj_[v].size()); }

  bool has_edge(uint32_t u, uint32_t v) const;
  /// Index into edges() for the pair {u, v}; nullopt when absent.
  std::optional<uint32_t> edge_id(uint32_t u, uint32_t v) const;

  bool is_connected() const;
  /// Two-coloring when the graph is bipartite.
  std::optional<std::vector<int>> bipartition() const;
  /// Length of a shortest cycle; nullopt for forests.
  std::optional<uint32_t> girth() const;
  bool is_regular(uint32_t d) const;

 private:
  uint32_t n_ = 0;
  std::vector<std::vector<uint32_t>> adj_;
  std::vector<std::pair<uint32_t, uint32_t>> edges_;  // u < v, sorted
  std::vector<uint32_t> edge_start_;                  // prefix index per vertex
};

using GraphPtr = std::shared_ptr<const Graph>;

/// BFS spanning structure rooted at `root`, with one fundamental cycle per
/// cotree edge.  Each base cycle is the closed arc walk: tree path from the
/// cotree edge's lower endpoint to its upper endpoint, then the cotree arc
/// back.
struct SpanningData {
  uint32_t root = 0;
  std::vector<int64_t> parent;                       // -1 at root
  std::vector<uint32_t> depth;
  std::vector<std::pair<uint32_t, uint32_t>> cotree_edges;
  std::vector<int32_t> cotree_index;                 // edge id -> cotree slot, -1 for tree edges
  std::vector<std::vector<Arc>> base_cycles;

  uint32_t betti() const { return static_cast<uint32_t>(cotree_edges.size()); }
  /// Arc walk from the root to v along tree edges.
  std::vector<Arc> tree_path(uint32_t v) const;
};

SpanningData spanning_data(const Graph& g, uint32_t root);

/// Exact isomorphism test by invariant screening plus backtracking with
/// adjacency consistency.  Throws Resource beyond the vertex or step budget.
bool isomorphic(const Graph& a, const Graph& b, uint64_t step_budget = 50'000'000);

}  // namespace cover
