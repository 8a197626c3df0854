#include "cover/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "cover/error.hpp"

namespace cover {

Graph Graph::from_edges(uint32_t vertex_count,
                        std::vector<std::pair<uint32_t, uint32_t>> edges) {
  Graph g;
  g.n_ = vertex_count;
  g.adj_.assign(vertex_count, {});
  for (auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw Error::malformed("edge endpoint out of range");
    }
    if (u == v) throw Error::malformed("loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw Error::malformed("parallel edges are not allowed");
  }
  g.edges_ = std::move(edges);
  for (const auto& [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  // edges_ is sorted by (u, v); record where each u's block begins.
  g.edge_start_.assign(vertex_count + 1, 0);
  for (const auto& [u, v] : g.edges_) g.edge_start_[u + 1]++;
  for (uint32_t i = 0; i < vertex_count; ++i) g.edge_start_[i + 1] += g.edge_start_[i];
  return g;
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<uint32_t> Graph::edge_id(uint32_t u, uint32_t v) const {
  if (u > v) std::swap(u, v);
  if (v >= n_) return std::nullopt;
  auto first = edges_.begin() + edge_start_[u];
  auto last = edges_.begin() + edge_start_[u + 1];
  auto it = std::lower_bound(first, last, std::make_pair(u, v));
  if (it == last || *it != std::make_pair(u, v)) return std::nullopt;
  return static_cast<uint32_t>(it - edges_.begin());
}

bool Graph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<bool> seen(n_, false);
  std::deque<uint32_t> queue = {0};
  seen[0] = true;
  uint32_t count = 1;
  while (!queue.empty()) {
    uint32_t v = queue.front();
    queue.pop_front();
    for (uint32_t w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == n_;
}

std::optional<std::vector<int>> Graph::bipartition() const {
  std::vector<int> color(n_, -1);
  for (uint32_t start = 0; start < n_; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::deque<uint32_t> queue = {start};
    while (!queue.empty()) {
      uint32_t v = queue.front();
      queue.pop_front();
      for (uint32_t w : adj_[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::optional<uint32_t> Graph::girth() const {
  uint32_t best = UINT32_MAX;
  std::vector<uint32_t> dist(n_);
  std::vector<int64_t> parent(n_);
  for (uint32_t s = 0; s < n_; ++s) {
    std::fill(dist.begin(), dist.end(), UINT32_MAX);
    std::fill(parent.begin(), parent.end(), -1);
    dist[s] = 0;
    std::deque<uint32_t> queue = {s};
    while (!queue.empty()) {
      uint32_t v = queue.front();
      queue.pop_front();
      if (2 * dist[v] >= best) continue;
      for (uint32_t w : adj_[v]) {
        if (dist[w] == UINT32_MAX) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (static_cast<int64_t>(w) != parent[v]) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == UINT32_MAX) return std::nullopt;
  return best;
}

bool Graph::is_regular(uint32_t d) const {
  for (uint32_t v = 0; v < n_; ++v) {
    if (degree(v) != d) return false;
  }
  return true;
}

std::vector<Arc> SpanningData::tree_path(uint32_t v) const {
  std::vector<Arc> path;
  while (parent[v] >= 0) {
    uint32_t p = static_cast<uint32_t>(parent[v]);
    path.push_back(Arc{p, v});
    v = p;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

SpanningData spanning_data(const Graph& g, uint32_t root) {
  if (root >= g.vertex_count()) throw Error::malformed("spanning root out of range");
  if (!g.is_connected()) throw Error::domain("spanning data requires a connected graph");
  SpanningData t;
  t.root = root;
  t.parent.assign(g.vertex_count(), -1);
  t.depth.assign(g.vertex_count(), 0);
  std::vector<bool> seen(g.vertex_count(), false);
  seen[root] = true;
  std::deque<uint32_t> queue = {root};
  std::vector<bool> in_tree(g.edge_count(), false);
  while (!queue.empty()) {
    uint32_t v = queue.front();
    queue.pop_front();
    for (uint32_t w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        t.parent[w] = v;
        t.depth[w] = t.depth[v] + 1;
        in_tree[*g.edge_id(v, w)] = true;
        queue.push_back(w);
      }
    }
  }
  t.cotree_index.assign(g.edge_count(), -1);
  for (uint32_t e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    t.cotree_index[e] = static_cast<int32_t>(t.cotree_edges.size());
    t.cotree_edges.push_back(g.edges()[e]);
  }
  // Fundamental cycles: tree path u -> v (trimmed at the meeting vertex),
  // then the cotree arc back to u.
  for (const auto& [u, v] : t.cotree_edges) {
    std::vector<Arc> up = t.tree_path(u);
    std::vector<Arc> vp = t.tree_path(v);
    size_t common = 0;
    while (common < up.size() && common < vp.size() &&
           up[common].from == vp[common].from && up[common].to == vp[common].to) {
      ++common;
    }
    std::vector<Arc> cycle;
    for (size_t i = up.size(); i-- > common;) cycle.push_back(Arc{up[i].to, up[i].from});
    for (size_t i = common; i < vp.size(); ++i) cycle.push_back(vp[i]);
    cycle.push_back(Arc{v, u});
    t.base_cycles.push_back(std::move(cycle));
  }
  return t;
}

namespace {

std::vector<uint32_t> refined_colors(const Graph& g) {
  std::vector<uint32_t> color(g.vertex_count());
  for (uint32_t v = 0; v < g.vertex_count(); ++v) color[v] = g.degree(v);
  for (int round = 0; round < 4; ++round) {
    std::vector<std::vector<uint32_t>> sig(g.vertex_count());
    for (uint32_t v = 0; v < g.vertex_count(); ++v) {
      sig[v].push_back(color[v]);
      std::vector<uint32_t> nb;
      for (uint32_t w : g.neighbors(v)) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<uint32_t>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (uint32_t v = 0; v < g.vertex_count(); ++v) {
      color[v] = static_cast<uint32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
  }
  return color;
}

struct IsoState {
  const Graph* a;
  const Graph* b;
  std::vector<int64_t> map_ab;
  std::vector<int64_t> map_ba;
  std::vector<uint32_t> order;  // assignment order over a's vertices
  std::vector<uint32_t> color_a;
  std::vector<uint32_t> color_b;
  uint64_t steps = 0;
  uint64_t budget;
};

bool consistent(const IsoState& st, uint32_t av, uint32_t bv) {
  if (st.color_a[av] != st.color_b[bv]) return false;
  uint32_t mapped_a = 0;
  for (uint32_t w : st.a->neighbors(av)) {
    if (st.map_ab[w] >= 0) {
      ++mapped_a;
      if (!st.b->has_edge(bv, static_cast<uint32_t>(st.map_ab[w]))) return false;
    }
  }
  uint32_t mapped_b = 0;
  for (uint32_t w : st.b->neighbors(bv)) {
    if (st.map_ba[w] >= 0) ++mapped_b;
  }
  return mapped_a == mapped_b;
}

bool iso_search(IsoState& st, size_t pos) {
  if (pos == st.order.size()) return true;
  if (++st.steps > st.budget) throw Error::resource("isomorphism search budget exceeded");
  uint32_t av = st.order[pos];
  for (uint32_t bv = 0; bv < st.b->vertex_count(); ++bv) {
    if (st.map_ba[bv] >= 0) continue;
    if (!consistent(st, av, bv)) continue;
    st.map_ab[av] = bv;
    st.map_ba[bv] = av;
    if (iso_search(st, pos + 1)) return true;
    st.map_ab[av] = -1;
    st.map_ba[bv] = -1;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b, uint64_t step_budget) {
  if (a.vertex_count() > 2000 || b.vertex_count() > 2000) {
    throw Error::resource("isomorphism test limited to 2000 vertices");
  }
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (a.vertex_count() == 0) return true;
  if (a.bipartition().has_value() != b.bipartition().has_value()) return false;
  if (a.girth() != b.girth()) return false;

  IsoState st;
  st.a = &a;
  st.b = &b;
  st.color_a = refined_colors(a);
  st.color_b = refined_colors(b);
  auto hist = [](const std::vector<uint32_t>& c) {
    std::vector<uint32_t> h = c;
    std::sort(h.begin(), h.end());
    return h;
  };
  if (hist(st.color_a) != hist(st.color_b)) return false;

  // Assign vertices in BFS order so each new vertex touches mapped ones.
  std::vector<bool> seen(a.vertex_count(), false);
  for (uint32_t start = 0; start < a.vertex_count(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::deque<uint32_t> queue = {start};
    while (!queue.empty()) {
      uint32_t v = queue.front();
      queue.pop_front();
      st.order.push_back(v);
      for (uint32_t w : a.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  st.map_ab.assign(a.vertex_count(), -1);
  st.map_ba.assign(b.vertex_count(), -1);
  st.budget = step_budget;
  return iso_search(st, 0);
}

}  // namespace cover
