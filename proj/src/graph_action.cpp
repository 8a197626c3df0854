#include "cover/graph_action.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "cover/error.hpp"

namespace cover {

GraphAction make_action(GraphPtr graph, PermGroup group) {
  if (group.degree() != graph->vertex_count()) {
    throw Error::malformed("group degree does not match the vertex count");
  }
  for (const Perm& s : group.generators()) {
    for (const auto& [u, v] : graph->edges()) {
      if (!graph->has_edge(s[u], s[v])) {
        throw Error::domain("group generator is not a graph automorphism");
      }
    }
  }
  return GraphAction{std::move(graph), std::move(group)};
}

uint64_t count_s_arcs(const Graph& g, uint32_t s, uint64_t cap) {
  if (s == 0) return g.vertex_count();
  if (s == 1) return 2ull * g.edge_count();
  // Count non-backtracking extensions level by level: the number of s-arcs
  // ending with arc (u, v) depends only on that arc.
  std::unordered_map<uint64_t, uint64_t> ending;  // arc key -> count
  auto key = [&](uint32_t u, uint32_t v) { return (uint64_t{u} << 32) | v; };
  for (const auto& [u, v] : g.edges()) {
    ending[key(u, v)] = 1;
    ending[key(v, u)] = 1;
  }
  for (uint32_t level = 2; level <= s; ++level) {
    std::unordered_map<uint64_t, uint64_t> next;
    uint64_t total = 0;
    for (const auto& [k, cnt] : ending) {
      uint32_t u = static_cast<uint32_t>(k >> 32);
      uint32_t v = static_cast<uint32_t>(k & 0xffffffffull);
      for (uint32_t w : g.neighbors(v)) {
        if (w == u) continue;
        next[key(v, w)] += cnt;
        total += cnt;
        if (total > cap) throw Error::resource("s-arc count exceeds enumeration cap");
      }
    }
    ending = std::move(next);
  }
  uint64_t total = 0;
  for (const auto& [k, cnt] : ending) {
    (void)k;
    total += cnt;
  }
  return total;
}

namespace {

struct TupleHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

/// Some s-arc, found by greedy non-backtracking extension from each arc.
std::optional<std::vector<uint32_t>> first_s_arc(const Graph& g, uint32_t s) {
  for (const auto& [eu, ev] : g.edges()) {
    for (auto [u, v] : {std::pair{eu, ev}, std::pair{ev, eu}}) {
      std::vector<uint32_t> walk = {u, v};
      while (walk.size() < s + 1) {
        uint32_t tail = walk.back();
        uint32_t prev = walk[walk.size() - 2];
        bool extended = false;
        for (uint32_t w : g.neighbors(tail)) {
          if (w != prev) {
            walk.push_back(w);
            extended = true;
            break;
          }
        }
        if (!extended) break;
      }
      if (walk.size() == s + 1) return walk;
    }
  }
  return std::nullopt;
}

/// Size of the orbit of one s-arc under the generators.
uint64_t s_arc_orbit_size(const GraphAction& act, const std::vector<uint32_t>& seed,
                          uint64_t cap) {
  std::unordered_set<std::vector<uint32_t>, TupleHash> seen = {seed};
  std::deque<std::vector<uint32_t>> queue = {seed};
  while (!queue.empty()) {
    std::vector<uint32_t> t = std::move(queue.front());
    queue.pop_front();
    for (const Perm& s : act.group.generators()) {
      std::vector<uint32_t> u(t.size());
      for (size_t i = 0; i < t.size(); ++i) u[i] = s[t[i]];
      if (seen.insert(u).second) {
        if (seen.size() > cap) throw Error::resource("s-arc orbit exceeds cap");
        queue.push_back(std::move(u));
      }
    }
  }
  return seen.size();
}

}  // namespace

bool is_arc_transitive(const GraphAction& act) {
  if (act.graph->edge_count() == 0) return false;
  auto [u, v] = act.graph->edges()[0];
  return s_arc_orbit_size(act, {u, v}, UINT64_MAX) == 2ull * act.graph->edge_count();
}

bool is_edge_transitive(const GraphAction& act) {
  if (act.graph->edge_count() == 0) return false;
  auto [u0, v0] = act.graph->edges()[0];
  std::unordered_set<uint64_t> seen;
  auto key = [](uint32_t a, uint32_t b) {
    if (a > b) std::swap(a, b);
    return (uint64_t{a} << 32) | b;
  };
  std::deque<std::pair<uint32_t, uint32_t>> queue = {{u0, v0}};
  seen.insert(key(u0, v0));
  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    for (const Perm& s : act.group.generators()) {
      uint32_t a = s[u], b = s[v];
      if (seen.insert(key(a, b)).second) queue.emplace_back(a, b);
    }
  }
  return seen.size() == act.graph->edge_count();
}

RegularityResult regularity_degree(const GraphAction& act) {
  const Graph& g = *act.graph;
  if (!g.is_connected()) throw Error::domain("regularity requires a connected graph");
  if (g.vertex_count() >= 3 && g.is_regular(2)) {
    throw Error::domain("cycle graphs have no regularity level");
  }
  const BigInt& order = act.group.order();
  constexpr uint64_t kCap = 10'000'000;
  for (uint32_t s = 1; s <= 24; ++s) {
    uint64_t count;
    try {
      count = count_s_arcs(g, s, kCap);
    } catch (const Error&) {
      // Too many s-arcs to enumerate: fall back to order arithmetic on
      // regular graphs, reporting the level as unverified.
      uint32_t d = g.degree(0);
      if (!g.is_regular(d) || d < 3) throw;
      BigInt expected = BigInt(g.vertex_count()) * d;
      uint32_t level = 1;
      while (expected < order && level <= 24) {
        expected *= (d - 1);
        ++level;
      }
      if (expected == order) return {level, false};
      return {std::nullopt, false};
    }
    if (count == 0) break;
    if (order == count) {
      auto seed = first_s_arc(g, s);
      if (seed && s_arc_orbit_size(act, *seed, count + 1) == count) {
        return {s, true};
      }
    }
    if (order < count) break;
  }
  return {std::nullopt, true};
}

uint32_t stabilizer_order_expected(uint32_t s) {
  switch (s) {
    case 1: return 3;
    case 2: return 6;
    case 3: return 12;
    case 4: return 24;
    case 5: return 48;
    default: throw Error::domain("regularity level must be between 1 and 5");
  }
}

bool edge_flip_involution_exists(const GraphAction& act, size_t budget) {
  if (!is_arc_transitive(act)) {
    throw Error::domain("edge flip search requires an arc-transitive action");
  }
  auto [u, v] = act.graph->edges()[0];
  std::vector<uint32_t> src = {u, v};
  std::vector<uint32_t> dst = {v, u};
  auto t = act.group.element_mapping(src, dst);
  if (!t) return false;
  for (const Perm& s : act.group.pointwise_stabilizer_elements(src, budget)) {
    Perm candidate = *t * s;
    if (!candidate.is_identity() && (candidate * candidate).is_identity()) return true;
  }
  return false;
}

Quotient quotient_by_involution(const Graph& g, const Perm& c) {
  if (c.degree() != g.vertex_count()) {
    throw Error::malformed("involution degree does not match the vertex count");
  }
  if (!(c * c).is_identity() || c.is_identity()) {
    throw Error::domain("quotient map must be a non-identity involution");
  }
  for (uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (c[v] == v) throw Error::domain("involution has a fixed vertex");
  }
  for (const auto& [u, v] : g.edges()) {
    if (!g.has_edge(c[u], c[v])) throw Error::domain("quotient map is not an automorphism");
    if (c[u] == v) throw Error::domain("an edge joins a vertex to its involution image");
  }
  Quotient q;
  q.orbit_of.assign(g.vertex_count(), 0);
  q.label_of.assign(g.vertex_count(), 0);
  uint32_t m = 0;
  for (uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (v < c[v]) {
      q.orbit_of[v] = m;
      q.orbit_of[c[v]] = m;
      q.label_of[v] = 0;
      q.label_of[c[v]] = 1;
      ++m;
    }
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  std::unordered_map<uint64_t, uint8_t> bit_of;
  for (const auto& [u, v] : g.edges()) {
    uint32_t a = q.orbit_of[u], b = q.orbit_of[v];
    uint8_t bit = q.label_of[u] ^ q.label_of[v];
    uint64_t key = (uint64_t{std::min(a, b)} << 32) | std::max(a, b);
    auto it = bit_of.find(key);
    if (it == bit_of.end()) {
      bit_of.emplace(key, bit);
      edges.emplace_back(std::min(a, b), std::max(a, b));
    } else if (it->second != bit) {
      throw Error::domain("projection is not a 2-cover: conflicting fibre crossings");
    }
  }
  auto graph = std::make_shared<Graph>(Graph::from_edges(m, std::move(edges)));
  std::vector<uint8_t> bits(graph->edge_count());
  for (uint32_t e = 0; e < graph->edge_count(); ++e) {
    auto [a, b] = graph->edges()[e];
    bits[e] = bit_of.at((uint64_t{a} << 32) | b);
  }
  q.zeta = VoltageAssignment::from_bits(graph, std::move(bits));
  q.graph = std::move(graph);
  return q;
}

Perm induced_on_quotient(const Quotient& q, const Perm& g) {
  const uint32_t n = static_cast<uint32_t>(q.orbit_of.size());
  if (g.degree() != n) throw Error::malformed("automorphism degree mismatch");
  uint32_t m = q.graph->vertex_count();
  std::vector<uint32_t> images(m, UINT32_MAX);
  for (uint32_t v = 0; v < n; ++v) {
    uint32_t a = q.orbit_of[v];
    uint32_t b = q.orbit_of[g[v]];
    if (images[a] == UINT32_MAX) {
      images[a] = b;
    } else if (images[a] != b) {
      throw Error::domain("automorphism does not normalize the involution's orbits");
    }
  }
  return Perm::from_images(std::move(images));
}

}  // namespace cover
