#include "cover/coset.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cover/error.hpp"

namespace cover {

std::vector<Perm> double_coset(const std::vector<Perm>& h_elements, const Perm& b,
                               size_t budget) {
  if (h_elements.size() * h_elements.size() > budget) {
    throw Error::resource("double coset enumeration exceeds budget");
  }
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> result;
  for (const Perm& h1 : h_elements) {
    Perm left = h1 * b;
    for (const Perm& h2 : h_elements) {
      Perm d = left * h2;
      if (seen.insert(d).second) result.push_back(std::move(d));
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

struct ImageHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

/// Lexicographically least image table among {h * x : h in H}.
std::vector<uint32_t> canonical_key(const std::vector<Perm>& h_elements, const Perm& x) {
  std::vector<uint32_t> best;
  for (const Perm& h : h_elements) {
    std::vector<uint32_t> candidate = (h * x).images();
    if (best.empty() || candidate < best) best = std::move(candidate);
  }
  return best;
}

}  // namespace

CosetGraphResult coset_graph(const PermGroup& g, const Subgroup& h, const Perm& b,
                             size_t size_budget) {
  if (!core_is_trivial(g, h)) {
    throw Error::domain("coset action is unfaithful: the subgroup has nontrivial core");
  }
  if (!g.contains(b)) throw Error::domain("edge element lies outside the group");
  std::vector<Perm> h_elements = h.element_list();
  std::vector<Perm> d = double_coset(h_elements, b);
  {
    std::unordered_set<Perm, PermHash> hset(h_elements.begin(), h_elements.end());
    for (const Perm& x : d) {
      if (hset.contains(x)) {
        throw Error::domain("b lies in the subgroup: the coset graph degenerates to loops");
      }
    }
  }
  BigInt index_big = g.order() / h.order();
  if (index_big > size_budget) throw Error::resource("coset count exceeds the size budget");
  const size_t expected = static_cast<size_t>(index_big);

  std::unordered_map<std::vector<uint32_t>, uint32_t, ImageHash> id_of;
  std::vector<Perm> reps;
  std::vector<std::vector<uint32_t>> keys;
  auto intern = [&](const Perm& x) -> uint32_t {
    std::vector<uint32_t> key = canonical_key(h_elements, x);
    auto it = id_of.find(key);
    if (it != id_of.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(reps.size());
    id_of.emplace(key, id);
    reps.push_back(Perm::from_images(key));
    keys.push_back(std::move(key));
    return id;
  };

  std::vector<std::pair<uint32_t, uint32_t>> raw_edges;
  uint32_t start = intern(Perm(g.degree()));
  (void)start;
  for (uint32_t at = 0; at < reps.size(); ++at) {
    if (reps.size() > expected) {
      throw Error::domain("coset enumeration escaped the expected index");
    }
    Perm rep = reps[at];  // copy: reps may reallocate while interning
    for (const Perm& dd : d) {
      uint32_t to = intern(dd * rep);
      if (to != at) {
        raw_edges.emplace_back(std::min(at, to), std::max(at, to));
      }
    }
  }
  const bool connected = reps.size() == expected;

  // Deterministic vertex order: sort canonical keys.
  const uint32_t count = static_cast<uint32_t>(reps.size());
  std::vector<uint32_t> perm_to_sorted(count);
  {
    std::vector<uint32_t> order(count);
    for (uint32_t i = 0; i < count; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](uint32_t a, uint32_t c) { return keys[a] < keys[c]; });
    for (uint32_t sorted_pos = 0; sorted_pos < count; ++sorted_pos) {
      perm_to_sorted[order[sorted_pos]] = sorted_pos;
    }
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  {
    std::set<std::pair<uint32_t, uint32_t>> dedup;
    for (auto [u, v] : raw_edges) {
      uint32_t a = perm_to_sorted[u], c = perm_to_sorted[v];
      dedup.emplace(std::min(a, c), std::max(a, c));
    }
    edges.assign(dedup.begin(), dedup.end());
  }

  CosetGraphResult result{Graph::from_edges(count, std::move(edges)),
                          connected,
                          0,
                          {},
                          {},
                          g.order()};
  result.valency = static_cast<uint32_t>(d.size() / h_elements.size());
  result.vertex_reps.resize(count, Perm(g.degree()));
  for (uint32_t i = 0; i < count; ++i) result.vertex_reps[perm_to_sorted[i]] = reps[i];
  if (connected) {
    // The right-multiplication action is only closed on the full coset set.
    for (const Perm& s : g.generators()) {
      std::vector<uint32_t> action(count);
      for (uint32_t i = 0; i < count; ++i) {
        std::vector<uint32_t> key = canonical_key(h_elements, result.vertex_reps[i] * s);
        auto it = id_of.find(key);
        if (it == id_of.end()) throw Error::domain("generator action leaves the coset set");
        action[i] = perm_to_sorted[it->second];
      }
      result.gen_actions.push_back(Perm::from_images(std::move(action)));
    }
  }
  return result;
}

ConditionReport transitive_split_conditions(const PermGroup& g, const Subgroup& h,
                                            const Subgroup& l, const Perm& b) {
  if (h.order() != 2 * l.order()) {
    throw Error::domain("the smaller subgroup must have index 2 in the larger");
  }
  for (const Perm& x : l.group.generators()) {
    if (!h.group.contains(x)) {
      throw Error::domain("the smaller subgroup is not contained in the larger");
    }
  }
  ConditionReport report;
  std::vector<Perm> l_elements = l.element_list();
  std::unordered_set<Perm, PermHash> lset(l_elements.begin(), l_elements.end());
  report.square_in_subgroup = lset.contains(b * b);

  std::vector<Perm> gens = l.group.generators();
  gens.push_back(b);
  report.generates = PermGroup::generated(g.degree(), std::move(gens)).order() == g.order();

  Subgroup inter = conjugate_intersection(l, b);
  report.index_three = inter.order() * 3 == l.order();

  if (!report.square_in_subgroup) {
    report.first_failure = "b^2 is not in L";
  } else if (!report.generates) {
    report.first_failure = "b and L do not generate the group";
  } else if (!report.index_three) {
    report.first_failure = "|L : L^b n L| is not 3";
  }
  report.ok = report.square_in_subgroup && report.generates && report.index_three;
  return report;
}

namespace {

Perm extend_degree(const Perm& p, uint32_t extra) {
  std::vector<uint32_t> images = p.images();
  uint32_t n = p.degree();
  for (uint32_t i = 0; i < extra; ++i) images.push_back(n + i);
  return Perm::from_images(std::move(images));
}

}  // namespace

SplitCoverSpecs split_cover_from_conditions(const PermGroup& g, const Subgroup& h,
                                            const Subgroup& l, const Perm& b, const Perm& r) {
  ConditionReport cond = transitive_split_conditions(g, h, l, b);
  if (!cond.ok) throw Error::domain("split cover conditions fail: " + cond.first_failure);
  if (!h.group.contains(r) || l.group.contains(r) || !(r * r).is_identity()) {
    throw Error::domain("r must be an involution in H outside L");
  }
  std::vector<Perm> l_elements = l.element_list();
  {
    std::unordered_set<Perm, PermHash> lset(l_elements.begin(), l_elements.end());
    for (const Perm& x : l_elements) {
      if (!lset.contains(x.conjugated_by(r))) {
        throw Error::domain("r does not normalize L");
      }
    }
  }
  const uint32_t n = g.degree();
  std::vector<uint32_t> cimg(n + 2);
  for (uint32_t i = 0; i < n; ++i) cimg[i] = i;
  cimg[n] = n + 1;
  cimg[n + 1] = n;
  Perm c = Perm::from_images(std::move(cimg));

  std::vector<Perm> kgens;
  for (const Perm& s : g.generators()) kgens.push_back(extend_degree(s, 2));
  kgens.push_back(c);

  SplitCoverSpecs specs{PermGroup::generated(n + 2, std::move(kgens)), c,
                        extend_degree(b, 2), {}, h.element_list(), {}};
  Perm rc = extend_degree(r, 2) * c;
  for (const Perm& x : l_elements) {
    specs.cover_l_elements.push_back(extend_degree(x, 2));
    specs.d_elements.push_back(extend_degree(x, 2));
  }
  for (const Perm& x : l_elements) specs.d_elements.push_back(extend_degree(x, 2) * rc);
  std::sort(specs.d_elements.begin(), specs.d_elements.end());
  return specs;
}

}  // namespace cover
