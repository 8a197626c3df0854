#include "cover/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "cover/error.hpp"

namespace cover {

namespace detail {

Bsgs::Bsgs(uint32_t degree, const std::vector<Perm>& generators,
           const std::vector<uint32_t>& forced_base)
    : degree_(degree) {
  for (uint32_t beta : forced_base) {
    Level level;
    level.beta = beta;
    level.orbit = {beta};
    level.slot.assign(degree_, -1);
    level.slot[beta] = 0;
    level.transversal = {Perm(degree_)};
    level.processed = {0};
    levels_.push_back(std::move(level));
  }
  // An input generator joins every level whose base prefix it fixes.
  for (const Perm& g : generators) add_generator(0, g);
  // Verify Schreier generators bottom-up; a failing pair deposits its sift
  // residue on the levels between, and control jumps back down to it.
  int64_t at = static_cast<int64_t>(levels_.size()) - 1;
  while (at >= 0) {
    int64_t jump = complete_level_once(static_cast<size_t>(at));
    at = jump >= 0 ? jump : at - 1;
  }
  recompute_order();
}

std::pair<size_t, Perm> Bsgs::sift_from(size_t level, Perm g) const {
  for (size_t i = level; i < levels_.size(); ++i) {
    if (g.is_identity()) return {i, g};
    uint32_t image = g[levels_[i].beta];
    int32_t slot = levels_[i].slot[image];
    if (slot < 0) return {i, g};
    g = g * levels_[i].transversal[slot].inverse();
  }
  return {levels_.size(), g};
}

void Bsgs::make_level(const Perm& mover) {
  Level fresh;
  fresh.beta = mover.smallest_moved_point();
  fresh.orbit = {fresh.beta};
  fresh.slot.assign(degree_, -1);
  fresh.slot[fresh.beta] = 0;
  fresh.transversal = {Perm(degree_)};
  fresh.processed = {0};
  levels_.push_back(std::move(fresh));
}

void Bsgs::add_generator(size_t, Perm g) {
  if (g.is_identity()) return;
  // An input generator belongs to every level whose base prefix it fixes.
  size_t fixes = 0;
  while (fixes < levels_.size() && g[levels_[fixes].beta] == levels_[fixes].beta) ++fixes;
  if (fixes == levels_.size()) make_level(g);
  for (const Perm& existing : levels_[fixes].gens) {
    if (existing == g) return;
  }
  for (size_t t = 0; t <= fixes; ++t) levels_[t].gens.push_back(g);
}

int64_t Bsgs::complete_level_once(size_t level) {
  // Orbit closure under the level's current generator set.
  {
    Level& lv = levels_[level];
    for (size_t idx = 0; idx < lv.orbit.size(); ++idx) {
      for (const Perm& s : lv.gens) {
        uint32_t q = s[lv.orbit[idx]];
        if (lv.slot[q] < 0) {
          lv.slot[q] = static_cast<int32_t>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.transversal.push_back(lv.transversal[idx] * s);
          lv.processed.push_back(0);
        }
      }
    }
  }
  // Sift unprocessed Schreier generators; on failure, deposit the residue
  // on levels level+1 .. j and let the caller jump back down to level j.
  for (size_t idx = 0; idx < levels_[level].orbit.size(); ++idx) {
    while (levels_[level].processed[idx] < levels_[level].gens.size()) {
      Perm schreier;
      {
        Level& lv = levels_[level];
        const Perm& s = lv.gens[lv.processed[idx]++];
        uint32_t q = s[lv.orbit[idx]];
        schreier = lv.transversal[idx] * s * lv.transversal[lv.slot[q]].inverse();
      }
      if (schreier.is_identity()) continue;
      auto [failed_at, residue] = sift_from(level + 1, std::move(schreier));
      if (residue.is_identity()) continue;
      if (failed_at == levels_.size()) make_level(residue);
      bool duplicate = false;
      for (const Perm& existing : levels_[failed_at].gens) {
        if (existing == residue) duplicate = true;
      }
      if (!duplicate) {
        for (size_t t = level + 1; t <= failed_at; ++t) levels_[t].gens.push_back(residue);
      }
      return static_cast<int64_t>(failed_at);
    }
  }
  return -1;
}

void Bsgs::recompute_order() {
  order_ = 1;
  for (const Level& lv : levels_) order_ *= static_cast<uint64_t>(lv.orbit.size());
}

bool Bsgs::contains(const Perm& p) const {
  auto [lvl, residue] = sift_from(0, p);
  (void)lvl;
  return residue.is_identity();
}

BigInt Bsgs::subgroup_order(size_t from_level) const {
  BigInt n = 1;
  for (size_t i = from_level; i < levels_.size(); ++i) {
    n *= static_cast<uint64_t>(levels_[i].orbit.size());
  }
  return n;
}

std::vector<Perm> Bsgs::subgroup_elements(size_t from_level, size_t budget) const {
  if (subgroup_order(from_level) > budget) {
    throw Error::resource("subgroup element enumeration exceeds budget");
  }
  std::vector<Perm> result = {Perm(degree_)};
  for (size_t i = levels_.size(); i-- > from_level;) {
    std::vector<Perm> next;
    next.reserve(result.size() * levels_[i].transversal.size());
    for (const Perm& deep : result) {
      for (const Perm& t : levels_[i].transversal) next.push_back(deep * t);
    }
    result = std::move(next);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace detail

PermGroup PermGroup::generated(uint32_t degree, std::vector<Perm> generators) {
  if (degree == 0) throw Error::malformed("degree-0 permutation groups are not supported");
  for (const Perm& g : generators) {
    if (g.degree() != degree) {
      throw Error::malformed("generator degree does not match group degree");
    }
  }
  std::erase_if(generators, [](const Perm& g) { return g.is_identity(); });
  std::vector<Perm> unique;
  for (Perm& g : generators) {
    if (std::find(unique.begin(), unique.end(), g) == unique.end()) {
      unique.push_back(std::move(g));
    }
  }
  PermGroup result;
  result.degree_ = degree;
  result.gens_ = std::move(unique);
  return result;
}

PermGroup PermGroup::trivial(uint32_t degree) { return generated(degree, {}); }

PermGroup PermGroup::with_certified_order(uint32_t degree, std::vector<Perm> generators,
                                          BigInt order) {
  PermGroup result = generated(degree, std::move(generators));
  result.certified_order_ = std::move(order);
  return result;
}

const detail::Bsgs& PermGroup::bsgs() const {
  if (!bsgs_) bsgs_ = std::make_shared<detail::Bsgs>(degree_, gens_);
  return *bsgs_;
}

const BigInt& PermGroup::order() const {
  if (certified_order_) return *certified_order_;
  return bsgs().order();
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  if (p.is_identity()) return true;
  return bsgs().contains(p);
}

std::vector<uint32_t> PermGroup::orbit(uint32_t point) const {
  std::vector<uint32_t> orb = {point};
  std::vector<bool> seen(degree_, false);
  seen[point] = true;
  for (size_t i = 0; i < orb.size(); ++i) {
    for (const Perm& g : gens_) {
      uint32_t q = g[orb[i]];
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<uint32_t>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<uint32_t>> result;
  for (uint32_t v = 0; v < degree_; ++v) {
    if (seen[v]) continue;
    auto orb = orbit(v);
    for (uint32_t p : orb) seen[p] = true;
    result.push_back(std::move(orb));
  }
  return result;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

std::map<uint32_t, Perm> PermGroup::orbit_with_words(uint32_t point) const {
  if (point >= degree_) throw Error::malformed("orbit point out of range");
  std::map<uint32_t, Perm> words;
  words.emplace(point, Perm(degree_));
  std::deque<uint32_t> queue = {point};
  while (!queue.empty()) {
    uint32_t p = queue.front();
    queue.pop_front();
    const Perm word = words.at(p);
    for (const Perm& g : gens_) {
      uint32_t q = g[p];
      if (!words.contains(q)) {
        words.emplace(q, word * g);
        queue.push_back(q);
      }
    }
  }
  return words;
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
}  // namespace

std::optional<Perm> PermGroup::element_mapping(std::span<const uint32_t> src,
                                               std::span<const uint32_t> dst) const {
  if (src.size() != dst.size()) {
    throw Error::malformed("element_mapping tuples must have equal length");
  }
  std::vector<uint32_t> start(src.begin(), src.end());
  std::vector<uint32_t> goal(dst.begin(), dst.end());
  std::unordered_map<std::vector<uint32_t>, Perm, TupleHash> words;
  words.emplace(start, Perm(degree_));
  std::deque<std::vector<uint32_t>> queue = {start};
  if (start == goal) return Perm(degree_);
  while (!queue.empty()) {
    std::vector<uint32_t> t = std::move(queue.front());
    queue.pop_front();
    Perm word = words.at(t);
    for (const Perm& g : gens_) {
      std::vector<uint32_t> u(t.size());
      for (size_t i = 0; i < t.size(); ++i) u[i] = g[t[i]];
      if (words.contains(u)) continue;
      Perm next = word * g;
      if (u == goal) {
        for (size_t i = 0; i < start.size(); ++i) {
          if (next[start[i]] != goal[i]) {
            throw Error::domain("element_mapping produced an inconsistent word");
          }
        }
        return next;
      }
      words.emplace(u, next);
      queue.push_back(std::move(u));
    }
  }
  return std::nullopt;
}

std::vector<Perm> PermGroup::elements(size_t budget) const {
  if (order() > budget) throw Error::resource("group order exceeds element budget");
  return bsgs().subgroup_elements(0, budget);
}

std::vector<Perm> PermGroup::pointwise_stabilizer_elements(std::span<const uint32_t> points,
                                                           size_t budget) const {
  std::vector<uint32_t> base(points.begin(), points.end());
  detail::Bsgs chain(degree_, gens_, base);
  return chain.subgroup_elements(base.size(), budget);
}

}  // namespace cover
