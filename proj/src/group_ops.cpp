#include "cover/group_ops.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "cover/error.hpp"

namespace cover {

Subgroup make_subgroup(const PermGroup& parent, std::vector<Perm> generators) {
  for (const Perm& g : generators) {
    if (!parent.contains(g)) {
      throw Error::domain("subgroup generator lies outside the parent group");
    }
  }
  Subgroup s;
  s.parent = &parent;
  s.group = PermGroup::generated(parent.degree(), std::move(generators));
  if (parent.order() % s.group.order() != 0) {
    throw Error::domain("subgroup order does not divide the parent order");
  }
  return s;
}

std::vector<Subgroup> index2_subgroups(const PermGroup& g) {
  const auto& gens = g.generators();
  const size_t r = gens.size();
  if (r == 0) return {};
  if (r > 20) throw Error::resource("too many generators for index-2 enumeration");
  const BigInt target = g.order() / 2;
  if (g.order() % 2 != 0) return {};

  std::vector<Subgroup> found;
  for (uint32_t eps = 1; eps < (1u << r); ++eps) {
    size_t star = 0;
    while (!((eps >> star) & 1u)) ++star;
    const Perm& gstar = gens[star];
    const Perm gstar_inv = gstar.inverse();
    // Schreier generators of the even-weight words w.r.t. transversal {e, g*}.
    std::vector<Perm> kgens;
    for (size_t i = 0; i < r; ++i) {
      if ((eps >> i) & 1u) {
        kgens.push_back(gstar * gens[i]);          // includes g*^2 when i == star
        kgens.push_back(gens[i] * gstar_inv);
      } else {
        kgens.push_back(gens[i]);
        kgens.push_back(gstar * gens[i] * gstar_inv);
      }
    }
    std::erase_if(kgens, [](const Perm& p) { return p.is_identity(); });
    PermGroup k = PermGroup::generated(g.degree(), std::move(kgens));
    if (k.order() == target) {
      Subgroup s;
      s.parent = &g;
      s.group = std::move(k);
      found.push_back(std::move(s));
    }
  }
  return found;
}

Subgroup conjugate_intersection(const Subgroup& l, const Perm& b, size_t budget) {
  if (l.parent && !l.parent->contains(b)) {
    throw Error::domain("conjugating element lies outside the parent group");
  }
  const auto elems = l.element_list(budget);
  std::unordered_set<Perm, PermHash> member(elems.begin(), elems.end());
  std::vector<Perm> kept;
  for (const Perm& x : elems) {
    if (member.contains(x.conjugated_by(b.inverse()))) kept.push_back(x);
  }
  // x in L^b iff x = y^b for some y in L, i.e. x^(b^-1) in L.
  std::erase_if(kept, [](const Perm& p) { return p.is_identity(); });
  Subgroup s;
  s.parent = l.parent;
  s.group = PermGroup::generated(l.group.degree(), std::move(kept));
  return s;
}

bool core_is_trivial(const PermGroup& g, const Subgroup& h, size_t budget) {
  const auto elems = h.element_list(budget);
  std::unordered_set<Perm, PermHash> member(elems.begin(), elems.end());
  for (const Perm& x : elems) {
    if (x.is_identity()) continue;
    // Conjugacy closure of x under g's generators; if it stays inside h, the
    // subgroup it generates is normal in g and contained in h.
    std::unordered_set<Perm, PermHash> closure = {x};
    std::deque<Perm> queue = {x};
    bool escaped = false;
    while (!queue.empty() && !escaped) {
      Perm y = std::move(queue.front());
      queue.pop_front();
      for (const Perm& s : g.generators()) {
        Perm z = y.conjugated_by(s);
        if (!member.contains(z)) {
          escaped = true;
          break;
        }
        if (closure.insert(z).second) queue.push_back(z);
      }
    }
    if (!escaped) return false;
  }
  return true;
}

namespace {

std::vector<Perm> minimal_generators(const std::vector<Perm>& elements, uint32_t degree) {
  std::vector<Perm> gens;
  auto generated_order = [&](const std::vector<Perm>& gs) {
    return PermGroup::generated(degree, gs).order();
  };
  BigInt current = 1;
  const BigInt full = static_cast<uint64_t>(elements.size());
  while (current < full) {
    for (const Perm& e : elements) {
      if (e.is_identity()) continue;
      std::vector<Perm> trial = gens;
      trial.push_back(e);
      BigInt n = generated_order(trial);
      if (n > current) {
        gens = std::move(trial);
        current = n;
        break;
      }
    }
  }
  return gens;
}

bool extend_isomorphism(const std::vector<Perm>& agens, const std::vector<Perm>& bimgs,
                        const std::vector<Perm>& belems) {
  // Word-closure over <agens>: propagate the generator assignment and check
  // for multiplication-table conflicts.
  std::unordered_map<Perm, Perm, PermHash> phi;
  uint32_t adeg = agens.front().degree();
  uint32_t bdeg = bimgs.front().degree();
  phi.emplace(Perm(adeg), Perm(bdeg));
  std::deque<Perm> queue = {Perm(adeg)};
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    Perm fx = phi.at(x);
    for (size_t i = 0; i < agens.size(); ++i) {
      Perm xa = x * agens[i];
      Perm fxa = fx * bimgs[i];
      auto it = phi.find(xa);
      if (it == phi.end()) {
        phi.emplace(xa, fxa);
        queue.push_back(std::move(xa));
      } else if (it->second != fxa) {
        return false;
      }
    }
  }
  if (phi.size() != belems.size()) return false;
  std::unordered_set<Perm, PermHash> image;
  for (const auto& [x, fx] : phi) image.insert(fx);
  return image.size() == belems.size();
}

bool search_images(const std::vector<Perm>& agens, const std::vector<BigInt>& prefix_orders,
                   size_t next, std::vector<Perm>& bimgs,
                   const std::vector<Perm>& belems) {
  if (next == agens.size()) return extend_isomorphism(agens, bimgs, belems);
  uint64_t want = agens[next].element_order();
  uint32_t bdeg = belems.front().degree();
  for (const Perm& cand : belems) {
    if (cand.element_order() != want) continue;
    bimgs.push_back(cand);
    if (PermGroup::generated(bdeg, bimgs).order() == prefix_orders[next] &&
        search_images(agens, prefix_orders, next + 1, bimgs, belems)) {
      return true;
    }
    bimgs.pop_back();
  }
  return false;
}

}  // namespace

bool group_isomorphic_small(const PermGroup& a, const PermGroup& b) {
  if (a.order() > 100 || b.order() > 100) {
    throw Error::resource("isomorphism test limited to order 100");
  }
  if (a.order() != b.order()) return false;
  auto aelems = a.elements(100);
  auto belems = b.elements(100);
  std::vector<uint64_t> aorders, borders;
  for (const Perm& p : aelems) aorders.push_back(p.element_order());
  for (const Perm& p : belems) borders.push_back(p.element_order());
  std::sort(aorders.begin(), aorders.end());
  std::sort(borders.begin(), borders.end());
  if (aorders != borders) return false;
  if (aelems.size() == 1) return true;

  std::vector<Perm> agens = minimal_generators(aelems, a.degree());
  std::vector<BigInt> prefix_orders;
  for (size_t i = 0; i < agens.size(); ++i) {
    std::vector<Perm> prefix(agens.begin(), agens.begin() + i + 1);
    prefix_orders.push_back(PermGroup::generated(a.degree(), prefix).order());
  }
  std::vector<Perm> bimgs;
  return search_images(agens, prefix_orders, 0, bimgs, belems);
}

PermGroup symmetric_group(uint32_t n) {
  if (n == 0) throw Error::malformed("symmetric group needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<uint32_t> swap01(n);
    for (uint32_t i = 0; i < n; ++i) swap01[i] = i;
    swap01[0] = 1;
    swap01[1] = 0;
    gens.push_back(Perm::from_images(swap01));
  }
  if (n >= 3) {
    std::vector<uint32_t> cyc(n);
    for (uint32_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    gens.push_back(Perm::from_images(cyc));
  }
  return PermGroup::generated(n, std::move(gens));
}

PermGroup alternating_group(uint32_t n) {
  if (n == 0) throw Error::malformed("alternating group needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 3) {
    std::vector<uint32_t> tri(n);
    for (uint32_t i = 0; i < n; ++i) tri[i] = i;
    tri[0] = 1;
    tri[1] = 2;
    tri[2] = 0;
    gens.push_back(Perm::from_images(tri));
  }
  if (n >= 4) {
    std::vector<uint32_t> cyc(n);
    if (n % 2 == 1) {
      for (uint32_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    } else {
      cyc[0] = 0;
      for (uint32_t i = 1; i < n; ++i) cyc[i] = i % (n - 1) + 1;
    }
    gens.push_back(Perm::from_images(cyc));
  }
  return PermGroup::generated(n, std::move(gens));
}

BigInt factorial(uint32_t n) {
  BigInt f = 1;
  for (uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace cover
