#include "cover/lifting.hpp"

#include <algorithm>

#include "cover/error.hpp"

namespace cover {

Perm lift_automorphism(const Cover& cover, const Perm& g) {
  const Graph& base = *cover.base;
  if (g.degree() != base.vertex_count()) {
    throw Error::malformed("automorphism degree does not match the base graph");
  }
  for (const auto& cycle : cover.tree.base_cycles) {
    std::vector<Arc> image;
    image.reserve(cycle.size());
    for (const Arc& a : cycle) image.push_back(Arc{g[a.from], g[a.to]});
    if (walk_voltage(cover.zeta, cycle) != walk_voltage(cover.zeta, image)) {
      throw Error::domain("automorphism does not lift: base-cycle voltages move");
    }
  }
  std::vector<uint32_t> images(2 * base.vertex_count());
  for (uint32_t v = 0; v < base.vertex_count(); ++v) {
    // Voltage of the g-image of the tree path to v.
    uint8_t image_voltage = 0;
    uint32_t x = v;
    while (cover.tree.parent[x] >= 0) {
      uint32_t p = static_cast<uint32_t>(cover.tree.parent[x]);
      image_voltage ^= cover.zeta.arc_bit(g[p], g[x]);
      x = p;
    }
    uint8_t delta = cover.tree_voltage[v] ^ image_voltage;
    for (uint8_t i = 0; i < 2; ++i) {
      images[cover.fibre_vertex(v, i)] = cover.fibre_vertex(g[v], (i + delta) & 1);
    }
  }
  return Perm::from_images(std::move(images));
}

LiftedGroup lifted_group(const Cover& cover, const PermGroup& g) {
  if (!is_connected_cover(cover.zeta)) {
    throw Error::domain("lifted group requires a connected cover");
  }
  LiftedGroup lg{{}, cover.deck, PermGroup::trivial(cover.derived->vertex_count())};
  std::vector<Perm> gens;
  for (const Perm& s : g.generators()) {
    Perm lift = lift_automorphism(cover, s);
    lg.lifts.push_back(lift);
    gens.push_back(std::move(lift));
  }
  gens.push_back(cover.deck);
  lg.group = PermGroup::generated(cover.derived->vertex_count(), std::move(gens));
  if (lg.group.order() != 2 * g.order()) {
    throw Error::domain("lifted group order is not twice the base order");
  }
  return lg;
}

std::string to_string(SplitKind kind) {
  switch (kind) {
    case SplitKind::NonSplit: return "NonSplit";
    case SplitKind::SplitSectional: return "SplitSectional";
    case SplitKind::SplitTransitive: return "SplitTransitive";
    case SplitKind::SplitMixed: return "SplitMixed";
  }
  return "?";
}

SplitReport classify_split(const Cover& cover, const PermGroup& g) {
  if (!g.is_transitive()) {
    throw Error::domain("split classification requires a vertex-transitive base group");
  }
  LiftedGroup lifted = lifted_group(cover, g);
  SplitReport report;
  for (Subgroup& sub : index2_subgroups(lifted.group)) {
    if (sub.group.contains(cover.deck)) continue;
    ComplementInfo info;
    info.gens = sub.group.generators();
    info.order = sub.group.order();
    info.orbits = sub.group.orbits();
    info.transitive = info.orbits.size() == 1;
    if (!info.transitive) {
      if (info.orbits.size() != 2) {
        throw Error::domain("intransitive complement does not have two orbits");
      }
      for (const auto& orbit : info.orbits) {
        std::vector<bool> hit(cover.base->vertex_count(), false);
        for (uint32_t v : orbit) {
          if (hit[cover.project(v)]) {
            throw Error::domain("complement orbit meets a fibre twice");
          }
          hit[cover.project(v)] = true;
        }
      }
    }
    report.complements.push_back(std::move(info));
  }
  if (report.complements.empty()) {
    report.kind = SplitKind::NonSplit;
  } else {
    bool any_transitive = false, any_sectional = false;
    for (const auto& c : report.complements) {
      (c.transitive ? any_transitive : any_sectional) = true;
    }
    report.kind = any_transitive && any_sectional ? SplitKind::SplitMixed
                  : any_transitive               ? SplitKind::SplitTransitive
                                                 : SplitKind::SplitSectional;
  }
  return report;
}

bool mixed_criterion(const Cover& cover, const PermGroup& g, const SplitReport* report) {
  SplitReport local;
  if (!report) {
    local = classify_split(cover, g);
    report = &local;
  }
  if (!report->has_sectional()) {
    throw Error::domain("mixed criterion needs a sectional complement to exist");
  }
  for (const Subgroup& sub : index2_subgroups(g)) {
    if (sub.group.is_transitive()) return true;
  }
  return false;
}

std::pair<std::vector<uint32_t>, std::vector<uint32_t>> sections_of(
    const ComplementInfo& complement, const Cover& cover) {
  if (complement.transitive) {
    throw Error::domain("a transitive complement preserves no section");
  }
  auto a = complement.orbits[0];
  auto b = complement.orbits[1];
  for (const auto* section : {&a, &b}) {
    std::vector<bool> hit(cover.base->vertex_count(), false);
    for (uint32_t v : *section) {
      if (hit[cover.project(v)]) throw Error::domain("orbit is not a section");
      hit[cover.project(v)] = true;
    }
  }
  return {std::move(a), std::move(b)};
}

}  // namespace cover
