#pragma once

#include <string>

#include "cover/group_ops.hpp"
#include "cover/voltage.hpp"

namespace cover {

/// The lift of a base automorphism fixing the fibre label at the spanning
/// root: the image of (v, i) is (v^g, i + d(v)) where d(v) is the voltage
/// discrepancy between the tree path to v and its g-image.  The other lift
/// is the deck transformation composed with this one.
Perm lift_automorphism(const Cover& cover, const Perm& g);

struct LiftedGroup {
  std::vector<Perm> lifts;  // chosen lift per base generator
  Perm deck;
  PermGroup group;          // generated by the lifts and the deck; order 2|G|
};

LiftedGroup lifted_group(const Cover& cover, const PermGroup& g);

enum class SplitKind { NonSplit, SplitSectional, SplitTransitive, SplitMixed };

std::string to_string(SplitKind kind);

struct ComplementInfo {
  std::vector<Perm> gens;
  BigInt order;
  bool transitive = false;
  std::vector<std::vector<uint32_t>> orbits;
};

struct SplitReport {
  SplitKind kind = SplitKind::NonSplit;
  std::vector<ComplementInfo> complements;

  bool has_sectional() const {
    return kind == SplitKind::SplitSectional || kind == SplitKind::SplitMixed;
  }
};

/// Builds the lifted group, enumerates its index-2 subgroups, keeps those
/// avoiding the deck transformation (the complements), and classifies each
/// by its orbits on the covering graph.  Requires a vertex-transitive base
/// group and a connected cover.
SplitReport classify_split(const Cover& cover, const PermGroup& g);

/// True iff the base group has a vertex-transitive subgroup of index 2.
/// Callable only when a sectional complement exists; then equal to
/// (kind == SplitMixed).
bool mixed_criterion(const Cover& cover, const PermGroup& g,
                     const SplitReport* report = nullptr);

/// The two orbits of an intransitive complement; each meets every fibre
/// exactly once.
std::pair<std::vector<uint32_t>, std::vector<uint32_t>> sections_of(
    const ComplementInfo& complement, const Cover& cover);

}  // namespace cover
