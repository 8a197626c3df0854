#pragma once

#include <vector>

#include "cover/perm_group.hpp"

namespace cover {

/// A subgroup presented inside a parent group.  The parent pointer is
/// non-owning; callers keep the parent alive.
struct Subgroup {
  const PermGroup* parent = nullptr;
  PermGroup group = PermGroup::trivial(1);

  const BigInt& order() const { return group.order(); }
  std::vector<Perm> element_list(size_t budget = kElementBudget) const {
    return group.elements(budget);
  }
};

/// Validates that every generator lies in the parent.
Subgroup make_subgroup(const PermGroup& parent, std::vector<Perm> generators);

/// All subgroups of index 2.  Candidates are kernels of Z2-valued generator
/// assignments: for each nonzero assignment, the subgroup generated by the
/// Schreier generators of the even-weight words (transversal {e, g*}) either
/// is the kernel (accepted when its order is |G|/2) or is the whole group.
std::vector<Subgroup> index2_subgroups(const PermGroup& g);

/// L^b intersected with L, by enumerating L and keeping elements whose
/// b-conjugate stays inside.
Subgroup conjugate_intersection(const Subgroup& l, const Perm& b,
                                size_t budget = kElementBudget);

/// True iff no nontrivial subgroup of h is normal in g.  Tests, for every
/// nontrivial element of h, whether its conjugacy closure under g's
/// generators stays inside h; the closure generates a normal subgroup of g
/// inside h exactly when it does.
bool core_is_trivial(const PermGroup& g, const Subgroup& h, size_t budget = kElementBudget);

/// Abstract isomorphism test for groups of order at most 100, by exhaustive
/// generator-image search with incremental multiplication-table checking.
bool group_isomorphic_small(const PermGroup& a, const PermGroup& b);

PermGroup symmetric_group(uint32_t n);
PermGroup alternating_group(uint32_t n);

BigInt factorial(uint32_t n);

}  // namespace cover
