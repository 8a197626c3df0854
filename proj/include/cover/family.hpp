#pragma once

#include "cover/coset.hpp"

namespace cover {

/// One member of the split-transitive cover family on 12k + 10 points:
/// three explicit permutations generating the relevant subgroup chain.
struct FamilyInstance {
  uint32_t k = 0;
  uint32_t degree = 10;
  Perm a;  // product of 4k+3 consecutive 3-cycles
  Perm r;  // inverts every 3-cycle of a in place
  Perm b;  // involution pairing consecutive triples, plus a final transposition
};

FamilyInstance family_generators(uint32_t k);

/// Structural verification of one family member.
///   - <a, b> has order (12k+10)!/2
///   - the transitive-split conditions hold for (G, H, L, b)
///   - b * b^a is a single (8k+7)-cycle on the residue-1 and residue-0
///     point classes, fixing the middle class pointwise, with the stated
///     first and last entries
///   - parities of a, r, b (a and b must be even for the order check to
///     certify the alternating group; r's parity is reported)
struct FamilyVerification {
  bool order_ok = false;
  BigInt order = 0;
  BigInt expected_order = 0;
  ConditionReport conditions;
  bool cycle_ok = false;
  bool h_intersection_ok = false;  // H^b n H = <r>
  bool a_even = false;
  bool b_even = false;
  bool r_even = false;
  bool pass = false;  // order_ok && conditions.ok && cycle_ok && h_intersection_ok
                      // && a_even && b_even
};

FamilyVerification family_verify(uint32_t k, uint32_t degree_budget = 200);

/// Materialization record for the smallest member (budget-guarded).  The
/// covering coset graph over L is always built.  The base requires an even
/// involution completing the vertex stabilizer (the printed r is odd); when
/// the exhaustive normalizer search finds none, the base side is reported
/// unconstructible instead of being faked.
struct FamilyMaterialization {
  CosetGraphResult cover;  // over L
  uint64_t cover_arcs = 0;
  bool cover_arc_transitive = false;

  bool base_constructible = false;
  size_t stabilizer_candidates_searched = 0;
  std::optional<CosetGraphResult> base;  // over the repaired stabilizer, when found
  uint64_t base_two_arcs = 0;
  bool base_two_arc_transitive = false;

  bool group_has_no_index2 = false;  // simplicity certificate: complements are unique
};

FamilyMaterialization family_materialize(uint32_t k, size_t size_budget = 1'000'000);

}  // namespace cover
