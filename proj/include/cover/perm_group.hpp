#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cover/perm.hpp"

namespace cover {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

/// Base and strong generating set, built by a deterministic Schreier-Sims
/// procedure.  New base points are always the smallest moved point of the
/// offending residue, so identical generator sequences produce identical
/// chains.
class Bsgs {
 public:
  struct Level {
    uint32_t beta = 0;
    std::vector<Perm> gens;          // strong generators fixing earlier base points
    std::vector<uint32_t> orbit;     // discovery order, orbit[0] == beta
    std::vector<int32_t> slot;       // point -> orbit index, -1 outside
    std::vector<Perm> transversal;   // transversal[i] maps beta to orbit[i]
    std::vector<size_t> processed;   // per orbit index: generators already expanded
  };

  Bsgs(uint32_t degree, const std::vector<Perm>& generators,
       const std::vector<uint32_t>& forced_base = {});

  const BigInt& order() const { return order_; }
  bool contains(const Perm& p) const;
  const std::vector<Level>& levels() const { return levels_; }

  /// All elements of the subgroup fixing base points 0..from_level-1
  /// pointwise, sorted by image table.  Throws on budget overrun.
  std::vector<Perm> subgroup_elements(size_t from_level, size_t budget) const;

  BigInt subgroup_order(size_t from_level) const;

 private:
  uint32_t degree_;
  std::vector<Level> levels_;
  BigInt order_ = 1;

  // Returns the first level whose transversal cannot absorb the residue,
  // together with the residue itself (identity when membership holds).
  std::pair<size_t, Perm> sift_from(size_t level, Perm g) const;
  void make_level(const Perm& mover);
  void add_generator(size_t level, Perm g);
  // Closes the level's orbit and sifts pending Schreier generators; returns
  // the level to jump to after depositing a residue, or -1 when clean.
  int64_t complete_level_once(size_t level);
  void recompute_order();
};

}  // namespace detail

/// A finite permutation group given by generators.  Order, membership,
/// orbits and element enumeration are backed by a lazily built BSGS.
/// Immutable after construction.
class PermGroup {
 public:
  static PermGroup generated(uint32_t degree, std::vector<Perm> generators);
  static PermGroup trivial(uint32_t degree);
  /// For very large coset actions whose order is certified externally
  /// (faithful actions of a group with known order).  order() then skips
  /// the BSGS; membership queries still build one.
  static PermGroup with_certified_order(uint32_t degree, std::vector<Perm> generators,
                                        BigInt order);

  uint32_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const BigInt& order() const;
  bool contains(const Perm& p) const;

  std::vector<uint32_t> orbit(uint32_t point) const;
  std::vector<std::vector<uint32_t>> orbits() const;
  bool is_transitive() const;

  /// Orbit of a point with, for every orbit member, a group element carrying
  /// the point there.
  std::map<uint32_t, Perm> orbit_with_words(uint32_t point) const;

  /// Some g with src^g == dst pointwise, found by BFS over the orbit of the
  /// tuple under the componentwise action; nullopt when the tuples lie in
  /// different orbits.
  std::optional<Perm> element_mapping(std::span<const uint32_t> src,
                                      std::span<const uint32_t> dst) const;

  /// Full element list (sorted by image table); throws Resource if the group
  /// order exceeds the budget.
  std::vector<Perm> elements(size_t budget = 10000) const;

  /// Elements fixing the given points pointwise; enumerated from a stabilizer
  /// chain whose base starts with those points.
  std::vector<Perm> pointwise_stabilizer_elements(std::span<const uint32_t> points,
                                                  size_t budget = 10000) const;

  const detail::Bsgs& bsgs() const;

 private:
  PermGroup() = default;

  uint32_t degree_ = 0;
  std::vector<Perm> gens_;
  std::optional<BigInt> certified_order_;
  mutable std::shared_ptr<const detail::Bsgs> bsgs_;
};

/// Default cap for subgroup element listings.
inline constexpr size_t kElementBudget = 10000;

}  // namespace cover
