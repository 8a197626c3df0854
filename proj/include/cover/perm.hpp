#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cover {

/// A permutation of {0,...,n-1}, stored as its image table.
///
/// Products act left to right: (a * b) applies a first, then b, and
/// conjugation a.conjugated_by(g) is g^-1 * a * g.  Text I/O uses disjoint
/// cycle notation with 1-indexed points, e.g. "(1 2 3)(4 5)"; the identity
/// prints as "()".
class Perm {
 public:
  Perm() = default;
  explicit Perm(uint32_t degree);  // identity

  static Perm from_images(std::vector<uint32_t> images);
  static Perm from_cycles(uint32_t degree, std::string_view text);

  uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }
  uint32_t operator[](uint32_t point) const { return images_[point]; }
  const std::vector<uint32_t>& images() const { return images_; }

  Perm then(const Perm& other) const;  // *this first, then other
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const;

  bool is_identity() const;
  bool is_even() const;
  uint64_t element_order() const;

  /// Moved points in ascending order.
  std::vector<uint32_t> support() const;
  uint32_t smallest_moved_point() const;  // degree() if identity

  std::vector<std::vector<uint32_t>> cycles() const;  // nontrivial only
  std::string to_cycle_string() const;

  uint64_t hash() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& a, const Perm& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<uint32_t> images_;
};

inline Perm operator*(const Perm& a, const Perm& b) { return a.then(b); }

struct PermHash {
  size_t operator()(const Perm& p) const { return static_cast<size_t>(p.hash()); }
};

}  // namespace cover
