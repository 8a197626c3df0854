#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace cover {

/// Dense GF(2) matrix with word-packed rows.  Pivoting always picks the
/// lowest available column, so reduced forms are deterministic.
class Gf2Matrix {
 public:
  explicit Gf2Matrix(size_t cols);

  size_t cols() const { return cols_; }
  size_t row_count() const { return rows_.size(); }

  void add_empty_row();
  void toggle(size_t row, size_t col);
  bool get(size_t row, size_t col) const;

  /// In-place reduction to reduced row echelon form; returns pivot columns.
  std::vector<size_t> rref();

  /// Nullspace basis (call after or before rref; reduces a copy).  Basis
  /// vectors are indexed by free column, ascending.
  std::vector<std::vector<uint8_t>> nullspace() const;

  /// Solves A x = rhs (one bit per row); nullopt when inconsistent.  Free
  /// variables are set to zero.
  std::optional<std::vector<uint8_t>> solve(const std::vector<uint8_t>& rhs) const;

 private:
  size_t cols_;
  size_t words_;
  std::vector<std::vector<uint64_t>> rows_;
};

}  // namespace cover
