#include "cover/gf2.hpp"

#include <algorithm>

#include "cover/error.hpp"

namespace cover {

Gf2Matrix::Gf2Matrix(size_t cols) : cols_(cols), words_((cols + 63) / 64) {}

void Gf2Matrix::add_empty_row() { rows_.emplace_back(words_, 0ull); }

void Gf2Matrix::toggle(size_t row, size_t col) {
  rows_[row][col >> 6] ^= 1ull << (col & 63);
}

bool Gf2Matrix::get(size_t row, size_t col) const {
  return (rows_[row][col >> 6] >> (col & 63)) & 1ull;
}

std::vector<size_t> Gf2Matrix::rref() {
  std::vector<size_t> pivots;
  size_t rank = 0;
  for (size_t col = 0; col < cols_ && rank < rows_.size(); ++col) {
    size_t pivot_row = rank;
    while (pivot_row < rows_.size() && !get(pivot_row, col)) ++pivot_row;
    if (pivot_row == rows_.size()) continue;
    std::swap(rows_[rank], rows_[pivot_row]);
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (r != rank && get(r, col)) {
        for (size_t w = 0; w < words_; ++w) rows_[r][w] ^= rows_[rank][w];
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  rows_.resize(rank, std::vector<uint64_t>(words_, 0ull));
  return pivots;
}

std::vector<std::vector<uint8_t>> Gf2Matrix::nullspace() const {
  Gf2Matrix reduced = *this;
  std::vector<size_t> pivots = reduced.rref();
  std::vector<int64_t> pivot_row_of(cols_, -1);
  for (size_t r = 0; r < pivots.size(); ++r) pivot_row_of[pivots[r]] = static_cast<int64_t>(r);
  std::vector<std::vector<uint8_t>> basis;
  for (size_t free_col = 0; free_col < cols_; ++free_col) {
    if (pivot_row_of[free_col] >= 0) continue;
    std::vector<uint8_t> v(cols_, 0);
    v[free_col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) {
      if (reduced.get(r, free_col)) v[pivots[r]] = 1;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<uint8_t>> Gf2Matrix::solve(const std::vector<uint8_t>& rhs) const {
  if (rhs.size() != rows_.size()) throw Error::malformed("rhs length mismatch");
  Gf2Matrix aug(cols_ + 1);
  for (size_t r = 0; r < rows_.size(); ++r) {
    aug.add_empty_row();
    for (size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) aug.toggle(r, c);
    }
    if (rhs[r]) aug.toggle(r, cols_);
  }
  // Eliminate, but never pivot on the rhs column.
  std::vector<size_t> pivots;
  size_t rank = 0;
  for (size_t col = 0; col < cols_ && rank < aug.rows_.size(); ++col) {
    size_t pivot_row = rank;
    while (pivot_row < aug.rows_.size() && !aug.get(pivot_row, col)) ++pivot_row;
    if (pivot_row == aug.rows_.size()) continue;
    std::swap(aug.rows_[rank], aug.rows_[pivot_row]);
    for (size_t r = 0; r < aug.rows_.size(); ++r) {
      if (r != rank && aug.get(r, col)) {
        for (size_t w = 0; w < aug.words_; ++w) aug.rows_[r][w] ^= aug.rows_[rank][w];
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  for (size_t r = rank; r < aug.rows_.size(); ++r) {
    if (aug.get(r, cols_)) return std::nullopt;
  }
  std::vector<uint8_t> x(cols_, 0);
  for (size_t r = 0; r < rank; ++r) x[pivots[r]] = aug.get(r, cols_) ? 1 : 0;
  return x;
}

}  // namespace cover
