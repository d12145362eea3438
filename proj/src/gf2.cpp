#include "lgldpc/gf2.hpp"

#include <bit>

#include "lgldpc/error.hpp"

namespace lgldpc {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

void Gf2Matrix::xor_row_into(std::size_t src, std::size_t dst) {
  std::uint64_t* d = data_.data() + dst * wpr_;
  const std::uint64_t* s = data_.data() + src * wpr_;
  for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
}

std::vector<std::size_t> Gf2Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && !get(pivot, c)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r)
      for (std::size_t w = 0; w < wpr_; ++w)
        std::swap(data_[r * wpr_ + w], data_[pivot * wpr_ + w]);
    for (std::size_t other = 0; other < rows_; ++other)
      if (other != r && get(other, c)) xor_row_into(r, other);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Gf2Matrix::rank() const {
  Gf2Matrix copy = *this;
  return copy.rref().size();
}

Gf2Matrix Gf2Matrix::nullspace_basis() const {
  Gf2Matrix reduced = *this;
  std::vector<std::size_t> pivots = reduced.rref();

  std::vector<std::uint8_t> is_pivot(cols_, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Gf2Matrix basis(free_cols.size(), cols_);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    std::size_t f = free_cols[i];
    basis.set(i, f, true);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (reduced.get(r, f)) basis.set(i, pivots[r], true);
  }
  return basis;
}

unsigned rank_of_masked_words(std::span<const std::uint64_t> rows, std::uint64_t mask) noexcept {
  std::uint64_t basis[64] = {0};
  unsigned rank = 0;
  for (std::uint64_t w : rows) {
    w &= mask;
    while (w != 0) {
      unsigned h = 63 - static_cast<unsigned>(std::countl_zero(w));
      if (basis[h] == 0) {
        basis[h] = w;
        ++rank;
        break;
      }
      w ^= basis[h];
    }
  }
  return rank;
}

}  // namespace lgldpc
