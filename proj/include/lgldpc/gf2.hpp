#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lgldpc {

// Dense bit-packed matrix over GF(2), 64 columns per word, row-major.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row(r)[c >> 6] >> (c & 63)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t mask = std::uint64_t(1) << (c & 63);
    if (v) row(r)[c >> 6] |= mask;
    else row(r)[c >> 6] &= ~mask;
  }

  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * wpr_, wpr_}; }
  std::span<const std::uint64_t> row(std::size_t r) const { return {data_.data() + r * wpr_, wpr_}; }

  void xor_row_into(std::size_t src, std::size_t dst);

  // In-place reduced row echelon form; returns the pivot column of each of
  // the first rank() rows.
  std::vector<std::size_t> rref();

  std::size_t rank() const;  // on a copy

  // Rows spanning {x : M x^T = 0}. The basis has an identity block on the
  // free columns of the RREF, which back-substitution in the coset encoder
  // relies on.
  Gf2Matrix nullspace_basis() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> data_;
};

// Rank of a set of single-word rows restricted to `mask`, by greedy basis
// insertion. The hot loop of the exhaustive leakage oracle.
unsigned rank_of_masked_words(std::span<const std::uint64_t> rows, std::uint64_t mask) noexcept;

}  // namespace lgldpc
