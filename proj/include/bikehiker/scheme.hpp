#pragma once

// Binary scheme matrices: rows are travellers, columns are stages, a 1 means
// the traveller cycles that stage. All indices are 0-based; boundary b sits
// between column b and column b + 1 (post P_{b+1} of the journey).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bikehiker {

// Dense row-major bit matrix, one word-packed bit sequence per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t row, std::size_t col) const noexcept {
    return (words_[row * words_per_row_ + col / 64] >> (col % 64)) & 1u;
  }
  void set(std::size_t row, std::size_t col, bool value) noexcept {
    std::uint64_t& w = words_[row * words_per_row_ + col / 64];
    const std::uint64_t mask = std::uint64_t{1} << (col % 64);
    w = value ? (w | mask) : (w & ~mask);
  }

  // Exchanges the entries of two rows in columns [from_col, cols).
  void swap_row_suffix(std::size_t a, std::size_t b, std::size_t from_col);

  std::size_t row_popcount(std::size_t row) const noexcept;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

// Immutable n x m scheme matrix with cached row and column sums.
class BinaryScheme {
 public:
  // Throws Error(invalid_argument) when either dimension is zero.
  explicit BinaryScheme(BitMatrix bits);

  // Entries must be 0 or 1 and rows must have equal length.
  static BinaryScheme from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const noexcept { return bits_.rows(); }
  std::size_t cols() const noexcept { return bits_.cols(); }
  bool is_square() const noexcept { return rows() == cols(); }

  bool at(std::size_t row, std::size_t col) const noexcept {
    return bits_.get(row, col);
  }
  std::size_t row_sum(std::size_t row) const noexcept { return row_sums_[row]; }
  std::size_t col_sum(std::size_t col) const noexcept { return col_sums_[col]; }
  std::span<const std::size_t> row_sums() const noexcept { return row_sums_; }
  std::span<const std::size_t> col_sums() const noexcept { return col_sums_; }

  const BitMatrix& bits() const noexcept { return bits_; }
  std::vector<bool> row(std::size_t i) const;

  friend bool operator==(const BinaryScheme& a, const BinaryScheme& b) {
    return a.bits_ == b.bits_;
  }

 private:
  BitMatrix bits_;
  std::vector<std::size_t> row_sums_;
  std::vector<std::size_t> col_sums_;
};

struct UniformityReport {
  bool is_uniform = false;
  std::size_t k = 0;  // common column sum (bicycles)
  std::size_t l = 0;  // common row sum (rides per traveller)
};

UniformityReport uniformity(const BinaryScheme& m);

// table(i, j) is the number of 1s among the first j entries of row i, so
// table(i, 0) == 0 and table(i, cols) == row_sum(i).
class PrefixSums {
 public:
  explicit PrefixSums(const BinaryScheme& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t width() const noexcept { return width_; }
  std::uint32_t operator()(std::size_t row, std::size_t j) const noexcept {
    return table_[row * width_ + j];
  }
  // Partial sum of row i through column `boundary` inclusive.
  std::uint32_t at_boundary(std::size_t row, std::size_t boundary) const noexcept {
    return (*this)(row, boundary + 1);
  }

 private:
  std::size_t rows_;
  std::size_t width_;
  std::vector<std::uint32_t> table_;
};

PrefixSums prefix_sums(const BinaryScheme& m);

// Partition of travellers by the entry pair (column b, column b + 1).
struct StageCut {
  std::size_t boundary = 0;
  std::vector<std::size_t> x11;  // ride both stages
  std::vector<std::size_t> x10;  // drop a bike at the post
  std::vector<std::size_t> x01;  // pick a bike up at the post
  std::vector<std::size_t> x00;  // walk both stages
};

// Throws Error(invalid_argument) unless boundary + 1 < cols.
StageCut stage_cut(const BinaryScheme& m, std::size_t boundary);

// Matrix file format: optional '#' comment lines, a "<rows> <cols>" header,
// then one line of space separated 0/1 tokens per row.
BinaryScheme parse_scheme(std::string_view text);
std::string format_scheme(const BinaryScheme& m);

// Row i of the result is row pi[i] of m.
BinaryScheme permute_rows(const BinaryScheme& m, std::span<const std::size_t> pi);
BinaryScheme reverse_stages(const BinaryScheme& m);
BinaryScheme reverse_rows(const BinaryScheme& m);
BinaryScheme binary_dual(const BinaryScheme& m);
BinaryScheme transpose(const BinaryScheme& m);
BinaryScheme swap_columns(const BinaryScheme& m, std::size_t a, std::size_t b);

}  // namespace bikehiker
