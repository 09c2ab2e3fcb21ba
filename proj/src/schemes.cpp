#include "bikehiker/schemes.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bikehiker/error.hpp"
#include "bikehiker/optimality.hpp"

namespace bikehiker {

namespace {

void check_params(std::size_t n, std::size_t k) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be at least 1");
  if (k > n)
    throw Error(ErrorCode::invalid_argument,
                "k = " + std::to_string(k) + " out of range for n = " + std::to_string(n));
}

}  // namespace

BinaryScheme cyclic_matrix(std::size_t n, std::size_t k) {
  check_params(n, k);
  BitMatrix bits(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) bits.set(i, (i * k + t) % n, true);
  return BinaryScheme(std::move(bits));
}

BinaryScheme transpose_cyclic_matrix(std::size_t n, std::size_t k) {
  check_params(n, k);
  BitMatrix bits(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t t = 0; t < k; ++t) bits.set((j * k + t) % n, j, true);
  return BinaryScheme(std::move(bits));
}

BinaryScheme circulant_matrix(std::size_t n, std::size_t k) {
  check_params(n, k);
  BitMatrix bits(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) bits.set(i, (i + t) % n, true);
  return BinaryScheme(std::move(bits));
}

BinaryScheme block_compose(std::size_t n, std::size_t k, std::size_t r,
                           const std::vector<BinaryScheme>& cells) {
  check_params(n, k);
  if (r == 0) throw Error(ErrorCode::invalid_argument, "r must be at least 1");
  const std::size_t d = std::gcd(n, k);
  const std::size_t cell_n = n / d;
  const std::size_t cell_k = k / d;
  if (cells.size() != d * r)
    throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(d) + " x " +
                                                 std::to_string(r) + " cells, got " +
                                                 std::to_string(cells.size()));
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const BinaryScheme& cell = cells[c];
    if (cell.rows() != cell_n || cell.cols() != cell_n)
      throw Error(ErrorCode::invalid_argument, "cell " + std::to_string(c) + " must be " +
                                                   std::to_string(cell_n) + " x " +
                                                   std::to_string(cell_n));
    const Verdict v = decide_optimal(cell);
    if (!v.optimal || v.k != cell_k)
      throw Error(ErrorCode::not_optimal, "cell " + std::to_string(c) + " is not an optimal (" +
                                              std::to_string(cell_n) + ", " +
                                              std::to_string(cell_k) + ") scheme");
  }
  BitMatrix bits(n, r * cell_n);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < r; ++q) {
      const BinaryScheme& cell = cells[p * r + q];
      for (std::size_t i = 0; i < cell_n; ++i)
        for (std::size_t j = 0; j < cell_n; ++j)
          bits.set(p * cell_n + i, q * cell_n + j, cell.at(i, j));
    }
  return BinaryScheme(std::move(bits));
}

BinaryScheme block_compose_cyclic(std::size_t n, std::size_t k, std::size_t r) {
  check_params(n, k);
  if (r == 0) throw Error(ErrorCode::invalid_argument, "r must be at least 1");
  const std::size_t d = std::gcd(n, k);
  const std::vector<BinaryScheme> cells(d * r, cyclic_matrix(n / d, k / d));
  return block_compose(n, k, r, cells);
}

BinaryScheme generate(const SchemeFamily& family) {
  switch (family.kind) {
    case SchemeKind::cyclic: return cyclic_matrix(family.n, family.k);
    case SchemeKind::transpose_cyclic: return transpose_cyclic_matrix(family.n, family.k);
    case SchemeKind::circulant: return circulant_matrix(family.n, family.k);
    case SchemeKind::block: return block_compose_cyclic(family.n, family.k, family.r);
  }
  throw Error(ErrorCode::invalid_argument, "unknown scheme kind");
}

std::optional<SchemeKind> parse_scheme_kind(std::string_view name) {
  if (name == "cyclic") return SchemeKind::cyclic;
  if (name == "transpose-cyclic") return SchemeKind::transpose_cyclic;
  if (name == "circulant") return SchemeKind::circulant;
  if (name == "block") return SchemeKind::block;
  return std::nullopt;
}

std::string_view to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::cyclic: return "cyclic";
    case SchemeKind::transpose_cyclic: return "transpose-cyclic";
    case SchemeKind::circulant: return "circulant";
    case SchemeKind::block: return "block";
  }
  return "unknown";
}

StageCountCheck valid_stage_counts(std::size_t n, std::size_t k, std::size_t m) {
  check_params(n, k);
  const std::size_t d = std::gcd(n, k);
  const std::size_t cell_n = n / d;
  StageCountCheck out;
  if (m == 0 || m % cell_n != 0) return out;
  out.valid = true;
  out.r = m / cell_n;
  out.l = out.r * (k / d);
  return out;
}

std::size_t cyclic_runs(const BinaryScheme& m, std::size_t row) {
  std::size_t runs = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const bool prev = m.at(row, (j + m.cols() - 1) % m.cols());
    if (!prev && m.at(row, j)) ++runs;
  }
  return runs;
}

namespace {

std::vector<std::vector<bool>> sorted_rows(const BinaryScheme& m) {
  std::vector<std::vector<bool>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

bool equal_up_to_row_permutation(const BinaryScheme& a, const BinaryScheme& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return sorted_rows(a) == sorted_rows(b);
}

bool is_single_ride_cyclic(const BinaryScheme& m) {
  if (!m.is_square()) throw Error(ErrorCode::not_square, "single-ride test needs a square scheme");
  const UniformityReport u = uniformity(m);
  if (!u.is_uniform) throw Error(ErrorCode::not_uniform, "single-ride test needs a uniform scheme");
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (cyclic_runs(m, i) > 1) return false;
  return equal_up_to_row_permutation(m, cyclic_matrix(m.rows(), u.k));
}

}  // namespace bikehiker
