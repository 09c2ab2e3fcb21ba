#pragma once

// Test-side helpers: fixtures, random schemes and brute-force oracles that do
// not share code with the library's decision procedures.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bikehiker/optimality.hpp"
#include "bikehiker/scheme.hpp"
#include "bikehiker/schemes.hpp"

namespace bikehiker::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(BIKEHIKER_FIXTURE_DIR) + "/" + name;
}

inline BinaryScheme load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scheme(buffer.str());
}

using Grid = std::vector<std::vector<int>>;

inline Grid grid_of(const BinaryScheme& m) {
  Grid g(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m.at(i, j) ? 1 : 0;
  return g;
}

inline BinaryScheme random_binary(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::bernoulli_distribution coin(0.5);
  Grid g(rows, std::vector<int>(cols));
  for (auto& row : g)
    for (int& v : row) v = coin(rng) ? 1 : 0;
  return BinaryScheme::from_rows(g);
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// A k-uniform n x n matrix: cyclic(n, k) scrambled by row and column
// permutations and many 2 x 2 switches, which preserve all line sums.
inline BinaryScheme random_uniform(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  Grid g = grid_of(cyclic_matrix(n, k));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (int step = 0; step < static_cast<int>(20 * n * n); ++step) {
    const std::size_t r1 = pick(rng), r2 = pick(rng), c1 = pick(rng), c2 = pick(rng);
    if (g[r1][c1] == 1 && g[r2][c2] == 1 && g[r1][c2] == 0 && g[r2][c1] == 0) {
      g[r1][c1] = g[r2][c2] = 0;
      g[r1][c2] = g[r2][c1] = 1;
    }
  }
  const auto rp = random_permutation(rng, n);
  const auto cp = random_permutation(rng, n);
  Grid out(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = g[rp[i]][cp[j]];
  return BinaryScheme::from_rows(out);
}

// Optimal schemes from the generators followed by random optimality-preserving
// symmetries (row permutation, stage reversal, binary dual).
inline BinaryScheme random_optimal(std::mt19937_64& rng, std::size_t max_n = 14) {
  std::uniform_int_distribution<std::size_t> size(2, max_n);
  const std::size_t n = size(rng);
  std::uniform_int_distribution<std::size_t> bikes(0, n);
  const std::size_t k = bikes(rng);
  BinaryScheme m = rng() % 2 ? cyclic_matrix(n, k) : transpose_cyclic_matrix(n, k);
  for (int step = 0; step < 4; ++step) {
    switch (rng() % 3) {
      case 0: {
        const auto pi = random_permutation(rng, n);
        m = permute_rows(m, pi);
        break;
      }
      case 1: m = reverse_stages(m); break;
      default: m = binary_dual(m); break;
    }
  }
  return m;
}

// Grammar S -> "" | a S b S.
inline bool dyck_by_grammar(const std::string& w) {
  std::function<bool(std::size_t, std::size_t)> derives = [&](std::size_t lo, std::size_t hi) -> bool {
    if (lo == hi) return true;
    if (w[lo] != 'a') return false;
    for (std::size_t mid = lo + 1; mid < hi; ++mid)
      if (w[mid] == 'b' && derives(lo + 1, mid) && derives(mid + 1, hi)) return true;
    return false;
  };
  return derives(0, w.size());
}

inline std::size_t prefix(const BinaryScheme& m, std::size_t row, std::size_t through_col) {
  std::size_t s = 0;
  for (std::size_t j = 0; j <= through_col; ++j) s += m.at(row, j) ? 1 : 0;
  return s;
}

// At boundary b: does some bijection from droppers to pickers give every
// picker a bike from a dropper who has cycled at least as much?
inline bool boundary_has_feasible_assignment(const BinaryScheme& m, std::size_t b) {
  std::vector<std::size_t> droppers, pickers;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.at(i, b) && !m.at(i, b + 1)) droppers.push_back(i);
    if (!m.at(i, b) && m.at(i, b + 1)) pickers.push_back(i);
  }
  if (droppers.size() != pickers.size()) return false;
  std::sort(pickers.begin(), pickers.end());
  do {
    bool ok = true;
    for (std::size_t r = 0; r < droppers.size() && ok; ++r)
      ok = prefix(m, pickers[r], b) <= prefix(m, droppers[r], b);
    if (ok) return true;
  } while (std::next_permutation(pickers.begin(), pickers.end()));
  return false;
}

// Optimality straight from the existence of assignment mappings.
inline bool optimal_by_assignment(const BinaryScheme& m) {
  for (std::size_t j = 1; j < m.cols(); ++j)
    if (m.col_sum(j) != m.col_sum(0)) return false;
  for (std::size_t b = 0; b + 1 < m.cols(); ++b)
    if (!boundary_has_feasible_assignment(m, b)) return false;
  return true;
}

inline std::int64_t leibniz_determinant(const BinaryScheme& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::int64_t total = 0;
  do {
    std::int64_t term = 1;
    for (std::size_t i = 0; i < n && term; ++i) term = m.at(i, p[i]) ? term : 0;
    if (!term) continue;
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) inversions += p[a] > p[b];
    total += inversions % 2 ? -1 : 1;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace bikehiker::testing
