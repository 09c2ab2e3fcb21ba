#pragma once

// Generators for the named optimal scheme families.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "bikehiker/scheme.hpp"

namespace bikehiker {

enum class SchemeKind { cyclic, transpose_cyclic, circulant, block };

struct SchemeFamily {
  SchemeKind kind = SchemeKind::cyclic;
  std::size_t n = 1;
  std::size_t k = 0;
  std::size_t r = 1;  // block repetitions, block kind only
};

// Traveller i rides stages ik, ik+1, ..., ik+k-1 (mod n).
BinaryScheme cyclic_matrix(std::size_t n, std::size_t k);
// Stage j is ridden by travellers jk, ..., jk+k-1 (mod n).
BinaryScheme transpose_cyclic_matrix(std::size_t n, std::size_t k);
// Traveller i rides stages i, i+1, ..., i+k-1 (mod n).
BinaryScheme circulant_matrix(std::size_t n, std::size_t k);

// Places a d x r array of optimal (n/d, k/d) schemes side by side, where
// d = gcd(n, k). `cells` is row-major. The result has n rows and r * n/d
// stages, row sums r * k/d and column sums k.
BinaryScheme block_compose(std::size_t n, std::size_t k, std::size_t r,
                           const std::vector<BinaryScheme>& cells);
// block_compose with every cell equal to cyclic_matrix(n/d, k/d).
BinaryScheme block_compose_cyclic(std::size_t n, std::size_t k, std::size_t r);

BinaryScheme generate(const SchemeFamily& family);
std::optional<SchemeKind> parse_scheme_kind(std::string_view name);
std::string_view to_string(SchemeKind kind);

struct StageCountCheck {
  bool valid = false;
  std::size_t r = 0;  // repetitions of the reduced (n', k') scheme
  std::size_t l = 0;  // stages cycled per traveller
};

// An optimal n x m scheme exists iff n / gcd(n, k) divides m.
StageCountCheck valid_stage_counts(std::size_t n, std::size_t k, std::size_t m);

// True iff every row's ones form a single cyclic interval and the scheme is a
// row permutation of cyclic_matrix(n, k). Requires a square uniform scheme.
bool is_single_ride_cyclic(const BinaryScheme& m);

// Number of 0 -> 1 transitions reading the row cyclically; 0 for constant rows.
std::size_t cyclic_runs(const BinaryScheme& m, std::size_t row);

// True iff a and b hold the same multiset of rows.
bool equal_up_to_row_permutation(const BinaryScheme& a, const BinaryScheme& b);

}  // namespace bikehiker
