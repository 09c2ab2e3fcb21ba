#pragma once

// Ground truth for small sizes: exhaustive enumeration of uniform square
// schemes, Dyck-versus-simulation cross checks, exact determinants and the
// structure of cyclic schemes.

#include <cstddef>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bikehiker/scheme.hpp"
#include "bikehiker/simulate.hpp"

namespace bikehiker {

inline constexpr std::size_t kEnumerationGuard = 7;

struct EnumerationOptions {
  bool cross_validate = false;   // also simulate every matrix
  std::size_t max_examples = 3;  // non-optimal matrices kept in the report
  bool force = false;            // allow n above kEnumerationGuard
  SpeedModel speeds;
};

struct Mismatch {
  BinaryScheme scheme;
  bool dyck_optimal = false;
  bool stall_free = false;
};

struct EnumerationReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t total_uniform = 0;
  std::size_t optimal_count = 0;
  std::size_t nonoptimal_count = 0;
  bool cross_validated = false;
  std::vector<Mismatch> mismatches;
  std::vector<BinaryScheme> nonoptimal_examples;  // first ones in enumeration order
};

using UniformVisitor = std::function<void(const BinaryScheme&)>;

// Visits every n x n binary matrix with all line sums k exactly once.
// Columns are filled left to right, each column's support chosen in
// lexicographic order. Throws Error(guard_exceeded) for n > kEnumerationGuard
// unless forced.
std::size_t for_each_uniform(std::size_t n, std::size_t k, const UniformVisitor& visit,
                             bool force = false);

// Runs decide_optimal on every matrix (and the greedy simulation when
// cross-validating) and tallies the results; `visit` may be empty.
EnumerationReport enumerate_uniform(std::size_t n, std::size_t k, const UniformVisitor& visit = {},
                                    const EnumerationOptions& options = {});

std::vector<Mismatch> cross_validate(std::size_t n, std::size_t k, const SpeedModel& speeds = {});

using BigInt = boost::multiprecision::cpp_int;

// Fraction-free elimination. Throws Error(not_square).
BigInt determinant_exact(const BinaryScheme& m);

struct CyclicStructureReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;         // gcd(n, k)
  std::size_t rotation = 0;  // r with k r = d (mod n)
  bool rows_by_residue = false;    // rows equal iff congruent mod n/d
  bool columns_by_block = false;   // columns equal iff in the same block of d
  bool quotient_is_cyclic = false; // constant d x d cells forming cyclic(n/d, k/d)
  bool columns_rotate = false;     // column j + d is column j shifted down by r

  bool ok() const noexcept {
    return rows_by_residue && columns_by_block && quotient_is_cyclic && columns_rotate;
  }
};

// Requires 1 <= k <= n.
CyclicStructureReport verify_cyclic_structure(std::size_t n, std::size_t k);

}  // namespace bikehiker
