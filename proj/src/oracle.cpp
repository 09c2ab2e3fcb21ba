#include "bikehiker/oracle.hpp"

#include <numeric>
#include <string>

#include "bikehiker/error.hpp"
#include "bikehiker/optimality.hpp"
#include "bikehiker/schemes.hpp"

namespace bikehiker {

namespace {

class UniformEnumerator {
 public:
  UniformEnumerator(std::size_t n, std::size_t k, const UniformVisitor& visit)
      : n_(n), k_(k), visit_(visit), work_(n, n), remaining_(n, k) {}

  std::size_t run() {
    column(0);
    return count_;
  }

 private:
  void column(std::size_t j) {
    if (j == n_) {
      ++count_;
      if (visit_) visit_(BinaryScheme(work_));
      return;
    }
    const std::size_t left = n_ - j;
    std::size_t forced = 0;
    std::size_t open = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (remaining_[i] > left) return;
      if (remaining_[i] == left) ++forced;
      if (remaining_[i] > 0) ++open;
    }
    if (forced > k_ || open < k_) return;
    choose(j, 0, k_);
  }

  // Picks `need` more rows from [row, n) for column j, lexicographically.
  void choose(std::size_t j, std::size_t row, std::size_t need) {
    if (need == 0) {
      for (std::size_t i = row; i < n_; ++i)
        if (remaining_[i] == n_ - j) return;
      column(j + 1);
      return;
    }
    for (std::size_t i = row; i + need <= n_; ++i) {
      if (remaining_[i] > 0) {
        work_.set(i, j, true);
        --remaining_[i];
        choose(j, i + 1, need - 1);
        ++remaining_[i];
        work_.set(i, j, false);
      }
      if (remaining_[i] == n_ - j) return;  // skipping a forced row
    }
  }

  std::size_t n_;
  std::size_t k_;
  const UniformVisitor& visit_;
  BitMatrix work_;
  std::vector<std::size_t> remaining_;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t for_each_uniform(std::size_t n, std::size_t k, const UniformVisitor& visit, bool force) {
  if (n == 0 || k > n) throw Error(ErrorCode::invalid_argument, "enumeration needs 0 <= k <= n and n >= 1");
  if (n > kEnumerationGuard && !force)
    throw Error(ErrorCode::guard_exceeded, "exhaustive enumeration is limited to n <= " +
                                               std::to_string(kEnumerationGuard) + " without force");
  return UniformEnumerator(n, k, visit).run();
}

EnumerationReport enumerate_uniform(std::size_t n, std::size_t k, const UniformVisitor& visit,
                                    const EnumerationOptions& options) {
  validate(options.speeds);
  EnumerationReport report;
  report.n = n;
  report.k = k;
  report.cross_validated = options.cross_validate;
  report.total_uniform = for_each_uniform(
      n, k,
      [&](const BinaryScheme& m) {
        const bool optimal = decide_optimal(m).optimal;
        if (optimal) {
          ++report.optimal_count;
        } else {
          ++report.nonoptimal_count;
          if (report.nonoptimal_examples.size() < options.max_examples)
            report.nonoptimal_examples.push_back(m);
        }
        if (options.cross_validate) {
          const bool stall_free = is_executable_without_stall(m, options.speeds);
          if (stall_free != optimal) report.mismatches.push_back({m, optimal, stall_free});
        }
        if (visit) visit(m);
      },
      options.force);
  return report;
}

std::vector<Mismatch> cross_validate(std::size_t n, std::size_t k, const SpeedModel& speeds) {
  EnumerationOptions options;
  options.cross_validate = true;
  options.max_examples = 0;
  options.speeds = speeds;
  return enumerate_uniform(n, k, {}, options).mismatches;
}

BigInt determinant_exact(const BinaryScheme& m) {
  if (!m.is_square()) throw Error(ErrorCode::not_square, "determinant needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j) ? 1 : 0;

  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (a[p][p] == 0) {
      std::size_t swap_with = p + 1;
      while (swap_with < n && a[swap_with][p] == 0) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(a[p], a[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  return sign * a[n - 1][n - 1];
}

CyclicStructureReport verify_cyclic_structure(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) throw Error(ErrorCode::invalid_argument, "cyclic structure needs 1 <= k <= n");
  const BinaryScheme c = cyclic_matrix(n, k);
  CyclicStructureReport report;
  report.n = n;
  report.k = k;
  report.d = std::gcd(n, k);
  const std::size_t reduced_n = n / report.d;
  const std::size_t reduced_k = k / report.d;

  for (std::size_t r = 0; r < reduced_n; ++r)
    if ((reduced_k * r) % reduced_n == 1 % reduced_n) {
      report.rotation = r;
      break;
    }

  auto rows_equal = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j)
      if (c.at(a, j) != c.at(b, j)) return false;
    return true;
  };
  auto cols_equal = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i)
      if (c.at(i, a) != c.at(i, b)) return false;
    return true;
  };

  report.rows_by_residue = true;
  report.columns_by_block = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (rows_equal(a, b) != (a % reduced_n == b % reduced_n)) report.rows_by_residue = false;
      if (cols_equal(a, b) != (a / report.d == b / report.d)) report.columns_by_block = false;
    }

  // Row block q holds rows congruent to q mod n/d; column block p holds
  // columns dp .. dp + d - 1.
  const BinaryScheme quotient_target = cyclic_matrix(reduced_n, reduced_k);
  report.quotient_is_cyclic = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c.at(i, j) != quotient_target.at(i % reduced_n, j / report.d)) report.quotient_is_cyclic = false;

  report.columns_rotate = true;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (c.at((i + report.rotation) % n, (j + report.d) % n) != c.at(i, j)) report.columns_rotate = false;
  return report;
}

}  // namespace bikehiker
