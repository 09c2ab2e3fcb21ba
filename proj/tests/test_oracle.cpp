#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "bikehiker/error.hpp"
#include "bikehiker/oracle.hpp"
#include "bikehiker/schemes.hpp"
#include "support.hpp"

namespace bikehiker {
namespace {

using testing::load_fixture;

std::size_t brute_force_count(std::size_t n, std::size_t k) {
  std::size_t count = 0;
  for (std::uint32_t bits = 0; bits < (1u << (n * n)); ++bits) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      std::size_t row = 0, col = 0;
      for (std::size_t j = 0; j < n; ++j) {
        row += (bits >> (i * n + j)) & 1u;
        col += (bits >> (j * n + i)) & 1u;
      }
      ok = row == k && col == k;
    }
    count += ok;
  }
  return count;
}

TEST(Enumerate, MatchesBruteForceUpToFour) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t k = 0; k <= n; ++k) ASSERT_EQ(for_each_uniform(n, k, {}), brute_force_count(n, k)) << n << "," << k;
  EXPECT_EQ(for_each_uniform(4, 2, {}), 90u);
  EXPECT_EQ(for_each_uniform(3, 1, {}), 6u);
}

TEST(Enumerate, KnownLargerCounts) {
  EXPECT_EQ(for_each_uniform(5, 2, {}), 2040u);
  EXPECT_EQ(for_each_uniform(5, 3, {}), 2040u);
  EXPECT_EQ(for_each_uniform(6, 2, {}), 67950u);
  EXPECT_EQ(for_each_uniform(6, 3, {}), 297200u);
  EXPECT_EQ(for_each_uniform(7, 1, {}), 5040u);
}

TEST(Enumerate, VisitsDistinctUniformMatrices) {
  for (std::size_t k = 0; k <= 5; ++k) {
    std::set<std::string> seen;
    for_each_uniform(5, k, [&](const BinaryScheme& m) {
      const auto u = uniformity(m);
      ASSERT_TRUE(u.is_uniform);
      ASSERT_EQ(u.k, k);
      ASSERT_TRUE(seen.insert(format_scheme(m)).second);
    });
  }
}

TEST(Enumerate, LexicographicOrder) {
  std::vector<BinaryScheme> all;
  for_each_uniform(3, 1, [&](const BinaryScheme& m) { all.push_back(m); });
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all.front(), cyclic_matrix(3, 1));
  EXPECT_EQ(all.back(), reverse_rows(cyclic_matrix(3, 1)));
}

TEST(Enumerate, Guard) {
  try {
    for_each_uniform(8, 1, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::guard_exceeded);
  }
  EXPECT_EQ(for_each_uniform(9, 9, {}, true), 1u);
  EXPECT_THROW(for_each_uniform(3, 4, {}), Error);
  EXPECT_THROW(for_each_uniform(0, 0, {}), Error);
}

TEST(Enumerate, ReportSixThree) {
  EnumerationOptions options;
  options.max_examples = 5;
  bool saw_fixture = false;
  const BinaryScheme m2 = load_fixture("m2.mat");
  const EnumerationReport r =
      enumerate_uniform(6, 3, [&](const BinaryScheme& m) { saw_fixture = saw_fixture || m == m2; }, options);
  EXPECT_EQ(r.total_uniform, 297200u);
  EXPECT_EQ(r.optimal_count + r.nonoptimal_count, r.total_uniform);
  EXPECT_GT(r.nonoptimal_count, 0u);
  EXPECT_EQ(r.nonoptimal_examples.size(), 5u);
  for (const BinaryScheme& ex : r.nonoptimal_examples) {
    EXPECT_FALSE(decide_optimal(ex).optimal);
    EXPECT_EQ(uniformity(ex).k, 3u);
  }
  EXPECT_TRUE(saw_fixture);
  EXPECT_FALSE(r.cross_validated);
}

TEST(Enumerate, SixOnlyFailsAtThree) {
  for (std::size_t k = 0; k <= 6; ++k) {
    if (k == 3) continue;
    EXPECT_EQ(enumerate_uniform(6, k).nonoptimal_count, 0u) << k;
  }
}

TEST(CrossValidate, SmallCases) {
  EXPECT_TRUE(cross_validate(2, 1).empty());
  const EnumerationReport r = enumerate_uniform(5, 2, {}, {true, 0, false, {}});
  EXPECT_TRUE(r.mismatches.empty());
  EXPECT_EQ(r.nonoptimal_count, 0u);
  EXPECT_TRUE(r.cross_validated);
  EXPECT_TRUE(cross_validate(6, 3).empty());
  EXPECT_TRUE(cross_validate(6, 3, {Rational(1), Rational(10)}).empty());
}

TEST(Determinant, Examples) {
  EXPECT_EQ(abs(determinant_exact(cyclic_matrix(5, 2))), 2);
  EXPECT_EQ(determinant_exact(cyclic_matrix(6, 3)), 0);
  for (std::size_t n = 1; n <= 9; ++n) EXPECT_EQ(abs(determinant_exact(cyclic_matrix(n, 1))), 1);
  EXPECT_EQ(determinant_exact(BinaryScheme::from_rows({{0, 1}, {1, 0}})), -1);
  try {
    determinant_exact(block_compose_cyclic(4, 2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_square);
  }
}

TEST(Determinant, AgreesWithPermutationExpansion) {
  std::mt19937_64 rng(131);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const BinaryScheme m = testing::random_binary(rng, n, n);
    ASSERT_EQ(determinant_exact(m), testing::leibniz_determinant(m)) << format_scheme(m);
  }
}

TEST(Determinant, CyclicMagnitude) {
  for (std::size_t n = 2; n <= 40; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const BigInt expected = std::gcd(n, k) == 1 ? BigInt(k) : BigInt(0);
      ASSERT_EQ(abs(determinant_exact(cyclic_matrix(n, k))), expected) << n << "," << k;
    }
}

}  // namespace
}  // namespace bikehiker
