#include <gtest/gtest.h>

#include <random>

#include "bikehiker/error.hpp"
#include "bikehiker/scheme.hpp"
#include "bikehiker/schemes.hpp"
#include "support.hpp"

namespace bikehiker {
namespace {

using testing::load_fixture;

TEST(Parse, Identity) {
  const BinaryScheme m = parse_scheme("2 2\n1 0\n0 1");
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_TRUE(m.at(0, 0));
  EXPECT_FALSE(m.at(0, 1));
  EXPECT_TRUE(m.at(1, 1));
}

TEST(Parse, CommentsBlankLinesAndCrlf) {
  const BinaryScheme m = parse_scheme("# header\r\n\r\n1 3\r\n# mid\r\n1 0 1\r\n");
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(m.row_sum(0), 2u);
}

TEST(Parse, FixtureHasUniformSumsThree) {
  const BinaryScheme m = load_fixture("m1.mat");
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(m.row_sum(i), 3u);
    EXPECT_EQ(m.col_sum(i), 3u);
  }
}

void expect_parse_error(const std::string& text, std::size_t line, const std::string& fragment) {
  try {
    parse_scheme(text);
    FAIL() << "accepted: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
    EXPECT_EQ(e.code(), ErrorCode::parse);
  }
}

TEST(Parse, Errors) {
  expect_parse_error("1 2\n1 2", 2, "not binary");
  expect_parse_error("x 2\n1 0", 1, "");
  expect_parse_error("2 2\n1 0\n1", 3, "");
  expect_parse_error("2 2\n1 0 1\n1 0", 2, "");
  expect_parse_error("2 2\n1 0", 0, "");
  expect_parse_error("1 1\n1\n0", 3, "");
  expect_parse_error("0 3", 1, "");
}

TEST(Format, RoundTrip) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const BinaryScheme m = testing::random_binary(rng, 1 + rng() % 9, 1 + rng() % 9);
    EXPECT_EQ(parse_scheme(format_scheme(m)), m);
  }
}

TEST(Uniformity, Examples) {
  const auto r1 = uniformity(load_fixture("m1.mat"));
  EXPECT_TRUE(r1.is_uniform);
  EXPECT_EQ(r1.k, 3u);
  EXPECT_EQ(r1.l, 3u);
  const auto ones = uniformity(cyclic_matrix(4, 4));
  EXPECT_TRUE(ones.is_uniform);
  EXPECT_EQ(ones.k, 4u);
  EXPECT_FALSE(uniformity(BinaryScheme::from_rows({{1, 1}, {0, 0}})).is_uniform);
}

TEST(Uniformity, RectangularDoubleCounting) {
  const BinaryScheme m = block_compose_cyclic(6, 4, 2);
  const auto r = uniformity(m);
  ASSERT_TRUE(r.is_uniform);
  EXPECT_EQ(r.l * m.rows(), r.k * m.cols());
}

TEST(PrefixSums, Rows) {
  const PrefixSums s = prefix_sums(BinaryScheme::from_rows({{1, 1, 0, 1}, {0, 0, 0, 0}}));
  const std::vector<std::size_t> row0{0, 1, 2, 2, 3};
  for (std::size_t j = 0; j <= 4; ++j) {
    EXPECT_EQ(s(0, j), row0[j]);
    EXPECT_EQ(s(1, j), 0u);
  }
  const PrefixSums s2 = prefix_sums(load_fixture("m2.mat"));
  const std::vector<std::size_t> t4{0, 0, 0, 1, 1, 2, 3};
  for (std::size_t j = 0; j <= 6; ++j) EXPECT_EQ(s2(3, j), t4[j]);
}

TEST(PrefixSums, DualIsComplement) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const BinaryScheme m = testing::random_binary(rng, 5, 7);
    const PrefixSums s = prefix_sums(m);
    const PrefixSums d = prefix_sums(binary_dual(m));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j <= 7; ++j) EXPECT_EQ(d(i, j), j - s(i, j));
  }
}

TEST(StageCut, PartitionsFromFixtures) {
  const StageCut c2 = stage_cut(load_fixture("m2.mat"), 2);
  EXPECT_EQ(c2.x10, (std::vector<std::size_t>{3, 4, 5}));
  EXPECT_EQ(c2.x01, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(c2.x11.empty());
  EXPECT_TRUE(c2.x00.empty());
  const StageCut c1 = stage_cut(load_fixture("m1.mat"), 2);
  EXPECT_EQ(c1.x10, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(c1.x01, (std::vector<std::size_t>{3, 4, 5}));
  const StageCut all = stage_cut(cyclic_matrix(5, 5), 1);
  EXPECT_EQ(all.x11.size(), 5u);
  EXPECT_THROW(stage_cut(cyclic_matrix(5, 5), 4), Error);
}

TEST(StageCut, CoversRowsAndBalancesOnUniform) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const BinaryScheme m = testing::random_uniform(rng, 7, 1 + rng() % 6);
    for (std::size_t b = 0; b + 1 < 7; ++b) {
      const StageCut c = stage_cut(m, b);
      EXPECT_EQ(c.x11.size() + c.x10.size() + c.x01.size() + c.x00.size(), 7u);
      EXPECT_EQ(c.x10.size(), c.x01.size());
    }
  }
}

TEST(Transforms, PermuteRows) {
  const BinaryScheme id = BinaryScheme::from_rows({{1, 0}, {0, 1}});
  const std::vector<std::size_t> same{0, 1};
  const std::vector<std::size_t> swap{1, 0};
  EXPECT_EQ(permute_rows(id, same), id);
  EXPECT_EQ(permute_rows(id, swap), BinaryScheme::from_rows({{0, 1}, {1, 0}}));
  const std::vector<std::size_t> bad{0, 0};
  EXPECT_THROW(permute_rows(id, bad), Error);
  std::mt19937_64 rng(5);
  const BinaryScheme m1 = load_fixture("m1.mat");
  const auto r = uniformity(permute_rows(m1, testing::random_permutation(rng, 6)));
  EXPECT_TRUE(r.is_uniform);
  EXPECT_EQ(r.k, 3u);
}

TEST(Transforms, Involutions) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const BinaryScheme m = testing::random_binary(rng, 1 + rng() % 8, 1 + rng() % 8);
    EXPECT_EQ(reverse_stages(reverse_stages(m)), m);
    EXPECT_EQ(reverse_rows(reverse_rows(m)), m);
    EXPECT_EQ(binary_dual(binary_dual(m)), m);
    EXPECT_EQ(transpose(transpose(m)), m);
    EXPECT_EQ(binary_dual(transpose(m)), transpose(binary_dual(m)));
  }
  EXPECT_EQ(reverse_stages(BinaryScheme::from_rows({{1, 1, 0}})), BinaryScheme::from_rows({{0, 1, 1}}));
  EXPECT_EQ(binary_dual(cyclic_matrix(4, 0)), cyclic_matrix(4, 4));
  EXPECT_EQ(transpose(cyclic_matrix(5, 1)), cyclic_matrix(5, 1));
}

TEST(Transforms, DualOfFixtureIsUniform) {
  const auto r = uniformity(binary_dual(load_fixture("m1.mat")));
  EXPECT_TRUE(r.is_uniform);
  EXPECT_EQ(r.k, 3u);
}

TEST(Transforms, UniformityPreserved) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 8;
    const std::size_t k = rng() % (n + 1);
    const BinaryScheme m = testing::random_uniform(rng, n, k);
    for (const BinaryScheme& x : {permute_rows(m, testing::random_permutation(rng, n)), reverse_stages(m),
                                  reverse_rows(m), transpose(m)}) {
      const auto r = uniformity(x);
      EXPECT_TRUE(r.is_uniform);
      EXPECT_EQ(r.k, k);
    }
    const auto d = uniformity(binary_dual(m));
    EXPECT_TRUE(d.is_uniform);
    EXPECT_EQ(d.k, n - k);
  }
}

TEST(Transforms, CyclicReversalIdentities) {
  for (std::size_t n = 1; n <= 30; ++n)
    for (std::size_t k = 1; k <= n; ++k) {
      const BinaryScheme m = cyclic_matrix(n, k);
      const BinaryScheme mt = transpose(m);
      ASSERT_EQ(reverse_stages(m), reverse_rows(m)) << n << "," << k;
      ASSERT_EQ(reverse_rows(reverse_stages(m)), m);
      ASSERT_EQ(reverse_stages(reverse_rows(m)), m);
      ASSERT_EQ(reverse_rows(mt), transpose(reverse_stages(m)));
      ASSERT_EQ(reverse_stages(mt), transpose(reverse_rows(m)));
      ASSERT_EQ(reverse_rows(reverse_stages(mt)), mt);
    }
}

TEST(Transforms, TransposeOfCyclicIsTransposeCyclic) {
  EXPECT_EQ(transpose(cyclic_matrix(11, 7)), load_fixture("t117.mat"));
  EXPECT_EQ(transpose_cyclic_matrix(6, 3), transpose(cyclic_matrix(6, 3)));
}

TEST(Transforms, SwapColumns) {
  const BinaryScheme m2 = swap_columns(load_fixture("m1.mat"), 2, 3);
  EXPECT_EQ(m2, load_fixture("m2.mat"));
  EXPECT_THROW(swap_columns(m2, 0, 6), Error);
}

TEST(BinarySchemeTest, RejectsEmpty) {
  EXPECT_THROW(BinaryScheme(BitMatrix(0, 3)), Error);
  EXPECT_THROW(BinaryScheme::from_rows({{1, 2}}), Error);
  EXPECT_THROW(BinaryScheme::from_rows({{1, 0}, {1}}), Error);
}

TEST(BitMatrixTest, WideRowsAndSuffixSwap) {
  BitMatrix b(2, 150);
  for (std::size_t j = 0; j < 150; j += 3) b.set(0, j, true);
  b.swap_row_suffix(0, 1, 70);
  for (std::size_t j = 0; j < 150; ++j) {
    EXPECT_EQ(b.get(0, j), j < 70 && j % 3 == 0);
    EXPECT_EQ(b.get(1, j), j >= 70 && j % 3 == 0);
  }
  EXPECT_EQ(b.row_popcount(0) + b.row_popcount(1), 50u);
}

}  // namespace
}  // namespace bikehiker
