#include <gtest/gtest.h>

#include <chartwo/cones.hpp>
#include <chartwo/jordan_type.hpp>

#include "oracles.hpp"

using namespace chartwo;

TEST(JordanType, ParseCanonical) {
  const auto t = parse_jordan_type("8^2 5 1^3");
  ASSERT_EQ(t.blocks().size(), 3u);
  EXPECT_EQ(t.blocks()[0], (Block{8, 2}));
  EXPECT_EQ(t.blocks()[1], (Block{5, 1}));
  EXPECT_EQ(t.blocks()[2], (Block{1, 3}));
  EXPECT_EQ(t.total_dim(), 24u);
  EXPECT_EQ(t.block_count(), 6u);
}

TEST(JordanType, EmptyIsZero) {
  const auto t = parse_jordan_type("0");
  EXPECT_TRUE(t.empty());
  EXPECT_EQ(t.total_dim(), 0u);
  EXPECT_EQ(format_jordan_type(JordanType{}), "0");
}

TEST(JordanType, RoundTrip) {
  EXPECT_EQ(format_jordan_type(parse_jordan_type("7^3")), "7^3");
  EXPECT_EQ(format_jordan_type(parse_jordan_type("  16 8^3   1^5 ")), "16 8^3 1^5");
  // non-canonical input is normalised
  EXPECT_EQ(format_jordan_type(parse_jordan_type("1 4 1 4^2")), "4^3 1^2");
}

TEST(JordanType, ParseErrors) {
  for (const char* bad : {"", "   ", "0 3", "3^0", "x", "3^", "^2", "2^2^2", "-1", "4,2", "3.5"})
    EXPECT_THROW(parse_jordan_type(bad), std::invalid_argument) << "'" << bad << "'";
}

TEST(JordanType, FormatRoundTripProperty) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    JordanType t;
    const int n = static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) t.add(rng() % 40 + 1, rng() % 5 + 1);
    EXPECT_EQ(parse_jordan_type(format_jordan_type(t)), t);
    for (std::size_t i = 1; i < t.blocks().size(); ++i) EXPECT_GT(t.blocks()[i - 1].size, t.blocks()[i].size);
  }
}

TEST(JordanType, ZeroSizesAndMultiplicitiesDropped) {
  JordanType t;
  t.add(0, 4).add(3, 0).add(2, 1);
  EXPECT_EQ(t, (JordanType{{2, 1}}));
  EXPECT_EQ(parse_jordan_type("3 2 1").decremented(), parse_jordan_type("2 1"));
}

TEST(Cones, KnownExamples) {
  EXPECT_EQ(cones_expansion(3).betas, (std::vector<unsigned>{2, 0}));
  EXPECT_EQ(cones_expansion(4).betas, (std::vector<unsigned>{2}));
  EXPECT_EQ(cones_expansion(5).betas, (std::vector<unsigned>{3, 2, 0}));
  EXPECT_EQ(cones_expansion(6).betas, (std::vector<unsigned>{3, 1}));
  EXPECT_EQ(cones_expansion(7).betas, (std::vector<unsigned>{3, 0}));
}

TEST(Cones, NineByExhaustion) {
  // Exhaustive search over exponents <= 6 finds 9 = 16 - 8 + 1 with three terms.
  const auto best = ref::minimal_alternating_terms(6, 64);
  EXPECT_EQ(best.at(9), 3u);
  EXPECT_EQ(cones_expansion(9).betas, (std::vector<unsigned>{4, 3, 0}));
}

TEST(Cones, SuffixValues) {
  EXPECT_EQ(suffix_values(cones_expansion(6)), (std::vector<count_t>{6, 2, 0}));
  EXPECT_EQ(suffix_values(cones_expansion(4)), (std::vector<count_t>{4, 0}));
  EXPECT_EQ(suffix_values(cones_expansion(9)), (std::vector<count_t>{9, 7, 1, 0}));
}

TEST(Cones, Errors) { EXPECT_THROW(cones_expansion(0), std::invalid_argument); }

TEST(Cones, MinimalityUpTo1024) {
  const auto best = ref::minimal_alternating_terms(11, 1024);
  for (count_t n = 1; n <= 1024; ++n) EXPECT_EQ(cones_expansion(n).terms(), best.at(static_cast<std::int64_t>(n))) << n;
}

TEST(Cones, StructuralProperties) {
  for (count_t n = 1; n <= (1u << 16); ++n) {
    const auto e = cones_expansion(n);
    const auto& b = e.betas;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) {
        ASSERT_GT(b[i - 1], b[i]);
      }
      sum += (i % 2 == 0 ? 1 : -1) * (std::int64_t{1} << b[i]);
    }
    ASSERT_EQ(sum, static_cast<std::int64_t>(n));
    if (b.size() > 1) {
      ASSERT_GT(b[b.size() - 2], b.back() + 1) << n;
    }
    ASSERT_EQ(e.suffix, suffix_values(e));
    ASSERT_EQ(e.suffix.front(), n);
    ASSERT_EQ(e.suffix.back(), 0u);
    for (std::size_t k = 1; k < e.suffix.size(); ++k) ASSERT_GT(e.suffix[k - 1], e.suffix[k]);
    // n^2 = sum 2^b_k (n_k - n_{k+1})
    count_t sq = 0;
    for (std::size_t k = 0; k < b.size(); ++k) sq += (count_t{1} << b[k]) * (e.suffix[k] - e.suffix[k + 1]);
    ASSERT_EQ(sq, n * n);
  }
}

TEST(Cones, BandLookup) {
  const auto e = cones_expansion(3);  // n_1 = 3, n_2 = 1, n_3 = 0
  EXPECT_EQ(e.band_of(1), 0u);
  EXPECT_EQ(e.band_of(2), 0u);
  EXPECT_EQ(e.band_of(3), 1u);
  EXPECT_THROW(e.band_of(0), std::out_of_range);
  EXPECT_THROW(e.band_of(4), std::out_of_range);
}
