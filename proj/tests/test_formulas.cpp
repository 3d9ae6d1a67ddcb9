#include <gtest/gtest.h>

#include <chartwo/formulas.hpp>
#include <chartwo/rep_oracle.hpp>

#include "oracles.hpp"
#include "small_table.hpp"

using namespace chartwo;

namespace {

JordanType jt(const char* s) { return parse_jordan_type(s); }

}  // namespace

TEST(QChoice, Values) {
  EXPECT_EQ(QChoice(1).q, 1u);
  EXPECT_EQ(QChoice(2).q, 2u);
  EXPECT_EQ(QChoice(3).q, 4u);
  EXPECT_EQ(QChoice(8).q, 8u);
  EXPECT_EQ(QChoice(9).q, 16u);
  EXPECT_EQ(QChoice(9).alpha, 4u);
  for (count_t n = 2; n < 5000; ++n) {
    const auto q = QChoice(n).q;
    EXPECT_TRUE(q / 2 < n && n <= q);
  }
}

TEST(Tensor, Examples) {
  EXPECT_EQ(tensor_decompose(3, 4), jt("4^3"));
  for (count_t n = 1; n <= 40; ++n) EXPECT_EQ(tensor_decompose(1, n), (JordanType{{n, 1}}));
  EXPECT_EQ(tensor_decompose(2, 3), jt("4 2"));
}

TEST(Tensor, TwoByThreeAgainstBothOracles) {
  // Frozen value above comes from these two matrices.
  EXPECT_EQ(oracle_tensor_jordan_type(OperatorKind::nilpotent, 2, 3), jt("4 2"));
  EXPECT_EQ(oracle_tensor_jordan_type(OperatorKind::unipotent, 2, 3), jt("4 2"));
}

TEST(Tensor, SymmetryDimensionAndLargestBlock) {
  for (count_t m = 1; m <= 150; ++m)
    for (count_t n = m; n <= 150; ++n) {
      const auto t = tensor_decompose(m, n);
      ASSERT_EQ(t, tensor_decompose(n, m));
      ASSERT_EQ(t.total_dim(), m * n);
      ASSERT_LE(t.largest(), QChoice(std::max(m, n)).q);
      ASSERT_EQ(t.block_count(), m);
    }
}

TEST(Tensor, Errors) {
  EXPECT_THROW(tensor_decompose(0, 3), std::invalid_argument);
  EXPECT_THROW(tensor_decompose(3, 0), std::invalid_argument);
  EXPECT_THROW(tensor_decompose(1, kFormulaLimit + 1), std::out_of_range);
}

TEST(Ext2Unipotent, Examples) {
  EXPECT_EQ(ext2_unipotent(7), jt("8^2 5"));
  EXPECT_TRUE(ext2_unipotent(1).empty());
  EXPECT_EQ(ext2_unipotent(9), jt("15 8^2 5"));
  EXPECT_THROW(ext2_unipotent(0), std::invalid_argument);
}

TEST(Sym2Unipotent, Examples) {
  EXPECT_EQ(sym2_unipotent(3), jt("4 2"));
  EXPECT_EQ(sym2_unipotent(8), jt("8^4 4"));
  EXPECT_EQ(sym2_unipotent(1), jt("1"));
  EXPECT_THROW(sym2_unipotent(0), std::invalid_argument);
}

TEST(Ext2Nilpotent, Examples) {
  EXPECT_EQ(ext2_nilpotent(6), jt("7^2 1"));
  EXPECT_EQ(ext2_nilpotent(8), jt("7^4"));
  EXPECT_EQ(ext2_nilpotent(9), jt("15 7^3"));
  EXPECT_THROW(ext2_nilpotent(0), std::invalid_argument);
}

TEST(Sym2Nilpotent, Examples) {
  EXPECT_EQ(sym2_nilpotent(5), jt("8 4 1^3"));
  EXPECT_EQ(sym2_nilpotent(6), jt("8^2 2 1^3"));
  EXPECT_EQ(sym2_nilpotent(1), jt("1"));
  EXPECT_THROW(sym2_nilpotent(0), std::invalid_argument);
}

TEST(NilpotentRecursions, Examples) {
  EXPECT_EQ(ext2_nilpotent_rec(6), jt("7^2 1"));
  EXPECT_EQ(sym2_nilpotent_rec(4), jt("4^2 1^2"));
  EXPECT_EQ(sym2_nilpotent_rec(1), jt("1"));
  EXPECT_TRUE(ext2_nilpotent_rec(1).empty());
  EXPECT_THROW(ext2_nilpotent_rec(0), std::invalid_argument);
  EXPECT_THROW(sym2_nilpotent_rec(0), std::invalid_argument);
}

TEST(Formulas, SmallTable) {
  for (const auto& row : ref::kSmallSquares) {
    EXPECT_EQ(ext2_unipotent(row.n), jt(row.ext2_unipotent)) << row.n;
    EXPECT_EQ(sym2_unipotent(row.n), jt(row.sym2_unipotent)) << row.n;
    EXPECT_EQ(ext2_nilpotent(row.n), jt(row.ext2_nilpotent)) << row.n;
    EXPECT_EQ(sym2_nilpotent(row.n), jt(row.sym2_nilpotent)) << row.n;
    EXPECT_EQ(ext2_nilpotent_rec(row.n), jt(row.ext2_nilpotent)) << row.n;
    EXPECT_EQ(sym2_nilpotent_rec(row.n), jt(row.sym2_nilpotent)) << row.n;
  }
}

TEST(Formulas, UnipotentAndNilpotentSquaresDiffer) {
  EXPECT_EQ(ext2_unipotent(4), jt("4 2"));
  EXPECT_EQ(ext2_nilpotent(4), jt("3^2"));
  EXPECT_EQ(sym2_unipotent(3), jt("4 2"));
  EXPECT_EQ(sym2_nilpotent(3), jt("4 1^2"));
}

TEST(Formulas, DimensionsAndLargestBlock) {
  for (count_t n = 1; n <= 2000; ++n) {
    const count_t q = QChoice(n).q;
    for (const auto& t : {ext2_unipotent(n), ext2_nilpotent(n), ext2_nilpotent_rec(n)}) {
      ASSERT_EQ(t.total_dim(), n * (n - 1) / 2) << n;
      ASSERT_LE(t.largest(), q);
    }
    for (const auto& t : {sym2_unipotent(n), sym2_nilpotent(n), sym2_nilpotent_rec(n)}) {
      ASSERT_EQ(t.total_dim(), n * (n + 1) / 2) << n;
      ASSERT_LE(t.largest(), q);
    }
  }
}

TEST(Formulas, ClosedFormsMatchRecursionsAndQuotient) {
  for (count_t n = 1; n <= (1u << 16); ++n) {
    const auto s = sym2_nilpotent(n);
    const auto e = ext2_nilpotent(n);
    ASSERT_EQ(e, ext2_nilpotent_rec(n)) << n;
    ASSERT_EQ(s, sym2_nilpotent_rec(n)) << n;
    ASSERT_EQ(s.decremented(), e) << n;
    ASSERT_EQ(s.block_count(), n) << n;
  }
}

TEST(Formulas, LargeInputs) {
  const count_t n = kFormulaLimit;
  EXPECT_EQ(ext2_nilpotent(n).total_dim(), n * (n - 1) / 2);
  EXPECT_EQ(sym2_unipotent(n - 1).total_dim(), (n - 1) * n / 2);
  EXPECT_EQ(tensor_decompose(n - 3, n - 1).total_dim(), (n - 3) * (n - 1));
  EXPECT_THROW(ext2_nilpotent(n + 1), std::out_of_range);
}

TEST(DecomposeExpr, Examples) {
  using E = ModuleExpr;
  const auto v2_plus_v1 = E::sum({E::atom(OperatorKind::unipotent, 2), E::atom(OperatorKind::unipotent, 1)});
  EXPECT_EQ(decompose_expr(E::ext2(v2_plus_v1)), jt("2 1"));
  EXPECT_EQ(oracle_expr_jordan_type(E::ext2(v2_plus_v1)), jt("2 1"));

  const auto w1w1 = E::sum({E::atom(OperatorKind::nilpotent, 1), E::atom(OperatorKind::nilpotent, 1)});
  EXPECT_EQ(decompose_expr(E::sym2(w1w1)), jt("1^3"));

  EXPECT_EQ(decompose_expr(E::tensor(E::atom(OperatorKind::unipotent, 3), E::atom(OperatorKind::unipotent, 4))),
            jt("4^3"));
}

TEST(DecomposeExpr, MixedKindsRejected) {
  using E = ModuleExpr;
  EXPECT_THROW(decompose_expr(E::sum({E::atom(OperatorKind::unipotent, 2), E::atom(OperatorKind::nilpotent, 1)})),
               std::invalid_argument);
  EXPECT_THROW(
      decompose_expr(E::tensor(E::atom(OperatorKind::unipotent, 2), E::ext2(E::atom(OperatorKind::nilpotent, 3)))),
      std::invalid_argument);
}

TEST(DecomposeExpr, MultiplicityExpansionMatchesOracle) {
  using E = ModuleExpr;
  for (auto kind : {OperatorKind::unipotent, OperatorKind::nilpotent})
    for (count_t d = 1; d <= 8; ++d)
      for (count_t c = 1; c <= 3; ++c) {
        const auto scaled = E::atom(kind, d, c);
        EXPECT_EQ(decompose_expr(E::ext2(scaled)), oracle_expr_jordan_type(E::ext2(scaled))) << d << " " << c;
        EXPECT_EQ(decompose_expr(E::sym2(scaled)), oracle_expr_jordan_type(E::sym2(scaled))) << d << " " << c;
      }
}
