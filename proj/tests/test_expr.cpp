#include <gtest/gtest.h>

#include <chartwo/formulas.hpp>
#include <chartwo/module_expr.hpp>
#include <chartwo/rep_oracle.hpp>

using namespace chartwo;

namespace {

JordanType jt(const char* s) { return parse_jordan_type(s); }

std::size_t error_position(const char* text) {
  try {
    parse_expr(text);
  } catch (const ExprParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(ExprParser, Examples) {
  EXPECT_EQ(decompose_expr(parse_expr("E2(V9)")), jt("15 8^2 5"));
  EXPECT_EQ(decompose_expr(parse_expr("T(V2, V3)")), jt("4 2"));
  EXPECT_EQ(decompose_expr(parse_expr("S2(2*W3)")), jt("4^4 1^5"));
  EXPECT_EQ(oracle_expr_jordan_type(parse_expr("S2(2*W3)")), jt("4^4 1^5"));
}

TEST(ExprParser, NestedAgreesWithOracle) {
  for (const char* text : {"S2(W5 + 2*W3)", "E2(V4 + V3) + T(V2, V2)", "3*(E2(W4))", "T(S2(W2), W3)",
                           " ( V1 +V2 ) ", "E2(E2(V4))", "S2(T(W2, W2))"}) {
    const auto e = parse_expr(text);
    EXPECT_EQ(decompose_expr(e), oracle_expr_jordan_type(e)) << text;
  }
}

TEST(ExprParser, TreeShape) {
  const auto e = parse_expr("S2(W5 + 2*W3)");
  EXPECT_EQ(e.to_string(), "S2(W5 + 2*W3)");
  EXPECT_EQ(e.kind(), OperatorKind::nilpotent);
  EXPECT_TRUE(std::holds_alternative<expr::Sym2>(e.node()));
  EXPECT_EQ(parse_expr("2*E2(V3)").to_string(), "2*(E2(V3))");
  EXPECT_EQ(parse_expr("T(V1,V2)").to_string(), "T(V1, V2)");
}

TEST(ExprParser, ToStringReparses) {
  for (const char* text : {"S2(W5 + 2*W3)", "2*(E2(V3)) + V1", "T(T(V1, V2), V3)", "E2(S2(W2))"}) {
    const auto e = parse_expr(text);
    EXPECT_EQ(parse_expr(e.to_string()).to_string(), e.to_string());
    EXPECT_EQ(decompose_expr(parse_expr(e.to_string())), decompose_expr(e));
  }
}

TEST(ExprParser, ErrorPositions) {
  EXPECT_EQ(error_position(""), 0u);
  EXPECT_EQ(error_position("X3"), 0u);
  EXPECT_EQ(error_position("V0"), 1u);
  EXPECT_EQ(error_position("V"), 1u);
  EXPECT_EQ(error_position("V3 +"), 4u);
  EXPECT_EQ(error_position("E2(V3"), 5u);
  EXPECT_EQ(error_position("V3 W2"), 3u);
  EXPECT_EQ(error_position("0*V3"), 0u);
  EXPECT_EQ(error_position("3*"), 2u);
  EXPECT_EQ(error_position("T(V2 V3)"), 5u);
  EXPECT_EQ(error_position("V99999999999999999999999"), 1u);
}

TEST(ExprParser, MixedKindsRejected) {
  EXPECT_THROW(parse_expr("V3 + W2"), std::invalid_argument);
  EXPECT_THROW(parse_expr("T(V2, E2(W3))"), std::invalid_argument);
}
