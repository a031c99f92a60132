#include <gtest/gtest.h>

#include "chromkh/chrompoly.hpp"
#include "chromkh/graph_dsl.hpp"
#include "chromkh/graph_enum.hpp"

using namespace chromkh;

TEST(ChromaticPolynomial, Closed) {
  EXPECT_EQ(chromatic_polynomial(complete_graph(5)), detail::falling_factorial(5));
  EXPECT_EQ(chromatic_polynomial(cycle_graph(7)), detail::cycle_chromatic(7));
  // trees: lambda (lambda - 1)^(v-1)
  IntPolynomial tree{0, 1};
  for (int k = 0; k < 5; ++k) tree *= IntPolynomial{-1, 1};
  EXPECT_EQ(chromatic_polynomial(star_graph(5)), tree);
  EXPECT_EQ(chromatic_polynomial(path_graph(6)), tree);
}

TEST(ChromaticPolynomial, PrintsInLambda) {
  EXPECT_EQ(chromatic_polynomial(cycle_graph(4)).str("λ"), "λ^4 - 4λ^3 + 6λ^2 - 3λ");
}

TEST(ChromaticPolynomial, DisconnectedMultiplies) {
  SimpleGraph g(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  EXPECT_EQ(chromatic_polynomial(g), detail::falling_factorial(3) * (IntPolynomial{0, -1, 1}));
  EXPECT_EQ(chromatic_polynomial(SimpleGraph(3)), (IntPolynomial{0, 0, 0, 1}));
}

// Deletion-contraction with block factoring against the raw subset sum.
TEST(ChromaticPolynomial, MatchesStateSumExhaustive) {
  for (int v = 1; v <= 6; ++v)
    for (const SimpleGraph& g : connected_graphs(v))
      ASSERT_EQ(chromatic_polynomial(g), chromatic_state_sum(g)) << serialize_graph(g);
}

TEST(ChromaticPolynomial, MatchesStateSumLarger) {
  for (const SimpleGraph& g : {theta_graph({3, 2, 3}), wheel_graph(7), edge_glue(complete_graph(4), cycle_graph(5))})
    EXPECT_EQ(chromatic_polynomial(g), chromatic_state_sum(g));
}

TEST(ChromaticPolynomial, BlockCountIsMultiplicityOfLambdaMinusOne) {
  for (int v = 2; v <= 6; ++v)
    for (const SimpleGraph& g : connected_graphs(v))
      EXPECT_EQ(block_count_from_polynomial(chromatic_polynomial(g)), invariants(g).b);
}

TEST(Farrell, TopFourCoefficients) {
  for (int v = 4; v <= 6; ++v)
    for (const SimpleGraph& g : connected_graphs(v)) {
      IntPolynomial p = chromatic_polynomial(g);
      auto c = farrell_coefficients(invariants(g));
      for (int k = 0; k < 4; ++k) ASSERT_EQ(c[k], p.coeff(v - k)) << serialize_graph(g) << " k=" << k;
    }
}

TEST(Farrell, KFourTermMatters) {
  // K4 is the smallest graph where the -2 k4 correction shows.
  auto inv = invariants(complete_graph(4));
  EXPECT_EQ(farrell_coefficients(inv)[3], chromatic_polynomial(complete_graph(4)).coeff(1));
  EXPECT_EQ(chromatic_polynomial(complete_graph(4)).coeff(1), BigInt(-6));
}

TEST(QBasis, GradedRankEvaluation) {
  // P(1 + q) for the triangle: (1+q) q (q-1)
  IntPolynomial q = to_q_basis(detail::falling_factorial(3));
  EXPECT_EQ(q, (IntPolynomial{0, -1, 0, 1}));
  // at A_2 the graded rank 1 + q gives the same thing
  EXPECT_EQ(evaluate_at_qdim(detail::falling_factorial(3), 2), q);
}
