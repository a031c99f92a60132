#include <gtest/gtest.h>

#include <random>

#include "chromkh/graph.hpp"
#include "chromkh/graph_dsl.hpp"
#include "chromkh/graph_enum.hpp"

using namespace chromkh;

TEST(GraphText, RoundTrip) {
  SimpleGraph g = theta_graph({3, 2, 3});
  SimpleGraph h = parse_graph(serialize_graph(g));
  EXPECT_EQ(g, h);
}

TEST(GraphText, CommentsAndBlankLines) {
  SimpleGraph g = parse_graph("# triangle\nv 3\n\ne 0 1\ne 1 2 # last two\ne 2 0\n");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3);
}

TEST(GraphText, Rejects) {
  EXPECT_THROW(parse_graph("e 0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2\ne 0 2\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2\ne 1 1\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2\ne 0 1\ne 1 0\n"), ParseError);
  EXPECT_THROW(parse_graph("v 2\nx\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
}

TEST(GraphDsl, Constructions) {
  EXPECT_EQ(build("cycle(5)").edge_count(), 5);
  EXPECT_EQ(build("complete(5)").edge_count(), 10);
  EXPECT_EQ(build("wheel(5)").vertex_count(), 5);
  EXPECT_EQ(build("wheel(5)").edge_count(), 8);
  SimpleGraph t = build("theta(3,2,3)");
  EXPECT_EQ(t.vertex_count(), 7);
  EXPECT_EQ(t.edge_count(), 8);
  SimpleGraph eg = build("edge_glue(cycle(4),cycle(5))");
  EXPECT_EQ(eg.vertex_count(), 7);
  EXPECT_EQ(eg.edge_count(), 8);
  SimpleGraph vg = build("vertex_glue(cycle(4),cycle(4))");
  EXPECT_EQ(vg.vertex_count(), 7);
  EXPECT_EQ(invariants(vg).b, 2);
  SimpleGraph br = build("bridge(cycle(3),cycle(3))");
  EXPECT_EQ(invariants(br).b, 3);
  EXPECT_EQ(build("edge_glue_k(cycle(5),cycle(5),2)").edge_count(), 8);
}

TEST(GraphDsl, ErrorsCarryPosition) {
  EXPECT_THROW(build("cycle(5"), DslError);
  EXPECT_THROW(build("frob(3)"), DslError);
  EXPECT_THROW(build("cycle(3,4)"), DslError);
  try {
    build("cycle(x)");
    FAIL();
  } catch (const DslError& e) {
    EXPECT_EQ(e.position(), 7u);  // "x" reads as a construction name missing its "("
  }
}

TEST(Invariants, Cycle) {
  auto inv = invariants(cycle_graph(6));
  EXPECT_EQ(inv.girth, 6);
  EXPECT_EQ(inv.b, 1);
  EXPECT_TRUE(inv.bipartite);
  EXPECT_EQ(inv.p1, 1);
  EXPECT_EQ(inv.t4, 0);
}

TEST(Invariants, CompleteFour) {
  auto inv = invariants(complete_graph(4));
  EXPECT_EQ(inv.girth, 3);
  EXPECT_EQ(inv.t3, 4);
  EXPECT_EQ(inv.t4, 0);
  EXPECT_EQ(inv.k4, 1);
  EXPECT_EQ(inv.p1, 3);
  EXPECT_FALSE(inv.bipartite);
}

TEST(Invariants, InducedSquares) {
  // K_{2,3} has three 4-cycles, all induced.
  SimpleGraph g(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  EXPECT_EQ(invariants(g).t4, 3);
  // A chord kills induced squares.
  EXPECT_EQ(invariants(wheel_graph(4)).t4, 0);
}

TEST(Invariants, ForestGirthZero) {
  EXPECT_EQ(girth(path_graph(5)), 0);
  EXPECT_EQ(girth(star_graph(4)), 0);
  EXPECT_TRUE(is_forest(path_graph(4)));
}

TEST(Blocks, BridgesAndCuts) {
  SimpleGraph g = bridge(cycle_graph(3), cycle_graph(4));
  auto bd = blocks(g);
  EXPECT_EQ(bd.block_count, 3);
  int bridges = 0;
  for (bool b : bd.is_bridge) bridges += b;
  EXPECT_EQ(bridges, 1);
  int cuts = 0;
  for (bool c : bd.is_cut_vertex) cuts += c;
  EXPECT_EQ(cuts, 2);
}

TEST(Blocks, TreeEdgesAreBlocks) {
  EXPECT_EQ(invariants(path_graph(6)).b, 5);
}

TEST(Contraction, LengthIsVMinusBMinusOne) {
  for (const SimpleGraph& g : connected_graphs(5)) {
    auto inv = invariants(g);
    auto seq = contraction_sequence(g);
    EXPECT_EQ(static_cast<int>(seq.steps.size()), inv.v - inv.b - 1) << serialize_graph(g);
    EXPECT_TRUE(is_forest(seq.terminal));
  }
}

TEST(DeleteContract, Counts) {
  SimpleGraph g = complete_graph(4);
  EXPECT_EQ(delete_edge(g, 0).edge_count(), 5);
  SimpleGraph c = contract_edge(g, 0);
  EXPECT_EQ(c.vertex_count(), 3);
  EXPECT_EQ(c.edge_count(), 3);  // parallel edges merge
}

TEST(Enumeration, ConnectedGraphCounts) {
  const int expected[] = {0, 1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(static_cast<int>(connected_graphs(n).size()), expected[n]) << n;
}

TEST(Enumeration, PairwiseNonIsomorphic) {
  auto gs = connected_graphs(5);
  std::set<CanonicalKey> keys;
  for (const auto& g : gs) keys.insert(*canonical_key(g));
  EXPECT_EQ(keys.size(), gs.size());
}

TEST(Canonical, RelabelInvariant) {
  std::mt19937 rng(7);
  for (const SimpleGraph& g : {theta_graph({3, 2, 3}), wheel_graph(5), edge_glue(cycle_graph(4), cycle_graph(5))}) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph h(g.vertex_count());
    for (const Edge& e : g.edges()) h.add_edge(perm[e.a], perm[e.b]);
    EXPECT_TRUE(are_isomorphic(g, h));
    EXPECT_EQ(canonical_form(g), canonical_form(h));
  }
  EXPECT_FALSE(are_isomorphic(cycle_graph(6), theta_graph({2, 2, 2})));
}
