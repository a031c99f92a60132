#include <gtest/gtest.h>

#include "chromkh/chromatic_complex.hpp"
#include "chromkh/chrompoly.hpp"
#include "chromkh/graph_dsl.hpp"
#include "chromkh/graph_enum.hpp"

using namespace chromkh;

namespace {

IntPolynomial euler_characteristic(const BigradedGroups& h) {
  IntPolynomial chi;
  for (auto& [k, g] : h.groups()) chi.add_term(k.second, BigInt(k.first % 2 ? -g.free : g.free));
  return chi;
}

Group z(long free, std::map<BigInt, int> tor = {}) { return Group{free, std::move(tor)}; }

}  // namespace

TEST(Homology, FivegonFrozen) {
  BigradedGroups want;
  want.set(0, 5, z(1));
  want.set(1, 4, z(0, {{BigInt(2), 1}}));
  want.set(1, 3, z(1));
  want.set(2, 3, z(1));
  want.set(3, 2, z(0, {{BigInt(2), 1}}));
  want.set(3, 1, z(1));
  EXPECT_EQ(chromatic_homology(cycle_graph(5), 2), want);
}

TEST(Homology, ReducedAgreesWithFullCube) {
  for (int m : {2, 3})
    for (int v = 2; v <= 5; ++v)
      for (const SimpleGraph& g : connected_graphs(v))
        ASSERT_EQ(chromatic_homology(g, m), chromatic_homology_cube(g, m)) << "m=" << m << "\n" << serialize_graph(g);
}

TEST(Homology, EulerCharacteristicIsChromaticPolynomial) {
  for (int m : {2, 3, 4})
    for (int v = 1; v <= 5; ++v)
      for (const SimpleGraph& g : connected_graphs(v))
        ASSERT_EQ(euler_characteristic(chromatic_homology(g, m)), evaluate_at_qdim(chromatic_polynomial(g), m))
            << "m=" << m << "\n"
            << serialize_graph(g);
}

TEST(Homology, DifferentialSquaresToZero) {
  CubeOptions o;
  o.check_d_squared = true;
  for (const SimpleGraph& g : {complete_graph(4), theta_graph({2, 2, 2}), wheel_graph(5)})
    for (int m : {2, 3}) EXPECT_NO_THROW(chromatic_homology_cube(g, m, o));
}

TEST(Homology, TopCornerAndTrees) {
  for (int m : {2, 3, 4}) {
    auto h = chromatic_homology(theta_graph({3, 2, 3}), m);
    EXPECT_EQ(h.at(0, (m - 1) * 7), z(1));
  }
  // a tree on v vertices has homology only in degree 0
  auto h = chromatic_homology(path_graph(5), 2);
  for (auto& [k, g] : h.groups()) EXPECT_EQ(k.first, 0);
}

TEST(Homology, ThetaTorsionFrozen) {
  auto h = chromatic_homology(theta_graph({3, 2, 3}), 2);
  auto t = h.torsion_by_degree(2);
  std::vector<int> got;
  for (int i = 1; i <= 5; ++i) got.push_back(t.count(i) ? t[i] : 0);
  EXPECT_EQ(got, (std::vector<int>{1, 1, 2, 2, 1}));
}

TEST(Homology, WorkersDoNotChangeResult) {
  SimpleGraph g = edge_glue(theta_graph({2, 2, 2}), cycle_graph(4));
  CubeOptions one, three;
  three.workers = 3;
  EXPECT_EQ(chromatic_homology(g, 3, one), chromatic_homology(g, 3, three));
  EXPECT_EQ(chromatic_homology_cube(g, 2, one), chromatic_homology_cube(g, 2, three));
}

TEST(Homology, FiltersRestrict) {
  SimpleGraph g = theta_graph({2, 3, 3});
  auto full = chromatic_homology(g, 3);
  CubeOptions o;
  o.i_min = 1;
  o.i_max = 2;
  EXPECT_EQ(chromatic_homology(g, 3, o), full.restricted(1, 2));
  CubeOptions oj;
  oj.gradings = std::set<int>{5};
  auto hj = chromatic_homology(g, 3, oj);
  for (auto& [k, grp] : full.groups()) {
    if (k.second == 5) {
      EXPECT_EQ(hj.at(k.first, 5), grp);
    }
  }
  for (auto& [k, grp] : hj.groups()) EXPECT_EQ(k.second, 5);
}

TEST(Homology, ResourceLimit) {
  setenv("CHROMKH_MAX_CUBE_DIM", "4", 1);
  EXPECT_THROW(chromatic_homology(cycle_graph(5), 2), ResourceError);
  unsetenv("CHROMKH_MAX_CUBE_DIM");
  EXPECT_NO_THROW(chromatic_homology(cycle_graph(5), 2));
}

TEST(ChainSlice, RanksMatchStateCount) {
  // C^{1,j} over A_2 of the triangle: 3 one-edge states, 2 components each
  SimpleGraph g = cycle_graph(3);
  std::size_t total = 0;
  for (int j = 0; j <= 2; ++j) total += chromatic_complex(g, 2, 1, j).basis.size();
  EXPECT_EQ(total, 3u * 4u);
}

TEST(BigradedJson, RoundTrip) {
  auto h = chromatic_homology(wheel_graph(5), 3);
  EXPECT_EQ(bigraded_from_json(to_json(h)), h);
}
