#include <gtest/gtest.h>

#include "corpus.hpp"
#include "monotop/graph.hpp"
#include "monotop/io.hpp"
#include "oracles.hpp"

namespace monotop {
namespace {

Graph load(const std::string& name) {
  return parse_graph(read_text_file(std::string(MONOTOP_TEST_DATA) + "/" + name));
}

TEST(Graph, RejectsBadEdges) {
  const auto u = VariableUniverse::numbered(3, "v");
  EXPECT_THROW(Graph(u, {{0, 0}}), PreconditionError);
  EXPECT_THROW(Graph(u, {{0, 1}, {1, 0}}), PreconditionError);
  EXPECT_THROW(Graph(u, {{0, 5}}), UniverseMismatch);
}

TEST(Graph, NeighborhoodsAndSets) {
  const Graph p = path_graph(4);
  EXPECT_EQ(p.closed_neighborhood(Monomial{0b0001}).bits(), 0b0011u);
  EXPECT_TRUE(p.is_dominating(Monomial{0b0110}));
  EXPECT_FALSE(p.is_dominating(Monomial{0b0011}));
  EXPECT_TRUE(p.is_independent(Monomial{0b0101}));
  EXPECT_FALSE(p.is_independent(Monomial{0b0011}));
  EXPECT_FALSE(p.has_isolated_vertex());
  EXPECT_TRUE(empty_graph(2).has_isolated_vertex());
}

TEST(Graph, EdgeAndStarIdeals) {
  const Graph p = path_graph(3);
  EXPECT_EQ(edge_ideal(p).to_string(), "(v1*v2, v2*v3)");
  // N[v1] = v1 v2, N[v2] = v1 v2 v3, N[v3] = v2 v3
  EXPECT_EQ(star_ideal(p).to_string(), "(v1*v2, v2*v3)");
  EXPECT_EQ(star_ideal(empty_graph(2)).to_string(), "(v1, v2)");
}

TEST(Graph, DeleteAndInduce) {
  const Graph c = cycle_graph(5);
  const Graph d = delete_vertices(c, Monomial{0b00001});
  EXPECT_EQ(d.num_vertices(), 4u);
  EXPECT_EQ(d.num_edges(), 3u);
  EXPECT_EQ(d.vertices().names().front(), "v2");
  EXPECT_EQ(induced_subgraph(c, Monomial{0b00011}).num_edges(), 1u);
}

TEST(Invariants, MatchBruteForce) {
  testing::Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = trial % 2 == 0 ? testing::random_graph(rng, 10) : testing::random_forest(rng, 14);
    const auto inv = invariants(g);
    const auto ref = oracle::invariants(g);
    EXPECT_EQ(inv.domination, ref.gamma);
    EXPECT_EQ(inv.independent_domination, ref.i);
    EXPECT_EQ(inv.vertex_cover, ref.alpha0);
    EXPECT_EQ(inv.matching, ref.beta1);
    if (g.num_edges() <= 16) {
      EXPECT_EQ(inv.edge_cover, ref.alpha1);
    }
  }
}

TEST(Invariants, Budget) {
  EXPECT_THROW(invariants(empty_graph(21)), BudgetExceeded);
}

TEST(Invariants, FourteenVertexTree) {
  const auto inv = invariants(load("tree14.graph"));
  EXPECT_EQ(inv.domination, 3u);
  EXPECT_EQ(inv.independent_domination, 3u);
  EXPECT_EQ(inv.matching, 4u);
  EXPECT_EQ(inv.vertex_cover, 4u);
  EXPECT_EQ(inv.edge_cover, 10u);
}

TEST(EdgeCoverPolynomial, SmallGraphs) {
  // triangle: covers are any two or all three edges
  EXPECT_EQ(edge_cover_polynomial(cycle_graph(3)), UnivariatePolynomial({0, 0, 3, 1}));
  EXPECT_TRUE(edge_cover_polynomial(empty_graph(1)).is_zero());
  EXPECT_EQ(edge_cover_polynomial(empty_graph(0)), UnivariatePolynomial({1}));
}

TEST(DominatingSignSum, MatchesEnumeration) {
  testing::Rng rng(72);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(rng, 10);
    BigInt expected = 0;
    for (auto s : oracle::dominating_sets(g)) expected += __builtin_popcountll(s) % 2 ? -1 : 1;
    EXPECT_EQ(dominating_sign_sum(g), expected);
  }
}

TEST(Structure, ComponentsAndCycle) {
  const auto st = structure(load("unicyclic.graph"));
  EXPECT_EQ(st.components, 1u);
  EXPECT_EQ(st.h1, 1);
  ASSERT_TRUE(st.cycle.has_value());
  EXPECT_EQ(st.cycle->size(), 6u);
  const auto f = structure(disjoint_union(path_graph(3), empty_graph(2)));
  EXPECT_EQ(f.components, 3u);
  EXPECT_TRUE(f.is_forest);
  EXPECT_EQ(structure(disjoint_triangles(3)).h1, 3);
}

TEST(Structure, TentaclesIncludeTheCycleVertex) {
  const auto tentacles = tree_tentacles(load("unicyclic.graph"));
  ASSERT_EQ(tentacles.size(), 1u);
  EXPECT_EQ(tentacles[0].num_vertices(), 3u);
  EXPECT_TRUE(structure(tentacles[0]).is_forest);
  EXPECT_THROW(tree_tentacles(path_graph(3)), PreconditionError);
}

TEST(Families, Shapes) {
  EXPECT_EQ(path_graph(5).num_edges(), 4u);
  EXPECT_EQ(cycle_graph(5).num_edges(), 5u);
  EXPECT_THROW(cycle_graph(2), PreconditionError);
  const Graph s = spider(2);
  EXPECT_EQ(s.num_vertices(), 8u);
  EXPECT_EQ(s.num_edges(), 7u);
  EXPECT_EQ(s, load("spider2.graph"));
  const Graph u = disjoint_union(path_graph(2), path_graph(2));
  EXPECT_EQ(u.vertices().names(), (std::vector<std::string>{"v1", "v2", "v1'", "v2'"}));
}

TEST(Spider, ConicalWithDistinctDominationNumbers) {
  for (std::size_t k = 0; k <= 3; ++k) {
    const Graph s = spider(k);
    const auto inv = invariants(s);
    EXPECT_EQ(inv.domination, 2u);
    EXPECT_EQ(inv.independent_domination, k + 2);
    EXPECT_EQ(classify(edge_ideal(s)).verdict, Verdict::Conical);
  }
}

TEST(LeafStripping, Examples) {
  // P4 loses N[v2] and leaves v4 isolated; P2 and P3 vanish entirely.
  EXPECT_TRUE(leaf_stripping_reaches_isolated(path_graph(4)));
  EXPECT_FALSE(leaf_stripping_reaches_isolated(path_graph(2)));
  EXPECT_FALSE(leaf_stripping_reaches_isolated(path_graph(3)));
  EXPECT_TRUE(leaf_stripping_reaches_isolated(empty_graph(1)));
}

TEST(ForestReport, FourteenVertexTree) {
  const auto r = forest_report(load("tree14.graph"));
  EXPECT_TRUE(r.consistent());
  EXPECT_EQ(r.edge.depth, 3u);
  EXPECT_EQ(r.star.depth, 4u);
  EXPECT_TRUE(r.edge_homology.is_sphere(2));
  EXPECT_TRUE(r.star_homology.is_sphere(3));
  EXPECT_THROW(forest_report(cycle_graph(4)), PreconditionError);
}

TEST(ForestReport, TreesUpToSevenVertices) {
  for (const Graph& t : testing::unlabeled_trees(7)) {
    const auto r = forest_report(t);
    EXPECT_TRUE(r.consistent()) << format_graph(t);
    EXPECT_TRUE(r.facco.consistent()) << format_graph(t);
  }
}

TEST(UnicyclicReport, CycleTable) {
  for (std::size_t k = 3; k <= 12; ++k) {
    const auto r = unicyclic_report(cycle_graph(k));
    EXPECT_TRUE(r.consistent()) << k;
    EXPECT_EQ(r.cycle_table_ok, true) << k;
    EXPECT_EQ(r.predicted == UnicyclicCase::Wedge, k % 3 == 0);
  }
}

TEST(UnicyclicReport, RandomUnicyclicGraphs) {
  testing::Rng rng(73);
  int seen = 0;
  for (int trial = 0; trial < 400 && seen < 60; ++trial) {
    const Graph g = testing::random_graph(rng, 10);
    if (structure(g).h1 != 1) continue;
    ++seen;
    const auto r = unicyclic_report(g);
    EXPECT_TRUE(r.consistent()) << format_graph(g);
    EXPECT_EQ(r.euler * r.euler, r.cover_at_minus_one * r.cover_at_minus_one) << format_graph(g);
  }
  EXPECT_GT(seen, 10);
}

TEST(Bounds, Families) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto b = bounds_check(disjoint_triangles(n));
    EXPECT_EQ(b.size.h_inclusive, std::size_t{1} << n);
    EXPECT_TRUE(b.consistent());
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto b = bounds_check(disjoint_edges(n));
    EXPECT_EQ(b.size.hd, static_cast<int>(n) - 1);
    EXPECT_TRUE(b.consistent());
  }
}

}  // namespace
}  // namespace monotop
