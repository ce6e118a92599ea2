#include <gtest/gtest.h>

#include <algorithm>

#include "effdom/graph.hpp"
#include "generators.hpp"

namespace effdom {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::graph_of;
using testing::path_graph;

TEST(WeightedGraph, RejectsMalformedAdjacency) {
  using Adj = std::vector<std::vector<Vertex>>;
  EXPECT_THROW(WeightedGraph(Adj{{1}, {}}), std::invalid_argument);        // asymmetric
  EXPECT_THROW(WeightedGraph(Adj{{0}}), std::invalid_argument);            // self-loop
  EXPECT_THROW(WeightedGraph(Adj{{1, 1}, {0, 0}}), std::invalid_argument);  // duplicate
  EXPECT_THROW(WeightedGraph(Adj{{5}, {}}), std::invalid_argument);
  EXPECT_THROW(WeightedGraph(Adj{{}, {}}, {1}), std::invalid_argument);
}

TEST(WeightedGraph, DefaultsToUnitWeights) {
  const auto g = path_graph(3);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.weight(v), 1u);
  const VertexSet all{0, 1, 2};
  EXPECT_EQ(g.weight_of(all), 3u);
}

TEST(DistanceLevels, PathFromEnd) {
  const auto dl = distance_levels(path_graph(4), 0);
  ASSERT_EQ(dl.levels.size(), 4u);
  EXPECT_EQ(dl.levels[1], VertexSet{1});
  EXPECT_EQ(dl.levels[2], VertexSet{2});
  EXPECT_EQ(dl.levels[3], VertexSet{3});
  EXPECT_TRUE(dl.empty_at(4));
  EXPECT_TRUE(dl.empty_at(100));
}

TEST(DistanceLevels, SixCycle) {
  const auto dl = distance_levels(cycle_graph(6), 0);
  EXPECT_EQ(dl.levels[1], (VertexSet{1, 5}));
  EXPECT_EQ(dl.levels[2], (VertexSet{2, 4}));
  EXPECT_EQ(dl.levels[3], VertexSet{3});
}

TEST(DistanceLevels, UnreachableVertices) {
  const auto g = graph_of(3, {{2, 3}});
  const auto dl = distance_levels(g, 0);
  EXPECT_TRUE(dl.empty_at(1));
  EXPECT_EQ(dl.level(1), DistanceLevels::kUnreachable);
  EXPECT_EQ(dl.level(2), DistanceLevels::kUnreachable);
  EXPECT_THROW(distance_levels(g, 3), std::out_of_range);
}

TEST(Square, PathOfFour) {
  const auto sq = square(path_graph(4));
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
  EXPECT_EQ(sq.edges(), expected);
}

TEST(Square, CompleteIsFixed) { EXPECT_EQ(square(complete_graph(3)), complete_graph(3)); }

TEST(Square, SixCycleIsComplementOfAntipodalMatching) {
  const auto sq = square(cycle_graph(6));
  EXPECT_EQ(sq.size(), 12u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_FALSE(sq.adjacent(v, v + 3));
}

TEST(Square, MatchesPairwiseDistances) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_graph(9, 0.25, rng);
    const auto sq = square(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      const auto dl = distance_levels(g, u);
      for (Vertex v = 0; v < g.order(); ++v) {
        const int d = dl.level(v);
        EXPECT_EQ(sq.adjacent(u, v), d == 1 || d == 2);
      }
    }
  }
}

TEST(Components, Basics) {
  EXPECT_EQ(connected_components(complete_graph(2)).size(), 1u);
  EXPECT_EQ(connected_components(graph_of(4, {{1, 2}, {3, 4}})).size(), 2u);
  const auto three = connected_components(testing::edgeless_graph(3));
  EXPECT_EQ(three, (std::vector<VertexSet>{{0}, {1}, {2}}));
  EXPECT_TRUE(is_connected(WeightedGraph{}));
}

TEST(Components, WithinSubset) {
  // Removing the middle of P5 splits it.
  const VertexSet s{0, 1, 3, 4};
  const auto c = components_within(path_graph(5), s);
  EXPECT_EQ(c, (std::vector<VertexSet>{{0, 1}, {3, 4}}));
}

TEST(Universal, Examples) {
  const VertexSet all3{0, 1, 2}, all4{0, 1, 2, 3};
  EXPECT_EQ(universal_in(complete_graph(3), all3), all3);
  EXPECT_EQ(universal_in(path_graph(3), all3), VertexSet{1});
  EXPECT_TRUE(universal_in(path_graph(4), all4).empty());
}

TEST(Simplicial, Examples) {
  EXPECT_FALSE(is_simplicial(path_graph(3), 1));
  EXPECT_TRUE(is_simplicial(path_graph(3), 0));
  EXPECT_TRUE(is_simplicial(complete_graph(4), 2));
}

TEST(InducedSubgraph, KeepsWeightsAndMapsBack) {
  const auto g = graph_of(4, {{1, 2}, {2, 3}, {3, 4}}, {5, 6, 7, 8});
  const VertexSet keep{1, 3};
  const auto sub = induced_subgraph(g, keep);
  EXPECT_EQ(sub.graph.order(), 2);
  EXPECT_EQ(sub.graph.size(), 0u);
  EXPECT_EQ(sub.graph.weight(1), 8u);
  EXPECT_EQ(sub.to_parent, keep);
}

TEST(ShortestPath, IsInducedAndShortest) {
  const auto g = cycle_graph(7);
  const auto p = shortest_path(g, 0, 3);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.front(), 0);
  EXPECT_EQ(p.back(), 3);
  EXPECT_TRUE(shortest_path(graph_of(2, {}), 0, 1).empty());
}

TEST(Complement, Involution) {
  testing::Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto g = testing::with_random_weights(testing::random_graph(8, 0.4, rng), rng);
    EXPECT_EQ(complement(complement(g)), g);
    EXPECT_EQ(complement(g).size() + g.size(), 28u);
  }
}

TEST(DisjointUnion, ShiftsSecondGraph) {
  const auto u = disjoint_union(path_graph(2), path_graph(3));
  EXPECT_EQ(u.order(), 5);
  EXPECT_TRUE(u.adjacent(2, 3));
  EXPECT_TRUE(u.adjacent(3, 4));
  EXPECT_FALSE(u.adjacent(1, 2));
}

TEST(Precedes, WeightThenLexicographic) {
  EXPECT_TRUE(precedes(1, {5}, 2, {0}));
  EXPECT_TRUE(precedes(2, {0, 3}, 2, {1, 2}));
  EXPECT_FALSE(precedes(2, {1, 2}, 2, {1, 2}));
  EXPECT_TRUE(precedes(2, {1}, 2, {1, 2}));
}

}  // namespace
}  // namespace effdom
