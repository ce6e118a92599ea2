#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "effdom/pattern.hpp"
#include "generators.hpp"

namespace effdom {
namespace {

using testing::cycle_graph;
using testing::graph_of;
using testing::path_graph;

// Reference detector: every ordered tuple of distinct vertices.
bool contains_reference(const WeightedGraph& g, PatternId p) {
  const int k = pattern_order(p);
  const int n = g.order();
  if (k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    VertexSet s;
    for (int v = 0; v < n; ++v) {
      if (pick[v]) s.push_back(v);
    }
    do {
      if (induces(g, s, p)) return true;
    } while (std::next_permutation(s.begin(), s.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

TEST(Pattern, NamesRoundTrip) {
  for (PatternId p : kAllPatterns) {
    EXPECT_EQ(parse_pattern(pattern_name(p)), p);
    int max_index = -1;
    for (auto [a, b] : pattern_edges(p)) max_index = std::max({max_index, a, b});
    EXPECT_LT(max_index, pattern_order(p));
  }
  EXPECT_FALSE(parse_pattern("P9").has_value());
}

TEST(Pattern, PathFindsItself) {
  const auto w = find_induced(path_graph(5), PatternId::P5);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (VertexSet{0, 1, 2, 3, 4}));
}

TEST(Pattern, FiveCycleIsP5Free) { EXPECT_FALSE(find_induced(cycle_graph(5), PatternId::P5)); }

TEST(Pattern, SixCycleIs2P3Free) { EXPECT_FALSE(find_induced(cycle_graph(6), PatternId::TwoP3)); }

TEST(Pattern, InducesChecksNonEdgesAndDistinctness) {
  const auto g = cycle_graph(4);
  EXPECT_FALSE(induces(g, VertexSet{0, 1, 2, 3}, PatternId::P4));
  EXPECT_TRUE(induces(g, VertexSet{0, 1, 2}, PatternId::P3));
  EXPECT_FALSE(induces(g, VertexSet{0, 1, 0}, PatternId::P3));
  EXPECT_FALSE(induces(g, VertexSet{0, 1}, PatternId::P3));
}

TEST(Pattern, S122Shape) {
  // a-b-c-d-e with f on c.
  const auto g = graph_of(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}});
  const auto w = find_induced(g, PatternId::S122);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(induces(g, *w, PatternId::S122));
  EXPECT_FALSE(find_induced(g, PatternId::P6));
}

TEST(Pattern, AgreesWithReferenceOnRandomGraphs) {
  testing::Rng rng(17);
  const PatternId checked[] = {PatternId::P4, PatternId::P5, PatternId::TwoP2,
                               PatternId::P2P3, PatternId::Claw, PatternId::S122,
                               PatternId::TwoP3, PatternId::P2P4};
  for (int t = 0; t < 60; ++t) {
    const auto g = testing::random_graph(7, 0.2 + 0.01 * t, rng);
    for (PatternId p : checked) {
      const auto w = find_induced(g, p);
      EXPECT_EQ(w.has_value(), contains_reference(g, p)) << pattern_name(p);
      if (w) EXPECT_TRUE(induces(g, *w, p));
    }
  }
}

TEST(Cluster, Examples) {
  // K3 + K1
  const auto g = graph_of(4, {{1, 2}, {2, 3}, {1, 3}});
  const VertexSet all{0, 1, 2, 3};
  const auto c = is_cluster(g, all);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (std::vector<VertexSet>{{0, 1, 2}, {3}}));
  const VertexSet p3{0, 1, 2};
  EXPECT_FALSE(is_cluster(path_graph(3), p3));
  const auto empty = is_cluster(g, VertexSet{});
  ASSERT_TRUE(empty.has_value());
  EXPECT_TRUE(empty->empty());
}

TEST(CoConnected, Examples) {
  EXPECT_TRUE(is_co_connected(path_graph(4)));
  EXPECT_FALSE(is_co_connected(testing::complete_graph(3)));
  EXPECT_TRUE(is_co_connected(cycle_graph(5)));
}

TEST(CoComponents, MatchComplementComponents) {
  testing::Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    const auto g = testing::random_graph(9, 0.6, rng);
    VertexSet all(9);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(co_components_within(g, all), connected_components(complement(g)));
  }
}

}  // namespace
}  // namespace effdom
