#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "effdom/framework.hpp"
#include "effdom/graph.hpp"

namespace effdom {

struct ModularPartition {
  // Maximal homogeneous sets, each sorted, ordered by smallest member.
  std::vector<VertexSet> sets;
  // in_set[v]: v belongs to one of `sets`.
  std::vector<bool> in_set;
};

// Requires g connected and co-connected (throws std::invalid_argument
// otherwise). Iterated partition refinement, O(n (n + m)) worst case.
ModularPartition maximal_homogeneous_sets(const WeightedGraph& g);

struct CharacteristicGraph {
  WeightedGraph graph;
  // represents[i]: original vertices contracted into vertex i of `graph`;
  // the representative is represents[i].front(), the smallest id.
  std::vector<VertexSet> represents;
};

CharacteristicGraph characteristic_graph(const WeightedGraph& g);
CharacteristicGraph characteristic_graph(const WeightedGraph& g, const ModularPartition& mp);

struct SpiderPartition {
  VertexSet clique;       // sorted
  VertexSet independent;  // independent[i] is the private neighbor of clique[i]
};

// Thin spider test in O(n + m). For K2 the smaller id goes to the clique side.
std::optional<SpiderPartition> is_thin_spider(const WeightedGraph& g);

// Requires g connected. Single vertex graphs are solved trivially.
Outcome solve_2p2(const WeightedGraph& g);

}  // namespace effdom
