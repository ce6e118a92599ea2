#pragma once

#include <optional>
#include <span>
#include <vector>

#include "effdom/graph.hpp"

namespace effdom {

struct Cotree {
  enum class Kind { Leaf, Union, Join };
  struct Node {
    Kind kind = Kind::Leaf;
    Vertex vertex = -1;         // leaves only
    std::vector<int> children;  // internal nodes only, >= 2 entries
  };
  std::vector<Node> nodes;
  int root = -1;  // -1 for the empty graph
};

// Cotree of G if G is P4-free. Recursive decomposition into components and
// co-components; O(n (n + m)) in the worst case.
std::optional<Cotree> is_cograph(const WeightedGraph& g);

struct WeightedSet {
  VertexSet vertices;
  WeightSum weight = 0;
};

// Maximum weight independent set of the cograph encoded by `tree`.
// Zero-weight vertices are left out.
WeightedSet cograph_mwis(const Cotree& tree, std::span<const Weight> weights);

struct CoverageSet {
  VertexSet vertices;
  WeightSum coverage = 0;
  WeightSum weight = 0;
};

// Independent set maximizing total coverage; among those, minimizing total
// weight.
CoverageSet cograph_max_coverage(const Cotree& tree,
                                 std::span<const WeightSum> coverage,
                                 std::span<const Weight> weights);

}  // namespace effdom
