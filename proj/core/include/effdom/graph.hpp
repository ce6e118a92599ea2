#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace effdom {

using Vertex = std::int32_t;
using Weight = std::uint32_t;
// Sums of vertex weights. Wider than Weight so that adding n weights never
// overflows for any graph that fits in memory.
using WeightSum = std::uint64_t;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph with natural-number vertex weights.
//
// Vertices are 0..order()-1. Adjacency lists are sorted, symmetric, free of
// self-loops and duplicates; the constructor enforces this and throws
// std::invalid_argument otherwise. Instances are immutable.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Weights default to 1 when `weights` is empty.
  WeightedGraph(std::vector<std::vector<Vertex>> adjacency,
                std::vector<Weight> weights = {});

  static WeightedGraph from_edges(int n, std::span<const Edge> edges,
                                  std::vector<Weight> weights = {});

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  Weight weight(Vertex v) const { return weights_[v]; }
  std::span<const Weight> weights() const { return weights_; }
  WeightSum weight_of(std::span<const Vertex> vertices) const;

  std::vector<Edge> edges() const;
  WeightedGraph with_weights(std::vector<Weight> weights) const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Weight> weights_;
  std::size_t edge_count_ = 0;
};

// BFS layering around an anchor. levels[0] = {anchor}; level_of[v] is the
// distance from the anchor or kUnreachable.
struct DistanceLevels {
  static constexpr int kUnreachable = -1;

  Vertex anchor = 0;
  std::vector<int> level_of;
  std::vector<VertexSet> levels;

  // Empty span for i beyond the eccentricity of the anchor.
  std::span<const Vertex> at(std::size_t i) const {
    if (i >= levels.size()) return {};
    return levels[i];
  }
  bool empty_at(std::size_t i) const { return at(i).empty(); }
  int level(Vertex v) const { return level_of[v]; }
};

struct InducedSubgraph {
  WeightedGraph graph;
  // Maps subgraph vertex ids back to ids of the parent graph.
  std::vector<Vertex> to_parent;
};

DistanceLevels distance_levels(const WeightedGraph& g, Vertex anchor);

// Same vertices and weights; uv is an edge iff 1 <= dist(u, v) <= 2.
WeightedGraph square(const WeightedGraph& g);

// Components as sorted vertex lists, ordered by smallest member.
std::vector<VertexSet> connected_components(const WeightedGraph& g);

// Components of the induced subgraph G[subset], reported in parent ids, each
// sorted and ordered by smallest member.
std::vector<VertexSet> components_within(const WeightedGraph& g,
                                         std::span<const Vertex> subset);

bool is_connected(const WeightedGraph& g);

// Universal vertices of G[subset]: u in subset with subset \ {u} in N(u).
VertexSet universal_in(const WeightedGraph& g, std::span<const Vertex> subset);

bool is_simplicial(const WeightedGraph& g, Vertex v);
bool is_clique(const WeightedGraph& g, std::span<const Vertex> subset);
bool is_independent(const WeightedGraph& g, std::span<const Vertex> subset);

InducedSubgraph induced_subgraph(const WeightedGraph& g,
                                 std::span<const Vertex> vertices);

// Shortest path anchor -> target read off BFS parents; always an induced path.
VertexSet shortest_path(const WeightedGraph& g, Vertex from, Vertex to);

WeightedGraph complement(const WeightedGraph& g);

// Disjoint union; vertices of `b` are shifted by a.order().
WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b);

// Tie-break used wherever solvers and oracles compare candidate sets: lower
// total weight wins, then the lexicographically smaller sorted vertex list.
// Oracles return the global minimum under this order; class solvers only
// guarantee minimum weight.
bool precedes(WeightSum weight_a, const VertexSet& a, WeightSum weight_b,
              const VertexSet& b);

}  // namespace effdom
