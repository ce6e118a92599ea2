#pragma once

#include <vector>

#include "effdom/framework.hpp"

namespace effdom {

// Host graph plus a candidate set X whose members have degree <= 2.
struct XInstance {
  WeightedGraph graph;
  VertexSet x;
};

// Multigraph on Y = V - X with one edge per matching edge of an irreducible
// instance. A matching edge whose endpoints see two distinct Y vertices
// joins them; one whose endpoints see a single Y vertex becomes a loop.
struct ConflictMultigraph {
  struct Arc {
    int a = 0;             // index into `vertices`
    int b = 0;             // == a for loops
    Vertex near_a = -1;    // matching endpoint adjacent to vertices[a]
    Vertex near_b = -1;    // the other endpoint (no Y neighbor for loops)
  };
  VertexSet vertices;  // host ids of Y, sorted
  std::vector<Arc> edges;

  bool is_loop(std::size_t e) const { return edges[e].a == edges[e].b; }
};

// out_edge[i]: index of the edge leaving vertex i.
struct Orientation {
  std::vector<int> out_edge;
};

// All orientations with out-degree exactly one everywhere. H must be
// connected (std::invalid_argument otherwise). Empty unless |E| == |V|; a
// unicyclic H yields two, or one when its cycle is a loop.
std::vector<Orientation> one_orientations(const ConflictMultigraph& h);

// Requires an irreducible instance: every X vertex lies on a two-vertex
// component of G[X], Y is independent, and no matching edge has both ends
// on the same Y vertex. Throws std::invalid_argument otherwise.
ConflictMultigraph build_conflict_multigraph(const XInstance& inst);

// Minimum-weight e.d. contained in X, or NoEd. Works on any host; cycle
// components consisting of X vertices only are handled directly.
Outcome solve_x_restricted(const XInstance& inst);

// Minimum-weight e.d. all of whose members have degree <= k, k in {0, 1, 2}.
// Throws std::invalid_argument for other k.
Outcome solve_kbwed(const WeightedGraph& g, int k);

}  // namespace effdom
