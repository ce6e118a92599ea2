#pragma once

#include <span>
#include <stdexcept>

#include "effdom/graph.hpp"

namespace effdom::detail {

// Minimum weight, then minimum id.
inline Vertex lightest(const WeightedGraph& g, std::span<const Vertex> vs) {
  Vertex best = -1;
  for (Vertex u : vs) {
    if (best < 0 || g.weight(u) < g.weight(best) || (g.weight(u) == g.weight(best) && u < best)) {
      best = u;
    }
  }
  return best;
}

inline bool lighter(const WeightedGraph& g, Vertex a, Vertex b) {
  return b < 0 || g.weight(a) < g.weight(b) || (g.weight(a) == g.weight(b) && a < b);
}

// Smallest neighbor of u on the given level; throws if there is none.
inline Vertex neighbor_at_level(const WeightedGraph& g, const DistanceLevels& levels, Vertex u,
                                int level) {
  for (Vertex w : g.neighbors(u)) {
    if (levels.level(w) == level) return w;
  }
  throw std::logic_error("vertex has no neighbor on the requested level");
}

}  // namespace effdom::detail
