#include "effdom/solver_p5.hpp"

#include <algorithm>
#include <stdexcept>

#include "effdom/cotree.hpp"
#include "marks.hpp"
#include "solver_common.hpp"

namespace effdom {

ProcedureResult candidate_p5(const WeightedGraph& g, Vertex anchor, const DistanceLevels& levels) {
  const Vertex v = anchor;
  if (!levels.empty_at(4)) {
    return OutsideClass{make_evidence(g, PatternId::P5, shortest_path(g, v, levels.at(4)[0]))};
  }
  const auto n3 = levels.at(3);
  const auto comps = components_within(g, n3);
  std::vector<int> comp_of(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (Vertex u : comps[i]) comp_of[u] = static_cast<int>(i);
  }

  std::vector<int> seen(comps.size(), 0);
  for (Vertex w : levels.at(2)) {
    std::vector<int> touched;
    for (Vertex u : g.neighbors(w)) {
      const int c = comp_of[u];
      if (c < 0) continue;
      if (seen[c]++ == 0) touched.push_back(c);
    }
    int full = 0;
    for (int c : touched) {
      const auto size = static_cast<int>(comps[c].size());
      if (seen[c] != size) {
        // Some edge of the component runs from a neighbor of w to a non-neighbor.
        for (Vertex y : comps[c]) {
          if (!g.adjacent(w, y)) continue;
          for (Vertex z : g.neighbors(y)) {
            if (comp_of[z] == c && !g.adjacent(w, z)) {
              const Vertex w1 = detail::neighbor_at_level(g, levels, w, 1);
              return OutsideClass{make_evidence(g, PatternId::P5, {v, w1, w, y, z})};
            }
          }
        }
        throw std::logic_error("partial component without a boundary edge");
      }
      ++full;
    }
    for (int c : touched) seen[c] = 0;
    if (full != 1) return Unsuccessful{};
  }

  VertexSet d{v};
  for (const auto& comp : comps) {
    const VertexSet u = universal_in(g, comp);
    if (u.empty()) return Unsuccessful{};
    d.push_back(detail::lightest(g, u));
  }
  return Candidate{std::move(d)};
}

Outcome solve_p5_square(const WeightedGraph& g) {
  const WeightedGraph h = square(g);
  const auto tree = is_cograph(h);
  if (!tree) {
    if (auto w = find_induced(g, PatternId::P5)) {
      return Outcome::not_in_class(make_evidence(g, PatternId::P5, std::move(*w)));
    }
    return Outcome::no_ed();
  }
  std::vector<WeightSum> coverage(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) coverage[v] = static_cast<WeightSum>(g.degree(v)) + 1;
  CoverageSet best = cograph_max_coverage(*tree, coverage, g.weights());
  if (best.coverage != static_cast<WeightSum>(g.order())) return Outcome::no_ed();
  std::sort(best.vertices.begin(), best.vertices.end());
  if (!is_efficient_dominating(g, best.vertices)) {
    throw std::logic_error("square certificate produced a non-efficient set");
  }
  return Outcome::solved(Solution{std::move(best.vertices), best.weight});
}

}  // namespace effdom
