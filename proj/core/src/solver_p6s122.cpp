#include "effdom/solver_p6s122.hpp"

#include <limits>

#include "marks.hpp"
#include "solver_common.hpp"

namespace effdom {

ProcedureResult candidate_p6s122(const WeightedGraph& g, Vertex anchor,
                                 const DistanceLevels& levels) {
  const Vertex v = anchor;
  if (!levels.empty_at(5)) {
    return OutsideClass{make_evidence(g, PatternId::P6, shortest_path(g, v, levels.at(5)[0]))};
  }
  const auto n3 = levels.at(3);
  const auto n4 = levels.at(4);
  const bool has_n4 = !n4.empty();

  // M: vertices of N3 adjacent to all of N4.
  std::vector<char> in_m(static_cast<std::size_t>(g.order()), 0);
  if (has_n4) {
    bool any = false;
    for (Vertex x : n3) {
      std::size_t seen = 0;
      for (Vertex u : g.neighbors(x)) seen += levels.level(u) == 4;
      if (seen == n4.size()) in_m[x] = 1, any = true;
    }
    if (!any) return Unsuccessful{};
  }

  const auto comps = components_within(g, n3);
  std::vector<int> comp_of(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (Vertex u : comps[i]) comp_of[u] = static_cast<int>(i);
  }

  // The D-vertex of a component dominates every N2 vertex touching it, so
  // only universal vertices seeing all of those are eligible.
  detail::Marks touching(static_cast<std::size_t>(g.order()));
  std::vector<Vertex> best_plain(comps.size(), -1);
  std::vector<Vertex> best_m(comps.size(), -1);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const VertexSet u = universal_in(g, comps[i]);
    if (u.empty()) return Unsuccessful{};
    touching.clear();
    std::size_t touch_count = 0;
    for (Vertex q : comps[i]) {
      for (Vertex x : g.neighbors(q)) {
        if (levels.level(x) == 2 && !touching.test(x)) {
          touching.set(x);
          ++touch_count;
        }
      }
    }
    for (Vertex c : u) {
      std::size_t seen = 0;
      bool sees_n4 = false;
      for (Vertex x : g.neighbors(c)) {
        seen += levels.level(x) == 2;
        sees_n4 = sees_n4 || levels.level(x) == 4;
      }
      if (seen != touch_count) continue;
      if (in_m[c]) {
        if (detail::lighter(g, c, best_m[i])) best_m[i] = c;
      } else if (!sees_n4) {
        if (detail::lighter(g, c, best_plain[i])) best_plain[i] = c;
      }
    }
  }

  VertexSet d{v};
  if (!has_n4) {
    for (Vertex c : best_plain) {
      if (c < 0) return Unsuccessful{};
      d.push_back(c);
    }
    return Candidate{std::move(d)};
  }

  // Exactly one component supplies the vertex dominating N4.
  int missing = -1;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (best_plain[i] >= 0) continue;
    if (missing >= 0) return Unsuccessful{};
    missing = static_cast<int>(i);
  }
  int pick = missing;
  if (pick >= 0) {
    if (best_m[pick] < 0) return Unsuccessful{};
  } else {
    long long best_delta = std::numeric_limits<long long>::max();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (best_m[i] < 0) continue;
      const long long delta = static_cast<long long>(g.weight(best_m[i])) -
                              static_cast<long long>(g.weight(best_plain[i]));
      if (delta < best_delta) best_delta = delta, pick = static_cast<int>(i);
    }
    if (pick < 0) return Unsuccessful{};
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    d.push_back(static_cast<int>(i) == pick ? best_m[i] : best_plain[i]);
  }
  return Candidate{std::move(d)};
}

}  // namespace effdom
