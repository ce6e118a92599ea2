#include "effdom/solver_2p3s122.hpp"

#include <memory>
#include <mutex>
#include <optional>

#include "marks.hpp"
#include "solver_common.hpp"

namespace effdom {
namespace {

// Whole-graph witness search, run at most once per graph.
struct WitnessCache {
  std::once_flag once;
  std::optional<Evidence> evidence;

  const std::optional<Evidence>& get(const WeightedGraph& g) {
    std::call_once(once, [&] { evidence = find_any(g, {PatternId::TwoP3, PatternId::S122}); });
    return evidence;
  }
};

// Some induced P3 of G[subset]; requires that one exists.
VertexSet p3_within(const WeightedGraph& g, std::span<const Vertex> subset) {
  detail::Marks inside(static_cast<std::size_t>(g.order()));
  inside.set_all(subset);
  for (Vertex q : subset) {
    for (Vertex p : g.neighbors(q)) {
      if (!inside.test(p)) continue;
      for (Vertex r : g.neighbors(q)) {
        if (r > p && inside.test(r) && !g.adjacent(p, r)) return {p, q, r};
      }
    }
  }
  throw std::logic_error("no induced P3 in a non-cluster subgraph");
}

VertexSet levels_union(const DistanceLevels& levels, std::size_t from, std::size_t to) {
  VertexSet out;
  for (std::size_t i = from; i <= to; ++i) {
    auto l = levels.at(i);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

// One vertex per clique: most N2 neighbors, then lightest, then smallest id.
VertexSet pick_per_clique(const WeightedGraph& g, const DistanceLevels& levels,
                          const std::vector<VertexSet>& cliques) {
  VertexSet d{levels.anchor};
  for (const auto& q : cliques) {
    Vertex best = -1;
    int best_cov = -1;
    for (Vertex u : q) {
      int cov = 0;
      for (Vertex x : g.neighbors(u)) cov += levels.level(x) == 2;
      if (cov > best_cov || (cov == best_cov && detail::lighter(g, u, best))) {
        best = u;
        best_cov = cov;
      }
    }
    d.push_back(best);
  }
  return d;
}

std::optional<Vertex> nonadjacent_pair_in_n1(const WeightedGraph& g, const DistanceLevels& levels,
                                             Vertex& other) {
  const auto n1 = levels.at(1);
  for (std::size_t i = 0; i < n1.size(); ++i) {
    for (std::size_t j = i + 1; j < n1.size(); ++j) {
      if (!g.adjacent(n1[i], n1[j])) {
        other = n1[j];
        return n1[i];
      }
    }
  }
  return std::nullopt;
}

// Complement of G[subset] is bipartite.
bool co_bipartite(const WeightedGraph& g, std::span<const Vertex> subset) {
  const std::size_t k = subset.size();
  std::vector<int> color(k, -1);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < k; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < k; ++b) {
        if (b == a || g.adjacent(subset[a], subset[b])) continue;
        if (color[b] < 0) {
          color[b] = 1 - color[a];
          stack.push_back(b);
        } else if (color[b] == color[a]) {
          return false;
        }
      }
    }
  }
  return true;
}

ProcedureResult run(const WeightedGraph& g, const DistanceLevels& levels, WitnessCache& cache) {
  const Vertex v = levels.anchor;
  if (levels.empty_at(2)) return Candidate{{v}};
  if (!levels.empty_at(6)) {
    const VertexSet p = shortest_path(g, v, levels.at(6)[0]);
    return OutsideClass{
        make_evidence(g, PatternId::TwoP3, {p[0], p[1], p[2], p[4], p[5], p[6]})};
  }

  Vertex b = -1;
  if (auto a = nonadjacent_pair_in_n1(g, levels, b)) {
    const VertexSet r = levels_union(levels, 3, 5);
    if (r.empty()) return Unsuccessful{};
    auto cliques = is_cluster(g, r);
    if (!cliques) {
      const VertexSet p = p3_within(g, r);
      return OutsideClass{make_evidence(g, PatternId::TwoP3, {*a, v, b, p[0], p[1], p[2]})};
    }
    return Candidate{pick_per_clique(g, levels, *cliques)};
  }

  const auto n2 = levels.at(2);
  const auto n3 = levels.at(3);
  if (!levels.empty_at(4)) {
    // A single N3 vertex adjacent to all of N2 and N3 and to nothing in N4.
    Vertex u = -1;
    for (Vertex c : n3) {
      std::size_t s2 = 0, s3 = 0;
      bool sees_n4 = false;
      for (Vertex x : g.neighbors(c)) {
        s2 += levels.level(x) == 2;
        s3 += levels.level(x) == 3;
        sees_n4 = sees_n4 || levels.level(x) == 4;
      }
      if (s2 == n2.size() && s3 + 1 == n3.size() && !sees_n4 && detail::lighter(g, c, u)) u = c;
    }
    if (u < 0) return Unsuccessful{true};
    const VertexSet far = levels_union(levels, 4, 5);
    auto cliques = is_cluster(g, far);
    if (!cliques) {
      const VertexSet p = p3_within(g, far);
      const Vertex y = n2[0];
      const Vertex x = detail::neighbor_at_level(g, levels, y, 1);
      return OutsideClass{make_evidence(g, PatternId::TwoP3, {v, x, y, p[0], p[1], p[2]})};
    }
    VertexSet d{v, u};
    for (const auto& q : *cliques) {
      Vertex best = -1;
      for (Vertex c : q) {
        if (levels.level(c) == 5 && detail::lighter(g, c, best)) best = c;
      }
      if (best < 0) return Unsuccessful{};
      d.push_back(best);
    }
    return Candidate{std::move(d)};
  }

  if (auto cliques = is_cluster(g, n3)) return Candidate{pick_per_clique(g, levels, *cliques)};

  if (co_bipartite(g, n3)) {
    // At most two D-vertices in N3, jointly covering N2 and N3 exactly once.
    std::vector<std::size_t> c2(n3.size(), 0), c3(n3.size(), 0);
    for (std::size_t i = 0; i < n3.size(); ++i) {
      for (Vertex x : g.neighbors(n3[i])) {
        c2[i] += levels.level(x) == 2;
        c3[i] += levels.level(x) == 3;
      }
    }
    std::optional<Solution> best;
    auto consider = [&](VertexSet d) {
      std::sort(d.begin(), d.end());
      if (!is_efficient_dominating(g, d)) return;
      const WeightSum w = g.weight_of(d);
      if (!best || precedes(w, d, best->weight, best->vertices)) best = Solution{std::move(d), w};
    };
    for (std::size_t i = 0; i < n3.size(); ++i) {
      if (c2[i] == n2.size() && c3[i] + 1 == n3.size()) consider({v, n3[i]});
      for (std::size_t j = i + 1; j < n3.size(); ++j) {
        if (c2[i] + c2[j] != n2.size() || c3[i] + c3[j] + 2 != n3.size()) continue;
        if (g.adjacent(n3[i], n3[j])) continue;
        consider({v, n3[i], n3[j]});
      }
    }
    if (!best) return Unsuccessful{};
    return Candidate{std::move(best->vertices)};
  }

  if (const auto& e = cache.get(g)) return OutsideClass{*e};
  return Unsuccessful{true};
}

}  // namespace

ProcedureResult candidate_2p3s122(const WeightedGraph& g, Vertex anchor,
                                  const DistanceLevels& levels) {
  WitnessCache cache;
  (void)anchor;
  return run(g, levels, cache);
}

CandidateProcedure make_2p3s122_procedure(const WeightedGraph& g) {
  (void)g;
  auto cache = std::make_shared<WitnessCache>();
  return [cache](const WeightedGraph& h, Vertex, const DistanceLevels& levels) {
    return run(h, levels, *cache);
  };
}

}  // namespace effdom
