#include "effdom/solver_p2p4.hpp"

#include <algorithm>
#include <limits>

#include "effdom/cotree.hpp"
#include "marks.hpp"
#include "solver_common.hpp"

namespace effdom {
namespace {

// Used where the local argument cannot name a witness: a whole-graph search
// either finds one or shows the branch is a genuine dead end.
ProcedureResult fallback(const WeightedGraph& g) {
  if (auto e = find_any(g, {PatternId::P2P4})) return OutsideClass{std::move(*e)};
  return Unsuccessful{true};
}

class Anchor {
 public:
  Anchor(const WeightedGraph& g, const DistanceLevels& levels)
      : g_(g), lv_(levels), n2_(levels.at(2)), mark_(static_cast<std::size_t>(g.order())) {}

  ProcedureResult run();

 private:
  int level(Vertex u) const { return lv_.level(u); }
  int n2_degree(Vertex u) const {
    int c = 0;
    for (Vertex x : g_.neighbors(u)) c += level(x) == 2;
    return c;
  }
  // Unique vertex of U_i missed by x, -1 if x sees all of it, -2 if several.
  Vertex miss_of(Vertex x, int i) const {
    Vertex found = -1;
    for (Vertex u : uni_[i]) {
      if (g_.adjacent(x, u)) continue;
      if (found >= 0) return -2;
      found = u;
    }
    return found;
  }
  Vertex some_n2_neighbor(Vertex u) const {
    for (Vertex x : g_.neighbors(u)) {
      if (level(x) == 2) return x;
    }
    return -1;
  }
  ProcedureResult finish(VertexSet picks) const {
    VertexSet d{lv_.anchor};
    d.insert(d.end(), picks.begin(), picks.end());
    d.insert(d.end(), forced_.begin(), forced_.end());
    return Candidate{std::move(d)};
  }
  ProcedureResult too_many_misses(Vertex x, int i);
  ProcedureResult step_k(Vertex x, int i);
  ProcedureResult step_l(const std::vector<int>& free_idx);

  const WeightedGraph& g_;
  const DistanceLevels& lv_;
  std::span<const Vertex> n2_;
  detail::Marks mark_;
  std::vector<VertexSet> comp_;  // components of G[R] with a universal vertex in N3
  std::vector<VertexSet> uni_;   // their universal vertices
  VertexSet forced_;             // one vertex per remaining component
};

ProcedureResult Anchor::run() {
  const Vertex v = lv_.anchor;
  if (n2_.empty()) return Candidate{{v}};
  if (!lv_.empty_at(6)) {
    const VertexSet p = shortest_path(g_, v, lv_.at(6)[0]);
    return OutsideClass{make_evidence(g_, PatternId::P2P4, {p[0], p[1], p[3], p[4], p[5], p[6]})};
  }
  VertexSet r;
  for (int i = 3; i <= 5; ++i) {
    auto l = lv_.at(static_cast<std::size_t>(i));
    r.insert(r.end(), l.begin(), l.end());
  }
  const InducedSubgraph sub = induced_subgraph(g_, r);
  if (!is_cograph(sub.graph)) {
    const VertexSet p = *find_induced(sub.graph, PatternId::P4);
    const Vertex w = lv_.at(1)[0];
    return OutsideClass{make_evidence(g_, PatternId::P2P4,
                                      {v, w, sub.to_parent[p[0]], sub.to_parent[p[1]],
                                       sub.to_parent[p[2]], sub.to_parent[p[3]]})};
  }

  const auto comps = components_within(g_, r);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& q = comps[ci];
    VertexSet u = universal_in(g_, q);
    const bool anchored = std::any_of(u.begin(), u.end(), [&](Vertex y) { return level(y) == 3; });
    if (anchored) {
      comp_.push_back(q);
      uni_.push_back(std::move(u));
      continue;
    }
    if (u.empty()) return Unsuccessful{};
    const auto deep = std::count_if(q.begin(), q.end(), [&](Vertex y) { return level(y) == 4; });
    if (deep > 1) {
      if (comps.size() == 1) return Unsuccessful{};
      // Edge u-w deep inside Q plus a path v-a-b-c into another component.
      const Vertex uu = u.front();
      Vertex w = -1;
      for (Vertex y : q) {
        if (y != uu && level(y) == 4) { w = y; break; }
      }
      const auto& other = comps[ci == 0 ? 1 : 0];
      Vertex c = -1;
      for (Vertex y : other) {
        if (level(y) == 3) { c = y; break; }
      }
      const Vertex b = detail::neighbor_at_level(g_, lv_, c, 2);
      const Vertex a = detail::neighbor_at_level(g_, lv_, b, 1);
      return OutsideClass{make_evidence(g_, PatternId::P2P4, {uu, w, v, a, b, c})};
    }
    forced_.push_back(detail::lightest(g_, u));
  }

  const int k = static_cast<int>(comp_.size());
  if (k == 0) return Unsuccessful{};
  const std::size_t all = n2_.size();

  if (k == 1) {
    Vertex best = -1;
    for (Vertex y : uni_[0]) {
      if (static_cast<std::size_t>(n2_degree(y)) == all && detail::lighter(g_, y, best)) best = y;
    }
    if (best < 0) return Unsuccessful{};
    return finish({best});
  }

  // n_i(x) for every x in N2, one index at a time.
  std::vector<int> cnt(static_cast<std::size_t>(g_.order()), 0);
  Vertex sees_all_x = -1;
  int sees_all_i = -1;
  for (int i = 0; i < k; ++i) {
    for (Vertex x : n2_) cnt[x] = 0;
    for (Vertex y : uni_[i]) {
      for (Vertex x : g_.neighbors(y)) {
        if (level(x) == 2) ++cnt[x];
      }
    }
    const int size = static_cast<int>(uni_[i].size());
    for (Vertex x : n2_) {
      if (cnt[x] < size - 1) return too_many_misses(x, i);
      if (cnt[x] == size && sees_all_x < 0) sees_all_x = x, sees_all_i = i;
    }
  }

  // z_i: the vertex of U_i without N2 neighbors (it lies in N4).
  std::vector<Vertex> z(static_cast<std::size_t>(k), -1);
  int z_count = 0;
  for (int i = 0; i < k; ++i) {
    for (Vertex y : uni_[i]) {
      if (n2_degree(y) == 0) {
        z[i] = y;
        ++z_count;
        break;
      }
    }
  }

  if (z_count == k) {
    long long best_delta = std::numeric_limits<long long>::max();
    int bi = -1;
    Vertex by = -1;
    for (int i = 0; i < k; ++i) {
      for (Vertex y : uni_[i]) {
        if (y == z[i]) continue;
        const long long delta =
            static_cast<long long>(g_.weight(y)) - static_cast<long long>(g_.weight(z[i]));
        if (delta < best_delta || (delta == best_delta && y < by)) {
          best_delta = delta;
          bi = i;
          by = y;
        }
      }
    }
    if (bi < 0) return Unsuccessful{};
    VertexSet picks{by};
    for (int i = 0; i < k; ++i) {
      if (i != bi) picks.push_back(z[i]);
    }
    return finish(std::move(picks));
  }

  if (z_count == k - 1) {
    VertexSet picks;
    Vertex best = -1;
    for (int i = 0; i < k; ++i) {
      if (z[i] >= 0) {
        picks.push_back(z[i]);
        continue;
      }
      for (Vertex y : uni_[i]) {
        if (static_cast<std::size_t>(n2_degree(y)) == all && detail::lighter(g_, y, best)) best = y;
      }
    }
    if (best < 0) return Unsuccessful{};
    picks.push_back(best);
    return finish(std::move(picks));
  }

  if (sees_all_x >= 0) return step_k(sees_all_x, sees_all_i);

  std::vector<int> free_idx;
  for (int i = 0; i < k; ++i) {
    if (z[i] < 0) free_idx.push_back(i);
  }
  return step_l(free_idx);
}

// x misses two vertices z1, z2 of U_i. If some N2 vertex seeing another U_j
// avoids both, z1 z2 plus v-w-x'-y is an induced P2+P4.
ProcedureResult Anchor::too_many_misses(Vertex x, int i) {
  Vertex z1 = -1, z2 = -1;
  for (Vertex u : uni_[i]) {
    if (g_.adjacent(x, u)) continue;
    (z1 < 0 ? z1 : z2) = u;
    if (z2 >= 0) break;
  }
  for (std::size_t j = 0; j < uni_.size(); ++j) {
    if (static_cast<int>(j) == i) continue;
    for (Vertex y : uni_[j]) {
      for (Vertex x2 : g_.neighbors(y)) {
        if (level(x2) != 2 || g_.adjacent(x2, z1) || g_.adjacent(x2, z2)) continue;
        const Vertex w = detail::neighbor_at_level(g_, lv_, x2, 1);
        return OutsideClass{make_evidence(g_, PatternId::P2P4, {z1, z2, lv_.anchor, w, x2, y})};
      }
    }
  }
  return fallback(g_);
}

// x sees all of U_i: the D-vertex of every other U_j is x's non-neighbor
// there, and U_i must cover whatever part of N2 those leave.
ProcedureResult Anchor::step_k(Vertex x, int i) {
  const int k = static_cast<int>(uni_.size());
  VertexSet picks;
  mark_.clear();
  std::size_t covered = 0;
  for (int j = 0; j < k; ++j) {
    if (j == i) continue;
    const Vertex y = miss_of(x, j);
    if (y < 0) return Unsuccessful{};
    picks.push_back(y);
    for (Vertex w : g_.neighbors(y)) {
      if (level(w) == 2 && !mark_.test(w)) {
        mark_.set(w);
        ++covered;
      }
    }
  }
  const std::size_t need = n2_.size() - covered;
  Vertex best = -1;
  for (Vertex y : uni_[i]) {
    std::size_t own = 0;
    bool clash = false;
    for (Vertex w : g_.neighbors(y)) {
      if (level(w) != 2) continue;
      ++own;
      clash = clash || mark_.test(w);
    }
    if (!clash && own == need && detail::lighter(g_, y, best)) best = y;
  }
  if (best < 0) return Unsuccessful{};
  picks.push_back(best);
  return finish(std::move(picks));
}

// Every N2 vertex misses exactly one vertex of each U_i. Locate x, x' and
// a, b in U_i, c, d in U_j with x ~ a, c and x' ~ b, d; then D holds a, d
// or b, c.
ProcedureResult Anchor::step_l(const std::vector<int>& free_idx) {
  if (free_idx.size() < 2) return Unsuccessful{};
  const int i = free_idx[0];
  const int j = free_idx[1];
  const Vertex w = n2_[0];
  const Vertex y1 = miss_of(w, i);
  if (y1 < 0) return Unsuccessful{};
  const Vertex w1 = some_n2_neighbor(y1);
  if (w1 < 0) return Unsuccessful{};
  const Vertex y1p = miss_of(w1, i);
  const Vertex y2 = miss_of(w, j);
  const Vertex y2p = miss_of(w1, j);
  if (y1p < 0 || y2 < 0 || y2p < 0) return Unsuccessful{};

  Vertex x, xp, a, b, c, d;
  if (y2 != y2p) {
    x = w, xp = w1, a = y1p, b = y1, c = y2p, d = y2;
  } else {
    const Vertex w2 = some_n2_neighbor(y2);
    if (w2 < 0) return Unsuccessful{};
    const Vertex y1pp = miss_of(w2, i);
    const Vertex y2pp = miss_of(w2, j);
    if (y1pp < 0 || y2pp < 0) return Unsuccessful{};
    if (y1pp != y1) {
      x = w, xp = w2, a = y1pp, b = y1, c = y2pp, d = y2;
    } else {
      x = w1, xp = w2, a = y1pp, b = y1p, c = y2pp, d = y2;
    }
  }

  VertexSet rest;
  for (int r = 0; r < static_cast<int>(uni_.size()); ++r) {
    if (r == i || r == j) continue;
    const Vertex m1 = miss_of(x, r);
    if (m1 < 0 || m1 != miss_of(xp, r)) return Unsuccessful{};
    rest.push_back(m1);
  }

  std::optional<Solution> best;
  for (auto [p, q] : {std::pair{a, d}, std::pair{b, c}}) {
    VertexSet s{lv_.anchor, p, q};
    s.insert(s.end(), rest.begin(), rest.end());
    s.insert(s.end(), forced_.begin(), forced_.end());
    std::sort(s.begin(), s.end());
    if (!is_efficient_dominating(g_, s)) continue;
    const WeightSum wt = g_.weight_of(s);
    if (!best || precedes(wt, s, best->weight, best->vertices)) best = Solution{std::move(s), wt};
  }
  if (!best) return Unsuccessful{};
  return Candidate{std::move(best->vertices)};
}

}  // namespace

ProcedureResult candidate_p2p4(const WeightedGraph& g, Vertex anchor, const DistanceLevels& levels) {
  (void)anchor;
  return Anchor(g, levels).run();
}

}  // namespace effdom
