#include "effdom/bounded.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace effdom {
namespace {

// Mutable working copy used by the reductions. Ids are local; orig maps
// back to the caller's graph.
struct Work {
  std::vector<std::vector<int>> adj;
  std::vector<WeightSum> w;
  std::vector<char> in_x;
  std::vector<Vertex> orig;

  int n() const { return static_cast<int>(adj.size()); }
};

Work make_work(const WeightedGraph& g, std::span<const Vertex> x) {
  Work wk;
  const int n = g.order();
  wk.adj.resize(static_cast<std::size_t>(n));
  wk.w.resize(static_cast<std::size_t>(n));
  wk.in_x.assign(static_cast<std::size_t>(n), 0);
  wk.orig.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    wk.adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    wk.w[v] = g.weight(v);
    wk.orig[v] = v;
  }
  for (Vertex v : x) {
    if (v < 0 || v >= n) throw std::invalid_argument("X contains an out-of-range vertex");
    if (g.degree(v) > 2) throw std::invalid_argument("X vertices must have degree at most 2");
    wk.in_x[v] = 1;
  }
  return wk;
}

// Keeps vertices with keep[v] set, preserving their relative order.
Work restrict(const Work& g, const std::vector<char>& keep, std::vector<int>* index = nullptr) {
  std::vector<int> to(static_cast<std::size_t>(g.n()), -1);
  Work out;
  for (int v = 0; v < g.n(); ++v) {
    if (!keep[v]) continue;
    to[v] = out.n();
    out.adj.emplace_back();
    out.w.push_back(g.w[v]);
    out.in_x.push_back(g.in_x[v]);
    out.orig.push_back(g.orig[v]);
  }
  for (int v = 0; v < g.n(); ++v) {
    if (to[v] < 0) continue;
    for (int u : g.adj[v]) {
      if (to[u] >= 0) out.adj[to[v]].push_back(to[u]);
    }
  }
  if (index) *index = std::move(to);
  return out;
}

std::vector<std::vector<int>> components(const Work& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> c{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (int u : g.adj[c[i]]) {
        if (comp[u] < 0) {
          comp[u] = comp[s];
          c.push_back(u);
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Best residue class of a cycle given in cyclic order, or nullopt if its
// length is not a multiple of three.
std::optional<VertexSet> best_cycle_class(const std::vector<int>& cyc, const Work& g) {
  if (cyc.size() % 3 != 0) return std::nullopt;
  std::optional<VertexSet> best;
  WeightSum best_w = 0;
  for (std::size_t j = 0; j < 3; ++j) {
    VertexSet s;
    WeightSum w = 0;
    for (std::size_t i = j; i < cyc.size(); i += 3) {
      s.push_back(g.orig[cyc[i]]);
      w += g.w[cyc[i]];
    }
    std::sort(s.begin(), s.end());
    if (!best || precedes(w, s, best_w, *best)) best = std::move(s), best_w = w;
  }
  return best;
}

// Cyclic order of a connected 2-regular graph.
std::vector<int> cyclic_order(const Work& g) {
  std::vector<int> cyc{0};
  int prev = -1, cur = 0;
  while (true) {
    const int next = g.adj[cur][0] != prev ? g.adj[cur][0] : g.adj[cur][1];
    if (next == 0) break;
    prev = cur;
    cur = next;
    cyc.push_back(cur);
  }
  return cyc;
}

// ---------------------------------------------------------------------------
// Conflict multigraph selection.

struct Peel {
  std::vector<int> out;  // edge each peeled vertex points along, -1 on the core
  std::vector<char> core;
};

// Repeatedly strips degree-one vertices; loops count twice. The surviving
// core of a connected unicyclic multigraph is its cycle.
Peel peel(const ConflictMultigraph& h, bool with_loops) {
  const std::size_t nv = h.vertices.size();
  std::vector<std::vector<int>> inc(nv);
  std::vector<int> deg(nv, 0);
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const auto& a = h.edges[e];
    if (a.a == a.b) {
      if (with_loops) deg[a.a] += 2;
      continue;
    }
    inc[a.a].push_back(static_cast<int>(e));
    inc[a.b].push_back(static_cast<int>(e));
    ++deg[a.a];
    ++deg[a.b];
  }
  Peel p{std::vector<int>(nv, -1), std::vector<char>(nv, 1)};
  std::vector<char> edge_gone(h.edges.size(), 0);
  std::deque<int> queue;
  for (std::size_t v = 0; v < nv; ++v) {
    if (deg[v] == 1) queue.push_back(static_cast<int>(v));
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (!p.core[v] || deg[v] != 1) continue;
    p.core[v] = 0;
    for (int e : inc[v]) {
      if (edge_gone[e]) continue;
      edge_gone[e] = 1;
      p.out[v] = e;
      const int u = h.edges[e].a == v ? h.edges[e].b : h.edges[e].a;
      --deg[v];
      if (--deg[u] == 1) queue.push_back(u);
    }
  }
  return p;
}

// The two ways round the core cycle (one if the cycle is a loop).
std::vector<std::vector<int>> orient_cycle(const ConflictMultigraph& h, const Peel& p,
                                           bool with_loops) {
  const std::size_t nv = h.vertices.size();
  std::vector<std::vector<int>> inc(nv);
  int start = -1;
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const auto& a = h.edges[e];
    if (!p.core[a.a] || !p.core[a.b]) continue;
    if (a.a == a.b) {
      if (!with_loops) continue;
      std::vector<int> out = p.out;
      out[a.a] = static_cast<int>(e);
      return {out};
    }
    inc[a.a].push_back(static_cast<int>(e));
    inc[a.b].push_back(static_cast<int>(e));
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (p.core[v]) {
      start = static_cast<int>(v);
      break;
    }
  }
  if (start < 0) return {};
  std::vector<int> forward = p.out;
  std::vector<int> backward = p.out;
  int cur = start, came = -1;
  do {
    int e = inc[cur][0] != came ? inc[cur][0] : inc[cur][1];
    const int next = h.edges[e].a == cur ? h.edges[e].b : h.edges[e].a;
    forward[cur] = e;
    backward[next] = e;
    came = e;
    cur = next;
  } while (cur != start);
  return {forward, backward};
}

bool connected(const ConflictMultigraph& h) {
  const std::size_t nv = h.vertices.size();
  if (nv == 0) return true;
  std::vector<std::vector<int>> nb(nv);
  for (const auto& a : h.edges) {
    nb[a.a].push_back(a.b);
    nb[a.b].push_back(a.a);
  }
  std::vector<char> seen(nv, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : nb[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == nv;
}

// The matching endpoint selected by vertex `a` through edge e.
Vertex near_end(const ConflictMultigraph::Arc& arc, int a) {
  return arc.a == a ? arc.near_a : arc.near_b;
}

// Turns a choice of out-edges into the dominating set: each vertex takes
// the matching endpoint next to it, every loop left unchosen contributes
// its far endpoint.
VertexSet assemble(const ConflictMultigraph& h, const std::vector<int>& out) {
  VertexSet d;
  std::vector<char> chosen(h.edges.size(), 0);
  for (std::size_t v = 0; v < out.size(); ++v) {
    chosen[out[v]] = 1;
    d.push_back(near_end(h.edges[out[v]], static_cast<int>(v)));
  }
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    if (h.is_loop(e) && !chosen[e]) d.push_back(h.edges[e].near_b);
  }
  return d;
}

// Every e.d. inside X corresponds to out-edge choices where each non-loop
// edge is chosen exactly once and each loop at most once (an unchosen loop
// means its far endpoint is in D). On a connected H that leaves two shapes:
// the loop-free part is unicyclic and no loop is chosen, or it is a tree
// and exactly one loop is chosen. Returns the candidates of least weight.
std::vector<VertexSet> cheapest_selections(const ConflictMultigraph& h,
                                           std::span<const WeightSum> w) {
  const int nv = static_cast<int>(h.vertices.size());
  std::size_t plain = 0;
  for (std::size_t e = 0; e < h.edges.size(); ++e) plain += !h.is_loop(e);

  auto cost = [&](const VertexSet& d) {
    WeightSum s = 0;
    for (Vertex x : d) s += w[x];
    return s;
  };
  auto keep_best = [&](std::vector<VertexSet> cands) {
    std::vector<VertexSet> best;
    WeightSum bw = 0;
    for (auto& c : cands) {
      const WeightSum cw = cost(c);
      if (best.empty() || cw < bw) {
        best.clear();
        bw = cw;
      }
      if (cw == bw) best.push_back(std::move(c));
    }
    return best;
  };

  if (plain == static_cast<std::size_t>(nv)) {
    const Peel p = peel(h, false);
    std::vector<VertexSet> cands;
    for (const auto& out : orient_cycle(h, p, false)) cands.push_back(assemble(h, out));
    return keep_best(std::move(cands));
  }
  if (plain + 1 != static_cast<std::size_t>(nv)) return {};

  // Tree: root it anywhere, then move the root along edges.
  std::vector<std::vector<std::pair<int, int>>> nb(static_cast<std::size_t>(nv));
  std::vector<std::vector<int>> loops(static_cast<std::size_t>(nv));
  WeightSum unchosen_loops = 0;
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const auto& a = h.edges[e];
    if (a.a == a.b) {
      loops[a.a].push_back(static_cast<int>(e));
      unchosen_loops += w[a.near_b];
    } else {
      nb[a.a].emplace_back(a.b, static_cast<int>(e));
      nb[a.b].emplace_back(a.a, static_cast<int>(e));
    }
  }
  std::vector<int> parent(static_cast<std::size_t>(nv), -1), parent_edge(static_cast<std::size_t>(nv), -1);
  std::vector<int> order{0};
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for (auto [u, e] : nb[v]) {
      if (parent[u] < 0) {
        parent[u] = v;
        parent_edge[u] = e;
        order.push_back(u);
      }
    }
  }
  if (order.size() != static_cast<std::size_t>(nv)) {
    throw std::logic_error("conflict multigraph is disconnected");
  }
  // toward[v]: weight of D restricted to tree edges when every vertex points
  // to root v.
  std::vector<WeightSum> toward(static_cast<std::size_t>(nv), 0);
  for (int v = 1; v < nv; ++v) toward[0] += w[near_end(h.edges[parent_edge[order[v]]], order[v])];
  for (std::size_t i = 1; i < order.size(); ++i) {
    const int c = order[i];
    const auto& arc = h.edges[parent_edge[c]];
    toward[c] = toward[parent[c]] - w[near_end(arc, c)] + w[near_end(arc, parent[c])];
  }
  std::optional<WeightSum> best;
  std::vector<std::pair<int, int>> ties;  // (root, loop)
  for (int r = 0; r < nv; ++r) {
    for (int e : loops[r]) {
      const WeightSum total =
          toward[r] + unchosen_loops - w[h.edges[e].near_b] + w[h.edges[e].near_a];
      if (!best || total < *best) {
        best = total;
        ties.clear();
      }
      if (total == *best) ties.emplace_back(r, e);
    }
  }
  std::vector<VertexSet> out;
  for (auto [r, loop] : ties) {
    std::vector<int> choice(static_cast<std::size_t>(nv), -1);
    choice[r] = loop;
    std::vector<int> bfs{r};
    std::vector<char> seen(static_cast<std::size_t>(nv), 0);
    seen[r] = 1;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      for (auto [u, e] : nb[bfs[i]]) {
        if (!seen[u]) {
          seen[u] = 1;
          choice[u] = e;
          bfs.push_back(u);
        }
      }
    }
    out.push_back(assemble(h, choice));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reductions.

// Y-neighbor of an X vertex, or -1.
int y_neighbor(const Work& g, int x) {
  for (int u : g.adj[x]) {
    if (!g.in_x[u]) return u;
  }
  return -1;
}

// Components of G[X] as paths, each listed from one end. Ordered by the
// smallest endpoint id at which they are first met.
std::vector<std::vector<int>> x_paths(const Work& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<std::vector<int>> paths;
  auto x_degree = [&](int v) {
    int d = 0;
    for (int u : g.adj[v]) d += g.in_x[u];
    return d;
  };
  for (int s = 0; s < g.n(); ++s) {
    if (!g.in_x[s] || seen[s] || x_degree(s) > 1) continue;
    std::vector<int> path;
    int prev = -1, cur = s;
    while (cur >= 0) {
      seen[cur] = 1;
      path.push_back(cur);
      int next = -1;
      for (int u : g.adj[cur]) {
        if (g.in_x[u] && u != prev && !seen[u]) next = u;
      }
      prev = cur;
      cur = next;
    }
    paths.push_back(std::move(path));
  }
  for (int v = 0; v < g.n(); ++v) {
    if (g.in_x[v] && !seen[v]) throw std::logic_error("G[X] has a cycle inside a larger component");
  }
  return paths;
}

ConflictMultigraph conflict_graph(const Work& g) {
  ConflictMultigraph h;
  std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (!g.in_x[v]) {
      index[v] = static_cast<int>(h.vertices.size());
      h.vertices.push_back(v);
    }
  }
  for (int x = 0; x < g.n(); ++x) {
    if (!g.in_x[x]) continue;
    int partner = -1;
    for (int u : g.adj[x]) {
      if (g.in_x[u]) {
        if (partner >= 0) throw std::invalid_argument("instance is not irreducible: long X path");
        partner = u;
      }
    }
    if (partner < 0) throw std::invalid_argument("instance is not irreducible: isolated X vertex");
    for (int u : g.adj[partner]) {
      if (g.in_x[u] && u != x) throw std::invalid_argument("instance is not irreducible: long X path");
    }
    if (partner < x) continue;
    const int ya = y_neighbor(g, x);
    const int yb = y_neighbor(g, partner);
    if (ya < 0 && yb < 0) throw std::invalid_argument("matching edge without Y neighbors");
    if (ya == yb) throw std::invalid_argument("matching edge in a triangle");
    ConflictMultigraph::Arc arc;
    if (ya >= 0 && yb >= 0) {
      arc = {index[ya], index[yb], x, partner};
    } else if (ya >= 0) {
      arc = {index[ya], index[ya], x, partner};
    } else {
      arc = {index[yb], index[yb], partner, x};
    }
    h.edges.push_back(arc);
  }
  return h;
}

class Reducer {
 public:
  explicit Reducer(int limit) : limit_(limit) {}

  std::optional<VertexSet> solve(Work g, int depth = 0) {
    if (depth > limit_) throw std::logic_error("reduction recursion did not shrink the instance");
    if (g.n() == 0) return VertexSet{};

    // Edges inside Y are useless; an isolated Y vertex is hopeless.
    for (int v = 0; v < g.n(); ++v) {
      if (g.in_x[v]) continue;
      auto& row = g.adj[v];
      row.erase(std::remove_if(row.begin(), row.end(), [&](int u) { return !g.in_x[u]; }),
                row.end());
      if (row.empty()) return std::nullopt;
    }

    // Components are independent.
    const auto comps = components(g);
    if (comps.size() > 1) {
      VertexSet all;
      for (const auto& c : comps) {
        std::vector<char> keep(static_cast<std::size_t>(g.n()), 0);
        for (int v : c) keep[v] = 1;
        auto part = solve(restrict(g, keep), depth + 1);
        if (!part) return std::nullopt;
        all.insert(all.end(), part->begin(), part->end());
      }
      return all;
    }

    if (std::all_of(g.in_x.begin(), g.in_x.end(), [](char c) { return c != 0; }) && g.n() >= 3 &&
        std::all_of(g.adj.begin(), g.adj.end(), [](const auto& r) { return r.size() == 2; })) {
      return best_cycle_class(cyclic_order(g), g);
    }

    // Nothing left to choose from.
    if (std::none_of(g.in_x.begin(), g.in_x.end(), [](char c) { return c != 0; })) {
      return VertexSet{};
    }

    const auto paths = x_paths(g);

    // A path of length 0 mod 3 must take its 2 mod 3 positions.
    for (const auto& p : paths) {
      if (p.size() % 3 != 0) continue;
      std::vector<char> keep(static_cast<std::size_t>(g.n()), 1);
      for (int v : p) keep[v] = 0;
      auto rest = solve(restrict(g, keep), depth + 1);
      if (!rest) return std::nullopt;
      for (std::size_t i = 2; i + 1 <= p.size(); i += 3) rest->push_back(g.orig[p[i - 1]]);
      return rest;
    }

    // Contract a long 2 mod 3 path onto its end edge.
    for (const auto& p : paths) {
      const std::size_t k = p.size();
      if (k % 3 != 2 || k < 5) continue;
      std::vector<char> keep(static_cast<std::size_t>(g.n()), 1);
      for (std::size_t i = 1; i + 1 < k; ++i) keep[p[i]] = 0;
      std::vector<int> to;
      Work h = restrict(g, keep, &to);
      const int a = to[p.front()], b = to[p.back()];
      h.adj[a].push_back(b);
      h.adj[b].push_back(a);
      WeightSum wa = 0, wb = 0;
      for (std::size_t i = 1; i <= k; ++i) {
        if (i % 3 == 1) wa += g.w[p[i - 1]];
        if (i % 3 == 2) wb += g.w[p[i - 1]];
      }
      h.w[a] = wa;
      h.w[b] = wb;
      auto rest = solve(std::move(h), depth + 1);
      if (!rest) return std::nullopt;
      const bool first = std::find(rest->begin(), rest->end(), g.orig[p.front()]) != rest->end();
      const bool last = std::find(rest->begin(), rest->end(), g.orig[p.back()]) != rest->end();
      if (first == last) throw std::logic_error("contracted path lost its end vertex");
      if (first) {
        for (std::size_t i = 4; i + 1 <= k; ++i) {
          if (i % 3 == 1) rest->push_back(g.orig[p[i - 1]]);
        }
      } else {
        for (std::size_t i = 2; i + 3 <= k; ++i) {
          if (i % 3 == 2) rest->push_back(g.orig[p[i - 1]]);
        }
      }
      return rest;
    }

    // A two-vertex path inside a triangle keeps its lighter end.
    {
      std::vector<char> keep(static_cast<std::size_t>(g.n()), 1);
      bool changed = false;
      for (const auto& p : paths) {
        if (p.size() != 2) continue;
        const int ya = y_neighbor(g, p[0]);
        if (ya < 0 || ya != y_neighbor(g, p[1])) continue;
        const int a = p[0], b = p[1];
        const bool drop_a = g.w[a] > g.w[b] || (g.w[a] == g.w[b] && g.orig[a] > g.orig[b]);
        keep[drop_a ? a : b] = 0;
        changed = true;
      }
      if (changed) return solve(restrict(g, keep), depth + 1);
    }

    // A long 1 mod 3 path keeps only its ends.
    for (const auto& p : paths) {
      const std::size_t k = p.size();
      if (k % 3 != 1 || k < 4) continue;
      std::vector<char> keep(static_cast<std::size_t>(g.n()), 1);
      for (std::size_t i = 1; i + 1 < k; ++i) keep[p[i]] = 0;
      auto rest = solve(restrict(g, keep), depth + 1);
      if (!rest) return std::nullopt;
      for (std::size_t i = 4; i + 3 <= k; ++i) {
        if (i % 3 == 1) rest->push_back(g.orig[p[i - 1]]);
      }
      return rest;
    }

    // Y empty: one lightest vertex does it.
    if (std::all_of(g.in_x.begin(), g.in_x.end(), [](char c) { return c != 0; })) {
      int best = -1;
      for (int v = 0; v < g.n(); ++v) {
        if (best < 0 || g.w[v] < g.w[best] || (g.w[v] == g.w[best] && g.orig[v] < g.orig[best])) {
          best = v;
        }
      }
      return VertexSet{g.orig[best]};
    }

    // Single-vertex paths are forced.
    std::vector<int> forced;
    for (const auto& p : paths) {
      if (p.size() == 1) forced.push_back(p[0]);
    }
    {
      std::vector<int> hits(static_cast<std::size_t>(g.n()), 0);
      for (int v : forced) {
        for (int u : g.adj[v]) {
          if (++hits[u] > 1) return std::nullopt;
        }
      }
    }

    // Strip a forced vertex with its first two levels.
    if (!forced.empty()) {
      const int v = *std::min_element(forced.begin(), forced.end());
      std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
      dist[v] = 0;
      std::vector<int> n2;
      for (int a : g.adj[v]) dist[a] = 1;
      for (int a : g.adj[v]) {
        for (int b : g.adj[a]) {
          if (dist[b] < 0) {
            dist[b] = 2;
            n2.push_back(b);
          }
        }
      }
      for (int b : n2) {
        for (int c : g.adj[b]) {
          if (dist[c] == 2) return std::nullopt;
        }
      }
      std::vector<char> keep(static_cast<std::size_t>(g.n()), 1);
      for (int u = 0; u < g.n(); ++u) {
        if (dist[u] >= 0) keep[u] = 0;
      }
      auto rest = solve(restrict(g, keep), depth + 1);
      if (!rest) return std::nullopt;
      rest->push_back(g.orig[v]);
      return rest;
    }

    // Irreducible: pick edges of the conflict multigraph.
    const ConflictMultigraph h = conflict_graph(g);
    auto cands = cheapest_selections(h, g.w);
    if (cands.empty()) return std::nullopt;
    std::optional<VertexSet> best;
    for (auto& c : cands) {
      for (Vertex& x : c) x = g.orig[x];
      std::sort(c.begin(), c.end());
      if (!best || c < *best) best = std::move(c);
    }
    return best;
  }

 private:
  int limit_;
};

Outcome finish(const WeightedGraph& g, std::optional<VertexSet> d) {
  if (!d) return Outcome::no_ed();
  std::sort(d->begin(), d->end());
  if (!is_efficient_dominating(g, *d)) throw std::logic_error("2-bounded solver built an invalid set");
  const WeightSum w = g.weight_of(*d);
  return Outcome::solved(Solution{std::move(*d), w});
}

}  // namespace

std::vector<Orientation> one_orientations(const ConflictMultigraph& h) {
  if (!connected(h)) throw std::invalid_argument("one_orientations needs a connected multigraph");
  if (h.edges.size() != h.vertices.size()) return {};
  const Peel p = peel(h, true);
  std::vector<Orientation> out;
  for (auto& o : orient_cycle(h, p, true)) out.push_back(Orientation{std::move(o)});
  return out;
}

ConflictMultigraph build_conflict_multigraph(const XInstance& inst) {
  Work g = make_work(inst.graph, inst.x);
  for (int v = 0; v < g.n(); ++v) {
    if (g.in_x[v]) continue;
    for (int u : g.adj[v]) {
      if (!g.in_x[u]) throw std::invalid_argument("instance is not irreducible: Y not independent");
    }
  }
  ConflictMultigraph h = conflict_graph(g);
  for (auto& arc : h.edges) {
    arc.near_a = g.orig[arc.near_a];
    arc.near_b = g.orig[arc.near_b];
  }
  for (Vertex& y : h.vertices) y = g.orig[y];
  return h;
}

Outcome solve_x_restricted(const XInstance& inst) {
  Work g = make_work(inst.graph, inst.x);
  Reducer r(inst.graph.order() + 2);
  return finish(inst.graph, r.solve(std::move(g)));
}

Outcome solve_kbwed(const WeightedGraph& g, int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("degree bound must be 0, 1 or 2");
  if (k == 0) {
    if (g.size() != 0) return Outcome::no_ed();
    VertexSet all(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
    return finish(g, std::move(all));
  }
  if (k == 1) {
    VertexSet d;
    for (const auto& c : connected_components(g)) {
      if (c.size() == 1) {
        d.push_back(c[0]);
      } else if (c.size() == 2) {
        const bool first = g.weight(c[0]) <= g.weight(c[1]);
        d.push_back(first ? c[0] : c[1]);
      } else {
        for (Vertex v : c) {
          if (g.degree(v) == 1) d.push_back(v);
        }
      }
    }
    std::sort(d.begin(), d.end());
    if (!is_efficient_dominating(g, d)) return Outcome::no_ed();
    return finish(g, std::move(d));
  }
  VertexSet x;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) <= 2) x.push_back(v);
  }
  return solve_x_restricted(XInstance{g, std::move(x)});
}

}  // namespace effdom
