#include "effdom/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "effdom/framework.hpp"

namespace effdom {
namespace {

class Builder {
 public:
  Vertex add(std::string role) {
    roles_.push_back(std::move(role));
    adj_.emplace_back();
    return static_cast<Vertex>(roles_.size() - 1);
  }
  void link(Vertex a, Vertex b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  std::vector<std::string> take_roles() { return std::move(roles_); }
  WeightedGraph take_graph() { return WeightedGraph(std::move(adj_)); }

 private:
  std::vector<std::string> roles_;
  std::vector<std::vector<Vertex>> adj_;
};

std::string name(const char* base, int i, int j) {
  return std::string(base) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string name(const char* base, int i, int j, int k) {
  return std::string(base) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ";" +
         std::to_string(k + 1) + ")";
}

}  // namespace

std::uint64_t reduction_order(int variables, int clauses, int girth) {
  const std::uint64_t n = static_cast<std::uint64_t>(variables);
  const std::uint64_t m = static_cast<std::uint64_t>(clauses);
  const std::uint64_t g = static_cast<std::uint64_t>(girth);
  return n * (6 * m - (m > 0 ? 1 : 0)) + 18 * g * m + m;
}

ReductionGraph build_reduction(const MonotoneCnf& f, int girth) {
  if (girth < 3) throw std::invalid_argument("girth parameter must be at least 3");
  f.validate();
  const int n = f.variables;
  const int m = static_cast<int>(f.clauses.size());

  ReductionGraph r;
  r.girth = girth;
  r.variables = n;
  r.clauses = m;
  r.v_sets.resize(static_cast<std::size_t>(n));
  r.w_sets.resize(static_cast<std::size_t>(n));
  r.x_sets.resize(static_cast<std::size_t>(n));
  Builder b;

  // Variable paths. The path stops at vbar(i,m): a trailing x(i,m) would be
  // a pendant vertex that no set containing W_i can dominate.
  std::vector<std::vector<Vertex>> vbar(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vertex prev = -1;
    auto step = [&](Vertex v) {
      if (prev >= 0) b.link(prev, v);
      prev = v;
    };
    for (int j = 0; j < m; ++j) {
      const Vertex wb = b.add(name("wbar", i, j));
      const Vertex v = b.add(name("v", i, j));
      const Vertex xb = b.add(name("xbar", i, j));
      const Vertex w = b.add(name("w", i, j));
      const Vertex vb = b.add(name("vbar", i, j));
      for (Vertex u : {wb, v, xb, w, vb}) step(u);
      r.w_sets[i].insert(r.w_sets[i].end(), {wb, w});
      r.v_sets[i].insert(r.v_sets[i].end(), {v, vb});
      r.x_sets[i].push_back(xb);
      vbar[i].push_back(vb);
      if (j + 1 < m) {
        const Vertex x = b.add(name("x", i, j));
        step(x);
        r.x_sets[i].push_back(x);
      }
    }
  }

  // Edge paths, in (variable, clause) order; clause vertices come last, so
  // their ends are linked afterwards.
  std::vector<std::pair<Vertex, int>> clause_ends;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const int a = f.position(i, j);
      if (a < 0) continue;
      Vertex prev = vbar[i][static_cast<std::size_t>(a)];
      for (int k = 0; k < girth; ++k) {
        const Vertex x = b.add(name("x", i, j, k));
        const Vertex wb = b.add(name("wbar", i, j, k));
        const Vertex v = b.add(name("v", i, j, k));
        const Vertex xb = b.add(name("xbar", i, j, k));
        const Vertex w = b.add(name("w", i, j, k));
        const Vertex vb = b.add(name("vbar", i, j, k));
        for (Vertex u : {x, wb, v, xb, w, vb}) {
          b.link(prev, u);
          prev = u;
        }
        r.x_sets[i].insert(r.x_sets[i].end(), {x, xb});
        r.w_sets[i].insert(r.w_sets[i].end(), {wb, w});
        r.v_sets[i].insert(r.v_sets[i].end(), {v, vb});
      }
      clause_ends.emplace_back(prev, j);
    }
  }
  for (int j = 0; j < m; ++j) r.clause_vertices.push_back(b.add("C(" + std::to_string(j + 1) + ")"));
  for (auto [end, j] : clause_ends) b.link(end, r.clause_vertices[static_cast<std::size_t>(j)]);

  for (int i = 0; i < n; ++i) {
    std::sort(r.v_sets[i].begin(), r.v_sets[i].end());
    std::sort(r.w_sets[i].begin(), r.w_sets[i].end());
    std::sort(r.x_sets[i].begin(), r.x_sets[i].end());
  }
  r.roles = b.take_roles();
  r.graph = b.take_graph();
  return r;
}

VertexSet assignment_to_set(const ReductionGraph& r, const std::vector<bool>& assignment) {
  if (assignment.size() != static_cast<std::size_t>(r.variables)) {
    throw std::invalid_argument("assignment length does not match the variable count");
  }
  VertexSet d;
  for (int i = 0; i < r.variables; ++i) {
    const auto& part = assignment[i] ? r.v_sets[i] : r.w_sets[i];
    d.insert(d.end(), part.begin(), part.end());
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<bool> extract_assignment(const ReductionGraph& r, std::span<const Vertex> d) {
  if (!is_efficient_dominating(r.graph, d)) {
    throw std::invalid_argument("set is not an efficient dominating set of the reduction graph");
  }
  std::vector<char> in(static_cast<std::size_t>(r.graph.order()), 0);
  for (Vertex v : d) in[v] = 1;
  auto contained = [&](const VertexSet& s) {
    return std::all_of(s.begin(), s.end(), [&](Vertex v) { return in[v] != 0; });
  };
  std::vector<bool> out(static_cast<std::size_t>(r.variables));
  for (int i = 0; i < r.variables; ++i) {
    if (contained(r.v_sets[i])) {
      out[i] = true;
    } else if (!contained(r.w_sets[i])) {
      throw IntegrityError("variable " + std::to_string(i + 1) +
                           " has neither its V set nor its W set in D");
    }
  }
  return out;
}

std::string render_roles(const ReductionGraph& r) {
  std::ostringstream out;
  for (std::size_t v = 0; v < r.roles.size(); ++v) out << v + 1 << ' ' << r.roles[v] << '\n';
  return out.str();
}

int graph_girth(const WeightedGraph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex u = queue[h];
      if (best && 2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          const int len = dist[u] + dist[w] + 1;
          if (!best || len < best) best = len;
        }
      }
    }
  }
  return best;
}

bool is_bipartite(const WeightedGraph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

int max_degree(const WeightedGraph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

}  // namespace effdom
