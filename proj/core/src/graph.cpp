#include "effdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

#include "marks.hpp"

namespace effdom {

WeightedGraph::WeightedGraph(std::vector<std::vector<Vertex>> adjacency,
                             std::vector<Weight> weights)
    : adjacency_(std::move(adjacency)), weights_(std::move(weights)) {
  const auto n = static_cast<Vertex>(adjacency_.size());
  if (weights_.empty()) weights_.assign(adjacency_.size(), 1);
  if (weights_.size() != adjacency_.size()) {
    throw std::invalid_argument("weight vector length " +
                                std::to_string(weights_.size()) +
                                " does not match vertex count " +
                                std::to_string(n));
  }
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto& row = adjacency_[v];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw std::invalid_argument("duplicate neighbor of vertex " +
                                  std::to_string(v));
    }
    for (Vertex u : row) {
      if (u < 0 || u >= n) {
        throw std::invalid_argument("neighbor id " + std::to_string(u) +
                                    " out of range");
      }
      if (u == v) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
      }
    }
    degree_sum += row.size();
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : adjacency_[v]) {
      if (!std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v)) {
        throw std::invalid_argument("adjacency is not symmetric at edge " +
                                    std::to_string(v) + "-" +
                                    std::to_string(u));
      }
    }
  }
  edge_count_ = degree_sum / 2;
}

WeightedGraph WeightedGraph::from_edges(int n, std::span<const Edge> edges,
                                        std::vector<Weight> weights) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return WeightedGraph(std::move(adj), std::move(weights));
}

bool WeightedGraph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adjacency_[u];
  const auto& b = adjacency_[v];
  if (a.size() <= b.size()) return std::binary_search(a.begin(), a.end(), v);
  return std::binary_search(b.begin(), b.end(), u);
}

WeightSum WeightedGraph::weight_of(std::span<const Vertex> vertices) const {
  WeightSum total = 0;
  for (Vertex v : vertices) total += weights_[v];
  return total;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < order(); ++v) {
    for (Vertex u : adjacency_[v]) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

WeightedGraph WeightedGraph::with_weights(std::vector<Weight> weights) const {
  return WeightedGraph(adjacency_, std::move(weights));
}

DistanceLevels distance_levels(const WeightedGraph& g, Vertex anchor) {
  if (anchor < 0 || anchor >= g.order()) {
    throw std::out_of_range("anchor vertex out of range");
  }
  DistanceLevels dl;
  dl.anchor = anchor;
  dl.level_of.assign(static_cast<std::size_t>(g.order()),
                     DistanceLevels::kUnreachable);
  dl.level_of[anchor] = 0;
  dl.levels.push_back({anchor});
  for (std::size_t i = 0; !dl.levels[i].empty(); ++i) {
    VertexSet next;
    for (Vertex u : dl.levels[i]) {
      for (Vertex w : g.neighbors(u)) {
        if (dl.level_of[w] == DistanceLevels::kUnreachable) {
          dl.level_of[w] = static_cast<int>(i) + 1;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    dl.levels.push_back(std::move(next));
  }
  dl.levels.pop_back();  // trailing empty level
  return dl;
}

WeightedGraph square(const WeightedGraph& g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  detail::Marks seen(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    seen.clear();
    seen.set(v);
    auto& row = adj[v];
    for (Vertex u : g.neighbors(v)) {
      if (!seen.test(u)) {
        seen.set(u);
        row.push_back(u);
      }
      for (Vertex w : g.neighbors(u)) {
        if (!seen.test(w)) {
          seen.set(w);
          row.push_back(w);
        }
      }
    }
  }
  return WeightedGraph(std::move(adj),
                       std::vector<Weight>(g.weights().begin(), g.weights().end()));
}

std::vector<VertexSet> components_within(const WeightedGraph& g,
                                         std::span<const Vertex> subset) {
  detail::Marks inside(static_cast<std::size_t>(g.order()));
  inside.set_all(subset);
  detail::Marks visited(static_cast<std::size_t>(g.order()));
  VertexSet order(subset.begin(), subset.end());
  std::sort(order.begin(), order.end());

  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex start : order) {
    if (visited.test(start)) continue;
    VertexSet comp;
    visited.set(start);
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (inside.test(w) && !visited.test(w)) {
          visited.set(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const WeightedGraph& g) {
  VertexSet all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return components_within(g, all);
}

bool is_connected(const WeightedGraph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

VertexSet universal_in(const WeightedGraph& g, std::span<const Vertex> subset) {
  detail::Marks inside(static_cast<std::size_t>(g.order()));
  inside.set_all(subset);
  const auto need = static_cast<int>(subset.size()) - 1;
  VertexSet out;
  for (Vertex u : subset) {
    int count = 0;
    for (Vertex w : g.neighbors(u)) {
      if (inside.test(w)) ++count;
    }
    if (count == need) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_clique(const WeightedGraph& g, std::span<const Vertex> subset) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (!g.adjacent(subset[i], subset[j])) return false;
    }
  }
  return true;
}

bool is_independent(const WeightedGraph& g, std::span<const Vertex> subset) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (g.adjacent(subset[i], subset[j])) return false;
    }
  }
  return true;
}

bool is_simplicial(const WeightedGraph& g, Vertex v) {
  return is_clique(g, g.neighbors(v));
}

InducedSubgraph induced_subgraph(const WeightedGraph& g,
                                 std::span<const Vertex> vertices) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  InducedSubgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    local[sub.to_parent[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::vector<Vertex>> adj(sub.to_parent.size());
  std::vector<Weight> w(sub.to_parent.size());
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    const Vertex p = sub.to_parent[i];
    w[i] = g.weight(p);
    for (Vertex q : g.neighbors(p)) {
      if (local[q] >= 0) adj[i].push_back(local[q]);
    }
  }
  sub.graph = WeightedGraph(std::move(adj), std::move(w));
  return sub;
}

VertexSet shortest_path(const WeightedGraph& g, Vertex from, Vertex to) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{from};
  parent[from] = from;
  while (!queue.empty() && parent[to] < 0) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (parent[w] < 0) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (parent[to] < 0) return {};
  VertexSet path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

WeightedGraph complement(const WeightedGraph& g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    std::size_t k = 0;
    for (Vertex u = 0; u < n; ++u) {
      while (k < nb.size() && nb[k] < u) ++k;
      if (u != v && (k == nb.size() || nb[k] != u)) adj[v].push_back(u);
    }
  }
  return WeightedGraph(std::move(adj),
                       std::vector<Weight>(g.weights().begin(), g.weights().end()));
}

WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
  std::vector<std::vector<Vertex>> adj;
  std::vector<Weight> w;
  adj.reserve(static_cast<std::size_t>(a.order() + b.order()));
  for (Vertex v = 0; v < a.order(); ++v) {
    adj.emplace_back(a.neighbors(v).begin(), a.neighbors(v).end());
    w.push_back(a.weight(v));
  }
  for (Vertex v = 0; v < b.order(); ++v) {
    std::vector<Vertex> row;
    for (Vertex u : b.neighbors(v)) row.push_back(u + a.order());
    adj.push_back(std::move(row));
    w.push_back(b.weight(v));
  }
  return WeightedGraph(std::move(adj), std::move(w));
}

bool precedes(WeightSum weight_a, const VertexSet& a, WeightSum weight_b,
              const VertexSet& b) {
  if (weight_a != weight_b) return weight_a < weight_b;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace effdom
