#include "effdom/cotree.hpp"

#include <algorithm>
#include <numeric>

#include "effdom/pattern.hpp"

namespace effdom {
namespace {

// Children of a union node are connected and children of a join node are
// co-connected, so one of the two splits can be skipped below.
enum class Known { Nothing, Connected, CoConnected };

// Returns the node index, or -1 if G[subset] is not a cograph.

int build(const WeightedGraph& g, const VertexSet& subset, Known known, Cotree& t) {
  if (subset.size() == 1) {
    t.nodes.push_back({Cotree::Kind::Leaf, subset.front(), {}});
    return static_cast<int>(t.nodes.size()) - 1;
  }
  std::vector<VertexSet> parts;
  Cotree::Kind kind = Cotree::Kind::Union;
  if (known != Known::Connected) {
    parts = components_within(g, subset);
  }
  if (parts.size() <= 1) {
    kind = Cotree::Kind::Join;
    parts = known == Known::CoConnected ? std::vector<VertexSet>{}
                                        : co_components_within(g, subset);
    if (parts.size() <= 1) return -1;  // connected and co-connected
  }
  const Known child_known =
      kind == Cotree::Kind::Union ? Known::Connected : Known::CoConnected;
  std::vector<int> children;
  children.reserve(parts.size());
  for (const auto& part : parts) {
    int c = build(g, part, child_known, t);
    if (c < 0) return -1;
    children.push_back(c);
  }
  t.nodes.push_back({kind, -1, std::move(children)});
  return static_cast<int>(t.nodes.size()) - 1;
}

// Post-order listing so that dynamic programs run without recursion.
std::vector<int> post_order(const Cotree& t) {
  std::vector<int> order;
  if (t.root < 0) return order;
  std::vector<std::pair<int, bool>> stack{{t.root, false}};
  while (!stack.empty()) {
    auto [node, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(node);
      continue;
    }
    stack.emplace_back(node, true);
    for (int c : t.nodes[node].children) stack.emplace_back(c, false);
  }
  return order;
}

}  // namespace

std::optional<Cotree> is_cograph(const WeightedGraph& g) {
  Cotree t;
  if (g.order() == 0) return t;
  VertexSet all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  t.root = build(g, all, Known::Nothing, t);
  if (t.root < 0) return std::nullopt;
  return t;
}

WeightedSet cograph_mwis(const Cotree& tree, std::span<const Weight> weights) {
  std::vector<WeightedSet> best(tree.nodes.size());
  for (int id : post_order(tree)) {
    const auto& node = tree.nodes[id];
    auto& out = best[id];
    switch (node.kind) {
      case Cotree::Kind::Leaf:
        if (weights[node.vertex] > 0) out = {{node.vertex}, weights[node.vertex]};
        break;
      case Cotree::Kind::Union:
        for (int c : node.children) {
          out.weight += best[c].weight;
          out.vertices.insert(out.vertices.end(), best[c].vertices.begin(),
                              best[c].vertices.end());
        }
        break;
      case Cotree::Kind::Join: {
        int pick = node.children.front();
        for (int c : node.children) {
          if (best[c].weight > best[pick].weight) pick = c;
        }
        out = best[pick];
        break;
      }
    }
    for (int c : node.children) best[c] = {};
  }
  if (tree.root < 0) return {};
  auto result = std::move(best[tree.root]);
  std::sort(result.vertices.begin(), result.vertices.end());
  return result;
}

CoverageSet cograph_max_coverage(const Cotree& tree,
                                 std::span<const WeightSum> coverage,
                                 std::span<const Weight> weights) {
  auto better = [](const CoverageSet& a, const CoverageSet& b) {
    if (a.coverage != b.coverage) return a.coverage > b.coverage;
    return a.weight < b.weight;
  };
  std::vector<CoverageSet> best(tree.nodes.size());
  for (int id : post_order(tree)) {
    const auto& node = tree.nodes[id];
    auto& out = best[id];
    switch (node.kind) {
      case Cotree::Kind::Leaf:
        // A vertex covering nothing only adds weight.
        if (coverage[node.vertex] > 0) {
          out = {{node.vertex}, coverage[node.vertex], weights[node.vertex]};
        }
        break;
      case Cotree::Kind::Union:
        for (int c : node.children) {
          out.coverage += best[c].coverage;
          out.weight += best[c].weight;
          out.vertices.insert(out.vertices.end(), best[c].vertices.begin(),
                              best[c].vertices.end());
        }
        break;
      case Cotree::Kind::Join: {
        int pick = node.children.front();
        for (int c : node.children) {
          if (better(best[c], best[pick])) pick = c;
        }
        out = best[pick];
        break;
      }
    }
    for (int c : node.children) best[c] = {};
  }
  if (tree.root < 0) return {};
  auto result = std::move(best[tree.root]);
  std::sort(result.vertices.begin(), result.vertices.end());
  return result;
}

}  // namespace effdom
