#include "effdom/pattern.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "marks.hpp"

namespace effdom {
namespace {

struct PatternInfo {
  PatternId id;
  std::string_view name;
  int order;
  std::vector<Edge> edges;
};

const std::vector<PatternInfo>& registry() {
  static const std::vector<PatternInfo> table = {
      {PatternId::P2, "P2", 2, {{0, 1}}},
      {PatternId::P3, "P3", 3, {{0, 1}, {1, 2}}},
      {PatternId::P4, "P4", 4, {{0, 1}, {1, 2}, {2, 3}}},
      {PatternId::P5, "P5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}},
      {PatternId::P6, "P6", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}},
      {PatternId::P7, "P7", 7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}},
      {PatternId::TwoP2, "2P2", 4, {{0, 1}, {2, 3}}},
      {PatternId::TwoP3, "2P3", 6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}},
      {PatternId::P2P3, "P2+P3", 5, {{0, 1}, {2, 3}, {3, 4}}},
      {PatternId::P2P4, "P2+P4", 6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}}},
      {PatternId::S122, "S122", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}},
      {PatternId::Claw, "claw", 4, {{0, 1}, {0, 2}, {0, 3}}},
  };
  return table;
}

const PatternInfo& info(PatternId p) { return registry()[static_cast<std::size_t>(p)]; }

constexpr int kMaxOrder = 7;
using PatternMatrix = std::array<std::array<bool, kMaxOrder>, kMaxOrder>;

PatternMatrix matrix_of(PatternId p) {
  PatternMatrix m{};
  for (auto [a, b] : info(p).edges) m[a][b] = m[b][a] = true;
  return m;
}

class InducedSearch {
 public:
  InducedSearch(const WeightedGraph& g, PatternId p)
      : g_(g), k_(pattern_order(p)), pat_(matrix_of(p)) {}

  std::optional<VertexSet> run() {
    if (g_.order() < k_) return std::nullopt;
    tuple_.assign(static_cast<std::size_t>(k_), -1);
    if (extend(0)) return tuple_;
    return std::nullopt;
  }

 private:
  bool fits(int pos, Vertex v) const {
    for (int q = 0; q < pos; ++q) {
      if (tuple_[q] == v) return false;
      if (g_.adjacent(tuple_[q], v) != pat_[q][pos]) return false;
    }
    return true;
  }

  bool extend(int pos) {
    if (pos == k_) return true;
    // Candidates come from the shortest neighbor list among already placed
    // pattern neighbors; sorted lists keep the search lexicographic.
    int anchor = -1;
    for (int q = 0; q < pos; ++q) {
      if (pat_[q][pos] && (anchor < 0 || g_.degree(tuple_[q]) < g_.degree(tuple_[anchor]))) {
        anchor = q;
      }
    }
    if (anchor >= 0) {
      for (Vertex v : g_.neighbors(tuple_[anchor])) {
        if (fits(pos, v)) {
          tuple_[pos] = v;
          if (extend(pos + 1)) return true;
        }
      }
    } else {
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (fits(pos, v)) {
          tuple_[pos] = v;
          if (extend(pos + 1)) return true;
        }
      }
    }
    tuple_[pos] = -1;
    return false;
  }

  const WeightedGraph& g_;
  int k_;
  PatternMatrix pat_;
  VertexSet tuple_;
};

}  // namespace

std::string_view pattern_name(PatternId p) { return info(p).name; }

std::optional<PatternId> parse_pattern(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e.id;
  }
  return std::nullopt;
}

int pattern_order(PatternId p) { return info(p).order; }

const std::vector<Edge>& pattern_edges(PatternId p) { return info(p).edges; }

bool induces(const WeightedGraph& g, std::span<const Vertex> tuple, PatternId p) {
  const int k = pattern_order(p);
  if (static_cast<int>(tuple.size()) != k) return false;
  const PatternMatrix pat = matrix_of(p);
  for (int i = 0; i < k; ++i) {
    if (tuple[i] < 0 || tuple[i] >= g.order()) return false;
    for (int j = i + 1; j < k; ++j) {
      if (tuple[i] == tuple[j]) return false;
      if (g.adjacent(tuple[i], tuple[j]) != pat[i][j]) return false;
    }
  }
  return true;
}

std::optional<VertexSet> find_induced(const WeightedGraph& g, PatternId p) {
  return InducedSearch(g, p).run();
}

std::optional<std::vector<VertexSet>> is_cluster(const WeightedGraph& g,
                                                 std::span<const Vertex> subset) {
  auto comps = components_within(g, subset);
  for (const auto& c : comps) {
    if (universal_in(g, c).size() != c.size()) return std::nullopt;
  }
  return comps;
}

std::vector<VertexSet> co_components_within(const WeightedGraph& g,
                                            std::span<const Vertex> subset) {
  // Complement BFS: `rest` holds unvisited vertices; each step splits it into
  // non-neighbors (reached) and neighbors (kept). Cost O(|S| + edges in S).
  VertexSet rest(subset.begin(), subset.end());
  std::sort(rest.begin(), rest.end());
  detail::Marks nb(static_cast<std::size_t>(g.order()));
  std::vector<VertexSet> out;
  while (!rest.empty()) {
    VertexSet comp{rest.front()};
    rest.erase(rest.begin());
    for (std::size_t head = 0; head < comp.size() && !rest.empty(); ++head) {
      nb.clear();
      nb.set_all(g.neighbors(comp[head]));
      VertexSet kept;
      for (Vertex w : rest) {
        if (nb.test(w)) {
          kept.push_back(w);
        } else {
          comp.push_back(w);
        }
      }
      rest.swap(kept);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_co_connected(const WeightedGraph& g) {
  VertexSet all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return co_components_within(g, all).size() <= 1;
}

}  // namespace effdom
