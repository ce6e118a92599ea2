#include "effdom/solver_2p2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "marks.hpp"

namespace effdom {
namespace {

// Array-backed partition refinement: each part is a contiguous slice of
// `items`, so splitting off k marked members costs O(k). Starts from the
// partition {v}, V - v.
class Refiner {
 public:
  Refiner(int n, Vertex v)
      : items_(static_cast<std::size_t>(n)), pos_(static_cast<std::size_t>(n)),
        part_of_(static_cast<std::size_t>(n), 1) {
    std::iota(items_.begin(), items_.end(), 0);
    std::swap(items_[0], items_[v]);
    for (int i = 0; i < n; ++i) pos_[items_[i]] = i;
    part_of_[v] = 0;
    parts_.push_back({0, 1, 0});
    if (n > 1) parts_.push_back({1, n, 0});
  }

  // Splits every part not containing p by N(p). Returns true on any split.
  bool pivot(const WeightedGraph& g, Vertex p) {
    touched_.clear();
    for (Vertex w : g.neighbors(p)) {
      const int id = part_of_[w];
      if (id == part_of_[p]) continue;
      Part& part = parts_[id];
      if (part.marked == 0) touched_.push_back(id);
      // Swap w into the marked prefix of its slice.
      const int target = part.begin + part.marked;
      const Vertex other = items_[target];
      std::swap(items_[pos_[w]], items_[target]);
      pos_[other] = pos_[w];
      pos_[w] = target;
      ++part.marked;
    }
    bool split = false;
    for (int id : touched_) {
      const int marked = parts_[id].marked;
      parts_[id].marked = 0;
      if (marked == parts_[id].end - parts_[id].begin) continue;
      const int fresh = static_cast<int>(parts_.size());
      Part head{parts_[id].begin, parts_[id].begin + marked, 0};
      parts_[id].begin += marked;
      parts_.push_back(head);
      for (int i = head.begin; i < head.end; ++i) part_of_[items_[i]] = fresh;
      split = true;
    }
    return split;
  }

  std::vector<VertexSet> classes() const {
    std::vector<VertexSet> out;
    for (const auto& part : parts_) {
      VertexSet c(items_.begin() + part.begin, items_.begin() + part.end);
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Part {
    int begin;
    int end;
    int marked;
  };
  std::vector<Vertex> items_;
  std::vector<int> pos_;
  std::vector<int> part_of_;
  std::vector<Part> parts_;
  std::vector<int> touched_;
};

// Tarjan SCC over a dense boolean adjacency matrix; iterative.
std::vector<int> strongly_connected(const std::vector<std::vector<bool>>& arc, int& count) {
  const int q = static_cast<int>(arc.size());
  std::vector<int> index(q, -1), low(q, 0), comp(q, -1);
  std::vector<int> stack;
  std::vector<bool> on_stack(q, false);
  int next = 0;
  count = 0;
  for (int s = 0; s < q; ++s) {
    if (index[s] >= 0) continue;
    std::vector<std::pair<int, int>> call{{s, 0}};
    index[s] = low[s] = next++;
    stack.push_back(s);
    on_stack[s] = true;
    while (!call.empty()) {
      auto& [x, j] = call.back();
      if (j < q) {
        const int y = j++;
        if (!arc[x][y]) continue;
        if (index[y] < 0) {
          index[y] = low[y] = next++;
          stack.push_back(y);
          on_stack[y] = true;
          call.emplace_back(y, 0);
        } else if (on_stack[y]) {
          low[x] = std::min(low[x], index[y]);
        }
        continue;
      }
      if (low[x] == index[x]) {
        int y;
        do {
          y = stack.back();
          stack.pop_back();
          on_stack[y] = false;
          comp[y] = count;
        } while (y != x);
        ++count;
      }
      const int done = x;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return comp;
}

}  // namespace

ModularPartition maximal_homogeneous_sets(const WeightedGraph& g) {
  const int n = g.order();
  if (!is_connected(g) || !is_co_connected(g)) {
    throw std::invalid_argument("maximal_homogeneous_sets needs a connected, co-connected graph");
  }
  ModularPartition mp;
  mp.in_set.assign(static_cast<std::size_t>(n), false);
  if (n <= 1) return mp;

  // Classes other than {v} end up as the maximal modules avoiding v.
  const Vertex v = 0;
  Refiner refiner(n, v);
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex p = 0; p < n; ++p) changed = refiner.pivot(g, p) || changed;
  }
  std::vector<VertexSet> classes;
  for (auto& c : refiner.classes()) {
    if (c.front() != v) classes.push_back(std::move(c));
  }

  // A module containing v and class X must also contain every class Y that
  // X and v see differently. The maximal such module is v plus everything
  // outside the unique source component of this forcing relation.
  const int q = static_cast<int>(classes.size());
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < q; ++i) {
    for (Vertex x : classes[i]) class_of[x] = i;
  }
  auto seen_by = [&](Vertex x) {
    std::vector<bool> sees(static_cast<std::size_t>(q), false);
    for (Vertex w : g.neighbors(x)) {
      if (class_of[w] >= 0) sees[class_of[w]] = true;
    }
    return sees;
  };
  const std::vector<bool> v_sees = seen_by(v);
  std::vector<std::vector<bool>> forces(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) {
    forces[i] = seen_by(classes[i].front());
    for (int j = 0; j < q; ++j) forces[i][j] = i != j && forces[i][j] != v_sees[j];
  }
  int scc_count = 0;
  const std::vector<int> scc = strongly_connected(forces, scc_count);
  std::vector<bool> has_incoming(static_cast<std::size_t>(scc_count), false);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      if (forces[i][j] && scc[i] != scc[j]) has_incoming[scc[j]] = true;
    }
  }
  int source = -1;
  for (int c = 0; c < scc_count; ++c) {
    if (has_incoming[c]) continue;
    if (source >= 0) throw std::logic_error("ambiguous module containing the pivot vertex");
    source = c;
  }

  VertexSet with_v{v};
  for (int i = 0; i < q; ++i) {
    if (scc[i] == source) {
      if (classes[i].size() >= 2) mp.sets.push_back(classes[i]);
    } else {
      with_v.insert(with_v.end(), classes[i].begin(), classes[i].end());
    }
  }
  if (with_v.size() >= 2) mp.sets.push_back(detail::sorted(std::move(with_v)));
  std::sort(mp.sets.begin(), mp.sets.end());
  for (const auto& s : mp.sets) {
    for (Vertex x : s) mp.in_set[x] = true;
  }
  return mp;
}

CharacteristicGraph characteristic_graph(const WeightedGraph& g) {
  return characteristic_graph(g, maximal_homogeneous_sets(g));
}

CharacteristicGraph characteristic_graph(const WeightedGraph& g, const ModularPartition& mp) {
  const int n = g.order();
  std::vector<Vertex> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < mp.sets.size(); ++i) {
    for (Vertex x : mp.sets[i]) owner[x] = mp.sets[i].front();
  }
  CharacteristicGraph cg;
  std::vector<Vertex> local(static_cast<std::size_t>(n), -1);
  for (Vertex x = 0; x < n; ++x) {
    if (owner[x] < 0 || owner[x] == x) {
      local[x] = static_cast<Vertex>(cg.represents.size());
      cg.represents.push_back({x});
    } else {
      cg.represents[local[owner[x]]].push_back(x);
    }
  }
  VertexSet reps;
  for (const auto& r : cg.represents) reps.push_back(r.front());
  cg.graph = induced_subgraph(g, reps).graph;
  return cg;
}

std::optional<SpiderPartition> is_thin_spider(const WeightedGraph& g) {
  const int n = g.order();
  if (n < 2 || n % 2 != 0) return std::nullopt;
  const int k = n / 2;
  if (k == 1) {
    if (!g.adjacent(0, 1)) return std::nullopt;
    return SpiderPartition{{0}, {1}};
  }
  std::vector<bool> leg(static_cast<std::size_t>(n), false);
  int legs = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (g.degree(x) == 1) {
      leg[x] = true;
      ++legs;
    } else if (g.degree(x) != k) {
      return std::nullopt;
    }
  }
  if (legs != k) return std::nullopt;
  SpiderPartition sp;
  for (Vertex x = 0; x < n; ++x) {
    if (leg[x]) continue;
    // k neighbors: exactly one leg, so the other k - 1 form the clique.
    Vertex partner = -1;
    for (Vertex w : g.neighbors(x)) {
      if (!leg[w]) continue;
      if (partner >= 0) return std::nullopt;
      partner = w;
    }
    if (partner < 0) return std::nullopt;
    sp.clique.push_back(x);
    sp.independent.push_back(partner);
  }
  // Each leg has degree one, so distinct clique vertices have distinct partners.
  return sp;
}

Outcome solve_2p2(const WeightedGraph& g) {
  const int n = g.order();
  if (!is_connected(g)) throw std::invalid_argument("solve_2p2 needs a connected graph");
  if (n == 1) return Outcome::solved({{0}, g.weight(0)});

  VertexSet all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  if (!is_co_connected(g)) {
    // Every e.d. of a join is a single universal vertex.
    VertexSet universal = universal_in(g, all);
    if (universal.empty()) return Outcome::no_ed();
    Vertex best = universal.front();
    for (Vertex u : universal) {
      if (g.weight(u) < g.weight(best)) best = u;
    }
    return Outcome::solved({{best}, g.weight(best)});
  }

  const ModularPartition mp = maximal_homogeneous_sets(g);
  const CharacteristicGraph cg = characteristic_graph(g, mp);
  if (auto spider = is_thin_spider(cg.graph)) {
    VertexSet d;
    bool clean = true;
    for (Vertex i : spider->independent) {
      const Vertex x = cg.represents[i].front();
      clean = clean && !mp.in_set[x];
      d.push_back(x);
    }
    std::sort(d.begin(), d.end());
    if (clean && is_efficient_dominating(g, d)) {
      const WeightSum w = g.weight_of(d);
      return Outcome::solved({std::move(d), w});
    }
  }
  if (auto witness = find_induced(g, PatternId::TwoP2)) {
    return Outcome::not_in_class(make_evidence(g, PatternId::TwoP2, *witness));
  }
  return Outcome::no_ed();
}

}  // namespace effdom
