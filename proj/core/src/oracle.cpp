#include "effdom/oracle.hpp"

#include <algorithm>
#include <string>

namespace effdom {
namespace {

void check_limit(int n, int limit, const char* what) {
  if (n > limit) {
    throw OracleLimitError(std::string(what) + " " + std::to_string(n) +
                           " exceeds the exhaustive-search limit of " + std::to_string(limit));
  }
}

// Include/exclude enumeration in vertex order. A vertex is abandoned as soon
// as every member of its closed neighborhood has been decided without
// covering it, so dead branches stop early; every e.d. is still visited.
class EdEnumerator {
 public:
  EdEnumerator(const WeightedGraph& g, std::vector<bool> allowed)
      : g_(g), allowed_(std::move(allowed)), cover_(static_cast<std::size_t>(g.order()), 0),
        closes_at_(static_cast<std::size_t>(g.order())) {
    for (Vertex u = 0; u < g.order(); ++u) {
      Vertex last = u;
      for (Vertex w : g.neighbors(u)) last = std::max(last, w);
      closes_at_[last].push_back(u);
    }
  }

  OracleResult run() {
    visit(0, 0);
    OracleResult r;
    r.count = count_;
    if (found_) {
      r.exists = true;
      r.best_weight = best_weight_;
      r.best_set = best_;
    }
    return r;
  }

 private:
  bool closes_ok(Vertex v) const {
    for (Vertex u : closes_at_[v]) {
      if (cover_[u] != 1) return false;
    }
    return true;
  }

  bool free_to_take(Vertex v) const {
    if (cover_[v] != 0) return false;
    for (Vertex w : g_.neighbors(v)) {
      if (cover_[w] != 0) return false;
    }
    return true;
  }

  void toggle(Vertex v, int delta) {
    cover_[v] += delta;
    for (Vertex w : g_.neighbors(v)) cover_[w] += delta;
  }

  void visit(Vertex v, WeightSum weight) {
    if (v == g_.order()) {
      ++count_;
      if (!found_ || precedes(weight, current_, best_weight_, best_)) {
        found_ = true;
        best_weight_ = weight;
        best_ = current_;
      }
      return;
    }
    if (allowed_[v] && free_to_take(v)) {
      toggle(v, 1);
      current_.push_back(v);
      if (closes_ok(v)) visit(v + 1, weight + g_.weight(v));
      current_.pop_back();
      toggle(v, -1);
    }
    if (closes_ok(v)) visit(v + 1, weight);
  }

  const WeightedGraph& g_;
  std::vector<bool> allowed_;
  std::vector<int> cover_;
  std::vector<VertexSet> closes_at_;
  VertexSet current_;
  VertexSet best_;
  WeightSum best_weight_ = 0;
  bool found_ = false;
  std::uint64_t count_ = 0;
};

class ExactCover {
 public:
  ExactCover(const WeightedGraph& g, const ProgressCallback& progress)
      : g_(g),
        progress_(progress),
        covered_(static_cast<std::size_t>(g.order()), false),
        available_(static_cast<std::size_t>(g.order()), true),
        options_(static_cast<std::size_t>(g.order()), 0) {
    for (Vertex v = 0; v < g.order(); ++v) options_[v] = g.degree(v) + 1;
  }

  OracleResult run() {
    search(0);
    OracleResult r;
    if (found_) {
      r.exists = true;
      r.best_weight = best_weight_;
      r.best_set = best_;
    }
    return r;
  }

 private:
  // Undo log entries: vertex covered, or candidate made unavailable.
  struct Change {
    bool covered;
    Vertex v;
  };

  void block(Vertex c) {
    available_[c] = false;
    --options_[c];
    for (Vertex y : g_.neighbors(c)) --options_[y];
    trail_.push_back({false, c});
  }

  void take(Vertex u) {
    auto cover = [&](Vertex w) {
      covered_[w] = true;
      trail_.push_back({true, w});
      if (available_[w]) block(w);
      for (Vertex c : g_.neighbors(w)) {
        if (available_[c]) block(c);
      }
    };
    cover(u);
    for (Vertex w : g_.neighbors(u)) cover(w);
    chosen_.push_back(u);
    weight_ += g_.weight(u);
  }

  void undo_to(std::size_t mark, std::size_t chosen_mark) {
    while (trail_.size() > mark) {
      Change ch = trail_.back();
      trail_.pop_back();
      if (ch.covered) {
        covered_[ch.v] = false;
      } else {
        available_[ch.v] = true;
        ++options_[ch.v];
        for (Vertex y : g_.neighbors(ch.v)) ++options_[y];
      }
    }
    while (chosen_.size() > chosen_mark) {
      weight_ -= g_.weight(chosen_.back());
      chosen_.pop_back();
    }
  }

  void search(Vertex from) {
    if (progress_ && (++nodes_ & 0xfff) == 0) progress_(nodes_);
    const std::size_t mark = trail_.size();
    const std::size_t chosen_mark = chosen_.size();

    // Unit propagation over all uncovered vertices; the lowest uncovered id
    // becomes the branching vertex.
    Vertex branch = -1;
    for (bool changed = true; changed;) {
      changed = false;
      branch = -1;
      for (Vertex x = from; x < g_.order(); ++x) {
        if (covered_[x]) continue;
        if (options_[x] == 0) {
          undo_to(mark, chosen_mark);
          return;
        }
        if (options_[x] == 1) {
          take(forced_cover(x));
          changed = true;
          break;
        }
        if (branch < 0) branch = x;
      }
      if (found_ && weight_ > best_weight_) {
        undo_to(mark, chosen_mark);
        return;
      }
    }

    if (branch < 0) {
      VertexSet set = chosen_;
      std::sort(set.begin(), set.end());
      if (!found_ || precedes(weight_, set, best_weight_, best_)) {
        found_ = true;
        best_weight_ = weight_;
        best_ = std::move(set);
      }
      undo_to(mark, chosen_mark);
      return;
    }

    VertexSet candidates;
    if (available_[branch]) candidates.push_back(branch);
    for (Vertex c : g_.neighbors(branch)) {
      if (available_[c]) candidates.push_back(c);
    }
    std::sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
      return g_.weight(a) != g_.weight(b) ? g_.weight(a) < g_.weight(b) : a < b;
    });
    for (Vertex c : candidates) {
      if (found_ && weight_ + g_.weight(c) > best_weight_) break;
      const std::size_t inner = trail_.size();
      const std::size_t inner_chosen = chosen_.size();
      take(c);
      search(branch + 1);
      undo_to(inner, inner_chosen);
    }
    undo_to(mark, chosen_mark);
  }

  Vertex forced_cover(Vertex x) const {
    if (available_[x]) return x;
    for (Vertex c : g_.neighbors(x)) {
      if (available_[c]) return c;
    }
    return -1;  // unreachable: options_[x] == 1
  }

  const WeightedGraph& g_;
  const ProgressCallback& progress_;
  std::vector<bool> covered_;
  std::vector<bool> available_;
  std::vector<int> options_;  // available candidates in N[x]
  std::vector<Change> trail_;
  VertexSet chosen_;
  WeightSum weight_ = 0;
  VertexSet best_;
  WeightSum best_weight_ = 0;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult brute_force_wed(const WeightedGraph& g, int limit) {
  check_limit(g.order(), limit, "vertex count");
  return EdEnumerator(g, std::vector<bool>(static_cast<std::size_t>(g.order()), true)).run();
}

OracleResult brute_force_kbwed(const WeightedGraph& g, int k, int limit) {
  check_limit(g.order(), limit, "vertex count");
  std::vector<bool> allowed(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) allowed[v] = g.degree(v) <= k;
  return EdEnumerator(g, std::move(allowed)).run();
}

OracleResult exact_cover_ed(const WeightedGraph& g, const ProgressCallback& progress) {
  return ExactCover(g, progress).run();
}

std::pair<VertexSet, WeightSum> exact_mwis(const WeightedGraph& g, int limit) {
  check_limit(g.order(), limit, "vertex count");
  const int n = g.order();
  std::vector<WeightSum> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int v = n - 1; v >= 0; --v) suffix[v] = suffix[v + 1] + g.weight(v);

  VertexSet current;
  VertexSet best;
  WeightSum best_weight = 0;
  std::vector<bool> blocked(static_cast<std::size_t>(n), false);
  // Larger weight wins; ties go to the lexicographically smaller set.
  auto visit = [&](auto&& self, Vertex v, WeightSum w) -> void {
    if (w + suffix[v] < best_weight) return;
    if (v == n) {
      if (w > best_weight || std::lexicographical_compare(current.begin(), current.end(),
                                                          best.begin(), best.end())) {
        best_weight = w;
        best = current;
      }
      return;
    }
    if (!blocked[v]) {
      VertexSet newly;
      for (Vertex u : g.neighbors(v)) {
        if (u > v && !blocked[u]) {
          blocked[u] = true;
          newly.push_back(u);
        }
      }
      current.push_back(v);
      self(self, v + 1, w + g.weight(v));
      current.pop_back();
      for (Vertex u : newly) blocked[u] = false;
    }
    self(self, v + 1, w);
  };
  visit(visit, 0, 0);
  return {best, best_weight};
}

OneInThreeResult one_in_three_brute(const MonotoneCnf& f, int limit) {
  check_limit(f.variables, limit, "variable count");
  const auto n = static_cast<std::size_t>(f.variables);
  std::vector<bool> assignment(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) assignment[i] = (mask >> i) & 1U;
    if (one_in_three(f, assignment)) return {true, assignment};
  }
  return {false, std::nullopt};
}

}  // namespace effdom
