#include "effdom/framework.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "effdom/bounded.hpp"
#include "effdom/oracle.hpp"
#include "effdom/solver_2p2.hpp"
#include "effdom/solver_2p3s122.hpp"
#include "effdom/solver_p2p4.hpp"
#include "effdom/solver_p5.hpp"
#include "effdom/solver_p6s122.hpp"

namespace effdom {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Solved: return "solved";
    case Status::NoEd: return "no_ed";
    case Status::NotInClass: return "not_in_class";
  }
  return "?";
}

bool is_efficient_dominating(const WeightedGraph& g, std::span<const Vertex> d) {
  const int n = g.order();
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (Vertex v : d) {
    if (v < 0 || v >= n) return false;
    if (++hits[v] > 1) return false;
    for (Vertex u : g.neighbors(v)) {
      if (++hits[u] > 1) return false;
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

Evidence make_evidence(const WeightedGraph& g, PatternId p, VertexSet tuple) {
  if (!induces(g, tuple, p)) {
    throw std::logic_error("tuple does not induce " + std::string(pattern_name(p)));
  }
  return Evidence{p, std::move(tuple)};
}

namespace {

std::optional<Evidence> find_in(const WeightedGraph& g, std::span<const PatternId> patterns) {
  for (PatternId p : patterns) {
    if (auto t = find_induced(g, p)) return make_evidence(g, p, std::move(*t));
  }
  return std::nullopt;
}

// Per-anchor reduction state.
struct Pool {
  std::optional<Solution> best;
  bool caveat = false;
  Vertex outside_anchor = -1;
  std::optional<Evidence> outside;

  void offer(const WeightedGraph& g, Vertex anchor, ProcedureResult r) {
    if (auto* c = std::get_if<Candidate>(&r)) {
      VertexSet d = std::move(c->vertices);
      std::sort(d.begin(), d.end());
      if (!std::binary_search(d.begin(), d.end(), anchor)) {
        throw std::logic_error("candidate procedure returned a set without its anchor");
      }
      if (!is_efficient_dominating(g, d)) return;
      const WeightSum w = g.weight_of(d);
      if (!best || precedes(w, d, best->weight, best->vertices)) best = Solution{std::move(d), w};
    } else if (auto* u = std::get_if<Unsuccessful>(&r)) {
      caveat = caveat || u->caveat;
    } else {
      auto& o = std::get<OutsideClass>(r);
      if (outside_anchor < 0 || anchor < outside_anchor) {
        outside_anchor = anchor;
        outside = std::move(o.evidence);
      }
    }
  }

  void merge(const WeightedGraph& g, Pool other) {
    caveat = caveat || other.caveat;
    if (other.best && (!best || precedes(other.best->weight, other.best->vertices, best->weight,
                                         best->vertices))) {
      best = std::move(other.best);
    }
    if (other.outside_anchor >= 0 &&
        (outside_anchor < 0 || other.outside_anchor < outside_anchor)) {
      outside_anchor = other.outside_anchor;
      outside = std::move(other.outside);
    }
    (void)g;
  }

  Outcome finish() && {
    if (outside) return Outcome::not_in_class(std::move(*outside));
    if (best) return Outcome::solved(std::move(*best));
    return Outcome::no_ed(caveat);
  }
};

}  // namespace

std::optional<Evidence> find_any(const WeightedGraph& g,
                                 std::initializer_list<PatternId> patterns) {
  return find_in(g, std::span<const PatternId>(patterns.begin(), patterns.size()));
}

Outcome run_robust(const WeightedGraph& g, const CandidateProcedure& proc,
                   const RobustOptions& options) {
  if (!is_connected(g)) throw std::invalid_argument("run_robust needs a connected graph");
  const int n = g.order();
  if (n == 0) return Outcome::solved({});

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (!options.parallel || threads <= 1 || n < 2) {
    Pool pool;
    for (Vertex v = 0; v < n; ++v) {
      pool.offer(g, v, proc(g, v, distance_levels(g, v)));
      if (pool.outside) break;
    }
    return std::move(pool).finish();
  }

  threads = std::min<unsigned>(threads, static_cast<unsigned>(n));
  std::atomic<Vertex> next{0};
  // Anchors at or beyond this one cannot change the verdict any more.
  std::atomic<Vertex> cutoff{n};
  std::vector<Pool> pools(threads);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        for (Vertex v = next++; v < n && v < cutoff.load(); v = next++) {
          pools[t].offer(g, v, proc(g, v, distance_levels(g, v)));
          if (pools[t].outside_anchor == v) {
            Vertex cur = cutoff.load();
            while (v < cur && !cutoff.compare_exchange_weak(cur, v)) {
            }
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        cutoff.store(0);
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
  Pool total;
  for (auto& p : pools) total.merge(g, std::move(p));
  return std::move(total).finish();
}

std::string_view class_tag_name(ClassTag t) {
  switch (t) {
    case ClassTag::TwoP2: return "2p2";
    case ClassTag::P5: return "p5";
    case ClassTag::P5Square: return "p5-square";
    case ClassTag::P6S122: return "p6s122";
    case ClassTag::TwoP3S122: return "2p3s122";
    case ClassTag::P2P4: return "p2p4";
    case ClassTag::Bounded: return "2bwed";
    case ClassTag::Brute: return "brute";
    case ClassTag::ExactCover: return "exact-cover";
    case ClassTag::Auto: return "auto";
  }
  return "?";
}

std::optional<ClassTag> parse_class_tag(std::string_view name) {
  for (ClassTag t : {ClassTag::TwoP2, ClassTag::P5, ClassTag::P5Square, ClassTag::P6S122,
                     ClassTag::TwoP3S122, ClassTag::P2P4, ClassTag::Bounded, ClassTag::Brute,
                     ClassTag::ExactCover, ClassTag::Auto}) {
    if (class_tag_name(t) == name) return t;
  }
  return std::nullopt;
}

std::vector<PatternId> class_patterns(ClassTag t) {
  switch (t) {
    case ClassTag::TwoP2: return {PatternId::TwoP2};
    case ClassTag::P5:
    case ClassTag::P5Square: return {PatternId::P5};
    case ClassTag::P6S122: return {PatternId::P6, PatternId::S122};
    case ClassTag::TwoP3S122: return {PatternId::TwoP3, PatternId::S122};
    case ClassTag::P2P4: return {PatternId::P2P4};
    default: return {};
  }
}

std::optional<Evidence> class_witness(const WeightedGraph& g, ClassTag t) {
  const auto patterns = class_patterns(t);
  return find_in(g, patterns);
}

namespace {

Outcome from_oracle(const OracleResult& r) {
  if (!r.exists) return Outcome::no_ed();
  return Outcome::solved(Solution{*r.best_set, *r.best_weight});
}

// Cheapest recognizers first.
constexpr ClassTag kAutoOrder[] = {ClassTag::TwoP2, ClassTag::P2P4, ClassTag::P5,
                                   ClassTag::TwoP3S122, ClassTag::P6S122};

Outcome solve_connected(const WeightedGraph& g, ClassTag tag, const SolveOptions& options,
                        ClassTag& used) {
  used = tag;
  switch (tag) {
    case ClassTag::TwoP2: return solve_2p2(g);
    case ClassTag::P5: return run_robust(g, candidate_p5, options.robust);
    case ClassTag::P5Square: return solve_p5_square(g);
    case ClassTag::P6S122: return run_robust(g, candidate_p6s122, options.robust);
    case ClassTag::TwoP3S122: return run_robust(g, make_2p3s122_procedure(g), options.robust);
    case ClassTag::P2P4: return run_robust(g, candidate_p2p4, options.robust);
    case ClassTag::Bounded: return solve_kbwed(g, options.k);
    case ClassTag::Brute: return from_oracle(brute_force_wed(g));
    case ClassTag::ExactCover: return from_oracle(exact_cover_ed(g));
    case ClassTag::Auto: break;
  }
  for (ClassTag t : kAutoOrder) {
    if (class_witness(g, t)) continue;
    Outcome o = solve_connected(g, t, options, used);
    if (o.status != Status::NotInClass) return o;
    break;
  }
  used = ClassTag::ExactCover;
  return from_oracle(exact_cover_ed(g));
}

}  // namespace

SolveReport solve_report(const WeightedGraph& g, ClassTag tag, const SolveOptions& options) {
  if (tag == ClassTag::Bounded && (options.k < 0 || options.k > 2)) {
    throw std::invalid_argument("degree bound k must be 0, 1 or 2");
  }
  SolveReport report;
  Solution total;
  std::optional<Evidence> evidence;
  bool no_ed = false;
  bool caveat = false;
  for (const VertexSet& comp : connected_components(g)) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    ClassTag used = tag;
    Outcome o = solve_connected(sub.graph, tag, options, used);
    report.used.push_back(used);
    switch (o.status) {
      case Status::NotInClass:
        if (!evidence) {
          for (Vertex& v : o.evidence->vertices) v = sub.to_parent[v];
          evidence = std::move(o.evidence);
        }
        break;
      case Status::NoEd:
        no_ed = true;
        caveat = caveat || o.caveat;
        break;
      case Status::Solved:
        for (Vertex v : o.solution->vertices) total.vertices.push_back(sub.to_parent[v]);
        total.weight += o.solution->weight;
        break;
    }
  }
  if (evidence) {
    report.outcome = Outcome::not_in_class(std::move(*evidence));
  } else if (no_ed) {
    report.outcome = Outcome::no_ed(caveat);
  } else {
    std::sort(total.vertices.begin(), total.vertices.end());
    if (!is_efficient_dominating(g, total.vertices)) {
      throw std::logic_error("solver produced an invalid dominating set");
    }
    report.outcome = Outcome::solved(std::move(total));
  }
  return report;
}

Outcome solve(const WeightedGraph& g, ClassTag tag, const SolveOptions& options) {
  return solve_report(g, tag, options).outcome;
}

Outcome solve(const WeightedGraph& g, std::string_view tag, const SolveOptions& options) {
  auto t = parse_class_tag(tag);
  if (!t) throw std::invalid_argument("unknown class tag '" + std::string(tag) + "'");
  return solve(g, *t, options);
}

}  // namespace effdom
