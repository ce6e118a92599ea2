#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "effdom/graph.hpp"
#include "effdom/pattern.hpp"

namespace effdom {

enum class Status { Solved, NoEd, NotInClass };

std::string_view status_name(Status s);  // "solved", "no_ed", "not_in_class"

struct Solution {
  VertexSet vertices;  // sorted
  WeightSum weight = 0;
};

// An induced copy of `pattern`, listed in pattern order.
struct Evidence {
  PatternId pattern;
  VertexSet vertices;
};

// Solved always carries a validated e.d. NotInClass always carries a
// verified witness. NoEd is exact for inputs inside the solver's class; the
// caveat flag marks a NoEd reached through a branch that could not tell "no
// e.d." apart from "outside the class".
struct Outcome {
  Status status = Status::NoEd;
  std::optional<Solution> solution;
  std::optional<Evidence> evidence;
  bool caveat = false;

  static Outcome solved(Solution s) { return {Status::Solved, std::move(s), std::nullopt, false}; }
  static Outcome no_ed(bool caveat = false) { return {Status::NoEd, std::nullopt, std::nullopt, caveat}; }
  static Outcome not_in_class(Evidence e) { return {Status::NotInClass, std::nullopt, std::move(e), false}; }
};

// Per-anchor verdicts of a candidate procedure.
struct Candidate {
  VertexSet vertices;
};
struct Unsuccessful {
  bool caveat = false;
};
struct OutsideClass {
  Evidence evidence;
};
using ProcedureResult = std::variant<Candidate, Unsuccessful, OutsideClass>;

using CandidateProcedure =
    std::function<ProcedureResult(const WeightedGraph&, Vertex, const DistanceLevels&)>;

// |N[v] ∩ D| == 1 for every vertex v.
bool is_efficient_dominating(const WeightedGraph& g, std::span<const Vertex> d);

// Returns a witness of `p` wrapped as Evidence after checking it really is
// induced. Throws std::logic_error on a bogus tuple.
Evidence make_evidence(const WeightedGraph& g, PatternId p, VertexSet tuple);

// First witness among `patterns` found in g, if any.
std::optional<Evidence> find_any(const WeightedGraph& g, std::initializer_list<PatternId> patterns);

struct RobustOptions {
  bool parallel = false;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// For every anchor: distance levels, candidate procedure, validation. Keeps
// the best valid candidate under precedes(). A NotInClass from any anchor
// wins; with several, the smallest anchor's is reported (in parallel runs
// too). Throws std::invalid_argument on disconnected input.
Outcome run_robust(const WeightedGraph& g, const CandidateProcedure& proc,
                   const RobustOptions& options = {});

enum class ClassTag { TwoP2, P5, P5Square, P6S122, TwoP3S122, P2P4, Bounded, Brute, ExactCover, Auto };

std::string_view class_tag_name(ClassTag t);  // "2p2", "p5", ..., "auto"
std::optional<ClassTag> parse_class_tag(std::string_view name);

// Forbidden patterns of the class a tag targets; empty for tags that accept
// every graph.
std::vector<PatternId> class_patterns(ClassTag t);

// A forbidden induced subgraph of the tag's class, or nullopt if g is a member.
std::optional<Evidence> class_witness(const WeightedGraph& g, ClassTag t);

struct SolveOptions {
  int k = 2;  // degree bound for ClassTag::Bounded
  RobustOptions robust;
};

struct SolveReport {
  Outcome outcome;
  // Solver that produced each component's verdict; for `auto` this names the
  // class that was picked.
  std::vector<ClassTag> used;
};

// Splits g into components and solves each one. The minimum weight is the
// sum over components; NotInClass from any component wins, then NoEd.
SolveReport solve_report(const WeightedGraph& g, ClassTag tag, const SolveOptions& options = {});
Outcome solve(const WeightedGraph& g, ClassTag tag, const SolveOptions& options = {});
// Throws std::invalid_argument for unknown tags.
Outcome solve(const WeightedGraph& g, std::string_view tag, const SolveOptions& options = {});

}  // namespace effdom
