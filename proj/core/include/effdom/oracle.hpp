#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "effdom/cnf.hpp"
#include "effdom/graph.hpp"

namespace effdom {

struct OracleResult {
  bool exists = false;
  std::optional<WeightSum> best_weight;
  std::optional<VertexSet> best_set;
  // Number of efficient dominating sets; filled by the enumerating oracles only.
  std::optional<std::uint64_t> count;
};

// Exhaustive oracles refuse inputs above this many vertices (or variables)
// unless a larger limit is passed explicitly.
inline constexpr int kExhaustiveLimit = 25;

class OracleLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Minimum-weight e.d. by enumerating vertex subsets, ties broken by
// precedes(). Also counts all e.d.s.
OracleResult brute_force_wed(const WeightedGraph& g, int limit = kExhaustiveLimit);

// Same, restricted to sets whose members have degree <= k.
OracleResult brute_force_kbwed(const WeightedGraph& g, int k,
                               int limit = kExhaustiveLimit);

// Called every few thousand search nodes with the running node count.
using ProgressCallback = std::function<void(std::uint64_t nodes)>;

// Exact cover of V by closed neighborhoods: branches on the lowest-id
// uncovered vertex, forces vertices with a single remaining cover, and
// bounds on weight. No size limit.
OracleResult exact_cover_ed(const WeightedGraph& g, const ProgressCallback& progress = {});

// Maximum-weight independent set by exhaustive search; ties go to the
// lexicographically smaller set.
std::pair<VertexSet, WeightSum> exact_mwis(const WeightedGraph& g,
                                           int limit = kExhaustiveLimit);

struct OneInThreeResult {
  bool satisfiable = false;
  // First satisfying assignment when assignments are enumerated as binary
  // counters with variable 1 as the lowest bit.
  std::optional<std::vector<bool>> witness;
};

OneInThreeResult one_in_three_brute(const MonotoneCnf& f, int limit = kExhaustiveLimit);

}  // namespace effdom
