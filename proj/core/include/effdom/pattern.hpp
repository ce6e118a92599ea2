#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "effdom/graph.hpp"

namespace effdom {

enum class PatternId { P2, P3, P4, P5, P6, P7, TwoP2, TwoP3, P2P3, P2P4, S122, Claw };

inline constexpr PatternId kAllPatterns[] = {
    PatternId::P2,    PatternId::P3,    PatternId::P4,   PatternId::P5,
    PatternId::P6,    PatternId::P7,    PatternId::TwoP2, PatternId::TwoP3,
    PatternId::P2P3,  PatternId::P2P4,  PatternId::S122, PatternId::Claw};

// "P5", "2P2", "P2+P4", "S122", "claw", ...
std::string_view pattern_name(PatternId p);
std::optional<PatternId> parse_pattern(std::string_view name);

int pattern_order(PatternId p);

// Edges over pattern positions 0..order-1. Pattern order is the order in
// which find_induced reports a witness:
//   P_k    path order
//   2P2    0-1, 2-3            2P3    0-1-2, 3-4-5
//   P2+P3  0-1, 2-3-4          P2+P4  0-1, 2-3-4-5
//   S122   a b c d e f with path a-b-c-d-e and f adjacent to c
//   claw   center 0, leaves 1 2 3
const std::vector<Edge>& pattern_edges(PatternId p);

// True iff the tuple has pattern_order(p) distinct vertices and uv is an edge
// of G exactly when the corresponding positions are adjacent in p.
bool induces(const WeightedGraph& g, std::span<const Vertex> tuple, PatternId p);

// Lexicographically least tuple (in pattern order) inducing p, or nullopt if
// G is p-free. Exhaustive backtracking; fine for small patterns, worst case
// O(n^|p|).
std::optional<VertexSet> find_induced(const WeightedGraph& g, PatternId p);

// Clique partition of G[subset] if it is P3-free, nullopt otherwise. Cliques
// are sorted and ordered by smallest member.
std::optional<std::vector<VertexSet>> is_cluster(const WeightedGraph& g,
                                                 std::span<const Vertex> subset);

// Components of the complement of G[subset], without building the complement.
std::vector<VertexSet> co_components_within(const WeightedGraph& g,
                                            std::span<const Vertex> subset);

bool is_co_connected(const WeightedGraph& g);

}  // namespace effdom
