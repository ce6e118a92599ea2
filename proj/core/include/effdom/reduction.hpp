#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "effdom/cnf.hpp"
#include "effdom/graph.hpp"

namespace effdom {

// Graph built from a monotone 3-CNF so that its efficient dominating sets
// correspond to one-in-three satisfying assignments.
struct ReductionGraph {
  WeightedGraph graph;
  std::vector<std::string> roles;  // roles[v], e.g. "vbar(2,3)", "w(1,4;2)", "C(5)"
  int girth = 3;
  int variables = 0;
  int clauses = 0;
  // Per variable: vertices that are all in D when the variable is true (V),
  // all in D when it is false (W), and never in D (X).
  std::vector<VertexSet> v_sets;
  std::vector<VertexSet> w_sets;
  std::vector<VertexSet> x_sets;
  VertexSet clause_vertices;
};

class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Requires girth >= 3 and a valid formula (std::invalid_argument otherwise).
ReductionGraph build_reduction(const MonotoneCnf& f, int girth);

// Vertex count of the construction: n (6m - 1) + 18gm + m.
std::uint64_t reduction_order(int variables, int clauses, int girth);

// The dominating set built from an assignment: V_i for true variables, W_i
// for false ones.
VertexSet assignment_to_set(const ReductionGraph& r, const std::vector<bool>& assignment);

// Variable i is true iff V_i ⊆ D. Throws std::invalid_argument if D is not
// an e.d. and IntegrityError if some variable has neither V_i nor W_i in D.
std::vector<bool> extract_assignment(const ReductionGraph& r, std::span<const Vertex> d);

// "<id> <role>" lines with 1-based ids.
std::string render_roles(const ReductionGraph& r);

// Length of a shortest cycle, or 0 for forests. BFS from every vertex.
int graph_girth(const WeightedGraph& g);
bool is_bipartite(const WeightedGraph& g);
int max_degree(const WeightedGraph& g);

}  // namespace effdom
