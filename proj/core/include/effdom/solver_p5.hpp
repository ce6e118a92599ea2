#pragma once

#include "effdom/framework.hpp"

namespace effdom {

// Per-anchor candidate for P5-free graphs: the anchor plus one minimum-weight
// universal vertex from each component of G[N3].
ProcedureResult candidate_p5(const WeightedGraph& g, Vertex anchor, const DistanceLevels& levels);

// Square route: an e.d. is an independent set of G^2 whose closed
// neighborhood sizes add up to n. Exact whenever G^2 turns out to be a
// cograph; otherwise NotInClass with a P5 witness, or NoEd if G is P5-free.
Outcome solve_p5_square(const WeightedGraph& g);

}  // namespace effdom
