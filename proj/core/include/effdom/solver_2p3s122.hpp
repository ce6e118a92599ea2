#pragma once

#include "effdom/framework.hpp"

namespace effdom {

ProcedureResult candidate_2p3s122(const WeightedGraph& g, Vertex anchor,
                                  const DistanceLevels& levels);

// Same procedure, but the fallback witness search of the last branch is done
// at most once per graph and shared by all anchors (thread-safe).
CandidateProcedure make_2p3s122_procedure(const WeightedGraph& g);

}  // namespace effdom
