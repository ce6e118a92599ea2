#pragma once

#include "effdom/framework.hpp"

namespace effdom {

ProcedureResult candidate_p6s122(const WeightedGraph& g, Vertex anchor,
                                 const DistanceLevels& levels);

}  // namespace effdom
