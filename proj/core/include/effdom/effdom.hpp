#pragma once

#include "effdom/bounded.hpp"
#include "effdom/cnf.hpp"
#include "effdom/cotree.hpp"
#include "effdom/framework.hpp"
#include "effdom/graph.hpp"
#include "effdom/graph_io.hpp"
#include "effdom/oracle.hpp"
#include "effdom/pattern.hpp"
#include "effdom/reduction.hpp"
#include "effdom/solver_2p2.hpp"
#include "effdom/solver_2p3s122.hpp"
#include "effdom/solver_p2p4.hpp"
#include "effdom/solver_p5.hpp"
#include "effdom/solver_p6s122.hpp"
