#include <gtest/gtest.h>

#include "effdom/framework.hpp"
#include "effdom/oracle.hpp"
#include "effdom/solver_p5.hpp"
#include "generators.hpp"

namespace effdom {
namespace {

using testing::cycle_graph;
using testing::graph_of;
using testing::path_graph;

TEST(EdCheck, Examples) {
  const auto c6 = cycle_graph(6);
  EXPECT_TRUE(is_efficient_dominating(c6, VertexSet{0, 3}));
  EXPECT_FALSE(is_efficient_dominating(c6, VertexSet{0, 2}));
  EXPECT_TRUE(is_efficient_dominating(testing::star_graph(3), VertexSet{0}));
  EXPECT_FALSE(is_efficient_dominating(c6, VertexSet{0, 9}));
  EXPECT_TRUE(is_efficient_dominating(WeightedGraph{}, VertexSet{}));
}

TEST(EdCheck, MatchesDefinitionOnAllSmallGraphs) {
  for (const auto& g : testing::labeled_graphs(4)) {
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      VertexSet d;
      for (Vertex v = 0; v < 4; ++v) {
        if (mask >> v & 1u) d.push_back(v);
      }
      bool ok = true;
      for (Vertex v = 0; v < 4; ++v) {
        int hits = mask >> v & 1u;
        for (Vertex u : g.neighbors(v)) hits += mask >> u & 1u;
        ok = ok && hits == 1;
      }
      EXPECT_EQ(is_efficient_dominating(g, d), ok);
    }
  }
}

TEST(Evidence, RejectsBogusTuples) {
  EXPECT_NO_THROW(make_evidence(path_graph(5), PatternId::P5, {0, 1, 2, 3, 4}));
  EXPECT_THROW(make_evidence(cycle_graph(5), PatternId::P5, {0, 1, 2, 3, 4}), std::logic_error);
}

TEST(RunRobust, TrivialProcedurePicksLighterEndpoint) {
  const auto g = path_graph(2).with_weights({4, 3});
  const auto o = run_robust(g, [](const WeightedGraph&, Vertex a, const DistanceLevels&) {
    return ProcedureResult{Candidate{{a}}};
  });
  ASSERT_EQ(o.status, Status::Solved);
  EXPECT_EQ(o.solution->vertices, VertexSet{1});
  EXPECT_EQ(o.solution->weight, 3u);
}

TEST(RunRobust, AllUnsuccessfulMeansNoEd) {
  const auto o = run_robust(path_graph(3), [](const WeightedGraph&, Vertex, const DistanceLevels&) {
    return ProcedureResult{Unsuccessful{}};
  });
  EXPECT_EQ(o.status, Status::NoEd);
  EXPECT_FALSE(o.caveat);
}

TEST(RunRobust, CaveatPropagates) {
  const auto o = run_robust(path_graph(3), [](const WeightedGraph&, Vertex a, const DistanceLevels&) {
    return ProcedureResult{Unsuccessful{a == 2}};
  });
  EXPECT_EQ(o.status, Status::NoEd);
  EXPECT_TRUE(o.caveat);
}

TEST(RunRobust, InvalidCandidatesAreDiscarded) {
  // {anchor} is only an e.d. for the centre of the star.
  const auto o = run_robust(testing::star_graph(4),
                            [](const WeightedGraph&, Vertex a, const DistanceLevels&) {
                              return ProcedureResult{Candidate{{a}}};
                            });
  ASSERT_EQ(o.status, Status::Solved);
  EXPECT_EQ(o.solution->vertices, VertexSet{0});
}

TEST(RunRobust, CandidateWithoutAnchorIsABug) {
  EXPECT_THROW(run_robust(path_graph(3),
                          [](const WeightedGraph&, Vertex a, const DistanceLevels&) {
                            return ProcedureResult{Candidate{{a == 0 ? 1 : 0}}};
                          }),
               std::logic_error);
}

TEST(RunRobust, FiveCycleWithP5Procedure) {
  EXPECT_EQ(run_robust(cycle_graph(5), candidate_p5).status, Status::NoEd);
}

TEST(RunRobust, RejectsDisconnectedInput) {
  EXPECT_THROW(run_robust(graph_of(3, {{1, 2}}), candidate_p5), std::invalid_argument);
  EXPECT_EQ(run_robust(WeightedGraph{}, candidate_p5).status, Status::Solved);
}

TEST(RunRobust, SmallestAnchorWitnessWinsInParallelToo) {
  const auto g = path_graph(9);
  RobustOptions par;
  par.parallel = true;
  par.threads = 4;
  const auto a = run_robust(g, candidate_p5);
  const auto b = run_robust(g, candidate_p5, par);
  ASSERT_EQ(a.status, Status::NotInClass);
  ASSERT_EQ(b.status, Status::NotInClass);
  EXPECT_EQ(a.evidence->vertices, b.evidence->vertices);
}

TEST(RunRobust, ParallelMatchesSequential) {
  testing::Rng rng(47);
  RobustOptions par;
  par.parallel = true;
  par.threads = 3;
  for (int t = 0; t < 60; ++t) {
    const auto g = testing::with_random_weights(testing::random_p5_free(10, rng), rng);
    const auto a = run_robust(g, candidate_p5);
    const auto b = run_robust(g, candidate_p5, par);
    ASSERT_EQ(a.status, b.status);
    if (a.solution) EXPECT_EQ(a.solution->vertices, b.solution->vertices);
  }
}

TEST(ClassTags, ParseAndName) {
  for (auto t : {ClassTag::TwoP2, ClassTag::P5, ClassTag::P5Square, ClassTag::P6S122,
                 ClassTag::TwoP3S122, ClassTag::P2P4, ClassTag::Bounded, ClassTag::Brute,
                 ClassTag::ExactCover, ClassTag::Auto}) {
    EXPECT_EQ(parse_class_tag(class_tag_name(t)), t);
  }
  EXPECT_FALSE(parse_class_tag("p7"));
  EXPECT_THROW(solve(path_graph(3), std::string_view("p7")), std::invalid_argument);
}

TEST(ClassWitness, Examples) {
  EXPECT_FALSE(class_witness(cycle_graph(5), ClassTag::P5));
  EXPECT_TRUE(class_witness(path_graph(5), ClassTag::P5));
  EXPECT_TRUE(class_witness(graph_of(4, {{1, 2}, {3, 4}}), ClassTag::TwoP2));
  EXPECT_FALSE(class_witness(path_graph(30), ClassTag::Bounded));
}

TEST(Solve, ComponentsAreIndependent) {
  const auto two_k2 = graph_of(4, {{1, 2}, {3, 4}});
  const auto o = solve(two_k2, ClassTag::Brute);
  ASSERT_EQ(o.status, Status::Solved);
  EXPECT_EQ(o.solution->weight, 2u);
  EXPECT_EQ(o.solution->vertices, (VertexSet{0, 2}));

  const auto k2_c4 = disjoint_union(path_graph(2), cycle_graph(4));
  EXPECT_EQ(solve(k2_c4, ClassTag::Brute).status, Status::NoEd);
}

TEST(Solve, AutoOnP4) {
  const auto o = solve(path_graph(4), ClassTag::Auto);
  ASSERT_EQ(o.status, Status::Solved);
  EXPECT_EQ(o.solution->vertices, (VertexSet{0, 3}));
}

TEST(Solve, AutoNeverReportsNotInClass) {
  testing::Rng rng(53);
  for (int t = 0; t < 80; ++t) {
    const auto g = testing::with_random_weights(testing::random_graph(11, 0.25, rng), rng);
    const auto o = solve(g, ClassTag::Auto);
    EXPECT_NE(o.status, Status::NotInClass);
    const auto r = exact_cover_ed(g);
    ASSERT_EQ(o.status == Status::Solved, r.exists);
    if (r.exists) EXPECT_EQ(o.solution->weight, *r.best_weight);
  }
}

TEST(Solve, ReportNamesSolverPerComponent) {
  const auto g = disjoint_union(path_graph(4), path_graph(7));
  const auto rep = solve_report(g, ClassTag::Auto);
  ASSERT_EQ(rep.used.size(), 2u);
  EXPECT_EQ(rep.used[0], ClassTag::TwoP2);
  EXPECT_NE(rep.used[1], ClassTag::Auto);
  EXPECT_EQ(rep.outcome.status, Status::Solved);
  EXPECT_EQ(rep.outcome.solution->weight, 5u);
}

TEST(Solve, RejectsBadDegreeBound) {
  SolveOptions opt;
  opt.k = 3;
  EXPECT_THROW(solve(path_graph(3), ClassTag::Bounded, opt), std::invalid_argument);
}

}  // namespace
}  // namespace effdom
