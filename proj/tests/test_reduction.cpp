#include <gtest/gtest.h>

#include "effdom/cnf.hpp"
#include "effdom/framework.hpp"
#include "effdom/graph_io.hpp"
#include "effdom/oracle.hpp"
#include "effdom/reduction.hpp"
#include "generators.hpp"

#include <numeric>
#include <set>

namespace effdom {
namespace {

MonotoneCnf one_clause() { return MonotoneCnf::from_clauses(3, {{0, 1, 2}}); }

MonotoneCnf random_cnf(testing::Rng& rng, int max_vars, int max_clauses) {
  std::uniform_int_distribution<int> nv(3, max_vars), nc(1, max_clauses);
  const int n = nv(rng), m = nc(rng);
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 0);
  std::vector<std::array<int, 3>> clauses;
  for (int j = 0; j < m; ++j) {
    std::shuffle(vars.begin(), vars.end(), rng);
    clauses.push_back({vars[0], vars[1], vars[2]});
  }
  return MonotoneCnf::from_clauses(n, clauses);
}

TEST(Cnf, Parses) {
  const auto f = parse_monotone_cnf("c hi\np cnf 3 1\n1 2 3 0\n");
  EXPECT_EQ(f.variables, 3);
  ASSERT_EQ(f.clauses.size(), 1u);
  EXPECT_EQ(f.clauses[0], (std::array<int, 3>{0, 1, 2}));
  EXPECT_EQ(f.position(1, 0), 0);
}

TEST(Cnf, RejectsBadFormulas) {
  EXPECT_THROW(parse_monotone_cnf("p cnf 3 1\n1 -2 3 0\n"), ParseError);
  EXPECT_THROW(parse_monotone_cnf("p cnf 2 1\n1 2 2 0\n"), ParseError);
  EXPECT_THROW(parse_monotone_cnf("p cnf 4 1\n1 2 3 4 0\n"), ParseError);
  EXPECT_THROW(parse_monotone_cnf("p cnf 3 1\n1 2 4 0\n"), ParseError);
  EXPECT_THROW(parse_monotone_cnf("p cnf 3 2\n1 2 3 0\n"), ParseError);
  EXPECT_THROW(MonotoneCnf::from_clauses(2, {{0, 1, 1}}), std::invalid_argument);
}

TEST(Cnf, ClauseOrderDefaultsToAscending) {
  const auto f = MonotoneCnf::from_clauses(4, {{0, 1, 2}, {1, 2, 3}, {0, 1, 3}});
  EXPECT_EQ(f.clause_order[1], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(f.position(0, 2), 1);
  EXPECT_EQ(f.position(0, 1), -1);
}

TEST(Reduction, SingleClauseShape) {
  const auto r = build_reduction(one_clause(), 3);
  EXPECT_EQ(static_cast<std::uint64_t>(r.graph.order()), reduction_order(3, 1, 3));
  EXPECT_EQ(r.graph.order(), 70);
  EXPECT_EQ(r.roles.size(), 70u);
  EXPECT_EQ(r.roles.back(), "C(1)");
  EXPECT_EQ(r.roles.front(), "wbar(1,1)");
  EXPECT_TRUE(is_bipartite(r.graph));
  EXPECT_LE(max_degree(r.graph), 3);
  EXPECT_TRUE(is_connected(r.graph));
}

TEST(Reduction, RolesAreABijection) {
  testing::Rng rng(157);
  const auto r = build_reduction(random_cnf(rng, 5, 4), 5);
  std::set<std::string> names(r.roles.begin(), r.roles.end());
  EXPECT_EQ(names.size(), r.roles.size());
  EXPECT_EQ(static_cast<int>(r.roles.size()), r.graph.order());
}

TEST(Reduction, GirthBound) {
  testing::Rng rng(163);
  for (int g : {3, 5, 8}) {
    for (int t = 0; t < 5; ++t) {
      const auto r = build_reduction(random_cnf(rng, 5, 4), g);
      const int girth = graph_girth(r.graph);
      EXPECT_TRUE(girth == 0 || girth >= g) << girth;
    }
  }
}

TEST(Reduction, RejectsSmallGirth) { EXPECT_THROW(build_reduction(one_clause(), 2), std::invalid_argument); }

TEST(Reduction, ExtractsAssignments) {
  const auto r = build_reduction(one_clause(), 3);
  for (int t = 0; t < 3; ++t) {
    std::vector<bool> a(3, false);
    a[t] = true;
    const auto d = assignment_to_set(r, a);
    EXPECT_TRUE(is_efficient_dominating(r.graph, d));
    EXPECT_EQ(extract_assignment(r, d), a);
  }
}

TEST(Reduction, FalsifyingAssignmentsGiveNoEd) {
  const auto r = build_reduction(one_clause(), 3);
  EXPECT_FALSE(is_efficient_dominating(r.graph, assignment_to_set(r, {true, true, false})));
  EXPECT_FALSE(is_efficient_dominating(r.graph, assignment_to_set(r, {false, false, false})));
  EXPECT_THROW(extract_assignment(r, assignment_to_set(r, {false, false, false})),
               std::invalid_argument);
}

TEST(Reduction, IntegrityErrorWhenNeitherSetIsPresent) {
  // A hand-made graph whose roles claim a V and W set that D avoids.
  ReductionGraph r;
  r.graph = testing::path_graph(3);
  r.variables = 1;
  r.v_sets = {{0}};
  r.w_sets = {{2}};
  EXPECT_THROW(extract_assignment(r, VertexSet{1}), IntegrityError);
}

TEST(Reduction, EdExistsIffOneInThreeSatisfiable) {
  testing::Rng rng(167);
  for (int t = 0; t < 40; ++t) {
    const auto f = random_cnf(rng, 5, 3);
    const auto r = build_reduction(f, 3);
    const auto ed = exact_cover_ed(r.graph);
    EXPECT_EQ(ed.exists, one_in_three_brute(f).satisfiable);
    if (ed.exists) {
      const auto a = extract_assignment(r, *ed.best_set);
      EXPECT_TRUE(one_in_three(f, a));
      for (Vertex c : r.clause_vertices) {
        EXPECT_FALSE(std::binary_search(ed.best_set->begin(), ed.best_set->end(), c));
      }
      for (const auto& x : r.x_sets) {
        for (Vertex v : x) {
          EXPECT_FALSE(std::binary_search(ed.best_set->begin(), ed.best_set->end(), v));
        }
      }
    }
  }
}

TEST(Reduction, RenderRoles) {
  const auto r = build_reduction(one_clause(), 3);
  const auto text = render_roles(r);
  EXPECT_EQ(text.substr(0, 12), "1 wbar(1,1)\n");
  EXPECT_NE(text.find("\n70 C(1)\n"), std::string::npos);
}

TEST(GraphMetrics, Basics) {
  EXPECT_EQ(graph_girth(testing::cycle_graph(7)), 7);
  EXPECT_EQ(graph_girth(testing::path_graph(7)), 0);
  EXPECT_EQ(graph_girth(testing::complete_graph(4)), 3);
  EXPECT_TRUE(is_bipartite(testing::cycle_graph(6)));
  EXPECT_FALSE(is_bipartite(testing::cycle_graph(5)));
  EXPECT_EQ(max_degree(testing::star_graph(5)), 5);
}

}  // namespace
}  // namespace effdom
