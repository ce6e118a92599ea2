#pragma once

#include <gtest/gtest.h>

#include <functional>

#include "effdom/framework.hpp"
#include "effdom/graph_io.hpp"
#include "effdom/oracle.hpp"
#include "generators.hpp"

namespace effdom::testing {

using Solver = std::function<Outcome(const WeightedGraph&)>;

// Members must match the oracle exactly. Non-members may get any verdict,
// but what is reported must still be true.
inline void expect_sound(const WeightedGraph& g, const Outcome& o, bool member) {
  switch (o.status) {
    case Status::Solved:
      ASSERT_TRUE(o.solution.has_value());
      EXPECT_TRUE(is_efficient_dominating(g, o.solution->vertices));
      EXPECT_EQ(g.weight_of(o.solution->vertices), o.solution->weight);
      break;
    case Status::NotInClass:
      ASSERT_TRUE(o.evidence.has_value());
      EXPECT_FALSE(member) << "witness reported for a class member";
      EXPECT_TRUE(induces(g, o.evidence->vertices, o.evidence->pattern));
      break;
    case Status::NoEd:
      break;
  }
  if (!member) return;
  const auto r = brute_force_wed(g);
  ASSERT_EQ(o.status == Status::Solved, r.exists) << render_graph(g);
  if (r.exists) {
    EXPECT_EQ(o.solution->weight, *r.best_weight) << render_graph(g);
  }
}

inline void check_all_small(ClassTag tag, const Solver& solver, int max_n = 6) {
  Rng rng(1000 + static_cast<int>(tag));
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& base : connected_graphs(n)) {
      const bool member = !class_witness(base, tag);
      for (int round = 0; round < 3; ++round) {
        const auto g = round == 0 ? base : with_random_weights(base, rng, round == 1 ? 3 : 20);
        SCOPED_TRACE(render_graph(g));
        expect_sound(g, solver(g), member);
      }
    }
  }
}

// Random connected members of the class, from planted and plain samples.
inline WeightedGraph random_member(ClassTag tag, int n, Rng& rng) {
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::bernoulli_distribution planted(0.7);
  for (;;) {
    WeightedGraph g = planted(rng)
                          ? planted_ed(n, std::uniform_int_distribution<int>(1, std::max(1, n / 3))(rng),
                                       density(rng), rng)
                          : random_connected(n, density(rng) / 2, rng);
    if (!is_connected(g) || class_witness(g, tag)) continue;
    return with_random_weights(g, rng);
  }
}

inline void check_random_members(ClassTag tag, const Solver& solver, int count, int min_n,
                                 int max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_int_distribution<int> size(min_n, max_n);
  for (int t = 0; t < count; ++t) {
    const auto g = random_member(tag, size(rng), rng);
    SCOPED_TRACE(render_graph(g));
    expect_sound(g, solver(g), true);
  }
}

inline void check_random_graphs(ClassTag tag, const Solver& solver, int count, int n,
                                std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < count; ++t) {
    const auto g = with_random_weights(random_connected(n, 0.05 + 0.01 * (t % 30), rng), rng);
    SCOPED_TRACE(render_graph(g));
    expect_sound(g, solver(g), !class_witness(g, tag));
  }
}

}  // namespace effdom::testing
