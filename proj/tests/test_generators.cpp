#include <gtest/gtest.h>

#include "effdom/oracle.hpp"
#include "effdom/pattern.hpp"
#include "generators.hpp"

namespace effdom {
namespace {

TEST(Generators, ConnectedGraphCounts) {
  // Connected graphs up to isomorphism on 1..6 vertices.
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(testing::connected_graphs(n).size(), expected[n - 1]) << n;
    for (const auto& g : testing::connected_graphs(n)) EXPECT_TRUE(is_connected(g));
  }
}

TEST(Generators, PlantedInstancesHaveAnEd) {
  testing::Rng rng(179);
  for (int t = 0; t < 100; ++t) {
    const auto g = testing::planted_ed(12, 1 + t % 4, 0.3, rng);
    EXPECT_TRUE(exact_cover_ed(g).exists);
  }
}

TEST(Generators, SplitGraphsAreP5Free) {
  testing::Rng rng(181);
  for (int t = 0; t < 30; ++t) {
    const auto g = testing::random_split(6, 3, t % 3, rng);
    EXPECT_FALSE(find_induced(g, PatternId::P5));
    if (t % 3 == 0) EXPECT_TRUE(exact_cover_ed(g).exists);
  }
}

TEST(Generators, RandomP5FreeIsP5Free) {
  testing::Rng rng(191);
  for (int t = 0; t < 20; ++t) {
    const auto g = testing::random_p5_free(12, rng);
    EXPECT_TRUE(is_connected(g));
    EXPECT_FALSE(find_induced(g, PatternId::P5));
  }
}

}  // namespace
}  // namespace effdom
