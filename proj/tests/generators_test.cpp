#include "fourecc/generators.hpp"

#include <gtest/gtest.h>

#include "fourecc/oracle.hpp"

namespace fourecc {
namespace {

TEST(Generators, ThreeCyclesCounts) {
  const auto g = three_cycles(4, 1);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 12u);
  for (VertexId v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 6u);
  EXPECT_EQ(g, three_cycles(4, 1));
  EXPECT_NE(g, three_cycles(4, 2));
}

TEST(Generators, ThreeCyclesAreHighlyConnected) {
  // Each Hamiltonian cycle crosses every cut twice.
  for (std::size_t n = 2; n <= 12; ++n) {
    EXPECT_TRUE(oracle::is_k_edge_connected(three_cycles(n, n), 6)) << n;
  }
}

TEST(Generators, K4ChainCounts) {
  const auto g = k4_chain(8);
  EXPECT_EQ(g.vertex_count(), 8u);
  EXPECT_EQ(g.edge_count(), 15u);
  EXPECT_EQ(g.edge(6), (Edge{1, 5}));  // bundle follows the first block
  EXPECT_TRUE(oracle::is_k_edge_connected(k4_chain(12), 3));
  EXPECT_FALSE(oracle::is_k_edge_connected(k4_chain(12), 4));
  EXPECT_THROW(k4_chain(6), std::invalid_argument);
}

TEST(Generators, RandomMultiIsRegular) {
  const auto g = random_multi(10, 3, 9);
  EXPECT_EQ(g.edge_count(), 15u);
  for (VertexId v = 0; v < 10; ++v) EXPECT_EQ(g.degree(v), 3u);
  EXPECT_THROW(random_multi(5, 3, 1), std::invalid_argument);
}

TEST(Generators, DispatchByName) {
  EXPECT_EQ(generate("k4_chain", 8, 0), k4_chain(8));
  EXPECT_EQ(generate("random_multi", 6, 3, 4), random_multi(6, 4, 3));
  EXPECT_THROW(generate("petersen", 10, 0), std::invalid_argument);
}

TEST(Rng, BelowStaysInRange) {
  Rng rng(77);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[rng.below(7)];
  for (const int h : hits) EXPECT_GT(h, 800);
}

}  // namespace
}  // namespace fourecc
