//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <random>

#include "cyclograph/clique.hpp"
#include "oracles.hpp"

using namespace cyclograph;
using namespace std::chrono_literals;

TEST(Clique, Empty) {
  auto r = max_clique(BitGraph(0), 1000ms);
  EXPECT_TRUE(r.vertices.empty());
  EXPECT_TRUE(r.exact);
}

TEST(Clique, IsolatedVertices) {
  auto r = max_clique(BitGraph(4), 1000ms);
  EXPECT_EQ(r.vertices.size(), 1U);
  EXPECT_TRUE(r.exact);
}

TEST(Clique, CompleteFive) {
  BitGraph g(5);
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      g.add_edge(a, b);
  auto r = max_clique(g, 1000ms);
  EXPECT_EQ(r.vertices, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(g.num_edges(), 10);
}

TEST(Clique, WideGraphCrossesWords) {
  // Clique on vertices spread over three 64-bit words.
  BitGraph g(150);
  std::vector<int> members{3, 70, 71, 130, 149};
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      g.add_edge(members[a], members[b]);
  for (int v = 0; v + 1 < 150; v += 2)
    g.add_edge(v, v + 1);
  auto r = max_clique(g, 1000ms);
  EXPECT_EQ(r.vertices, members);
}

TEST(Clique, MatchesSubsetEnumeration) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    BitGraph g(n);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (std::bernoulli_distribution(p)(rng)) {
          g.add_edge(a, b);
          adj[a][b] = adj[b][a] = true;
        }
    auto r = max_clique(g, 5000ms);
    ASSERT_TRUE(r.exact);
    ASSERT_EQ(static_cast<int>(r.vertices.size()), oracle::brute_clique(n, adj))
        << "trial " << trial;
    for (std::size_t a = 0; a < r.vertices.size(); ++a)
      for (std::size_t b = a + 1; b < r.vertices.size(); ++b)
        ASSERT_TRUE(g.adjacent(r.vertices[a], r.vertices[b]));
  }
}

TEST(Clique, DeterministicWithAmpleBudget) {
  std::mt19937 rng(62);
  BitGraph g(60);
  for (int a = 0; a < 60; ++a)
    for (int b = a + 1; b < 60; ++b)
      if (std::bernoulli_distribution(0.5)(rng))
        g.add_edge(a, b);
  auto x = max_clique(g, 10000ms);
  auto y = max_clique(g, 10000ms);
  EXPECT_TRUE(x.exact);
  EXPECT_EQ(x.vertices, y.vertices);
  EXPECT_EQ(x.search_nodes, y.search_nodes);
}

TEST(Clique, DeadlineReturnsValidClique) {
  std::mt19937 rng(63);
  BitGraph g(400);
  for (int a = 0; a < 400; ++a)
    for (int b = a + 1; b < 400; ++b)
      if (std::bernoulli_distribution(0.9)(rng))
        g.add_edge(a, b);
  auto start = std::chrono::steady_clock::now();
  auto r = max_clique(g, 50ms);
  auto spent = std::chrono::steady_clock::now() - start;
  EXPECT_FALSE(r.exact);
  EXPECT_LT(spent, 2000ms);
  EXPECT_FALSE(r.vertices.empty());
  for (std::size_t a = 0; a < r.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < r.vertices.size(); ++b)
      ASSERT_TRUE(g.adjacent(r.vertices[a], r.vertices[b]));
}
