//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <random>

#include "cyclograph/graphcore.hpp"
#include "cyclograph/molio.hpp"
#include "oracles.hpp"

using namespace cyclograph;
using oracle::cycle_edges;
using oracle::make_graph;

namespace {

MolecularGraph two_triangles_joined() {
  auto e = cycle_edges(0, 3);
  auto f = cycle_edges(3, 3);
  e.insert(e.end(), f.begin(), f.end());
  e.emplace_back(2, 3);
  return make_graph(6, e);
}

MolecularGraph bowtie() {
  auto e = cycle_edges(0, 3);
  e.insert(e.end(), {{2, 3}, {3, 4}, {4, 2}});
  return make_graph(5, e);
}

MolecularGraph k4() {
  return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST(PruneLeaves, TreeBecomesEmpty) {
  auto g = make_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  auto sg = prune_leaves(g);
  EXPECT_TRUE(sg.empty());
  EXPECT_TRUE(sg.kept_atoms().empty());
}

TEST(PruneLeaves, TriangleWithChain) {
  auto e = cycle_edges(0, 3);
  e.insert(e.end(), {{2, 3}, {3, 4}, {4, 5}});
  auto sg = prune_leaves(make_graph(6, e));
  EXPECT_EQ(sg.kept_atoms(), (std::vector<AtomId>{0, 1, 2}));
  EXPECT_EQ(sg.kept_bonds(), (std::vector<BondIndex>{0, 1, 2}));
}

TEST(PruneLeaves, CycleUnchanged) {
  auto sg = prune_leaves(make_graph(6, cycle_edges(0, 6)));
  EXPECT_EQ(sg.kept_atoms().size(), 6U);
  EXPECT_EQ(sg.kept_bonds().size(), 6U);
}

TEST(Isthmus, TwoTrianglesJoinedByEdge) {
  auto g = two_triangles_joined();
  EXPECT_EQ(find_isthmuses(full_structure(g)), (std::vector<BondIndex>{6}));
}

TEST(Isthmus, HexagonHasNone) {
  EXPECT_TRUE(find_isthmuses(full_structure(make_graph(6, cycle_edges(0, 6)))).empty());
}

TEST(Isthmus, BowtieHasNoneButTwoComponents) {
  auto g = bowtie();
  EXPECT_TRUE(oracle::brute_bridges(g).empty());
  EXPECT_TRUE(find_isthmuses(full_structure(g)).empty());
  auto comps = decompose(g);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0].num_bonds(), 3);
  EXPECT_EQ(comps[1].num_bonds(), 3);
  EXPECT_EQ(comps[0].component_id, 0);
  EXPECT_EQ(comps[0].atom_ids, (std::vector<AtomId>{0, 1, 2}));
  EXPECT_EQ(comps[1].atom_ids, (std::vector<AtomId>{2, 3, 4}));
}

TEST(Components, K4IsOne) {
  auto comps = decompose(k4());
  ASSERT_EQ(comps.size(), 1U);
  EXPECT_EQ(comps[0].num_bonds(), 6);
}

TEST(Components, IdsFollowSmallestAtom) {
  // Second ring listed first in bond order but holding the larger atoms.
  auto e = cycle_edges(4, 4);
  auto f = cycle_edges(0, 3);
  e.insert(e.end(), f.begin(), f.end());
  e.emplace_back(2, 4);
  auto comps = decompose(make_graph(8, e));
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0].atom_ids.front(), 0);
  EXPECT_EQ(comps[1].atom_ids.front(), 4);
}

TEST(Components, QuinineHasTwo) {
  auto mols = parse_sdf(oracle::slurp(CYCLOGRAPH_DATA_DIR "/fixtures.sdf"));
  auto it = std::find_if(mols.begin(), mols.end(),
                         [](const auto &g) { return g.name == "quinine"; });
  ASSERT_NE(it, mols.end());
  auto comps = decompose(*it);
  ASSERT_EQ(comps.size(), 2U);
  // Quinoline: 10 atoms, 11 bonds. Quinuclidine: 8 atoms, 9 bonds.
  std::vector<std::pair<int, int>> sizes;
  for (const auto &c : comps)
    sizes.emplace_back(c.num_atoms(), c.num_bonds());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::pair<int, int>>{{8, 9}, {10, 11}}));
}

TEST(ShortestPath, Examples) {
  auto g = make_graph(3, {{0, 1}, {1, 2}});
  std::vector<AtomId> a{0}, b{1}, c{2};
  std::vector<BondIndex> none, first{0};
  EXPECT_EQ(shortest_path_len(g, a, a, none), 0);
  EXPECT_EQ(shortest_path_len(g, a, c, none), 2);
  EXPECT_FALSE(shortest_path_len(g, a, c, first).has_value());
  std::vector<AtomId> ab{0, 1}, bc{1, 2};
  EXPECT_EQ(shortest_path_len(g, ab, bc, none), 0);
}

TEST(StructuralCore, DropsLeavesAndBridges) {
  auto g = two_triangles_joined();
  g.atoms.push_back(Atom{"O"});
  g.bonds.push_back(Bond{0, 6, BondOrder::kDouble});
  auto core = structural_core(g);
  EXPECT_EQ(core.num_atoms(), 6);
  EXPECT_EQ(core.num_bonds(), 6);
}

// Random-graph properties.

TEST(GraphcoreProperties, BridgesMatchBruteForce) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 9)(rng);
    int m = std::uniform_int_distribution<int>(n - 1, std::min(10, n * (n - 1) / 2))(rng);
    auto g = oracle::random_connected(rng, n, m);
    auto ours = find_isthmuses(full_structure(g));
    auto brute = oracle::brute_bridges(g);
    ASSERT_EQ(std::vector<int>(ours.begin(), ours.end()), brute) << "trial " << trial;
  }
}

TEST(GraphcoreProperties, PrunedMinDegreeTwo) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 10)(rng);
    int m = std::uniform_int_distribution<int>(n - 1, std::min(14, n * (n - 1) / 2))(rng);
    auto g = oracle::random_connected(rng, n, m);
    auto sg = prune_leaves(g);
    for (AtomId v : sg.kept_atoms())
      ASSERT_GE(sg.degree(v), 2);
  }
}

TEST(GraphcoreProperties, ComponentsPartitionNonBridges) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 10)(rng);
    int m = std::uniform_int_distribution<int>(n - 1, std::min(14, n * (n - 1) / 2))(rng);
    auto g = oracle::random_connected(rng, n, m);
    auto bridges = oracle::brute_bridges(g);
    std::vector<int> seen(g.num_bonds(), 0);
    for (const auto &c : decompose(g))
      for (BondIndex b : c.bond_indices)
        ++seen[b];
    for (int b = 0; b < g.num_bonds(); ++b) {
      bool bridge = std::find(bridges.begin(), bridges.end(), b) != bridges.end();
      ASSERT_EQ(seen[b], bridge ? 0 : 1) << "trial " << trial << " bond " << b;
    }
  }
}

// K - 1 <= p holds for 2-edge-connected pieces (the components left after
// deleting the p isthmuses). Blocks split further at cut atoms, so the block
// count can exceed p + 1: the bowtie has two blocks and no isthmus.
TEST(GraphcoreProperties, EdgeConnectedPiecesBoundedByIsthmuses) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 10)(rng);
    int m = std::uniform_int_distribution<int>(n - 1, std::min(14, n * (n - 1) / 2))(rng);
    auto g = oracle::random_connected(rng, n, m);
    auto bridges = find_isthmuses(full_structure(g));
    auto rest = oracle::edge_list(g);
    std::vector<std::pair<int, int>> kept;
    std::vector<int> deg(n, 0);
    for (int b = 0; b < g.num_bonds(); ++b)
      if (std::find(bridges.begin(), bridges.end(), b) == bridges.end()) {
        kept.push_back(rest[b]);
        ++deg[rest[b].first];
        ++deg[rest[b].second];
      }
    int isolated = static_cast<int>(std::count(deg.begin(), deg.end(), 0));
    int pieces = oracle::count_components(n, kept) - isolated;
    ASSERT_LE(pieces - 1, static_cast<int>(bridges.size()));
    // Every block lies inside exactly one piece.
    ASSERT_GE(static_cast<int>(decompose(g).size()), pieces);
  }
  auto b = bowtie();
  EXPECT_EQ(decompose(b).size(), 2U);
  EXPECT_TRUE(find_isthmuses(full_structure(b)).empty());
}
