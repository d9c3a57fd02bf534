//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLOGRAPH_CYCLEBASIS_HPP_
#define CYCLOGRAPH_CYCLEBASIS_HPP_

// Horton's minimum cycle basis, one block at a time.
//
// Shortest paths come from one BFS tree per root with neighbors visited in
// ascending atom-id order, so P(v, x) is reproducible. Candidates
// C(v, x, y) = P(v, x) + [x, y] + P(v, y) are kept when the two tree paths
// meet only at v; the distinct candidates are sorted by (length, bit pattern)
// and selected greedily by GF(2) elimination.

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclograph/cyclespace.hpp"
#include "cyclograph/error.hpp"
#include "cyclograph/graphcore.hpp"
#include "cyclograph/molecule.hpp"

namespace cyclograph {

// Shortest-path trees of one block, rooted at every block atom. Indices into
// the tables are positions in `atoms` (block-local), not atom ids.
struct PathTable {
  static constexpr int kUnreachable = -1;

  std::vector<AtomId> atoms;
  std::unordered_map<AtomId, int> local;
  // dist[s][v], parent_bond[s][v] (-1 at the root), branch[s][v] = the child
  // of s on the tree path to v (v itself at depth 1, -1 at the root).
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<BondIndex>> parent_bond;
  std::vector<std::vector<int>> branch;
  int width = 0;  // bond count of the base graph

  int distance(AtomId from, AtomId to) const {
    return dist[local.at(from)][local.at(to)];
  }

  // Bonds of the tree path from `from` to `to`.
  CycleVector path(const MolecularGraph &g, AtomId from, AtomId to) const {
    CycleVector v(width);
    int s = local.at(from);
    AtomId at = to;
    while (at != from) {
      BondIndex b = parent_bond[s][local.at(at)];
      v.flip(b);
      at = g.bonds[b].other(at);
    }
    return v;
  }
};

inline PathTable all_pairs_shortest_paths(const MolecularGraph &g,
                                          const BiconnectedComponent &comp) {
  PathTable t;
  t.atoms = comp.atom_ids;
  t.width = g.num_bonds();
  const int n = static_cast<int>(t.atoms.size());
  for (int i = 0; i < n; ++i)
    t.local.emplace(t.atoms[i], i);

  std::vector<std::vector<std::pair<int, BondIndex>>> adj(n);
  for (BondIndex b : comp.bond_indices) {
    int a = t.local.at(g.bonds[b].a), c = t.local.at(g.bonds[b].b);
    adj[a].emplace_back(c, b);
    adj[c].emplace_back(a, b);
  }
  // Local order matches atom-id order, so this sorts by atom id.
  for (auto &nbrs : adj)
    std::sort(nbrs.begin(), nbrs.end());

  t.dist.assign(n, std::vector<int>(n, PathTable::kUnreachable));
  t.parent_bond.assign(n, std::vector<BondIndex>(n, -1));
  t.branch.assign(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    auto &dist = t.dist[s];
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [w, bond] : adj[v]) {
        if (dist[w] != PathTable::kUnreachable)
          continue;
        dist[w] = dist[v] + 1;
        t.parent_bond[s][w] = bond;
        t.branch[s][w] = v == s ? w : t.branch[s][v];
        queue.push_back(w);
      }
    }
  }
  return t;
}

struct HortonCandidate {
  AtomId via_vertex = 0;
  BondIndex via_bond = 0;
  CycleVector cycle;
};

// One candidate per (root v, bond [x, y]) whose tree paths P(v, x) and
// P(v, y) share only v and do not already use [x, y].
inline std::vector<HortonCandidate> horton_candidates(
    const MolecularGraph &g, const BiconnectedComponent &comp,
    const PathTable &paths) {
  std::vector<HortonCandidate> out;
  const int n = static_cast<int>(paths.atoms.size());
  for (int s = 0; s < n; ++s) {
    AtomId v = paths.atoms[s];
    for (BondIndex b : comp.bond_indices) {
      int x = paths.local.at(g.bonds[b].a);
      int y = paths.local.at(g.bonds[b].b);
      if (paths.dist[s][x] < 0 || paths.dist[s][y] < 0)
        continue;
      if (x == s || y == s) {
        // The other endpoint must not hang off v through this very bond.
        int far = x == s ? y : x;
        if (paths.parent_bond[s][far] == b)
          continue;
      } else if (paths.branch[s][x] == paths.branch[s][y]) {
        continue;
      }
      CycleVector c = paths.path(g, v, g.bonds[b].a) ^
                      paths.path(g, v, g.bonds[b].b);
      c.flip(b);
      out.push_back(HortonCandidate{v, b, std::move(c)});
    }
  }
  return out;
}

struct MinimumCycleBasis {
  int component_id = 0;
  std::vector<CycleVector> cycles;  // ascending (length, bit pattern)
  int total_weight = 0;
};

namespace internal {

// Throws NotBiconnected unless the block is connected and bridgeless.
inline void check_two_edge_connected(const MolecularGraph &g,
                                     const BiconnectedComponent &comp) {
  StructuralGraph sg{g, std::vector<bool>(g.atoms.size(), false),
                     std::vector<bool>(g.bonds.size(), false)};
  for (BondIndex b : comp.bond_indices) {
    sg.bond_kept[b] = true;
    sg.atom_kept[g.bonds[b].a] = sg.atom_kept[g.bonds[b].b] = true;
  }
  if (comp.bond_indices.empty() || !find_isthmuses(sg).empty())
    throw NotBiconnected("component " + std::to_string(comp.component_id) +
                         " has an isthmus");
  std::vector<int> seen(g.atoms.size(), 0);
  Adjacency adj = build_adjacency(g);
  std::vector<AtomId> stack{comp.atom_ids.front()};
  seen[stack.back()] = 1;
  int reached = 1;
  while (!stack.empty()) {
    AtomId v = stack.back();
    stack.pop_back();
    for (auto [w, bond] : adj[v])
      if (sg.bond_kept[bond] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != comp.num_atoms())
    throw NotBiconnected("component " + std::to_string(comp.component_id) +
                         " is disconnected");
}

}  // namespace internal

inline MinimumCycleBasis minimum_cycle_basis(const MolecularGraph &g,
                                             const BiconnectedComponent &comp) {
  internal::check_two_edge_connected(g, comp);
  PathTable paths = all_pairs_shortest_paths(g, comp);
  std::vector<CycleVector> pool;
  for (auto &cand : horton_candidates(g, comp, paths))
    pool.push_back(std::move(cand.cycle));
  std::sort(pool.begin(), pool.end(), length_lex_less);
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  const int dimension = comp.num_bonds() - comp.num_atoms() + 1;
  MinimumCycleBasis mcb;
  mcb.component_id = comp.component_id;
  EliminationBasis elim(g.num_bonds());
  for (const CycleVector &c : pool) {
    if (elim.rank() == dimension)
      break;
    if (elim.insert(c)) {
      mcb.total_weight += c.length();
      mcb.cycles.push_back(c);
    }
  }
  return mcb;
}

// Bases of every block of `g`, in component order.
inline std::vector<MinimumCycleBasis> minimum_cycle_basis(
    const MolecularGraph &g) {
  std::vector<MinimumCycleBasis> out;
  for (const auto &comp : decompose(g))
    out.push_back(minimum_cycle_basis(g, comp));
  return out;
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_CYCLEBASIS_HPP_
