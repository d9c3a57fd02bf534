//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLOGRAPH_GRAPHCORE_HPP_
#define CYCLOGRAPH_GRAPHCORE_HPP_

// Structural reduction of a molecular graph: leaf pruning, isthmus (bridge)
// detection, block decomposition and restricted shortest paths.
//
// A "2-connected component" here is a block of the bridgeless structural
// graph: an edge-maximal subgraph without cut vertices. Blocks partition the
// non-isthmus bonds, and two rings that only touch at a shared atom (spiro
// junction) fall into different blocks.

#include <algorithm>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "cyclograph/molecule.hpp"

namespace cyclograph {

// A subgraph of `base` in base numbering: atoms and bonds are kept or not.
struct StructuralGraph {
  MolecularGraph base;
  std::vector<bool> atom_kept;
  std::vector<bool> bond_kept;

  std::vector<AtomId> kept_atoms() const {
    std::vector<AtomId> out;
    for (AtomId i = 0; i < static_cast<AtomId>(atom_kept.size()); ++i)
      if (atom_kept[i])
        out.push_back(i);
    return out;
  }

  std::vector<BondIndex> kept_bonds() const {
    std::vector<BondIndex> out;
    for (BondIndex i = 0; i < static_cast<BondIndex>(bond_kept.size()); ++i)
      if (bond_kept[i])
        out.push_back(i);
    return out;
  }

  bool empty() const {
    return std::none_of(bond_kept.begin(), bond_kept.end(),
                        [](bool b) { return b; });
  }

  // Degree of `atom` counting kept bonds only.
  int degree(AtomId atom) const {
    int d = 0;
    for (BondIndex i = 0; i < base.num_bonds(); ++i)
      if (bond_kept[i] && base.bonds[i].touches(atom))
        ++d;
    return d;
  }
};

struct BiconnectedComponent {
  int component_id = 0;
  std::vector<BondIndex> bond_indices;  // base numbering, ascending
  std::vector<AtomId> atom_ids;         // ascending

  int num_atoms() const { return static_cast<int>(atom_ids.size()); }
  int num_bonds() const { return static_cast<int>(bond_indices.size()); }
};

// Whole molecule, nothing removed.
inline StructuralGraph full_structure(const MolecularGraph &g) {
  return StructuralGraph{g, std::vector<bool>(g.atoms.size(), true),
                         std::vector<bool>(g.bonds.size(), true)};
}

// Repeatedly strips atoms of degree <= 1 (and their bonds). What remains is
// the maximum subgraph with minimum degree 2, possibly empty.
inline StructuralGraph prune_leaves(const MolecularGraph &g) {
  StructuralGraph sg = full_structure(g);
  Adjacency adj = build_adjacency(g);
  std::vector<int> degree(g.atoms.size());
  std::deque<AtomId> queue;
  for (AtomId v = 0; v < g.num_atoms(); ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] <= 1)
      queue.push_back(v);
  }
  while (!queue.empty()) {
    AtomId v = queue.front();
    queue.pop_front();
    if (!sg.atom_kept[v])
      continue;
    sg.atom_kept[v] = false;
    for (auto [w, bond] : adj[v]) {
      if (!sg.bond_kept[bond])
        continue;
      sg.bond_kept[bond] = false;
      if (--degree[w] <= 1 && sg.atom_kept[w])
        queue.push_back(w);
    }
  }
  return sg;
}

namespace internal {

// Iterative DFS over kept bonds computing discovery times and low links.
// `on_tree_edge_done(u, v, bond, ll)` fires once the subtree below tree edge
// u-v is finished; `on_edge_seen(bond)` fires when a tree or back edge is
// first traversed.
struct LowLink {
  std::vector<int> disc;
  std::vector<int> low;
};

template <typename TreeDone, typename EdgeSeen>
LowLink low_link_dfs(const StructuralGraph &sg, TreeDone on_tree_edge_done,
                     EdgeSeen on_edge_seen) {
  const MolecularGraph &g = sg.base;
  Adjacency adj = build_adjacency(g);
  LowLink ll{std::vector<int>(g.atoms.size(), -1),
             std::vector<int>(g.atoms.size(), -1)};
  struct Frame {
    AtomId atom;
    BondIndex parent_bond;
    std::size_t next;
  };
  int time = 0;
  for (AtomId root = 0; root < g.num_atoms(); ++root) {
    if (ll.disc[root] >= 0 || !sg.atom_kept[root])
      continue;
    std::vector<Frame> stack{{root, -1, 0}};
    ll.disc[root] = ll.low[root] = time++;
    while (!stack.empty()) {
      Frame &f = stack.back();
      if (f.next < adj[f.atom].size()) {
        auto [w, bond] = adj[f.atom][f.next++];
        if (!sg.bond_kept[bond] || bond == f.parent_bond)
          continue;
        if (ll.disc[w] < 0) {
          on_edge_seen(bond);
          ll.disc[w] = ll.low[w] = time++;
          stack.push_back({w, bond, 0});
        } else if (ll.disc[w] < ll.disc[f.atom]) {
          on_edge_seen(bond);
          ll.low[f.atom] = std::min(ll.low[f.atom], ll.disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        AtomId parent = stack.back().atom;
        ll.low[parent] = std::min(ll.low[parent], ll.low[done.atom]);
        on_tree_edge_done(parent, done.atom, done.parent_bond, ll);
      }
    }
  }
  return ll;
}

}  // namespace internal

// Kept bonds that lie on no cycle, ascending.
inline std::vector<BondIndex> find_isthmuses(const StructuralGraph &sg) {
  std::vector<BondIndex> bridges;
  internal::low_link_dfs(
      sg,
      [&](AtomId u, AtomId v, BondIndex bond, const internal::LowLink &ll) {
        if (ll.low[v] > ll.disc[u])
          bridges.push_back(bond);
      },
      [](BondIndex) {});
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

inline StructuralGraph remove_bonds(StructuralGraph sg,
                                    std::span<const BondIndex> bonds) {
  for (BondIndex b : bonds)
    sg.bond_kept[b] = false;
  for (AtomId v = 0; v < sg.base.num_atoms(); ++v)
    if (sg.atom_kept[v] && sg.degree(v) == 0)
      sg.atom_kept[v] = false;
  return sg;
}

// Blocks of the kept subgraph with at least two bonds (single-bond blocks are
// isthmuses and are skipped). Ids follow the smallest atom id of each block.
inline std::vector<BiconnectedComponent> biconnected_components(
    const StructuralGraph &sg) {
  std::vector<BondIndex> edge_stack;
  std::vector<BiconnectedComponent> blocks;
  internal::low_link_dfs(
      sg,
      [&](AtomId u, AtomId v, BondIndex bond, const internal::LowLink &ll) {
        if (ll.low[v] < ll.disc[u])
          return;
        BiconnectedComponent block;
        while (!edge_stack.empty()) {
          BondIndex top = edge_stack.back();
          edge_stack.pop_back();
          block.bond_indices.push_back(top);
          if (top == bond)
            break;
        }
        if (block.bond_indices.size() < 2)
          return;
        std::sort(block.bond_indices.begin(), block.bond_indices.end());
        for (BondIndex b : block.bond_indices) {
          block.atom_ids.push_back(sg.base.bonds[b].a);
          block.atom_ids.push_back(sg.base.bonds[b].b);
        }
        std::sort(block.atom_ids.begin(), block.atom_ids.end());
        block.atom_ids.erase(
            std::unique(block.atom_ids.begin(), block.atom_ids.end()),
            block.atom_ids.end());
        blocks.push_back(std::move(block));
      },
      [&](BondIndex bond) { edge_stack.push_back(bond); });
  std::sort(blocks.begin(), blocks.end(), [](const auto &x, const auto &y) {
    return x.atom_ids < y.atom_ids;
  });
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
    blocks[i].component_id = i;
  return blocks;
}

// Leaf pruning, isthmus removal and block decomposition in one call.
inline std::vector<BiconnectedComponent> decompose(const MolecularGraph &g) {
  StructuralGraph sg = prune_leaves(g);
  auto bridges = find_isthmuses(sg);
  return biconnected_components(remove_bonds(std::move(sg), bridges));
}

// The cyclic part of `g` as a standalone graph: leaves and isthmuses removed,
// atoms and bonds renumbered densely in their original order.
inline MolecularGraph structural_core(const MolecularGraph &g) {
  StructuralGraph sg = prune_leaves(g);
  auto bridges = find_isthmuses(sg);
  sg = remove_bonds(std::move(sg), bridges);
  MolecularGraph out;
  out.name = g.name;
  std::vector<AtomId> remap(g.atoms.size(), -1);
  for (AtomId v = 0; v < g.num_atoms(); ++v) {
    if (!sg.atom_kept[v])
      continue;
    remap[v] = out.num_atoms();
    out.atoms.push_back(g.atoms[v]);
  }
  for (BondIndex i = 0; i < g.num_bonds(); ++i)
    if (sg.bond_kept[i])
      out.bonds.push_back(
          Bond{remap[g.bonds[i].a], remap[g.bonds[i].b], g.bonds[i].order});
  return out;
}

// Fewest bonds on a path from any source atom to any target atom that avoids
// the forbidden bonds. nullopt when no such path exists.
inline std::optional<int> shortest_path_len(
    const MolecularGraph &g, std::span<const AtomId> sources,
    std::span<const AtomId> targets, std::span<const BondIndex> forbidden_bonds) {
  std::vector<bool> forbidden(g.bonds.size(), false);
  for (BondIndex b : forbidden_bonds)
    forbidden[b] = true;
  std::vector<bool> is_target(g.atoms.size(), false);
  for (AtomId t : targets)
    is_target[t] = true;
  std::vector<int> dist(g.atoms.size(), -1);
  std::deque<AtomId> queue;
  for (AtomId s : sources) {
    if (dist[s] == 0)
      continue;
    if (is_target[s])
      return 0;
    dist[s] = 0;
    queue.push_back(s);
  }
  Adjacency adj = build_adjacency(g);
  while (!queue.empty()) {
    AtomId v = queue.front();
    queue.pop_front();
    for (auto [w, bond] : adj[v]) {
      if (forbidden[bond] || dist[w] >= 0)
        continue;
      dist[w] = dist[v] + 1;
      if (is_target[w])
        return dist[w];
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_GRAPHCORE_HPP_
