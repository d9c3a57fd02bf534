//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLOGRAPH_MOLECULE_HPP_
#define CYCLOGRAPH_MOLECULE_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclograph {

using AtomId = int;
using BondIndex = int;

enum class BondOrder { kSingle, kDouble, kTriple, kAromatic };

inline std::string_view to_string(BondOrder order) {
  switch (order) {
  case BondOrder::kSingle:
    return "single";
  case BondOrder::kDouble:
    return "double";
  case BondOrder::kTriple:
    return "triple";
  case BondOrder::kAromatic:
    return "aromatic";
  }
  return "single";
}

inline std::optional<BondOrder> bond_order_from_string(std::string_view s) {
  if (s == "single")
    return BondOrder::kSingle;
  if (s == "double")
    return BondOrder::kDouble;
  if (s == "triple")
    return BondOrder::kTriple;
  if (s == "aromatic")
    return BondOrder::kAromatic;
  return std::nullopt;
}

namespace internal {
inline constexpr std::array<std::string_view, 118> kElementSymbols = {
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg",
    "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr",
    "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr",
    "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc", "Ru", "Rh", "Pd", "Ag", "Cd",
    "In", "Sn", "Sb", "Te", "I",  "Xe", "Cs", "Ba", "La", "Ce", "Pr", "Nd",
    "Pm", "Sm", "Eu", "Gd", "Tb", "Dy", "Ho", "Er", "Tm", "Yb", "Lu", "Hf",
    "Ta", "W",  "Re", "Os", "Ir", "Pt", "Au", "Hg", "Tl", "Pb", "Bi", "Po",
    "At", "Rn", "Fr", "Ra", "Ac", "Th", "Pa", "U",  "Np", "Pu", "Am", "Cm",
    "Bk", "Cf", "Es", "Fm", "Md", "No", "Lr", "Rf", "Db", "Sg", "Bh", "Hs",
    "Mt", "Ds", "Rg", "Cn", "Nh", "Fl", "Mc", "Lv", "Ts", "Og",
};
}  // namespace internal

// Atomic number of a periodic-table symbol, or nullopt. Deuterium and tritium
// are folded into hydrogen.
inline std::optional<int> atomic_number(std::string_view symbol) {
  if (symbol == "D" || symbol == "T")
    return 1;
  const auto &table = internal::kElementSymbols;
  auto it = std::find(table.begin(), table.end(), symbol);
  if (it == table.end())
    return std::nullopt;
  return static_cast<int>(it - table.begin()) + 1;
}

struct Atom {
  std::string element;

  friend bool operator==(const Atom &, const Atom &) = default;
};

struct Bond {
  AtomId a = 0;
  AtomId b = 0;
  BondOrder order = BondOrder::kSingle;

  AtomId other(AtomId x) const { return x == a ? b : a; }
  bool touches(AtomId x) const { return x == a || x == b; }

  friend bool operator==(const Bond &, const Bond &) = default;
};

// Simple undirected labeled graph. Atom ids are positions in `atoms`, bond
// indices are positions in `bonds`; cycle vectors are indexed by the latter.
struct MolecularGraph {
  std::string name;
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;

  int num_atoms() const { return static_cast<int>(atoms.size()); }
  int num_bonds() const { return static_cast<int>(bonds.size()); }

  friend bool operator==(const MolecularGraph &,
                         const MolecularGraph &) = default;
};

// Neighbor lists as (neighbor atom, bond index), sorted by neighbor id so that
// traversals visit neighbors in ascending atom-id order.
using Adjacency = std::vector<std::vector<std::pair<AtomId, BondIndex>>>;

inline Adjacency build_adjacency(const MolecularGraph &g) {
  Adjacency adj(g.atoms.size());
  for (BondIndex i = 0; i < g.num_bonds(); ++i) {
    const Bond &b = g.bonds[i];
    adj[b.a].emplace_back(b.b, i);
    adj[b.b].emplace_back(b.a, i);
  }
  for (auto &nbrs : adj)
    std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_MOLECULE_HPP_
