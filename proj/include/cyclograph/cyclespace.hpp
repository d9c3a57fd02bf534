//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLOGRAPH_CYCLESPACE_HPP_
#define CYCLOGRAPH_CYCLESPACE_HPP_

// GF(2) cycle space over an indexed bond set.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclograph/error.hpp"
#include "cyclograph/molecule.hpp"

namespace cyclograph {

// Bond-incidence vector of a subgraph, packed 64 bonds per word.
class CycleVector {
 public:
  CycleVector() = default;
  explicit CycleVector(int width)
      : width_(width), words_((static_cast<std::size_t>(width) + 63) / 64, 0) {}

  static CycleVector from_bonds(int width, std::span<const BondIndex> bonds) {
    CycleVector v(width);
    for (BondIndex b : bonds)
      v.flip(b);
    return v;
  }

  int width() const { return width_; }

  bool test(BondIndex i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(BondIndex i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void flip(BondIndex i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  // Number of bonds in the subgraph, i.e. the cycle length.
  int length() const {
    int n = 0;
    for (auto w : words_)
      n += std::popcount(w);
    return n;
  }

  const std::vector<std::uint64_t> &words() const { return words_; }

  bool is_zero() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }

  // Lowest set bond index, or -1 for the zero vector.
  BondIndex lowest() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<BondIndex>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  std::vector<BondIndex> bonds() const {
    std::vector<BondIndex> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        out.push_back(static_cast<BondIndex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  // Number of bonds present in both vectors.
  int common(const CycleVector &other) const {
    check_width(other);
    int n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      n += std::popcount(words_[i] & other.words_[i]);
    return n;
  }

  CycleVector &operator^=(const CycleVector &other) {
    check_width(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] ^= other.words_[i];
    return *this;
  }

  friend CycleVector operator^(CycleVector a, const CycleVector &b) {
    a ^= b;
    return a;
  }

  friend bool operator==(const CycleVector &, const CycleVector &) = default;

  void check_width(const CycleVector &other) const {
    if (width_ != other.width_)
      throw DimensionMismatch("cycle vectors of width " +
                              std::to_string(width_) + " and " +
                              std::to_string(other.width_));
  }


 private:
  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

// Bit-pattern order: at the first bond where the two differ, the vector
// containing that bond sorts first.
inline bool lex_less(const CycleVector &a, const CycleVector &b) {
  a.check_width(b);
  const auto &wa = a.words();
  const auto &wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    std::uint64_t diff = wa[i] ^ wb[i];
    if (diff != 0)
      return (wa[i] & (diff & (~diff + 1))) != 0;
  }
  return false;
}

// Shorter first, then bit-pattern order.
inline bool length_lex_less(const CycleVector &a, const CycleVector &b) {
  int la = a.length(), lb = b.length();
  if (la != lb)
    return la < lb;
  return lex_less(a, b);
}

inline CycleVector cycle_xor(const CycleVector &a, const CycleVector &b) {
  return a ^ b;
}

// Atoms touched by the bonds of `c`, ascending.
inline std::vector<AtomId> cycle_atoms(const MolecularGraph &g,
                                       const CycleVector &c) {
  std::vector<AtomId> atoms;
  for (BondIndex b : c.bonds()) {
    atoms.push_back(g.bonds[b].a);
    atoms.push_back(g.bonds[b].b);
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

// True iff the bonds of `c` form one simple cycle: every touched atom has
// exactly two of them and they are connected.
inline bool is_elementary(const MolecularGraph &g, const CycleVector &c) {
  if (c.width() != g.num_bonds())
    throw DimensionMismatch("cycle vector width " + std::to_string(c.width()) +
                            " for a graph with " +
                            std::to_string(g.num_bonds()) + " bonds");
  std::vector<BondIndex> bonds = c.bonds();
  if (bonds.size() < 3)
    return false;
  std::vector<int> degree(g.atoms.size(), 0);
  for (BondIndex b : bonds) {
    ++degree[g.bonds[b].a];
    ++degree[g.bonds[b].b];
  }
  for (int d : degree)
    if (d != 0 && d != 2)
      return false;
  // Walk the cycle from the first bond; it must come back having used all.
  AtomId start = g.bonds[bonds[0]].a;
  AtomId at = g.bonds[bonds[0]].b;
  BondIndex via = bonds[0];
  std::size_t walked = 1;
  while (at != start) {
    BondIndex next = -1;
    for (BondIndex b : bonds)
      if (b != via && g.bonds[b].touches(at)) {
        next = b;
        break;
      }
    at = g.bonds[next].other(at);
    via = next;
    ++walked;
  }
  return walked == bonds.size();
}

// Linearly independent cycle vectors kept in echelon form: every row has a
// distinct pivot (its lowest bond index), rows ordered by pivot.
class EliminationBasis {
 public:
  explicit EliminationBasis(int width) : width_(width) {}

  int width() const { return width_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<CycleVector> &rows() const { return rows_; }
  const std::vector<BondIndex> &pivots() const { return pivots_; }

  struct Reduction {
    CycleVector residual;
    bool independent = false;
  };

  Reduction reduce(CycleVector c) const {
    if (c.width() != width_)
      throw DimensionMismatch("cycle vector width " +
                              std::to_string(c.width()) + " vs basis width " +
                              std::to_string(width_));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (c.test(pivots_[i]))
        c ^= rows_[i];
    bool independent = !c.is_zero();
    return {std::move(c), independent};
  }

  // Inserts `c` if it is independent of the current rows.
  bool insert(const CycleVector &c) {
    Reduction r = reduce(c);
    if (!r.independent)
      return false;
    BondIndex pivot = r.residual.lowest();
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    auto offset = pos - pivots_.begin();
    rows_.insert(rows_.begin() + offset, std::move(r.residual));
    pivots_.insert(pos, pivot);
    return true;
  }

 private:
  int width_;
  std::vector<CycleVector> rows_;
  std::vector<BondIndex> pivots_;
};

}  // namespace cyclograph

#endif  // CYCLOGRAPH_CYCLESPACE_HPP_
