//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLOGRAPH_GENERATOR_HPP_
#define CYCLOGRAPH_GENERATOR_HPP_

// Cycle generator of a molecule: per-block minimum cycle bases, augmented with
// the elementary XOR of basis pairs that is no longer than the longer of the
// two, then cut at a maximum cycle length j.

#include <algorithm>
#include <vector>

#include "cyclograph/cyclebasis.hpp"
#include "cyclograph/cyclespace.hpp"
#include "cyclograph/graphcore.hpp"
#include "cyclograph/molecule.hpp"

namespace cyclograph {

enum class CycleOrigin { kBasis, kXorPair };

struct GeneratorCycle {
  CycleVector cycle;
  int length = 0;
  int component_id = 0;
  CycleOrigin origin = CycleOrigin::kBasis;
};

struct Generator {
  int j = 0;  // maximum cycle length, 0 for no limit
  // Ordered by (component_id, length, bit pattern).
  std::vector<GeneratorCycle> cycles;
  std::vector<BiconnectedComponent> components;

  std::size_t size() const { return cycles.size(); }
};

namespace internal {
inline bool generator_order(const GeneratorCycle &a, const GeneratorCycle &b) {
  if (a.component_id != b.component_id)
    return a.component_id < b.component_id;
  return length_lex_less(a.cycle, b.cycle);
}
}  // namespace internal

// The basis of one block plus every elementary c_a ^ c_b (over pairs of the
// original basis cycles) not already present with |c| = max(|c_a|, |c_b|).
inline std::vector<GeneratorCycle> augment_basis(const MinimumCycleBasis &basis,
                                                 const MolecularGraph &g) {
  std::vector<GeneratorCycle> out;
  for (const CycleVector &c : basis.cycles)
    out.push_back(GeneratorCycle{c, c.length(), basis.component_id,
                                 CycleOrigin::kBasis});
  auto present = [&](const CycleVector &c) {
    return std::any_of(out.begin(), out.end(),
                       [&](const GeneratorCycle &gc) { return gc.cycle == c; });
  };
  const std::size_t k = basis.cycles.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const CycleVector &ca = basis.cycles[a];
      const CycleVector &cb = basis.cycles[b];
      CycleVector c = ca ^ cb;
      int len = c.length();
      if (len != std::max(ca.length(), cb.length()))
        continue;
      if (!is_elementary(g, c) || present(c))
        continue;
      out.push_back(GeneratorCycle{std::move(c), len, basis.component_id,
                                   CycleOrigin::kXorPair});
    }
  }
  std::sort(out.begin(), out.end(), internal::generator_order);
  return out;
}

// Keeps only cycles of length <= j (j = 0 keeps everything).
inline Generator filter_generator(Generator gen, int j) {
  gen.j = j;
  if (j > 0)
    std::erase_if(gen.cycles,
                  [j](const GeneratorCycle &c) { return c.length > j; });
  return gen;
}

inline Generator build_generator(const MolecularGraph &g, int j) {
  Generator gen;
  gen.components = decompose(g);
  for (const auto &comp : gen.components) {
    auto cycles = augment_basis(minimum_cycle_basis(g, comp), g);
    gen.cycles.insert(gen.cycles.end(), cycles.begin(), cycles.end());
  }
  std::sort(gen.cycles.begin(), gen.cycles.end(), internal::generator_order);
  return filter_generator(std::move(gen), j);
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_GENERATOR_HPP_
