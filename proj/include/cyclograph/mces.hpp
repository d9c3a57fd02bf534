//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLOGRAPH_MCES_HPP_
#define CYCLOGRAPH_MCES_HPP_

// pi-constrained maximum common edge subgraph (MCES) and the similarity
//
//   sim(G1, G2) = (|V12| + |E12|)^2 / ((|V1| + |E1|) * (|V2| + |E2|))
//
// where V12/E12 are the vertices and edges of the common subgraph.
//
// MCES is solved as a maximum clique. Each compatibility node maps one edge of
// G1 onto one edge of G2 in a fixed orientation, i.e. it carries two vertex
// assignments. Two nodes are adjacent when the union of their assignments is
// still an injective partial map, so every clique is a valid common edge
// subgraph and vice versa (no Delta-Y ambiguity, at the price of up to two
// nodes per edge pair).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cyclograph/clique.hpp"
#include "cyclograph/cyclegraph.hpp"
#include "cyclograph/molecule.hpp"

namespace cyclograph {

// Vertex- and edge-labelled graph in the form the matcher consumes. For
// molecular graphs vertex labels are atomic numbers and edge kinds bond
// orders; for graphs of cycles labels are mu, kinds nu and weights theta.
struct LabeledGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    int kind = 0;
    int weight = 0;

    friend auto operator<=>(const Edge &, const Edge &) = default;
  };

  std::string name;
  std::vector<int> vertex_labels;
  std::vector<Edge> edges;

  int num_vertices() const { return static_cast<int>(vertex_labels.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int size() const { return num_vertices() + num_edges(); }
};

inline LabeledGraph to_labeled(const MolecularGraph &g) {
  LabeledGraph out;
  out.name = g.name;
  for (const Atom &a : g.atoms)
    out.vertex_labels.push_back(atomic_number(a.element).value_or(0));
  for (const Bond &b : g.bonds)
    out.edges.push_back({b.a, b.b, static_cast<int>(b.order), 0});
  return out;
}

inline LabeledGraph to_labeled(const CycleGraph &cg) {
  LabeledGraph out;
  out.name = cg.molecule;
  for (const auto &v : cg.vertices)
    out.vertex_labels.push_back(v.mu);
  for (const auto &e : cg.edges)
    out.edges.push_back({e.u, e.v, e.nu, e.theta});
  return out;
}

enum class PiMode { kMolecular, kCycle };

struct PiConstraint {
  PiMode mode = PiMode::kCycle;
  // Cycle mode: lengths l1, l2 match when |l1 - l2| <= tolerance * min(l1, l2).
  double cycle_tolerance = 0.2;
  // Same rule applied to theta on nu-equal edges; 0 demands equality.
  double theta_tolerance = 0.0;
};

namespace internal {
inline bool within_relative(int a, int b, double tolerance) {
  if (a == b)
    return true;
  // Slack for products like 0.2 * 5 that are not exact in binary.
  return std::abs(a - b) <= tolerance * std::min(a, b) + 1e-9;
}
}  // namespace internal

inline bool pi_compatible_vertices(int label1, int label2,
                                   const PiConstraint &c) {
  if (c.mode == PiMode::kMolecular)
    return label1 == label2;
  return internal::within_relative(label1, label2, c.cycle_tolerance);
}

inline bool edge_labels_compatible(const LabeledGraph::Edge &e1,
                                   const LabeledGraph::Edge &e2,
                                   const PiConstraint &c) {
  if (e1.kind != e2.kind)
    return false;
  if (c.mode == PiMode::kMolecular)
    return true;
  return internal::within_relative(e1.weight, e2.weight, c.theta_tolerance);
}

// Which orientations of edge e1 onto edge e2 respect pi on both endpoints:
// `straight` maps u1->u2, v1->v2; `crossed` maps u1->v2, v1->u2.
struct Orientations {
  bool straight = false;
  bool crossed = false;
  bool any() const { return straight || crossed; }
};

inline Orientations edge_orientations(const LabeledGraph &g1, int e1,
                                      const LabeledGraph &g2, int e2,
                                      const PiConstraint &c) {
  const auto &a = g1.edges[e1];
  const auto &b = g2.edges[e2];
  if (!edge_labels_compatible(a, b, c))
    return {};
  auto ok = [&](int x, int y) {
    return pi_compatible_vertices(g1.vertex_labels[x], g2.vertex_labels[y], c);
  };
  return {ok(a.u, b.u) && ok(a.v, b.v), ok(a.u, b.v) && ok(a.v, b.u)};
}

inline bool edge_compatible(const LabeledGraph &g1, int e1,
                            const LabeledGraph &g2, int e2,
                            const PiConstraint &c) {
  return edge_orientations(g1, e1, g2, e2, c).any();
}

struct CompatibilityGraph {
  struct Node {
    int edge1 = 0;
    int edge2 = 0;
    // The two vertex assignments: from1[k] in G1 maps to to2[k] in G2.
    int from1[2] = {0, 0};
    int to2[2] = {0, 0};
  };

  std::vector<Node> nodes;
  BitGraph adjacency;

  int size() const { return static_cast<int>(nodes.size()); }
};

namespace internal {
inline bool assignments_consistent(const CompatibilityGraph::Node &p,
                                   const CompatibilityGraph::Node &q) {
  if (p.edge1 == q.edge1 || p.edge2 == q.edge2)
    return false;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      if ((p.from1[i] == q.from1[k]) != (p.to2[i] == q.to2[k]))
        return false;
  return true;
}
}  // namespace internal

inline CompatibilityGraph build_compatibility_graph(const LabeledGraph &g1,
                                                    const LabeledGraph &g2,
                                                    const PiConstraint &c) {
  CompatibilityGraph cg;
  for (int e1 = 0; e1 < g1.num_edges(); ++e1) {
    const auto &a = g1.edges[e1];
    for (int e2 = 0; e2 < g2.num_edges(); ++e2) {
      const auto &b = g2.edges[e2];
      Orientations o = edge_orientations(g1, e1, g2, e2, c);
      if (o.straight)
        cg.nodes.push_back({e1, e2, {a.u, a.v}, {b.u, b.v}});
      if (o.crossed)
        cg.nodes.push_back({e1, e2, {a.u, a.v}, {b.v, b.u}});
    }
  }
  cg.adjacency = BitGraph(cg.size());
  for (int p = 0; p < cg.size(); ++p)
    for (int q = p + 1; q < cg.size(); ++q)
      if (internal::assignments_consistent(cg.nodes[p], cg.nodes[q]))
        cg.adjacency.add_edge(p, q);
  return cg;
}

inline CliqueResult max_clique(const CompatibilityGraph &cg,
                               std::chrono::milliseconds budget) {
  return max_clique(cg.adjacency, budget);
}

enum class McesStatus { kExact, kTimeoutLowerBound };

inline std::string_view to_string(McesStatus s) {
  return s == McesStatus::kExact ? "exact" : "timeout_lower_bound";
}

struct McesResult {
  std::vector<std::pair<int, int>> matched_edges;     // (edge in G1, edge in G2)
  std::vector<std::pair<int, int>> matched_vertices;  // (vertex in G1, in G2)
  int v12 = 0;
  int e12 = 0;
  double score = 0.0;
  McesStatus status = McesStatus::kExact;
  std::uint64_t search_nodes = 0;
};

namespace internal {

// Kuhn's augmenting paths; returns pairs (left, right) of a maximum matching
// between `left` and `right` where `ok(l, r)` allows the pair.
inline std::vector<std::pair<int, int>> bipartite_matching(
    const std::vector<int> &left, const std::vector<int> &right,
    const std::function<bool(int, int)> &ok) {
  std::vector<int> match_right(right.size(), -1);
  std::function<bool(std::size_t, std::vector<bool> &)> augment =
      [&](std::size_t l, std::vector<bool> &seen) {
        for (std::size_t r = 0; r < right.size(); ++r) {
          if (seen[r] || !ok(left[l], right[r]))
            continue;
          seen[r] = true;
          if (match_right[r] < 0 ||
              augment(static_cast<std::size_t>(match_right[r]), seen)) {
            match_right[r] = static_cast<int>(l);
            return true;
          }
        }
        return false;
      };
  for (std::size_t l = 0; l < left.size(); ++l) {
    std::vector<bool> seen(right.size(), false);
    augment(l, seen);
  }
  std::vector<std::pair<int, int>> out;
  for (std::size_t r = 0; r < right.size(); ++r)
    if (match_right[r] >= 0)
      out.emplace_back(left[match_right[r]], right[r]);
  std::sort(out.begin(), out.end());
  return out;
}

inline auto canonical_key(const LabeledGraph &g) {
  return std::tie(g.vertex_labels, g.edges);
}

// The vertex map implied by a clique; throws std::logic_error if the clique
// does not describe a consistent injective edge mapping.
inline std::vector<std::pair<int, int>> clique_vertex_map(
    const LabeledGraph &g1, const LabeledGraph &g2,
    const CompatibilityGraph &cg, const std::vector<int> &clique) {
  std::vector<int> fwd(g1.num_vertices(), -1), back(g2.num_vertices(), -1);
  std::vector<bool> used1(g1.num_edges(), false), used2(g2.num_edges(), false);
  for (int node : clique) {
    const auto &n = cg.nodes[node];
    if (used1[n.edge1] || used2[n.edge2])
      throw std::logic_error("clique maps an edge twice");
    used1[n.edge1] = used2[n.edge2] = true;
    for (int k = 0; k < 2; ++k) {
      int x = n.from1[k], y = n.to2[k];
      if ((fwd[x] >= 0 && fwd[x] != y) || (back[y] >= 0 && back[y] != x))
        throw std::logic_error("clique vertex map is not injective");
      fwd[x] = y;
      back[y] = x;
    }
  }
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < g1.num_vertices(); ++x)
    if (fwd[x] >= 0)
      out.emplace_back(x, fwd[x]);
  return out;
}

inline McesResult similarity_ordered(const LabeledGraph &g1,
                                     const LabeledGraph &g2,
                                     const PiConstraint &c,
                                     std::chrono::milliseconds budget) {
  McesResult r;
  if (g1.num_vertices() == 0 || g2.num_vertices() == 0)
    return r;
  // Identical graphs: the identity map is a maximum common subgraph, and every
  // label is compatible with itself.
  if (g1.vertex_labels == g2.vertex_labels && g1.edges == g2.edges) {
    for (int e = 0; e < g1.num_edges(); ++e)
      r.matched_edges.emplace_back(e, e);
    for (int x = 0; x < g1.num_vertices(); ++x)
      r.matched_vertices.emplace_back(x, x);
    r.e12 = g1.num_edges();
    r.v12 = g1.num_vertices();
    r.score = 1.0;
    r.status = McesStatus::kExact;
    return r;
  }
  CompatibilityGraph cg = build_compatibility_graph(g1, g2, c);
  CliqueResult clique = max_clique(cg, budget);
  r.status = clique.exact ? McesStatus::kExact : McesStatus::kTimeoutLowerBound;
  r.search_nodes = clique.search_nodes;
  for (int node : clique.vertices)
    r.matched_edges.emplace_back(cg.nodes[node].edge1, cg.nodes[node].edge2);
  std::sort(r.matched_edges.begin(), r.matched_edges.end());
  r.matched_vertices = clique_vertex_map(g1, g2, cg, clique.vertices);

  // Vertices left uncovered by matched edges may still pair up as isolated
  // vertices of the common subgraph.
  std::vector<bool> cov1(g1.num_vertices(), false), cov2(g2.num_vertices(), false);
  for (auto [x, y] : r.matched_vertices)
    cov1[x] = cov2[y] = true;
  std::vector<int> free1, free2;
  for (int x = 0; x < g1.num_vertices(); ++x)
    if (!cov1[x])
      free1.push_back(x);
  for (int y = 0; y < g2.num_vertices(); ++y)
    if (!cov2[y])
      free2.push_back(y);
  auto extra = bipartite_matching(free1, free2, [&](int x, int y) {
    return pi_compatible_vertices(g1.vertex_labels[x], g2.vertex_labels[y], c);
  });
  r.matched_vertices.insert(r.matched_vertices.end(), extra.begin(),
                            extra.end());
  std::sort(r.matched_vertices.begin(), r.matched_vertices.end());

  r.e12 = static_cast<int>(r.matched_edges.size());
  r.v12 = static_cast<int>(r.matched_vertices.size());
  double common = r.v12 + r.e12;
  r.score = common * common /
            (static_cast<double>(g1.size()) * static_cast<double>(g2.size()));
  return r;
}

}  // namespace internal

// MCES-based similarity. The pair is solved in a canonical order so that
// sim(a, b) and sim(b, a) run the identical search; matched pairs are
// reported in the caller's (g1, g2) orientation.
inline McesResult similarity(const LabeledGraph &g1, const LabeledGraph &g2,
                             const PiConstraint &c,
                             std::chrono::milliseconds budget) {
  if (internal::canonical_key(g2) < internal::canonical_key(g1)) {
    McesResult r = internal::similarity_ordered(g2, g1, c, budget);
    for (auto &p : r.matched_edges)
      std::swap(p.first, p.second);
    for (auto &p : r.matched_vertices)
      std::swap(p.first, p.second);
    std::sort(r.matched_edges.begin(), r.matched_edges.end());
    std::sort(r.matched_vertices.begin(), r.matched_vertices.end());
    return r;
  }
  return internal::similarity_ordered(g1, g2, c, budget);
}

inline McesResult similarity(const CycleGraph &a, const CycleGraph &b,
                             const PiConstraint &c,
                             std::chrono::milliseconds budget) {
  return similarity(to_labeled(a), to_labeled(b), c, budget);
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_MCES_HPP_
