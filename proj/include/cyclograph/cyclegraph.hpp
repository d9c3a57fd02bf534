//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLOGRAPH_CYCLEGRAPH_HPP_
#define CYCLOGRAPH_CYCLEGRAPH_HPP_

// Graph of cycles: one vertex per generator cycle (mu = its length) and two
// kinds of edges.
//
//   nu = 1  both cycles lie in the same block and share at least one atom;
//           theta = number of shared bonds.
//   nu = 2  the cycles lie in different blocks and some path joins them
//           using only bonds that are on no generator cycle; theta = length
//           of the shortest such path (0 when they meet at a cut atom).
//
// Paths for nu = 2 may cross atoms of third cycles, so blocks hanging off the
// same atom of a middle block are linked to each other as well.

#include <algorithm>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "cyclograph/cyclespace.hpp"
#include "cyclograph/error.hpp"
#include "cyclograph/generator.hpp"
#include "cyclograph/graphcore.hpp"
#include "cyclograph/molecule.hpp"

namespace cyclograph {

struct CycleGraphVertex {
  int mu = 0;
  int component_id = 0;
  std::vector<BondIndex> bonds;  // empty when loaded from JSON
};

struct CycleGraphEdge {
  int u = 0;
  int v = 0;
  int nu = 1;
  int theta = 0;

  friend bool operator==(const CycleGraphEdge &,
                         const CycleGraphEdge &) = default;
};

struct CycleGraph {
  std::string molecule;
  int j = 0;
  std::vector<CycleGraphVertex> vertices;
  std::vector<CycleGraphEdge> edges;  // ascending (u, v), u < v

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
};

inline std::vector<CycleGraphEdge> type1_edges(const MolecularGraph &g,
                                               const Generator &gen) {
  std::vector<CycleGraphEdge> out;
  std::vector<std::vector<AtomId>> atoms;
  for (const auto &c : gen.cycles)
    atoms.push_back(cycle_atoms(g, c.cycle));
  const int n = static_cast<int>(gen.cycles.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (gen.cycles[a].component_id != gen.cycles[b].component_id)
        continue;
      std::vector<AtomId> shared;
      std::set_intersection(atoms[a].begin(), atoms[a].end(), atoms[b].begin(),
                            atoms[b].end(), std::back_inserter(shared));
      if (shared.empty())
        continue;
      out.push_back({a, b, 1, gen.cycles[a].cycle.common(gen.cycles[b].cycle)});
    }
  }
  return out;
}

inline std::vector<CycleGraphEdge> type2_edges(const MolecularGraph &g,
                                               const Generator &gen) {
  std::vector<CycleGraphEdge> out;
  std::vector<std::vector<AtomId>> atoms;
  std::vector<BondIndex> on_cycles;
  CycleVector covered(g.num_bonds());
  for (const auto &c : gen.cycles) {
    atoms.push_back(cycle_atoms(g, c.cycle));
    for (BondIndex b : c.cycle.bonds())
      covered.set(b);
  }
  on_cycles = covered.bonds();
  const int n = static_cast<int>(gen.cycles.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (gen.cycles[a].component_id == gen.cycles[b].component_id)
        continue;
      auto len = shortest_path_len(g, atoms[a], atoms[b], on_cycles);
      if (len)
        out.push_back({a, b, 2, *len});
    }
  }
  return out;
}

// Graph of cycles from an already built generator.
inline CycleGraph cycle_graph_from_generator(const MolecularGraph &g,
                                             const Generator &gen) {
  CycleGraph cg;
  cg.molecule = g.name;
  cg.j = gen.j;
  for (const auto &c : gen.cycles)
    cg.vertices.push_back({c.length, c.component_id, c.cycle.bonds()});
  cg.edges = type1_edges(g, gen);
  auto e2 = type2_edges(g, gen);
  cg.edges.insert(cg.edges.end(), e2.begin(), e2.end());
  std::sort(cg.edges.begin(), cg.edges.end(), [](const auto &x, const auto &y) {
    return std::tie(x.u, x.v) < std::tie(y.u, y.v);
  });
  return cg;
}

inline CycleGraph build_cycle_graph(const MolecularGraph &g, int j) {
  return cycle_graph_from_generator(g, build_generator(g, j));
}

inline nlohmann::ordered_json cycle_graph_to_json_value(const CycleGraph &cg) {
  nlohmann::ordered_json doc;
  doc["molecule"] = cg.molecule;
  doc["j"] = cg.j;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto &v : cg.vertices)
    doc["vertices"].push_back({{"mu", v.mu}});
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto &e : cg.edges)
    doc["edges"].push_back(
        {{"u", e.u}, {"v", e.v}, {"nu", e.nu}, {"theta", e.theta}});
  return doc;
}

inline std::string to_json(const CycleGraph &cg) {
  return cycle_graph_to_json_value(cg).dump();
}

inline CycleGraph cycle_graph_from_json_value(const nlohmann::json &doc) {
  auto need = [](const nlohmann::json &obj, const char *key) -> const auto & {
    if (!obj.is_object() || !obj.contains(key))
      throw SchemaViolation(std::string("missing \"") + key + "\"");
    return obj.at(key);
  };
  CycleGraph cg;
  const auto &molecule = need(doc, "molecule");
  const auto &j = need(doc, "j");
  const auto &vertices = need(doc, "vertices");
  const auto &edges = need(doc, "edges");
  if (!molecule.is_string() || !j.is_number_integer() || !vertices.is_array() ||
      !edges.is_array())
    throw SchemaViolation("cycle graph fields have wrong types");
  cg.molecule = molecule.get<std::string>();
  cg.j = j.get<int>();
  for (const auto &v : vertices) {
    const auto &mu = need(v, "mu");
    if (!mu.is_number_integer() || mu.get<int>() < 1)
      throw SchemaViolation("\"mu\" must be a positive integer");
    cg.vertices.push_back({mu.get<int>(), 0, {}});
  }
  for (const auto &e : edges) {
    CycleGraphEdge edge;
    const auto &u = need(e, "u");
    const auto &v = need(e, "v");
    const auto &nu = need(e, "nu");
    const auto &theta = need(e, "theta");
    if (!u.is_number_integer() || !v.is_number_integer() ||
        !nu.is_number_integer() || !theta.is_number_integer())
      throw SchemaViolation("edge fields must be integers");
    edge = {u.get<int>(), v.get<int>(), nu.get<int>(), theta.get<int>()};
    if (edge.u < 0 || edge.v < 0 || edge.u >= cg.num_vertices() ||
        edge.v >= cg.num_vertices() || edge.u == edge.v)
      throw SchemaViolation("edge endpoints out of range or equal");
    if ((edge.nu != 1 && edge.nu != 2) || edge.theta < 0)
      throw SchemaViolation("\"nu\" must be 1 or 2 and \"theta\" >= 0");
    cg.edges.push_back(edge);
  }
  return cg;
}

inline CycleGraph cycle_graph_from_json(std::string_view text) {
  try {
    return cycle_graph_from_json_value(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error &e) {
    throw SchemaViolation(std::string("not JSON: ") + e.what());
  }
}

// Graphviz text: nu = 1 edges solid, nu = 2 dashed, mu and theta as labels.
inline std::string to_dot(const CycleGraph &cg) {
  std::ostringstream os;
  os << "graph \"" << cg.molecule << "\" {\n";
  os << "  node [shape=circle];\n";
  for (int i = 0; i < cg.num_vertices(); ++i)
    os << "  c" << i << " [label=\"" << cg.vertices[i].mu << "\"];\n";
  for (const auto &e : cg.edges)
    os << "  c" << e.u << " -- c" << e.v << " [style="
       << (e.nu == 1 ? "solid" : "dashed") << ", label=\"" << e.theta
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_CYCLEGRAPH_HPP_
