//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef CYCLOGRAPH_MOLIO_HPP_
#define CYCLOGRAPH_MOLIO_HPP_

// Reading and writing molecular graphs: MDL V2000 molfiles, SDF, and a
// neutral JSON graph document. Coordinates, charges, isotopes and stereo
// flags are read past and dropped.

#include <charconv>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cyclograph/error.hpp"
#include "cyclograph/molecule.hpp"

namespace cyclograph {

namespace internal {

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos)
      break;
    pos = nl + 1;
  }
  return lines;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

// Fixed-width column as an integer; nullopt when blank or not a number.
inline std::optional<int> column_int(std::string_view line, std::size_t pos,
                                     std::size_t width) {
  if (pos >= line.size())
    return std::nullopt;
  std::string_view field = trim(line.substr(pos, width));
  if (field.empty())
    return std::nullopt;
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    return std::nullopt;
  return value;
}

// Adds a bond unless the pair is already bonded; the first order seen wins.
inline void add_bond(MolecularGraph &g, std::set<std::pair<AtomId, AtomId>> &seen,
                     Bond bond, std::vector<std::string> *warnings) {
  auto key = std::minmax(bond.a, bond.b);
  if (!seen.insert(key).second) {
    if (warnings != nullptr)
      warnings->push_back("duplicate bond " + std::to_string(key.first + 1) +
                          "-" + std::to_string(key.second + 1) +
                          " collapsed");
    return;
  }
  g.bonds.push_back(bond);
}

inline MolecularGraph parse_molfile_lines(
    const std::vector<std::string_view> &lines,
    std::vector<std::string> *warnings) {
  if (lines.size() < 4)
    throw MalformedRecord("molfile shorter than header and counts line");

  MolecularGraph g;
  g.name = std::string(trim(lines[0]));

  std::string_view counts = lines[3];
  if (counts.find("V3000") != std::string_view::npos)
    throw UnsupportedVersion("V3000 molfiles are not supported");
  auto n_atoms = column_int(counts, 0, 3);
  auto n_bonds = column_int(counts, 3, 3);
  if (!n_atoms || !n_bonds || *n_atoms < 0 || *n_bonds < 0)
    throw MalformedRecord("bad counts line: '" + std::string(counts) + "'");
  std::size_t first_bond = 4 + static_cast<std::size_t>(*n_atoms);
  if (lines.size() < first_bond + static_cast<std::size_t>(*n_bonds))
    throw MalformedRecord("truncated atom or bond block");

  g.atoms.reserve(*n_atoms);
  for (int i = 0; i < *n_atoms; ++i) {
    std::string_view line = lines[4 + i];
    if (line.size() < 32)
      throw MalformedRecord("short atom line " + std::to_string(i + 1));
    std::string_view symbol = trim(line.substr(31, 3));
    if (!atomic_number(symbol))
      throw MalformedRecord("unknown element '" + std::string(symbol) +
                            "' on atom " + std::to_string(i + 1));
    g.atoms.push_back(Atom{std::string(symbol == "D" || symbol == "T"
                                           ? std::string_view("H")
                                           : symbol)});
  }

  std::set<std::pair<AtomId, AtomId>> seen;
  for (int i = 0; i < *n_bonds; ++i) {
    std::string_view line = lines[first_bond + i];
    auto a = column_int(line, 0, 3);
    auto b = column_int(line, 3, 3);
    auto order = column_int(line, 6, 3);
    if (!a || !b || !order)
      throw MalformedRecord("bad bond line " + std::to_string(i + 1));
    if (*a < 1 || *a > *n_atoms || *b < 1 || *b > *n_atoms)
      throw MalformedRecord("bond " + std::to_string(i + 1) +
                            " references atom out of range 1.." +
                            std::to_string(*n_atoms));
    if (*a == *b)
      throw MalformedRecord("bond " + std::to_string(i + 1) + " is a self-loop");
    BondOrder bo;
    switch (*order) {
    case 1:
      bo = BondOrder::kSingle;
      break;
    case 2:
      bo = BondOrder::kDouble;
      break;
    case 3:
      bo = BondOrder::kTriple;
      break;
    case 4:
      bo = BondOrder::kAromatic;
      break;
    default:
      throw MalformedRecord("unsupported bond order " + std::to_string(*order) +
                            " on bond " + std::to_string(i + 1));
    }
    add_bond(g, seen, Bond{*a - 1, *b - 1, bo}, warnings);
  }
  return g;
}

}  // namespace internal

inline MolecularGraph parse_molfile(std::string_view text,
                                    std::vector<std::string> *warnings = nullptr) {
  return internal::parse_molfile_lines(internal::split_lines(text), warnings);
}

// One SDF record. Exactly one of `graph` and `error` is set.
struct SdfRecord {
  std::size_t index = 0;  // 0-based position in the file
  std::string name;
  std::optional<MolecularGraph> graph;
  std::string error;
};

// Splits an SDF into records and parses each one independently, so a corrupt
// record does not hide the rest of the file.
inline std::vector<SdfRecord> parse_sdf_records(
    std::string_view text, std::vector<std::string> *warnings = nullptr) {
  std::vector<SdfRecord> records;
  std::vector<std::string_view> current;
  auto flush = [&] {
    bool blank = true;
    for (auto line : current)
      if (!internal::trim(line).empty())
        blank = false;
    if (blank) {
      current.clear();
      return;
    }
    SdfRecord rec;
    rec.index = records.size();
    rec.name = std::string(internal::trim(current.front()));
    try {
      rec.graph = internal::parse_molfile_lines(current, warnings);
    } catch (const Error &e) {
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
    current.clear();
  };
  for (auto line : internal::split_lines(text)) {
    if (internal::trim(line) == "$$$$")
      flush();
    else
      current.push_back(line);
  }
  flush();
  return records;
}

// Parses every record; the first failure is rethrown as MalformedRecord
// carrying its 1-based record number.
inline std::vector<MolecularGraph> parse_sdf(
    std::string_view text, std::vector<std::string> *warnings = nullptr) {
  std::vector<MolecularGraph> out;
  for (auto &rec : parse_sdf_records(text, warnings)) {
    if (!rec.graph)
      throw MalformedRecord(rec.error, rec.index + 1);
    out.push_back(std::move(*rec.graph));
  }
  return out;
}

inline MolecularGraph suppress_hydrogens(const MolecularGraph &g) {
  MolecularGraph out;
  out.name = g.name;
  std::vector<AtomId> remap(g.atoms.size(), -1);
  for (AtomId i = 0; i < g.num_atoms(); ++i) {
    if (g.atoms[i].element == "H")
      continue;
    remap[i] = out.num_atoms();
    out.atoms.push_back(g.atoms[i]);
  }
  for (const Bond &b : g.bonds) {
    if (remap[b.a] < 0 || remap[b.b] < 0)
      continue;
    out.bonds.push_back(Bond{remap[b.a], remap[b.b], b.order});
  }
  return out;
}

inline std::string to_json(const MolecularGraph &g) {
  nlohmann::ordered_json doc;
  doc["name"] = g.name;
  doc["atoms"] = nlohmann::ordered_json::array();
  for (const Atom &a : g.atoms)
    doc["atoms"].push_back({{"element", a.element}});
  doc["bonds"] = nlohmann::ordered_json::array();
  for (const Bond &b : g.bonds)
    doc["bonds"].push_back(
        {{"a", b.a}, {"b", b.b}, {"order", std::string(to_string(b.order))}});
  return doc.dump();
}

inline MolecularGraph molecular_graph_from_json(const nlohmann::json &doc) {
  auto require = [](const nlohmann::json &obj, const char *key) -> const auto & {
    if (!obj.is_object() || !obj.contains(key))
      throw SchemaViolation(std::string("missing \"") + key + "\"");
    return obj.at(key);
  };
  MolecularGraph g;
  const auto &name = require(doc, "name");
  const auto &atoms = require(doc, "atoms");
  const auto &bonds = require(doc, "bonds");
  if (!name.is_string() || !atoms.is_array() || !bonds.is_array())
    throw SchemaViolation("\"name\" must be a string, \"atoms\" and \"bonds\" arrays");
  g.name = name.get<std::string>();
  for (const auto &atom : atoms) {
    const auto &el = require(atom, "element");
    if (!el.is_string() || !atomic_number(el.get<std::string>()))
      throw SchemaViolation("atom element must be a periodic-table symbol");
    g.atoms.push_back(Atom{el.get<std::string>()});
  }
  std::set<std::pair<AtomId, AtomId>> seen;
  for (const auto &bond : bonds) {
    const auto &a = require(bond, "a");
    const auto &b = require(bond, "b");
    const auto &order = require(bond, "order");
    if (!a.is_number_integer() || !b.is_number_integer() || !order.is_string())
      throw SchemaViolation("bond fields have wrong types");
    auto bo = bond_order_from_string(order.get<std::string>());
    int ia = a.get<int>(), ib = b.get<int>();
    if (!bo)
      throw SchemaViolation("unknown bond order \"" + order.get<std::string>() + "\"");
    if (ia < 0 || ib < 0 || ia >= g.num_atoms() || ib >= g.num_atoms() ||
        ia == ib)
      throw SchemaViolation("bond endpoints out of range or equal");
    if (!seen.insert(std::minmax(ia, ib)).second)
      throw SchemaViolation("duplicate bond");
    g.bonds.push_back(Bond{ia, ib, *bo});
  }
  return g;
}

inline MolecularGraph from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw SchemaViolation(std::string("not JSON: ") + e.what());
  }
  return molecular_graph_from_json(doc);
}

}  // namespace cyclograph

#endif  // CYCLOGRAPH_MOLIO_HPP_
