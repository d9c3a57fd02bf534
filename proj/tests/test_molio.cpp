//
// Project cyclograph - Copyright 2026 The cyclograph Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "cyclograph/molio.hpp"
#include "oracles.hpp"

using namespace cyclograph;

namespace {

std::string benzene(const std::string &name = "benzene") {
  return oracle::v2000(name, {"C", "C", "C", "C", "C", "C"},
                       {{1, 2, 4}, {2, 3, 4}, {3, 4, 4}, {4, 5, 4}, {5, 6, 4}, {6, 1, 4}});
}

}  // namespace

TEST(Molfile, Benzene) {
  MolecularGraph g = parse_molfile(benzene());
  EXPECT_EQ(g.name, "benzene");
  EXPECT_EQ(g.num_atoms(), 6);
  EXPECT_EQ(g.num_bonds(), 6);
  for (const auto &b : g.bonds)
    EXPECT_EQ(b.order, BondOrder::kAromatic);
}

TEST(Molfile, CyclohexaneAllSingle) {
  auto g = parse_molfile(oracle::v2000(
      "cyclohexane", {"C", "C", "C", "C", "C", "C"},
      {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}, {6, 1, 1}}));
  EXPECT_EQ(g.num_atoms(), 6);
  EXPECT_EQ(g.num_bonds(), 6);
  for (const auto &b : g.bonds)
    EXPECT_EQ(b.order, BondOrder::kSingle);
}

TEST(Molfile, AtomZeroIsMalformed) {
  EXPECT_THROW(parse_molfile(oracle::v2000("x", {"C", "C"}, {{0, 1, 1}})),
               MalformedRecord);
  EXPECT_THROW(parse_molfile(oracle::v2000("x", {"C", "C"}, {{1, 3, 1}})),
               MalformedRecord);
}

TEST(Molfile, BadCountsLine) {
  std::string text = "x\n\n\nabc\nM  END\n";
  EXPECT_THROW(parse_molfile(text), MalformedRecord);
  EXPECT_THROW(parse_molfile(""), MalformedRecord);
}

TEST(Molfile, TruncatedBlocks) {
  std::string text = benzene();
  text = text.substr(0, text.find("  1  2  4"));
  EXPECT_THROW(parse_molfile(text), MalformedRecord);
}

TEST(Molfile, V3000Rejected) {
  std::string text =
      "x\n\n\n  0  0  0     0  0            999 V3000\nM  V30 BEGIN CTAB\nM  END\n";
  EXPECT_THROW(parse_molfile(text), UnsupportedVersion);
}

TEST(Molfile, UnknownElementAndBadOrder) {
  EXPECT_THROW(parse_molfile(oracle::v2000("x", {"C", "Qq"}, {{1, 2, 1}})),
               MalformedRecord);
  EXPECT_THROW(parse_molfile(oracle::v2000("x", {"C", "C"}, {{1, 2, 7}})),
               MalformedRecord);
  EXPECT_THROW(parse_molfile(oracle::v2000("x", {"C", "C"}, {{1, 1, 1}})),
               MalformedRecord);
}

TEST(Molfile, DuplicateBondKeepsFirstOrderAndWarns) {
  std::vector<std::string> warnings;
  auto g = parse_molfile(
      oracle::v2000("x", {"C", "C", "O"}, {{1, 2, 2}, {2, 1, 1}, {2, 3, 1}}), &warnings);
  ASSERT_EQ(g.num_bonds(), 2);
  EXPECT_EQ(g.bonds[0].order, BondOrder::kDouble);
  EXPECT_EQ(warnings.size(), 1U);
}

TEST(Molfile, ChargesAndIsotopesIgnored) {
  std::string text = oracle::v2000("x", {"N", "C"}, {{1, 2, 1}});
  text.insert(text.find("M  END"), "M  CHG  1   1   1\nM  ISO  1   2  13\n");
  auto g = parse_molfile(text);
  EXPECT_EQ(g.num_atoms(), 2);
  EXPECT_EQ(g.atoms[0].element, "N");
}

TEST(Sdf, TwoBenzenes) {
  auto mols = parse_sdf(benzene("a") + "$$$$\n" + benzene("b") + "$$$$\n");
  ASSERT_EQ(mols.size(), 2U);
  EXPECT_EQ(mols[0].name, "a");
  EXPECT_EQ(mols[1].name, "b");
}

TEST(Sdf, EmptyFile) {
  EXPECT_TRUE(parse_sdf("").empty());
  EXPECT_TRUE(parse_sdf("\n\n").empty());
}

TEST(Sdf, DataItemsIgnored) {
  std::string text = benzene();
  text += "> <source>\nsomewhere\n\n$$$$\n";
  auto mols = parse_sdf(text);
  ASSERT_EQ(mols.size(), 1U);
  EXPECT_EQ(mols[0].num_bonds(), 6);
}

TEST(Sdf, CorruptSecondRecordNamed) {
  std::string bad = oracle::v2000("bad", {"C", "C"}, {{1, 9, 1}});
  std::string text = benzene() + "$$$$\n" + bad + "$$$$\n";
  try {
    parse_sdf(text);
    FAIL() << "no exception";
  } catch (const MalformedRecord &e) {
    ASSERT_TRUE(e.record().has_value());
    EXPECT_EQ(*e.record(), 2U);
    EXPECT_NE(std::string(e.what()).find("record 2"), std::string::npos);
  }
  auto records = parse_sdf_records(text);
  ASSERT_EQ(records.size(), 2U);
  EXPECT_TRUE(records[0].graph.has_value());
  EXPECT_FALSE(records[1].graph.has_value());
  EXPECT_EQ(records[1].name, "bad");
}

TEST(Hydrogens, EthanolExplicit) {
  // C C O plus six H.
  auto g = parse_molfile(oracle::v2000(
      "ethanol", {"C", "C", "O", "H", "H", "H", "H", "H", "H"},
      {{1, 2, 1}, {2, 3, 1}, {1, 4, 1}, {1, 5, 1}, {1, 6, 1}, {2, 7, 1}, {2, 8, 1}, {3, 9, 1}}));
  ASSERT_EQ(g.num_atoms(), 9);
  auto heavy = suppress_hydrogens(g);
  EXPECT_EQ(heavy.num_atoms(), 3);
  EXPECT_EQ(heavy.num_bonds(), 2);
  EXPECT_EQ(heavy.atoms[2].element, "O");
  EXPECT_EQ(suppress_hydrogens(heavy), heavy);
}

TEST(Hydrogens, IdentityAndH2) {
  auto g = parse_molfile(benzene());
  EXPECT_EQ(suppress_hydrogens(g), g);
  auto h2 = parse_molfile(oracle::v2000("h2", {"H", "H"}, {{1, 2, 1}}));
  auto empty = suppress_hydrogens(h2);
  EXPECT_EQ(empty.num_atoms(), 0);
  EXPECT_EQ(empty.num_bonds(), 0);
}

TEST(Hydrogens, DeuteriumCountsAsHydrogen) {
  auto g = parse_molfile(oracle::v2000("x", {"C", "D"}, {{1, 2, 1}}));
  EXPECT_EQ(suppress_hydrogens(g).num_atoms(), 1);
}

TEST(Json, EmptyGraph) {
  MolecularGraph g;
  g.name = "nothing";
  EXPECT_EQ(to_json(g), R"({"name":"nothing","atoms":[],"bonds":[]})");
  EXPECT_EQ(from_json(to_json(g)), g);
}

TEST(Json, RoundTrip) {
  auto g = parse_molfile(oracle::v2000("mixed", {"C", "C", "N", "O"},
                                       {{1, 2, 2}, {2, 3, 3}, {3, 4, 1}, {4, 1, 4}}));
  EXPECT_EQ(from_json(to_json(g)), g);
  EXPECT_NE(to_json(g).find("\"triple\""), std::string::npos);
}

TEST(Json, SchemaViolations) {
  EXPECT_THROW(from_json(R"({"name":"x","atoms":[]})"), SchemaViolation);
  EXPECT_THROW(from_json(R"({"name":"x","atoms":[{"element":"C"}],"bonds":[{"a":0,"b":1,"order":"single"}]})"),
               SchemaViolation);
  EXPECT_THROW(from_json(R"({"name":"x","atoms":[{"element":"C"},{"element":"C"}],"bonds":[{"a":0,"b":1,"order":"quad"}]})"),
               SchemaViolation);
  EXPECT_THROW(from_json(R"({"name":"x","atoms":[{"element":"Zz"}],"bonds":[]})"),
               SchemaViolation);
  EXPECT_THROW(from_json("not json"), SchemaViolation);
}

TEST(Fixtures, AllParseAndRoundTrip) {
  auto mols = parse_sdf(oracle::slurp(CYCLOGRAPH_DATA_DIR "/fixtures.sdf"));
  ASSERT_EQ(mols.size(), 8U);
  for (const auto &g : mols) {
    EXPECT_EQ(from_json(to_json(g)), g) << g.name;
    std::set<std::pair<int, int>> pairs;
    for (const auto &b : g.bonds) {
      EXPECT_LT(b.a, g.num_atoms());
      EXPECT_LT(b.b, g.num_atoms());
      EXPECT_TRUE(pairs.insert(std::minmax(b.a, b.b)).second) << g.name;
    }
  }
}

TEST(Fixtures, QuinineHeavyAtoms) {
  // C20H24N2O2: 24 heavy atoms.
  auto mols = parse_sdf(oracle::slurp(CYCLOGRAPH_DATA_DIR "/fixtures.sdf"));
  auto it = std::find_if(mols.begin(), mols.end(),
                         [](const auto &g) { return g.name == "quinine"; });
  ASSERT_NE(it, mols.end());
  EXPECT_EQ(suppress_hydrogens(*it).num_atoms(), 24);
}
