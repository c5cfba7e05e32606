#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "gran/errors.hpp"
#include "gran/hasse.hpp"
#include "gran/table.hpp"
#include "helpers.hpp"
#include "oracle_support.hpp"

using namespace gran;
using testing_util::gr;

namespace {

std::size_t count(const std::string &text, const std::string &needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
    ++n;
  return n;
}

std::filesystem::path temp_file(const std::string &name, const std::string &content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

} // namespace

TEST(Csv, ValueClassesBecomeBlocks) {
  auto doc = parse_csv("obj,color\n1,red\n2,red\n3,blue\n4,blue\n");
  auto sys = to_information_system(doc);
  EXPECT_EQ(sys.attribute("color").granule, gr("{{1,2},{3,4}}", sys.universe()));
  EXPECT_TRUE(sys.complete());
}

TEST(Csv, MissingValuesShrinkTheCarrier) {
  auto sys = to_information_system(parse_csv("obj,v\n1,a\n2,?\n3,a\n4,b\n"));
  const auto &g = sys.attribute("v").granule;
  EXPECT_EQ(g, gr("{{1,3},{4}}", sys.universe()));
  EXPECT_FALSE(sys.complete());
}

TEST(Csv, Errors) {
  try {
    parse_csv("obj,a,b\nx,1,2\ny,1\n");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_csv("obj,a\nx,1\nx,2\n"), DuplicateObjectError);
  EXPECT_THROW(parse_csv("obj,a\n"), EmptyTableError);
  EXPECT_THROW(parse_csv(""), Error);
}

TEST(Csv, ToleratesCrLfAndTrailingBlankLines) {
  auto sys = to_information_system(parse_csv("obj,a\r\nx,1\r\ny,1\r\n\r\n"));
  EXPECT_EQ(sys.universe()->size(), 2u);
  EXPECT_EQ(sys.attribute("a").granule, Granule::whole(sys.universe()));
}

TEST(Csv, RoundTrip) {
  auto sys = to_information_system(parse_csv("obj,a,b\nx,1,?\ny,2,u\nz,1,u\nw,?,v\n"));
  auto again = to_information_system(parse_csv(write_csv(to_table(sys))));
  EXPECT_EQ(again, sys);
}

TEST(JsonTable, ParsesAndMatchesCsv) {
  auto doc = parse_table_json(R"({"header":["a"],"rows":[{"object":"x","values":["1"]},
      {"object":"y","values":[null]},{"object":"z","values":["1"]}]})");
  auto sys = to_information_system(doc);
  EXPECT_EQ(sys.attribute("a").granule, gr("{{x,z}}", sys.universe()));
  EXPECT_THROW(parse_table_json("{"), ParseError);
  EXPECT_THROW(parse_table_json(R"({"header":["a"],"rows":[]})"), EmptyTableError);
}

TEST(Ingest, ReadsFilesByExtension) {
  auto csv = temp_file("gran_ingest.csv", "obj,a\nx,1\ny,2\n");
  EXPECT_EQ(ingest(csv).universe()->size(), 2u);
  auto json = temp_file("gran_ingest.json",
                        R"({"header":["a"],"rows":[{"object":"x","values":["1"]}]})");
  EXPECT_EQ(ingest(json).attributes().size(), 1u);
  EXPECT_THROW(ingest("/nonexistent/table.csv"), IoError);
}

TEST(Ingest, Deterministic) {
  const std::string text = "obj,a,b\np,1,x\nq,2,x\nr,1,y\n";
  EXPECT_EQ(to_information_system(parse_csv(text)), to_information_system(parse_csv(text)));
}

TEST(Hasse, MicroLattices) {
  auto one = micro_hasse(Universe::numbered(1));
  EXPECT_EQ(one.nodes.size(), 2u);
  EXPECT_EQ(one.edges.size(), 1u);
  auto two = micro_hasse(Universe::numbered(2));
  EXPECT_EQ(two.nodes.size(), 4u);
  EXPECT_EQ(two.edges.size(), 4u);
  auto dot = to_dot(two);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_EQ(count(dot, "->"), 4u);
  EXPECT_THROW(micro_hasse(Universe::numbered(6)), CapExceededError);
}

TEST(Hasse, MicroMarksDefinables) {
  auto u = Universe::numbered(3);
  InformationSystem sys(u, {{"p", gr("{{1,2},{3}}", u)}});
  auto d = micro_hasse(u, &sys);
  std::size_t marked = 0;
  for (const auto &node : d.nodes)
    marked += node.definable;
  EXPECT_EQ(marked, 4u);
}

TEST(Hasse, MacroLatticeOfThreeBlocks) {
  auto u = Universe::numbered(3);
  InformationSystem sys(u, {{"p", Granule::discrete(u)}});
  auto d = macro_hasse(sys);
  EXPECT_EQ(d.nodes.size(), ref::bell(3));
  // Covers of the partition lattice on 3 points: 3 from the bottom, 3 to the top.
  EXPECT_EQ(d.edges.size(), 6u);
  EXPECT_FALSE(d.nodes[0].definable);
  auto u7 = Universe::numbered(7);
  InformationSystem big(u7, {{"p", Granule::discrete(u7)}});
  EXPECT_THROW(macro_hasse(big), CapExceededError);
}
