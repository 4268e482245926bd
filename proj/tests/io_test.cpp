#include <gtest/gtest.h>

#include <sstream>

#include "aecc/colorer.hpp"
#include "aecc/corpus.hpp"
#include "aecc/io.hpp"

using namespace aecc;

namespace {

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace

TEST(Io, EdgeListParsing) {
  Graph g = parse_graph("# triangle\n0 1\n1 2  # trailing\n\n2 0\n");
  EXPECT_EQ(g, named("K3"));
  EXPECT_EQ(parse_graph("").vertex_count(), 0);
  EXPECT_EQ(parse_graph("0 5\n").vertex_count(), 6);
}

TEST(Io, EdgeListErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  EXPECT_EQ(line_of("0 1\n1 x\n"), 2);
  EXPECT_EQ(line_of("0 1\n1 2 3\n"), 2);
  EXPECT_EQ(line_of("0 0\n"), 1);
  EXPECT_EQ(line_of("0 -1\n"), 1);
  EXPECT_EQ(line_of("0 1\n1 0\n"), 2);
}

TEST(Io, EdgeListRoundTrip) {
  Graph g = stacked_triangulation(30, 2).graph;
  std::ostringstream out;
  write_edge_list(out, g);
  EXPECT_EQ(parse_graph(out.str()), g);
}

TEST(Io, ColoringRoundTripAndPartial) {
  Graph c4 = named("C4");
  std::istringstream in("0 1 1\n1 2 2\n2 3 1\n");
  auto c = read_coloring(in, c4);
  EXPECT_EQ(c.palette_size(), 2);
  EXPECT_FALSE(c.is_total());
  EXPECT_EQ(c[c4.edge_index(0, 3)], kUncolored);

  auto run = color_planar(named("octahedron"));
  std::ostringstream out;
  write_coloring(out, named("octahedron"), run.coloring);
  std::istringstream back(out.str());
  EXPECT_EQ(read_coloring(back, named("octahedron"), run.palette), run.coloring);
}

TEST(Io, ColoringErrors) {
  Graph c4 = named("C4");
  auto fails = [&](const std::string& text, int palette = 0) {
    std::istringstream in(text);
    try {
      read_coloring(in, c4, palette);
    } catch (const ParseError&) {
      return true;
    }
    return false;
  };
  EXPECT_TRUE(fails("0 2 1\n"));
  EXPECT_TRUE(fails("0 1 1\n0 1 2\n"));
  EXPECT_TRUE(fails("0 1\n"));
  EXPECT_TRUE(fails("0 1 4\n", 3));
  EXPECT_TRUE(fails("0 9 1\n"));
  EXPECT_FALSE(fails("0 1 3\n", 3));
}

TEST(Io, RotationRoundTrip) {
  auto st = stacked_triangulation(12, 6);
  std::ostringstream out;
  write_rotation(out, st.rotation);
  std::istringstream in(out.str());
  EXPECT_EQ(read_rotation(in, 12), st.rotation);
  std::istringstream bad("0 1 2\n");
  EXPECT_THROW(read_rotation(bad, 3), ParseError);
  std::istringstream twice("0: 1\n0: 1\n");
  EXPECT_THROW(read_rotation(twice, 2), ParseError);
}

TEST(Io, JsonShapes) {
  Graph c4 = named("C4");
  EdgeColoring bad(2, std::vector<Color>{1, 2, 2, 1});
  auto v = check_acyclic(c4, bad);
  ASSERT_TRUE(v);
  json j = to_json(*v);
  EXPECT_EQ(j["kind"], "Bichromatic");
  EXPECT_EQ(j["colors"], json({1, 2}));
  EXPECT_EQ(j["edges"].size(), 4u);

  json cfg = to_json(*find_any_configuration(named("K4")));
  EXPECT_EQ(cfg["tag"], "A2.1");
  EXPECT_EQ(cfg["delta"], 3);
  EXPECT_EQ(cfg["witness"], json({0, 1, 2, 3}));

  auto run = color_planar(named("icosahedron"));
  json trace = to_json(run.trace);
  ASSERT_EQ(trace.size(), run.trace.size());
  EXPECT_EQ(trace[0]["reduction"], "base");
  for (const auto& step : trace) {
    for (const char* key : {"block", "config", "reduction", "rung", "nodes"}) EXPECT_TRUE(step.contains(key));
  }
}

TEST(Io, DischargeReport) {
  Graph w8 = named("W8");
  auto sh = build_H(w8);
  auto e = *embed(sh.h);
  auto initial = initial_charges(e);
  auto result = apply_rules(e, initial);
  json r = discharge_report(sh, e, initial, result, {});
  EXPECT_EQ(r["initial_total"], "8/1");
  EXPECT_EQ(r["final_total"], "8/1");
  EXPECT_EQ(r["transfers"].size(), 8u);
  EXPECT_EQ(r["transfers"][0]["amount"], "1/2");
  EXPECT_EQ(r["final"]["v8"], "0/1");
  EXPECT_EQ(r["faces"].size(), 9u);
}
