#include <gtest/gtest.h>

#include <filesystem>

#include "cfconn/generators.hpp"
#include "cfconn/io.hpp"

using namespace cfconn;

namespace {

int error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(GraphFormat, RoundTrip) {
  for (const Graph& g : {path_graph(4), cycle_graph(5), complete_graph(4), Graph(3, {})}) {
    EXPECT_EQ(parse_graph(format_graph(g)), g);
  }
  EXPECT_EQ(parse_graph("# comment\n3 2\n\n0 1\n1 2\n"), path_graph(3));
}

TEST(GraphFormat, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line([] { parse_graph("3 2\n0 1\n0 1\n"); }), 3);
  EXPECT_EQ(error_line([] { parse_graph("3 2\n0 1\n1 1\n"); }), 3);
  EXPECT_EQ(error_line([] { parse_graph("3 1\n0 3\n"); }), 2);
  EXPECT_EQ(error_line([] { parse_graph("3 1\n0 x\n"); }), 2);
  EXPECT_EQ(error_line([] { parse_graph("3 1\n0 1 2\n"); }), 2);
  EXPECT_GT(error_line([] { parse_graph("3 2\n0 1\n"); }), 0);
  EXPECT_EQ(error_line([] { parse_graph(""); }), 0);
}

TEST(ColoringFormat, RoundTripAndErrors) {
  const Graph p4 = path_graph(4);
  const EdgeColoring c(2, {1, 2, 1});
  EXPECT_EQ(parse_edge_coloring(format_coloring(c), p4), c);
  const VertexColoring v(3, {1, 2, 3, 1});
  EXPECT_EQ(parse_vertex_coloring(format_coloring(v), p4), v);
  EXPECT_EQ(error_line([&] { parse_edge_coloring("2\n1\n2\n", p4); }), 3);
  EXPECT_EQ(error_line([&] { parse_edge_coloring("2\n1\n3\n1\n", p4); }), 3);
  EXPECT_EQ(error_line([&] { parse_edge_coloring("0\n", p4); }), 1);
}

TEST(PairsFormat, RoundTripAndErrors) {
  const Graph g = cycle_graph(5);
  const PairSet p{{0, 2}, {3, 1}};
  EXPECT_EQ(parse_pairs(format_pairs(p), g), p);
  EXPECT_EQ(error_line([&] { parse_pairs("p 0 1\np 0 5\n", g); }), 2);
  EXPECT_EQ(error_line([&] { parse_pairs("q 0 1\n", g); }), 1);
  EXPECT_EQ(error_line([&] { parse_pairs("p 2 2\n", g); }), 1);
}

TEST(PartialFormat, RoundTripAndErrors) {
  const Graph g = path_graph(4);
  PartialEdgeColoring p(3);
  p.assign(1, 1);
  EXPECT_EQ(format_partial(p), "2\n-\n1\n-\n");
  EXPECT_EQ(parse_partial(format_partial(p), g), p);
  EXPECT_EQ(error_line([&] { parse_partial("2\n0\n2\n-\n", g); }), 3);
  EXPECT_EQ(error_line([&] { parse_partial("3\n0\n1\n-\n", g); }), 1);
  EXPECT_GT(error_line([&] { parse_partial("2\n0\n", g); }), 0);
}

TEST(MapsFormat, RoundTripAndArrow) {
  ReductionMaps m("kcolor2subset");
  m.add("vertex", "0", 0);
  m.add("center", "x", 3);
  auto [back, k] = parse_maps(format_maps(m, 4));
  EXPECT_EQ(back, m);
  EXPECT_EQ(k, 4);
  auto [arrow, k2] = parse_maps("reduction star2scfc \xE2\x86\x92 3\nleaf 1 \xE2\x86\x92 1\n");
  EXPECT_EQ(k2, 3);
  EXPECT_EQ(arrow.at("leaf", "1"), 1);
  EXPECT_EQ(error_line([] { parse_maps("leaf 1 -> 1\n"); }), 1);
  EXPECT_EQ(error_line([] { parse_maps("reduction sat2partial -> 2\nvar x1 -> 2\nvar x1 -> 3\n"); }), 3);
  EXPECT_EQ(error_line([] { parse_maps("reduction nope -> 2\n"); }), 1);
}

TEST(Instances, DirectoryRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "cfconn_io_instance";
  std::filesystem::remove_all(dir);
  const CnfFormula f = parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
  const auto inst = reduce_3sat_to_partial2(f);
  write_instance(dir, inst);
  const auto back = read_instance(dir);
  EXPECT_EQ(back.kind, inst.kind);
  EXPECT_EQ(back.graph, inst.graph);
  EXPECT_EQ(back.pairs, inst.pairs);
  EXPECT_EQ(back.partial, inst.partial);
  EXPECT_EQ(back.maps, inst.maps);
  EXPECT_EQ(back.k, 2);

  const auto star = reduce_subset_star_to_scfc(star_graph(3), PairSet{{1, 2}});
  std::filesystem::remove_all(dir);
  write_instance(dir, star);
  const auto sback = read_instance(dir);
  EXPECT_FALSE(sback.partial.has_value());
  EXPECT_EQ(sback.graph, star.graph);
  EXPECT_EQ(sback.maps, star.maps);
  std::filesystem::remove_all(dir);
}

TEST(Instances, MissingDirectoryIsAParseError) {
  EXPECT_THROW(read_instance("/nonexistent/cfconn"), ParseError);
}
