#include <gtest/gtest.h>

#include <set>

#include "cfconn/generators.hpp"
#include "cfconn/oracles.hpp"

using namespace cfconn;

TEST(SimplePaths, Examples) {
  const auto c4 = enumerate_simple_paths(cycle_graph(4), 0, 2);
  ASSERT_EQ(c4.size(), 2U);
  for (const Path& p : c4) EXPECT_EQ(p.size(), 3U);
  EXPECT_EQ(enumerate_simple_paths(path_graph(4), 0, 3), (PathList{{0, 1, 2, 3}}));

  const auto k4 = enumerate_simple_paths(complete_graph(4), 0, 3);
  ASSERT_EQ(k4.size(), 5U);
  int by_len[4] = {0, 0, 0, 0};
  for (const Path& p : k4) ++by_len[p.size() - 1];
  EXPECT_EQ(by_len[1], 1);
  EXPECT_EQ(by_len[2], 2);
  EXPECT_EQ(by_len[3], 2);
}

TEST(SimplePaths, MaxLengthAndGuard) {
  EXPECT_EQ(enumerate_simple_paths(complete_graph(4), 0, 3, 2).size(), 3U);
  EXPECT_THROW(enumerate_simple_paths(path_graph(13), 0, 12), std::length_error);
  EXPECT_NO_THROW(enumerate_simple_paths(path_graph(13), 0, 12, {}, OracleLimits{13}));
  EXPECT_THROW(enumerate_simple_paths(path_graph(3), 1, 1), std::invalid_argument);
}

TEST(SimplePaths, ValidAndDistinct) {
  for (const Graph& g : all_connected_graphs(5)) {
    const auto paths = enumerate_simple_paths(g, 0, 4);
    std::set<Path> seen(paths.begin(), paths.end());
    EXPECT_EQ(seen.size(), paths.size());
    for (const Path& p : paths) {
      EXPECT_EQ(p.front(), 0);
      EXPECT_EQ(p.back(), 4);
      EXPECT_EQ(std::set<Vertex>(p.begin(), p.end()).size(), p.size());
      for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(g.edge_between(p[i], p[i + 1]).has_value());
    }
  }
}

TEST(UniqueColor, Basics) {
  EXPECT_TRUE(has_unique_color(std::vector<Color>{1, 2, 1}));
  EXPECT_FALSE(has_unique_color(std::vector<Color>{1, 1}));
  EXPECT_FALSE(has_unique_color(std::vector<Color>{}));
  EXPECT_TRUE(has_unique_color(std::vector<Color>{4}));
}

TEST(Oracles, Examples) {
  EXPECT_TRUE(oracle_cfc_edge(path_graph(4), EdgeColoring(2, {1, 2, 1})));
  EXPECT_TRUE(oracle_scfc(cycle_graph(4), EdgeColoring(2, {1, 2, 1, 2})));
  EXPECT_FALSE(oracle_cfc_vertex(path_graph(3), VertexColoring(1, {1, 1, 1})));
  EXPECT_TRUE(oracle_cfc_vertex(path_graph(3), VertexColoring(2, {1, 2, 1})));
}

TEST(Oracles, RainbowColoringsConnectEverything) {
  for (const Graph& g : all_connected_graphs(5)) {
    std::vector<Color> distinct(static_cast<std::size_t>(g.size()));
    for (std::size_t i = 0; i < distinct.size(); ++i) distinct[i] = static_cast<Color>(i + 1);
    const auto c = EdgeColoring::from_colors(distinct);
    ASSERT_TRUE(oracle_cfc_edge(g, c));
    ASSERT_TRUE(oracle_scfc(g, c));
    ASSERT_TRUE(oracle_rainbow_connected(g, c));
  }
}

TEST(Oracles, RainbowExamples) {
  EXPECT_TRUE(oracle_rainbow_connected(complete_graph(3), EdgeColoring(3, {1, 2, 3})));
  EXPECT_FALSE(oracle_rainbow_connected(cycle_graph(4), EdgeColoring(1, {1, 1, 1, 1})));
  EXPECT_TRUE(oracle_rainbow_connected(cycle_graph(4), EdgeColoring(2, {1, 2, 1, 2})));
  int passing = 0;
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<Color> c(5);
    for (int i = 0; i < 5; ++i) c[static_cast<std::size_t>(i)] = 1 + (mask >> i & 1);
    passing += oracle_rainbow_connected(cycle_graph(5), EdgeColoring(2, c));
  }
  EXPECT_EQ(passing, 0);
}

TEST(Oracles, StrongImpliesPlainAndTreesAgree) {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      const bool tree = is_tree(g);
      for_each_canonical_coloring(static_cast<std::size_t>(g.size()), 2, [&](std::span<const Color> colors) {
        const auto c = EdgeColoring::from_colors({colors.begin(), colors.end()});
        const bool strong = oracle_scfc(g, c);
        const bool plain = oracle_cfc_edge(g, c);
        if (strong) {
          EXPECT_TRUE(plain);
        }
        if (tree) {
          EXPECT_EQ(strong, plain);
        }
        if (oracle_rainbow_connected(g, c)) {
          EXPECT_TRUE(plain);
        }
        return true;
      });
    }
  }
}

TEST(Oracles, GuardApplies) {
  const Graph big = path_graph(13);
  std::vector<Color> c(12, 1);
  EXPECT_THROW(oracle_cfc_edge(big, EdgeColoring(1, c)), std::length_error);
  EXPECT_THROW(oracle_rainbow_connected(big, EdgeColoring(1, c)), std::length_error);
}
