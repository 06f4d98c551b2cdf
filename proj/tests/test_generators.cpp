#include <gtest/gtest.h>

#include <set>

#include "cfconn/generators.hpp"

using namespace cfconn;

namespace {

std::set<std::vector<std::pair<int, int>>> edge_sets(const std::vector<Graph>& graphs) {
  std::set<std::vector<std::pair<int, int>>> out;
  for (const Graph& g : graphs) {
    auto e = g.edge_pairs();
    std::sort(e.begin(), e.end());
    out.insert(e);
  }
  return out;
}

}  // namespace

TEST(Families, Basic) {
  EXPECT_EQ(path_graph(4), Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(cycle_graph(4).size(), 4);
  EXPECT_EQ(star_graph(3).order(), 4);
  EXPECT_EQ(star_graph(3).degree(0), 3);
  EXPECT_EQ(complete_graph(5).size(), 10);
}

TEST(Families, ConnectedGraphCounts) {
  const std::size_t expected[] = {1, 1, 1, 4, 38, 728, 26704};
  for (int n = 1; n <= 6; ++n) {
    const auto graphs = all_connected_graphs(n);
    EXPECT_EQ(graphs.size(), expected[n]) << "n=" << n;
    EXPECT_EQ(edge_sets(graphs).size(), graphs.size()) << "duplicates at n=" << n;
    for (const Graph& g : graphs) ASSERT_TRUE(is_connected(g));
  }
}

TEST(Families, ThreeVertexGraphs) {
  const auto graphs = all_connected_graphs(3);
  ASSERT_EQ(graphs.size(), 4U);
  int triangles = 0;
  for (const Graph& g : graphs) triangles += g.size() == 3;
  EXPECT_EQ(triangles, 1);
}

TEST(Families, SevenVerticesCountedWithoutStoring) {
  std::size_t count = 0;
  for_each_connected_graph(7, [&](const Graph&) {
    ++count;
    return true;
  });
  EXPECT_EQ(count, 1866256U);
}

TEST(Families, ExhaustiveGuard) {
  EXPECT_THROW(for_each_connected_graph(8, [](const Graph&) { return true; }), std::length_error);
}

TEST(Families, SeededAreDeterministic) {
  EXPECT_EQ(gnp_graph(5, 0.5, 7), gnp_graph(5, 0.5, 7));
  EXPECT_EQ(random_tree(9, 3), random_tree(9, 3));
  EXPECT_EQ(random_connected(20, 60, 11), random_connected(20, 60, 11));
  const Graph g = random_connected(20, 60, 11);
  EXPECT_EQ(g.size(), 60);
  EXPECT_TRUE(is_connected(g));
  EXPECT_TRUE(is_tree(random_tree(9, 3)));
}

TEST(Families, FreeTreeCounts) {
  const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 9; ++n) {
    const auto trees = free_trees(n);
    EXPECT_EQ(trees.size(), expected[n]) << "n=" << n;
    for (const Graph& t : trees) EXPECT_TRUE(is_tree(t));
  }
}

TEST(Families, FreeTreesAreNonIsomorphicAndCoverLabeledTrees) {
  // Every labeled tree on 6 vertices (via Pruefer codes) is isomorphic to exactly one listed tree.
  const auto trees = free_trees(6);
  std::set<std::string> codes;
  for (const Graph& t : trees) codes.insert(detail::free_tree_code(t));
  EXPECT_EQ(codes.size(), trees.size());
  std::vector<int> seq(4, 0);
  for (int code = 0; code < 6 * 6 * 6 * 6; ++code) {
    int x = code;
    for (auto& s : seq) {
      s = x % 6;
      x /= 6;
    }
    EXPECT_TRUE(codes.count(detail::free_tree_code(tree_from_pruefer(6, seq))));
  }
}

TEST(Families, ParseAndGenerate) {
  EXPECT_EQ(parse_family("cycle"), Family::cycle);
  EXPECT_THROW(parse_family("wheel"), std::invalid_argument);
  EXPECT_EQ(generate_family({Family::path, 4, 0.5, 1}).front(), path_graph(4));
  EXPECT_EQ(generate_family({Family::all_connected, 3, 0.5, 1}).size(), 4U);
  EXPECT_EQ(generate_family({Family::trees, 7, 0.5, 1}).size(), 11U);
}
