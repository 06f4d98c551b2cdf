#include <gtest/gtest.h>

#include <set>

#include "cfconn/generators.hpp"
#include "cfconn/graph.hpp"

using namespace cfconn;

namespace {

std::vector<int> hops(const DistanceTable& t) {
  std::vector<int> out;
  for (const Distance& d : t.dist) out.push_back(d.reachable() ? d.hops() : -1);
  return out;
}

int component_count(const Graph& g, Vertex skip) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  int count = 0;
  for (Vertex r = 0; r < g.order(); ++r) {
    if (r == skip || seen[static_cast<std::size_t>(r)]) continue;
    ++count;
    VertexMask removed(static_cast<std::size_t>(g.order()), false);
    if (skip >= 0) removed[static_cast<std::size_t>(skip)] = true;
    for (Vertex v : dfs_component(g, r, removed)) seen[static_cast<std::size_t>(v)] = 1;
  }
  return count;
}

}  // namespace

TEST(BuildGraph, SmallestConnectedGraph) {
  const Graph g = build_graph(2, {{0, 1}});
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.size(), 1);
  EXPECT_TRUE(is_connected(g));
}

TEST(BuildGraph, PathConstruction) {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(g, path_graph(4));
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.degree(1), 2);
}

TEST(BuildGraph, RejectsDuplicateLoopAndRange) {
  EXPECT_THROW(build_graph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(build_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(build_graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(build_graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(build_graph(3, {{-1, 0}}), std::invalid_argument);
}

TEST(BuildGraph, EdgeIndicesAreStableAndNormalized) {
  const Graph g = build_graph(3, {{2, 1}, {0, 2}});
  EXPECT_EQ(g.edge(0), (Edge{1, 2}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2}));
  EXPECT_EQ(g.edge_between(2, 0), 1);
  EXPECT_FALSE(g.edge_between(0, 1).has_value());
}

TEST(BuildGraph, AdjacencyIsSymmetric) {
  for (const Graph& g : all_connected_graphs(4)) {
    for (Vertex v = 0; v < g.order(); ++v) {
      for (const Incidence& inc : g.incident(v)) {
        EXPECT_EQ(g.edge_between(inc.to, v), inc.edge);
        EXPECT_EQ(g.edge(inc.edge).other(v), inc.to);
      }
    }
  }
}

TEST(DfsComponent, PathSeveredAtRemovedVertex) {
  VertexMask removed(4, false);
  removed[2] = true;
  EXPECT_EQ(dfs_component(path_graph(4), 0, removed), (std::vector<Vertex>{0, 1}));
}

TEST(DfsComponent, WholeConnectedGraph) {
  EXPECT_EQ(dfs_component(path_graph(4), 0), (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(DfsComponent, CycleSurvivesOneEdgeRemoval) {
  const Graph c4 = cycle_graph(4);
  EdgeMask removed(4, false);
  removed[static_cast<std::size_t>(*c4.edge_between(0, 1))] = true;
  EXPECT_EQ(dfs_component(c4, 0, {}, removed), (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(DfsComponent, RemovedRootIsAnError) {
  VertexMask removed(4, false);
  removed[0] = true;
  EXPECT_THROW(dfs_component(path_graph(4), 0, removed), std::invalid_argument);
}

TEST(BfsDistances, PathAndCycle) {
  EXPECT_EQ(hops(bfs_distances(path_graph(4), 0)), (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(hops(bfs_distances(cycle_graph(4), 0)), (std::vector<int>{0, 1, 2, 1}));
}

TEST(BfsDistances, UnreachableSentinel) {
  const Graph p4 = path_graph(4);
  EdgeMask removed(3, false);
  removed[1] = true;
  const DistanceTable t = bfs_distances(p4, 0, removed);
  EXPECT_EQ(hops(t), (std::vector<int>{0, 1, -1, -1}));
  EXPECT_FALSE(t.dist[2].reachable());
  EXPECT_THROW((void)t.dist[2].hops(), std::logic_error);
}

TEST(BfsDistances, SentinelNeverCompareEqual) {
  EXPECT_FALSE(Distance::unreachable() == Distance::unreachable());
  EXPECT_FALSE(Distance::unreachable() == Distance(0));
  EXPECT_TRUE(Distance(3) == Distance(3));
}

TEST(BfsDistances, AdjacentDistancesDifferByAtMostOne) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      for (Vertex r = 0; r < n; ++r) {
        const DistanceTable t = bfs_distances(g, r);
        EXPECT_EQ(t.dist[static_cast<std::size_t>(r)], Distance(0));
        for (const Edge& e : g.edges()) {
          EXPECT_LE(std::abs(t.dist[static_cast<std::size_t>(e.u)].hops() - t.dist[static_cast<std::size_t>(e.v)].hops()),
                    1);
        }
      }
    }
  }
}

TEST(DfsComponent, SpansExactlyWhenConnected) {
  for (int mask = 0; mask < (1 << 6); ++mask) {
    std::vector<std::pair<int, int>> edges;
    const std::pair<int, int> all[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int i = 0; i < 6; ++i) {
      if (mask >> i & 1) edges.push_back(all[i]);
    }
    const Graph g(4, edges);
    EXPECT_EQ(dfs_component(g, 0).size() == 4, is_connected(g));
  }
}

TEST(ClassifyEdge, CycleExamples) {
  const Graph c4 = cycle_graph(4);
  EXPECT_EQ(classify_edge(c4, 0, *c4.edge_between(1, 2)), EdgeKind::vertical);
  EXPECT_EQ(classify_edge(c4, 0, *c4.edge_between(0, 1)), EdgeKind::vertical);
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(classify_edge(c5, 0, *c5.edge_between(2, 3)), EdgeKind::horizontal);
}

TEST(ClassifyEdge, IncidentEdgesAreVertical) {
  for (const Graph& g : all_connected_graphs(5)) {
    for (Vertex u = 0; u < g.order(); ++u) {
      for (const Incidence& inc : g.incident(u)) EXPECT_EQ(classify_edge(g, u, inc.edge), EdgeKind::vertical);
    }
  }
}

TEST(ClassifyEdge, DisconnectedGraphRejected) {
  const Graph g(3, {{0, 1}});
  EXPECT_THROW(classify_edge(g, 0, 0), std::invalid_argument);
}

TEST(Blocks, CycleIsOneBlock) {
  const auto d = cut_vertices_and_blocks(cycle_graph(4));
  EXPECT_TRUE(d.cut_vertices.empty());
  EXPECT_EQ(d.blocks.size(), 1U);
}

TEST(Blocks, PathBlocksAreEdges) {
  const auto d = cut_vertices_and_blocks(path_graph(4));
  EXPECT_EQ(d.cut_vertices, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(d.blocks.size(), 3U);
  for (const auto& b : d.blocks) EXPECT_EQ(b.size(), 1U);
}

TEST(Blocks, BowTie) {
  const Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const auto d = cut_vertices_and_blocks(g);
  EXPECT_EQ(d.cut_vertices, (std::vector<Vertex>{2}));
  EXPECT_EQ(d.blocks.size(), 2U);
}

TEST(Blocks, DisconnectedInputRejected) {
  EXPECT_THROW(cut_vertices_and_blocks(Graph(3, {{0, 1}})), std::invalid_argument);
}

TEST(Blocks, AgreeWithDirectRecomputation) {
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      const auto d = cut_vertices_and_blocks(g);
      std::vector<int> owner(static_cast<std::size_t>(g.size()), 0);
      for (const auto& b : d.blocks) {
        for (EdgeId e : b) ++owner[static_cast<std::size_t>(e)];
      }
      for (int c : owner) ASSERT_EQ(c, 1);
      const std::set<Vertex> cuts(d.cut_vertices.begin(), d.cut_vertices.end());
      for (Vertex v = 0; v < n; ++v) {
        ASSERT_EQ(cuts.count(v) == 1, component_count(g, v) > 1) << "vertex " << v;
      }
    }
  }
}

TEST(Structure, Predicates) {
  EXPECT_TRUE(is_two_connected(cycle_graph(5)));
  EXPECT_FALSE(is_two_connected(path_graph(3)));
  EXPECT_TRUE(is_two_edge_connected(cycle_graph(3)));
  EXPECT_FALSE(is_two_edge_connected(star_graph(3)));
  EXPECT_TRUE(is_complete(complete_graph(4)));
  EXPECT_TRUE(is_tree(star_graph(4)));
  EXPECT_EQ(max_degree(star_graph(4)), 4);
  EXPECT_TRUE(is_bipartite(cycle_graph(6)));
  EXPECT_FALSE(is_bipartite(cycle_graph(5)));
  EXPECT_EQ(diameter(cycle_graph(7)), 3);
  EXPECT_EQ(diameter(path_graph(5)), 4);
}

TEST(Paths, RelevantItemSets) {
  const Graph g(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
  EXPECT_EQ(edges_on_some_path(g, 0, 3), (std::vector<EdgeId>{0, 1, 2, 3}));
  EXPECT_EQ(vertices_on_some_path(g, 0, 3), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(edges_on_shortest_paths(g, 0, 3), (std::vector<EdgeId>{2, 3}));
  EXPECT_EQ(edges_on_shortest_paths(cycle_graph(4), 0, 2), (std::vector<EdgeId>{0, 1, 2, 3}));
}
