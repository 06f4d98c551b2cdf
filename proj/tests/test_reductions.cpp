#include <gtest/gtest.h>

#include "cfconn/generators.hpp"
#include "cfconn/reductions.hpp"
#include "cfconn/solvers.hpp"

using namespace cfconn;

namespace {

const char* kTwoClauses = "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n";

CnfFormula all_patterns() {
  CnfFormula f;
  f.num_vars = 3;
  for (int s = 0; s < 8; ++s) {
    f.clauses.push_back({Literal{1, (s & 4) == 0}, Literal{2, (s & 2) == 0}, Literal{3, (s & 1) == 0}});
  }
  return f;
}

}  // namespace

TEST(Cnf, ParseExamples) {
  const CnfFormula f = parse_dimacs_cnf(kTwoClauses);
  EXPECT_EQ(f.num_vars, 3);
  ASSERT_EQ(f.clauses.size(), 2U);
  EXPECT_EQ(f.clauses[1][0], (Literal{1, false}));
  EXPECT_EQ(parse_dimacs_cnf(to_dimacs(f)), f);
  EXPECT_EQ(parse_dimacs_cnf("c comment\np cnf 3 1\n1 2\n3 0\n").clauses.size(), 1U);
}

TEST(Cnf, ParseErrors) {
  EXPECT_THROW(parse_dimacs_cnf("p cnf 2 1\n1 -1 2 0\n"), CnfError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 2 1\n1 2 0\n"), CnfError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 1\n1 1 2 0\n"), CnfError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 1\n1 2 4 0\n"), CnfError);
  EXPECT_THROW(parse_dimacs_cnf("1 2 3 0\n"), CnfError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n"), CnfError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 1\n1 2 3\n"), CnfError);
  EXPECT_THROW(parse_dimacs_cnf("p sat 3 1\n1 2 3 0\n"), CnfError);
  try {
    parse_dimacs_cnf("p cnf 2 1\n1 -1 2 0\n");
  } catch (const CnfError& e) {
    EXPECT_NE(std::string(e.what()).find("tautological"), std::string::npos);
  }
}

TEST(Cnf, BruteForce) {
  const auto a = solve_3sat_bruteforce(parse_dimacs_cnf(kTwoClauses));
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(*a, (Assignment{false, false, true}));
  EXPECT_FALSE(solve_3sat_bruteforce(all_patterns()).has_value());
  CnfFormula empty;
  empty.num_vars = 2;
  EXPECT_EQ(solve_3sat_bruteforce(empty), (Assignment{false, false}));
}

TEST(SatToPartial, Sizes) {
  const auto inst = reduce_3sat_to_partial2(parse_dimacs_cnf(kTwoClauses));
  EXPECT_EQ(inst.graph.order(), 6);
  EXPECT_EQ(inst.graph.size(), 13);
  ASSERT_TRUE(inst.partial);
  EXPECT_EQ(inst.partial->unassigned().size(), 3U);
  EXPECT_EQ(inst.pairs.size(), 2U);
  EXPECT_EQ(inst.k, 2);
}

TEST(SatToPartial, SizesForGeneralFormulas) {
  const auto inst = reduce_3sat_to_partial2(all_patterns());
  const int l = 8, n = 3;
  EXPECT_EQ(inst.graph.order(), l + n + 1);
  EXPECT_EQ(inst.graph.size(), 3 * l + n + l * (l - 1) / 2 + n * (n - 1) / 2);
}

TEST(SatToPartial, PresetColors) {
  const auto inst = reduce_3sat_to_partial2(parse_dimacs_cnf(kTwoClauses));
  const auto& p = *inst.partial;
  // Occurrence edges come first: clause 1 positive, clause 2 negative.
  for (std::size_t e = 0; e < 3; ++e) EXPECT_EQ(p[e], 0);
  for (std::size_t e = 3; e < 6; ++e) EXPECT_EQ(p[e], 1);
  const Vertex c1 = inst.maps.at("clause", "c1"), c2 = inst.maps.at("clause", "c2");
  EXPECT_EQ(p[static_cast<std::size_t>(*inst.graph.edge_between(c1, c2))], 0);
  for (const MapEntry& e : inst.maps.of_kind("var_edge")) EXPECT_FALSE(p[static_cast<std::size_t>(e.dst)]);
}

TEST(SatToPartial, Extraction) {
  const auto inst = reduce_3sat_to_partial2(parse_dimacs_cnf(kTwoClauses));
  const EdgeColoring full = extension_from_assignment(inst, {true, false, true});
  EXPECT_EQ(extract_sat_assignment(inst, full), (Assignment{true, false, true}));
  EXPECT_EQ(extract_sat_assignment(inst, extension_from_assignment(inst, {false, false, false})),
            (Assignment{false, false, false}));
  // Flip a clique edge: no longer an extension.
  std::vector<Color> bad(full.colors().begin(), full.colors().end());
  const Vertex c1 = inst.maps.at("clause", "c1"), c2 = inst.maps.at("clause", "c2");
  bad[static_cast<std::size_t>(*inst.graph.edge_between(c1, c2))] = 2;
  EXPECT_THROW(extract_sat_assignment(inst, EdgeColoring(2, bad)), std::invalid_argument);
}

TEST(SatToPartial, RequiresBothPolarities) {
  EXPECT_THROW(reduce_3sat_to_partial2(parse_dimacs_cnf("p cnf 3 1\n1 2 3 0\n")), CnfError);
}

TEST(SatToPartial, SatisfiableIffSomeExtensionServesAllPairs) {
  for (const CnfFormula& f : {parse_dimacs_cnf(kTwoClauses), all_patterns()}) {
    const auto inst = reduce_3sat_to_partial2(f);
    bool found = false;
    for_each_extension(*inst.partial, [&](const EdgeColoring& c) {
      found = verify_scfc_subset(inst.graph, c, inst.pairs).ok;
      if (found) {
        EXPECT_TRUE(satisfies(f, extract_sat_assignment(inst, c)));
      }
      return !found;
    });
    EXPECT_EQ(found, solve_3sat_bruteforce(f).has_value());
  }
}

TEST(PartialToSubset, ChainLength) {
  EXPECT_EQ(chain_length(4), 3);
  EXPECT_EQ(chain_length(5), 3);
  EXPECT_EQ(chain_length(2), 1);
  EXPECT_EQ(chain_length(3), 3);
  EXPECT_EQ(chain_length(7), 5);
}

TEST(PartialToSubset, Sizes) {
  const Graph host = cycle_graph(4);
  PartialEdgeColoring partial(4);
  partial.assign(0, 0);
  partial.assign(2, 1);
  const int n = 4, h = 2, r = 3;
  const auto inst = reduce_partial2_to_subset(host, partial);
  EXPECT_EQ(inst.graph.order(), n + 3 + h + h * r);
  EXPECT_EQ(inst.graph.size(), 4 + 2 + h * (r + 1) + h);
  EXPECT_EQ(inst.pairs.size(), static_cast<std::size_t>(1 + n * (n - 1) / 2 + h * (r + 3)));
}

TEST(PartialToSubset, EmptyPartial) {
  const Graph host = path_graph(3);
  const auto inst = reduce_partial2_to_subset(host, PartialEdgeColoring(2));
  EXPECT_EQ(inst.graph.order(), 6);
  EXPECT_EQ(inst.graph.size(), 4);
  EXPECT_EQ(inst.pairs.size(), 4U);
  EXPECT_TRUE(inst.pairs.contains(inst.maps.at("hub", "b1"), inst.maps.at("hub", "b2")));
}

TEST(PartialToSubset, ExtensionExistsIffGadgetColorable) {
  // Exhaustive over hosts up to 4 vertices and partials with at most 2 colored edges.
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& g : all_connected_graphs(n)) {
      const auto m = static_cast<std::size_t>(g.size());
      for (std::size_t a = 0; a < m; ++a) {
        for (int bit = 0; bit < 2; ++bit) {
          PartialEdgeColoring partial(m);
          partial.assign(a, bit);
          bool extendable = false;
          for_each_extension(partial, [&](const EdgeColoring& c) {
            extendable = verify_scfc(g, c).ok;
            return !extendable;
          });
          const auto inst = reduce_partial2_to_subset(g, partial);
          const auto w = decide_subset_scfc(inst.graph, inst.pairs, 2);
          ASSERT_EQ(w.has_value(), extendable) << "n=" << n << " edge " << a << " bit " << bit;
          if (w) {
            const EdgeColoring host = extract_partial_extension(inst, *w);
            EXPECT_TRUE(partial.extended_by(host));
            EXPECT_TRUE(verify_scfc(g, host).ok);
          }
        }
      }
    }
  }
}

TEST(KColorToSubset, Examples) {
  const auto k3 = reduce_kcolor_to_subset(complete_graph(3), 3);
  EXPECT_EQ(k3.graph.order(), 4);
  EXPECT_EQ(k3.graph.size(), 3);
  EXPECT_EQ(k3.pairs.size(), 3U);
  EXPECT_EQ(star_shape(k3.graph).center, 3);
  EXPECT_TRUE(reduce_kcolor_to_subset(Graph(3, {}), 2).pairs.empty());
  EXPECT_EQ(reduce_kcolor_to_subset(path_graph(3), 2).pairs.size(), 2U);
  EXPECT_THROW(reduce_kcolor_to_subset(path_graph(3), 0), std::invalid_argument);
}

TEST(KColorToSubset, Extraction) {
  const auto inst = reduce_kcolor_to_subset(complete_graph(3), 3);
  const auto good = extract_vertex_coloring(inst, EdgeColoring(3, {1, 2, 3}));
  EXPECT_TRUE(is_proper_vertex_coloring(complete_graph(3), good));
  const auto bad = extract_vertex_coloring(inst, EdgeColoring(2, {1, 1, 2}));
  EXPECT_FALSE(is_proper_vertex_coloring(complete_graph(3), bad));
  const auto empty = reduce_kcolor_to_subset(Graph(3, {}), 1);
  EXPECT_TRUE(is_proper_vertex_coloring(Graph(3, {}), extract_vertex_coloring(empty, EdgeColoring(1, {1, 1, 1}))));
}

TEST(KColorToSubset, ColorableIffSubsetSolvable) {
  for (int n = 1; n <= 5; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      for (int k = 2; k <= 3; ++k) {
        const auto inst = reduce_kcolor_to_subset(g, k);
        const auto w = decide_subset_scfc(inst.graph, inst.pairs, k);
        EXPECT_EQ(w.has_value(), find_vertex_coloring(g, k).has_value());
        if (w) {
          EXPECT_TRUE(is_proper_vertex_coloring(g, extract_vertex_coloring(inst, *w)));
        }
      }
      return true;
    });
  }
}

TEST(StarToScfc, Sizes) {
  const auto inst = reduce_subset_star_to_scfc(star_graph(3), PairSet{{1, 2}});
  EXPECT_EQ(inst.graph.order(), 14);
  EXPECT_EQ(inst.graph.size(), 40);
  EXPECT_TRUE(is_bipartite(inst.graph));
  const auto full = reduce_subset_star_to_scfc(star_graph(4), PairSet{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(full.graph.order(), 5 + 2 * 4);
  EXPECT_EQ(source_star(full), star_graph(4));
}

TEST(StarToScfc, Preconditions) {
  EXPECT_THROW(reduce_subset_star_to_scfc(path_graph(4), PairSet{}), std::invalid_argument);
  EXPECT_THROW(reduce_subset_star_to_scfc(star_graph(3), PairSet{{0, 1}}), std::invalid_argument);
  EXPECT_THROW(reduce_subset_star_to_scfc(star_graph(3), PairSet{{1, 5}}), std::invalid_argument);
}

TEST(StarToScfc, ForwardColoringVerifies) {
  const PairSet all{{1, 2}, {1, 3}, {2, 3}};
  const auto inst = reduce_subset_star_to_scfc(star_graph(3), all);
  const EdgeColoring gadget = forward_color_subset_star(inst, EdgeColoring(3, {1, 2, 3}));
  EXPECT_TRUE(verify_scfc(inst.graph, gadget).ok);
  EXPECT_EQ(extract_star_coloring(inst, gadget), EdgeColoring(3, {1, 2, 3}));

  const auto none = reduce_subset_star_to_scfc(star_graph(3), PairSet{});
  EXPECT_TRUE(verify_scfc(none.graph, forward_color_subset_star(none, EdgeColoring(3, {1, 1, 1}))).ok);

  EXPECT_THROW(forward_color_subset_star(inst, EdgeColoring(3, {1, 1, 2})), std::invalid_argument);
  EXPECT_THROW(forward_color_subset_star(inst, EdgeColoring(2, {1, 2, 1})), std::invalid_argument);
}

TEST(StarToScfc, ForwardColoringOnEverySmallInstance) {
  for (int leaves = 1; leaves <= 4; ++leaves) {
    const Graph star = star_graph(leaves);
    std::vector<VertexPair> leaf_pairs;
    for (Vertex a = 1; a <= leaves; ++a) {
      for (Vertex b = a + 1; b <= leaves; ++b) leaf_pairs.push_back({a, b});
    }
    for (std::uint32_t mask = 0; mask < (1U << leaf_pairs.size()); ++mask) {
      std::vector<VertexPair> chosen;
      for (std::size_t i = 0; i < leaf_pairs.size(); ++i) {
        if (mask >> i & 1U) chosen.push_back(leaf_pairs[i]);
      }
      const PairSet p(chosen);
      const auto inst = reduce_subset_star_to_scfc(star, p);
      ASSERT_TRUE(is_bipartite(inst.graph));
      const auto c = decide_subset_scfc(star, p, 3);
      if (!c) continue;
      EXPECT_TRUE(verify_scfc(inst.graph, forward_color_subset_star(inst, EdgeColoring(3, {c->colors().begin(), c->colors().end()}))).ok);
    }
  }
}
