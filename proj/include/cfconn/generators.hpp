#pragma once

// Graph families used by the CLI and the test suites.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cfconn/graph.hpp"

namespace cfconn {

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

/// Vertices 0..n-1 in cycle order; the closing edge is listed last.
inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph(n, edges);
}

/// K_{1,leaves} with center 0; edge i joins 0 and leaf i+1.
inline Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

/// Tree decoded from a Pruefer sequence over 0..n-1.
inline Graph tree_from_pruefer(int n, const std::vector<int>& seq) {
  if (n < 2 || static_cast<int>(seq.size()) != n - 2) throw std::invalid_argument("bad Pruefer sequence");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw std::invalid_argument("bad Pruefer sequence");
    ++degree[static_cast<std::size_t>(x)];
  }
  std::set<int> leaves;
  for (int i = 0; i < n; ++i) {
    if (degree[static_cast<std::size_t>(i)] == 1) leaves.insert(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (int x : seq) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, x);
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

/// Uniform labeled tree.
inline Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (n == 1) return Graph(1, std::vector<std::pair<int, int>>{});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (int& x : seq) x = pick(rng);
  return tree_from_pruefer(n, seq);
}

/// Erdos-Renyi G(n,p); may be disconnected.
inline Graph gnp_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gnp needs at least one vertex");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp probability outside [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

/// G(n,p) conditioned on connectivity (rejection sampling). With p = 1/2
/// this is uniform over labeled connected graphs.
inline Graph random_connected_gnp(int n, double p, std::mt19937_64& rng) {
  for (;;) {
    Graph g = gnp_graph(n, p, rng());
    if (is_connected(g)) return g;
  }
}

/// Random connected graph with exactly m edges: a uniform random tree plus
/// m-(n-1) distinct random extra edges, vertices then relabeled at random.
inline Graph random_connected(int n, int m, std::uint64_t seed) {
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 1 || m < n - 1 || m > max_m) throw std::invalid_argument("edge count out of range for a connected graph");
  std::mt19937_64 rng(seed);
  const Graph tree = random_tree(n, rng());
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i;
  std::shuffle(label.begin(), label.end(), rng);
  std::set<std::pair<int, int>> chosen;
  for (const Edge& e : tree.edges()) chosen.insert({e.u, e.v});
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(chosen.size()) < m) {
    int a = pick(rng);
    int b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    chosen.insert({a, b});
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : chosen) edges.emplace_back(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]);
  return Graph(n, edges);
}

inline constexpr int kMaxExhaustiveOrder = 7;

/// Every labeled connected graph on n vertices, each exactly once. Edge
/// subsets are visited in increasing bitmask order over the lexicographically
/// ordered vertex pairs. The visitor returns false to stop.
inline void for_each_connected_graph(int n, const std::function<bool(const Graph&)>& visit) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (n > kMaxExhaustiveOrder) {
    throw std::length_error("exhaustive enumeration supports n <= " + std::to_string(kMaxExhaustiveOrder));
  }
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<std::pair<int, int>> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (__builtin_popcountll(mask) < n - 1) continue;
    // Cheap bitset connectivity test before building a Graph.
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1U) {
        nbr[static_cast<std::size_t>(slots[s].first)] |= 1U << slots[s].second;
        nbr[static_cast<std::size_t>(slots[s].second)] |= 1U << slots[s].first;
      }
    }
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int x = 0; x < n; ++x) {
        if (frontier >> x & 1U) next |= nbr[static_cast<std::size_t>(x)];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != (1U << n) - 1U) continue;
    edges.clear();
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1U) edges.push_back(slots[s]);
    }
    if (!visit(Graph(n, edges))) return;
  }
}

inline std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

namespace detail {

/// AHU code of the tree rooted at r.
inline std::string rooted_code(const std::vector<std::vector<int>>& adj, int r, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[static_cast<std::size_t>(r)]) {
    if (w != parent) kids.push_back(rooted_code(adj, w, r));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

/// Isomorphism-invariant code of a free tree: the smallest AHU code over its
/// center vertices.
inline std::string free_tree_code(const Graph& t) {
  const int n = t.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : t.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int leaf : layer) {
      for (int w : adj[static_cast<std::size_t>(leaf)]) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    std::string code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace detail

/// One representative of every unlabeled tree on n vertices. Rooted trees
/// are generated as canonical level sequences and then reduced to free
/// trees by their center-rooted code.
inline std::vector<Graph> free_trees(int n) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  std::vector<int> level(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) level[static_cast<std::size_t>(i)] = i;
  std::set<std::string> codes;
  std::vector<Graph> out;
  for (;;) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
      int parent = i - 1;
      while (level[static_cast<std::size_t>(parent)] != level[static_cast<std::size_t>(i)] - 1) --parent;
      edges.emplace_back(parent, i);
    }
    Graph t(n, edges);
    if (codes.insert(detail::free_tree_code(t)).second) out.push_back(std::move(t));

    int p = n - 1;
    while (p > 0 && level[static_cast<std::size_t>(p)] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (level[static_cast<std::size_t>(q)] != level[static_cast<std::size_t>(p)] - 1) --q;
    const int shift = p - q;
    for (int i = p; i < n; ++i) level[static_cast<std::size_t>(i)] = level[static_cast<std::size_t>(i - shift)];
  }
  return out;
}

enum class Family { path, cycle, star, complete, random_tree, gnp, all_connected, trees };

struct FamilyParams {
  Family family = Family::path;
  int n = 2;  // vertex count; leaf count for stars
  double p = 0.5;
  std::uint64_t seed = 1;
};

inline Family parse_family(const std::string& name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "star") return Family::star;
  if (name == "complete") return Family::complete;
  if (name == "random_tree") return Family::random_tree;
  if (name == "gnp") return Family::gnp;
  if (name == "all_connected") return Family::all_connected;
  if (name == "trees") return Family::trees;
  throw std::invalid_argument("unknown family '" + name + "'");
}

/// Streams the members of a family to `sink`. Seeded families are
/// deterministic in (n, p, seed).
inline void generate_family(const FamilyParams& params, const std::function<void(const Graph&)>& sink) {
  switch (params.family) {
    case Family::path: sink(path_graph(params.n)); return;
    case Family::cycle: sink(cycle_graph(params.n)); return;
    case Family::star: sink(star_graph(params.n)); return;
    case Family::complete: sink(complete_graph(params.n)); return;
    case Family::random_tree: sink(random_tree(params.n, params.seed)); return;
    case Family::gnp: sink(gnp_graph(params.n, params.p, params.seed)); return;
    case Family::all_connected:
      for_each_connected_graph(params.n, [&](const Graph& g) {
        sink(g);
        return true;
      });
      return;
    case Family::trees:
      for (const Graph& t : free_trees(params.n)) sink(t);
      return;
  }
}

inline std::vector<Graph> generate_family(const FamilyParams& params) {
  std::vector<Graph> out;
  generate_family(params, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace cfconn
