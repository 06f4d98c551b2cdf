#pragma once

// Simple undirected graphs with stable edge indices, plus the traversal
// primitives shared by the verifiers, oracles and solvers.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfconn {

using Vertex = int;
using EdgeId = int;

/// An undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Vertex other(Vertex w) const noexcept { return w == u ? v : u; }
  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex to = 0;
  EdgeId edge = 0;
};

/// Immutable simple graph on vertices 0..n-1. Edge i is the i-th pair
/// handed to the constructor, normalized so that u < v.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n), adj_(n > 0 ? n : 0) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw std::invalid_argument("endpoint out of range: (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") with n=" + std::to_string(n));
      }
      if (a == b) throw std::invalid_argument("loop edge at vertex " + std::to_string(a));
      const Edge e{std::min(a, b), std::max(a, b)};
      const auto id = static_cast<EdgeId>(edges_.size());
      edges_.push_back(e);
      adj_[e.u].push_back({e.v, id});
      adj_[e.v].push_back({e.u, id});
    }
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end(),
                [](const Incidence& x, const Incidence& y) { return x.to < y.to; });
      for (std::size_t i = 1; i < list.size(); ++i) {
        if (list[i].to == list[i - 1].to) {
          const Edge& e = edges_[list[i].edge];
          throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                      std::to_string(e.v) + ")");
        }
      }
    }
  }

  Graph(int n, std::initializer_list<std::pair<int, int>> edges)
      : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  Graph(int n, const std::vector<std::pair<int, int>>& edges)
      : Graph(n, std::span<const std::pair<int, int>>(edges)) {}

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

  /// Incident edges of v, sorted by neighbor index.
  std::span<const Incidence> incident(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
    const auto& list = adj_[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(list.begin(), list.end(), b,
                               [](const Incidence& x, Vertex w) { return x.to < w; });
    if (it == list.end() || it->to != b) return std::nullopt;
    return it->edge;
  }
  bool has_edge(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }

  std::vector<std::pair<int, int>> edge_pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

inline Graph build_graph(int n, std::span<const std::pair<int, int>> edges) { return Graph(n, edges); }
inline Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) { return Graph(n, edges); }

/// Hop distance. Unreachable compares unequal to everything, itself included,
/// so an equality test between distances can never succeed by accident.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(int hops) : hops_(hops) {
    if (hops < 0) throw std::invalid_argument("negative distance");
  }

  static constexpr Distance unreachable() noexcept { return Distance(); }

  constexpr bool reachable() const noexcept { return hops_ >= 0; }
  constexpr int hops() const {
    if (hops_ < 0) throw std::logic_error("hops() of an unreachable distance");
    return hops_;
  }

  friend constexpr bool operator==(Distance a, Distance b) noexcept {
    return a.reachable() && b.reachable() && a.hops_ == b.hops_;
  }
  friend constexpr bool operator<(Distance a, Distance b) noexcept {
    if (!a.reachable()) return false;
    return !b.reachable() || a.hops_ < b.hops_;
  }

  std::string to_string() const { return reachable() ? std::to_string(hops_) : std::string("inf"); }

 private:
  int hops_ = -1;
};

struct DistanceTable {
  Vertex source = 0;
  std::vector<Distance> dist;

  Distance operator[](Vertex v) const { return dist.at(static_cast<std::size_t>(v)); }
};

/// Membership masks. An empty mask means "nothing removed".
using VertexMask = std::vector<bool>;
using EdgeMask = std::vector<bool>;

namespace detail {

/// Marks every vertex reachable from root using only vertices and edges that
/// pass the filters. `seen` is resized and cleared; `stack` is scratch.
template <class VertexOk, class EdgeOk>
void reach(const Graph& g, Vertex root, VertexOk&& vertex_ok, EdgeOk&& edge_ok, std::vector<char>& seen,
           std::vector<Vertex>& stack) {
  seen.assign(static_cast<std::size_t>(g.order()), 0);
  stack.clear();
  if (!vertex_ok(root)) return;
  seen[static_cast<std::size_t>(root)] = 1;
  stack.push_back(root);
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(x)) {
      if (seen[static_cast<std::size_t>(inc.to)] || !edge_ok(inc.edge) || !vertex_ok(inc.to)) continue;
      seen[static_cast<std::size_t>(inc.to)] = 1;
      stack.push_back(inc.to);
    }
  }
}

/// Breadth-first hop distances from root over edges passing the filter.
template <class EdgeOk>
void bfs(const Graph& g, Vertex root, EdgeOk&& edge_ok, std::vector<Distance>& dist, std::vector<Vertex>& queue) {
  dist.assign(static_cast<std::size_t>(g.order()), Distance::unreachable());
  queue.clear();
  dist[static_cast<std::size_t>(root)] = Distance(0);
  queue.push_back(root);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    const int next = dist[static_cast<std::size_t>(x)].hops() + 1;
    for (const Incidence& inc : g.incident(x)) {
      if (dist[static_cast<std::size_t>(inc.to)].reachable() || !edge_ok(inc.edge)) continue;
      dist[static_cast<std::size_t>(inc.to)] = Distance(next);
      queue.push_back(inc.to);
    }
  }
}

inline void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (v < 0 || v >= g.order()) {
    throw std::invalid_argument(std::string(what) + " vertex " + std::to_string(v) + " out of range");
  }
}

inline void check_mask(std::size_t mask_size, std::size_t expected, const char* what) {
  if (mask_size != 0 && mask_size != expected) {
    throw std::invalid_argument(std::string(what) + " mask has wrong size");
  }
}

/// Is there a simple u-v path through edge st inside the subgraph selected by
/// the filters? True iff u, v, s, t share a component and no single vertex z
/// cuts both u and v away from both s and t.
template <class VertexOk, class EdgeOk>
bool edge_on_some_path(const Graph& g, Vertex u, Vertex v, EdgeId e, VertexOk&& vertex_ok, EdgeOk&& edge_ok,
                       std::vector<char>& seen, std::vector<char>& component, std::vector<Vertex>& stack) {
  const Edge& st = g.edge(e);
  reach(g, st.u, vertex_ok, edge_ok, seen, stack);
  if (!seen[static_cast<std::size_t>(u)] || !seen[static_cast<std::size_t>(v)] ||
      !seen[static_cast<std::size_t>(st.v)]) {
    return false;
  }
  component = seen;
  for (Vertex z = 0; z < g.order(); ++z) {
    if (!component[static_cast<std::size_t>(z)]) continue;
    auto without_z = [&](Vertex x) { return x != z && vertex_ok(x); };
    // In G - z, s and t stay joined through st unless z is one of them.
    const Vertex root = (z == st.u) ? st.v : st.u;
    reach(g, root, without_z, edge_ok, seen, stack);
    const bool u_linked = u != z && seen[static_cast<std::size_t>(u)];
    const bool v_linked = v != z && seen[static_cast<std::size_t>(v)];
    if (!u_linked && !v_linked) return false;
  }
  return true;
}

/// Vertex analogue: is there a simple u-v path through w? True iff u, v, w
/// share a component and no z != w cuts both u and v away from w.
template <class VertexOk, class EdgeOk>
bool vertex_on_some_path(const Graph& g, Vertex u, Vertex v, Vertex w, VertexOk&& vertex_ok, EdgeOk&& edge_ok,
                         std::vector<char>& seen, std::vector<char>& component, std::vector<Vertex>& stack) {
  reach(g, w, vertex_ok, edge_ok, seen, stack);
  if (!seen[static_cast<std::size_t>(u)] || !seen[static_cast<std::size_t>(v)]) return false;
  component = seen;
  for (Vertex z = 0; z < g.order(); ++z) {
    if (z == w || !component[static_cast<std::size_t>(z)]) continue;
    auto without_z = [&](Vertex x) { return x != z && vertex_ok(x); };
    reach(g, w, without_z, edge_ok, seen, stack);
    const bool u_linked = u != z && seen[static_cast<std::size_t>(u)];
    const bool v_linked = v != z && seen[static_cast<std::size_t>(v)];
    if (!u_linked && !v_linked) return false;
  }
  return true;
}

}  // namespace detail

/// Vertices reachable from root after deleting the given vertices and edges,
/// in increasing order.
inline std::vector<Vertex> dfs_component(const Graph& g, Vertex root, const VertexMask& removed_vertices = {},
                                         const EdgeMask& removed_edges = {}) {
  detail::check_vertex(g, root, "root");
  detail::check_mask(removed_vertices.size(), static_cast<std::size_t>(g.order()), "vertex");
  detail::check_mask(removed_edges.size(), static_cast<std::size_t>(g.size()), "edge");
  if (!removed_vertices.empty() && removed_vertices[static_cast<std::size_t>(root)]) {
    throw std::invalid_argument("root vertex is removed");
  }
  std::vector<char> seen;
  std::vector<Vertex> stack;
  detail::reach(
      g, root,
      [&](Vertex x) { return removed_vertices.empty() || !removed_vertices[static_cast<std::size_t>(x)]; },
      [&](EdgeId e) { return removed_edges.empty() || !removed_edges[static_cast<std::size_t>(e)]; }, seen, stack);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) out.push_back(x);
  }
  return out;
}

inline DistanceTable bfs_distances(const Graph& g, Vertex root, const EdgeMask& removed_edges = {}) {
  detail::check_vertex(g, root, "root");
  detail::check_mask(removed_edges.size(), static_cast<std::size_t>(g.size()), "edge");
  DistanceTable table{root, {}};
  std::vector<Vertex> queue;
  detail::bfs(
      g, root, [&](EdgeId e) { return removed_edges.empty() || !removed_edges[static_cast<std::size_t>(e)]; },
      table.dist, queue);
  return table;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return static_cast<int>(dfs_component(g, 0).size()) == g.order();
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
}

enum class EdgeKind { vertical, horizontal };

/// Vertical iff the endpoint distances from u differ by exactly one.
inline EdgeKind classify_edge(const DistanceTable& from_u, const Graph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  const Distance ds = from_u[ed.u];
  const Distance dt = from_u[ed.v];
  if (!ds.reachable() || !dt.reachable()) throw std::invalid_argument("graph is disconnected");
  return ds.hops() == dt.hops() ? EdgeKind::horizontal : EdgeKind::vertical;
}

inline EdgeKind classify_edge(const Graph& g, Vertex u, EdgeId e) {
  require_connected(g);
  return classify_edge(bfs_distances(g, u), g, e);
}

/// Largest eccentricity; the graph must be connected.
inline int diameter(const Graph& g) {
  require_connected(g);
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (const Distance& d : bfs_distances(g, s).dist) best = std::max(best, d.hops());
  }
  return best;
}

struct BlockDecomposition {
  std::vector<Vertex> cut_vertices;         // increasing
  std::vector<std::vector<EdgeId>> blocks;  // each sorted; blocks in discovery order
};

/// Biconnected decomposition (iterative Hopcroft-Tarjan with an edge stack).
inline BlockDecomposition cut_vertices_and_blocks(const Graph& g) {
  require_connected(g);
  BlockDecomposition out;
  const int n = g.order();
  if (n == 0 || g.size() == 0) return out;

  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  struct Frame {
    Vertex v;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::vector<EdgeId> edge_stack;
  int timer = 0;

  disc[0] = low[0] = timer++;
  frames.push_back({0, -1, 0});
  while (!frames.empty()) {
    Frame& f = frames.back();
    const auto inc = g.incident(f.v);
    if (f.next < inc.size()) {
      const Incidence next = inc[f.next++];
      if (next.edge == f.parent_edge) continue;
      const auto w = static_cast<std::size_t>(next.to);
      if (disc[w] == -1) {
        edge_stack.push_back(next.edge);
        disc[w] = low[w] = timer++;
        frames.push_back({next.to, next.edge, 0});
      } else if (disc[w] < disc[static_cast<std::size_t>(f.v)]) {
        edge_stack.push_back(next.edge);
        low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[w]);
      }
      continue;
    }
    const Frame done = f;
    frames.pop_back();
    if (frames.empty()) break;
    const auto p = static_cast<std::size_t>(frames.back().v);
    const auto c = static_cast<std::size_t>(done.v);
    low[p] = std::min(low[p], low[c]);
    if (low[c] >= disc[p]) {
      std::vector<EdgeId> block;
      while (true) {
        const EdgeId e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e);
        if (e == done.parent_edge) break;
      }
      std::sort(block.begin(), block.end());
      out.blocks.push_back(std::move(block));
    }
  }

  std::vector<int> block_count(static_cast<std::size_t>(n), 0);
  std::vector<int> last_block(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < out.blocks.size(); ++b) {
    for (EdgeId e : out.blocks[b]) {
      for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
        if (last_block[static_cast<std::size_t>(x)] != static_cast<int>(b)) {
          last_block[static_cast<std::size_t>(x)] = static_cast<int>(b);
          ++block_count[static_cast<std::size_t>(x)];
        }
      }
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    if (block_count[static_cast<std::size_t>(x)] >= 2) out.cut_vertices.push_back(x);
  }
  return out;
}

/// Connected, at least 3 vertices, no cut vertex.
inline bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices_and_blocks(g).cut_vertices.empty();
}

/// Connected, at least 2 vertices, no bridge (single-edge block).
inline bool is_two_edge_connected(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return false;
  for (const auto& block : cut_vertices_and_blocks(g).blocks) {
    if (block.size() == 1) return false;
  }
  return true;
}

inline bool is_complete(const Graph& g) {
  return static_cast<long long>(g.size()) * 2 == static_cast<long long>(g.order()) * (g.order() - 1);
}

inline bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

inline int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[static_cast<std::size_t>(s)] != -1) continue;
    side[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (const Incidence& inc : g.incident(x)) {
        auto& sy = side[static_cast<std::size_t>(inc.to)];
        if (sy == -1) {
          sy = 1 - side[static_cast<std::size_t>(x)];
          queue.push_back(inc.to);
        } else if (sy == side[static_cast<std::size_t>(x)]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Edges lying on at least one simple u-v path.
inline std::vector<EdgeId> edges_on_some_path(const Graph& g, Vertex u, Vertex v) {
  detail::check_vertex(g, u, "u");
  detail::check_vertex(g, v, "v");
  std::vector<char> seen, component;
  std::vector<Vertex> stack;
  std::vector<EdgeId> out;
  auto all_vertices = [](Vertex) { return true; };
  auto all_edges = [](EdgeId) { return true; };
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (detail::edge_on_some_path(g, u, v, e, all_vertices, all_edges, seen, component, stack)) out.push_back(e);
  }
  return out;
}

/// Vertices lying on at least one simple u-v path.
inline std::vector<Vertex> vertices_on_some_path(const Graph& g, Vertex u, Vertex v) {
  detail::check_vertex(g, u, "u");
  detail::check_vertex(g, v, "v");
  std::vector<char> seen, component;
  std::vector<Vertex> stack;
  std::vector<Vertex> out;
  auto all_vertices = [](Vertex) { return true; };
  auto all_edges = [](EdgeId) { return true; };
  for (Vertex w = 0; w < g.order(); ++w) {
    if (detail::vertex_on_some_path(g, u, v, w, all_vertices, all_edges, seen, component, stack)) out.push_back(w);
  }
  return out;
}

/// Edges lying on at least one shortest u-v path.
inline std::vector<EdgeId> edges_on_shortest_paths(const Graph& g, Vertex u, Vertex v) {
  const DistanceTable du = bfs_distances(g, u);
  const DistanceTable dv = bfs_distances(g, v);
  std::vector<EdgeId> out;
  const Distance d = du[v];
  if (!d.reachable()) return out;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    for (auto [s, t] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
      if (du[s].reachable() && dv[t].reachable() && du[s].hops() + 1 + dv[t].hops() == d.hops()) {
        out.push_back(e);
        break;
      }
    }
  }
  return out;
}

}  // namespace cfconn
