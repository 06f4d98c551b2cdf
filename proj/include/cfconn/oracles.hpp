#pragma once

// Ground-truth checkers by explicit enumeration of simple paths. Exponential;
// meant for small test instances only.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfconn/coloring.hpp"
#include "cfconn/graph.hpp"

namespace cfconn {

struct OracleLimits {
  int max_vertices = 12;
};

using Path = std::vector<Vertex>;
using PathList = std::vector<Path>;

namespace detail {

inline void check_oracle_guard(const Graph& g, const OracleLimits& limits) {
  if (g.order() > limits.max_vertices) {
    throw std::length_error("oracle size guard: graph has " + std::to_string(g.order()) +
                            " vertices, limit is " + std::to_string(limits.max_vertices));
  }
}

/// Depth-first extension in neighbor order. `fn(vertices, edges)` is called
/// for each simple u-v path and returns false to stop. `extend(edge)` may veto
/// an extension (used for pruned searches); it must accept pushes and pops
/// symmetrically via `retract(edge)`.
template <class Fn, class Extend, class Retract>
bool walk_paths(const Graph& g, Vertex target, int max_len, std::vector<Vertex>& verts, std::vector<EdgeId>& edges,
                std::vector<char>& on_path, Fn& fn, Extend& extend, Retract& retract) {
  const Vertex x = verts.back();
  if (x == target) return fn(std::span<const Vertex>(verts), std::span<const EdgeId>(edges));
  if (max_len >= 0 && static_cast<int>(edges.size()) >= max_len) return true;
  for (const Incidence& inc : g.incident(x)) {
    if (on_path[static_cast<std::size_t>(inc.to)]) continue;
    if (!extend(inc.edge)) continue;
    on_path[static_cast<std::size_t>(inc.to)] = 1;
    verts.push_back(inc.to);
    edges.push_back(inc.edge);
    const bool go_on = walk_paths(g, target, max_len, verts, edges, on_path, fn, extend, retract);
    edges.pop_back();
    verts.pop_back();
    on_path[static_cast<std::size_t>(inc.to)] = 0;
    retract(inc.edge);
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

/// Calls fn(vertices, edges) for every simple u-v path with at most max_len
/// edges (negative: unbounded). Stops early when fn returns false.
template <class Fn>
void for_each_simple_path(const Graph& g, Vertex u, Vertex v, int max_len, Fn&& fn) {
  std::vector<Vertex> verts{u};
  std::vector<EdgeId> edges;
  std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
  on_path[static_cast<std::size_t>(u)] = 1;
  auto always = [](EdgeId) { return true; };
  auto nothing = [](EdgeId) {};
  detail::walk_paths(g, v, max_len, verts, edges, on_path, fn, always, nothing);
}

inline PathList enumerate_simple_paths(const Graph& g, Vertex u, Vertex v, std::optional<int> max_len = {},
                                       const OracleLimits& limits = {}) {
  detail::check_oracle_guard(g, limits);
  detail::check_vertex(g, u, "u");
  detail::check_vertex(g, v, "v");
  if (u == v) throw std::invalid_argument("path endpoints must differ");
  PathList out;
  for_each_simple_path(g, u, v, max_len.value_or(-1), [&](std::span<const Vertex> verts, std::span<const EdgeId>) {
    out.emplace_back(verts.begin(), verts.end());
    return true;
  });
  return out;
}

/// True iff some color occurs exactly once in `path_colors`.
inline bool has_unique_color(std::span<const Color> path_colors) {
  for (std::size_t i = 0; i < path_colors.size(); ++i) {
    int count = 0;
    for (Color c : path_colors) count += (c == path_colors[i]);
    if (count == 1) return true;
  }
  return false;
}

namespace oracle {

inline bool cfc_edge_pair(const Graph& g, std::span<const Color> colors, Vertex u, Vertex v) {
  bool found = false;
  std::vector<Color> buf;
  for_each_simple_path(g, u, v, -1, [&](std::span<const Vertex>, std::span<const EdgeId> edges) {
    buf.clear();
    for (EdgeId e : edges) buf.push_back(colors[static_cast<std::size_t>(e)]);
    found = has_unique_color(buf);
    return !found;
  });
  return found;
}

inline bool cfc_vertex_pair(const Graph& g, std::span<const Color> colors, Vertex u, Vertex v) {
  bool found = false;
  std::vector<Color> buf;
  for_each_simple_path(g, u, v, -1, [&](std::span<const Vertex> verts, std::span<const EdgeId>) {
    buf.clear();
    for (Vertex x : verts) buf.push_back(colors[static_cast<std::size_t>(x)]);
    found = has_unique_color(buf);
    return !found;
  });
  return found;
}

/// The u-v distance is taken as the shortest enumerated path, so this check
/// does not rely on any BFS.
inline bool scfc_pair(const Graph& g, std::span<const Color> colors, Vertex u, Vertex v) {
  int shortest = -1;
  bool found = false;
  std::vector<Color> buf;
  for_each_simple_path(g, u, v, -1, [&](std::span<const Vertex>, std::span<const EdgeId> edges) {
    const int len = static_cast<int>(edges.size());
    buf.clear();
    for (EdgeId e : edges) buf.push_back(colors[static_cast<std::size_t>(e)]);
    const bool cf = has_unique_color(buf);
    if (shortest < 0 || len < shortest) {
      shortest = len;
      found = cf;
    } else if (len == shortest) {
      found = found || cf;
    }
    return true;
  });
  return found;
}

/// Rainbow u-v path search. Extensions that repeat a color are cut, since no
/// extension of a non-rainbow prefix is rainbow.
inline bool rainbow_pair(const Graph& g, std::span<const Color> colors, Vertex u, Vertex v) {
  Color bound = 0;
  for (Color c : colors) bound = std::max(bound, c);
  std::vector<char> used(static_cast<std::size_t>(bound) + 1, 0);
  std::vector<Vertex> verts{u};
  std::vector<EdgeId> edges;
  std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
  on_path[static_cast<std::size_t>(u)] = 1;
  bool found = false;
  auto done = [&](std::span<const Vertex>, std::span<const EdgeId>) {
    found = true;
    return false;
  };
  auto extend = [&](EdgeId e) {
    auto& slot = used[static_cast<std::size_t>(colors[static_cast<std::size_t>(e)])];
    if (slot) return false;
    slot = 1;
    return true;
  };
  auto retract = [&](EdgeId e) { used[static_cast<std::size_t>(colors[static_cast<std::size_t>(e)])] = 0; };
  detail::walk_paths(g, v, -1, verts, edges, on_path, done, extend, retract);
  return found;
}

template <class PairTest>
bool all_pairs(const Graph& g, PairTest&& test) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!test(u, v)) return false;
    }
  }
  return true;
}

/// First pair (lexicographic) failing the test, if any.
template <class PairTest>
std::optional<VertexPair> first_failing_pair(const Graph& g, PairTest&& test) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!test(u, v)) return VertexPair{u, v};
    }
  }
  return std::nullopt;
}

}  // namespace oracle

inline bool oracle_cfc_edge(const Graph& g, const EdgeColoring& c, const OracleLimits& limits = {}) {
  detail::check_oracle_guard(g, limits);
  require_total(g, c);
  return oracle::all_pairs(g, [&](Vertex u, Vertex v) { return oracle::cfc_edge_pair(g, c.colors(), u, v); });
}

inline bool oracle_cfc_vertex(const Graph& g, const VertexColoring& c, const OracleLimits& limits = {}) {
  detail::check_oracle_guard(g, limits);
  require_total(g, c);
  return oracle::all_pairs(g, [&](Vertex u, Vertex v) { return oracle::cfc_vertex_pair(g, c.colors(), u, v); });
}

inline bool oracle_scfc(const Graph& g, const EdgeColoring& c, const OracleLimits& limits = {}) {
  detail::check_oracle_guard(g, limits);
  require_total(g, c);
  return oracle::all_pairs(g, [&](Vertex u, Vertex v) { return oracle::scfc_pair(g, c.colors(), u, v); });
}

inline bool oracle_rainbow_connected(const Graph& g, const EdgeColoring& c, const OracleLimits& limits = {}) {
  detail::check_oracle_guard(g, limits);
  require_total(g, c);
  return oracle::all_pairs(g, [&](Vertex u, Vertex v) { return oracle::rainbow_pair(g, c.colors(), u, v); });
}

}  // namespace cfconn
