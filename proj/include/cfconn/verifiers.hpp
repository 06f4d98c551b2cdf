#pragma once

// Polynomial-time verification of conflict-free, vertex-conflict-free and
// strong conflict-free connectivity for a given coloring.
//
// Each verifier scans unordered pairs in lexicographic order and stops at the
// first pair without a certificate. A pair is certified by a single edge
// (vertex) e of color i: remove the whole color class i except e, and ask
// whether a (shortest) u-v path through e survives. Such a path has color i
// exactly once.

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cfconn/coloring.hpp"
#include "cfconn/graph.hpp"

namespace cfconn {

/// Why one pair passed: a path between the pair's endpoints on which the
/// color of `element` occurs only at `element`. For the strong verifier,
/// `source` is the endpoint the distance layering was rooted at.
struct Certificate {
  VertexPair pair;
  Vertex source = 0;
  int element = 0;  // edge index, or vertex for the vertex verifier
  Color color = 0;
};

struct VerifyReport {
  bool ok = true;
  std::optional<VertexPair> witness_pair;  // first failing pair
  std::vector<Certificate> audit;          // one per pair when requested and ok
};

struct VerifyOptions {
  bool audit = false;
};

/// Items grouped by color id; ids may exceed the declared k (the solvers
/// give unassigned items fresh ids).
class ColorClasses {
 public:
  explicit ColorClasses(std::span<const Color> colors) {
    Color bound = 0;
    for (Color c : colors) bound = std::max(bound, c);
    members_.assign(static_cast<std::size_t>(bound) + 1, {});
    for (std::size_t i = 0; i < colors.size(); ++i) {
      members_[static_cast<std::size_t>(colors[i])].push_back(static_cast<int>(i));
    }
  }

  Color bound() const noexcept { return static_cast<Color>(members_.size()) - 1; }
  std::span<const int> members(Color c) const { return members_[static_cast<std::size_t>(c)]; }

 private:
  std::vector<std::vector<int>> members_;
};

/// Conflict-free path test on edge colorings.
class CfcEdgeChecker {
 public:
  explicit CfcEdgeChecker(const Graph& g) : g_(&g) {}

  bool pair_ok(std::span<const Color> colors, const ColorClasses& classes, Vertex u, Vertex v,
               Certificate* cert = nullptr) {
    auto all_vertices = [](Vertex) { return true; };
    for (Color i = 1; i <= classes.bound(); ++i) {
      for (int e : classes.members(i)) {
        auto kept = [&](EdgeId f) { return f == e || colors[static_cast<std::size_t>(f)] != i; };
        if (detail::edge_on_some_path(*g_, u, v, e, all_vertices, kept, seen_, component_, stack_)) {
          if (cert) *cert = {VertexPair::of(u, v), u, e, i};
          return true;
        }
      }
    }
    return false;
  }

 private:
  const Graph* g_;
  std::vector<char> seen_, component_;
  std::vector<Vertex> stack_;
};

/// Conflict-free path test on vertex colorings.
class CfcVertexChecker {
 public:
  explicit CfcVertexChecker(const Graph& g) : g_(&g) {}

  bool pair_ok(std::span<const Color> colors, const ColorClasses& classes, Vertex u, Vertex v,
               Certificate* cert = nullptr) {
    const Color cu = colors[static_cast<std::size_t>(u)];
    const Color cv = colors[static_cast<std::size_t>(v)];
    auto all_edges = [](EdgeId) { return true; };
    for (Color i = 1; i <= classes.bound(); ++i) {
      if (classes.members(i).empty()) continue;
      // A color shared by both ends can never be unique on a u-v path.
      if (cu == cv && i == cu) continue;
      // Any other vertex of u's color would take u out of G''.
      std::span<const int> candidates = classes.members(i);
      const Vertex only_u[] = {u};
      const Vertex only_v[] = {v};
      if (i == cu) candidates = only_u;
      if (i == cv) candidates = only_v;
      for (Vertex w : candidates) {
        auto kept = [&](Vertex x) { return x == w || colors[static_cast<std::size_t>(x)] != i; };
        if (detail::vertex_on_some_path(*g_, u, v, w, kept, all_edges, seen_, component_, stack_)) {
          if (cert) *cert = {VertexPair::of(u, v), u, w, i};
          return true;
        }
      }
    }
    return false;
  }

 private:
  const Graph* g_;
  std::vector<char> seen_, component_;
  std::vector<Vertex> stack_;
};

/// Conflict-free shortest path test on edge colorings. Distances in the
/// uncolored graph are cached per source.
class ScfcChecker {
 public:
  explicit ScfcChecker(const Graph& g)
      : g_(&g), cache_(static_cast<std::size_t>(g.order())), cached_(static_cast<std::size_t>(g.order()), 0) {}

  const std::vector<Distance>& distances_from(Vertex s) {
    const auto i = static_cast<std::size_t>(s);
    if (!cached_[i]) {
      detail::bfs(*g_, s, [](EdgeId) { return true; }, cache_[i], queue_);
      cached_[i] = 1;
    }
    return cache_[i];
  }

  bool pair_ok(std::span<const Color> colors, const ColorClasses& classes, Vertex u, Vertex v,
               Certificate* cert = nullptr) {
    // Both orientations are scanned before a pair is declared failed.
    return oriented(colors, classes, u, v, cert) || oriented(colors, classes, v, u, cert);
  }

 private:
  bool oriented(std::span<const Color> colors, const ColorClasses& classes, Vertex src, Vertex dst,
                Certificate* cert) {
    const std::vector<Distance>& d = distances_from(src);
    const Distance total = d[static_cast<std::size_t>(dst)];
    if (!total.reachable()) return false;
    for (Color i = 1; i <= classes.bound(); ++i) {
      for (int e : classes.members(i)) {
        const Edge& ed = g_->edge(e);
        Vertex s = ed.u;
        Vertex t = ed.v;
        Distance ds = d[static_cast<std::size_t>(s)];
        Distance dt = d[static_cast<std::size_t>(t)];
        if (!ds.reachable() || !dt.reachable() || ds.hops() == dt.hops()) continue;  // horizontal
        if (dt < ds) {
          std::swap(s, t);
          std::swap(ds, dt);
        }
        if (dt.hops() > total.hops()) continue;
        auto kept = [&](EdgeId f) { return f == e || colors[static_cast<std::size_t>(f)] != i; };
        detail::bfs(*g_, src, kept, near_, queue_);
        if (!(near_[static_cast<std::size_t>(s)] == ds)) continue;
        detail::bfs(*g_, dst, kept, far_, queue_);
        if (!(far_[static_cast<std::size_t>(t)] == Distance(total.hops() - dt.hops()))) continue;
        if (cert) *cert = {VertexPair::of(src, dst), src, e, i};
        return true;
      }
    }
    return false;
  }

  const Graph* g_;
  std::vector<std::vector<Distance>> cache_;
  std::vector<char> cached_;
  std::vector<Distance> near_, far_;
  std::vector<Vertex> queue_;
};

namespace detail {

template <class Checker>
VerifyReport scan_pairs(std::span<const Color> colors, Checker& checker,
                        std::span<const VertexPair> pairs, const VerifyOptions& opts) {
  VerifyReport report;
  const ColorClasses classes(colors);
  for (const VertexPair& p : pairs) {
    Certificate cert;
    if (!checker.pair_ok(colors, classes, p.u, p.v, opts.audit ? &cert : nullptr)) {
      report.ok = false;
      report.witness_pair = p;
      report.audit.clear();
      return report;
    }
    if (opts.audit) report.audit.push_back(cert);
  }
  return report;
}

inline void check_pairs_in_range(const Graph& g, const PairSet& p) {
  for (const VertexPair& pair : p) {
    check_vertex(g, pair.u, "pair");
    check_vertex(g, pair.v, "pair");
  }
}

}  // namespace detail

inline VerifyReport verify_cfc_edge(const Graph& g, const EdgeColoring& c, const VerifyOptions& opts = {}) {
  require_connected(g);
  require_total(g, c);
  CfcEdgeChecker checker(g);
  const PairSet all = PairSet::all_pairs(g.order());
  return detail::scan_pairs(c.colors(), checker, all.pairs(), opts);
}

inline VerifyReport verify_cfc_vertex(const Graph& g, const VertexColoring& c, const VerifyOptions& opts = {}) {
  require_connected(g);
  require_total(g, c);
  CfcVertexChecker checker(g);
  const PairSet all = PairSet::all_pairs(g.order());
  return detail::scan_pairs(c.colors(), checker, all.pairs(), opts);
}

inline VerifyReport verify_scfc(const Graph& g, const EdgeColoring& c, const VerifyOptions& opts = {}) {
  require_connected(g);
  require_total(g, c);
  ScfcChecker checker(g);
  const PairSet all = PairSet::all_pairs(g.order());
  return detail::scan_pairs(c.colors(), checker, all.pairs(), opts);
}

/// Strong verification restricted to the pairs in p. The graph may be
/// disconnected; a pair whose endpoints lie in different components fails.
inline VerifyReport verify_scfc_subset(const Graph& g, const EdgeColoring& c, const PairSet& p,
                                       const VerifyOptions& opts = {}) {
  require_total(g, c);
  detail::check_pairs_in_range(g, p);
  ScfcChecker checker(g);
  return detail::scan_pairs(c.colors(), checker, p.pairs(), opts);
}

}  // namespace cfconn
