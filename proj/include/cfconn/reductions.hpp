#pragma once

// Gadget constructions for the hardness reductions around strong
// conflict-free connectivity, witness transport across them, and a small
// 3-CNF toolkit used to cross-check the SAT reduction.
//
// Partial colorings use the bits {0,1}; as total EdgeColorings those are the
// color ids 1 and 2.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfconn/coloring.hpp"
#include "cfconn/graph.hpp"
#include "cfconn/verifiers.hpp"

namespace cfconn {

// ---------------------------------------------------------------------------
// 3-CNF

struct Literal {
  int var = 1;  // 1-based
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;
  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Truth values; entry i is x_{i+1}.
using Assignment = std::vector<bool>;

class CnfError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxBruteForceVars = 20;

inline std::string literal_text(const Literal& lit) {
  return (lit.positive ? "" : "-") + std::to_string(lit.var);
}

/// Rejects out-of-range variables and clauses that mention a variable twice.
inline void check_clause(const Clause& clause, int num_vars, std::size_t index) {
  for (std::size_t a = 0; a < 3; ++a) {
    if (clause[a].var < 1 || clause[a].var > num_vars) {
      throw CnfError("clause " + std::to_string(index + 1) + ": variable " + std::to_string(clause[a].var) +
                     " outside 1.." + std::to_string(num_vars));
    }
    for (std::size_t b = a + 1; b < 3; ++b) {
      if (clause[a].var != clause[b].var) continue;
      if (clause[a].positive != clause[b].positive) {
        throw CnfError("clause " + std::to_string(index + 1) + " is tautological: contains " +
                       literal_text(clause[a]) + " and " + literal_text(clause[b]));
      }
      throw CnfError("clause " + std::to_string(index + 1) + " repeats literal " + literal_text(clause[a]));
    }
  }
}

/// DIMACS CNF with exactly three literals per clause. Comment lines start
/// with 'c' or '%'; clauses may span lines.
inline CnfFormula parse_dimacs_cnf(std::string_view text) {
  CnfFormula f;
  bool have_header = false;
  int declared_clauses = 0;
  std::vector<int> pending;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == 'c' || tok[0] == '%') continue;
    if (tok == "p") {
      std::string kind;
      long long nv = -1, nc = -1;
      std::string extra;
      if (have_header || !(ls >> kind >> nv >> nc) || kind != "cnf" || nv < 0 || nc < 0 || (ls >> extra) ||
          nv > 1'000'000 || nc > 10'000'000) {
        throw CnfError("malformed header at line " + std::to_string(line_no) + ": expected 'p cnf <vars> <clauses>'");
      }
      have_header = true;
      f.num_vars = static_cast<int>(nv);
      declared_clauses = static_cast<int>(nc);
      continue;
    }
    if (!have_header) throw CnfError("malformed header: clause data before 'p cnf' line " + std::to_string(line_no));
    do {
      int value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw CnfError("line " + std::to_string(line_no) + ": bad literal '" + tok + "'");
      }
      if (value != 0) {
        pending.push_back(value);
        continue;
      }
      if (pending.size() != 3) {
        throw CnfError("clause " + std::to_string(f.clauses.size() + 1) + " has " + std::to_string(pending.size()) +
                       " literals; every clause needs exactly 3 (arity error)");
      }
      Clause clause;
      for (std::size_t i = 0; i < 3; ++i) clause[i] = {std::abs(pending[i]), pending[i] > 0};
      check_clause(clause, f.num_vars, f.clauses.size());
      f.clauses.push_back(clause);
      pending.clear();
    } while (ls >> tok);
  }
  if (!have_header) throw CnfError("malformed header: no 'p cnf' line");
  if (!pending.empty()) throw CnfError("last clause is not terminated by 0");
  if (static_cast<int>(f.clauses.size()) != declared_clauses) {
    throw CnfError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                   std::to_string(f.clauses.size()));
  }
  return f;
}

inline std::string to_dimacs(const CnfFormula& f) {
  std::string out = "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const Clause& c : f.clauses) {
    for (const Literal& lit : c) out += literal_text(lit) + " ";
    out += "0\n";
  }
  return out;
}

inline bool satisfies(const CnfFormula& f, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(f.num_vars)) throw std::invalid_argument("assignment size mismatch");
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(),
                       [&](const Literal& lit) { return a[static_cast<std::size_t>(lit.var - 1)] == lit.positive; });
  });
}

/// Lexicographically least model (false < true, x1 most significant).
inline std::optional<Assignment> solve_3sat_bruteforce(const CnfFormula& f) {
  if (f.num_vars > kMaxBruteForceVars) {
    throw std::length_error("brute-force SAT guard: " + std::to_string(f.num_vars) + " variables, limit is " +
                            std::to_string(kMaxBruteForceVars));
  }
  const auto n = static_cast<std::size_t>(f.num_vars);
  Assignment a(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    for (std::size_t i = 0; i < n; ++i) a[i] = (mask >> (n - 1 - i)) & 1U;
    if (satisfies(f, a)) return a;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Instances

/// Bits in {0,1} on some of a host graph's edges.
class PartialEdgeColoring {
 public:
  PartialEdgeColoring() = default;
  explicit PartialEdgeColoring(std::size_t edges) : bits_(edges) {}
  explicit PartialEdgeColoring(std::vector<std::optional<int>> bits) : bits_(std::move(bits)) {
    for (std::size_t e = 0; e < bits_.size(); ++e) {
      if (bits_[e] && *bits_[e] != 0 && *bits_[e] != 1) {
        throw std::invalid_argument("partial coloring: edge " + std::to_string(e) + " has color " +
                                    std::to_string(*bits_[e]) + ", expected 0 or 1");
      }
    }
  }

  std::size_t size() const noexcept { return bits_.size(); }
  const std::optional<int>& operator[](std::size_t e) const { return bits_.at(e); }
  void assign(std::size_t e, int bit) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("partial colors are 0 or 1");
    bits_.at(e) = bit;
  }
  const std::vector<std::optional<int>>& bits() const noexcept { return bits_; }

  std::size_t assigned_count() const {
    return static_cast<std::size_t>(std::count_if(bits_.begin(), bits_.end(), [](const auto& b) { return b.has_value(); }));
  }
  std::vector<EdgeId> unassigned() const {
    std::vector<EdgeId> out;
    for (std::size_t e = 0; e < bits_.size(); ++e) {
      if (!bits_[e]) out.push_back(static_cast<EdgeId>(e));
    }
    return out;
  }

  /// Does the total coloring (ids 1,2) agree with every assigned bit?
  bool extended_by(const EdgeColoring& full) const {
    if (full.size() != bits_.size()) return false;
    for (std::size_t e = 0; e < bits_.size(); ++e) {
      if (bits_[e] && full[e] != *bits_[e] + 1) return false;
    }
    return true;
  }

  friend bool operator==(const PartialEdgeColoring&, const PartialEdgeColoring&) = default;

 private:
  std::vector<std::optional<int>> bits_;
};

inline void require_host(const Graph& g, const PartialEdgeColoring& partial) {
  if (partial.size() != static_cast<std::size_t>(g.size())) {
    throw std::invalid_argument("partial coloring covers " + std::to_string(partial.size()) + " edges, graph has " +
                                std::to_string(g.size()));
  }
}

/// Visits every total 2-coloring (ids 1,2) extending the partial one. The
/// free edges run through their bit patterns in increasing binary order,
/// lowest free edge most significant. The visitor returns false to stop.
template <class Fn>
void for_each_extension(const PartialEdgeColoring& partial, Fn&& fn) {
  const std::vector<EdgeId> free = partial.unassigned();
  if (free.size() > 30) throw std::length_error("too many uncolored edges to enumerate extensions");
  std::vector<Color> colors(partial.size());
  for (std::size_t e = 0; e < partial.size(); ++e) colors[e] = partial[e] ? *partial[e] + 1 : 1;
  const std::uint32_t total = std::uint32_t{1} << free.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < free.size(); ++i) {
      colors[static_cast<std::size_t>(free[i])] = 1 + static_cast<Color>((mask >> (free.size() - 1 - i)) & 1U);
    }
    if (!fn(EdgeColoring(2, colors))) return;
  }
}

/// One line of bookkeeping: source object `src` of the given kind maps to
/// gadget vertex or edge `dst`.
struct MapEntry {
  std::string kind;
  std::string src;
  int dst = 0;
  friend bool operator==(const MapEntry&, const MapEntry&) = default;
};

class ReductionMaps {
 public:
  ReductionMaps() = default;
  explicit ReductionMaps(std::string reduction) : reduction_(std::move(reduction)) {}

  const std::string& reduction() const noexcept { return reduction_; }
  void set_reduction(std::string r) { reduction_ = std::move(r); }

  void add(std::string kind, std::string src, int dst) {
    const auto key = std::make_pair(kind, src);
    if (index_.count(key)) throw std::invalid_argument("duplicate map entry " + kind + " " + src);
    index_[key] = entries_.size();
    entries_.push_back({std::move(kind), std::move(src), dst});
  }

  std::optional<int> find(const std::string& kind, const std::string& src) const {
    auto it = index_.find({kind, src});
    if (it == index_.end()) return std::nullopt;
    return entries_[it->second].dst;
  }

  int at(const std::string& kind, const std::string& src) const {
    if (auto d = find(kind, src)) return *d;
    throw std::invalid_argument("maps have no entry " + kind + " " + src);
  }

  /// Entries of one kind, in insertion order.
  std::vector<MapEntry> of_kind(const std::string& kind) const {
    std::vector<MapEntry> out;
    for (const auto& e : entries_) {
      if (e.kind == kind) out.push_back(e);
    }
    return out;
  }

  const std::vector<MapEntry>& entries() const noexcept { return entries_; }

  friend bool operator==(const ReductionMaps& a, const ReductionMaps& b) {
    return a.reduction_ == b.reduction_ && a.entries_ == b.entries_;
  }

 private:
  std::string reduction_;
  std::vector<MapEntry> entries_;
  std::map<std::pair<std::string, std::string>, std::size_t> index_;
};

enum class ReductionKind { sat2partial, partial2subset, kcolor2subset, star2scfc };

inline std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::sat2partial: return "sat2partial";
    case ReductionKind::partial2subset: return "partial2subset";
    case ReductionKind::kcolor2subset: return "kcolor2subset";
    case ReductionKind::star2scfc: return "star2scfc";
  }
  return "?";
}

inline ReductionKind parse_reduction_kind(const std::string& s) {
  for (auto k : {ReductionKind::sat2partial, ReductionKind::partial2subset, ReductionKind::kcolor2subset,
                 ReductionKind::star2scfc}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown reduction kind '" + s + "'");
}

struct ReductionInstance {
  ReductionKind kind = ReductionKind::sat2partial;
  Graph graph;
  PairSet pairs;
  std::optional<PartialEdgeColoring> partial;
  ReductionMaps maps;
  int k = 0;  // target color count, where the reduction fixes one
};

namespace detail {

inline std::string pair_label(Vertex a, Vertex b) { return std::to_string(a) + "," + std::to_string(b); }

inline void check_map_targets(const ReductionInstance& inst) {
  for (const MapEntry& e : inst.maps.entries()) {
    const bool edge = e.kind.ends_with("edge");
    const int limit = edge ? inst.graph.size() : inst.graph.order();
    if (e.dst < 0 || e.dst >= limit) {
      throw std::logic_error("map entry " + e.kind + " " + e.src + " points outside the gadget");
    }
  }
}

inline void require_kind(const ReductionInstance& inst, ReductionKind kind) {
  if (inst.kind != kind) {
    throw std::invalid_argument("expected a " + to_string(kind) + " instance, got " + to_string(inst.kind));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 3-SAT -> partial 2-edge-coloring extension

inline void check_both_polarities(const CnfFormula& f) {
  std::vector<char> pos(static_cast<std::size_t>(f.num_vars) + 1, 0), neg(pos);
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    check_clause(f.clauses[i], f.num_vars, i);
    for (const Literal& lit : f.clauses[i]) (lit.positive ? pos : neg)[static_cast<std::size_t>(lit.var)] = 1;
  }
  for (int x = 1; x <= f.num_vars; ++x) {
    const auto i = static_cast<std::size_t>(x);
    if (pos[i] && neg[i]) continue;
    const std::string missing = pos[i] ? "negatively" : (neg[i] ? "positively" : "at all");
    throw CnfError("variable x" + std::to_string(x) + " never occurs " + missing +
                   "; the construction needs every variable in both polarities. Add clauses containing " +
                   (pos[i] ? "-" : "") + std::to_string(x) + " (or drop unused variables) and rerun");
  }
}

/// Gadget vertices: clauses c_1..c_l are 0..l-1, variables x_1..x_n are
/// l..l+n-1, the apex a is l+n. Edges: occurrences (clause order, literal
/// order), then x_i a, then the clause clique, then the variable clique.
/// Only the x_i a edges stay uncolored.
inline ReductionInstance reduce_3sat_to_partial2(const CnfFormula& f) {
  check_both_polarities(f);
  const int l = static_cast<int>(f.clauses.size());
  const int n = f.num_vars;
  const Vertex apex = l + n;
  auto var_vertex = [&](int x) { return l + x - 1; };

  std::vector<std::pair<int, int>> edges;
  std::vector<std::optional<int>> bits;
  ReductionInstance inst;
  inst.kind = ReductionKind::sat2partial;
  inst.k = 2;
  inst.maps.set_reduction("sat2partial");
  for (int j = 0; j < l; ++j) inst.maps.add("clause", "c" + std::to_string(j + 1), j);
  for (int x = 1; x <= n; ++x) inst.maps.add("var", "x" + std::to_string(x), var_vertex(x));
  inst.maps.add("apex", "a", apex);

  for (int j = 0; j < l; ++j) {
    for (const Literal& lit : f.clauses[static_cast<std::size_t>(j)]) {
      edges.emplace_back(var_vertex(lit.var), j);
      bits.emplace_back(lit.positive ? 0 : 1);
    }
  }
  for (int x = 1; x <= n; ++x) {
    inst.maps.add("var_edge", "x" + std::to_string(x), static_cast<int>(edges.size()));
    edges.emplace_back(var_vertex(x), apex);
    bits.emplace_back(std::nullopt);
  }
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      edges.emplace_back(i, j);
      bits.emplace_back(0);
    }
  }
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      edges.emplace_back(var_vertex(x), var_vertex(y));
      bits.emplace_back(0);
    }
  }
  inst.graph = Graph(l + n + 1, edges);
  inst.partial = PartialEdgeColoring(std::move(bits));
  std::vector<VertexPair> apex_pairs;
  for (int j = 0; j < l; ++j) apex_pairs.push_back(VertexPair::of(apex, j));
  inst.pairs = PairSet(std::move(apex_pairs));
  detail::check_map_targets(inst);
  return inst;
}

/// x_i is true iff edge x_i a carries bit 1 (color id 2).
inline Assignment extract_sat_assignment(const ReductionInstance& inst, const EdgeColoring& full) {
  detail::require_kind(inst, ReductionKind::sat2partial);
  require_total(inst.graph, full);
  if (!inst.partial || !inst.partial->extended_by(full)) {
    throw std::invalid_argument("coloring does not extend the instance's partial coloring");
  }
  Assignment a;
  for (const MapEntry& e : inst.maps.of_kind("var_edge")) a.push_back(full[static_cast<std::size_t>(e.dst)] == 2);
  return a;
}

/// Edge colors for the x_i a edges chosen from a truth assignment.
inline EdgeColoring extension_from_assignment(const ReductionInstance& inst, const Assignment& a) {
  detail::require_kind(inst, ReductionKind::sat2partial);
  const auto var_edges = inst.maps.of_kind("var_edge");
  if (a.size() != var_edges.size()) throw std::invalid_argument("assignment size mismatch");
  std::vector<Color> colors(inst.partial->size());
  for (std::size_t e = 0; e < colors.size(); ++e) colors[e] = (*inst.partial)[e].value_or(0) + 1;
  for (std::size_t i = 0; i < a.size(); ++i) colors[static_cast<std::size_t>(var_edges[i].dst)] = a[i] ? 2 : 1;
  return EdgeColoring(2, std::move(colors));
}

// ---------------------------------------------------------------------------
// partial 2-edge-coloring extension -> 2-subset strong conflict-free connectivity

inline int chain_length(int n) {
  const int half = (n + 1) / 2;
  return half % 2 == 1 ? half : half + 1;
}

/// Vertices: host 0..n-1, then b1, c, b2, then per colored host edge (index
/// order) its chain t_1..t_r followed by c_e. Edges: host edges, b1c, b2c,
/// the chains b_i t_1 .. t_r c_e, then the c_e eps(e) edges. Bit 0 hangs a
/// chain off b1, bit 1 off b2. theta(e) is the larger endpoint, eps(e) the
/// smaller.
inline ReductionInstance reduce_partial2_to_subset(const Graph& g, const PartialEdgeColoring& partial) {
  require_host(g, partial);
  const int n = g.order();
  const int r = chain_length(n);
  const Vertex b[2] = {n, n + 2};
  const Vertex hub = n + 1;

  ReductionInstance inst;
  inst.kind = ReductionKind::partial2subset;
  inst.k = 2;
  inst.maps.set_reduction("partial2subset");
  std::vector<std::pair<int, int>> edges = g.edge_pairs();
  for (EdgeId e = 0; e < g.size(); ++e) inst.maps.add("host_edge", std::to_string(e), e);
  for (Vertex v = 0; v < n; ++v) inst.maps.add("host_vertex", std::to_string(v), v);
  inst.maps.add("hub", "b1", b[0]);
  inst.maps.add("hub", "c", hub);
  inst.maps.add("hub", "b2", b[1]);
  inst.maps.add("hub_edge", "b1c", static_cast<int>(edges.size()));
  edges.emplace_back(b[0], hub);
  inst.maps.add("hub_edge", "b2c", static_cast<int>(edges.size()));
  edges.emplace_back(b[1], hub);

  std::vector<VertexPair> pairs{VertexPair::of(b[0], b[1])};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }

  Vertex next = n + 3;
  std::vector<std::pair<EdgeId, Vertex>> caps;  // colored host edge, its c_e
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto& bit = partial[static_cast<std::size_t>(e)];
    if (!bit) continue;
    // s_0 = b_i, s_1..s_r = t_1..t_r, s_{r+1} = c_e
    std::vector<Vertex> s{b[*bit]};
    for (int j = 1; j <= r; ++j) {
      inst.maps.add("chain", std::to_string(e) + ":" + std::to_string(j), next);
      s.push_back(next++);
    }
    inst.maps.add("cap", std::to_string(e), next);
    s.push_back(next++);
    for (std::size_t j = 0; j + 1 < s.size(); ++j) edges.emplace_back(s[j], s[j + 1]);
    caps.emplace_back(e, s.back());

    const Vertex theta = g.edge(e).v;
    const Vertex eps = g.edge(e).u;
    pairs.push_back(VertexPair::of(hub, s[1]));
    for (int j = 0; j < r; ++j) pairs.push_back(VertexPair::of(s[static_cast<std::size_t>(j)], s[static_cast<std::size_t>(j) + 2]));
    pairs.push_back(VertexPair::of(s[static_cast<std::size_t>(r)], eps));
    pairs.push_back(VertexPair::of(s.back(), theta));
  }
  for (auto [e, cap] : caps) {
    inst.maps.add("cap_edge", std::to_string(e), static_cast<int>(edges.size()));
    edges.emplace_back(cap, g.edge(e).u);
  }
  inst.graph = Graph(next, edges);
  inst.pairs = PairSet(std::move(pairs));
  detail::check_map_targets(inst);
  return inst;
}

/// Host coloring read off a gadget 2-coloring, with colors swapped if needed
/// so that b1c carries bit 0.
inline EdgeColoring extract_partial_extension(const ReductionInstance& inst, const EdgeColoring& gadget) {
  detail::require_kind(inst, ReductionKind::partial2subset);
  require_total(inst.graph, gadget);
  if (gadget.num_colors() > 2) throw std::invalid_argument("expected a 2-edge-coloring of the gadget");
  const bool swap = gadget[static_cast<std::size_t>(inst.maps.at("hub_edge", "b1c"))] == 2;
  std::vector<Color> host;
  for (const MapEntry& e : inst.maps.of_kind("host_edge")) {
    const Color c = gadget[static_cast<std::size_t>(e.dst)];
    host.push_back(swap ? 3 - c : c);
  }
  return EdgeColoring(2, std::move(host));
}

// ---------------------------------------------------------------------------
// k-vertex-coloring -> k-subset strong conflict-free connectivity on a star

/// Leaves 0..n-1 stand for the vertices of g, the center is n, and edge i is
/// the edge from leaf i to the center.
inline ReductionInstance reduce_kcolor_to_subset(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("color count k must be at least 1");
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("source graph needs at least one vertex");
  ReductionInstance inst;
  inst.kind = ReductionKind::kcolor2subset;
  inst.k = k;
  inst.maps.set_reduction("kcolor2subset");
  std::vector<std::pair<int, int>> edges;
  for (Vertex v = 0; v < n; ++v) {
    inst.maps.add("vertex", std::to_string(v), v);
    inst.maps.add("vertex_edge", std::to_string(v), v);
    edges.emplace_back(v, n);
  }
  inst.maps.add("center", "x", n);
  inst.graph = Graph(n + 1, edges);
  std::vector<VertexPair> pairs;
  for (const Edge& e : g.edges()) pairs.push_back({e.u, e.v});
  inst.pairs = PairSet(std::move(pairs));
  detail::check_map_targets(inst);
  return inst;
}

/// Vertex v takes the color of its star edge.
inline VertexColoring extract_vertex_coloring(const ReductionInstance& inst, const EdgeColoring& c) {
  detail::require_kind(inst, ReductionKind::kcolor2subset);
  require_total(inst.graph, c);
  std::vector<Color> colors;
  for (const MapEntry& e : inst.maps.of_kind("vertex_edge")) colors.push_back(c[static_cast<std::size_t>(e.dst)]);
  return VertexColoring(c.num_colors(), std::move(colors));
}

/// Proper k-coloring by backtracking in vertex order, lexicographically least.
inline std::optional<VertexColoring> find_vertex_coloring(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("color count k must be at least 1");
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Color> colors(n, 0);
  std::function<bool(std::size_t, int)> place = [&](std::size_t v, int used) {
    if (v == n) return true;
    for (Color c = 1; c <= std::min(k, used + 1); ++c) {
      bool clash = false;
      for (const Incidence& inc : g.incident(static_cast<Vertex>(v))) {
        if (static_cast<std::size_t>(inc.to) < v && colors[static_cast<std::size_t>(inc.to)] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colors[v] = c;
      if (place(v + 1, std::max(used, c))) return true;
    }
    colors[v] = 0;
    return false;
  };
  if (!place(0, 0)) return std::nullopt;
  return VertexColoring(k, std::move(colors));
}

// ---------------------------------------------------------------------------
// k-subset on a star -> strong conflict-free connectivity of the whole graph

struct StarShape {
  Vertex center = 0;
  std::vector<Vertex> leaves;
};

/// Center and leaves; K2 is read with center 0.
inline StarShape star_shape(const Graph& star) {
  const int n = star.order();
  if (n < 2 || star.size() != n - 1) throw std::invalid_argument("not a star: need n >= 2 and n-1 edges");
  StarShape shape;
  shape.center = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (star.degree(v) == n - 1) {
      shape.center = v;
      break;
    }
  }
  if (shape.center < 0) throw std::invalid_argument("not a star: no vertex is adjacent to all others");
  for (Vertex v = 0; v < n; ++v) {
    if (v != shape.center) shape.leaves.push_back(v);
  }
  return shape;
}

/// Star vertices keep their indices. Then V1 = x_v for each leaf v (index
/// order) followed by x_(u,v) for each leaf pair outside p (lex order), then
/// V2 with the same layout. Edges: star edges, E1 = v x_v, E2 = u x_(u,v) and
/// v x_(u,v), E3 = V1 x V2 row-major, E4 = center to each of V2.
inline ReductionInstance reduce_subset_star_to_scfc(const Graph& star, const PairSet& p) {
  const StarShape shape = star_shape(star);
  for (const VertexPair& q : p) {
    detail::check_vertex(star, q.u, "pair");
    detail::check_vertex(star, q.v, "pair");
    if (q.u == shape.center || q.v == shape.center) {
      throw std::invalid_argument("pair (" + detail::pair_label(q.u, q.v) + ") involves the star center");
    }
  }
  ReductionInstance inst;
  inst.kind = ReductionKind::star2scfc;
  inst.maps.set_reduction("star2scfc");
  inst.maps.add("center", "a", shape.center);
  for (Vertex v : shape.leaves) inst.maps.add("leaf", std::to_string(v), v);
  for (EdgeId e = 0; e < star.size(); ++e) inst.maps.add("star_edge", std::to_string(e), e);

  std::vector<std::string> labels;  // V1 and V2 share this layout
  std::vector<std::pair<Vertex, Vertex>> outside;
  for (Vertex v : shape.leaves) labels.push_back(std::to_string(v));
  for (std::size_t i = 0; i < shape.leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < shape.leaves.size(); ++j) {
      const Vertex a = shape.leaves[i], b = shape.leaves[j];
      if (p.contains(a, b)) continue;
      outside.emplace_back(a, b);
      labels.push_back(detail::pair_label(a, b));
    }
  }
  const int q = static_cast<int>(labels.size());
  const int base1 = star.order();
  const int base2 = base1 + q;
  for (int i = 0; i < q; ++i) {
    inst.maps.add("x", labels[static_cast<std::size_t>(i)], base1 + i);
    inst.maps.add("x'", labels[static_cast<std::size_t>(i)], base2 + i);
  }

  std::vector<std::pair<int, int>> edges = star.edge_pairs();
  for (std::size_t i = 0; i < shape.leaves.size(); ++i) edges.emplace_back(shape.leaves[i], base1 + static_cast<int>(i));
  for (std::size_t i = 0; i < outside.size(); ++i) {
    const Vertex x = base1 + static_cast<int>(shape.leaves.size() + i);
    edges.emplace_back(outside[i].first, x);
    edges.emplace_back(outside[i].second, x);
  }
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) edges.emplace_back(base1 + i, base2 + j);
  }
  for (int j = 0; j < q; ++j) edges.emplace_back(shape.center, base2 + j);

  inst.graph = Graph(base2 + q, edges);
  if (!is_bipartite(inst.graph)) throw std::logic_error("star gadget is not bipartite");
  inst.pairs = p;
  detail::check_map_targets(inst);
  return inst;
}

/// The source star recovered from a star2scfc instance.
inline Graph source_star(const ReductionInstance& inst) {
  detail::require_kind(inst, ReductionKind::star2scfc);
  const auto star_edges = inst.maps.of_kind("star_edge");
  std::vector<std::pair<int, int>> edges;
  for (const MapEntry& e : star_edges) {
    const Edge& ed = inst.graph.edge(e.dst);
    edges.emplace_back(ed.u, ed.v);
  }
  return Graph(static_cast<int>(star_edges.size()) + 1, edges);
}

/// Star edge colors read off a gadget coloring.
inline EdgeColoring extract_star_coloring(const ReductionInstance& inst, const EdgeColoring& gadget) {
  detail::require_kind(inst, ReductionKind::star2scfc);
  require_total(inst.graph, gadget);
  std::vector<Color> colors;
  for (const MapEntry& e : inst.maps.of_kind("star_edge")) colors.push_back(gadget[static_cast<std::size_t>(e.dst)]);
  return EdgeColoring(gadget.num_colors(), std::move(colors));
}

/// Extends a star coloring that serves every pair of p: star edges keep c,
/// E1 gets 3, each x_(u,v) gets 1 toward u and 2 toward v, the matching
/// x_i x'_i gets 1 and the rest of E3 gets 2, E4 gets 3.
inline EdgeColoring forward_color_subset_star(const ReductionInstance& inst, const EdgeColoring& c) {
  detail::require_kind(inst, ReductionKind::star2scfc);
  const Graph star = source_star(inst);
  require_total(star, c);
  if (c.num_colors() < 3) throw std::invalid_argument("star coloring must declare at least 3 colors");
  if (!verify_scfc_subset(star, c, inst.pairs).ok) {
    throw std::invalid_argument("star coloring does not strongly conflict-free connect every pair of p");
  }
  const Graph& g = inst.graph;
  const Vertex center = inst.maps.at("center", "a");
  std::vector<Color> colors(static_cast<std::size_t>(g.size()), 0);
  auto paint = [&](Vertex a, Vertex b, Color col) {
    colors[static_cast<std::size_t>(*g.edge_between(a, b))] = col;
  };
  for (EdgeId e = 0; e < star.size(); ++e) colors[static_cast<std::size_t>(e)] = c[static_cast<std::size_t>(e)];
  const auto xs = inst.maps.of_kind("x");
  const auto primes = inst.maps.of_kind("x'");
  for (const MapEntry& x : xs) {
    const auto comma = x.src.find(',');
    if (comma == std::string::npos) {
      paint(std::stoi(x.src), x.dst, 3);
    } else {
      paint(std::stoi(x.src.substr(0, comma)), x.dst, 1);
      paint(std::stoi(x.src.substr(comma + 1)), x.dst, 2);
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < primes.size(); ++j) paint(xs[i].dst, primes[j].dst, i == j ? 1 : 2);
  }
  for (const MapEntry& x : primes) paint(center, x.dst, 3);
  return EdgeColoring(std::max(3, c.num_colors()), std::move(colors));
}

}  // namespace cfconn
