#pragma once

// Text formats.
//
//   graph     "n m", then m lines "u v"
//   coloring  "k", then one color per line (edge or vertex index order)
//   pairs     lines "p u v"
//   partial   "2", then one line per edge: 0, 1 or '-' for uncolored
//   maps      "reduction <kind> -> <k>", then lines "kind src -> dst"
//
// Blank lines and lines starting with '#' are ignored everywhere.

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cfconn/coloring.hpp"
#include "cfconn/graph.hpp"
#include "cfconn/reductions.hpp"

namespace cfconn {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

namespace detail {

struct TextLine {
  int number;
  std::string text;
};

inline std::vector<TextLine> content_lines(std::string_view text) {
  std::vector<TextLine> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back({number, line.substr(first)});
  }
  return out;
}

/// Reads exactly `count` integers from a line.
inline std::vector<long long> integers(const TextLine& line, std::size_t count, const char* what) {
  std::istringstream in(line.text);
  std::vector<long long> out;
  long long x = 0;
  while (out.size() < count && in >> x) out.push_back(x);
  std::string rest;
  if (out.size() != count || (in.clear(), in >> rest)) {
    throw ParseError(std::string("expected ") + what + ", got '" + line.text + "'", line.number);
  }
  return out;
}

inline int small_int(long long x, const TextLine& line, const char* what) {
  if (x < 0 || x > 100'000'000) throw ParseError(std::string(what) + " out of range: " + std::to_string(x), line.number);
  return static_cast<int>(x);
}

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty graph file: expected header 'n m'", 0);
  const auto header = detail::integers(lines[0], 2, "header 'n m'");
  const int n = detail::small_int(header[0], lines[0], "vertex count");
  const int m = detail::small_int(header[1], lines[0], "edge count");
  if (lines.size() - 1 != static_cast<std::size_t>(m)) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1),
                     lines.size() > 1 ? lines.back().number : lines[0].number);
  }
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto uv = detail::integers(lines[i], 2, "edge 'u v'");
    const int a = detail::small_int(uv[0], lines[i], "endpoint");
    const int b = detail::small_int(uv[1], lines[i], "endpoint");
    if (a >= n || b >= n) throw ParseError("endpoint out of range for n=" + std::to_string(n), lines[i].number);
    if (a == b) throw ParseError("loop edge at vertex " + std::to_string(a), lines[i].number);
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw ParseError("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")", lines[i].number);
    }
    edges.emplace_back(a, b);
  }
  return Graph(n, edges);
}

inline std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

/// (k, colors) with every color checked against [1,k]. `expected` is the
/// number of color lines required.
inline std::pair<int, std::vector<Color>> parse_color_list(std::string_view text, std::size_t expected) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty coloring file: expected 'k'", 0);
  const int k = detail::small_int(detail::integers(lines[0], 1, "color count 'k'")[0], lines[0], "k");
  if (k < 1) throw ParseError("color count k must be at least 1", lines[0].number);
  std::vector<Color> colors;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto c = detail::integers(lines[i], 1, "one color id");
    if (c[0] < 1 || c[0] > k) {
      throw ParseError("color " + std::to_string(c[0]) + " outside [1," + std::to_string(k) + "]", lines[i].number);
    }
    colors.push_back(static_cast<Color>(c[0]));
  }
  if (colors.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " color lines, found " + std::to_string(colors.size()),
                     lines.back().number);
  }
  return {k, std::move(colors)};
}

inline EdgeColoring parse_edge_coloring(std::string_view text, const Graph& g) {
  auto [k, colors] = parse_color_list(text, static_cast<std::size_t>(g.size()));
  return EdgeColoring(k, std::move(colors));
}

inline VertexColoring parse_vertex_coloring(std::string_view text, const Graph& g) {
  auto [k, colors] = parse_color_list(text, static_cast<std::size_t>(g.order()));
  return VertexColoring(k, std::move(colors));
}

template <class Items>
std::string format_coloring(const Coloring<Items>& c) {
  std::string out = std::to_string(c.num_colors()) + "\n";
  for (Color x : c.colors()) out += std::to_string(x) + "\n";
  return out;
}

inline PairSet parse_pairs(std::string_view text, const Graph& g) {
  std::vector<VertexPair> pairs;
  for (const auto& line : detail::content_lines(text)) {
    std::istringstream in(line.text);
    std::string tag;
    long long u = -1, v = -1;
    std::string rest;
    if (!(in >> tag >> u >> v) || tag != "p" || (in >> rest)) {
      throw ParseError("expected pair line 'p u v', got '" + line.text + "'", line.number);
    }
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
      throw ParseError("pair endpoint out of range for n=" + std::to_string(g.order()), line.number);
    }
    if (u == v) throw ParseError("pair with equal endpoints: " + std::to_string(u), line.number);
    pairs.push_back(VertexPair::of(static_cast<int>(u), static_cast<int>(v)));
  }
  return PairSet(std::move(pairs));
}

inline std::string format_pairs(const PairSet& p) {
  std::string out;
  for (const VertexPair& q : p) out += "p " + std::to_string(q.u) + " " + std::to_string(q.v) + "\n";
  return out;
}

inline PartialEdgeColoring parse_partial(std::string_view text, const Graph& g) {
  const auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty partial coloring file: expected '2'", 0);
  if (detail::integers(lines[0], 1, "color count '2'")[0] != 2) {
    throw ParseError("partial colorings use exactly 2 colors", lines[0].number);
  }
  std::vector<std::optional<int>> bits;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& t = lines[i].text;
    const auto end = t.find_last_not_of(" \t");
    const std::string tok = t.substr(0, end + 1);
    if (tok == "-") {
      bits.emplace_back(std::nullopt);
    } else if (tok == "0" || tok == "1") {
      bits.emplace_back(tok[0] - '0');
    } else {
      throw ParseError("expected 0, 1 or '-', got '" + t + "'", lines[i].number);
    }
  }
  if (bits.size() != static_cast<std::size_t>(g.size())) {
    throw ParseError("expected " + std::to_string(g.size()) + " edge lines, found " + std::to_string(bits.size()),
                     lines.back().number);
  }
  return PartialEdgeColoring(std::move(bits));
}

inline std::string format_partial(const PartialEdgeColoring& p) {
  std::string out = "2\n";
  for (const auto& b : p.bits()) out += b ? std::to_string(*b) + "\n" : std::string("-\n");
  return out;
}

/// Maps file; returns the maps and the k stored on the header line.
inline std::pair<ReductionMaps, int> parse_maps(std::string_view text) {
  const auto lines = detail::content_lines(text);
  ReductionMaps maps;
  int k = 0;
  bool have_header = false;
  for (const auto& line : lines) {
    std::string t = line.text;
    for (std::size_t pos; (pos = t.find("\xE2\x86\x92")) != std::string::npos;) t.replace(pos, 3, "->");
    const auto arrow = t.find("->");
    if (arrow == std::string::npos) throw ParseError("expected 'kind src -> dst', got '" + line.text + "'", line.number);
    std::istringstream lhs(t.substr(0, arrow)), rhs(t.substr(arrow + 2));
    std::string kind, src, rest;
    long long dst = -1;
    if (!(lhs >> kind >> src) || (lhs >> rest) || !(rhs >> dst) || (rhs >> rest) || dst < 0) {
      throw ParseError("expected 'kind src -> dst', got '" + line.text + "'", line.number);
    }
    if (!have_header) {
      if (kind != "reduction") throw ParseError("first line must be 'reduction <kind> -> <k>'", line.number);
      try {
        (void)parse_reduction_kind(src);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line.number);
      }
      maps.set_reduction(src);
      k = static_cast<int>(dst);
      have_header = true;
      continue;
    }
    try {
      maps.add(kind, src, static_cast<int>(dst));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line.number);
    }
  }
  if (!have_header) throw ParseError("empty maps file", 0);
  return {std::move(maps), k};
}

inline std::string format_maps(const ReductionMaps& maps, int k) {
  std::string out = "reduction " + maps.reduction() + " -> " + std::to_string(k) + "\n";
  for (const MapEntry& e : maps.entries()) out += e.kind + " " + e.src + " -> " + std::to_string(e.dst) + "\n";
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

/// Writes graph.txt, pairs.txt, partial.txt (if any) and maps.txt.
inline void write_instance(const std::filesystem::path& dir, const ReductionInstance& inst) {
  std::filesystem::create_directories(dir);
  write_file(dir / "graph.txt", format_graph(inst.graph));
  write_file(dir / "pairs.txt", format_pairs(inst.pairs));
  if (inst.partial) write_file(dir / "partial.txt", format_partial(*inst.partial));
  write_file(dir / "maps.txt", format_maps(inst.maps, inst.k));
}

inline ReductionInstance read_instance(const std::filesystem::path& dir) {
  ReductionInstance inst;
  auto [maps, k] = parse_maps(read_file(dir / "maps.txt"));
  inst.kind = parse_reduction_kind(maps.reduction());
  inst.maps = std::move(maps);
  inst.k = k;
  inst.graph = parse_graph(read_file(dir / "graph.txt"));
  if (std::filesystem::exists(dir / "pairs.txt")) inst.pairs = parse_pairs(read_file(dir / "pairs.txt"), inst.graph);
  if (std::filesystem::exists(dir / "partial.txt")) {
    inst.partial = parse_partial(read_file(dir / "partial.txt"), inst.graph);
  }
  try {
    detail::check_map_targets(inst);
  } catch (const std::logic_error& e) {
    throw ParseError(e.what(), 0);
  }
  return inst;
}

}  // namespace cfconn
