#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfconn/graph.hpp"

namespace cfconn {

using Color = int;

struct EdgeItems {
  static constexpr const char* name = "edge";
};
struct VertexItems {
  static constexpr const char* name = "vertex";
};

/// Total assignment of colors 1..k to a graph's edges or vertices. Colors
/// need not all be used.
template <class Items>
class Coloring {
 public:
  Coloring() = default;

  Coloring(int k, std::vector<Color> colors) : k_(k), colors_(std::move(colors)) {
    if (k < 1) throw std::invalid_argument("color count k must be at least 1");
    for (std::size_t i = 0; i < colors_.size(); ++i) {
      if (colors_[i] < 1 || colors_[i] > k) {
        throw std::invalid_argument(std::string(Items::name) + " " + std::to_string(i) + " has color " +
                                    std::to_string(colors_[i]) + " outside [1," + std::to_string(k) + "]");
      }
    }
  }

  /// k is taken to be the largest color present.
  static Coloring from_colors(std::vector<Color> colors) {
    const Color k = colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end());
    return Coloring(std::max(k, 1), std::move(colors));
  }

  int num_colors() const noexcept { return k_; }
  std::size_t size() const noexcept { return colors_.size(); }
  std::span<const Color> colors() const noexcept { return colors_; }
  Color operator[](std::size_t i) const { return colors_.at(i); }

  int used_colors() const {
    std::vector<char> seen(static_cast<std::size_t>(k_) + 1, 0);
    int count = 0;
    for (Color c : colors_) {
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        ++count;
      }
    }
    return count;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int k_ = 1;
  std::vector<Color> colors_;
};

using EdgeColoring = Coloring<EdgeItems>;
using VertexColoring = Coloring<VertexItems>;

inline void require_total(const Graph& g, const EdgeColoring& c) {
  if (c.size() != static_cast<std::size_t>(g.size())) {
    throw std::invalid_argument("partial coloring: " + std::to_string(c.size()) + " edge colors for " +
                                std::to_string(g.size()) + " edges");
  }
}

inline void require_total(const Graph& g, const VertexColoring& c) {
  if (c.size() != static_cast<std::size_t>(g.order())) {
    throw std::invalid_argument("partial coloring: " + std::to_string(c.size()) + " vertex colors for " +
                                std::to_string(g.order()) + " vertices");
  }
}

/// Unordered pair of distinct vertices, stored with u < v.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  static VertexPair of(Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("pair with equal endpoints: " + std::to_string(a));
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
  }
  friend constexpr auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Sorted set of unordered vertex pairs; iteration is lexicographic.
class PairSet {
 public:
  PairSet() = default;

  explicit PairSet(std::vector<VertexPair> pairs) : pairs_(std::move(pairs)) {
    for (auto& p : pairs_) p = VertexPair::of(p.u, p.v);
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  }

  PairSet(std::initializer_list<std::pair<int, int>> pairs) {
    for (auto [a, b] : pairs) pairs_.push_back(VertexPair::of(a, b));
    *this = PairSet(std::move(pairs_));
  }

  static PairSet all_pairs(int n) {
    std::vector<VertexPair> out;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) out.push_back({a, b});
    }
    return PairSet(std::move(out));
  }

  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t size() const noexcept { return pairs_.size(); }
  auto begin() const noexcept { return pairs_.begin(); }
  auto end() const noexcept { return pairs_.end(); }
  const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }
  const VertexPair& operator[](std::size_t i) const { return pairs_.at(i); }

  bool contains(Vertex a, Vertex b) const {
    if (a == b) return false;
    return std::binary_search(pairs_.begin(), pairs_.end(), VertexPair::of(a, b));
  }

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::vector<VertexPair> pairs_;
};

/// Relabels colors by order of first appearance, yielding the canonical
/// representative of the color-permutation class.
inline std::vector<Color> canonicalize(std::span<const Color> colors) {
  std::vector<Color> out(colors.size());
  std::vector<std::pair<Color, Color>> relabel;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    auto it = std::find_if(relabel.begin(), relabel.end(), [&](const auto& p) { return p.first == colors[i]; });
    if (it == relabel.end()) {
      relabel.emplace_back(colors[i], static_cast<Color>(relabel.size()) + 1);
      out[i] = static_cast<Color>(relabel.size());
    } else {
      out[i] = it->second;
    }
  }
  return out;
}

inline bool is_canonical(std::span<const Color> colors) {
  Color max_seen = 0;
  for (Color c : colors) {
    if (c < 1 || c > max_seen + 1) return false;
    max_seen = std::max(max_seen, c);
  }
  return true;
}

/// Advances to the next canonical coloring (restricted growth string) with
/// at most max_colors colors, in lexicographic order. Returns false after
/// the last one. Start from all ones.
inline bool next_canonical(std::vector<Color>& colors, int max_colors) {
  const std::size_t n = colors.size();
  if (n == 0) return false;
  std::vector<Color> prefix_max(n, 0);
  for (std::size_t i = 1; i < n; ++i) prefix_max[i] = std::max(prefix_max[i - 1], colors[i - 1]);
  for (std::size_t i = n; i-- > 1;) {
    if (colors[i] <= prefix_max[i] && colors[i] < max_colors) {
      ++colors[i];
      for (std::size_t j = i + 1; j < n; ++j) colors[j] = 1;
      return true;
    }
  }
  return false;
}

/// Visits every canonical coloring of `items` items using at most
/// max_colors colors, lexicographically. The visitor returns false to stop.
template <class Fn>
void for_each_canonical_coloring(std::size_t items, int max_colors, Fn&& fn) {
  std::vector<Color> colors(items, 1);
  if (items == 0) {
    fn(std::span<const Color>(colors));
    return;
  }
  do {
    if (!fn(std::span<const Color>(colors))) return;
  } while (next_canonical(colors, max_colors));
}

/// Number of canonical colorings of `items` items with at most max_colors
/// colors: sum of Stirling numbers of the second kind S(items, j), j <= max.
inline std::uint64_t count_canonical_colorings(int items, int max_colors) {
  std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(items) + 1,
                                            std::vector<std::uint64_t>(static_cast<std::size_t>(items) + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= items; ++i) {
    for (int j = 1; j <= i; ++j) {
      s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<std::uint64_t>(j) * s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] +
          s[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
  }
  std::uint64_t total = 0;
  for (int j = 0; j <= std::min(items, max_colors); ++j) {
    total += s[static_cast<std::size_t>(items)][static_cast<std::size_t>(j)];
  }
  return total;
}

inline bool is_proper_vertex_coloring(const Graph& g, const VertexColoring& c) {
  require_total(g, c);
  for (const Edge& e : g.edges()) {
    if (c[static_cast<std::size_t>(e.u)] == c[static_cast<std::size_t>(e.v)]) return false;
  }
  return true;
}

}  // namespace cfconn
