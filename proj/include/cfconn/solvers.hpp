#pragma once

// Exact connection numbers by canonical enumeration of colorings.
//
// Colorings are enumerated as restricted growth strings (item 0 gets color 1,
// item i gets at most 1 + the largest color used before it), which picks one
// representative per color permutation. The enumeration is a depth-first
// search in lexicographic order. A pair whose relevant items (those lying on
// some admissible u-v path) are all colored is checked as soon as the last of
// them is assigned: items not yet colored carry fresh, pairwise distinct
// colors, which can only help the pair, so a failure there holds for every
// completion and the subtree is cut. Every complete coloring that survives is
// run through the full verifier.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfconn/coloring.hpp"
#include "cfconn/graph.hpp"
#include "cfconn/oracles.hpp"
#include "cfconn/verifiers.hpp"

namespace cfconn {

enum class SolveStatus {
  solved,       // value is exact
  above_limit,  // every coloring with at most max_colors colors fails
  inconclusive  // budget ran out; see the bounds
};

template <class ColoringT>
struct SolveResult {
  SolveStatus status = SolveStatus::solved;
  int value = 0;
  std::optional<ColoringT> witness;
  int lower_bound = 0;
  int upper_bound = 0;
  std::uint64_t verifier_calls = 0;
};

struct SolveOptions {
  std::uint64_t budget = 20'000'000;  // verifier calls, pair checks included
  int max_colors = 0;                 // 0 means no cap
};

class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t calls)
      : std::runtime_error("search budget exhausted after " + std::to_string(calls) + " verifier calls"),
        calls_(calls) {}
  std::uint64_t calls() const noexcept { return calls_; }

 private:
  std::uint64_t calls_;
};

namespace detail {

/// Pairs to satisfy and, for each item index, the pairs whose last relevant
/// item it is.
struct PairPlan {
  std::vector<VertexPair> pairs;
  std::vector<int> ready_at_start;
  std::vector<std::vector<int>> ready_at;
};

template <class RelevantItems>
PairPlan make_plan(std::size_t items, std::vector<VertexPair> pairs, RelevantItems&& relevant) {
  PairPlan plan;
  plan.pairs = std::move(pairs);
  plan.ready_at.assign(items, {});
  for (std::size_t i = 0; i < plan.pairs.size(); ++i) {
    const std::vector<int> rel = relevant(plan.pairs[i]);
    if (rel.empty()) {
      plan.ready_at_start.push_back(static_cast<int>(i));
    } else {
      plan.ready_at[static_cast<std::size_t>(*std::max_element(rel.begin(), rel.end()))].push_back(
          static_cast<int>(i));
    }
  }
  return plan;
}

enum class SearchOutcome { found, exhausted, out_of_budget };

/// Depth-first canonical search. PairTest(colors, classes, pair) and
/// FullTest(colors) are the verifier hooks.
template <class PairTest, class FullTest>
class CanonicalSearch {
 public:
  CanonicalSearch(std::size_t items, const PairPlan& plan, PairTest pair_test, FullTest full_test,
                  std::uint64_t budget)
      : items_(items), plan_(&plan), pair_test_(std::move(pair_test)), full_test_(std::move(full_test)),
        budget_(budget) {}

  /// Colorings with at most k colors, or exactly k when `exact`.
  SearchOutcome run(int k, bool exact) {
    k_ = k;
    exact_ = exact;
    out_of_budget_ = false;
    work_.resize(items_);
    for (std::size_t i = 0; i < items_; ++i) work_[i] = fresh(i);
    if (!plan_->ready_at_start.empty()) {
      const ColorClasses classes(work_);
      for (int p : plan_->ready_at_start) {
        if (!charge()) return SearchOutcome::out_of_budget;
        if (!pair_test_(std::span<const Color>(work_), classes, plan_->pairs[static_cast<std::size_t>(p)])) {
          return SearchOutcome::exhausted;
        }
      }
    }
    if (dfs(0, 0)) return SearchOutcome::found;
    return out_of_budget_ ? SearchOutcome::out_of_budget : SearchOutcome::exhausted;
  }

  const std::vector<Color>& witness() const noexcept { return work_; }
  std::uint64_t calls() const noexcept { return calls_; }

 private:
  Color fresh(std::size_t i) const { return static_cast<Color>(k_ + 1 + static_cast<int>(i)); }

  bool charge() {
    if (calls_ >= budget_) {
      out_of_budget_ = true;
      return false;
    }
    ++calls_;
    return true;
  }

  bool dfs(std::size_t i, int max_used) {
    if (i == items_) {
      if (!charge()) return false;
      return full_test_(std::span<const Color>(work_));
    }
    const int top = std::min(max_used + 1, k_);
    const int remaining = static_cast<int>(items_ - i - 1);
    const auto& ready = plan_->ready_at[i];
    for (int c = 1; c <= top; ++c) {
      const int next_max = std::max(max_used, c);
      if (exact_ && k_ - next_max > remaining) continue;
      work_[i] = c;
      bool alive = true;
      if (!ready.empty()) {
        const ColorClasses classes(work_);
        for (int p : ready) {
          if (!charge()) {
            work_[i] = fresh(i);
            return false;
          }
          if (!pair_test_(std::span<const Color>(work_), classes, plan_->pairs[static_cast<std::size_t>(p)])) {
            alive = false;
            break;
          }
        }
      }
      if (alive && dfs(i + 1, next_max)) return true;
      if (out_of_budget_) break;
    }
    work_[i] = fresh(i);
    return false;
  }

  std::size_t items_;
  const PairPlan* plan_;
  PairTest pair_test_;
  FullTest full_test_;
  std::uint64_t budget_;
  std::uint64_t calls_ = 0;
  int k_ = 1;
  bool exact_ = false;
  bool out_of_budget_ = false;
  std::vector<Color> work_;
};

template <class ColoringT, class Search>
SolveResult<ColoringT> deepen(Search& search, std::size_t items, const SolveOptions& opts) {
  SolveResult<ColoringT> result;
  const int trivial_upper = static_cast<int>(std::max<std::size_t>(items, 1));
  result.upper_bound = trivial_upper;
  for (int k = 1; k <= trivial_upper; ++k) {
    if (opts.max_colors > 0 && k > opts.max_colors) {
      result.status = SolveStatus::above_limit;
      result.lower_bound = k;
      result.verifier_calls = search.calls();
      return result;
    }
    const SearchOutcome outcome = search.run(k, /*exact=*/true);
    if (outcome == SearchOutcome::found) {
      result.status = SolveStatus::solved;
      result.value = k;
      result.lower_bound = result.upper_bound = k;
      result.witness = ColoringT(k, search.witness());
      result.verifier_calls = search.calls();
      return result;
    }
    if (outcome == SearchOutcome::out_of_budget) {
      result.status = SolveStatus::inconclusive;
      result.lower_bound = k;
      result.verifier_calls = search.calls();
      return result;
    }
  }
  throw std::logic_error("no coloring passed, not even with all colors distinct");
}

inline std::vector<VertexPair> all_pair_list(int n) { return PairSet::all_pairs(n).pairs(); }

inline void require_solvable(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("connection numbers need at least two vertices");
  require_connected(g);
}

template <class Checker>
auto pair_hook(Checker& checker) {
  return [&checker](std::span<const Color> colors, const ColorClasses& classes, const VertexPair& p) {
    return checker.pair_ok(colors, classes, p.u, p.v);
  };
}

template <class Checker>
auto full_hook(Checker& checker, const std::vector<VertexPair>& pairs) {
  return [&checker, &pairs](std::span<const Color> colors) {
    return scan_pairs(colors, checker, pairs, VerifyOptions{}).ok;
  };
}

inline void confirm(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("solver witness rejected by ") + what);
}

}  // namespace detail

/// cfc(G): fewest colors for a conflict-free connected edge coloring.
inline SolveResult<EdgeColoring> solve_cfc(const Graph& g, const SolveOptions& opts = {}) {
  detail::require_solvable(g);
  const auto plan = detail::make_plan(static_cast<std::size_t>(g.size()), detail::all_pair_list(g.order()),
                                      [&](const VertexPair& p) { return edges_on_some_path(g, p.u, p.v); });
  CfcEdgeChecker pair_checker(g), full_checker(g);
  detail::CanonicalSearch search(static_cast<std::size_t>(g.size()), plan, detail::pair_hook(pair_checker),
                                 detail::full_hook(full_checker, plan.pairs), opts.budget);
  auto result = detail::deepen<EdgeColoring>(search, static_cast<std::size_t>(g.size()), opts);
  if (result.witness) detail::confirm(verify_cfc_edge(g, *result.witness).ok, "verify_cfc_edge");
  return result;
}

/// vcfc(G): fewest colors for a conflict-free vertex-connected vertex coloring.
inline SolveResult<VertexColoring> solve_vcfc(const Graph& g, const SolveOptions& opts = {}) {
  detail::require_solvable(g);
  const auto plan = detail::make_plan(static_cast<std::size_t>(g.order()), detail::all_pair_list(g.order()),
                                      [&](const VertexPair& p) { return vertices_on_some_path(g, p.u, p.v); });
  CfcVertexChecker pair_checker(g), full_checker(g);
  detail::CanonicalSearch search(static_cast<std::size_t>(g.order()), plan, detail::pair_hook(pair_checker),
                                 detail::full_hook(full_checker, plan.pairs), opts.budget);
  auto result = detail::deepen<VertexColoring>(search, static_cast<std::size_t>(g.order()), opts);
  if (result.witness) detail::confirm(verify_cfc_vertex(g, *result.witness).ok, "verify_cfc_vertex");
  return result;
}

/// scfc(G): fewest colors for a strongly conflict-free connected coloring.
inline SolveResult<EdgeColoring> solve_scfc(const Graph& g, const SolveOptions& opts = {}) {
  detail::require_solvable(g);
  const auto plan = detail::make_plan(static_cast<std::size_t>(g.size()), detail::all_pair_list(g.order()),
                                      [&](const VertexPair& p) { return edges_on_shortest_paths(g, p.u, p.v); });
  ScfcChecker pair_checker(g), full_checker(g);
  detail::CanonicalSearch search(static_cast<std::size_t>(g.size()), plan, detail::pair_hook(pair_checker),
                                 detail::full_hook(full_checker, plan.pairs), opts.budget);
  auto result = detail::deepen<EdgeColoring>(search, static_cast<std::size_t>(g.size()), opts);
  if (result.witness) detail::confirm(verify_scfc(g, *result.witness).ok, "verify_scfc");
  return result;
}

/// rc(G) on small graphs, with the rainbow path oracle as the filter.
inline SolveResult<EdgeColoring> solve_rc_small(const Graph& g, const SolveOptions& opts = {},
                                                const OracleLimits& limits = {}) {
  detail::check_oracle_guard(g, limits);
  detail::require_solvable(g);
  const auto plan = detail::make_plan(static_cast<std::size_t>(g.size()), detail::all_pair_list(g.order()),
                                      [&](const VertexPair& p) { return edges_on_some_path(g, p.u, p.v); });
  auto pair_test = [&g](std::span<const Color> colors, const ColorClasses&, const VertexPair& p) {
    return oracle::rainbow_pair(g, colors, p.u, p.v);
  };
  auto full_test = [&g, &plan](std::span<const Color> colors) {
    return std::all_of(plan.pairs.begin(), plan.pairs.end(),
                       [&](const VertexPair& p) { return oracle::rainbow_pair(g, colors, p.u, p.v); });
  };
  detail::CanonicalSearch search(static_cast<std::size_t>(g.size()), plan, pair_test, full_test, opts.budget);
  auto result = detail::deepen<EdgeColoring>(search, static_cast<std::size_t>(g.size()), opts);
  if (result.witness) detail::confirm(oracle_rainbow_connected(g, *result.witness, limits), "the rainbow oracle");
  return result;
}

/// Is there an edge coloring with at most k colors under which every pair in
/// p has a conflict-free shortest path? Returns the lexicographically least
/// canonical witness, or nullopt once the search space is exhausted.
inline std::optional<EdgeColoring> decide_subset_scfc(const Graph& g, const PairSet& p, int k,
                                                      const SolveOptions& opts = {}) {
  if (k < 1) throw std::invalid_argument("color count k must be at least 1");
  detail::check_pairs_in_range(g, p);
  const auto plan = detail::make_plan(static_cast<std::size_t>(g.size()), p.pairs(),
                                      [&](const VertexPair& q) { return edges_on_shortest_paths(g, q.u, q.v); });
  ScfcChecker pair_checker(g), full_checker(g);
  detail::CanonicalSearch search(static_cast<std::size_t>(g.size()), plan, detail::pair_hook(pair_checker),
                                 detail::full_hook(full_checker, plan.pairs), opts.budget);
  switch (search.run(k, /*exact=*/false)) {
    case detail::SearchOutcome::found: {
      EdgeColoring witness(k, search.witness());
      detail::confirm(verify_scfc_subset(g, witness, p).ok, "verify_scfc_subset");
      return witness;
    }
    case detail::SearchOutcome::exhausted: return std::nullopt;
    case detail::SearchOutcome::out_of_budget: break;
  }
  throw BudgetExhausted(search.calls());
}

}  // namespace cfconn
