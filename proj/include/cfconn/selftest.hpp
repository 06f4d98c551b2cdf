#pragma once

// Acceptance suites. Each criterion returns one CriterionResult; a failing
// check records the first counterexample (lowest instance index) in the
// text formats of io.hpp.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cfconn/coloring.hpp"
#include "cfconn/generators.hpp"
#include "cfconn/graph.hpp"
#include "cfconn/io.hpp"
#include "cfconn/oracles.hpp"
#include "cfconn/reductions.hpp"
#include "cfconn/solvers.hpp"
#include "cfconn/verifiers.hpp"

namespace cfconn {

enum class Scale { quick, full };

inline Scale parse_scale(const std::string& s) {
  if (s == "quick") return Scale::quick;
  if (s == "full") return Scale::full;
  throw std::invalid_argument("scale must be quick or full, got '" + s + "'");
}

struct SelftestConfig {
  Scale scale = Scale::quick;
  std::uint64_t seed = 20240601;
  int threads = 0;  // 0: CFCONN_THREADS, else hardware concurrency
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool blocking = true;
  std::string summary;                       // per-suite counts
  std::optional<std::string> counterexample;  // serialized first failure
  double seconds = 0;
};

// Pinned numeric tolerances.
inline constexpr double kBoundSlack = 1e-9;           // real-valued tree bounds
inline constexpr double kScalingExponentLimit = 5.0;  // n^4 for m = 3n, plus a factor-2 band per doubling

namespace detail {

inline int worker_count(int requested) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("CFCONN_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, n);
}

/// Runs fn(i) for i in [0,count), interleaved across workers.
inline void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Failure bookkeeping shared by the workers; keeps the lowest index.
class Failures {
 public:
  void record(std::size_t index, std::string what) {
    std::lock_guard lock(mutex_);
    ++count_;
    if (!first_ || index < first_->first) first_ = {index, std::move(what)};
  }
  std::size_t count() const { return count_; }
  std::optional<std::string> first() const {
    if (!first_) return std::nullopt;
    return first_->second;
  }

 private:
  std::mutex mutex_;
  std::size_t count_ = 0;
  std::optional<std::pair<std::size_t, std::string>> first_;
};

inline std::vector<Graph> connected_graphs_upto(int lo, int hi) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      out.push_back(g);
      return true;
    });
  }
  return out;
}

inline int ceil_log2(int x) {
  int k = 0;
  while ((1 << k) < x) ++k;
  return k;
}

inline std::string describe_graph(const Graph& g) { return "graph:\n" + format_graph(g); }

template <class Items>
std::string describe(const Graph& g, const Coloring<Items>& c) {
  return describe_graph(g) + std::string(Items::name) + " coloring:\n" + format_coloring(c);
}

inline std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{seed, stream, index};
  return std::mt19937_64(seq);
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline CriterionResult finish(int id, std::string name, const Failures& f, std::string summary, const Stopwatch& w) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.pass = f.count() == 0;
  r.summary = std::move(summary) + " failures=" + std::to_string(f.count());
  r.counterexample = f.first();
  r.seconds = w.seconds();
  return r;
}

}  // namespace detail

/// 1. Path closed forms for cfc and vcfc.
inline CriterionResult criterion_closed_forms(const SelftestConfig&) {
  detail::Stopwatch watch;
  detail::Failures failures;
  int checked = 0;
  for (int n = 2; n <= 16; ++n, ++checked) {
    const auto r = solve_cfc(path_graph(n));
    const int want = detail::ceil_log2(n);
    if (r.status != SolveStatus::solved || r.value != want) {
      failures.record(static_cast<std::size_t>(n), "cfc(P" + std::to_string(n) + ") = " + std::to_string(r.value) +
                                                       ", expected " + std::to_string(want));
    }
  }
  for (int n = 2; n <= 10; ++n, ++checked) {
    const auto r = solve_vcfc(path_graph(n));
    const int want = detail::ceil_log2(n + 1);
    if (r.status != SolveStatus::solved || r.value != want) {
      failures.record(100 + static_cast<std::size_t>(n), "vcfc(P" + std::to_string(n) + ") = " +
                                                             std::to_string(r.value) + ", expected " + std::to_string(want));
    }
  }
  return detail::finish(1, "path closed forms cfc=ceil(log2 n), vcfc=ceil(log2(n+1))", failures,
                        "paths=" + std::to_string(checked), watch);
}

/// 2. Noncomplete 2-edge-connected graphs have cfc = 2.
inline CriterionResult criterion_two_edge_connected(const SelftestConfig& cfg) {
  detail::Stopwatch watch;
  detail::Failures failures;
  const int top = cfg.scale == Scale::full ? 6 : 5;
  const std::size_t sample = cfg.scale == Scale::full ? 200 : 20;
  std::vector<Graph> graphs;
  for (const Graph& g : detail::connected_graphs_upto(2, top)) {
    if (!is_complete(g) && is_two_edge_connected(g)) graphs.push_back(g);
  }
  const std::size_t exhaustive = graphs.size();
  std::mt19937_64 rng = detail::instance_rng(cfg.seed, 2, 0);
  std::uniform_real_distribution<double> density(0.25, 0.85);
  while (graphs.size() < exhaustive + sample) {
    Graph g = random_connected_gnp(7, density(rng), rng);
    if (!is_complete(g) && is_two_edge_connected(g)) graphs.push_back(std::move(g));
  }
  detail::parallel_for(graphs.size(), detail::worker_count(cfg.threads), [&](std::size_t i) {
    const auto r = solve_cfc(graphs[i]);
    if (r.status != SolveStatus::solved || r.value != 2) {
      failures.record(i, detail::describe_graph(graphs[i]) + "cfc = " + std::to_string(r.value));
    }
  });
  return detail::finish(2, "noncomplete 2-edge-connected => cfc=2", failures,
                        "exhaustive(n<=" + std::to_string(top) + ")=" + std::to_string(exhaustive) +
                            " sampled(n=7)=" + std::to_string(sample),
                        watch);
}

/// 3. vcfc = 2 iff 2-connected or exactly one cut vertex.
inline CriterionResult criterion_vcfc_two(const SelftestConfig& cfg) {
  detail::Stopwatch watch;
  detail::Failures failures;
  const int top = cfg.scale == Scale::full ? 6 : 5;
  const auto graphs = detail::connected_graphs_upto(3, top);
  std::atomic<int> two{0};
  detail::parallel_for(graphs.size(), detail::worker_count(cfg.threads), [&](std::size_t i) {
    const Graph& g = graphs[i];
    const auto r = solve_vcfc(g);
    const bool lhs = r.status == SolveStatus::solved && r.value == 2;
    const bool rhs = is_two_connected(g) || cut_vertices_and_blocks(g).cut_vertices.size() == 1;
    two += lhs;
    if (r.status != SolveStatus::solved || lhs != rhs) {
      failures.record(i, detail::describe_graph(g) + "vcfc = " + std::to_string(r.value) +
                             ", structural side = " + (rhs ? "true" : "false"));
    }
  });
  return detail::finish(3, "vcfc=2 <=> 2-connected or one cut vertex", failures,
                        "graphs(3<=n<=" + std::to_string(top) + ")=" + std::to_string(graphs.size()) +
                            " with_vcfc2=" + std::to_string(two.load()),
                        watch);
}

/// 4. Polynomial verifiers agree with the path-enumeration oracles.
inline CriterionResult criterion_oracle_equivalence(const SelftestConfig& cfg) {
  detail::Stopwatch watch;
  detail::Failures failures;
  const int threads = detail::worker_count(cfg.threads);
  const auto graphs = detail::connected_graphs_upto(1, 5);
  std::atomic<std::uint64_t> edge_pairs{0}, vertex_pairs{0};

  auto check_edge = [&](std::size_t index, const Graph& g, const EdgeColoring& c) {
    const bool cfc = verify_cfc_edge(g, c).ok;
    const bool scfc = verify_scfc(g, c).ok;
    if (cfc != oracle_cfc_edge(g, c)) failures.record(index, detail::describe(g, c) + "verify_cfc_edge disagrees");
    if (scfc != oracle_scfc(g, c)) failures.record(index, detail::describe(g, c) + "verify_scfc disagrees");
  };
  auto check_vertex = [&](std::size_t index, const Graph& g, const VertexColoring& c) {
    if (verify_cfc_vertex(g, c).ok != oracle_cfc_vertex(g, c)) {
      failures.record(index, detail::describe(g, c) + "verify_cfc_vertex disagrees");
    }
  };

  detail::parallel_for(graphs.size(), threads, [&](std::size_t i) {
    const Graph& g = graphs[i];
    for_each_canonical_coloring(static_cast<std::size_t>(g.size()), 3, [&](std::span<const Color> colors) {
      check_edge(i, g, EdgeColoring::from_colors({colors.begin(), colors.end()}));
      ++edge_pairs;
      return true;
    });
    for_each_canonical_coloring(static_cast<std::size_t>(g.order()), 3, [&](std::span<const Color> colors) {
      check_vertex(i, g, VertexColoring::from_colors({colors.begin(), colors.end()}));
      ++vertex_pairs;
      return true;
    });
  });

  const std::size_t per_order = cfg.scale == Scale::full ? 5000 : 500;
  const std::size_t samples = 2 * per_order;
  detail::parallel_for(samples, threads, [&](std::size_t s) {
    const int n = s < per_order ? 6 : 7;
    auto rng = detail::instance_rng(cfg.seed, 4, s);
    const Graph g = random_connected_gnp(n, std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng);
    auto random_canonical = [&](std::size_t items) {
      const int k = std::uniform_int_distribution<int>(1, 3)(rng);
      std::vector<Color> colors(items);
      for (auto& c : colors) c = std::uniform_int_distribution<int>(1, k)(rng);
      return canonicalize(colors);
    };
    const std::size_t index = graphs.size() + s;
    check_edge(index, g, EdgeColoring::from_colors(random_canonical(static_cast<std::size_t>(g.size()))));
    check_vertex(index, g, VertexColoring::from_colors(random_canonical(static_cast<std::size_t>(g.order()))));
  });
  return detail::finish(4, "verifiers agree with path-enumeration oracles", failures,
                        "exhaustive(n<=5,k<=3) edge=" + std::to_string(edge_pairs.load()) +
                            " vertex=" + std::to_string(vertex_pairs.load()) +
                            " sampled(n=6..7) per verifier=" + std::to_string(samples),
                        watch);
}

/// 5. Tree bounds and the vcfc path bound.
inline CriterionResult criterion_tree_bounds(const SelftestConfig& cfg) {
  detail::Stopwatch watch;
  detail::Failures failures;
  std::vector<Graph> trees;
  for (int n = 2; n <= 9; ++n) {
    for (Graph& t : free_trees(n)) trees.push_back(std::move(t));
  }
  std::atomic<int> with_big_degree{0};
  detail::parallel_for(trees.size(), detail::worker_count(cfg.threads), [&](std::size_t i) {
    const Graph& t = trees[i];
    const int n = t.order();
    const auto r = solve_cfc(t);
    const int cfc = r.value;
    if (r.status != SolveStatus::solved || cfc < detail::ceil_log2(n)) {
      failures.record(i, detail::describe_graph(t) + "cfc = " + std::to_string(cfc) + " < ceil(log2 n)");
      return;
    }
    const int delta = max_degree(t);
    if (delta < 3) return;
    ++with_big_degree;
    const double lower = std::max<double>(delta, std::log2(static_cast<double>(diameter(t))));
    const double upper = (delta - 2) * std::log2(static_cast<double>(n)) / (std::log2(static_cast<double>(delta)) - 1.0);
    if (cfc + kBoundSlack < lower || cfc > upper + kBoundSlack) {
      std::ostringstream msg;
      msg << "cfc = " << cfc << " outside [" << lower << ", " << upper << "]";
      failures.record(i, detail::describe_graph(t) + msg.str());
    }
  });
  const int top = cfg.scale == Scale::full ? 6 : 5;
  const auto graphs = detail::connected_graphs_upto(2, top);
  detail::parallel_for(graphs.size(), detail::worker_count(cfg.threads), [&](std::size_t i) {
    const Graph& g = graphs[i];
    const auto r = solve_vcfc(g);
    if (r.status != SolveStatus::solved || r.value > detail::ceil_log2(g.order() + 1)) {
      failures.record(trees.size() + i, detail::describe_graph(g) + "vcfc = " + std::to_string(r.value) +
                                            " > ceil(log2(n+1))");
    }
  });
  return detail::finish(5, "tree cfc bounds and vcfc <= ceil(log2(n+1))", failures,
                        "trees(n<=9, up to isomorphism)=" + std::to_string(trees.size()) +
                            " with_degree>=3=" + std::to_string(with_big_degree.load()) + " graphs(n<=" +
                            std::to_string(top) + ")=" + std::to_string(graphs.size()),
                        watch);
}

/// 6. rc = 2 iff diam = 2 and scfc = 2.
inline CriterionResult criterion_rainbow_two(const SelftestConfig& cfg) {
  detail::Stopwatch watch;
  detail::Failures failures;
  const int top = cfg.scale == Scale::full ? 6 : 5;
  const auto graphs = detail::connected_graphs_upto(2, top);
  std::atomic<int> rc_two{0};
  detail::parallel_for(graphs.size(), detail::worker_count(cfg.threads), [&](std::size_t i) {
    const Graph& g = graphs[i];
    SolveOptions capped;
    capped.max_colors = 2;  // deciding "= 2" only needs colorings with at most 2 colors
    const auto rc = solve_rc_small(g, capped);
    const auto scfc = solve_scfc(g, capped);
    if (rc.status == SolveStatus::inconclusive || scfc.status == SolveStatus::inconclusive) {
      failures.record(i, detail::describe_graph(g) + "search budget exhausted");
      return;
    }
    const bool lhs = rc.status == SolveStatus::solved && rc.value == 2;
    const bool rhs = diameter(g) == 2 && scfc.status == SolveStatus::solved && scfc.value == 2;
    rc_two += lhs;
    if (lhs != rhs) failures.record(i, detail::describe_graph(g) + "rc=2 is " + (lhs ? "true" : "false"));
  });
  return detail::finish(6, "rc=2 <=> diam=2 and scfc=2", failures,
                        "graphs(n<=" + std::to_string(top) + ")=" + std::to_string(graphs.size()) +
                            " with_rc2=" + std::to_string(rc_two.load()),
                        watch);
}

namespace detail {

/// Random 3-CNF over exactly `vars` variables, each in both polarities.
/// Uniform 3-CNF, resampled until every variable occurs in both polarities.
inline CnfFormula random_formula(std::mt19937_64& rng, int vars, int clauses) {
  if (vars < 3 || 3 * clauses < 2 * vars) {
    throw std::invalid_argument("random_formula: " + std::to_string(clauses) + " clauses cannot carry both polarities of " +
                                std::to_string(vars) + " variables");
  }
  for (;;) {
    CnfFormula f;
    f.num_vars = vars;
    std::vector<int> order(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    for (int j = 0; j < clauses; ++j) {
      std::shuffle(order.begin(), order.end(), rng);
      Clause c;
      for (std::size_t a = 0; a < 3; ++a) c[a] = {order[a], std::bernoulli_distribution(0.5)(rng)};
      f.clauses.push_back(c);
    }
    try {
      check_both_polarities(f);
      return f;
    } catch (const CnfError&) {
    }
  }
}

inline CnfFormula all_sign_patterns(int vars_used) {
  CnfFormula f;
  f.num_vars = vars_used;
  for (int mask = 0; mask < 8; ++mask) {
    f.clauses.push_back({Literal{1, (mask & 1) != 0}, Literal{2, (mask & 2) != 0}, Literal{3, (mask & 4) != 0}});
  }
  return f;
}

}  // namespace detail

/// 7. Reduction equivalences, exhaustive on both sides.
inline CriterionResult criterion_reductions(const SelftestConfig& cfg) {
  detail::Stopwatch watch;
  detail::Failures failures;
  const int threads = detail::worker_count(cfg.threads);
  std::ostringstream summary;

  // (a) 3-SAT against partial-extension existence.
  std::vector<CnfFormula> formulas;
  formulas.push_back(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"));
  {
    auto rng = detail::instance_rng(cfg.seed, 7, 0);
    while (formulas.size() < 60) {
      const int vars = std::uniform_int_distribution<int>(3, 4)(rng);
      const int clauses = std::uniform_int_distribution<int>((2 * vars + 2) / 3, 6)(rng);
      formulas.push_back(detail::random_formula(rng, vars, clauses));
    }
  }
  const std::size_t small_formulas = formulas.size();
  // No 3-CNF with at most 6 clauses is unsatisfiable, so the unsatisfiable
  // side is covered by larger extras.
  formulas.push_back(detail::all_sign_patterns(3));
  {
    CnfFormula f = detail::all_sign_patterns(3);
    f.num_vars = 4;
    f.clauses.push_back({Literal{1, true}, Literal{2, true}, Literal{4, true}});
    f.clauses.push_back({Literal{1, false}, Literal{3, true}, Literal{4, false}});
    formulas.push_back(f);
  }
  std::atomic<int> sat_count{0};
  detail::parallel_for(formulas.size(), threads, [&](std::size_t i) {
    const CnfFormula& f = formulas[i];
    const auto inst = reduce_3sat_to_partial2(f);
    const int l = static_cast<int>(f.clauses.size()), n = f.num_vars;
    if (inst.graph.order() != l + n + 1 || inst.graph.size() != 3 * l + n + l * (l - 1) / 2 + n * (n - 1) / 2 ||
        inst.partial->unassigned().size() != static_cast<std::size_t>(n)) {
      failures.record(i, to_dimacs(f) + "gadget size mismatch");
      return;
    }
    bool extension_found = false;
    for_each_extension(*inst.partial, [&](const EdgeColoring& full) {
      const bool served = verify_scfc_subset(inst.graph, full, inst.pairs).ok;
      const Assignment a = extract_sat_assignment(inst, full);
      if (served != satisfies(f, a)) {
        failures.record(i, to_dimacs(f) + "extension and extracted assignment disagree");
        return false;
      }
      extension_found = extension_found || served;
      return true;
    });
    const bool sat = solve_3sat_bruteforce(f).has_value();
    sat_count += sat;
    if (sat != extension_found) failures.record(i, to_dimacs(f) + "satisfiable=" + std::to_string(sat));
  });
  summary << "(a) formulas=" << small_formulas << "+" << formulas.size() - small_formulas
          << " unsat-extras satisfiable=" << sat_count.load();

  // (b) k-vertex-colorability against the star subset problem.
  const int top = cfg.scale == Scale::full ? 6 : 5;
  const auto graphs = detail::connected_graphs_upto(1, top);
  const std::size_t offset_b = 1000;
  std::atomic<int> colorable{0};
  detail::parallel_for(graphs.size(), threads, [&](std::size_t i) {
    const Graph& g = graphs[i];
    for (int k : {3, 4}) {
      const auto inst = reduce_kcolor_to_subset(g, k);
      const bool lhs = find_vertex_coloring(g, k).has_value();
      const auto witness = decide_subset_scfc(inst.graph, inst.pairs, k);
      colorable += lhs;
      if (lhs != witness.has_value()) {
        failures.record(offset_b + i, detail::describe_graph(g) + "k=" + std::to_string(k) + " colorable=" +
                                          std::to_string(lhs));
      } else if (witness && !is_proper_vertex_coloring(g, extract_vertex_coloring(inst, *witness))) {
        failures.record(offset_b + i, detail::describe_graph(g) + "extracted vertex coloring is improper");
      }
    }
  });
  summary << " (b) graphs(n<=" << top << ")x{3,4}=" << 2 * graphs.size() << " colorable=" << colorable.load();

  // (c) star subset against strong conflict-free connectivity of the gadget.
  struct StarCase {
    int leaves;
    PairSet p;
  };
  std::vector<StarCase> stars;
  for (int leaves = 1; leaves <= 4; ++leaves) {
    std::vector<VertexPair> all;
    for (int a = 1; a <= leaves; ++a) {
      for (int b = a + 1; b <= leaves; ++b) all.push_back({a, b});
    }
    for (std::uint32_t mask = 0; mask < (1U << all.size()); ++mask) {
      std::vector<VertexPair> chosen;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((mask >> i) & 1U) chosen.push_back(all[i]);
      }
      stars.push_back({leaves, PairSet(chosen)});
    }
  }
  const std::size_t offset_c = 2'000'000;
  std::atomic<int> star_yes{0}, direct_checked{0};
  constexpr int kDirectSearchEdges = 40;  // gadgets small enough for a direct exhaustive scfc search
  detail::parallel_for(stars.size(), threads, [&](std::size_t i) {
    const Graph star = star_graph(stars[i].leaves);
    const PairSet& p = stars[i].p;
    const auto inst = reduce_subset_star_to_scfc(star, p);
    const std::string label = detail::describe_graph(star) + "pairs:\n" + format_pairs(p);
    const auto witness = decide_subset_scfc(star, p, 3);
    bool rhs = false;
    if (witness) {
      ++star_yes;
      const EdgeColoring forward = forward_color_subset_star(inst, *witness);
      rhs = forward.used_colors() <= 3 && verify_scfc(inst.graph, forward).ok;
      if (!verify_scfc_subset(star, extract_star_coloring(inst, forward), p).ok) {
        failures.record(offset_c + i, label + "extracted star coloring fails");
      }
    }
    if (!witness || inst.graph.size() <= kDirectSearchEdges) {
      SolveOptions capped;
      capped.max_colors = 3;
      const auto direct = solve_scfc(inst.graph, capped);
      ++direct_checked;
      if (direct.status == SolveStatus::inconclusive) {
        failures.record(offset_c + i, label + "direct gadget search ran out of budget");
        return;
      }
      const bool direct_yes = direct.status == SolveStatus::solved;
      if (witness && !direct_yes) failures.record(offset_c + i, label + "forward witness exists but search says scfc>3");
      rhs = rhs || direct_yes;
      if (direct_yes &&
          !verify_scfc_subset(star, extract_star_coloring(inst, *direct.witness), p).ok) {
        failures.record(offset_c + i, label + "star coloring extracted from gadget witness fails");
      }
    }
    if (witness.has_value() != rhs) {
      failures.record(offset_c + i, label + "subset=" + std::to_string(witness.has_value()) + " gadget=" +
                                        std::to_string(rhs));
    }
  });
  summary << " (c) star cases=" << stars.size() << " yes=" << star_yes.load()
          << " direct-searched=" << direct_checked.load();

  // (d) partial-coloring extension against the 2-subset instance.
  struct PartialCase {
    std::size_t host;
    PartialEdgeColoring partial;
  };
  const auto hosts = detail::connected_graphs_upto(2, 4);
  std::vector<PartialCase> cases;
  for (std::size_t h = 0; h < hosts.size(); ++h) {
    const auto m = static_cast<std::size_t>(hosts[h].size());
    cases.push_back({h, PartialEdgeColoring(m)});
    for (std::size_t e = 0; e < m; ++e) {
      for (int b = 0; b < 2; ++b) {
        PartialEdgeColoring one(m);
        one.assign(e, b);
        cases.push_back({h, one});
        for (std::size_t f = e + 1; f < m; ++f) {
          for (int c = 0; c < 2; ++c) {
            PartialEdgeColoring two = one;
            two.assign(f, c);
            cases.push_back({h, two});
          }
        }
      }
    }
  }
  const std::size_t offset_d = 3'000'000;
  std::atomic<int> extendable{0};
  detail::parallel_for(cases.size(), threads, [&](std::size_t i) {
    const Graph& host = hosts[cases[i].host];
    const PartialEdgeColoring& partial = cases[i].partial;
    const std::string label = detail::describe_graph(host) + "partial:\n" + format_partial(partial);
    bool lhs = false;
    for_each_extension(partial, [&](const EdgeColoring& c) {
      lhs = verify_scfc(host, c).ok;
      return !lhs;
    });
    extendable += lhs;
    const auto inst = reduce_partial2_to_subset(host, partial);
    const std::size_t h = partial.assigned_count();
    const int r = chain_length(host.order());
    if (inst.graph.order() != host.order() + 3 + static_cast<int>(h) * (r + 1) ||
        inst.pairs.size() != 1 + static_cast<std::size_t>(host.order() * (host.order() - 1) / 2) +
                                 h * static_cast<std::size_t>(r + 3)) {
      failures.record(offset_d + i, label + "gadget size mismatch");
      return;
    }
    const auto witness = decide_subset_scfc(inst.graph, inst.pairs, 2);
    if (lhs != witness.has_value()) {
      failures.record(offset_d + i, label + "extendable=" + std::to_string(lhs));
      return;
    }
    if (witness) {
      const EdgeColoring back = extract_partial_extension(inst, *witness);
      if (!partial.extended_by(back) || !verify_scfc(host, back).ok) {
        failures.record(offset_d + i, label + "extracted host coloring is not a valid extension");
      }
    }
  });
  summary << " (d) hosts(n<=4)=" << hosts.size() << " partial cases=" << cases.size()
          << " extendable=" << extendable.load();

  return detail::finish(7, "reduction equivalences", failures, summary.str(), watch);
}

/// 8. verify_scfc running time on random graphs with m = 3n.
inline CriterionResult criterion_scaling(const SelftestConfig& cfg) {
  detail::Stopwatch watch;
  detail::Failures failures;
  const std::vector<int> orders{20, 40, 80};
  constexpr int kRepeats = 3;
  std::vector<double> xs, ys;
  std::ostringstream summary;
  for (int n : orders) {
    double best = 1e300;
    for (int rep = 0; rep < kRepeats; ++rep) {
      const Graph g = random_connected(n, 3 * n, cfg.seed + static_cast<std::uint64_t>(n * 10 + rep));
      std::vector<Color> colors(static_cast<std::size_t>(g.size()));
      for (std::size_t e = 0; e < colors.size(); ++e) colors[e] = static_cast<Color>(e) + 1;
      const EdgeColoring rainbow(g.size(), colors);
      detail::Stopwatch t;
      const bool ok = verify_scfc(g, rainbow).ok;
      best = std::min(best, t.seconds());
      if (!ok) failures.record(static_cast<std::size_t>(n), detail::describe_graph(g) + "rainbow coloring rejected");
    }
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(std::max(best, 1e-7)));
    summary << "n=" << n << ":" << best << "s ";
  }
  const double mx = (xs[0] + xs[1] + xs[2]) / 3, my = (ys[0] + ys[1] + ys[2]) / 3;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double exponent = sxy / sxx;
  summary << "fitted exponent=" << exponent << " limit=" << kScalingExponentLimit;
  if (exponent > kScalingExponentLimit) failures.record(0, "fitted exponent " + std::to_string(exponent));
  return detail::finish(8, "verify_scfc scaling (m=3n)", failures, summary.str(), watch);
}

inline std::vector<std::function<CriterionResult(const SelftestConfig&)>> all_criteria() {
  return {criterion_closed_forms,       criterion_two_edge_connected, criterion_vcfc_two,
          criterion_oracle_equivalence, criterion_tree_bounds,        criterion_rainbow_two,
          criterion_reductions,         criterion_scaling};
}

inline std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " [" << r.summary << "] ("
      << r.seconds << "s)";
  if (!r.pass && r.counterexample) out << "\n  first counterexample:\n" << *r.counterexample;
  return out.str();
}

/// Runs the selected criteria (all when empty), printing one line each.
inline bool run_selftest(const SelftestConfig& cfg, std::ostream& out, const std::vector<int>& only = {}) {
  bool all_pass = true;
  const auto criteria = all_criteria();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const CriterionResult r = criteria[i](cfg);
    out << format_result(r) << std::endl;
    all_pass = all_pass && (r.pass || !r.blocking);
  }
  return all_pass;
}

}  // namespace cfconn
