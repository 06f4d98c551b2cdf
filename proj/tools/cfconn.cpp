// Command-line front end.
//
// Exit codes: 0 success / verdict true, 1 verdict false, 2 usage or parse
// error, 3 search budget exhausted.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "cfconn/cfconn.hpp"
#include "cfconn/selftest.hpp"

namespace fs = std::filesystem;
using namespace cfconn;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string graph, coloring, pairs, partial, cnf, mode, kind, family, out, instance, scale = "quick";
  int k = 0;
  int n = 0;
  int max_colors = 0;
  int threads = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::uint64_t budget = 2'000'000;
  bool audit = false;
  std::vector<int> criteria;
};

Graph load_graph(const Args& a) {
  if (a.graph.empty()) throw UsageError("--graph is required");
  return parse_graph(read_file(a.graph));
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

std::string pair_text(const std::optional<VertexPair>& p) {
  return p ? std::to_string(p->u) + "," + std::to_string(p->v) : "none";
}

int cmd_verify(const Args& a) {
  const Graph g = load_graph(a);
  if (a.coloring.empty()) throw UsageError("--coloring is required");
  const std::string text = read_file(a.coloring);
  const VerifyOptions opts{a.audit};
  VerifyReport report;
  if (a.mode == "cfc") {
    report = verify_cfc_edge(g, parse_edge_coloring(text, g), opts);
  } else if (a.mode == "vcfc") {
    report = verify_cfc_vertex(g, parse_vertex_coloring(text, g), opts);
  } else if (a.mode == "scfc") {
    report = verify_scfc(g, parse_edge_coloring(text, g), opts);
  } else if (a.mode == "scfc-subset") {
    if (a.pairs.empty()) throw UsageError("--pairs is required for scfc-subset");
    report = verify_scfc_subset(g, parse_edge_coloring(text, g), parse_pairs(read_file(a.pairs), g), opts);
  } else {
    throw UsageError("unknown mode '" + a.mode + "'");
  }
  if (report.ok) {
    std::cout << "OK\n";
    for (const Certificate& c : report.audit) {
      std::cout << "pair " << c.pair.u << "," << c.pair.v << " certified by " << (a.mode == "vcfc" ? "vertex " : "edge ")
                << c.element << " color " << c.color << " from " << c.source << "\n";
    }
  } else {
    std::cout << "FAIL pair " << pair_text(report.witness_pair) << " has no conflict-free "
              << (a.mode.starts_with("scfc") ? "shortest " : "") << "path\n";
  }
  std::cout << "verdict=" << (report.ok ? "true" : "false") << " witness=" << pair_text(report.witness_pair) << "\n";
  return report.ok ? kOk : kFalse;
}

template <class ColoringT>
int report_solve(const Args& a, const SolveResult<ColoringT>& r) {
  switch (r.status) {
    case SolveStatus::solved:
      std::cout << "value=" << r.value << " calls=" << r.verifier_calls << "\n";
      if (!a.out.empty()) emit(a.out, format_coloring(*r.witness));
      return kOk;
    case SolveStatus::above_limit:
      std::cout << "above_limit value>" << a.max_colors << " calls=" << r.verifier_calls << "\n";
      return kFalse;
    case SolveStatus::inconclusive:
      std::cout << "inconclusive bounds=[" << r.lower_bound << "," << r.upper_bound << "] calls=" << r.verifier_calls
                << "\n";
      return kBudget;
  }
  return kUsage;
}

int cmd_solve(const Args& a) {
  const Graph g = load_graph(a);
  SolveOptions opts;
  opts.budget = a.budget;
  opts.max_colors = a.max_colors;
  if (a.mode == "cfc") return report_solve(a, solve_cfc(g, opts));
  if (a.mode == "vcfc") return report_solve(a, solve_vcfc(g, opts));
  if (a.mode == "scfc") return report_solve(a, solve_scfc(g, opts));
  if (a.mode == "rc") return report_solve(a, solve_rc_small(g, opts));
  throw UsageError("unknown mode '" + a.mode + "'");
}

int cmd_decide(const Args& a) {
  const Graph g = load_graph(a);
  if (a.pairs.empty()) throw UsageError("--pairs is required");
  if (a.k < 1) throw UsageError("--k must be at least 1");
  SolveOptions opts;
  opts.budget = a.budget;
  const auto witness = decide_subset_scfc(g, parse_pairs(read_file(a.pairs), g), a.k, opts);
  std::cout << "verdict=" << (witness ? "true" : "false") << "\n";
  if (witness && !a.out.empty()) emit(a.out, format_coloring(*witness));
  return witness ? kOk : kFalse;
}

int cmd_reduce(const Args& a) {
  if (a.out.empty()) throw UsageError("--out <dir> is required");
  ReductionInstance inst;
  std::string extra;
  switch (parse_reduction_kind(a.kind)) {
    case ReductionKind::sat2partial: {
      if (a.cnf.empty()) throw UsageError("--cnf is required");
      inst = reduce_3sat_to_partial2(parse_dimacs_cnf(read_file(a.cnf)));
      extra = " uncolored=" + std::to_string(inst.partial->unassigned().size());
      break;
    }
    case ReductionKind::partial2subset: {
      const Graph g = load_graph(a);
      if (a.partial.empty()) throw UsageError("--partial is required");
      inst = reduce_partial2_to_subset(g, parse_partial(read_file(a.partial), g));
      extra = " P=" + std::to_string(inst.pairs.size()) + " r=" + std::to_string(chain_length(g.order()));
      break;
    }
    case ReductionKind::kcolor2subset: {
      if (a.k < 1) throw UsageError("--k must be at least 1");
      inst = reduce_kcolor_to_subset(load_graph(a), a.k);
      extra = " P=" + std::to_string(inst.pairs.size()) + " k=" + std::to_string(a.k);
      break;
    }
    case ReductionKind::star2scfc: {
      const Graph star = load_graph(a);
      const PairSet p = a.pairs.empty() ? PairSet{} : parse_pairs(read_file(a.pairs), star);
      inst = reduce_subset_star_to_scfc(star, p);
      extra = " bipartite=" + std::string(is_bipartite(inst.graph) ? "true" : "false");
      break;
    }
  }
  write_instance(a.out, inst);
  std::cout << "V'=" << inst.graph.order() << " E'=" << inst.graph.size() << extra << "\n";
  return kOk;
}

int cmd_extract(const Args& a) {
  if (a.instance.empty() || a.coloring.empty()) throw UsageError("--instance and --coloring are required");
  const ReductionInstance inst = read_instance(a.instance);
  const EdgeColoring c = parse_edge_coloring(read_file(a.coloring), inst.graph);
  switch (inst.kind) {
    case ReductionKind::sat2partial: {
      const Assignment x = extract_sat_assignment(inst, c);
      std::string bits;
      for (bool b : x) bits += b ? '1' : '0';
      const bool served = verify_scfc_subset(inst.graph, c, inst.pairs).ok;
      std::cout << "assignment=" << bits << " apex_pairs_served=" << (served ? "true" : "false") << "\n";
      return served ? kOk : kFalse;
    }
    case ReductionKind::kcolor2subset: {
      const VertexColoring vc = extract_vertex_coloring(inst, c);
      const bool served = verify_scfc_subset(inst.graph, c, inst.pairs).ok;
      emit(a.out, format_coloring(vc));
      std::cout << "pairs_served=" << (served ? "true" : "false") << "\n";
      return served ? kOk : kFalse;
    }
    case ReductionKind::partial2subset: {
      const EdgeColoring host = extract_partial_extension(inst, c);
      const bool served = verify_scfc_subset(inst.graph, c, inst.pairs).ok;
      emit(a.out, format_coloring(host));
      std::cout << "pairs_served=" << (served ? "true" : "false") << "\n";
      return served ? kOk : kFalse;
    }
    case ReductionKind::star2scfc: {
      const EdgeColoring star = extract_star_coloring(inst, c);
      const bool ok = verify_scfc_subset(source_star(inst), star, inst.pairs).ok;
      emit(a.out, format_coloring(star));
      std::cout << "pairs_served=" << (ok ? "true" : "false") << "\n";
      return ok ? kOk : kFalse;
    }
  }
  return kUsage;
}

int cmd_forward(const Args& a) {
  if (a.instance.empty() || a.coloring.empty()) throw UsageError("--instance and --coloring are required");
  const ReductionInstance inst = read_instance(a.instance);
  if (inst.kind != ReductionKind::star2scfc) throw UsageError("forward coloring exists for star2scfc instances only");
  const EdgeColoring full = forward_color_subset_star(inst, parse_edge_coloring(read_file(a.coloring), source_star(inst)));
  const bool ok = verify_scfc(inst.graph, full).ok;
  emit(a.out, format_coloring(full));
  std::cout << "verdict=" << (ok ? "true" : "false") << "\n";
  return ok ? kOk : kFalse;
}

int cmd_generate(const Args& a) {
  FamilyParams params;
  params.family = parse_family(a.family);
  params.n = a.n;
  params.p = a.p;
  params.seed = a.seed;
  const std::vector<Graph> graphs = generate_family(params);
  if (graphs.size() == 1) {
    emit(a.out, format_graph(graphs.front()));
    return kOk;
  }
  if (a.out.empty()) {
    for (std::size_t i = 0; i < graphs.size(); ++i) std::cout << "# graph " << i << "\n" << format_graph(graphs[i]);
  } else {
    fs::create_directories(a.out);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      write_file(fs::path(a.out) / ("graph_" + std::to_string(i) + ".txt"), format_graph(graphs[i]));
    }
  }
  std::cerr << "generated " << graphs.size() << " graphs\n";
  return kOk;
}

int cmd_selftest(const Args& a) {
  SelftestConfig cfg;
  cfg.scale = parse_scale(a.scale);
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  const bool ok = run_selftest(cfg, std::cout, a.criteria);
  std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cfconn: conflict-free connectivity of colored graphs"};
  app.require_subcommand(1);
  Args a;
  int code = kUsage;

  auto add_graph = [&](CLI::App* c) { c->add_option("--graph", a.graph, "edge-list graph file"); };
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", a.budget, "search budget in verifier calls")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "check a coloring");
  add_graph(verify);
  verify->add_option("--coloring", a.coloring, "coloring file");
  verify->add_option("--mode", a.mode, "cfc | vcfc | scfc | scfc-subset")->required();
  verify->add_option("--pairs", a.pairs, "pairs file for scfc-subset");
  verify->add_flag("--audit", a.audit, "print the certificate of every pair");
  verify->callback([&] { code = cmd_verify(a); });

  auto* solve = app.add_subcommand("solve", "compute a connection number");
  add_graph(solve);
  solve->add_option("--mode", a.mode, "cfc | vcfc | scfc | rc")->required();
  solve->add_option("--max-colors", a.max_colors, "give up above this many colors");
  solve->add_option("--out", a.out, "witness coloring file");
  add_budget(solve);
  solve->callback([&] { code = cmd_solve(a); });

  auto* decide = app.add_subcommand("decide", "k-subset strong conflict-free decision");
  add_graph(decide);
  decide->add_option("--pairs", a.pairs, "pairs file");
  decide->add_option("--k", a.k, "number of colors")->required();
  decide->add_option("--out", a.out, "witness coloring file");
  add_budget(decide);
  decide->callback([&] { code = cmd_decide(a); });

  auto* reduce = app.add_subcommand("reduce", "build a reduction gadget");
  reduce->add_option("--kind", a.kind, "sat2partial | partial2subset | kcolor2subset | star2scfc")->required();
  add_graph(reduce);
  reduce->add_option("--cnf", a.cnf, "DIMACS CNF file");
  reduce->add_option("--partial", a.partial, "partial 2-coloring file");
  reduce->add_option("--pairs", a.pairs, "pairs file");
  reduce->add_option("--k", a.k, "number of colors");
  reduce->add_option("--out", a.out, "output directory")->required();
  reduce->callback([&] { code = cmd_reduce(a); });

  auto* extract = app.add_subcommand("extract", "map a gadget coloring back to the source");
  extract->add_option("--instance", a.instance, "instance directory written by reduce");
  extract->add_option("--coloring", a.coloring, "gadget coloring file");
  extract->add_option("--out", a.out, "source-side coloring file");
  extract->callback([&] { code = cmd_extract(a); });

  auto* forward = app.add_subcommand("forward", "extend a star coloring to its star2scfc gadget");
  forward->add_option("--instance", a.instance, "instance directory written by reduce");
  forward->add_option("--coloring", a.coloring, "star coloring file");
  forward->add_option("--out", a.out, "gadget coloring file");
  forward->callback([&] { code = cmd_forward(a); });

  auto* generate = app.add_subcommand("generate", "emit graphs of a family");
  generate->add_option("--family", a.family, "path | cycle | star | complete | random_tree | gnp | all_connected | trees")
      ->required();
  generate->add_option("--n", a.n, "vertex count (leaves for star)")->required();
  generate->add_option("--p", a.p, "edge probability for gnp");
  generate->add_option("--seed", a.seed, "seed for random families");
  generate->add_option("--out", a.out, "output file, or directory for multi-graph families");
  generate->callback([&] { code = cmd_generate(a); });

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suites");
  selftest->add_option("--scale", a.scale, "quick | full");
  selftest->add_option("--criterion", a.criteria, "run only these criteria (1-8)");
  selftest->add_option("--seed", a.seed, "seed for sampled suites");
  selftest->add_option("--threads", a.threads, "worker threads (default CFCONN_THREADS or all cores)");
  selftest->callback([&] {
    if (selftest->count("--seed") == 0) a.seed = SelftestConfig{}.seed;
    code = cmd_selftest(a);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
