#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace ssrp;
using namespace ssrp::cli;

void add_run_flags(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--seed", rc.seed, "Seed for all randomness");
  cmd->add_option("--c", rc.c, "Sampling constant C (>= 3)");
  cmd->add_option("--rp-backend", rc.rp_backend, "Replacement-paths backend")->check(CLI::IsMember({"exact", "sampled"}));
  cmd->add_flag("--debug-checks", rc.debug_checks, "Check BFS trees and weight requirements at every call");
  cmd->add_flag("--prune-idle-weights", rc.prune_idle_weights, "Drop child weight functions that carry no queries");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-source replacement paths in unweighted directed graphs"};
  app.require_subcommand(1);

  RunConfig rc;
  std::string graph_path, out_path, metrics_path, results_path, matrix_path;
  std::uint64_t source = 0, gen_seed = 1;
  std::size_t n = 0, m = 0, size = 8;
  bool check = false, direct = false;
  BenchOptions bench;

  auto* gen = app.add_subcommand("gen", "Generate a random graph reachable from vertex 0");
  gen->add_option("--n", n, "Vertices")->required();
  gen->add_option("--m", m, "Edges")->required();
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "Solve SSRP and write the results TSV");
  solve->add_option("--graph", graph_path, "Graph file")->required();
  solve->add_option("--source", source, "Source vertex");
  solve->add_option("--out", out_path, "Results TSV (default stdout)");
  solve->add_option("--metrics", metrics_path, "Metrics JSON-lines (default <out>.metrics.jsonl)");
  add_run_flags(solve, rc);

  auto* verify = app.add_subcommand("verify", "Check a results TSV against the exact oracle");
  verify->add_option("--graph", graph_path, "Graph file")->required();
  verify->add_option("--source", source, "Source vertex");
  verify->add_option("--results", results_path, "Results TSV")->required();

  auto* bench_cmd = app.add_subcommand("bench", "Time the solver on random graphs and emit CSV");
  bench_cmd->add_option("--n", bench.n_list, "Graph sizes")->delimiter(',');
  bench_cmd->add_option("--degree", bench.degree, "Average out-degree m/n");
  bench_cmd->add_option("--repeats", bench.repeats, "Runs per size");
  bench_cmd->add_option("--oracle-max-n", bench.oracle_max_n, "Largest n for which the oracle is timed");
  bench_cmd->add_option("--out", out_path, "CSV file (default stdout)");
  add_run_flags(bench_cmd, bench.run);

  auto* minplus = app.add_subcommand("minplus", "Min-plus product of random [1,2) matrices through the gadget");
  minplus->add_option("--size", size, "Matrix size");
  minplus->add_option("--seed", gen_seed, "Seed");
  minplus->add_flag("--check", check, "Compare with the direct product");
  minplus->add_option("--out", out_path, "Output file (default stdout)");

  auto* apsp = app.add_subcommand("apsp", "APSP by min-plus squaring through the gadget");
  apsp->add_option("--matrix", matrix_path, "Matrix file")->required();
  apsp->add_flag("--check", check, "Compare with Floyd-Warshall");
  apsp->add_flag("--direct", direct, "Use the direct min-plus product instead of the gadget");
  apsp->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    auto file = open_output(out_path);
    std::ostream& out = file ? *file : std::cout;
    if (*gen) return cmd_gen(n, m, gen_seed, out);
    if (*solve) {
      const Graph g = load_graph(graph_path);
      if (metrics_path.empty() && file) metrics_path = out_path + ".metrics.jsonl";
      auto metrics = open_output(metrics_path);
      return cmd_solve(g, source, rc, out, metrics.get());
    }
    if (*verify) {
      const Graph g = load_graph(graph_path);
      std::ifstream in(results_path);
      if (!in) throw Error("cannot open results file '" + results_path + "'");
      return cmd_verify(g, source, in, std::cout);
    }
    if (*bench_cmd) return cmd_bench(bench, out, std::cerr);
    if (*minplus) return cmd_minplus(size, gen_seed, check, out, std::cerr);
    if (*apsp) {
      std::ifstream in(matrix_path);
      if (!in) throw Error("cannot open matrix file '" + matrix_path + "'");
      return cmd_apsp(in, check, direct, out, std::cerr);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
