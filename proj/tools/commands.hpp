#ifndef SSRP_TOOLS_COMMANDS_HPP
#define SSRP_TOOLS_COMMANDS_HPP

// Command implementations behind the `ssrp` executable. Each returns the
// process exit code and writes only to the streams it is given, so tests can
// drive them without spawning processes.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssrp/budgets.hpp"
#include "ssrp/generate.hpp"
#include "ssrp/io.hpp"
#include "ssrp/minplus.hpp"
#include "ssrp/oracle.hpp"
#include "ssrp/ssrp_core.hpp"

namespace ssrp::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kInternal = 3 };

struct RunConfig {
  std::uint64_t seed = 1;
  double c = 3.0;
  std::string rp_backend = "sampled";
  bool debug_checks = false;
  bool prune_idle_weights = false;

  SsrpConfig to_ssrp() const {
    if (c < 3.0) throw Error("--c must be at least 3");
    SsrpConfig cfg;
    cfg.c = c;
    cfg.seed = seed;
    cfg.debug_checks = debug_checks;
    cfg.prune_idle_weights = prune_idle_weights;
    if (rp_backend == "exact")
      cfg.rp_backend = RpBackend::kExact;
    else if (rp_backend == "sampled")
      cfg.rp_backend = RpBackend::kSampled;
    else
      throw Error("--rp-backend must be 'exact' or 'sampled'");
    return cfg;
  }
};

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  return parse_graph(in);
}

/// Opens `path` for writing, or returns nullptr for "-"/empty (use the fallback stream).
inline std::unique_ptr<std::ofstream> open_output(const std::string& path) {
  if (path.empty() || path == "-") return nullptr;
  auto out = std::make_unique<std::ofstream>(path);
  if (!*out) throw Error("cannot write '" + path + "'");
  return out;
}

inline VertexId checked_source(const Graph& g, std::uint64_t source) {
  if (source >= g.num_vertices()) throw Error("source " + std::to_string(source) + " is not a vertex");
  return static_cast<VertexId>(source);
}

inline int cmd_gen(std::size_t n, std::size_t m, std::uint64_t seed, std::ostream& out) {
  Rng rng(seed);
  write_graph(out, random_reachable_graph(n, m, rng));
  return kOk;
}

/// Solves SSRP and writes the TSV to `out`; metrics go to `metrics` when given.
inline int cmd_solve(const Graph& g, std::uint64_t source, const RunConfig& rc, std::ostream& out,
                     std::ostream* metrics) {
  const SsrpResult r = solve_ssrp(g, checked_source(g, source), rc.to_ssrp());
  write_results_tsv(out, result_rows(r));
  if (metrics) write_metrics_jsonl(*metrics, r.metrics);
  return kOk;
}

struct VerifyReport {
  std::uint64_t rows = 0, exact = 0, over = 0, under = 0;
};

/// Compares a results table against the oracle. Every (tree edge, vertex)
/// pair must appear exactly once.
inline int cmd_verify(const Graph& g, std::uint64_t source, std::istream& results, std::ostream& report,
                      VerifyReport* out_report = nullptr) {
  const VertexId s = checked_source(g, source);
  const BfsTree k = build_bfs_tree(g, s);
  const std::size_t n = g.num_vertices();
  const auto rows = read_results_tsv(results);

  std::map<Edge, std::vector<std::optional<ExtDist>>> claimed;
  for (VertexId v = 0; v < n; ++v)
    if (v != s) claimed[{k.parent(v), v}].assign(n, std::nullopt);
  for (const auto& row : rows) {
    auto it = claimed.find(row.e);
    if (it == claimed.end())
      throw Error("row for (" + std::to_string(row.e.u) + "," + std::to_string(row.e.v) + ") is not a BFS tree edge");
    if (row.x >= n) throw Error("row destination " + std::to_string(row.x) + " is not a vertex");
    auto& cell = it->second[row.x];
    if (cell) throw Error("duplicate row for edge (" + std::to_string(row.e.u) + "," + std::to_string(row.e.v) +
                          ") and x = " + std::to_string(row.x));
    cell = row.dist;
  }

  VerifyReport rep;
  const WeightFunction w = WeightFunction::infinite(n, s);
  for (const auto& [e, cells] : claimed) {
    for (VertexId x = 0; x < n; ++x)
      if (!cells[x])
        throw Error("coverage gap: no row for edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    ") and x = " + std::to_string(x));
    const auto truth = ssrp_oracle(g, w, std::span(&e, 1))[0];
    for (VertexId x = 0; x < n; ++x) {
      ++rep.rows;
      const ExtDist got = *cells[x];
      if (got == truth[x]) {
        ++rep.exact;
      } else if (got > truth[x]) {
        ++rep.over;
      } else {
        ++rep.under;
        report << "UNDERESTIMATE edge (" << e.u << "," << e.v << ") x=" << x << " claimed " << got << " exact "
               << truth[x] << '\n';
      }
    }
  }
  report << "queries " << rep.rows << " exact " << rep.exact << " overestimate " << rep.over << " underestimate "
         << rep.under << '\n';
  if (out_report) *out_report = rep;
  return rep.under == 0 ? kOk : kVerifyFailed;
}

struct BenchOptions {
  std::vector<std::size_t> n_list{256, 512};
  double degree = 4.0;
  std::size_t repeats = 3;
  std::size_t oracle_max_n = 512;
  RunConfig run;
};

inline constexpr const char* kBenchHeader =
    "n,m,repeat,seed,time_ms,oracle_ms,traversals,edges_scanned,nodes,levels,max_level_vertices,max_level_edges,"
    "budgets_ok,work_model";

/// One CSV row per (n, repeat). Returns kInternal if any structural budget fails.
inline int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.degree < 1.0) throw Error("--degree must be at least 1");
  out << kBenchHeader << '\n';
  bool all_ok = true;
  for (std::size_t n : opt.n_list) {
    if (n < 2) throw Error("bench sizes must be at least 2");
    const auto m = std::min<std::size_t>(static_cast<std::size_t>(std::llround(opt.degree * static_cast<double>(n))),
                                         n * (n - 1));
    for (std::size_t rep = 0; rep < opt.repeats; ++rep) {
      const std::uint64_t seed = derive_seed(opt.run.seed, n, rep);
      Rng rng(seed);
      const Graph g = random_reachable_graph(n, std::max(m, n - 1), rng);
      RunConfig rc = opt.run;
      rc.seed = seed;
      traversal_stats() = {};
      const auto t0 = std::chrono::steady_clock::now();
      const SsrpResult r = solve_ssrp(g, 0, rc.to_ssrp());
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      const TraversalStats work = traversal_stats();

      double oracle_ms = -1;
      if (n <= opt.oracle_max_n) {
        const auto o0 = std::chrono::steady_clock::now();
        std::vector<Edge> edges;
        for (VertexId v = 1; v < n; ++v) edges.push_back({r.tree().parent(v), v});
        (void)ssrp_oracle(g, WeightFunction::infinite(n, 0), edges);
        oracle_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - o0).count();
      }

      const auto levels = per_level_totals(r.metrics);
      std::uint64_t max_v = 0, max_e = 0;
      for (const auto& lt : levels) {
        max_v = std::max(max_v, lt.vertices);
        max_e = std::max(max_e, lt.edges);
      }
      const BudgetReport budgets =
          check_budgets(r.metrics, n, g.num_edges(), rc.c, /*exact_weight_counts=*/!rc.prune_idle_weights);
      if (!budgets.ok()) {
        all_ok = false;
        for (const auto& v : budgets.violations) err << "budget violation (n=" << n << ", repeat " << rep << "): " << v << '\n';
      }
      const double nd = static_cast<double>(n);
      const double model = static_cast<double>(g.num_edges()) * std::sqrt(nd) + nd * nd;
      out << n << ',' << g.num_edges() << ',' << rep << ',' << seed << ',' << std::fixed << std::setprecision(3) << ms
          << ',' << oracle_ms << std::defaultfloat << ',' << work.traversals << ',' << work.edges_scanned << ','
          << r.metrics.size() << ',' << levels.size() << ',' << max_v << ',' << max_e << ',' << (budgets.ok() ? 1 : 0)
          << ',' << std::setprecision(12) << model << std::setprecision(6) << '\n';
    }
  }
  return all_ok ? kOk : kInternal;
}

/// Random size x size matrix with entries in [1, 2) at 32 fractional bits.
inline RationalMatrix random_unit_matrix(std::size_t size, Rng& rng) {
  RationalMatrix m(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      m(i, j) = FixedRational::from_raw(FixedRational::kOne + static_cast<std::int64_t>(uniform_below(rng, FixedRational::kOne)));
  return m;
}

inline int cmd_minplus(std::size_t size, std::uint64_t seed, bool check, std::ostream& out, std::ostream& err) {
  Rng rng(seed);
  const RationalMatrix x = random_unit_matrix(size, rng);
  const RationalMatrix y = random_unit_matrix(size, rng);
  const RationalMatrix z = minplus_via_ssrp(x, y);
  write_matrix(out, z);
  if (check && !(z == minplus_direct(x, y))) {
    err << "min-plus product through the gadget differs from the direct product\n";
    return kVerifyFailed;
  }
  return kOk;
}

inline int cmd_apsp(std::istream& matrix, bool check, bool direct_engine, std::ostream& out, std::ostream& err) {
  const RationalMatrix parsed = parse_matrix(matrix);
  for (std::size_t i = 0; i < parsed.size(); ++i)
    for (std::size_t j = 0; j < parsed.size(); ++j)
      if (parsed(i, j).finite() && !parsed(i, j).is_integer())
        throw Error("APSP input entries must be integers or inf");
  const IntMatrix w = to_int_matrix(parsed);
  const IntMatrix d = apsp_via_minplus(w, direct_engine ? MinPlusEngine::kDirect : MinPlusEngine::kGadget);
  write_matrix(out, d);
  if (check && !(d == floyd_warshall(w))) {
    err << "APSP through min-plus squaring differs from Floyd-Warshall\n";
    return kVerifyFailed;
  }
  return kOk;
}

}  // namespace ssrp::cli

#endif  // SSRP_TOOLS_COMMANDS_HPP
