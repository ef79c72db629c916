#ifndef SSRP_IO_HPP
#define SSRP_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ssrp/ssrp_core.hpp"

namespace ssrp {

struct ResultRow {
  Edge e;
  VertexId x = 0;
  ExtDist dist;
};

/// All (tree edge, x) rows of a solve, sorted by (eu, ev, x).
inline std::vector<ResultRow> result_rows(const SsrpResult& r) {
  const BfsTree& k = r.tree();
  std::vector<Edge> edges;
  for (VertexId v = 0; v < k.size(); ++v)
    if (v != k.root()) edges.push_back({k.parent(v), v});
  std::sort(edges.begin(), edges.end());
  std::vector<ResultRow> rows;
  rows.reserve(edges.size() * k.size());
  for (const Edge& e : edges)
    for (VertexId x = 0; x < k.size(); ++x) rows.push_back({e, x, r.table.at(e, x, 0)});
  return rows;
}

inline void write_results_tsv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << "eu\tev\tx\tdist\n";
  for (const auto& row : rows) out << row.e.u << '\t' << row.e.v << '\t' << row.x << '\t' << row.dist << '\n';
}

inline std::vector<ResultRow> read_results_tsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("results file is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    std::istringstream hs(line);
    std::string a, b, c, d;
    hs >> a >> b >> c >> d;
    if (a != "eu" || b != "ev" || c != "x" || d != "dist") throw Error("results header must be 'eu ev x dist'");
  }
  std::vector<ResultRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::istringstream ls(line);
    std::string eu, ev, x, d, extra;
    if (!(ls >> eu >> ev >> x >> d) || (ls >> extra)) throw Error("results line " + std::to_string(lineno) + ": expected 4 fields");
    try {
      rows.push_back({{static_cast<VertexId>(std::stoul(eu)), static_cast<VertexId>(std::stoul(ev))},
                      static_cast<VertexId>(std::stoul(x)), parse_ext_dist(d)});
    } catch (const std::exception& e) {
      throw Error("results line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return rows;
}

inline nlohmann::json to_json(const CallMetrics& m) {
  return {{"depth", m.depth},
          {"vertices", m.vertices},
          {"edges", m.edges},
          {"weights", m.weights},
          {"queries", m.queries},
          {"added_queries", m.added_queries},
          {"weights_t", m.weights_t},
          {"weights_s", m.weights_s},
          {"pivots", m.pivots},
          {"path_length", m.path_length},
          {"max_pivot_interval_product", m.max_pivot_interval_product},
          {"traversals", m.traversals},
          {"edges_scanned", m.edges_scanned},
          {"wall_ms", m.wall_ms},
          {"base_case", m.base_case}};
}

inline void write_metrics_jsonl(std::ostream& out, const std::vector<CallMetrics>& metrics) {
  for (const auto& m : metrics) out << to_json(m).dump() << '\n';
}

}  // namespace ssrp

#endif  // SSRP_IO_HPP
