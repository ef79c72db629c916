#ifndef SSRP_BUDGETS_HPP
#define SSRP_BUDGETS_HPP

#include <bit>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "ssrp/ssrp_core.hpp"

namespace ssrp {

struct LevelTotals {
  std::uint32_t depth = 0;
  std::uint64_t nodes = 0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t queries = 0;
  std::uint64_t weights = 0;
  std::uint64_t edges_scanned = 0;
  double wall_ms = 0;
};

inline std::vector<LevelTotals> per_level_totals(const std::vector<CallMetrics>& metrics) {
  std::map<std::uint32_t, LevelTotals> by_depth;
  for (const auto& m : metrics) {
    auto& t = by_depth[m.depth];
    t.depth = m.depth;
    ++t.nodes;
    t.vertices += m.vertices;
    t.edges += m.edges;
    t.queries += m.queries;
    t.weights += m.weights;
    t.edges_scanned += m.edges_scanned;
    t.wall_ms += m.wall_ms;
  }
  std::vector<LevelTotals> out;
  for (auto& [d, t] : by_depth) out.push_back(t);
  return out;
}

struct BudgetReport {
  std::vector<std::string> violations;
  std::uint32_t max_depth = 0;
  bool ok() const { return violations.empty(); }
};

/// Structural budgets of one solve on a graph with n vertices and m edges.
/// With `exact_weight_counts`, |W_T| = |W|+1 and |W_S| = |W|+1+|B| must hold
/// with equality (no pruning); otherwise as upper bounds.
inline BudgetReport check_budgets(const std::vector<CallMetrics>& metrics, std::size_t n, std::size_t m, double c,
                                  bool exact_weight_counts = true) {
  BudgetReport r;
  const double ln_n = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  auto fail = [&](const CallMetrics& cm, const std::string& what) {
    r.violations.push_back("depth " + std::to_string(cm.depth) + " n_H=" + std::to_string(cm.vertices) + ": " + what);
  };
  for (const auto& cm : metrics) {
    r.max_depth = std::max(r.max_depth, cm.depth);
    if (cm.base_case || cm.queries == 0) continue;
    const bool t_ok = exact_weight_counts ? cm.weights_t == cm.weights + 1 : cm.weights_t <= cm.weights + 1;
    const bool s_ok = exact_weight_counts ? cm.weights_s == cm.weights + 1 + cm.pivots
                                          : cm.weights_s <= cm.weights + 1 + cm.pivots;
    if (!t_ok) fail(cm, "|W_T| = " + std::to_string(cm.weights_t) + " vs |W| = " + std::to_string(cm.weights));
    if (!s_ok) fail(cm, "|W_S| = " + std::to_string(cm.weights_s) + " vs |W|+1+|B| = " + std::to_string(cm.weights + 1 + cm.pivots));
    const double nh = static_cast<double>(cm.vertices);
    if (static_cast<double>(cm.added_queries) > 40.0 * nh * nh * ln_n)
      fail(cm, "added queries " + std::to_string(cm.added_queries) + " exceed 40 n_H^2 ln n");
    if (static_cast<double>(cm.max_pivot_interval_product) > 3.0 * c * ln_n * nh)
      fail(cm, "|P_k||B_k| = " + std::to_string(cm.max_pivot_interval_product) + " exceeds 3 C ln(n) n_H");
  }
  for (const auto& lt : per_level_totals(metrics)) {
    if (lt.vertices > 2 * n)
      r.violations.push_back("level " + std::to_string(lt.depth) + " vertex total " + std::to_string(lt.vertices) + " > 2n");
    if (lt.edges > m)
      r.violations.push_back("level " + std::to_string(lt.depth) + " edge total " + std::to_string(lt.edges) + " > m");
  }
  const double depth_cap = 4.0 * std::log2(static_cast<double>(std::max<std::size_t>(n, 2)));
  if (r.max_depth > depth_cap)
    r.violations.push_back("recursion depth " + std::to_string(r.max_depth) + " exceeds 4 log2 n");
  return r;
}

}  // namespace ssrp

#endif  // SSRP_BUDGETS_HPP
