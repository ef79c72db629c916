#ifndef SSRP_TEST_UTIL_HPP
#define SSRP_TEST_UTIL_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "ssrp/generate.hpp"
#include "ssrp/graph.hpp"
#include "ssrp/oracle.hpp"
#include "ssrp/ssrp_core.hpp"

namespace ssrp::testing {

inline Graph make_graph(std::size_t n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

inline Graph random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  return random_reachable_graph(n, std::min<std::size_t>(m, n * (n - 1)), rng);
}

/// Graph with a long spine 0 -> 1 -> ... -> len plus random short and long
/// detours, so BFS trees are deep and replacement paths are interesting.
inline Graph spine_graph(std::size_t n, std::size_t extra, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  const std::size_t len = n / 2;
  for (VertexId v = 0; v < len; ++v) edges.push_back({v, v + 1});
  for (VertexId v = static_cast<VertexId>(len) + 1; v < n; ++v)
    edges.push_back({static_cast<VertexId>(uniform_below(rng, v)), v});
  std::set<Edge> have(edges.begin(), edges.end());
  std::size_t guard = 0;
  while (have.size() < edges.size() + extra && guard++ < 100 * extra) {
    const auto u = static_cast<VertexId>(uniform_below(rng, n));
    const auto v = static_cast<VertexId>(uniform_below(rng, n));
    if (u == v) continue;
    have.insert({u, v});
  }
  return Graph(n, std::vector<Edge>(have.begin(), have.end()));
}

/// Spine 0..n/3 with comb leaves, a random tree ("blob") hanging below the
/// spine end, and a few spine<->blob shortcuts. Replacement paths here detour
/// through the blob and rejoin the spine, which only the pivot terms find.
inline Graph comb_blob_graph(std::size_t n, std::uint64_t seed, std::size_t cross) {
  Rng rng(seed);
  std::set<Edge> e;
  const std::size_t len = n / 3, comb = n / 6;
  for (VertexId v = 0; v < len; ++v) e.insert({v, v + 1});
  auto next = static_cast<VertexId>(len + 1);
  for (std::size_t i = 0; i < comb; ++i, ++next) e.insert({static_cast<VertexId>(uniform_below(rng, len + 1)), next});
  const VertexId blob = next;
  auto in_blob = [&] { return static_cast<VertexId>(blob + uniform_below(rng, n - blob)); };
  for (; next < n; ++next)
    e.insert({next == blob ? static_cast<VertexId>(len) : static_cast<VertexId>(blob + uniform_below(rng, next - blob)), next});
  for (std::size_t i = 0; i < cross; ++i) {
    e.insert({static_cast<VertexId>(uniform_below(rng, len)), in_blob()});
    e.insert({in_blob(), static_cast<VertexId>(uniform_below(rng, len))});
  }
  return Graph(n, std::vector<Edge>(e.begin(), e.end()));
}

/// Random weight function satisfying w(v) >= d(s, v): infinite with
/// probability 1/2, otherwise d(s, v) plus a small slack.
inline WeightFunction random_weight_function(const Graph& g, VertexId s, Rng& rng, std::uint32_t max_slack = 4) {
  const auto d = bfs(g, s).dist;
  WeightFunction w{s, std::vector<ExtDist>(g.num_vertices(), kInf)};
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (d[v].finite() && uniform_below(rng, 2) == 0)
      w.weights[v] = d[v] + static_cast<ExtDist::Rep>(uniform_below(rng, max_slack + 1));
  return w;
}

struct Comparison {
  std::uint64_t total = 0, exact = 0, over = 0, under = 0;
  void merge(const Comparison& o) {
    total += o.total;
    exact += o.exact;
    over += o.over;
    under += o.under;
  }
};

/// Compares every (e, x, w) query of `q` against the per-edge Dijkstra oracle.
inline Comparison compare_with_oracle(const Graph& h, const BfsTree& k, const std::vector<WeightFunction>& w,
                                      const QuerySet& q, const EstimateTable& table) {
  Comparison c;
  for (std::uint32_t wi = 0; wi < w.size(); ++wi)
    for (VertexId v : q.edges_by_weight[wi]) {
      const Edge e{k.parent(v), v};
      const auto truth = ssrp_oracle(h, w[wi], std::span(&e, 1))[0];
      for (VertexId x = 0; x < h.num_vertices(); ++x) {
        const ExtDist got = table.at(v, x, wi);
        ++c.total;
        if (got == truth[x])
          ++c.exact;
        else if (got > truth[x])
          ++c.over;
        else
          ++c.under;
      }
    }
  return c;
}

inline Comparison compare_solve(const Graph& g, VertexId s, const SsrpResult& r) {
  const std::vector<WeightFunction> w{WeightFunction::infinite(g.num_vertices(), s)};
  return compare_with_oracle(g, r.tree(), w, QuerySet::all_edges(r.tree(), 1), r.table);
}

}  // namespace ssrp::testing

#endif  // SSRP_TEST_UTIL_HPP
