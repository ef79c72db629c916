#ifndef SSRP_GENERATE_HPP
#define SSRP_GENERATE_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "ssrp/graph.hpp"
#include "ssrp/random.hpp"

namespace ssrp {

/// Random simple digraph with m edges in which every vertex is reachable from
/// 0: a random spanning arborescence first, then uniform extra edges.
inline Graph random_reachable_graph(std::size_t n, std::size_t m, Rng& rng) {
  if (n == 0) throw Error("graph needs at least one vertex");
  const std::uint64_t max_edges = static_cast<std::uint64_t>(n) * (n - 1);
  if (m + 1 < n) throw Error("m must be at least n - 1 to reach every vertex");
  if (m > max_edges) throw Error("m exceeds n(n-1)");

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n - 1; i > 1; --i) std::swap(order[i], order[1 + uniform_below(rng, i)]);
  std::set<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.insert({order[uniform_below(rng, i)], order[i]});

  if (m > max_edges / 2) {
    std::vector<Edge> absent;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = 0; v < n; ++v)
        if (u != v && !edges.count({u, v})) absent.push_back({u, v});
    for (std::size_t i = absent.size(); i > 1; --i) std::swap(absent[i - 1], absent[uniform_below(rng, i)]);
    for (std::size_t i = 0; edges.size() < m; ++i) edges.insert(absent[i]);
  } else {
    while (edges.size() < m) {
      const auto u = static_cast<VertexId>(uniform_below(rng, n));
      const auto v = static_cast<VertexId>(uniform_below(rng, n));
      if (u != v) edges.insert({u, v});
    }
  }
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

}  // namespace ssrp

#endif  // SSRP_GENERATE_HPP
