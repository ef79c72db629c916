#ifndef SSRP_RP_HPP
#define SSRP_RP_HPP

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "ssrp/graph.hpp"
#include "ssrp/random.hpp"

namespace ssrp {

/// Replacement-path lengths d(s, t, g - e) for the path edges e_i = (path[i], path[i+1]),
/// indexed by i. Estimates never undershoot the true value.
using RpEstimates = std::vector<ExtDist>;

enum class RpBackend { kExact, kSampled };

namespace detail {

inline EdgeSet path_edge_set(const Graph& g, std::span<const VertexId> path) {
  if (path.empty()) throw Error("path has no vertices");
  EdgeSet s(g);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto id = g.find_edge(path[i], path[i + 1]);
    if (!id)
      throw Error("path edge " + std::to_string(path[i]) + "->" + std::to_string(path[i + 1]) +
                  " is not in the graph");
    s.insert(*id);
  }
  return s;
}

}  // namespace detail

/// One BFS per failed path edge.
inline RpEstimates replacement_paths_exact(const Graph& g, std::span<const VertexId> path) {
  detail::path_edge_set(g, path);
  RpEstimates out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    EdgeSet f(g);
    f.insert(*g.find_edge(path[i], path[i + 1]));
    out.push_back(bfs(g, path.front(), f).dist[path.back()]);
  }
  return out;
}

/// Randomized replacement paths in the style of Roditty and Zwick.
///
/// A shortest replacement path can be taken as a prefix of P up to some u_a,
/// a detour in g - P that meets P only at its ends, and a suffix of P from u_b.
/// Detours shorter than ceil(sqrt n) edges are found by a depth-capped BFS
/// from every path vertex; longer ones contain a sampled vertex w.h.p. and are
/// priced through BFS from and to each sample. Every candidate is the length
/// of a real walk avoiding the failed edge, so errors are one-sided.
///
/// `log_n` is the vertex count used inside ln(); pass the enclosing graph's n.
inline RpEstimates replacement_paths_rz(const Graph& g, std::span<const VertexId> path, Rng& rng,
                                        double c, std::size_t log_n = 0) {
  if (c < 3.0) throw Error("sampling constant C must be at least 3");
  const EdgeSet without_path = detail::path_edge_set(g, path);
  const std::size_t len = path.size() - 1;
  RpEstimates est(len, kInf);
  if (len == 0) return est;

  const std::size_t n = g.num_vertices();
  if (log_n < n) log_n = n;
  const auto cap = static_cast<std::uint32_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::vector<std::uint32_t> pos(n, UINT32_MAX);
  for (std::uint32_t i = 0; i <= len; ++i) pos[path[i]] = i;

  // Short detours.
  {
    std::vector<std::uint32_t> dist(n, UINT32_MAX);
    std::vector<VertexId> touched, frontier, next;
    std::vector<ExtDist> best_from_b;
    auto& stats = traversal_stats();
    for (std::uint32_t a = 0; a < len; ++a) {
      ++stats.traversals;
      const std::uint32_t hi = static_cast<std::uint32_t>(std::min<std::size_t>(len, a + cap));
      best_from_b.assign(hi - a + 1, kInf);  // index b - a
      frontier = {path[a]};
      dist[path[a]] = 0;
      touched = {path[a]};
      for (std::uint32_t depth = 0; depth + 1 < cap && !frontier.empty(); ++depth) {
        next.clear();
        for (VertexId u : frontier) {
          if (u != path[a] && pos[u] != UINT32_MAX) continue;  // detours stop at P
          for (EdgeId id = g.out_begin(u); id < g.out_end(u); ++id) {
            ++stats.edges_scanned;
            if (without_path.contains(id)) continue;
            const VertexId v = g.edge(id).v;
            if (dist[v] != UINT32_MAX) continue;
            dist[v] = depth + 1;
            touched.push_back(v);
            next.push_back(v);
            if (pos[v] != UINT32_MAX && pos[v] > a && pos[v] <= hi)
              best_from_b[pos[v] - a] = ExtDist(a + depth + 1 + static_cast<std::uint32_t>(len - pos[v]));
          }
        }
        frontier.swap(next);
      }
      for (VertexId v : touched) dist[v] = UINT32_MAX;
      ExtDist suffix = kInf;
      for (std::uint32_t b = hi; b > a; --b) {
        suffix = std::min(suffix, best_from_b[b - a]);
        est[b - 1] = std::min(est[b - 1], suffix);
      }
    }
  }

  // Long detours through sampled vertices.
  const double p = std::min(1.0, c * std::log(static_cast<double>(log_n)) / cap);
  for (VertexId r = 0; r < n; ++r) {
    if (!bernoulli(rng, p)) continue;
    const auto to_r = bfs(g, r, without_path, Direction::kReverse).dist;
    const auto from_r = bfs(g, r, without_path, Direction::kForward).dist;
    std::vector<ExtDist> suffix(len + 1, kInf);  // suffix[i] = min_{b > i} d(r, u_b) + len - b
    for (std::size_t b = len; b >= 1; --b) {
      const ExtDist here = from_r[path[b]] + static_cast<ExtDist::Rep>(len - b);
      suffix[b - 1] = std::min(b < len ? suffix[b] : kInf, here);
    }
    ExtDist prefix = kInf;
    for (std::size_t i = 0; i < len; ++i) {
      prefix = std::min(prefix, to_r[path[i]] + static_cast<ExtDist::Rep>(i));
      est[i] = std::min(est[i], prefix + suffix[i]);
    }
  }
  return est;
}

/// Dispatches to the exact backend when asked or when |P| <= sqrt(n).
inline RpEstimates replacement_paths(const Graph& g, std::span<const VertexId> path, RpBackend backend,
                                     Rng& rng, double c, std::size_t log_n = 0) {
  const std::size_t len = path.empty() ? 0 : path.size() - 1;
  if (backend == RpBackend::kExact ||
      static_cast<double>(len) <= std::sqrt(static_cast<double>(g.num_vertices())))
    return replacement_paths_exact(g, path);
  return replacement_paths_rz(g, path, rng, c, log_n);
}

}  // namespace ssrp

#endif  // SSRP_RP_HPP
