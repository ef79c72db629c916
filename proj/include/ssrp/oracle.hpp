#ifndef SSRP_ORACLE_HPP
#define SSRP_ORACLE_HPP

// Ground truth by recomputation: one shortest-path run per failed edge.

#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "ssrp/fixed_rational.hpp"
#include "ssrp/graph.hpp"

namespace ssrp {

/// Exact d(s, x, H_w - e) for every listed edge e (rows) and vertex x (columns).
inline std::vector<std::vector<ExtDist>> ssrp_oracle(const Graph& g, const WeightFunction& w,
                                                     std::span<const Edge> failed_edges) {
  std::vector<std::vector<ExtDist>> out;
  out.reserve(failed_edges.size());
  for (const Edge& e : failed_edges) {
    EdgeSet f(g);
    f.insert(g, e);
    out.push_back(dijkstra_weighted_view(g, w, f));
  }
  return out;
}

/// Graph with positive fixed-point edge lengths; undirected graphs store each
/// edge once and traverse it both ways.
class WeightedGraph {
 public:
  struct WEdge {
    VertexId u, v;
    FixedRational length;
  };

  WeightedGraph(std::size_t n, bool undirected) : n_(n), undirected_(undirected), adj_(n) {}

  VertexId add_vertex() {
    adj_.emplace_back();
    return static_cast<VertexId>(n_++);
  }

  std::size_t add_edge(VertexId u, VertexId v, FixedRational length) {
    if (u >= n_ || v >= n_) throw Error("weighted edge endpoint out of range");
    if (!length.finite() || length.raw() <= 0) throw Error("edge lengths must be positive and finite");
    const std::size_t id = edges_.size();
    edges_.push_back({u, v, length});
    adj_[u].push_back({v, id});
    if (undirected_) adj_[v].push_back({u, id});
    return id;
  }

  /// Index of edge {u, v} (either orientation when undirected).
  std::optional<std::size_t> find_edge(VertexId u, VertexId v) const {
    if (u >= n_) return std::nullopt;
    for (const auto& [to, id] : adj_[u])
      if (to == v) return id;
    return std::nullopt;
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  bool undirected() const { return undirected_; }
  const WEdge& edge(std::size_t id) const { return edges_[id]; }
  std::span<const std::pair<VertexId, std::size_t>> neighbors(VertexId u) const { return adj_[u]; }

 private:
  std::size_t n_;
  bool undirected_;
  std::vector<WEdge> edges_;
  std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj_;
};

/// Textbook binary-heap Dijkstra skipping the edge with index `skip`.
inline std::vector<FixedRational> weighted_dijkstra(const WeightedGraph& g, VertexId s,
                                                    std::size_t skip = static_cast<std::size_t>(-1)) {
  std::vector<FixedRational> dist(g.num_vertices(), FixedRational::inf());
  using Item = std::pair<FixedRational, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s] = FixedRational::from_raw(0);
  pq.push({dist[s], s});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, id] : g.neighbors(u)) {
      if (id == skip) continue;
      const FixedRational nd = d + g.edge(id).length;
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.push({nd, v});
      }
    }
  }
  return dist;
}

/// Exact distances from s with each listed edge failed in turn.
inline std::vector<std::vector<FixedRational>> weighted_ssrp_oracle(const WeightedGraph& g, VertexId s,
                                                                    std::span<const Edge> failed_edges) {
  std::vector<std::vector<FixedRational>> out;
  out.reserve(failed_edges.size());
  for (const Edge& e : failed_edges) {
    const auto id = g.find_edge(e.u, e.v);
    if (!id) throw Error("failed edge is not in the weighted graph");
    out.push_back(weighted_dijkstra(g, s, *id));
  }
  return out;
}

}  // namespace ssrp

#endif  // SSRP_ORACLE_HPP
