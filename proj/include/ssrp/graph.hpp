#ifndef SSRP_GRAPH_HPP
#define SSRP_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ssrp/ext_dist.hpp"

namespace ssrp {

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeId = std::uint32_t;

/// Counters shared by all traversals on the current thread.
struct TraversalStats {
  std::uint64_t traversals = 0;
  std::uint64_t edges_scanned = 0;
};

inline TraversalStats& traversal_stats() {
  thread_local TraversalStats stats;
  return stats;
}

/// Immutable simple directed graph in adjacency-array form.
/// Out-edges are sorted by (u, v); an edge's id is its position in that order.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.u >= n_ || e.v >= n_) throw Error("edge endpoint out of range");
      if (e.u == e.v) throw Error("self-loop at vertex " + std::to_string(e.u));
      if (i > 0 && edges_[i - 1] == e)
        throw Error("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    out_off_.assign(n_ + 1, 0);
    in_off_.assign(n_ + 1, 0);
    for (const Edge& e : edges_) {
      ++out_off_[e.u + 1];
      ++in_off_[e.v + 1];
    }
    for (std::size_t i = 0; i < n_; ++i) {
      out_off_[i + 1] += out_off_[i];
      in_off_[i + 1] += in_off_[i];
    }
    in_edges_.resize(edges_.size());
    std::vector<std::size_t> fill(in_off_.begin(), in_off_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) in_edges_[fill[edges_[id].v]++] = id;
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  /// Out-edge ids of u form the contiguous range [out_begin(u), out_end(u)).
  EdgeId out_begin(VertexId u) const { return static_cast<EdgeId>(out_off_[u]); }
  EdgeId out_end(VertexId u) const { return static_cast<EdgeId>(out_off_[u + 1]); }
  std::span<const EdgeId> in_edges(VertexId v) const {
    return std::span<const EdgeId>(in_edges_).subspan(in_off_[v], in_off_[v + 1] - in_off_[v]);
  }
  std::size_t out_degree(VertexId u) const { return out_off_[u + 1] - out_off_[u]; }
  std::size_t in_degree(VertexId v) const { return in_off_[v + 1] - in_off_[v]; }

  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const {
    if (u >= n_ || v >= n_) return std::nullopt;
    auto first = edges_.begin() + static_cast<std::ptrdiff_t>(out_off_[u]);
    auto last = edges_.begin() + static_cast<std::ptrdiff_t>(out_off_[u + 1]);
    auto it = std::lower_bound(first, last, Edge{u, v});
    if (it == last || *it != Edge{u, v}) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
  }
  bool has_edge(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_off_{0};
  std::vector<std::size_t> in_off_{0};
  std::vector<EdgeId> in_edges_;
};

/// Membership filter over the edges of one host graph; traversals skip members.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(const Graph& g) : mask_(g.num_edges(), 0) {}

  static EdgeSet of(const Graph& g, std::span<const Edge> edges) {
    EdgeSet s(g);
    for (const Edge& e : edges) s.insert(g, e);
    return s;
  }

  void insert(const Graph& g, const Edge& e) {
    auto id = g.find_edge(e.u, e.v);
    if (!id) throw Error("edge " + std::to_string(e.u) + "->" + std::to_string(e.v) + " not in graph");
    insert(*id);
  }
  void insert(EdgeId id) {
    if (mask_[id] == 0) ++count_;
    mask_[id] = 1;
  }
  bool contains(EdgeId id) const { return !mask_.empty() && mask_[id] != 0; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

 private:
  std::vector<std::uint8_t> mask_;
  std::size_t count_ = 0;
};

enum class Direction { kForward, kReverse };

struct BfsResult {
  std::vector<ExtDist> dist;
  std::vector<VertexId> parent;  // kNoVertex for the source and unreachable vertices
};

namespace detail {

/// Unit-weight shortest paths from seeds with individual start offsets.
/// `seeds` must be sorted by distance; the FIFO frontier and the seed list are
/// merged so vertices settle in nondecreasing order.
inline BfsResult seeded_bfs(const Graph& g, std::span<const std::pair<ExtDist, VertexId>> seeds,
                            const EdgeSet& forbidden, Direction dir) {
  const std::size_t n = g.num_vertices();
  BfsResult r{std::vector<ExtDist>(n, kInf), std::vector<VertexId>(n, kNoVertex)};
  std::vector<std::uint8_t> done(n, 0);
  std::vector<VertexId> queue;
  queue.reserve(n);
  std::size_t head = 0, next_seed = 0;
  auto& stats = traversal_stats();
  ++stats.traversals;

  auto relax = [&](VertexId to, ExtDist d, VertexId from) {
    if (d < r.dist[to]) {
      r.dist[to] = d;
      r.parent[to] = from;
      queue.push_back(to);
    }
  };

  while (true) {
    VertexId u = kNoVertex;
    while (next_seed < seeds.size() && seeds[next_seed].first.is_inf()) ++next_seed;
    const bool have_seed = next_seed < seeds.size();
    const bool have_queue = head < queue.size();
    if (!have_seed && !have_queue) break;
    if (have_seed && (!have_queue || seeds[next_seed].first <= r.dist[queue[head]])) {
      auto [d, v] = seeds[next_seed++];
      if (d < r.dist[v]) {
        r.dist[v] = d;
        r.parent[v] = kNoVertex;
      }
      u = v;
    } else {
      u = queue[head++];
    }
    if (done[u]) continue;
    done[u] = 1;
    const ExtDist nd = r.dist[u] + 1;
    if (dir == Direction::kForward) {
      for (EdgeId id = g.out_begin(u); id < g.out_end(u); ++id) {
        ++stats.edges_scanned;
        if (forbidden.contains(id)) continue;
        relax(g.edge(id).v, nd, u);
      }
    } else {
      for (EdgeId id : g.in_edges(u)) {
        ++stats.edges_scanned;
        if (forbidden.contains(id)) continue;
        relax(g.edge(id).u, nd, u);
      }
    }
  }
  return r;
}

}  // namespace detail

inline BfsResult bfs(const Graph& g, VertexId src, const EdgeSet& forbidden = {},
                     Direction dir = Direction::kForward) {
  if (src >= g.num_vertices()) throw Error("bfs source out of range");
  const std::pair<ExtDist, VertexId> seed{ExtDist::zero(), src};
  return detail::seeded_bfs(g, std::span(&seed, 1), forbidden, dir);
}

/// Per-vertex virtual edge weights (source, v) defining the view H_w.
/// The weight requirement w(v) >= d(source, v) is checked separately.
struct WeightFunction {
  VertexId source = 0;
  std::vector<ExtDist> weights;

  static WeightFunction infinite(std::size_t n, VertexId source) {
    return {source, std::vector<ExtDist>(n, kInf)};
  }
};

/// Distances from w.source in H_w - forbidden: the real edges at unit length
/// plus a virtual edge (source, v) of length w(v) for every v.
inline std::vector<ExtDist> dijkstra_weighted_view(const Graph& g, const WeightFunction& w,
                                                   const EdgeSet& forbidden = {}) {
  if (w.source >= g.num_vertices()) throw Error("weight function source out of range");
  if (w.weights.size() != g.num_vertices()) throw Error("weight function size mismatch");
  std::vector<std::pair<ExtDist, VertexId>> seeds;
  seeds.emplace_back(ExtDist::zero(), w.source);
  for (VertexId v = 0; v < w.weights.size(); ++v)
    if (w.weights[v].finite() && v != w.source) seeds.emplace_back(w.weights[v], v);
  std::sort(seeds.begin(), seeds.end());
  return detail::seeded_bfs(g, seeds, forbidden, Direction::kForward).dist;
}

/// True iff w(v) >= d(source, v, g) for every v. Costs one BFS.
inline bool satisfies_weight_requirement(const Graph& g, const WeightFunction& w) {
  const auto d = bfs(g, w.source).dist;
  for (std::size_t v = 0; v < d.size(); ++v)
    if (w.weights[v] < d[v]) return false;
  return true;
}

inline Graph reverse(const Graph& g) {
  std::vector<Edge> rev;
  rev.reserve(g.num_edges());
  for (const Edge& e : g.edges()) rev.push_back({e.v, e.u});
  return Graph(g.num_vertices(), std::move(rev));
}

struct Subgraph {
  Graph graph;
  std::vector<VertexId> to_parent;  // local -> parent
  std::vector<VertexId> to_local;   // parent -> local, kNoVertex when dropped
};

/// Subgraph induced by `keep`; local ids follow ascending parent ids.
inline Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  if (keep.empty()) throw Error("induced subgraph of an empty vertex set");
  Subgraph s;
  s.to_parent.assign(keep.begin(), keep.end());
  std::sort(s.to_parent.begin(), s.to_parent.end());
  s.to_local.assign(g.num_vertices(), kNoVertex);
  for (std::size_t i = 0; i < s.to_parent.size(); ++i) {
    const VertexId p = s.to_parent[i];
    if (p >= g.num_vertices()) throw Error("induced subgraph vertex out of range");
    if (s.to_local[p] != kNoVertex) throw Error("duplicate vertex in induced subgraph set");
    s.to_local[p] = static_cast<VertexId>(i);
  }
  std::vector<Edge> local;
  for (VertexId p : s.to_parent)
    for (EdgeId id = g.out_begin(p); id < g.out_end(p); ++id) {
      const VertexId q = g.edge(id).v;
      if (s.to_local[q] != kNoVertex) local.push_back({s.to_local[p], s.to_local[q]});
    }
  s.graph = Graph(s.to_parent.size(), std::move(local));
  return s;
}

/// Parses the edge-list format: '#' comments, a "<n> <m>" header, then m "<u> <v>" lines.
inline Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) -> Error {
    return Error("line " + std::to_string(lineno) + ": " + what);
  };
  auto data_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++lineno;
      auto first = out.find_first_not_of(" \t\r");
      if (first == std::string::npos || out[first] == '#') continue;
      return true;
    }
    return false;
  };
  auto read_pair = [&](const std::string& text, unsigned long long& a, unsigned long long& b) {
    std::istringstream ss(text);
    std::string x, y, extra;
    if (!(ss >> x >> y) || (ss >> extra)) throw fail("expected two integers");
    for (const auto* tok : {&x, &y})
      if (tok->empty() || tok->find_first_not_of("0123456789") != std::string::npos)
        throw fail("expected a non-negative integer, got '" + *tok + "'");
    try {
      a = std::stoull(x);
      b = std::stoull(y);
    } catch (const std::exception&) {
      throw fail("integer out of range");
    }
  };

  if (!data_line(line)) throw Error("missing header line");
  unsigned long long n = 0, m = 0;
  read_pair(line, n, m);
  if (n >= kNoVertex) throw fail("vertex count too large");
  std::vector<Edge> edges;
  edges.reserve(m);
  std::vector<std::pair<Edge, std::size_t>> seen;
  seen.reserve(m);
  for (unsigned long long i = 0; i < m; ++i) {
    if (!data_line(line)) throw Error("line " + std::to_string(lineno + 1) + ": expected " +
                                      std::to_string(m) + " edges, got " + std::to_string(i));
    unsigned long long u = 0, v = 0;
    read_pair(line, u, v);
    if (u >= n || v >= n) throw fail("vertex id out of range");
    if (u == v) throw fail("self-loop");
    const Edge e{static_cast<VertexId>(u), static_cast<VertexId>(v)};
    edges.push_back(e);
    seen.emplace_back(e, lineno);
  }
  if (data_line(line)) throw fail("unexpected data after the declared edges");
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i].first == seen[i - 1].first) {
      lineno = seen[i].second;
      throw fail("duplicate edge");
    }
  return Graph(n, std::move(edges));
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace ssrp

#endif  // SSRP_GRAPH_HPP
