#ifndef SSRP_SSRP_CORE_HPP
#define SSRP_SSRP_CORE_HPP

// Single-source replacement paths for unweighted directed graphs by
// recursive tree separation. A call receives a graph H, a BFS tree K of H
// rooted at s, weight functions W (each inducing the view H_w: H plus a
// virtual edge (s, v) of length w(v)) and queries (e, x, w); it answers
// d(s, x, H_w - e). The tree is split at t into S (holding s) and T (rooted
// at t); failures and destinations in the same half recurse with adjusted
// weight functions, the rest is priced from BFS tables, sampled pivots and
// a replacement-paths call along the path P from s to t.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ssrp/graph.hpp"
#include "ssrp/random.hpp"
#include "ssrp/rp.hpp"
#include "ssrp/tree.hpp"

namespace ssrp {

struct SsrpConfig {
  double c = 3.0;
  std::uint64_t seed = 1;
  RpBackend rp_backend = RpBackend::kSampled;
  bool debug_checks = false;
  /// Drop child weight functions that carry no queries (and pivots whose
  /// interval is empty). Answers are unchanged; W sizes then fall below
  /// |W|+1 and |W|+1+|B|.
  bool prune_idle_weights = false;
  std::size_t base_case_size = 6;
  std::size_t max_pivot_retries = 64;
};

/// Query set in product form: for each weight function id, the tree edges
/// (named by child vertex, ascending) it is queried on; the destinations
/// range over all of V(H).
struct QuerySet {
  std::vector<std::vector<VertexId>> edges_by_weight;

  static QuerySet all_edges(const BfsTree& k, std::size_t num_weights) {
    std::vector<VertexId> all;
    for (VertexId v = 0; v < k.size(); ++v)
      if (v != k.root()) all.push_back(v);
    return QuerySet{std::vector<std::vector<VertexId>>(num_weights, all)};
  }

  std::uint64_t count(std::size_t n_h) const {
    std::uint64_t c = 0;
    for (const auto& e : edges_by_weight) c += e.size();
    return c * n_h;
  }
  bool empty() const {
    for (const auto& e : edges_by_weight)
      if (!e.empty()) return false;
    return true;
  }
};

/// Answers for a query set. Only on-path pairs (x below e's head) are
/// stored; the rest resolve to d(s, x) through the LCA index.
class EstimateTable {
 public:
  EstimateTable() = default;

  EstimateTable(BfsTree tree, const QuerySet& q)
      : tree_(std::move(tree)), lca_(tree_), offset_(q.edges_by_weight.size()), values_(q.edges_by_weight.size()) {
    for (std::size_t w = 0; w < q.edges_by_weight.size(); ++w) {
      if (q.edges_by_weight[w].empty()) continue;
      offset_[w].assign(tree_.size(), kUnqueried);
      std::uint32_t total = 0;
      for (VertexId v : q.edges_by_weight[w]) {
        if (v >= tree_.size() || v == tree_.root()) throw Error("query edge is not a tree edge");
        offset_[w][v] = total;
        total += tree_.subtree_size(v);
      }
      values_[w].assign(total, kInf);
    }
  }

  const BfsTree& tree() const { return tree_; }
  std::size_t num_weights() const { return offset_.size(); }

  bool has_query(VertexId e_child, std::uint32_t w) const {
    return w < offset_.size() && !offset_[w].empty() && offset_[w][e_child] != kUnqueried;
  }

  /// Answer for (edge (parent[e_child], e_child), x, w).
  ExtDist at(VertexId e_child, VertexId x, std::uint32_t w) const {
    if (!has_query(e_child, w)) throw Error("lookup of a query outside the query set");
    if (!on_tree_path(lca_, tree_, x, Edge{tree_.parent(e_child), e_child}))
      return ExtDist(tree_.depth(x));
    return values_[w][slot(e_child, x, w)];
  }
  ExtDist at(Edge e, VertexId x, std::uint32_t w = 0) const {
    if (!tree_.is_tree_edge(e)) throw Error("query edge is not a tree edge");
    return at(e.v, x, w);
  }

  /// Writable cell for an on-path pair.
  ExtDist& on_path(VertexId e_child, VertexId x, std::uint32_t w) { return values_[w][slot(e_child, x, w)]; }

 private:
  static constexpr std::uint32_t kUnqueried = UINT32_MAX;
  std::size_t slot(VertexId e_child, VertexId x, std::uint32_t w) const {
    return offset_[w][e_child] + (tree_.pre(x) - tree_.pre(e_child));
  }

  BfsTree tree_;
  LcaIndex lca_;
  std::vector<std::vector<std::uint32_t>> offset_;
  std::vector<std::vector<ExtDist>> values_;
};

/// Per-recursion-node counters; emitted as one JSON line per node.
struct CallMetrics {
  std::uint32_t depth = 0;
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t weights = 0;        // |W|
  std::uint64_t queries = 0;        // |Q| as (e, x, w) triples
  std::uint64_t added_queries = 0;  // c_T, c_S and w_b blocks created here
  std::uint64_t weights_t = 0;      // |W_T|
  std::uint64_t weights_s = 0;      // |W_S|
  std::uint64_t pivots = 0;         // |B|
  std::uint64_t path_length = 0;    // |P|
  std::uint64_t max_pivot_interval_product = 0;  // max_k |P_k| * |B_k|
  std::uint64_t traversals = 0;
  std::uint64_t edges_scanned = 0;
  double wall_ms = 0;  // exclusive of children
  bool base_case = false;
};

// ---------------------------------------------------------------------------
// Pivots and path intervals

/// B_k for k = 1..floor(log2 n_h), stored at index k - 1.
inline std::vector<std::vector<VertexId>> sample_pivots(std::size_t n_h, std::size_t global_n, double c, Rng& rng,
                                                        std::size_t max_retries = 64) {
  if (n_h < 2) throw Error("pivot sampling needs at least 2 vertices");
  const std::size_t levels = static_cast<std::size_t>(std::bit_width(n_h)) - 1;
  const double root = std::floor(std::sqrt(static_cast<double>(n_h)));
  const double ln_n = std::log(static_cast<double>(std::max(global_n, n_h)));
  std::vector<std::vector<VertexId>> b(levels);
  for (std::size_t k = 1; k <= levels; ++k) {
    const double scale = std::ldexp(1.0, static_cast<int>(k));
    const double p = std::min(1.0, c * ln_n / (scale * root));
    const double cap = 3.0 * c * ln_n * root / scale;
    auto& bk = b[k - 1];
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt > max_retries) throw Error("pivot resampling budget exhausted");
      bk.clear();
      for (VertexId v = 0; v < n_h; ++v)
        if (bernoulli(rng, p)) bk.push_back(v);
      if (p >= 1.0 || static_cast<double>(bk.size()) <= cap) break;
    }
  }
  return b;
}

/// Edge-disjoint split of P into intervals P_0, P_1, ... by distance to t.
struct PathIntervals {
  /// interval_of_edge[i] is the k of edge (path[i], path[i+1]).
  std::vector<std::uint32_t> interval_of_edge;
  /// Edge indices per interval, ordered from s towards t.
  std::vector<std::vector<std::uint32_t>> edges_of;
};

/// The edge whose head lies at distance j from t goes to P_0 when
/// j < 2*floor(sqrt n_h), otherwise to the P_k with 2^k r <= j < 2^(k+1) r.
inline PathIntervals partition_path(std::size_t path_length, std::size_t n_h) {
  const std::size_t levels = n_h >= 2 ? static_cast<std::size_t>(std::bit_width(n_h)) - 1 : 0;
  const auto r = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n_h))));
  PathIntervals pi;
  pi.interval_of_edge.resize(path_length);
  pi.edges_of.assign(levels + 1, {});
  for (std::size_t i = 0; i < path_length; ++i) {
    const std::size_t j = path_length - 1 - i;  // d(head, t)
    std::uint32_t k = 0;
    if (j >= 2 * r) {
      k = 1;
      while ((r << (k + 1)) <= j) ++k;
    }
    if (k > levels) throw Error("path longer than the interval scales allow");
    pi.interval_of_edge[i] = k;
    pi.edges_of[k].push_back(static_cast<std::uint32_t>(i));
  }
  return pi;
}

// ---------------------------------------------------------------------------
// Recursion

namespace detail {

struct SsrpContext {
  const SsrpConfig& cfg;
  std::size_t global_n;
  std::vector<CallMetrics>* metrics;
};

inline ExtDist sub(ExtDist a, std::uint32_t b) { return minus(a, b); }

inline void check_weights(const Graph& h, std::span<const WeightFunction> w, const char* what) {
  for (const auto& f : w)
    if (!satisfies_weight_requirement(h, f)) throw Error(std::string("weight requirement violated: ") + what);
}

struct ChildCall {
  Subgraph sub;
  BfsTree tree;
  std::vector<WeightFunction> weights;
  QuerySet queries;
  std::vector<std::uint32_t> restricted_index;  // parent w -> child id of w|_side, or UINT32_MAX
  std::uint32_t cover_index = 0;                // c_T / c_S
};

inline ChildCall make_child_frame(const Graph& h, const BfsTree& k, std::span<const VertexId> keep, VertexId root) {
  ChildCall c;
  c.sub = induced_subgraph(h, keep);
  std::vector<VertexId> parent(keep.size(), kNoVertex);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const VertexId p = c.sub.to_parent[i];
    if (p != root) parent[i] = c.sub.to_local[k.parent(p)];
  }
  c.tree = BfsTree(c.sub.to_local[root], std::move(parent));
  return c;
}

inline EstimateTable solve_rec(const Graph& h, const BfsTree& k, std::span<const WeightFunction> w_set,
                               const QuerySet& q, std::uint64_t seed, std::uint32_t depth, const SsrpContext& ctx);

inline EstimateTable base_case(const Graph& h, const BfsTree& k, std::span<const WeightFunction> w_set,
                               const QuerySet& q) {
  EstimateTable out(k, q);
  for (std::uint32_t w = 0; w < q.edges_by_weight.size(); ++w)
    for (VertexId v : q.edges_by_weight[w]) {
      EdgeSet f(h);
      f.insert(h, Edge{k.parent(v), v});
      const auto d = dijkstra_weighted_view(h, w_set[w], f);
      const auto first = k.preorder().begin() + k.pre(v);
      for (auto it = first; it != first + k.subtree_size(v); ++it) out.on_path(v, *it, w) = d[*it];
    }
  return out;
}

inline EstimateTable solve_rec(const Graph& h, const BfsTree& k, std::span<const WeightFunction> w_set,
                               const QuerySet& q, std::uint64_t seed, std::uint32_t depth, const SsrpContext& ctx) {
  using Clock = std::chrono::steady_clock;
  const auto t_start = Clock::now();
  auto& stats = traversal_stats();
  const TraversalStats stats_start = stats;
  const SsrpConfig& cfg = ctx.cfg;
  const std::size_t n_h = h.num_vertices();
  const VertexId s = k.root();

  CallMetrics m;
  m.depth = depth;
  m.vertices = n_h;
  m.edges = h.num_edges();
  m.weights = w_set.size();
  m.queries = q.count(n_h);
  if (q.edges_by_weight.size() != w_set.size()) throw Error("query set and weight set disagree");

  auto finish = [&](EstimateTable table, double child_ms, const TraversalStats& child_stats) {
    m.traversals = stats.traversals - stats_start.traversals - child_stats.traversals;
    m.edges_scanned = stats.edges_scanned - stats_start.edges_scanned - child_stats.edges_scanned;
    m.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t_start).count() - child_ms;
    if (ctx.metrics) ctx.metrics->push_back(m);
    return table;
  };

  if (q.empty()) return finish(EstimateTable(k, q), 0, {});
  if (n_h <= cfg.base_case_size) {
    m.base_case = true;
    return finish(base_case(h, k, w_set, q), 0, {});
  }

  Rng rng(seed);
  const auto& d_s = k;  // d(s, x, H) = depth in K

  // Separation and distances to and from t.
  const Separation sep = balanced_separator(k);
  const VertexId t = sep.t;
  const std::span<const VertexId> path = sep.path;
  const auto plen = static_cast<std::uint32_t>(sep.path_length());
  m.path_length = plen;
  const auto from_t = bfs(h, t).dist;
  const auto to_t = bfs(h, t, {}, Direction::kReverse).dist;
  const EdgeSet without_path = detail::path_edge_set(h, path);

  auto has_queries = [&](std::uint32_t w) { return !q.edges_by_weight[w].empty(); };

  // d(s, x, H_w - P).
  std::vector<std::vector<ExtDist>> avoid_p(w_set.size());
  for (std::uint32_t w = 0; w < w_set.size(); ++w)
    if (!cfg.prune_idle_weights || has_queries(w)) avoid_p[w] = dijkstra_weighted_view(h, w_set[w], without_path);

  // Pivots B_k and intervals P_k.
  const PathIntervals intervals = partition_path(plen, n_h);
  std::vector<std::vector<VertexId>> pivots_by_level;
  if (plen > 0) pivots_by_level = sample_pivots(n_h, ctx.global_n, cfg.c, rng, cfg.max_pivot_retries);
  if (cfg.prune_idle_weights)
    for (std::size_t kk = 1; kk <= pivots_by_level.size(); ++kk)
      if (intervals.edges_of[kk].empty()) pivots_by_level[kk - 1].clear();

  // Union B with per-pivot BFS in H - P and (H - P)^R.
  std::vector<std::uint32_t> pivot_id(n_h, UINT32_MAX);
  std::vector<VertexId> pivots;
  for (const auto& bk : pivots_by_level)
    for (VertexId b : bk)
      if (pivot_id[b] == UINT32_MAX) {
        pivot_id[b] = static_cast<std::uint32_t>(pivots.size());
        pivots.push_back(b);
      }
  std::sort(pivots.begin(), pivots.end());
  for (std::uint32_t i = 0; i < pivots.size(); ++i) pivot_id[pivots[i]] = i;
  m.pivots = pivots.size();
  std::vector<std::vector<ExtDist>> from_pivot(pivots.size()), to_pivot(pivots.size());
  for (std::uint32_t i = 0; i < pivots.size(); ++i) {
    from_pivot[i] = bfs(h, pivots[i], without_path).dist;
    to_pivot[i] = bfs(h, pivots[i], without_path, Direction::kReverse).dist;
  }
  for (std::size_t kk = 1; kk < intervals.edges_of.size(); ++kk) {
    const std::size_t bsize = kk - 1 < pivots_by_level.size() ? pivots_by_level[kk - 1].size() : 0;
    m.max_pivot_interval_product = std::max<std::uint64_t>(m.max_pivot_interval_product, bsize * intervals.edges_of[kk].size());
  }

  // Which path edges carry queries (edge index i names (path[i], path[i+1])).
  std::vector<std::uint8_t> path_edge_queried(plen, 0);
  for (const auto& edges : q.edges_by_weight)
    for (VertexId v : edges)
      if (sep.edge_on_path(v)) path_edge_queried[sep.path_index[v] - 1] = 1;

  // depart(e, x) for x below e's head, and depart(e, b) for pivots of e's level.
  std::vector<std::vector<ExtDist>> depart_row(plen);
  std::vector<std::vector<ExtDist>> depart_pivot(plen);  // aligned with pivots_by_level[k-1]
  auto subtree_range = [&](VertexId v) {
    const auto first = k.preorder().begin() + k.pre(v);
    return std::span<const VertexId>(first, first + k.subtree_size(v));
  };
  for (std::uint32_t kk = 1; kk < intervals.edges_of.size(); ++kk) {
    if (intervals.edges_of[kk].empty()) continue;
    const auto& bk = pivots_by_level[kk - 1];
    std::vector<std::vector<ExtDist>> prefix(bk.size());  // min over u before e of d(s,u) + d(u,b,H-P)
    for (std::size_t j = 0; j < bk.size(); ++j) {
      const auto& to_b = to_pivot[pivot_id[bk[j]]];
      prefix[j].resize(plen);
      ExtDist best = kInf;
      for (std::uint32_t i = 0; i < plen; ++i) {
        best = std::min(best, to_b[path[i]] + i);
        prefix[j][i] = best;
      }
    }
    for (std::uint32_t i : intervals.edges_of[kk]) {
      depart_pivot[i].resize(bk.size());
      for (std::size_t j = 0; j < bk.size(); ++j) depart_pivot[i][j] = prefix[j][i];
      if (!path_edge_queried[i]) continue;
      const auto below = subtree_range(path[i + 1]);
      auto& row = depart_row[i];
      row.assign(below.size(), kInf);
      for (std::size_t j = 0; j < bk.size(); ++j) {
        if (depart_pivot[i][j].is_inf()) continue;
        const auto& from_b = from_pivot[pivot_id[bk[j]]];
        for (std::size_t xi = 0; xi < below.size(); ++xi)
          row[xi] = std::min(row[xi], depart_pivot[i][j] + from_b[below[xi]]);
      }
    }
  }
  if (!intervals.edges_of.empty())
    for (std::uint32_t i : intervals.edges_of[0]) {
      if (!path_edge_queried[i]) continue;
      EdgeSet f(h);
      f.insert(h, Edge{path[i], path[i + 1]});
      const auto d = bfs(h, s, f).dist;
      const auto below = subtree_range(path[i + 1]);
      depart_row[i].resize(below.size());
      for (std::size_t xi = 0; xi < below.size(); ++xi) depart_row[i][xi] = d[below[xi]];
    }
  auto depart = [&](std::uint32_t i, VertexId x) { return depart_row[i][k.pre(x) - k.pre(path[i + 1])]; };

  // d_hat_w(s, t, e) for e on P: min of the RP estimate and the A_w recurrence.
  const bool any_path_query = std::find(path_edge_queried.begin(), path_edge_queried.end(), 1) != path_edge_queried.end();
  RpEstimates rz;
  if (any_path_query) rz = replacement_paths(h, path, cfg.rp_backend, rng, cfg.c, ctx.global_n);
  std::vector<std::vector<ExtDist>> dste(w_set.size());
  for (std::uint32_t w = 0; w < w_set.size() && any_path_query; ++w) {
    if (!has_queries(w)) continue;
    // Walk from t backwards: u_j = path[plen - j], e_j = (u_{j+1}, u_j) = edge index plen-1-j.
    dste[w].resize(plen);
    ExtDist a = avoid_p[w][t];
    for (std::uint32_t j = 0; j < plen; ++j) {
      if (j > 0) {
        const VertexId u = path[plen - j];
        a = std::min(a, avoid_p[w][u] + to_t[u]);
      }
      const std::uint32_t i = plen - 1 - j;
      dste[w][i] = std::min(rz[i], a);
    }
  }

  EstimateTable out(k, q);
  TraversalStats child_stats;
  double child_ms = 0;
  auto run_child = [&](ChildCall& c, std::uint64_t tag) {
    if (cfg.debug_checks) {
      if (!is_bfs_tree_of(c.sub.graph, c.tree)) throw Error("child tree is not a BFS tree");
      check_weights(c.sub.graph, c.weights, tag == 'S' ? "S child" : "T child");
    }
    const TraversalStats before = stats;
    const auto c0 = Clock::now();
    auto table = solve_rec(c.sub.graph, c.tree, c.weights, c.queries, derive_seed(seed, tag, depth + 1), depth + 1, ctx);
    child_ms += std::chrono::duration<double, std::milli>(Clock::now() - c0).count();
    child_stats.traversals += stats.traversals - before.traversals;
    child_stats.edges_scanned += stats.edges_scanned - before.edges_scanned;
    return table;
  };

  // Cases with e on P and x in T (x = t included).
  for (std::uint32_t w = 0; w < w_set.size(); ++w)
    for (VertexId v : q.edges_by_weight[w]) {
      if (!sep.edge_on_path(v)) continue;
      const std::uint32_t i = sep.path_index[v] - 1;
      out.on_path(v, t, w) = dste[w][i];
      for (VertexId x : subtree_range(t)) {
        if (x == t || !sep.in_t(x)) continue;
        out.on_path(v, x, w) =
            std::min({avoid_p[w][x], dste[w][i] + from_t[x], depart(i, x)});
      }
    }

  // Failure and destination in T.
  {
    ChildCall c = make_child_frame(h, k, sep.t_vertices, t);
    const auto& loc = c.sub.to_local;
    c.restricted_index.assign(w_set.size(), UINT32_MAX);
    for (std::uint32_t w = 0; w < w_set.size(); ++w) {
      std::vector<VertexId> edges;
      for (VertexId v : q.edges_by_weight[w])
        if (sep.edge_in_t(v)) edges.push_back(loc[v]);
      if (cfg.prune_idle_weights && edges.empty()) continue;
      WeightFunction f{c.tree.root(), std::vector<ExtDist>(c.sub.to_parent.size())};
      for (std::size_t i = 0; i < f.weights.size(); ++i) f.weights[i] = sub(w_set[w].weights[c.sub.to_parent[i]], plen);
      std::sort(edges.begin(), edges.end());
      c.restricted_index[w] = static_cast<std::uint32_t>(c.weights.size());
      c.weights.push_back(std::move(f));
      c.queries.edges_by_weight.push_back(std::move(edges));
    }
    WeightFunction cover{c.tree.root(), std::vector<ExtDist>(c.sub.to_parent.size(), kInf)};
    for (std::size_t i = 0; i < cover.weights.size(); ++i) {
      const VertexId v = c.sub.to_parent[i];
      ExtDist best = kInf;
      for (EdgeId id : h.in_edges(v)) {
        const VertexId u = h.edge(id).u;
        if (sep.side[u] == Separation::kS) best = std::min(best, ExtDist(d_s.depth(u) + 1));
      }
      cover.weights[i] = sub(best, plen);
    }
    c.cover_index = static_cast<std::uint32_t>(c.weights.size());
    c.weights.push_back(std::move(cover));
    c.queries.edges_by_weight.push_back(QuerySet::all_edges(c.tree, 1).edges_by_weight[0]);
    m.weights_t = c.weights.size();
    m.added_queries += c.queries.edges_by_weight.back().size() * c.sub.to_parent.size();

    const EstimateTable child = run_child(c, 'T');
    for (std::uint32_t w = 0; w < w_set.size(); ++w)
      for (VertexId v : q.edges_by_weight[w]) {
        if (!sep.edge_in_t(v)) continue;
        const VertexId lv = loc[v];
        for (VertexId x : subtree_range(v)) {
          const VertexId lx = loc[x];
          out.on_path(v, x, w) = std::min(child.at(lv, lx, c.restricted_index[w]), child.at(lv, lx, c.cover_index)) + plen;
        }
      }
  }

  // Failure and destination in S.
  {
    ChildCall c = make_child_frame(h, k, sep.s_vertices, s);
    const auto& loc = c.sub.to_local;
    const std::size_t n_s = c.sub.to_parent.size();
    c.restricted_index.assign(w_set.size(), UINT32_MAX);
    for (std::uint32_t w = 0; w < w_set.size(); ++w) {
      std::vector<VertexId> edges;
      for (VertexId v : q.edges_by_weight[w])
        if (sep.edge_in_s(v)) edges.push_back(loc[v]);
      if (cfg.prune_idle_weights && edges.empty()) continue;
      WeightFunction f{c.tree.root(), std::vector<ExtDist>(n_s)};
      for (std::size_t i = 0; i < n_s; ++i) {
        const VertexId v = c.sub.to_parent[i];
        f.weights[i] = sep.on_path(v) ? avoid_p[w][v] : w_set[w].weights[v];
      }
      std::sort(edges.begin(), edges.end());
      c.restricted_index[w] = static_cast<std::uint32_t>(c.weights.size());
      c.weights.push_back(std::move(f));
      c.queries.edges_by_weight.push_back(std::move(edges));
    }
    WeightFunction cover{c.tree.root(), std::vector<ExtDist>(n_s, kInf)};
    for (std::size_t i = 0; i < n_s; ++i) {
      const VertexId v = c.sub.to_parent[i];
      ExtDist best = kInf;
      for (EdgeId id : h.in_edges(v)) {
        const VertexId u = h.edge(id).u;
        if (sep.side[u] == Separation::kT) best = std::min(best, ExtDist(d_s.depth(u) + 1));
      }
      cover.weights[i] = best;
    }
    c.cover_index = static_cast<std::uint32_t>(c.weights.size());
    c.weights.push_back(std::move(cover));
    c.queries.edges_by_weight.push_back(QuerySet::all_edges(c.tree, 1).edges_by_weight[0]);
    m.added_queries += c.queries.edges_by_weight.back().size() * n_s;

    // One w_b per pivot, queried on the path edges of every level that sampled b.
    std::vector<std::uint32_t> pivot_weight(pivots.size());
    {
      std::vector<std::vector<VertexId>> pivot_edges(pivots.size());
      for (std::size_t kk = 1; kk <= pivots_by_level.size(); ++kk)
        for (VertexId b : pivots_by_level[kk - 1])
          for (std::uint32_t i : intervals.edges_of[kk]) pivot_edges[pivot_id[b]].push_back(loc[path[i + 1]]);
      for (std::uint32_t j = 0; j < pivots.size(); ++j) {
        WeightFunction f{c.tree.root(), std::vector<ExtDist>(n_s)};
        const ExtDist to_b(d_s.depth(pivots[j]));
        for (std::size_t i = 0; i < n_s; ++i) f.weights[i] = to_b + from_pivot[j][c.sub.to_parent[i]];
        std::sort(pivot_edges[j].begin(), pivot_edges[j].end());
        m.added_queries += pivot_edges[j].size() * n_s;
        pivot_weight[j] = static_cast<std::uint32_t>(c.weights.size());
        c.weights.push_back(std::move(f));
        c.queries.edges_by_weight.push_back(std::move(pivot_edges[j]));
      }
    }
    m.weights_s = c.weights.size();

    const EstimateTable child = run_child(c, 'S');

    // pivot(e, x) for queried path edges and x in S below e.
    std::vector<std::vector<ExtDist>> pivot_row(plen);
    for (std::uint32_t i = 0; i < plen; ++i) {
      if (!path_edge_queried[i]) continue;
      const std::uint32_t kk = intervals.interval_of_edge[i];
      if (kk == 0) continue;  // pivot(e, x) = depart(e, x) on P_0
      const auto below = subtree_range(path[i + 1]);
      auto& row = pivot_row[i];
      row.assign(below.size(), kInf);
      const VertexId le = loc[path[i + 1]];
      const auto& bk = pivots_by_level[kk - 1];
      for (std::size_t j = 0; j < bk.size(); ++j) {
        if (depart_pivot[i][j].is_inf()) continue;
        const std::uint32_t cw = pivot_weight[pivot_id[bk[j]]];
        const std::uint32_t to_b = d_s.depth(bk[j]);
        for (std::size_t xi = 0; xi < below.size(); ++xi) {
          const VertexId x = below[xi];
          if (!sep.in_s(x) || x == t) continue;
          row[xi] = std::min(row[xi], sub(child.at(le, loc[x], cw) + depart_pivot[i][j], to_b));
        }
      }
    }

    for (std::uint32_t w = 0; w < w_set.size(); ++w)
      for (VertexId v : q.edges_by_weight[w]) {
        if (!sep.edge_in_s(v)) continue;
        const VertexId lv = loc[v];
        const std::uint32_t rw = c.restricted_index[w];
        if (!sep.edge_on_path(v)) {
          for (VertexId x : subtree_range(v))
            out.on_path(v, x, w) = std::min(child.at(lv, loc[x], rw), child.at(lv, loc[x], c.cover_index));
          continue;
        }
        const std::uint32_t i = sep.path_index[v] - 1;
        const bool on_p0 = intervals.interval_of_edge[i] == 0;
        const auto below = subtree_range(v);
        for (std::size_t xi = 0; xi < below.size(); ++xi) {
          const VertexId x = below[xi];
          if (!sep.in_s(x) || x == t) continue;
          const VertexId lx = loc[x];
          const ExtDist dep = depart(i, x);
          const ExtDist piv = on_p0 ? dep : pivot_row[i][xi];
          const ExtDist jump = sub(child.at(lv, lx, c.cover_index) + dste[w][i], plen);
          out.on_path(v, x, w) = std::min({child.at(lv, lx, rw), avoid_p[w][x], dep, piv, jump});
        }
      }
  }

  return finish(std::move(out), child_ms, child_stats);
}

}  // namespace detail

/// Generalized SSRP on (H, K, W, Q). Answers never undershoot
/// d(s, x, H_w - e) and match it with high probability.
inline EstimateTable generalized_ssrp(const Graph& h, const BfsTree& k, std::span<const WeightFunction> w_set,
                                      const QuerySet& q, const SsrpConfig& cfg, std::size_t global_n = 0,
                                      std::vector<CallMetrics>* metrics = nullptr) {
  if (cfg.c < 3.0) throw Error("sampling constant C must be at least 3");
  if (k.size() != h.num_vertices()) throw Error("tree and graph sizes differ");
  for (const auto& w : w_set) {
    if (w.source != k.root()) throw Error("weight function source differs from the tree root");
    if (w.weights.size() != h.num_vertices()) throw Error("weight function size mismatch");
  }
  if (cfg.debug_checks) {
    if (!is_bfs_tree_of(h, k)) throw Error("K is not a BFS tree of H");
    detail::check_weights(h, w_set, "input");
  }
  detail::SsrpContext ctx{cfg, std::max(global_n, h.num_vertices()), metrics};
  return detail::solve_rec(h, k, w_set, q, cfg.seed, 0, ctx);
}

struct SsrpResult {
  EstimateTable table;  // weight id 0 is w = infinity
  std::vector<CallMetrics> metrics;
  const BfsTree& tree() const { return table.tree(); }
};

/// Classic SSRP: estimates of d(s, x, G - e) for every tree edge e of the
/// BFS tree from s and every vertex x.
inline SsrpResult solve_ssrp(const Graph& g, VertexId s, const SsrpConfig& cfg) {
  BfsTree tree = build_bfs_tree(g, s);
  const std::vector<WeightFunction> w{WeightFunction::infinite(g.num_vertices(), s)};
  const QuerySet q = QuerySet::all_edges(tree, 1);
  SsrpResult r;
  r.table = generalized_ssrp(g, tree, w, q, cfg, g.num_vertices(), &r.metrics);
  return r;
}

}  // namespace ssrp

#endif  // SSRP_SSRP_CORE_HPP
