#ifndef SSRP_TREE_HPP
#define SSRP_TREE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ssrp/graph.hpp"

namespace ssrp {

/// Rooted spanning tree over vertices 0..n-1. A tree edge is named by its
/// child vertex v, meaning the edge (parent[v], v).
class BfsTree {
 public:
  BfsTree() = default;

  /// Builds from a parent array; parent[root] must be kNoVertex.
  BfsTree(VertexId root, std::vector<VertexId> parent) : root_(root), parent_(std::move(parent)) {
    const std::size_t n = parent_.size();
    if (root_ >= n) throw Error("tree root out of range");
    if (parent_[root_] != kNoVertex) throw Error("tree root has a parent");
    children_.assign(n, {});
    for (VertexId v = 0; v < n; ++v) {
      if (v == root_) continue;
      if (parent_[v] >= n) throw Error("vertex " + std::to_string(v) + " has no tree parent");
      children_[parent_[v]].push_back(v);
    }
    depth_.assign(n, 0);
    pre_.assign(n, kNoVertex);
    size_.assign(n, 1);
    order_.clear();
    order_.reserve(n);
    std::vector<VertexId> stack{root_};
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      pre_[u] = static_cast<VertexId>(order_.size());
      order_.push_back(u);
      for (auto it = children_[u].rbegin(); it != children_[u].rend(); ++it) {
        depth_[*it] = depth_[u] + 1;
        stack.push_back(*it);
      }
    }
    if (order_.size() != n) throw Error("parent array does not form a tree");
    for (auto it = order_.rbegin(); it != order_.rend(); ++it)
      if (*it != root_) size_[parent_[*it]] += size_[*it];
  }

  std::size_t size() const { return parent_.size(); }
  VertexId root() const { return root_; }
  VertexId parent(VertexId v) const { return parent_[v]; }
  std::uint32_t depth(VertexId v) const { return depth_[v]; }
  std::span<const VertexId> children(VertexId v) const { return children_[v]; }
  std::span<const VertexId> parents() const { return parent_; }

  /// Preorder position; the subtree of v occupies [pre(v), pre(v) + subtree_size(v)).
  VertexId pre(VertexId v) const { return pre_[v]; }
  std::uint32_t subtree_size(VertexId v) const { return size_[v]; }
  std::span<const VertexId> preorder() const { return order_; }

  bool in_subtree(VertexId x, VertexId v) const {
    return pre_[x] >= pre_[v] && pre_[x] < pre_[v] + size_[v];
  }
  bool is_tree_edge(Edge e) const {
    return e.v < parent_.size() && e.u < parent_.size() && parent_[e.v] == e.u;
  }

  /// Vertices on the root -> v path, root first.
  std::vector<VertexId> path_to(VertexId v) const {
    std::vector<VertexId> p;
    for (VertexId x = v; x != kNoVertex; x = parent_[x]) p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;
  }

 private:
  VertexId root_ = 0;
  std::vector<VertexId> parent_;
  std::vector<std::vector<VertexId>> children_;
  std::vector<std::uint32_t> depth_;
  std::vector<VertexId> pre_;
  std::vector<std::uint32_t> size_;
  std::vector<VertexId> order_;
};

inline BfsTree build_bfs_tree(const Graph& g, VertexId root) {
  auto r = bfs(g, root);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (r.dist[v].is_inf()) throw Error("vertex " + std::to_string(v) + " unreachable from " + std::to_string(root));
  return BfsTree(root, std::move(r.parent));
}

/// Checks that every tree edge exists in g and depths equal BFS distances.
inline bool is_bfs_tree_of(const Graph& g, const BfsTree& k) {
  if (k.size() != g.num_vertices()) return false;
  const auto d = bfs(g, k.root()).dist;
  for (VertexId v = 0; v < k.size(); ++v) {
    if (d[v] != ExtDist(k.depth(v))) return false;
    if (v != k.root() && !g.has_edge(k.parent(v), v)) return false;
  }
  return true;
}

/// Split of a tree into two edge-disjoint subtrees S (holding the root) and T
/// (rooted at t) with V(S) and V(T) sharing only t.
struct Separation {
  enum Side : std::uint8_t { kS = 0, kT = 1, kBoth = 2 };

  VertexId t = 0;
  std::vector<Side> side;          // per vertex; t is kBoth
  std::vector<VertexId> s_vertices;  // ascending, includes t
  std::vector<VertexId> t_vertices;  // ascending, includes t
  std::vector<VertexId> path;      // root .. t
  std::vector<std::uint32_t> path_index;  // position on path (0 = root), or UINT32_MAX

  bool in_s(VertexId v) const { return side[v] != kT; }
  bool in_t(VertexId v) const { return side[v] != kS; }
  bool on_path(VertexId v) const { return path_index[v] != UINT32_MAX; }
  std::size_t path_length() const { return path.size() - 1; }

  /// Tree edge named by child v lies in E(T) iff v is a T-only vertex.
  bool edge_in_t(VertexId v) const { return side[v] == kT; }
  bool edge_in_s(VertexId v) const { return side[v] != kT; }
  /// Edge (parent[v], v) lies on P iff v is on P and is not the root.
  bool edge_on_path(VertexId v) const { return on_path(v) && path_index[v] > 0; }
};

/// Balanced separator: descend from the root into the heaviest child (lowest
/// id on ties) while that child's subtree has more than floor(n/3) vertices.
/// Child subtrees of the stopping vertex t then go to T in ascending id order
/// until |V(T)| > floor(n/3); after that a child is added only if it brings
/// |V(T)| closer to |V(S)|.
inline Separation balanced_separator(const BfsTree& k) {
  const std::size_t n = k.size();
  if (n < 3) throw Error("balanced separator needs at least 3 vertices");
  const std::size_t need = n / 3 + 1;

  VertexId t = k.root();
  while (true) {
    VertexId heavy = kNoVertex;
    for (VertexId c : k.children(t))
      if (heavy == kNoVertex || k.subtree_size(c) > k.subtree_size(heavy) ||
          (k.subtree_size(c) == k.subtree_size(heavy) && c < heavy))
        heavy = c;
    if (heavy == kNoVertex || k.subtree_size(heavy) < need) break;
    t = heavy;
  }

  Separation sep;
  sep.t = t;
  sep.side.assign(n, Separation::kS);
  sep.side[t] = Separation::kBoth;
  std::vector<VertexId> kids(k.children(t).begin(), k.children(t).end());
  std::sort(kids.begin(), kids.end());
  std::size_t t_size = 1;
  auto imbalance = [n](std::size_t t_sz) {
    const std::size_t s_sz = n + 1 - t_sz;
    return t_sz > s_sz ? t_sz - s_sz : s_sz - t_sz;
  };
  for (VertexId c : kids) {
    if (t_size >= need && imbalance(t_size + k.subtree_size(c)) >= imbalance(t_size)) continue;
    const auto first = k.preorder().begin() + k.pre(c);
    for (auto it = first; it != first + k.subtree_size(c); ++it) sep.side[*it] = Separation::kT;
    t_size += k.subtree_size(c);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (sep.in_s(v)) sep.s_vertices.push_back(v);
    if (sep.in_t(v)) sep.t_vertices.push_back(v);
  }
  sep.path = k.path_to(t);
  sep.path_index.assign(n, UINT32_MAX);
  for (std::uint32_t i = 0; i < sep.path.size(); ++i) sep.path_index[sep.path[i]] = i;
  return sep;
}

/// Constant-time LCA by Euler tour plus a sparse table of depth minima.
class LcaIndex {
 public:
  LcaIndex() = default;

  explicit LcaIndex(const BfsTree& k) : depth_(k.size()), first_(k.size()) {
    const std::size_t n = k.size();
    euler_.reserve(2 * n);
    for (VertexId v = 0; v < n; ++v) depth_[v] = k.depth(v);
    // Iterative Euler tour: (vertex, next child index).
    std::vector<std::pair<VertexId, std::size_t>> stack{{k.root(), 0}};
    first_[k.root()] = 0;
    euler_.push_back(k.root());
    while (!stack.empty()) {
      auto& [u, i] = stack.back();
      if (i < k.children(u).size()) {
        const VertexId c = k.children(u)[i++];
        first_[c] = static_cast<std::uint32_t>(euler_.size());
        euler_.push_back(c);
        stack.push_back({c, 0});
      } else {
        stack.pop_back();
        if (!stack.empty()) euler_.push_back(stack.back().first);
      }
    }
    const std::size_t len = euler_.size();
    const std::size_t levels = static_cast<std::size_t>(std::bit_width(len));
    table_.assign(levels, {});
    table_[0] = euler_;
    for (std::size_t j = 1; j < levels; ++j) {
      const std::size_t span = std::size_t{1} << j;
      table_[j].resize(len - span + 1);
      for (std::size_t i = 0; i + span <= len; ++i)
        table_[j][i] = shallower(table_[j - 1][i], table_[j - 1][i + span / 2]);
    }
  }

  VertexId lca(VertexId a, VertexId b) const {
    std::size_t l = first_[a], r = first_[b];
    if (l > r) std::swap(l, r);
    const std::size_t j = static_cast<std::size_t>(std::bit_width(r - l + 1)) - 1;
    return shallower(table_[j][l], table_[j][r + 1 - (std::size_t{1} << j)]);
  }

 private:
  VertexId shallower(VertexId a, VertexId b) const { return depth_[b] < depth_[a] ? b : a; }

  std::vector<std::uint32_t> depth_;
  std::vector<std::uint32_t> first_;
  std::vector<VertexId> euler_;
  std::vector<std::vector<VertexId>> table_;
};

inline LcaIndex build_lca(const BfsTree& k) { return LcaIndex(k); }

/// True iff tree edge e lies on the root -> x path of the tree.
inline bool on_tree_path(const LcaIndex& idx, const BfsTree& k, VertexId x, Edge e) {
  if (!k.is_tree_edge(e)) throw Error("edge " + std::to_string(e.u) + "->" + std::to_string(e.v) + " is not a tree edge");
  return idx.lca(e.v, x) == e.v;
}

}  // namespace ssrp

#endif  // SSRP_TREE_HPP
