#include <gtest/gtest.h>

#include <sstream>

#include "ssrp/oracle.hpp"
#include "test_util.hpp"

using namespace ssrp;
using namespace ssrp::testing;

namespace {

std::vector<ExtDist> dists(std::initializer_list<ExtDist::Rep> v) {
  std::vector<ExtDist> out;
  for (auto x : v) out.push_back(x == ExtDist::kInfRep ? kInf : ExtDist(x));
  return out;
}

const ExtDist::Rep I = ExtDist::kInfRep;

Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

/// H_w materialized as a weighted graph with every length doubled: an extra
/// hub vertex reaches s at length eps and v at length 2 w(v) + eps, so the
/// hub distance to v is 2 d(s, v, H_w) + eps.
std::vector<ExtDist> heap_dijkstra_view(const Graph& g, const WeightFunction& w, const EdgeSet& forbidden) {
  const std::size_t n = g.num_vertices();
  WeightedGraph wg(n, false);
  const VertexId hub = wg.add_vertex();
  const FixedRational tiny = FixedRational::from_raw(1);
  for (EdgeId id = 0; id < g.num_edges(); ++id)
    if (!forbidden.contains(id)) wg.add_edge(g.edge(id).u, g.edge(id).v, FixedRational::from_int(2));
  wg.add_edge(hub, w.source, tiny);
  for (VertexId v = 0; v < n; ++v)
    if (w.weights[v].finite() && v != w.source)
      wg.add_edge(hub, v, FixedRational::from_int(2 * static_cast<std::int64_t>(w.weights[v].value())) + tiny);
  const auto d = weighted_dijkstra(wg, hub);
  std::vector<ExtDist> out(n, kInf);
  for (VertexId v = 0; v < n; ++v)
    if (d[v].finite()) out[v] = ExtDist(static_cast<ExtDist::Rep>((d[v] - tiny).to_int() / 2));
  return out;
}

}  // namespace

TEST(GraphParse, TriangleListing) {
  const Graph g = parse_graph("3 3\n0 1\n1 2\n0 2\n");
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g, triangle());
}

TEST(GraphParse, SingleVertex) {
  const Graph g = parse_graph("1 0\n");
  EXPECT_EQ(g.num_vertices(), 1u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(GraphParse, CommentsAreSkipped) {
  const Graph g = parse_graph("# header\n2 1\n# edge follows\n0 1\n");
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(GraphParse, RejectsSelfLoopWithLineNumber) {
  try {
    parse_graph("2 1\n0 0\n");
    FAIL() << "self-loop accepted";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos) << e.what();
  }
}

TEST(GraphParse, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph(""), Error);
  EXPECT_THROW(parse_graph("2 2\n0 1\n0 1\n"), Error);  // duplicate
  EXPECT_THROW(parse_graph("2 1\n0 2\n"), Error);       // out of range
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), Error);       // missing edge
  EXPECT_THROW(parse_graph("3 1\n0 1 2\n"), Error);     // extra field
  EXPECT_THROW(parse_graph("3 1\n0 1\n1 2\n"), Error);  // trailing edge
  EXPECT_THROW(parse_graph("x 1\n"), Error);
}

TEST(GraphParse, WriteRoundTrip) {
  const Graph g = random_graph(30, 90, 5);
  std::ostringstream os;
  write_graph(os, g);
  EXPECT_EQ(parse_graph(os.str()), g);
}

TEST(Bfs, Examples) {
  const Graph g = triangle();
  EXPECT_EQ(bfs(g, 0).dist, dists({0, 1, 1}));
  EXPECT_EQ(bfs(g, 0, EdgeSet::of(g, std::vector<Edge>{{0, 2}})).dist, dists({0, 1, 2}));
  const Graph isolated = make_graph(3, {{1, 2}});
  EXPECT_EQ(bfs(isolated, 0).dist, dists({0, I, I}));
}

TEST(Bfs, ReverseDirection) {
  const Graph g = triangle();
  EXPECT_EQ(bfs(g, 2, {}, Direction::kReverse).dist, dists({1, 1, 0}));
}

TEST(Bfs, ParentsFormShortestPaths) {
  const Graph g = random_graph(60, 200, 11);
  const auto r = bfs(g, 0);
  for (VertexId v = 1; v < 60; ++v) {
    ASSERT_NE(r.parent[v], kNoVertex);
    EXPECT_TRUE(g.has_edge(r.parent[v], v));
    EXPECT_EQ(r.dist[v], r.dist[r.parent[v]] + 1);
  }
}

TEST(WeightedView, Examples) {
  const Graph tri = triangle();
  EXPECT_EQ(dijkstra_weighted_view(tri, WeightFunction::infinite(3, 0)), bfs(tri, 0).dist);

  const Graph path = make_graph(3, {{0, 1}, {1, 2}});
  WeightFunction w = WeightFunction::infinite(3, 0);
  w.weights[2] = ExtDist(1);
  EXPECT_EQ(dijkstra_weighted_view(path, w, EdgeSet::of(path, std::vector<Edge>{{1, 2}}))[2], ExtDist(1));

  WeightFunction w5 = WeightFunction::infinite(3, 0);
  w5.weights[1] = ExtDist(5);
  EXPECT_EQ(dijkstra_weighted_view(tri, w5)[1], ExtDist(1));
}

TEST(WeightedView, InfiniteWeightsEqualBfsUnderRandomFailures) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 5 + seed;
    const Graph g = random_graph(n, 3 * n, seed);
    Rng rng(seed);
    EdgeSet f(g);
    for (EdgeId id = 0; id < g.num_edges(); ++id)
      if (uniform_below(rng, 4) == 0) f.insert(id);
    EXPECT_EQ(dijkstra_weighted_view(g, WeightFunction::infinite(n, 0), f), bfs(g, 0, f).dist) << seed;
  }
}

TEST(WeightedView, MatchesHeapDijkstraOnMaterializedView) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 6 + seed % 30;
    const Graph g = random_graph(n, 2 * n, seed);
    Rng rng(seed * 7);
    const WeightFunction w = random_weight_function(g, 0, rng, 5);
    EdgeSet f(g);
    for (EdgeId id = 0; id < g.num_edges(); ++id)
      if (uniform_below(rng, 3) == 0) f.insert(id);
    EXPECT_EQ(dijkstra_weighted_view(g, w, f), heap_dijkstra_view(g, w, f)) << seed;
  }
}

TEST(WeightedView, WeightRequirementPreservesDistances) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(40, 120, seed);
    Rng rng(seed);
    const WeightFunction w = random_weight_function(g, 0, rng);
    ASSERT_TRUE(satisfies_weight_requirement(g, w));
    EXPECT_EQ(dijkstra_weighted_view(g, w), bfs(g, 0).dist);
  }
}

TEST(WeightedView, DetectsViolatedRequirement) {
  const Graph g = make_graph(3, {{0, 1}, {1, 2}});
  WeightFunction w = WeightFunction::infinite(3, 0);
  w.weights[2] = ExtDist(1);
  EXPECT_FALSE(satisfies_weight_requirement(g, w));
}

TEST(Reverse, Examples) {
  const Graph g = make_graph(2, {{0, 1}});
  EXPECT_EQ(reverse(g), make_graph(2, {{1, 0}}));
  const Graph r = random_graph(25, 70, 3);
  EXPECT_EQ(reverse(reverse(r)), r);
  const Graph empty = make_graph(4, {});
  EXPECT_EQ(reverse(empty), empty);
}

TEST(InducedSubgraph, Examples) {
  const Graph g = triangle();
  const std::vector<VertexId> all{0, 1, 2};
  const Subgraph full = induced_subgraph(g, all);
  EXPECT_EQ(full.graph, g);
  EXPECT_EQ(full.to_parent, all);

  const std::vector<VertexId> keep{0, 2};
  const Subgraph s = induced_subgraph(g, keep);
  EXPECT_EQ(s.graph.num_vertices(), 2u);
  ASSERT_EQ(s.graph.num_edges(), 1u);
  EXPECT_EQ(s.graph.edge(0), (Edge{0, 1}));
  EXPECT_EQ(s.to_local[1], kNoVertex);
  EXPECT_EQ(s.to_local[2], 1u);

  EXPECT_THROW(induced_subgraph(g, std::vector<VertexId>{}), Error);
}

TEST(InducedSubgraph, KeepsExactlyInternalEdges) {
  const Graph g = random_graph(50, 200, 9);
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < 50; v += 3) keep.push_back(v);
  const Subgraph s = induced_subgraph(g, keep);
  std::size_t expected = 0;
  for (const Edge& e : g.edges())
    if (e.u % 3 == 0 && e.v % 3 == 0) {
      ++expected;
      EXPECT_TRUE(s.graph.has_edge(s.to_local[e.u], s.to_local[e.v]));
    }
  EXPECT_EQ(s.graph.num_edges(), expected);
}

TEST(ExtDist, SaturatingArithmetic) {
  EXPECT_EQ(kInf + ExtDist(3), kInf);
  EXPECT_EQ(ExtDist(2) + 3u, ExtDist(5));
  EXPECT_EQ(minus(kInf, 4), kInf);
  EXPECT_EQ(minus(ExtDist(7), 4), ExtDist(3));
  EXPECT_THROW(minus(ExtDist(3), 4), Error);
  EXPECT_EQ(to_string(kInf), "inf");
  EXPECT_EQ(parse_ext_dist("inf"), kInf);
  EXPECT_EQ(parse_ext_dist("12"), ExtDist(12));
}

TEST(Generate, ReachableAndSized) {
  Rng rng(1);
  const Graph a = random_reachable_graph(5, 4, rng);
  EXPECT_EQ(a.num_edges(), 4u);
  for (auto d : bfs(a, 0).dist) EXPECT_TRUE(d.finite());
  Rng r1(42), r2(42);
  EXPECT_EQ(random_reachable_graph(40, 160, r1), random_reachable_graph(40, 160, r2));
  Rng r3(1);
  EXPECT_THROW(random_reachable_graph(5, 21, r3), Error);
  EXPECT_THROW(random_reachable_graph(5, 3, r3), Error);
  const Graph dense = random_reachable_graph(6, 30, r3);
  EXPECT_EQ(dense.num_edges(), 30u);
}
