#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "geomon/coverage.hpp"
#include "geomon/harness.hpp"
#include "oracles.hpp"

using namespace geomon;

TEST(PairIndex, RoundTrips) {
  const PairIndex idx(7);
  EXPECT_EQ(idx.count(), 21u);
  std::size_t expected = 0;
  for (Vertex u = 0; u < 7; ++u) {
    for (Vertex v = u + 1; v < 7; ++v, ++expected) {
      EXPECT_EQ(idx(u, v), expected);
      EXPECT_EQ(idx(v, u), expected);
      EXPECT_EQ(idx.pair(expected), (VertexPair{u, v}));
    }
  }
}

TEST(Coverage, C4OppositePairMonitorsNothing) {
  const Graph g = fixtures::cycle(4);
  const auto t = geodesic_tables(g);
  for (const auto& e : g.edges()) {
    EXPECT_TRUE(edge_on_some_geodesic(t, 0, 2, e));
    EXPECT_FALSE(edge_monitored_by(t, 0, 2, e));
    EXPECT_FALSE(edge_monitored_by_deletion(g, 0, 2, e));
  }
  EXPECT_TRUE(edge_monitored_by(t, 0, 1, Edge{0, 1}));
  EXPECT_EQ(geodesics_through_edge(t, 0, 2, Edge{0, 1}), PathCount{1});
}

TEST(Coverage, PathMonitorsEveryInnerEdge) {
  const Graph g = fixtures::path(5);
  const auto t = geodesic_tables(g);
  for (const auto& e : g.edges()) EXPECT_TRUE(edge_monitored_by(t, 0, 4, e));
  EXPECT_FALSE(edge_monitored_by(t, 0, 0, Edge{0, 1}));
}

TEST(Coverage, EnumerateGeodesicsHonoursCap) {
  const Graph g = fixtures::complete_bipartite(2, 4);
  const auto t = geodesic_tables(g);
  const auto all = enumerate_geodesics(g, t, 0, 1);
  EXPECT_EQ(all.paths.size(), 4u);
  EXPECT_FALSE(all.truncated);
  const auto capped = enumerate_geodesics(g, t, 0, 1, 3);
  EXPECT_EQ(capped.paths.size(), 3u);
  EXPECT_TRUE(capped.truncated);
}

TEST(Coverage, PathEdgesBitmap) {
  const Graph g = fixtures::cycle(5);
  const auto bits = path_edges(g, {0, 1, 2});
  EXPECT_EQ(bits.count(), 2u);
  EXPECT_TRUE(bits.test(*g.edge_index(0, 1)));
  EXPECT_TRUE(bits.test(*g.edge_index(1, 2)));
}

namespace {

// Checks every pair and edge of g: the counting and deletion monitoring
// predicates agree with each other and with explicit path enumeration, and
// the coverage tables agree with the per-pair predicates.
void check_graph(const Graph& g, const std::string& where) {
  const auto t = geodesic_tables(g);
  const auto ct = coverage_tables(g, t);
  const auto s = oracle::from(g);
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto paths = oracle::geodesics(s, static_cast<int>(u), static_cast<int>(v));
      const auto listed = enumerate_geodesics(g, t, u, v);
      std::vector<std::vector<int>> as_int;
      for (const auto& p : listed.paths) as_int.emplace_back(p.begin(), p.end());
      ASSERT_EQ(as_int, paths) << where;
      for (Vertex x = 0; x < n; ++x) {
        const bool on = std::any_of(paths.begin(), paths.end(),
                                    [&](const auto& p) { return oracle::path_uses_vertex(p, static_cast<int>(x)); });
        ASSERT_EQ(vertex_on_some_geodesic(t, u, v, x), on) << where;
        ASSERT_EQ(ct.vertices_of(u, v).test(x), on) << where;
      }
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& e = g.edges()[i];
        const std::pair<int, int> ei{static_cast<int>(e.first), static_cast<int>(e.second)};
        const bool some = std::any_of(paths.begin(), paths.end(), [&](const auto& p) { return oracle::path_uses_edge(p, ei); });
        const bool every = std::all_of(paths.begin(), paths.end(), [&](const auto& p) { return oracle::path_uses_edge(p, ei); });
        const bool counted = edge_monitored_by(t, u, v, e);
        ASSERT_EQ(counted, edge_monitored_by_deletion(g, u, v, e)) << where << " pair " << u << "," << v;
        ASSERT_EQ(counted, every) << where;
        ASSERT_EQ(edge_on_some_geodesic(t, u, v, e), some) << where;
        ASSERT_EQ(ct.edges_of(u, v).test(i), some) << where;
        ASSERT_EQ(ct.monitored_by(u, v).test(i), every) << where;
      }
    }
  }
}

}  // namespace

TEST(CoverageProperty, PredicatesMatchOraclesExhaustively) {
  for (int n = 2; n <= 5; ++n) {
    const auto count = for_each_connected_graph(n, [&](const Graph& g) { check_graph(g, write_edges_inline(g)); });
    EXPECT_GT(count, 0u);
  }
}

TEST(CoverageProperty, PredicatesMatchOraclesOnRandomGraphs) {
  for (const auto& r : random_graph_sample(500, 6, 7, 20240607)) check_graph(r.graph, r.spec.describe());
}
