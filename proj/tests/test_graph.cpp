#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "geomon/graph.hpp"
#include "geomon/harness.hpp"
#include "oracles.hpp"

using namespace geomon;

TEST(Graph, FromEdgesSortsAndIndexes) {
  const Graph g = Graph::from_edges(4, {{2, 1}, {0, 3}, {1, 0}});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 3u);
  ASSERT_EQ(g.edges().size(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 3}));
  EXPECT_EQ(g.edges()[2], (Edge{1, 2}));
  EXPECT_EQ(g.edge_index(3, 0), 1u);
  EXPECT_FALSE(g.edge_index(2, 3).has_value());
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(2, 3));
  EXPECT_EQ(g.degree(0), 2u);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), InvalidEdge);
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), InvalidEdge);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), InvalidEdge);
}

TEST(Graph, LabelsAreUniqueAndFindable) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}}, {"a", "b", "c"});
  EXPECT_TRUE(g.has_labels());
  EXPECT_EQ(g.label(1), "b");
  EXPECT_EQ(g.find_label("c"), Vertex{2});
  EXPECT_FALSE(g.find_label("z").has_value());
  EXPECT_THROW(Graph::from_edges(2, {{0, 1}}, {"a", "a"}), DuplicateLabel);
  EXPECT_EQ(fixtures::path(3).label(2), "2");
}

TEST(Graph, Connectivity) {
  EXPECT_TRUE(is_connected(fixtures::cycle(5)));
  EXPECT_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(Graph::from_edges(1, std::vector<std::pair<Vertex, Vertex>>{})));
}

TEST(Graph, CutVerticesOfPathAndCycle) {
  EXPECT_EQ(cut_vertices(fixtures::path(5)), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(cut_vertices(fixtures::cycle(5)).empty());
  EXPECT_EQ(cut_vertices(fixtures::star(3)), (std::vector<Vertex>{0}));
}

TEST(Graph, PendantAndSimplicial) {
  EXPECT_EQ(pendant_vertices(fixtures::star(3)), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(simplicial_vertices(fixtures::complete(4)).size(), 4u);
  EXPECT_TRUE(simplicial_vertices(fixtures::cycle(4)).empty());
  // Triangle with a pendant: the two degree-2 triangle vertices and the leaf.
  const Graph paw = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  EXPECT_EQ(simplicial_vertices(paw), (std::vector<Vertex>{0, 1, 3}));
}

TEST(Graph, TwinsOfC4AndK4) {
  const auto c4 = twin_pairs(fixtures::cycle(4));
  ASSERT_EQ(c4.size(), 2u);
  for (const auto& t : c4) EXPECT_EQ(t.kind, TwinKind::Open);
  const auto k4 = twin_pairs(fixtures::complete(4));
  EXPECT_EQ(k4.size(), 6u);
  for (const auto& t : k4) EXPECT_EQ(t.kind, TwinKind::Closed);
}

TEST(Graph, WithoutVertexRenumbers) {
  const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}, {"a", "b", "c", "d"});
  const Graph h = without_vertex(g, 1);
  EXPECT_EQ(h.order(), 3u);
  EXPECT_EQ(h.size(), 1u);
  EXPECT_EQ(h.label(h.edges()[0].first), "c");
  EXPECT_EQ(h.label(h.edges()[0].second), "d");
}

// Structural predicates against definition-level oracles on every
// connected graph with at most five vertices.
TEST(GraphProperty, StructureMatchesOracleExhaustively) {
  for (int n = 2; n <= 5; ++n) {
    for_each_connected_graph(n, [&](const Graph& g) {
      const auto s = oracle::from(g);
      const auto cuts = cut_vertices(g);
      for (int x = 0; x < n; ++x) {
        const bool is_cut = std::binary_search(cuts.begin(), cuts.end(), static_cast<Vertex>(x));
        ASSERT_EQ(is_cut, oracle::is_cut_vertex(s, x)) << write_edges_inline(g) << " vertex " << x;
        bool clique = true;
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) {
            if (s.adj[x][a] && s.adj[x][b] && !s.adj[a][b]) clique = false;
          }
        }
        ASSERT_EQ(is_simplicial(g, static_cast<Vertex>(x)), clique) << write_edges_inline(g);
      }
      std::size_t expected_twins = 0;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) expected_twins += oracle::twins(s, u, v, false) || oracle::twins(s, u, v, true);
      }
      const auto found = twin_pairs(g);
      ASSERT_EQ(found.size(), expected_twins) << write_edges_inline(g);
      for (const auto& t : found) {
        ASSERT_TRUE(oracle::twins(s, static_cast<int>(t.pair.first), static_cast<int>(t.pair.second),
                                  t.kind == TwinKind::Closed));
      }
    });
  }
}
