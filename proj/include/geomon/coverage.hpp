#pragma once

#include <cstddef>
#include <vector>

#include "geomon/geodesic.hpp"
#include "geomon/graph.hpp"

namespace geomon {

// Dense index of the unordered pairs {a,b}, a != b, of an n-vertex graph.
class PairIndex {
 public:
  PairIndex() = default;
  explicit PairIndex(std::size_t n) : n_(n) {}

  std::size_t count() const noexcept { return n_ < 2 ? 0 : n_ * (n_ - 1) / 2; }

  std::size_t operator()(Vertex a, Vertex b) const {
    const auto p = VertexPair::of(a, b);
    const std::size_t u = p.first;
    return u * n_ - u * (u + 1) / 2 + (p.second - u - 1);
  }

  VertexPair pair(std::size_t index) const {
    Vertex u = 0;
    std::size_t row = n_ - 1;
    while (index >= row) {
      index -= row;
      ++u;
      --row;
    }
    return {u, static_cast<Vertex>(u + 1 + index)};
  }

 private:
  std::size_t n_ = 0;
};

inline bool vertex_on_some_geodesic(const GeodesicTables& t, Vertex u, Vertex v, Vertex x) {
  return t.dist(u, x) + t.dist(x, v) == t.dist(u, v);
}

inline bool edge_on_some_geodesic(const GeodesicTables& t, Vertex u, Vertex v, const Edge& e) {
  const auto d = t.dist(u, v);
  return t.dist(u, e.first) + 1 + t.dist(e.second, v) == d || t.dist(u, e.second) + 1 + t.dist(e.first, v) == d;
}

// Number of shortest u-v paths that traverse e.
inline PathCount geodesics_through_edge(const GeodesicTables& t, Vertex u, Vertex v, const Edge& e) {
  const auto d = t.dist(u, v);
  if (t.dist(u, e.first) + 1 + t.dist(e.second, v) == d) return t.sigma(u, e.first) * t.sigma(e.second, v);
  if (t.dist(u, e.second) + 1 + t.dist(e.first, v) == d) return t.sigma(u, e.second) * t.sigma(e.first, v);
  return 0;
}

// True iff e lies on every shortest u-v path, i.e. the pair monitors e.
inline bool edge_monitored_by(const GeodesicTables& t, Vertex u, Vertex v, const Edge& e) {
  if (u == v) return false;
  return geodesics_through_edge(t, u, v, e) == t.sigma(u, v);
}

// Deletion oracle for edge_monitored_by: removing e must lengthen (or cut)
// every u-v connection.
inline bool edge_monitored_by_deletion(const Graph& g, Vertex u, Vertex v, const Edge& e) {
  if (u == v) return false;
  const auto before = distance_without_edge(g, u, v, std::nullopt);
  const auto after = distance_without_edge(g, u, v, e);
  return after > before;
}

// Per-pair coverage bitmaps, indexed by PairIndex.
struct CoverageTables {
  PairIndex pairs;
  std::vector<Bitset> vertex_cover;   // vertices on some geodesic of the pair
  std::vector<Bitset> edge_cover;     // edges on some geodesic of the pair
  std::vector<Bitset> monitor_cover;  // edges on every geodesic of the pair

  const Bitset& vertices_of(Vertex a, Vertex b) const { return vertex_cover[pairs(a, b)]; }
  const Bitset& edges_of(Vertex a, Vertex b) const { return edge_cover[pairs(a, b)]; }
  const Bitset& monitored_by(Vertex a, Vertex b) const { return monitor_cover[pairs(a, b)]; }
};

inline CoverageTables coverage_tables(const Graph& g, const GeodesicTables& t) {
  if (!is_connected(g)) throw Disconnected();
  const auto n = g.order();
  const auto m = g.size();
  CoverageTables ct;
  ct.pairs = PairIndex(n);
  const auto pair_count = ct.pairs.count();
  ct.vertex_cover.assign(pair_count, Bitset(n));
  ct.edge_cover.assign(pair_count, Bitset(m));
  ct.monitor_cover.assign(pair_count, Bitset(m));
  std::size_t p = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++p) {
      auto& vc = ct.vertex_cover[p];
      for (Vertex x = 0; x < n; ++x) {
        if (vertex_on_some_geodesic(t, u, v, x)) vc.set(x);
      }
      const auto sigma = t.sigma(u, v);
      for (std::size_t i = 0; i < m; ++i) {
        const auto through = geodesics_through_edge(t, u, v, g.edges()[i]);
        if (through == 0) continue;
        ct.edge_cover[p].set(i);
        if (through == sigma) ct.monitor_cover[p].set(i);
      }
    }
  }
  return ct;
}

struct GeodesicList {
  VertexPair pair;
  std::vector<std::vector<Vertex>> paths;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultGeodesicCap = 100000;

// Shortest u-v paths in lexicographic order, at most `cap` of them. Walks
// only DAG arcs that keep the remaining distance to v decreasing.
inline GeodesicList enumerate_geodesics(const Graph& g, const GeodesicTables& t, Vertex u, Vertex v,
                                        std::size_t cap = kDefaultGeodesicCap) {
  GeodesicList out;
  out.pair = {u, v};
  std::vector<Vertex> path{u};
  const auto total = t.dist(u, v);
  path.reserve(total + 1);
  bool stop = false;
  auto walk = [&](auto&& self, Vertex p) -> void {
    if (stop) return;
    if (p == v) {
      if (out.paths.size() == cap) {
        out.truncated = true;
        stop = true;
        return;
      }
      out.paths.push_back(path);
      return;
    }
    const auto remaining = t.dist(p, v);
    for (Vertex q : g.neighbors(p)) {
      if (t.dist(q, v) + 1 != remaining) continue;
      path.push_back(q);
      self(self, q);
      path.pop_back();
      if (stop) return;
    }
  };
  walk(walk, u);
  return out;
}

// Edge bitmap of a vertex sequence whose consecutive entries are adjacent.
inline Bitset path_edges(const Graph& g, const std::vector<Vertex>& path) {
  Bitset bits(g.size());
  for (std::size_t i = 1; i < path.size(); ++i) bits.set(*g.edge_index(path[i - 1], path[i]));
  return bits;
}

}  // namespace geomon
