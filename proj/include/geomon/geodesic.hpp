#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "geomon/graph.hpp"

namespace geomon {

using PathCount = unsigned __int128;

inline std::string to_string(PathCount value) {
  if (value == 0) return "0";
  std::string digits;
  while (value != 0) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return digits;
}

// All-pairs hop distances and shortest-path counts of a connected graph.
class GeodesicTables {
 public:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  GeodesicTables() = default;
  explicit GeodesicTables(std::size_t n) : n_(n), dist_(n * n, kUnreachable), sigma_(n * n, 0) {}

  std::size_t order() const noexcept { return n_; }
  std::uint32_t dist(Vertex a, Vertex b) const { return dist_[a * n_ + b]; }
  PathCount sigma(Vertex a, Vertex b) const { return sigma_[a * n_ + b]; }

  std::uint32_t& dist_ref(Vertex a, Vertex b) { return dist_[a * n_ + b]; }
  PathCount& sigma_ref(Vertex a, Vertex b) { return sigma_[a * n_ + b]; }

  std::uint32_t diameter() const {
    std::uint32_t best = 0;
    for (auto d : dist_) best = std::max(best, d);
    return best;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> dist_;
  std::vector<PathCount> sigma_;
};

namespace detail {

// Single-source BFS with shortest-path counting into row `s` of `t`.
inline void bfs_count(const Graph& g, Vertex s, GeodesicTables& t) {
  std::vector<Vertex> queue{s};
  queue.reserve(g.order());
  t.dist_ref(s, s) = 0;
  t.sigma_ref(s, s) = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const auto dv = t.dist(s, v);
    for (Vertex w : g.neighbors(v)) {
      auto& dw = t.dist_ref(s, w);
      if (dw == GeodesicTables::kUnreachable) {
        dw = dv + 1;
        queue.push_back(w);
      }
      if (dw == dv + 1) {
        auto& sw = t.sigma_ref(s, w);
        const PathCount add = t.sigma(s, v);
        if (sw + add < sw) throw PathCountOverflow();
        sw += add;
      }
    }
  }
}

}  // namespace detail

// Throws Disconnected unless every pair is joined by a path.
inline GeodesicTables geodesic_tables(const Graph& g) {
  if (!is_connected(g)) throw Disconnected();
  GeodesicTables t(g.order());
  for (Vertex s = 0; s < g.order(); ++s) detail::bfs_count(g, s, t);
  return t;
}

// Hop distance between a and b after deleting edge `removed`; kUnreachable
// when the deletion separates them.
inline std::uint32_t distance_without_edge(const Graph& g, Vertex a, Vertex b, std::optional<Edge> removed) {
  if (a == b) return 0;
  std::vector<std::uint32_t> dist(g.order(), GeodesicTables::kUnreachable);
  std::vector<Vertex> queue{a};
  dist[a] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if ((removed && VertexPair::of(v, w) == *removed) || dist[w] != GeodesicTables::kUnreachable) continue;
      dist[w] = dist[v] + 1;
      if (w == b) return dist[w];
      queue.push_back(w);
    }
  }
  return GeodesicTables::kUnreachable;
}

}  // namespace geomon
