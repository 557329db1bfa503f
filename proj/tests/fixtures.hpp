#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "geomon/graph.hpp"

namespace fixtures {

using geomon::Graph;
using geomon::Vertex;

inline Graph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph::from_edges(n, e);
}

// K_{1,k}; vertex 0 is the centre.
inline Graph star(std::size_t k) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 1; i <= k; ++i) e.emplace_back(0, i);
  return Graph::from_edges(k + 1, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, static_cast<Vertex>(a + j));
  }
  return Graph::from_edges(a + b, e);
}

// Petersen graph: outer 5-cycle 0..4, spokes to 5..9, inner pentagram.
inline Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, e);
}

}  // namespace fixtures
