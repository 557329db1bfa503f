#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "geomon/errors.hpp"

namespace geomon {

using Vertex = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

// Unordered vertex pair, always stored with first < second.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  static VertexPair of(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

using Edge = VertexPair;

// Immutable simple undirected graph on vertices 0..n-1.
//
// Edges are kept sorted, and an edge's position in edges() is its index in
// every edge bitmap produced by the library.
class Graph {
 public:
  Graph() = default;

  // Validates and builds a graph. Self-loops, out-of-range endpoints and
  // repeated unordered pairs raise InvalidEdge. `labels` is either empty or
  // holds one unique label per vertex.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list,
                          std::vector<std::string> labels = {}) {
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
      if (a >= n || b >= n) {
        throw InvalidEdge("edge (" + std::to_string(a) + "," + std::to_string(b) +
                          ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      }
      if (a == b) throw InvalidEdge("self-loop at vertex " + std::to_string(a));
      g.edges_.push_back(VertexPair::of(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
      throw InvalidEdge("duplicate edge (" + std::to_string(dup->first) + "," +
                        std::to_string(dup->second) + ")");
    }

    if (!labels.empty()) {
      if (labels.size() != n) {
        throw DuplicateLabel("label table has " + std::to_string(labels.size()) + " entries for " +
                             std::to_string(n) + " vertices");
      }
      std::unordered_map<std::string, Vertex> seen;
      for (Vertex v = 0; v < n; ++v) {
        auto [it, inserted] = seen.emplace(labels[v], v);
        if (!inserted) throw DuplicateLabel("label '" + labels[v] + "' used twice");
      }
      g.labels_ = std::move(labels);
    }

    g.adj_.assign(n, {});
    g.adj_bits_.assign(n, Bitset(n));
    for (const auto& e : g.edges_) {
      g.adj_[e.first].push_back(e.second);
      g.adj_[e.second].push_back(e.first);
      g.adj_bits_[e.first].set(e.second);
      g.adj_bits_[e.second].set(e.first);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list,
                          std::vector<std::string> labels = {}) {
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size()),
                      std::move(labels));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  const Bitset& neighbor_bits(Vertex v) const { return adj_bits_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex a, Vertex b) const { return adj_bits_[a].test(b); }

  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const {
    const auto key = VertexPair::of(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  // Label of v, or its decimal index when the graph is unlabeled.
  std::string label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

  std::optional<Vertex> find_label(const std::string& name) const {
    if (labels_.empty()) {
      try {
        std::size_t pos = 0;
        const auto value = std::stoul(name, &pos);
        if (pos == name.size() && value < n_) return static_cast<Vertex>(value);
      } catch (const std::exception&) {
      }
      return std::nullopt;
    }
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
  }

  Bitset all_edges() const { return Bitset(edges_.size()).set(); }
  Bitset all_vertices() const { return Bitset(n_).set(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Bitset> adj_bits_;
};

namespace detail {

// Vertices reachable from `start` when `blocked` (if any) is removed.
inline std::size_t reach_count(const Graph& g, Vertex start, std::optional<Vertex> blocked) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  if (blocked) seen[*blocked] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return detail::reach_count(g, 0, std::nullopt) == g.order();
}

// Vertices whose removal disconnects g, in increasing order.
inline std::vector<Vertex> cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw Disconnected();
  std::vector<Vertex> out;
  const auto n = g.order();
  if (n <= 2) return out;
  // Iterative Hopcroft-Tarjan low-link.
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Vertex> parent(n, 0);
  std::vector<char> is_cut(n, 0);
  std::vector<std::size_t> next_child(n, 0);
  int timer = 0;
  const Vertex root = 0;
  std::size_t root_children = 0;
  std::vector<Vertex> stack{root};
  disc[root] = low[root] = timer++;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto nbrs = g.neighbors(v);
    if (next_child[v] < nbrs.size()) {
      const Vertex w = nbrs[next_child[v]++];
      if (disc[w] < 0) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        if (v == root) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v] || v == root) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      if (v != root) {
        const Vertex p = parent[v];
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) is_cut[p] = 1;
      }
    }
  }
  if (root_children > 1) is_cut[root] = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

inline std::vector<Vertex> pendant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

inline bool is_simplicial(const Graph& g, Vertex v) {
  auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (!g.adjacent(nbrs[i], nbrs[j])) return false;
    }
  }
  return true;
}

// Vertices whose open neighbourhood is a clique. Isolated vertices count.
inline std::vector<Vertex> simplicial_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_simplicial(g, v)) out.push_back(v);
  }
  return out;
}

enum class TwinKind { Open, Closed };

struct TwinPair {
  VertexPair pair;
  TwinKind kind = TwinKind::Open;

  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

// All open (N(u)=N(v)) and closed (N[u]=N[v]) twin pairs, sorted by pair.
inline std::vector<TwinPair> twin_pairs(const Graph& g) {
  std::vector<TwinPair> out;
  const auto n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) {
        Bitset nu = g.neighbor_bits(u);
        Bitset nv = g.neighbor_bits(v);
        nu.set(u);
        nv.set(v);
        if (nu == nv) out.push_back({{u, v}, TwinKind::Closed});
      } else if (g.neighbor_bits(u) == g.neighbor_bits(v)) {
        out.push_back({{u, v}, TwinKind::Open});
      }
    }
  }
  return out;
}

// Graph with vertex v and its incident edges deleted; remaining vertices are
// renumbered in order.
inline Graph without_vertex(const Graph& g, Vertex removed) {
  std::vector<std::pair<Vertex, Vertex>> kept;
  auto shift = [removed](Vertex v) { return v > removed ? v - 1 : v; };
  for (const auto& e : g.edges()) {
    if (e.first != removed && e.second != removed) kept.emplace_back(shift(e.first), shift(e.second));
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels = g.labels();
    labels.erase(labels.begin() + removed);
  }
  return Graph::from_edges(g.order() - 1, kept, std::move(labels));
}

inline std::vector<Vertex> bits_to_vertices(const Bitset& bits) {
  std::vector<Vertex> out;
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) out.push_back(static_cast<Vertex>(i));
  return out;
}

}  // namespace geomon
