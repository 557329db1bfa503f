#pragma once

// Reference implementations used only by the tests. They work from the raw
// edge list with plain matrices and explicit path enumeration, sharing no
// code with the library beyond Graph's edge accessors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "geomon/graph.hpp"

namespace oracle {

struct Small {
  int n = 0;
  std::vector<std::vector<char>> adj;
  std::vector<std::pair<int, int>> edges;  // same order as Graph::edges()
  std::vector<std::vector<int>> dist;
};

inline constexpr int kInf = 1 << 20;

inline Small from(const geomon::Graph& g) {
  Small s;
  s.n = static_cast<int>(g.order());
  s.adj.assign(s.n, std::vector<char>(s.n, 0));
  for (const auto& e : g.edges()) {
    s.edges.emplace_back(static_cast<int>(e.first), static_cast<int>(e.second));
    s.adj[e.first][e.second] = s.adj[e.second][e.first] = 1;
  }
  s.dist.assign(s.n, std::vector<int>(s.n, kInf));
  for (int i = 0; i < s.n; ++i) {
    s.dist[i][i] = 0;
    for (int j = 0; j < s.n; ++j) {
      if (s.adj[i][j]) s.dist[i][j] = 1;
    }
  }
  for (int k = 0; k < s.n; ++k) {
    for (int i = 0; i < s.n; ++i) {
      for (int j = 0; j < s.n; ++j) s.dist[i][j] = std::min(s.dist[i][j], s.dist[i][k] + s.dist[k][j]);
    }
  }
  return s;
}

inline bool connected(const Small& s) {
  for (int j = 0; j < s.n; ++j) {
    if (s.dist[0][j] >= kInf) return false;
  }
  return true;
}

// Every simple u-v path with exactly dist(u,v) edges, found by unrestricted
// DFS over simple paths and filtered by length.
inline std::vector<std::vector<int>> geodesics(const Small& s, int u, int v) {
  std::vector<std::vector<int>> out;
  if (s.dist[u][v] >= kInf) return out;
  const int want = s.dist[u][v];
  std::vector<int> path{u};
  std::vector<char> used(s.n, 0);
  used[u] = 1;
  auto dfs = [&](auto&& self, int x) -> void {
    if (static_cast<int>(path.size()) - 1 > want) return;
    if (x == v) {
      if (static_cast<int>(path.size()) - 1 == want) out.push_back(path);
      return;
    }
    for (int y = 0; y < s.n; ++y) {
      if (!s.adj[x][y] || used[y]) continue;
      used[y] = 1;
      path.push_back(y);
      self(self, y);
      path.pop_back();
      used[y] = 0;
    }
  };
  dfs(dfs, u);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool path_uses_edge(const std::vector<int>& path, std::pair<int, int> e) {
  for (std::size_t i = 1; i < path.size(); ++i) {
    const int a = path[i - 1], b = path[i];
    if ((a == e.first && b == e.second) || (a == e.second && b == e.first)) return true;
  }
  return false;
}

inline bool path_uses_vertex(const std::vector<int>& path, int x) {
  return std::find(path.begin(), path.end(), x) != path.end();
}

// Geodesics of every pair, computed once per graph.
struct AllGeodesics {
  const Small* s = nullptr;
  std::vector<std::vector<std::vector<std::vector<int>>>> paths;  // [u][v], u < v

  explicit AllGeodesics(const Small& small) : s(&small) {
    paths.assign(small.n, std::vector<std::vector<std::vector<int>>>(small.n));
    for (int u = 0; u < small.n; ++u) {
      for (int v = u + 1; v < small.n; ++v) paths[u][v] = geodesics(small, u, v);
    }
  }
  const std::vector<std::vector<int>>& of(int u, int v) const { return u < v ? paths[u][v] : paths[v][u]; }
};

enum class Kind { G, EG, SEG, MEG };

inline bool is_valid(const AllGeodesics& ag, Kind kind, const std::vector<int>& set) {
  const Small& s = *ag.s;
  if (set.size() < 2) return false;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) pairs.emplace_back(set[i], set[j]);
  }
  switch (kind) {
    case Kind::G:
      for (int x = 0; x < s.n; ++x) {
        bool hit = false;
        for (auto [u, v] : pairs) {
          for (const auto& p : ag.of(u, v)) hit = hit || path_uses_vertex(p, x);
        }
        if (!hit) return false;
      }
      return true;
    case Kind::EG:
      for (auto e : s.edges) {
        bool hit = false;
        for (auto [u, v] : pairs) {
          for (const auto& p : ag.of(u, v)) hit = hit || path_uses_edge(p, e);
        }
        if (!hit) return false;
      }
      return true;
    case Kind::MEG:
      for (auto e : s.edges) {
        bool hit = false;
        for (auto [u, v] : pairs) {
          const auto& ps = ag.of(u, v);
          hit = hit || std::all_of(ps.begin(), ps.end(), [&](const auto& p) { return path_uses_edge(p, e); });
        }
        if (!hit) return false;
      }
      return true;
    case Kind::SEG: {
      // Odometer over one geodesic per pair.
      std::vector<std::size_t> pick(pairs.size(), 0);
      while (true) {
        bool all = true;
        for (auto e : s.edges) {
          bool hit = false;
          for (std::size_t k = 0; k < pairs.size() && !hit; ++k) {
            hit = path_uses_edge(ag.of(pairs[k].first, pairs[k].second)[pick[k]], e);
          }
          if (!hit) {
            all = false;
            break;
          }
        }
        if (all) return true;
        std::size_t k = 0;
        while (k < pairs.size() && ++pick[k] == ag.of(pairs[k].first, pairs[k].second).size()) pick[k++] = 0;
        if (k == pairs.size()) return false;
      }
    }
  }
  return false;
}

struct Minimum {
  int value = 0;
  std::vector<int> set;  // lexicographically first among minimum sets
};

// Plain exhaustive search: sizes upward, k-subsets in lexicographic order.
inline Minimum minimum(const AllGeodesics& ag, Kind kind) {
  const int n = ag.s->n;
  for (int k = 2; k <= n; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (is_valid(ag, kind, idx)) return {k, idx};
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {};
}

struct Values {
  int g = 0, eg = 0, seg = 0, meg = 0;
  friend bool operator==(const Values&, const Values&) = default;
};

inline Values values(const geomon::Graph& graph) {
  const Small s = from(graph);
  const AllGeodesics ag(s);
  return {minimum(ag, Kind::G).value, minimum(ag, Kind::EG).value, minimum(ag, Kind::SEG).value,
          minimum(ag, Kind::MEG).value};
}

// Labeled connected graphs on n vertices from the exponential-generating
// recurrence c(n) = 2^C(n,2) - sum_{k=1}^{n-1} C(n-1,k-1) c(k) 2^C(n-k,2).
inline std::uint64_t connected_count_recurrence(int n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  auto binom = [](int a, int b) {
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
    return r;
  };
  auto all = [](int m) { return std::uint64_t{1} << (m * (m - 1) / 2); };
  for (int m = 1; m <= n; ++m) {
    std::uint64_t sub = 0;
    for (int k = 1; k < m; ++k) sub += binom(m - 1, k - 1) * c[k] * all(m - k);
    c[m] = all(m) - sub;
  }
  return c[n];
}

// Same count by brute force: every edge subset, union-find connectivity.
inline std::uint64_t connected_count_filter(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::uint64_t count = 0;
  std::vector<int> parent(n);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int comps = n;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!(mask >> i & 1U)) continue;
      const int a = find(pairs[i].first), b = find(pairs[i].second);
      if (a != b) {
        parent[a] = b;
        --comps;
      }
    }
    count += comps == 1;
  }
  return count;
}

// Neighbourhood-definition twin test.
inline bool twins(const Small& s, int u, int v, bool closed) {
  for (int x = 0; x < s.n; ++x) {
    if (x == u || x == v) continue;
    if (s.adj[u][x] != s.adj[v][x]) return false;
  }
  return closed ? s.adj[u][v] != 0 : s.adj[u][v] == 0;
}

// Cut vertex by deletion and re-check of connectivity.
inline bool is_cut_vertex(const Small& s, int x) {
  if (s.n <= 2) return false;
  std::vector<char> seen(s.n, 0);
  const int start = x == 0 ? 1 : 0;
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < s.n; ++b) {
      if (b != x && s.adj[a][b] && !seen[b]) {
        seen[b] = 1;
        ++reached;
        stack.push_back(b);
      }
    }
  }
  return reached != s.n - 1;
}

}  // namespace oracle
