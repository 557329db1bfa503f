#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geomon/coverage.hpp"
#include "geomon/geodesic.hpp"
#include "geomon/graph.hpp"

namespace geomon {

enum class ParamKind { Geodetic, EdgeGeodetic, StrongEdgeGeodetic, MonitoringEdgeGeodetic };

inline constexpr std::array<ParamKind, 4> kAllKinds = {ParamKind::Geodetic, ParamKind::EdgeGeodetic,
                                                       ParamKind::StrongEdgeGeodetic,
                                                       ParamKind::MonitoringEdgeGeodetic};

inline std::string_view short_name(ParamKind kind) {
  switch (kind) {
    case ParamKind::Geodetic: return "g";
    case ParamKind::EdgeGeodetic: return "eg";
    case ParamKind::StrongEdgeGeodetic: return "seg";
    case ParamKind::MonitoringEdgeGeodetic: return "meg";
  }
  return "?";
}

inline std::optional<ParamKind> parse_kind(std::string_view name) {
  for (auto kind : kAllKinds) {
    if (short_name(kind) == name) return kind;
  }
  return std::nullopt;
}

struct SolverConfig {
  // Pins forced vertices and drops excluded ones. Turning it off gives the
  // plain exhaustive search used as a self-check oracle.
  bool use_lemma_pruning = true;
  std::size_t geodesic_cap = kDefaultGeodesicCap;
};

// One chosen shortest path for a pair of the strong edge-geodetic set.
struct PathChoice {
  VertexPair pair;
  std::vector<Vertex> path;

  friend bool operator==(const PathChoice&, const PathChoice&) = default;
};

using StrongAssignment = std::vector<PathChoice>;

struct Certificate {
  ParamKind kind = ParamKind::Geodetic;
  std::vector<Vertex> set;
  // EdgeGeodetic: a covering pair per edge. MonitoringEdgeGeodetic: a
  // monitoring pair per edge. Indexed like Graph::edges().
  std::vector<VertexPair> edge_witness;
  // StrongEdgeGeodetic only: one path per unordered pair of `set`.
  StrongAssignment assignment;

  std::size_t value() const noexcept { return set.size(); }
};

// Graph plus its shared distance and coverage tables.
struct Analysis {
  const Graph* graph = nullptr;
  GeodesicTables tables;
  CoverageTables coverage;

  explicit Analysis(const Graph& g) : graph(&g), tables(geodesic_tables(g)), coverage(coverage_tables(g, tables)) {}

  const Graph& g() const { return *graph; }
};

namespace detail {

inline bool union_over_pairs_covers(const std::vector<Bitset>& table, const PairIndex& pairs,
                                    std::span<const Vertex> set, std::size_t universe) {
  if (set.size() < 2) return universe == 0;
  Bitset acc(universe);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      acc |= table[pairs(set[i], set[j])];
    }
  }
  return acc.all();
}

}  // namespace detail

inline bool is_geodetic_set(const CoverageTables& ct, std::span<const Vertex> set, std::size_t n) {
  return detail::union_over_pairs_covers(ct.vertex_cover, ct.pairs, set, n);
}

inline bool is_edge_geodetic_set(const CoverageTables& ct, std::span<const Vertex> set, std::size_t m) {
  return detail::union_over_pairs_covers(ct.edge_cover, ct.pairs, set, m);
}

inline bool is_meg_set(const CoverageTables& ct, std::span<const Vertex> set, std::size_t m) {
  return detail::union_over_pairs_covers(ct.monitor_cover, ct.pairs, set, m);
}

inline bool is_geodetic_set(const Analysis& a, std::span<const Vertex> set) {
  return is_geodetic_set(a.coverage, set, a.g().order());
}
inline bool is_edge_geodetic_set(const Analysis& a, std::span<const Vertex> set) {
  return is_edge_geodetic_set(a.coverage, set, a.g().size());
}
inline bool is_meg_set(const Analysis& a, std::span<const Vertex> set) {
  return is_meg_set(a.coverage, set, a.g().size());
}

// Lazily enumerated geodesic edge bitmaps per pair, shared across the
// candidate sets examined by one search.
class GeodesicPathCache {
 public:
  GeodesicPathCache(const Analysis& a, std::size_t cap)
      : a_(&a), cap_(cap), entries_(a.coverage.pairs.count()) {}

  struct Entry {
    std::vector<std::vector<Vertex>> paths;
    std::vector<Bitset> edges;
  };

  const Entry& get(Vertex u, Vertex v) {
    auto& slot = entries_[a_->coverage.pairs(u, v)];
    if (!slot) {
      const auto p = VertexPair::of(u, v);
      auto list = enumerate_geodesics(a_->g(), a_->tables, p.first, p.second, cap_);
      if (list.truncated) {
        throw EnumerationCapExceeded("pair (" + a_->g().label(p.first) + "," + a_->g().label(p.second) +
                                     ") has more than " + std::to_string(cap_) + " geodesics");
      }
      Entry e;
      e.edges.reserve(list.paths.size());
      for (const auto& path : list.paths) e.edges.push_back(path_edges(a_->g(), path));
      e.paths = std::move(list.paths);
      slot = std::move(e);
    }
    return *slot;
  }

 private:
  const Analysis* a_;
  std::size_t cap_;
  std::vector<std::optional<Entry>> entries_;
};

// Backtracking search for one geodesic per pair of `set` whose union covers
// every edge. Each step takes the uncovered edge with the fewest live
// (pair, geodesic) options and tries them in turn; an option that fails is
// banned for its later siblings so no assignment is visited twice.
inline std::optional<StrongAssignment> has_strong_assignment(const Analysis& a, std::span<const Vertex> set,
                                                             GeodesicPathCache& cache) {
  const auto m = a.g().size();
  if (set.size() < 2) return std::nullopt;
  std::vector<VertexPair> pairs;
  std::vector<const GeodesicPathCache::Entry*> entries;
  Bitset reachable(m);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const auto p = VertexPair::of(set[i], set[j]);
      pairs.push_back(p);
      reachable |= a.coverage.edges_of(p.first, p.second);
    }
  }
  if (!reachable.all()) return std::nullopt;
  for (const auto& p : pairs) entries.push_back(&cache.get(p.first, p.second));

  struct Option {
    std::size_t slot;
    std::size_t path;
  };
  std::vector<Option> options;
  std::vector<std::vector<std::size_t>> by_edge(m);
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    for (std::size_t k = 0; k < entries[s]->edges.size(); ++k) {
      const auto& bits = entries[s]->edges[k];
      for (auto e = bits.find_first(); e != Bitset::npos; e = bits.find_next(e)) by_edge[e].push_back(options.size());
      options.push_back({s, k});
    }
  }

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> choice(pairs.size(), kUnset);
  std::vector<char> banned(options.size(), 0);
  auto live = [&](std::size_t o) { return !banned[o] && choice[options[o].slot] == kUnset; };

  auto search = [&](auto&& self, const Bitset& covered) -> bool {
    if (covered.all()) return true;
    std::size_t best_edge = m;
    std::size_t best_count = kUnset;
    for (std::size_t e = 0; e < m; ++e) {
      if (covered.test(e)) continue;
      std::size_t count = 0;
      for (auto o : by_edge[e]) count += live(o);
      if (count < best_count) {
        best_count = count;
        best_edge = e;
        if (count == 0) return false;
      }
    }
    std::vector<std::size_t> tried;
    bool found = false;
    for (auto o : by_edge[best_edge]) {
      if (!live(o)) continue;
      const auto [slot, path] = options[o];
      choice[slot] = path;
      if (self(self, covered | entries[slot]->edges[path])) {
        found = true;
        break;
      }
      choice[slot] = kUnset;
      banned[o] = 1;
      tried.push_back(o);
    }
    for (auto o : tried) banned[o] = 0;
    return found;
  };
  if (!search(search, Bitset(m))) return std::nullopt;

  StrongAssignment out;
  out.reserve(pairs.size());
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    out.push_back({pairs[s], entries[s]->paths[choice[s] == kUnset ? 0 : choice[s]]});
  }
  std::sort(out.begin(), out.end(), [](const PathChoice& x, const PathChoice& y) { return x.pair < y.pair; });
  return out;
}

inline std::optional<StrongAssignment> has_strong_assignment(const Analysis& a, std::span<const Vertex> set,
                                                             std::size_t cap = kDefaultGeodesicCap) {
  GeodesicPathCache cache(a, cap);
  return has_strong_assignment(a, set, cache);
}

// Neighbourhood form of the 4-cycle criterion for MEG membership: some
// neighbour u of v such that every other neighbour x not adjacent to u shares
// a common neighbour with u besides v.
inline bool four_cycle_forced(const Graph& g, Vertex v) {
  const auto nbrs = g.neighbors(v);
  for (Vertex u : nbrs) {
    bool ok = true;
    for (Vertex x : nbrs) {
      if (x == u || g.adjacent(u, x)) continue;
      Bitset common = g.neighbor_bits(u) & g.neighbor_bits(x);
      common.reset(v);
      if (common.none()) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline std::vector<Vertex> forced_vertices(const Graph& g, ParamKind kind) {
  switch (kind) {
    case ParamKind::Geodetic: return pendant_vertices(g);
    case ParamKind::EdgeGeodetic:
    case ParamKind::StrongEdgeGeodetic: return simplicial_vertices(g);
    case ParamKind::MonitoringEdgeGeodetic: {
      Bitset forced(g.order());
      for (Vertex v : simplicial_vertices(g)) forced.set(v);
      for (const auto& t : twin_pairs(g)) {
        if (g.degree(t.pair.first) >= 1) {
          forced.set(t.pair.first);
          forced.set(t.pair.second);
        }
      }
      for (Vertex v = 0; v < g.order(); ++v) {
        if (four_cycle_forced(g, v)) forced.set(v);
      }
      return bits_to_vertices(forced);
    }
  }
  return {};
}

inline std::vector<Vertex> excluded_vertices(const Graph& g, ParamKind kind) {
  if (kind == ParamKind::MonitoringEdgeGeodetic) return cut_vertices(g);
  return {};
}

namespace detail {

inline bool satisfies(const Analysis& a, ParamKind kind, std::span<const Vertex> set, GeodesicPathCache& cache,
                      std::optional<StrongAssignment>* assignment) {
  switch (kind) {
    case ParamKind::Geodetic: return is_geodetic_set(a, set);
    case ParamKind::EdgeGeodetic: return is_edge_geodetic_set(a, set);
    case ParamKind::MonitoringEdgeGeodetic: return is_meg_set(a, set);
    case ParamKind::StrongEdgeGeodetic: {
      if (!is_edge_geodetic_set(a, set)) return false;
      auto found = has_strong_assignment(a, set, cache);
      const bool ok = found.has_value();
      if (assignment) *assignment = std::move(found);
      return ok;
    }
  }
  return false;
}

// Per-edge witness pairs drawn from `set` using the given coverage table.
inline std::vector<VertexPair> edge_witnesses(const Analysis& a, const std::vector<Bitset>& table,
                                              std::span<const Vertex> set) {
  std::vector<VertexPair> out(a.g().size());
  Bitset done(a.g().size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const auto& bits = table[a.coverage.pairs(set[i], set[j])];
      for (auto e = bits.find_first(); e != Bitset::npos; e = bits.find_next(e)) {
        if (!done.test(e)) {
          done.set(e);
          out[e] = VertexPair::of(set[i], set[j]);
        }
      }
    }
  }
  return out;
}

// Calls visit(combination) for every k-subset of `pool` in lexicographic
// order; stops early when visit returns true.
template <typename Visit>
bool for_each_combination(std::span<const Vertex> pool, std::size_t k, Visit&& visit) {
  if (k > pool.size()) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Vertex> combo(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) combo[i] = pool[idx[i]];
    if (visit(std::span<const Vertex>(combo))) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// Minimum-cardinality set of the given kind; among equal sizes, the
// lexicographically smallest one.
inline Certificate minimum(const Analysis& a, ParamKind kind, const SolverConfig& cfg = {}) {
  const Graph& g = a.g();
  if (g.order() < 2) throw InvalidParameters("solvers need at least two vertices");

  std::vector<Vertex> pinned;
  Bitset dropped(g.order());
  if (cfg.use_lemma_pruning) {
    pinned = forced_vertices(g, kind);
    for (Vertex v : pinned) dropped.set(v);
    for (Vertex v : excluded_vertices(g, kind)) dropped.set(v);
  }
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!dropped.test(v)) pool.push_back(v);
  }

  GeodesicPathCache cache(a, cfg.geodesic_cap);
  std::optional<StrongAssignment> assignment;
  std::vector<Vertex> found;
  std::vector<Vertex> candidate;
  for (std::size_t k = std::max<std::size_t>(2, pinned.size()); k <= pinned.size() + pool.size(); ++k) {
    const bool hit = detail::for_each_combination(pool, k - pinned.size(), [&](std::span<const Vertex> free) {
      candidate.clear();
      std::merge(pinned.begin(), pinned.end(), free.begin(), free.end(), std::back_inserter(candidate));
      if (!detail::satisfies(a, kind, candidate, cache, &assignment)) return false;
      found = candidate;
      return true;
    });
    if (hit) break;
  }
  if (found.empty()) throw Error("no valid set found for " + std::string(short_name(kind)));

  Certificate cert;
  cert.kind = kind;
  cert.set = std::move(found);
  if (kind == ParamKind::EdgeGeodetic) cert.edge_witness = detail::edge_witnesses(a, a.coverage.edge_cover, cert.set);
  if (kind == ParamKind::MonitoringEdgeGeodetic) {
    cert.edge_witness = detail::edge_witnesses(a, a.coverage.monitor_cover, cert.set);
  }
  if (kind == ParamKind::StrongEdgeGeodetic) cert.assignment = std::move(*assignment);
  return cert;
}

inline Certificate minimum(const Graph& g, ParamKind kind, const SolverConfig& cfg = {}) {
  const Analysis a(g);
  return minimum(a, kind, cfg);
}

struct ParameterQuadruple {
  std::size_t g = 0, eg = 0, seg = 0, meg = 0;

  friend bool operator==(const ParameterQuadruple&, const ParameterQuadruple&) = default;
};

struct QuadrupleResult {
  ParameterQuadruple values;
  std::array<Certificate, 4> certificates;
};

// All four parameters over shared tables. Throws ChainViolation if the
// results are not monotone.
inline QuadrupleResult quadruple(const Analysis& a, const SolverConfig& cfg = {}) {
  QuadrupleResult out;
  for (std::size_t i = 0; i < kAllKinds.size(); ++i) out.certificates[i] = minimum(a, kAllKinds[i], cfg);
  out.values = {out.certificates[0].value(), out.certificates[1].value(), out.certificates[2].value(),
                out.certificates[3].value()};
  const auto& q = out.values;
  if (!(q.g <= q.eg && q.eg <= q.seg && q.seg <= q.meg)) {
    throw ChainViolation("chain broken: g=" + std::to_string(q.g) + " eg=" + std::to_string(q.eg) +
                         " seg=" + std::to_string(q.seg) + " meg=" + std::to_string(q.meg));
  }
  return out;
}

inline QuadrupleResult quadruple(const Graph& g, const SolverConfig& cfg = {}) {
  const Analysis a(g);
  return quadruple(a, cfg);
}

// Re-checks a certificate from scratch against the coverage predicates.
inline bool validate_certificate(const Analysis& a, const Certificate& cert) {
  const Graph& g = a.g();
  const auto& set = cert.set;
  if (!std::is_sorted(set.begin(), set.end()) || std::adjacent_find(set.begin(), set.end()) != set.end()) return false;
  if (set.size() < 2 || set.back() >= g.order()) return false;
  auto in_set = [&](Vertex v) { return std::binary_search(set.begin(), set.end(), v); };
  switch (cert.kind) {
    case ParamKind::Geodetic: return is_geodetic_set(a, set);
    case ParamKind::EdgeGeodetic:
    case ParamKind::MonitoringEdgeGeodetic: {
      if (cert.edge_witness.size() != g.size()) return false;
      for (std::size_t e = 0; e < g.size(); ++e) {
        const auto w = cert.edge_witness[e];
        if (w.first == w.second || !in_set(w.first) || !in_set(w.second)) return false;
        const bool ok = cert.kind == ParamKind::EdgeGeodetic ? edge_on_some_geodesic(a.tables, w.first, w.second, g.edges()[e])
                                                            : edge_monitored_by(a.tables, w.first, w.second, g.edges()[e]);
        if (!ok) return false;
      }
      return true;
    }
    case ParamKind::StrongEdgeGeodetic: {
      if (cert.assignment.size() != set.size() * (set.size() - 1) / 2) return false;
      Bitset covered(g.size());
      std::vector<VertexPair> seen;
      for (const auto& choice : cert.assignment) {
        const auto& p = choice.path;
        if (!in_set(choice.pair.first) || !in_set(choice.pair.second)) return false;
        if (p.size() != a.tables.dist(choice.pair.first, choice.pair.second) + 1) return false;
        if (VertexPair::of(p.front(), p.back()) != choice.pair) return false;
        for (std::size_t i = 1; i < p.size(); ++i) {
          const auto idx = g.edge_index(p[i - 1], p[i]);
          if (!idx) return false;
          covered.set(*idx);
        }
        seen.push_back(choice.pair);
      }
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
      return covered.all();
    }
  }
  return false;
}

}  // namespace geomon
