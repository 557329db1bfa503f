#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "geomon/constructions.hpp"
#include "geomon/errors.hpp"
#include "geomon/graph.hpp"
#include "geomon/solvers.hpp"

namespace geomon {

// ---------------------------------------------------------------------------
// Quadruple verification and sweeps

struct VerifyRecord {
  Quadruple target;
  Feasibility status = Feasibility::InvalidOrder;
  std::optional<Family> family;
  std::size_t order = 0;  // vertices of the built graph
  std::size_t size = 0;   // edges of the built graph
  std::optional<ParameterQuadruple> measured;
  bool pass = false;
  double seconds = 0.0;
  std::string cause;  // why a record failed
};

inline bool matches(const ParameterQuadruple& p, const Quadruple& q) {
  return p.g == static_cast<std::size_t>(q.a) && p.eg == static_cast<std::size_t>(q.b) &&
         p.seg == static_cast<std::size_t>(q.c) && p.meg == static_cast<std::size_t>(q.d);
}

// Infeasible quadruples pass when realize rejects them; feasible ones pass
// when the exact solvers return the target on the built graph.
inline VerifyRecord verify_quadruple(const Quadruple& q, const SolverConfig& cfg = {}) {
  VerifyRecord rec;
  rec.target = q;
  const auto start = std::chrono::steady_clock::now();
  const auto outcome = realize(q);
  rec.status = outcome.status;
  if (outcome.status != Feasibility::Feasible) {
    rec.pass = !outcome.realization.has_value();
    if (!rec.pass) rec.cause = "infeasible quadruple was realized";
  } else if (!outcome.realization) {
    rec.cause = "no construction produced";
  } else {
    const auto& built = *outcome.realization;
    rec.family = built.plan.family;
    rec.order = built.graph.order();
    rec.size = built.graph.size();
    try {
      rec.measured = quadruple(built.graph, cfg).values;
      rec.pass = matches(*rec.measured, q);
      if (!rec.pass) rec.cause = "solver values differ from target";
    } catch (const Error& e) {
      rec.cause = e.what();
    }
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

struct SweepReport {
  int max_d = 0;
  std::vector<VerifyRecord> entries;
  std::size_t passed = 0;    // feasible and verified
  std::size_t failed = 0;
  std::size_t rejected = 0;  // infeasible and correctly rejected
  double seconds = 0.0;
};

// Every 2 <= a <= b <= c <= d <= max_d in lexicographic order. `progress`,
// when set, sees each record as soon as it is done.
inline SweepReport sweep(int max_d, const SolverConfig& cfg = {},
                         const std::function<void(const VerifyRecord&)>& progress = {}) {
  if (max_d < 2) throw InvalidParameters("sweep needs max_d >= 2");
  SweepReport report;
  report.max_d = max_d;
  const auto start = std::chrono::steady_clock::now();
  for (int a = 2; a <= max_d; ++a) {
    for (int b = a; b <= max_d; ++b) {
      for (int c = b; c <= max_d; ++c) {
        for (int d = c; d <= max_d; ++d) {
          auto rec = verify_quadruple({a, b, c, d}, cfg);
          if (!rec.pass) {
            ++report.failed;
          } else if (rec.status == Feasibility::Feasible) {
            ++report.passed;
          } else {
            ++report.rejected;
          }
          if (progress) progress(rec);
          report.entries.push_back(std::move(rec));
        }
      }
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Graph universes

inline constexpr int kMaxEnumerationOrder = 7;

// Every connected labeled graph on n vertices, one edge subset at a time.
// Subsets are visited in increasing bitmask order over the pairs
// (0,1), (0,2), .., (n-2,n-1).
class ConnectedGraphStream {
 public:
  explicit ConnectedGraphStream(int n) : n_(n) {
    if (n < 2 || n > kMaxEnumerationOrder) {
      throw RangeTooLarge("connected-graph enumeration supports 2 <= n <= " + std::to_string(kMaxEnumerationOrder));
    }
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
    }
    limit_ = std::uint64_t{1} << pairs_.size();
  }

  std::optional<Graph> next() {
    while (mask_ < limit_) {
      const auto mask = mask_++;
      if (!connected(mask)) continue;
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (mask >> i & 1U) edges.push_back(pairs_[i]);
      }
      return Graph::from_edges(static_cast<std::size_t>(n_), edges);
    }
    return std::nullopt;
  }

 private:
  bool connected(std::uint64_t mask) const {
    std::uint32_t reached = 1;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (!(mask >> i & 1U)) continue;
        const auto [u, v] = pairs_[i];
        const bool hu = reached >> u & 1U, hv = reached >> v & 1U;
        if (hu != hv) {
          reached |= (1U << u) | (1U << v);
          grew = true;
        }
      }
    }
    return reached == (1U << n_) - 1;
  }

  int n_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t limit_ = 0;
};

// "0-1 0-2 ..." for diagnostics.
inline std::string write_edges_inline(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    if (!out.empty()) out += ' ';
    out += g.label(e.first) + "-" + g.label(e.second);
  }
  return out;
}

inline ConnectedGraphStream enumerate_connected_graphs(int n) { return ConnectedGraphStream(n); }

// Calls visit(g) for each connected labeled graph on n vertices and returns
// how many there were.
template <typename Visit>
std::size_t for_each_connected_graph(int n, Visit&& visit) {
  auto stream = enumerate_connected_graphs(n);
  std::size_t count = 0;
  while (auto g = stream.next()) {
    ++count;
    visit(*g);
  }
  return count;
}

struct RandomGraphSpec {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;  // samples drawn until one was connected

  std::string describe() const {
    return "G(n=" + std::to_string(n) + ", p=" + std::to_string(p) + ") seed=" + std::to_string(seed) +
           " attempts=" + std::to_string(attempts);
  }
};

struct RandomGraph {
  Graph graph;
  RandomGraphSpec spec;
};

// Erdos-Renyi G(n, p), resampled from the same generator until connected.
inline RandomGraph random_connected_graph(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1 || p <= 0.0 || p > 1.0) throw InvalidParameters("random graphs need n >= 1 and 0 < p <= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  RandomGraph out;
  out.spec = {n, p, seed, 0};
  while (true) {
    ++out.spec.attempts;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) {
      out.graph = std::move(g);
      return out;
    }
  }
}

// `count` seeded connected graphs. Graph i uses seed base_seed + i, an order
// drawn from [min_n, max_n] and an edge probability from [0.25, 0.75].
inline std::vector<RandomGraph> random_graph_sample(std::size_t count, std::size_t min_n, std::size_t max_n,
                                                    std::uint64_t base_seed) {
  std::vector<RandomGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::mt19937_64 pick(base_seed + i);
    const auto n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(pick);
    const double p = std::uniform_real_distribution<double>(0.25, 0.75)(pick);
    out.push_back(random_connected_graph(n, p, pick()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural claims checked against the V \ {v} forcing oracle

struct LemmaVerdict {
  std::string id;
  std::string claim;
  bool pass = true;
  std::size_t checks = 0;  // individual instances examined
  std::string detail;      // first counterexample, if any
};

inline LemmaVerdict verdict(std::string id, std::string claim) {
  LemmaVerdict v;
  v.id = std::move(id);
  v.claim = std::move(claim);
  return v;
}

inline constexpr std::size_t kAssignmentProductCap = std::size_t{1} << 20;

namespace detail {

inline std::vector<Vertex> all_but(std::size_t n, Vertex skip) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (v != skip) out.push_back(v);
  }
  return out;
}

inline std::vector<Vertex> mask_to_set(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1U) out.push_back(v);
  }
  return out;
}

// True iff every choice of one geodesic per pair of `set` covers all edges,
// by walking the full product of geodesic lists. Empty when the product
// exceeds the cap.
inline std::optional<bool> every_assignment_covers(const Analysis& a, std::span<const Vertex> set) {
  const Graph& g = a.g();
  std::vector<std::vector<Bitset>> options;
  std::size_t product = 1;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const auto list = enumerate_geodesics(g, a.tables, set[i], set[j]);
      if (list.truncated) return std::nullopt;
      std::vector<Bitset> bits;
      for (const auto& p : list.paths) bits.push_back(path_edges(g, p));
      product *= bits.size();
      if (product > kAssignmentProductCap) return std::nullopt;
      options.push_back(std::move(bits));
    }
  }
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    Bitset covered(g.size());
    for (std::size_t k = 0; k < options.size(); ++k) covered |= options[k][pick[k]];
    if (!covered.all()) return false;
    std::size_t k = 0;
    while (k < options.size() && ++pick[k] == options[k].size()) pick[k++] = 0;
    if (k == options.size()) return true;
  }
}

}  // namespace detail

// Evaluates the structural claims the solvers rely on, each against an
// oracle that does not use the claim itself. Meant for small graphs: the
// minimal-set and assignment checks enumerate vertex subsets.
inline std::vector<LemmaVerdict> lemma_suite(const Graph& g) {
  if (g.order() < 2) throw InvalidParameters("lemma_suite needs at least two vertices");
  if (g.order() > 16) throw RangeTooLarge("lemma_suite enumerates subsets; n must be at most 16");
  const Analysis a(g);
  const auto n = g.order();
  GeodesicPathCache cache(a, kDefaultGeodesicCap);

  // Forcing oracle per kind: V \ {v} is not a valid set.
  std::vector<char> eg_forced(n), seg_forced(n), meg_forced(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto rest = detail::all_but(n, v);
    eg_forced[v] = !is_edge_geodetic_set(a, rest);
    seg_forced[v] = !(is_edge_geodetic_set(a, rest) && has_strong_assignment(a, rest, cache).has_value());
    meg_forced[v] = !is_meg_set(a, rest);
  }
  auto fail = [](LemmaVerdict& v, const std::string& why) {
    if (v.pass) v.detail = why;
    v.pass = false;
  };

  std::vector<LemmaVerdict> out;

  {
    auto v = verdict("cut-vertex-excluded", "no cut vertex lies in an inclusion-minimal MEG-set");
    const auto cuts = cut_vertices(g);
    std::uint64_t cut_mask = 0;
    for (Vertex c : cuts) cut_mask |= std::uint64_t{1} << c;
    if (cut_mask != 0) {
      const std::uint64_t full = (std::uint64_t{1} << n) - 1;
      std::vector<char> valid(full + 1, 0);
      for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if (std::popcount(mask) >= 2) valid[mask] = is_meg_set(a, detail::mask_to_set(mask));
      }
      for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if (!valid[mask] || !(mask & cut_mask)) continue;
        bool minimal = true;
        for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
          if (valid[mask & ~(rest & -rest)]) {
            minimal = false;
            break;
          }
        }
        ++v.checks;
        if (minimal) fail(v, "minimal MEG-set with a cut vertex, mask " + std::to_string(mask));
      }
    }
    out.push_back(std::move(v));
  }

  {
    auto v = verdict("simplicial-forced", "every simplicial vertex is in every edge-geodetic set and every MEG-set");
    for (Vertex s : simplicial_vertices(g)) {
      ++v.checks;
      if (!eg_forced[s] || !meg_forced[s]) fail(v, "simplicial vertex " + g.label(s) + " is not forced");
    }
    out.push_back(std::move(v));
  }

  {
    auto v = verdict("twins-forced", "both members of every open or closed twin pair are in every MEG-set");
    for (const auto& t : twin_pairs(g)) {
      for (Vertex x : {t.pair.first, t.pair.second}) {
        if (g.degree(x) == 0) continue;
        ++v.checks;
        if (!meg_forced[x]) fail(v, "twin " + g.label(x) + " is not forced");
      }
    }
    out.push_back(std::move(v));
  }

  {
    auto v = verdict("meg-iff-every-assignment",
                   "S is a MEG-set iff every choice of one geodesic per pair of S covers all edges (|S| <= 4)");
    std::size_t skipped = 0;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
      const int k = std::popcount(mask);
      if (k < 2 || k > 4) continue;
      const auto set = detail::mask_to_set(mask);
      const auto strong = detail::every_assignment_covers(a, set);
      if (!strong) {
        ++skipped;
        continue;
      }
      ++v.checks;
      if (*strong != is_meg_set(a, set)) fail(v, "mismatch on mask " + std::to_string(mask));
    }
    if (skipped) v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(skipped) + " subsets over the product cap";
    out.push_back(std::move(v));
  }

  {
    auto v = verdict("four-cycle-criterion",
                   "v is in every MEG-set iff some neighbour u has every non-adjacent neighbour x of v sharing a "
                   "second common neighbour with u");
    for (Vertex x = 0; x < n; ++x) {
      ++v.checks;
      if (four_cycle_forced(g, x) != static_cast<bool>(meg_forced[x])) {
        fail(v, "vertex " + g.label(x) + ": criterion " + (four_cycle_forced(g, x) ? "holds" : "fails") +
                    ", oracle says " + (meg_forced[x] ? "forced" : "not forced"));
      }
    }
    out.push_back(std::move(v));
  }

  {
    auto v = verdict("eg-forced-in-seg", "a vertex in every edge-geodetic set is in every strong edge-geodetic set");
    for (Vertex x = 0; x < n; ++x) {
      if (!eg_forced[x]) continue;
      ++v.checks;
      if (!seg_forced[x]) fail(v, "vertex " + g.label(x));
    }
    out.push_back(std::move(v));
  }

  {
    auto v = verdict("seg-forced-in-meg", "a vertex in every strong edge-geodetic set is in every MEG-set");
    for (Vertex x = 0; x < n; ++x) {
      if (!seg_forced[x]) continue;
      ++v.checks;
      if (!meg_forced[x]) fail(v, "vertex " + g.label(x));
    }
    out.push_back(std::move(v));
  }

  {
    auto v = verdict("eg-forced-in-meg", "a vertex in every edge-geodetic set is in every MEG-set");
    for (Vertex x = 0; x < n; ++x) {
      if (!eg_forced[x]) continue;
      ++v.checks;
      if (!meg_forced[x]) fail(v, "vertex " + g.label(x));
    }
    out.push_back(std::move(v));
  }

  {
    auto v = verdict("chain", "g <= eg <= seg <= meg");
    ++v.checks;
    try {
      quadruple(a);
    } catch (const ChainViolation& e) {
      fail(v, e.what());
    }
    out.push_back(std::move(v));
  }

  return out;
}

inline bool all_pass(const std::vector<LemmaVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const LemmaVerdict& v) { return v.pass; });
}

// Per-claim totals of lemma_suite over a batch of graphs.
struct LemmaTally {
  std::string id;
  std::string claim;
  std::size_t graphs = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;       // graphs on which the claim failed
  std::string first_failure;      // graph description plus verdict detail
};

struct LemmaReport {
  std::string universe;  // how the graphs were produced
  std::size_t graphs = 0;
  std::vector<LemmaTally> tallies;
  double seconds = 0.0;

  void add(const Graph& g, const std::string& where) {
    const auto verdicts = lemma_suite(g);
    if (tallies.empty()) {
      for (const auto& v : verdicts) tallies.push_back({v.id, v.claim, 0, 0, 0, {}});
    }
    ++graphs;
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      auto& t = tallies[i];
      ++t.graphs;
      t.checks += verdicts[i].checks;
      if (!verdicts[i].pass) {
        if (t.failures++ == 0) t.first_failure = where + ": " + verdicts[i].detail;
      }
    }
  }

  bool all_pass() const {
    return std::all_of(tallies.begin(), tallies.end(), [](const LemmaTally& t) { return t.failures == 0; });
  }
};

// Every connected labeled graph on n vertices.
inline LemmaReport lemma_report_exhaustive(int n) {
  LemmaReport report;
  report.universe = "all connected labeled graphs, n=" + std::to_string(n);
  const auto start = std::chrono::steady_clock::now();
  for_each_connected_graph(n, [&](const Graph& g) { report.add(g, write_edges_inline(g)); });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// A seeded random sample; each failure names the generator parameters.
inline LemmaReport lemma_report_sample(std::size_t count, std::size_t min_n, std::size_t max_n,
                                       std::uint64_t base_seed) {
  LemmaReport report;
  report.universe = std::to_string(count) + " random connected graphs, n in [" + std::to_string(min_n) + "," +
                    std::to_string(max_n) + "], base seed " + std::to_string(base_seed);
  const auto start = std::chrono::steady_clock::now();
  for (const auto& r : random_graph_sample(count, min_n, max_n, base_seed)) report.add(r.graph, r.spec.describe());
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace geomon
