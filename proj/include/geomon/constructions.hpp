#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geomon/errors.hpp"
#include "geomon/graph.hpp"

namespace geomon {

struct Quadruple {
  int a = 0, b = 0, c = 0, d = 0;

  friend auto operator<=>(const Quadruple&, const Quadruple&) = default;

  std::string str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + ")";
  }
};

enum class Feasibility { Feasible, InvalidOrder, Infeasible222, Infeasible233 };

inline std::string_view to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::InvalidOrder: return "invalid order";
    case Feasibility::Infeasible222: return "infeasible: g = eg = seg = 2 forces meg = 2";
    case Feasibility::Infeasible233: return "infeasible: (g, eg, seg) = (2, 3, 3) does not occur";
  }
  return "?";
}

// Total over all integer 4-tuples.
inline Feasibility feasibility(const Quadruple& q) {
  if (!(2 <= q.a && q.a <= q.b && q.b <= q.c && q.c <= q.d)) return Feasibility::InvalidOrder;
  if (q.a == 2 && q.b == 2 && q.c == 2 && q.d > 2) return Feasibility::Infeasible222;
  if (q.a == 2 && q.b == 3 && q.c == 3) return Feasibility::Infeasible233;
  return Feasibility::Feasible;
}

enum class Family {
  PathFamily,
  Family23cd,
  Family2bcd,
  FamilyAbcd,
  FamilyCap,
  FamilyLadder,
  FamilyTheta,
  FamilyChord23,
  FamilyWitness,
};

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::PathFamily: return "path";
    case Family::Family23cd: return "23cd";
    case Family::Family2bcd: return "2bcd";
    case Family::FamilyAbcd: return "abcd";
    case Family::FamilyCap: return "cap";
    case Family::FamilyLadder: return "ladder";
    case Family::FamilyTheta: return "theta";
    case Family::FamilyChord23: return "chord23";
    case Family::FamilyWitness: return "witness";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (auto f : {Family::PathFamily, Family::Family23cd, Family::Family2bcd, Family::FamilyAbcd, Family::FamilyCap,
                 Family::FamilyLadder, Family::FamilyTheta, Family::FamilyChord23, Family::FamilyWitness}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

// How a builder laid out its graph.
//
// `classes` partitions the vertex set by construction role. `roles` names the
// distinguished vertices (x, y, z, terminals). `cliques` lists vertex sets
// built as cliques, `pendants` the attached degree-1 vertices and
// `twin_pairs` the open twins added on purpose.
struct ConstructionPlan {
  Family family = Family::PathFamily;
  Quadruple target;
  int r = 0;
  std::map<std::string, std::vector<Vertex>> classes;
  std::map<std::string, Vertex> roles;
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Vertex> pendants;
  std::vector<VertexPair> twin_pairs;
  // Vertex count predicted by the family's closed form.
  std::size_t closed_form_order = 0;
};

struct Realization {
  Graph graph;
  ConstructionPlan plan;
};

namespace detail {

// Collects named vertices and edges, then freezes them into a Graph.
class Assembler {
 public:
  Vertex add(std::string label) {
    labels_.push_back(std::move(label));
    return static_cast<Vertex>(labels_.size() - 1);
  }

  void link(Vertex a, Vertex b) { edges_.emplace_back(a, b); }

  void path(std::initializer_list<Vertex> vs) {
    for (auto it = vs.begin(); it + 1 != vs.end(); ++it) link(*it, *(it + 1));
  }

  void clique(const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) link(vs[i], vs[j]);
    }
  }

  // Open twin of `of`: copies its current neighbourhood, never adjacent to it.
  Vertex twin(Vertex of, std::string label) {
    const Vertex t = add(std::move(label));
    std::vector<Vertex> nbrs;
    for (const auto& [a, b] : edges_) {
      if (a == of) nbrs.push_back(b);
      if (b == of) nbrs.push_back(a);
    }
    for (Vertex w : nbrs) link(t, w);
    return t;
  }

  std::size_t count() const { return labels_.size(); }

  Graph build() const { return Graph::from_edges(labels_.size(), edges_, labels_); }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

inline std::string sub(std::string_view base, int i) { return std::string(base) + "_" + std::to_string(i); }

inline std::string sub2(std::string_view base, int i, int j) {
  if (i < 10 && j < 10) return std::string(base) + "_" + std::to_string(i) + std::to_string(j);
  return std::string(base) + "_" + std::to_string(i) + "," + std::to_string(j);
}

}  // namespace detail

// c-2 parallel rows x_i w_i u_i y_i v_i0 .. v_ir joined by rungs at both
// ends, a hub z on w_0, u_0, w_1, and open twins along row 0 (plus one on
// row 1 when d-c is positive and even).
inline Realization build_23cd(int c, int d) {
  if (c < 4 || d < c) throw InvalidParameters("build_23cd needs c >= 4 and d >= c");
  const int diff = d - c;
  const int r = diff % 2 == 1 ? diff + 1 : diff;
  const int rows = c - 2;

  detail::Assembler as;
  ConstructionPlan plan;
  plan.family = Family::Family23cd;
  plan.target = {2, 3, c, d};
  plan.r = r;

  std::vector<std::vector<Vertex>> v(rows);
  std::vector<Vertex> xs, ws, us, ys;
  for (int i = 0; i < rows; ++i) {
    xs.push_back(as.add(detail::sub("x", i)));
    ws.push_back(as.add(detail::sub("w", i)));
    us.push_back(as.add(detail::sub("u", i)));
    ys.push_back(as.add(detail::sub("y", i)));
    for (int j = 0; j <= r; ++j) v[i].push_back(as.add(detail::sub2("v", i, j)));
    as.path({xs[i], ws[i], us[i], ys[i], v[i][0]});
    for (int j = 0; j < r; ++j) as.link(v[i][j], v[i][j + 1]);
  }
  for (int i = 0; i + 1 < rows; ++i) {
    as.link(xs[i], xs[i + 1]);
    as.link(v[i][r], v[i + 1][r]);
  }
  const Vertex z = as.add("z");
  as.link(z, ws[0]);
  as.link(z, us[0]);
  as.link(z, ws[1]);

  std::vector<Vertex> twins;
  if (diff > 0) {
    for (int j = 1; j <= r - 1; j += 2) {
      const Vertex t = as.twin(v[0][j], detail::sub2("v'", 0, j));
      twins.push_back(t);
      plan.twin_pairs.push_back(VertexPair::of(v[0][j], t));
    }
    if (diff % 2 == 0) {
      const Vertex t = as.twin(v[1][r - 1], detail::sub2("v'", 1, r - 1));
      twins.push_back(t);
      plan.twin_pairs.push_back(VertexPair::of(v[1][r - 1], t));
    }
  }

  plan.classes["x"] = xs;
  plan.classes["w"] = ws;
  plan.classes["u"] = us;
  plan.classes["y"] = ys;
  std::vector<Vertex> all_v;
  for (const auto& row : v) all_v.insert(all_v.end(), row.begin(), row.end());
  plan.classes["v"] = all_v;
  plan.classes["twins"] = twins;
  plan.classes["hub"] = {z};
  plan.roles["z"] = z;
  plan.roles["x_0"] = xs[0];
  plan.roles["v_0r"] = v[0][r];
  const std::size_t extra_twin = (diff > 0 && diff % 2 == 0) ? 1 : 0;
  plan.closed_form_order = static_cast<std::size_t>(rows) * (r + 5) + 1 + (diff > 0 ? r / 2 : 0) + extra_twin;

  return {as.build(), std::move(plan)};
}

namespace detail {

// Tail x_1 .. x_r hanging from `root`, open twins x'_{2i} for i = 1..twin_count,
// and optionally the 6-cycle closing path x_{r-3} x'_{r-2} x'_{r-1} x_r.
struct Tail {
  std::vector<Vertex> path;  // x_1 .. x_r
  std::vector<Vertex> twins;
  std::vector<VertexPair> twin_pairs;
  std::vector<Vertex> cycle;  // x'_{r-2}, x'_{r-1} of the closing 6-cycle
};

inline Tail attach_tail(Assembler& as, Vertex root, int r, int twin_count, bool six_cycle) {
  Tail tail;
  Vertex prev = root;
  for (int i = 1; i <= r; ++i) {
    const Vertex xi = as.add(sub("x", i));
    as.link(prev, xi);
    tail.path.push_back(xi);
    prev = xi;
  }
  auto at = [&](int i) { return i == 0 ? root : tail.path[static_cast<std::size_t>(i - 1)]; };
  for (int i = 1; i <= twin_count; ++i) {
    const Vertex t = as.twin(at(2 * i), sub("x'", 2 * i));
    tail.twins.push_back(t);
    tail.twin_pairs.push_back(VertexPair::of(at(2 * i), t));
  }
  if (six_cycle) {
    const Vertex p2 = as.add(sub("x'", r - 2));
    const Vertex p1 = as.add(sub("x'", r - 1));
    as.path({at(r - 3), p2, p1, at(r)});
    tail.cycle = {p2, p1};
  }
  return tail;
}

// Tail used by build_abcd and the families borrowing it: r = diff+3 with the
// closing 6-cycle when diff is odd, r = diff+1 otherwise. Each x'_{2i} raises
// meg by one; the 6-cycle absorbs the parity.
struct TailShape {
  int r = 0;
  int twin_count = 0;
  bool six_cycle = false;

  std::size_t order() const { return static_cast<std::size_t>(r + twin_count + (six_cycle ? 2 : 0)); }
};

inline TailShape abcd_tail_shape(int diff) {
  if (diff % 2 == 1) return {diff + 3, diff / 2, true};
  return {diff + 1, diff / 2, false};
}

inline Tail attach_tail(Assembler& as, Vertex root, const TailShape& shape) {
  return attach_tail(as, root, shape.r, shape.twin_count, shape.six_cycle);
}

}  // namespace detail

// y joined to x_0 by parallel 3-edge branches through the clique W and the
// set V, followed by the x-tail. For b = 2 there is no z/w branch and the
// spine runs through f_1 v_1.
inline Realization build_2bcd(int b, int c, int d) {
  if (b < 2 || b == 3 || c < b || d < c) throw InvalidParameters("build_2bcd needs 2 <= b <= c <= d and b != 3");
  const int diff = d - c;
  int r = 0;
  int twin_count = 0;
  bool six_cycle = false;
  if (diff % 2 == 1) {
    r = diff;
    twin_count = diff / 2;
  } else if (diff > 0) {
    r = diff + 2;
    twin_count = (diff - 1) / 2;
    six_cycle = true;
  }

  detail::Assembler as;
  ConstructionPlan plan;
  plan.family = Family::Family2bcd;
  plan.target = {2, b, c, d};
  plan.r = r;

  const Vertex y = as.add("y");
  const Vertex x0 = as.add("x_0");
  std::vector<Vertex> zs, ws, fs, vs;
  for (int i = 1; i <= b - 2; ++i) {
    zs.push_back(as.add(detail::sub("z", i)));
    ws.push_back(as.add(detail::sub("w", i)));
    as.path({y, zs.back(), ws.back(), x0});
  }
  as.clique(ws);
  for (int i = 1; i <= c - b + 1; ++i) {
    fs.push_back(as.add(detail::sub("f", i)));
    vs.push_back(as.add(detail::sub("v", i)));
    as.path({y, fs.back(), vs.back(), x0});
  }
  auto tail = detail::attach_tail(as, x0, r, twin_count, six_cycle);

  plan.classes["y"] = {y};
  plan.classes["z"] = zs;
  plan.classes["W"] = ws;
  plan.classes["f"] = fs;
  plan.classes["V"] = vs;
  std::vector<Vertex> spine{x0};
  spine.insert(spine.end(), tail.path.begin(), tail.path.end());
  plan.classes["spine"] = spine;
  plan.classes["twins"] = tail.twins;
  plan.classes["cycle"] = tail.cycle;
  plan.twin_pairs = tail.twin_pairs;
  if (ws.size() >= 2) plan.cliques.push_back(ws);
  plan.roles["y"] = y;
  plan.roles["x_0"] = x0;
  plan.roles["x_r"] = spine.back();
  plan.closed_form_order = 2 + 2 * static_cast<std::size_t>(b - 2) + 2 * static_cast<std::size_t>(c - b + 1) +
                           static_cast<std::size_t>(r + twin_count + (six_cycle ? 2 : 0));
  return {as.build(), std::move(plan)};
}

// 5-cycle x y w_1 z v_1 with the clique on w_1 and W (a = 3) or W' (a >= 4)
// between y and z, the extra v_i between z and x, a-3 pendants on the last
// clique vertex and the x-tail.
inline Realization build_abcd(int a, int b, int c, int d) {
  if (a < 3 || b < a || c < b || d < c) throw InvalidParameters("build_abcd needs 3 <= a <= b <= c <= d");
  const auto shape = detail::abcd_tail_shape(d - c);
  const int r = shape.r;

  detail::Assembler as;
  ConstructionPlan plan;
  plan.family = Family::FamilyAbcd;
  plan.target = {a, b, c, d};
  plan.r = r;

  const Vertex x = as.add("x");
  const Vertex y = as.add("y");
  const Vertex w1 = as.add("w_1");
  const Vertex z = as.add("z");
  const Vertex v1 = as.add("v_1");
  as.path({x, y, w1, z, v1, x});

  const int extra_w = a == 3 ? b - a : b - a + 1;
  std::vector<Vertex> clique{w1};
  for (int i = 2; i <= extra_w + 1; ++i) {
    const Vertex wi = as.add(detail::sub("w", i));
    as.link(wi, y);
    as.link(wi, z);
    clique.push_back(wi);
  }
  as.clique(clique);

  std::vector<Vertex> vs{v1};
  for (int i = 2; i <= c - b + 1; ++i) {
    const Vertex vi = as.add(detail::sub("v", i));
    as.link(vi, z);
    as.link(vi, x);
    vs.push_back(vi);
  }

  std::vector<Vertex> us;
  for (int i = 1; i <= a - 3; ++i) {
    us.push_back(as.add(detail::sub("u", i)));
    as.link(us.back(), clique.back());
  }

  auto tail = detail::attach_tail(as, x, shape);

  plan.classes["x"] = {x};
  plan.classes["y"] = {y};
  plan.classes["z"] = {z};
  plan.classes["W"] = clique;
  plan.classes["V"] = vs;
  plan.classes["U"] = us;
  plan.classes["spine"] = tail.path;
  plan.classes["twins"] = tail.twins;
  plan.classes["cycle"] = tail.cycle;
  plan.twin_pairs = tail.twin_pairs;
  if (clique.size() >= 2) plan.cliques.push_back(clique);
  plan.pendants = us;
  plan.roles["x"] = x;
  plan.roles["y"] = y;
  plan.roles["z"] = z;
  plan.roles["x_r"] = tail.path.back();
  plan.closed_form_order = 5 + static_cast<std::size_t>(extra_w) + static_cast<std::size_t>(c - b) +
                           static_cast<std::size_t>(a - 3) + shape.order();
  return {as.build(), std::move(plan)};
}

// 5-cycle a p_1 q e k_1 with the clique K = {k_1 .. k_{b-3}} on a and e, the
// set P = {p_1 .. p_{c-b+1}} on a, q and the cap s, the edge a s, and the
// x-tail from s. Covers (2,b,c,d) for b >= 5 and (2,4,4,d).
inline Realization build_cap(int b, int c, int d) {
  if (b < 4 || c < b || d < c || (b == 4 && c != 4)) {
    throw InvalidParameters("build_cap needs b >= 5, or b = c = 4, and b <= c <= d");
  }
  const auto shape = detail::abcd_tail_shape(d - c);

  detail::Assembler as;
  ConstructionPlan plan;
  plan.family = Family::FamilyCap;
  plan.target = {2, b, c, d};
  plan.r = shape.r;

  const Vertex a = as.add("a");
  const Vertex s = as.add("s");
  const Vertex q = as.add("q");
  const Vertex e = as.add("e");
  as.link(a, s);
  as.link(q, e);
  std::vector<Vertex> ks, ps;
  for (int i = 1; i <= b - 3; ++i) {
    ks.push_back(as.add(detail::sub("k", i)));
    as.link(ks.back(), a);
    as.link(ks.back(), e);
  }
  as.clique(ks);
  for (int i = 1; i <= c - b + 1; ++i) {
    ps.push_back(as.add(detail::sub("p", i)));
    as.link(ps.back(), a);
    as.link(ps.back(), s);
    as.link(ps.back(), q);
  }
  auto tail = detail::attach_tail(as, s, shape);

  plan.classes["a"] = {a};
  plan.classes["s"] = {s};
  plan.classes["q"] = {q};
  plan.classes["e"] = {e};
  plan.classes["K"] = ks;
  plan.classes["P"] = ps;
  plan.classes["spine"] = tail.path;
  plan.classes["twins"] = tail.twins;
  plan.classes["cycle"] = tail.cycle;
  plan.twin_pairs = tail.twin_pairs;
  if (ks.size() >= 2) plan.cliques.push_back(ks);
  plan.roles["a"] = a;
  plan.roles["s"] = s;
  plan.roles["x_r"] = tail.path.back();
  plan.closed_form_order = 4 + static_cast<std::size_t>(b - 3) + static_cast<std::size_t>(c - b + 1) + shape.order();
  return {as.build(), std::move(plan)};
}

// Caps s and t over the cliques A = {a_0 ..} and B = {b_0 ..} of size alpha,
// joined by rungs a_i p_i b_i; rung 0 carries mu0 parallel middles. Realizes
// (2, alpha+2, 2 alpha+1, 2 alpha+mu0).
inline Realization build_ladder(int alpha, int mu0) {
  if (alpha < 2 || mu0 < 1) throw InvalidParameters("build_ladder needs alpha >= 2 and mu0 >= 1");

  detail::Assembler as;
  ConstructionPlan plan;
  plan.family = Family::FamilyLadder;
  plan.target = {2, alpha + 2, 2 * alpha + 1, 2 * alpha + mu0};

  const Vertex s = as.add("s");
  const Vertex t = as.add("t");
  std::vector<Vertex> as_, bs, ps;
  for (int i = 0; i < alpha; ++i) {
    as_.push_back(as.add(detail::sub("a", i)));
    bs.push_back(as.add(detail::sub("b", i)));
    as.link(s, as_.back());
    as.link(t, bs.back());
  }
  as.clique(as_);
  as.clique(bs);
  for (int i = 0; i < alpha; ++i) {
    for (int j = 0; j < (i == 0 ? mu0 : 1); ++j) {
      ps.push_back(as.add(i == 0 ? detail::sub2("p", i, j) : detail::sub("p", i)));
      as.path({as_[static_cast<std::size_t>(i)], ps.back(), bs[static_cast<std::size_t>(i)]});
    }
  }

  plan.classes["caps"] = {s, t};
  plan.classes["A"] = as_;
  plan.classes["B"] = bs;
  plan.classes["P"] = ps;
  plan.cliques = {as_, bs};
  for (int j = 1; j < mu0; ++j) plan.twin_pairs.push_back(VertexPair::of(ps[0], ps[static_cast<std::size_t>(j)]));
  plan.roles["s"] = s;
  plan.roles["t"] = t;
  plan.closed_form_order = 2 + 3 * static_cast<std::size_t>(alpha) + static_cast<std::size_t>(mu0 - 1);
  return {as.build(), std::move(plan)};
}

// K_{2,c-1} on s and x_0 with the x-tail of build_abcd for d-c-1 hanging
// from x_0. Realizes (2,2,c,d) for d > c.
inline Realization build_theta(int c, int d) {
  if (c < 3 || d <= c) throw InvalidParameters("build_theta needs c >= 3 and d > c");
  const auto shape = detail::abcd_tail_shape(d - c - 1);

  detail::Assembler as;
  ConstructionPlan plan;
  plan.family = Family::FamilyTheta;
  plan.target = {2, 2, c, d};
  plan.r = shape.r;

  const Vertex s = as.add("s");
  const Vertex x0 = as.add("x_0");
  std::vector<Vertex> vs;
  for (int i = 1; i <= c - 1; ++i) {
    vs.push_back(as.add(detail::sub("v", i)));
    as.path({s, vs.back(), x0});
  }
  auto tail = detail::attach_tail(as, x0, shape);

  plan.classes["s"] = {s};
  plan.classes["V"] = vs;
  std::vector<Vertex> spine{x0};
  spine.insert(spine.end(), tail.path.begin(), tail.path.end());
  plan.classes["spine"] = spine;
  plan.classes["twins"] = tail.twins;
  plan.classes["cycle"] = tail.cycle;
  plan.twin_pairs = tail.twin_pairs;
  for (std::size_t i = 1; i < vs.size(); ++i) plan.twin_pairs.push_back(VertexPair::of(vs[0], vs[i]));
  plan.roles["s"] = s;
  plan.roles["x_0"] = x0;
  plan.roles["x_r"] = spine.back();
  plan.closed_form_order = 2 + static_cast<std::size_t>(c - 1) + shape.order();
  return {as.build(), std::move(plan)};
}

// s and t at distance 3 through p (via a and h) and through q (via the
// classes B and O). Every b_i is also adjacent to a. |B| = c-4 and
// |O| = 1 + d-c. Realizes (2,3,c,d) for c >= 5 and d-c <= 2.
inline Realization build_chord23(int c, int d) {
  if (c < 5 || d < c || d - c > 2) throw InvalidParameters("build_chord23 needs c >= 5 and c <= d <= c+2");

  detail::Assembler as;
  ConstructionPlan plan;
  plan.family = Family::FamilyChord23;
  plan.target = {2, 3, c, d};

  const Vertex s = as.add("s");
  const Vertex t = as.add("t");
  const Vertex p = as.add("p");
  const Vertex q = as.add("q");
  const Vertex a = as.add("a");
  const Vertex h = as.add("h");
  as.path({s, a, p, t});
  as.path({s, h, p});
  as.link(q, t);
  std::vector<Vertex> bs, os;
  for (int i = 1; i <= c - 4; ++i) {
    bs.push_back(as.add(detail::sub("b", i)));
    as.path({s, bs.back(), q});
    as.link(a, bs.back());
  }
  for (int i = 1; i <= 1 + d - c; ++i) {
    os.push_back(as.add(detail::sub("o", i)));
    as.path({s, os.back(), q});
  }

  plan.classes["caps"] = {s, t};
  plan.classes["hubs"] = {p, q};
  plan.classes["a"] = {a};
  plan.classes["h"] = {h};
  plan.classes["B"] = bs;
  plan.classes["O"] = os;
  for (std::size_t i = 1; i < bs.size(); ++i) plan.twin_pairs.push_back(VertexPair::of(bs[0], bs[i]));
  for (std::size_t i = 1; i < os.size(); ++i) plan.twin_pairs.push_back(VertexPair::of(os[0], os[i]));
  plan.roles["s"] = s;
  plan.roles["t"] = t;
  plan.roles["a"] = a;
  plan.closed_form_order = static_cast<std::size_t>(d + 3);
  return {as.build(), std::move(plan)};
}

// Fixed witnesses for (2,2,c,c), 3 <= c <= 6, found by computer search. Each
// is bipartite with s and t at distance 3 or 4; vertex l<i>_<k> sits in BFS
// layer i from s.
inline Realization build_witness_22cc(int c) {
  struct Witness {
    std::vector<std::vector<std::string>> layers;  // inner layers only
    std::vector<std::pair<Vertex, Vertex>> edges;  // over s, inner layers in order, t
  };
  static const std::map<int, Witness> witnesses = {
      {3, {{{"l1_1", "l1_2"}, {"l2_1", "l2_2"}}, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 5}}}},
      {4,
       {{{"l1_1", "l1_2", "l1_3"}, {"l2_1", "l2_2"}},
        {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 6}, {5, 6}}}},
      {5,
       {{{"l1_1", "l1_2"}, {"l2_1", "l2_2", "l2_3"}, {"l3_1", "l3_2", "l3_3"}},
        {{0, 1}, {0, 2}, {1, 4}, {1, 5}, {2, 3}, {3, 7}, {3, 8}, {4, 7}, {4, 8}, {5, 6}, {6, 9}, {7, 9}, {8, 9}}}},
      {6,
       {{{"l1_1", "l1_2", "l1_3", "l1_4"}, {"l2_1", "l2_2", "l2_3", "l2_4"}, {"l3_1", "l3_2"}},
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 1}, {5, 9}, {6, 1}, {6, 10}, {11, 9}, {11, 10}, {7, 2}, {7, 3},
         {7, 9}, {7, 4}, {2, 8}, {3, 8}, {10, 8}, {4, 8}}}},
  };
  auto it = witnesses.find(c);
  if (it == witnesses.end()) throw InvalidParameters("build_witness_22cc has witnesses for 3 <= c <= 6 only");

  ConstructionPlan plan;
  plan.family = Family::FamilyWitness;
  plan.target = {2, 2, c, c};
  std::vector<std::string> labels{"s"};
  for (std::size_t i = 0; i < it->second.layers.size(); ++i) {
    std::vector<Vertex> members;
    for (const auto& name : it->second.layers[i]) {
      members.push_back(static_cast<Vertex>(labels.size()));
      labels.push_back(name);
    }
    plan.classes["L" + std::to_string(i + 1)] = members;
  }
  const auto t = static_cast<Vertex>(labels.size());
  labels.push_back("t");
  plan.classes["caps"] = {0, t};
  plan.roles["s"] = 0;
  plan.roles["t"] = t;
  const std::size_t n = labels.size();
  plan.closed_form_order = n;
  Graph g = Graph::from_edges(n, it->second.edges, std::move(labels));
  for (const auto& tp : twin_pairs(g)) plan.twin_pairs.push_back(tp.pair);
  return {std::move(g), std::move(plan)};
}

// A 9-vertex witness for (2,4,6,6) found by computer search, with c-6 open
// twins added to k_1. Each twin raises seg and meg together, so the graph
// realizes (2,4,c,c) for every c >= 6.
inline Realization build_witness_24cc(int c) {
  if (c < 6) throw InvalidParameters("build_witness_24cc needs c >= 6");
  detail::Assembler as;
  ConstructionPlan plan;
  plan.family = Family::FamilyWitness;
  plan.target = {2, 4, c, c};

  const Vertex s = as.add("s");
  const Vertex l1 = as.add("l1_1");
  const Vertex k1 = as.add("k_1");
  const Vertex l3 = as.add("l1_3");
  const Vertex l4 = as.add("l1_4");
  const Vertex l5 = as.add("l1_5");
  const Vertex m1 = as.add("l2_1");
  const Vertex m2 = as.add("l2_2");
  const Vertex t = as.add("t");
  for (Vertex v : {l1, k1, l3, l4, l5}) as.link(s, v);
  as.link(l1, k1);
  as.link(l4, l5);
  as.clique({l1, l3, m1});
  as.path({k1, m2, t, m1, l5});
  as.link(l4, m2);

  std::vector<Vertex> ks{k1};
  for (int i = 2; i <= c - 5; ++i) {
    ks.push_back(as.twin(k1, detail::sub("k", i)));
    plan.twin_pairs.push_back(VertexPair::of(k1, ks.back()));
  }
  plan.classes["caps"] = {s, t};
  plan.classes["L1"] = {l1, l3, l4, l5};
  plan.classes["K"] = ks;
  plan.classes["L2"] = {m1, m2};
  plan.cliques = {{s, l1, k1}, {s, l1, l3}, {l1, l3, m1}, {s, l4, l5}};
  plan.roles["s"] = s;
  plan.roles["t"] = t;
  plan.closed_form_order = static_cast<std::size_t>(c + 3);
  return {as.build(), std::move(plan)};
}

inline Realization build_path_2222() {
  ConstructionPlan plan;
  plan.family = Family::PathFamily;
  plan.target = {2, 2, 2, 2};
  plan.classes["ends"] = {0, 1};
  plan.roles["s"] = 0;
  plan.roles["t"] = 1;
  plan.closed_form_order = 2;
  return {Graph::from_edges(2, {{0, 1}}, {"s", "t"}), std::move(plan)};
}

struct RealizeOutcome {
  Feasibility status = Feasibility::InvalidOrder;
  std::optional<Realization> realization;
};

// Builds a graph for a feasible quadruple, or reports why none exists.
//
// a >= 3 and most of a = 2 use the three classical families. Where those
// miss the target the dispatch switches to the cap, ladder, theta, chord23
// and witness builders. Quadruples no builder is known to realize fall back
// to the classical family, and verification reports the mismatch.
inline RealizeOutcome realize(const Quadruple& q) {
  RealizeOutcome out;
  out.status = feasibility(q);
  if (out.status != Feasibility::Feasible) return out;
  const auto [a, b, c, d] = q;
  if (a >= 3) {
    out.realization = build_abcd(a, b, c, d);
  } else if (b == 2 && c == 2) {
    out.realization = build_path_2222();
  } else if (b == 2) {
    if (d > c) {
      out.realization = build_theta(c, d);
    } else if (c <= 6) {
      out.realization = build_witness_22cc(c);
    } else {
      out.realization = build_2bcd(b, c, d);
    }
  } else if (b == 3) {
    if (c >= 5 && d - c <= 2) {
      out.realization = build_chord23(c, d);
    } else {
      out.realization = build_23cd(c, d);
    }
  } else if (d > c && !(b == 4 && c == 4)) {
    out.realization = build_2bcd(b, c, d);
  } else if (b >= 5 || c == 4) {
    out.realization = build_cap(b, c, d);
  } else if (c == 5) {
    out.realization = build_ladder(2, 1);
  } else {
    out.realization = build_witness_24cc(c);
  }
  return out;
}

}  // namespace geomon
