#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "geomon/constructions.hpp"
#include "geomon/errors.hpp"
#include "geomon/graph.hpp"
#include "geomon/harness.hpp"
#include "geomon/solvers.hpp"

namespace geomon {

inline constexpr std::string_view kToolName = "geomon";
inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Edge lists

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::optional<std::size_t> parse_count(const std::string& tok) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace detail

// Parses the line-oriented edge-list format:
//
//   # comment
//   p geg <n> <m>      optional, before the first edge
//   <u> <v>            one edge per line
//
// Vertex tokens are arbitrary labels numbered in order of first appearance.
inline Graph parse_edge_list(std::string_view text) {
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::string> labels;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::pair<Vertex, Vertex>> seen;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::size_t header_line = 0;

  auto vertex = [&](const std::string& tok) {
    auto [it, inserted] = index.emplace(tok, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(tok);
    return it->second;
  };

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto toks = detail::split_ws(line);
    // A two-token line is always an edge, so a vertex may be called "p".
    if (toks[0] == "p" && toks.size() != 2) {
      if (header) throw ParseError(line_no, "second header line");
      if (!edges.empty()) throw ParseError(line_no, "header after the first edge");
      if (toks.size() != 4 || toks[1] != "geg") throw ParseError(line_no, "header must read 'p geg <n> <m>'");
      const auto n = detail::parse_count(toks[2]);
      const auto m = detail::parse_count(toks[3]);
      if (!n || !m) throw ParseError(line_no, "header counts must be non-negative integers");
      header = {{*n, *m}};
      header_line = line_no;
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError(line_no, "expected two vertex tokens, found " + std::to_string(toks.size()));
    }
    if (toks[0] == toks[1]) throw ParseError(line_no, "self-loop at vertex '" + toks[0] + "'");
    const Vertex u = vertex(toks[0]);
    const Vertex v = vertex(toks[1]);
    const auto key = VertexPair::of(u, v);
    const std::pair<Vertex, Vertex> norm{key.first, key.second};
    auto pos = std::lower_bound(seen.begin(), seen.end(), norm);
    if (pos != seen.end() && *pos == norm) {
      throw ParseError(line_no, "duplicate edge '" + toks[0] + " " + toks[1] + "'");
    }
    seen.insert(pos, norm);
    edges.emplace_back(u, v);
  }
  if (header && (header->first != labels.size() || header->second != edges.size())) {
    throw HeaderMismatch("header on line " + std::to_string(header_line) + " declares n=" +
                         std::to_string(header->first) + " m=" + std::to_string(header->second) +
                         " but the document has n=" + std::to_string(labels.size()) +
                         " m=" + std::to_string(edges.size()));
  }
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

// Header plus one "label label" line per edge, in edge-index order.
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p geg " << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << g.label(e.first) << ' ' << g.label(e.second) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// DOT

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

// Undirected DOT text. With a plan, clique members are filled boxes, twins
// are filled yellow, pendants are diamonds and named roles are drawn bold.
inline std::string export_dot(const Graph& g, const ConstructionPlan* plan = nullptr) {
  std::vector<std::string> attrs(g.order());
  if (plan) {
    std::vector<std::vector<std::string>> parts(g.order());
    std::vector<char> clique(g.order(), 0), twin(g.order(), 0), pendant(g.order(), 0), role(g.order(), 0);
    for (const auto& c : plan->cliques) {
      for (Vertex v : c) clique[v] = 1;
    }
    for (const auto& p : plan->twin_pairs) twin[p.first] = twin[p.second] = 1;
    if (auto it = plan->classes.find("twins"); it != plan->classes.end()) {
      for (Vertex v : it->second) twin[v] = 1;
    }
    for (Vertex v : plan->pendants) pendant[v] = 1;
    for (const auto& [name, v] : plan->roles) role[v] = 1;
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<std::string> style;
      if (clique[v]) parts[v].push_back("shape=box");
      if (pendant[v]) parts[v].push_back("shape=diamond");
      if (clique[v] || twin[v]) style.push_back("filled");
      if (role[v]) style.push_back("bold");
      if (twin[v]) {
        parts[v].push_back("fillcolor=lightyellow");
      } else if (clique[v]) {
        parts[v].push_back("fillcolor=lightblue");
      }
      if (!style.empty()) {
        std::string joined;
        for (const auto& s : style) joined += (joined.empty() ? "" : ",") + s;
        parts[v].push_back("style=" + detail::dot_quote(joined));
      }
      for (const auto& p : parts[v]) attrs[v] += ", " + p;
    }
  }
  std::ostringstream out;
  out << "graph G {\n";
  if (plan) {
    out << "  label=" << detail::dot_quote(std::string(to_string(plan->family)) + " " + plan->target.str()) << ";\n";
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  n" << v << " [label=" << detail::dot_quote(g.label(v)) << attrs[v] << "];\n";
  }
  for (const auto& e : g.edges()) out << "  n" << e.first << " -- n" << e.second << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON documents

namespace detail {

inline Json labels_of(const Graph& g, std::span<const Vertex> vs) {
  Json arr = Json::array();
  for (Vertex v : vs) arr.push_back(g.label(v));
  return arr;
}

// Certificate sets are written as lexicographically sorted label lists.
inline Json sorted_labels(const Graph& g, std::span<const Vertex> vs) {
  std::vector<std::string> names;
  for (Vertex v : vs) names.push_back(g.label(v));
  std::sort(names.begin(), names.end());
  return names;
}

inline Vertex vertex_of(const Graph& g, const Json& label) {
  const auto name = label.get<std::string>();
  const auto v = g.find_label(name);
  if (!v) throw Error("unknown vertex label '" + name + "' in document");
  return *v;
}

}  // namespace detail

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({g.label(e.first), g.label(e.second)});
  Json labels = Json::array();
  for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
  return {{"n", g.order()}, {"m", g.size()}, {"labels", labels}, {"edges", edges}};
}

inline Graph graph_from_json(const Json& j) {
  const auto labels = j.at("labels").get<std::vector<std::string>>();
  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < labels.size(); ++v) index.emplace(labels[v], v);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j.at("edges")) {
    const auto a = index.find(e.at(0).get<std::string>());
    const auto b = index.find(e.at(1).get<std::string>());
    if (a == index.end() || b == index.end()) throw Error("edge names a vertex missing from labels");
    edges.emplace_back(a->second, b->second);
  }
  Graph g = Graph::from_edges(labels.size(), edges, labels);
  if (j.contains("n") && j.at("n").get<std::size_t>() != g.order()) throw HeaderMismatch("document n disagrees");
  if (j.contains("m") && j.at("m").get<std::size_t>() != g.size()) throw HeaderMismatch("document m disagrees");
  return g;
}

inline Json certificate_to_json(const Graph& g, const Certificate& cert) {
  Json j = {{"value", cert.value()}, {"set", detail::sorted_labels(g, cert.set)}};
  if (!cert.edge_witness.empty()) {
    Json w = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto& e = g.edges()[i];
      const auto& p = cert.edge_witness[i];
      w.push_back({{"edge", {g.label(e.first), g.label(e.second)}}, {"pair", {g.label(p.first), g.label(p.second)}}});
    }
    j["witness"] = std::move(w);
  }
  if (cert.kind == ParamKind::StrongEdgeGeodetic) {
    Json a = Json::array();
    for (const auto& choice : cert.assignment) {
      a.push_back({{"pair", {g.label(choice.pair.first), g.label(choice.pair.second)}},
                   {"path", detail::labels_of(g, choice.path)}});
    }
    j["assignment"] = std::move(a);
  }
  return j;
}

inline Certificate certificate_from_json(const Graph& g, ParamKind kind, const Json& j) {
  Certificate cert;
  cert.kind = kind;
  for (const auto& label : j.at("set")) cert.set.push_back(detail::vertex_of(g, label));
  std::sort(cert.set.begin(), cert.set.end());
  if (j.contains("witness")) {
    cert.edge_witness.assign(g.size(), {});
    for (const auto& w : j.at("witness")) {
      const auto e = g.edge_index(detail::vertex_of(g, w.at("edge").at(0)), detail::vertex_of(g, w.at("edge").at(1)));
      if (!e) throw Error("witness names a non-edge");
      cert.edge_witness[*e] =
          VertexPair::of(detail::vertex_of(g, w.at("pair").at(0)), detail::vertex_of(g, w.at("pair").at(1)));
    }
  }
  if (j.contains("assignment")) {
    for (const auto& a : j.at("assignment")) {
      PathChoice choice;
      choice.pair = VertexPair::of(detail::vertex_of(g, a.at("pair").at(0)), detail::vertex_of(g, a.at("pair").at(1)));
      for (const auto& label : a.at("path")) choice.path.push_back(detail::vertex_of(g, label));
      cert.assignment.push_back(std::move(choice));
    }
  }
  return cert;
}

// Result of `compute`: the graph, the requested parameters and their
// certificates, and wall time.
struct ResultDocument {
  Graph graph;
  std::vector<Certificate> certificates;  // in ParamKind order, requested kinds only
  double seconds = 0.0;
};

inline Json result_to_json(const ResultDocument& doc) {
  Json params = Json::object();
  Json certs = Json::object();
  for (const auto& c : doc.certificates) {
    params[std::string(short_name(c.kind))] = c.value();
    certs[std::string(short_name(c.kind))] = certificate_to_json(doc.graph, c);
  }
  return {{"schema", "geomon/result"},
          {"schema_version", kSchemaVersion},
          {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"graph", graph_to_json(doc.graph)},
          {"parameters", params},
          {"certificates", certs},
          {"timing", {{"seconds", doc.seconds}}}};
}

inline ResultDocument result_from_json(const Json& j) {
  ResultDocument doc;
  doc.graph = graph_from_json(j.at("graph"));
  const auto& certs = j.at("certificates");
  for (auto kind : kAllKinds) {
    const std::string key(short_name(kind));
    if (!certs.contains(key)) continue;
    doc.certificates.push_back(certificate_from_json(doc.graph, kind, certs.at(key)));
    if (j.at("parameters").at(key).get<std::size_t>() != doc.certificates.back().value()) {
      throw Error("parameter " + key + " disagrees with its certificate");
    }
  }
  doc.seconds = j.at("timing").at("seconds").get<double>();
  return doc;
}

inline Json quadruple_to_json(const Quadruple& q) { return Json::array({q.a, q.b, q.c, q.d}); }

inline Json values_to_json(const ParameterQuadruple& p) { return Json::array({p.g, p.eg, p.seg, p.meg}); }

inline Json plan_to_json(const Graph& g, const ConstructionPlan& plan) {
  Json classes = Json::object();
  for (const auto& [name, members] : plan.classes) classes[name] = detail::labels_of(g, members);
  Json roles = Json::object();
  for (const auto& [name, v] : plan.roles) roles[name] = g.label(v);
  Json cliques = Json::array();
  for (const auto& c : plan.cliques) cliques.push_back(detail::labels_of(g, c));
  Json twins = Json::array();
  for (const auto& p : plan.twin_pairs) twins.push_back({g.label(p.first), g.label(p.second)});
  return {{"family", to_string(plan.family)},
          {"target", quadruple_to_json(plan.target)},
          {"r", plan.r},
          {"classes", classes},
          {"roles", roles},
          {"cliques", cliques},
          {"pendants", detail::labels_of(g, plan.pendants)},
          {"twin_pairs", twins},
          {"closed_form_order", plan.closed_form_order}};
}

inline Json construction_to_json(const Realization& r, const std::optional<ParameterQuadruple>& measured) {
  Json j = {{"schema", "geomon/construction"},
            {"schema_version", kSchemaVersion},
            {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
            {"graph", graph_to_json(r.graph)},
            {"plan", plan_to_json(r.graph, r.plan)}};
  if (measured) {
    j["verification"] = {{"measured", values_to_json(*measured)},
                         {"pass", matches(*measured, r.plan.target)}};
  }
  return j;
}

// Stable machine-readable form of a Feasibility value.
inline std::string_view status_code(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::InvalidOrder: return "invalid_order";
    case Feasibility::Infeasible222: return "infeasible_222";
    case Feasibility::Infeasible233: return "infeasible_233";
  }
  return "?";
}

inline Json record_to_json(const VerifyRecord& rec) {
  Json j = {{"quadruple", quadruple_to_json(rec.target)},
            {"status", status_code(rec.status)},
            {"reason", to_string(rec.status)},
            {"pass", rec.pass},
            {"seconds", rec.seconds}};
  if (rec.family) j["family"] = to_string(*rec.family);
  if (rec.status == Feasibility::Feasible) {
    j["order"] = rec.order;
    j["size"] = rec.size;
  }
  if (rec.measured) j["measured"] = values_to_json(*rec.measured);
  if (!rec.cause.empty()) j["cause"] = rec.cause;
  return j;
}

inline Json sweep_to_json(const SweepReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) entries.push_back(record_to_json(e));
  return {{"schema", "geomon/sweep"},
          {"schema_version", kSchemaVersion},
          {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"max_d", report.max_d},
          {"summary",
           {{"entries", report.entries.size()},
            {"passed", report.passed},
            {"rejected", report.rejected},
            {"failed", report.failed},
            {"seconds", report.seconds}}},
          {"entries", entries}};
}

inline Json lemma_report_to_json(const LemmaReport& report) {
  Json tallies = Json::array();
  for (const auto& t : report.tallies) {
    Json j = {{"id", t.id},     {"claim", t.claim},       {"graphs", t.graphs},
              {"checks", t.checks}, {"failures", t.failures}, {"pass", t.failures == 0}};
    if (t.failures) j["first_failure"] = t.first_failure;
    tallies.push_back(std::move(j));
  }
  return {{"universe", report.universe},
          {"graphs", report.graphs},
          {"pass", report.all_pass()},
          {"seconds", report.seconds},
          {"lemmas", tallies}};
}

}  // namespace geomon
