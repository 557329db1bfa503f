#pragma once

#include <chrono>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "geomon/constructions.hpp"
#include "geomon/errors.hpp"
#include "geomon/harness.hpp"
#include "geomon/io.hpp"
#include "geomon/solvers.hpp"

namespace geomon {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

namespace cli {

inline std::string join_labels(const Graph& g, const std::vector<Vertex>& vs, const char* sep = " ") {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : sep) + g.label(v);
  return out;
}

inline std::string format_values(const ParameterQuadruple& p) {
  return "(" + std::to_string(p.g) + "," + std::to_string(p.eg) + "," + std::to_string(p.seg) + "," +
         std::to_string(p.meg) + ")";
}

inline void print_certificate(std::ostream& out, const Graph& g, const Certificate& c) {
  out << "  set: " << join_labels(g, c.set) << '\n';
  if (c.kind == ParamKind::StrongEdgeGeodetic) {
    for (const auto& p : c.assignment) {
      out << "  path " << g.label(p.pair.first) << " ~ " << g.label(p.pair.second) << ": "
          << join_labels(g, p.path) << '\n';
    }
  }
  if (!c.edge_witness.empty()) {
    const char* verb = c.kind == ParamKind::MonitoringEdgeGeodetic ? "monitored by" : "covered by";
    for (std::size_t i = 0; i < g.size(); ++i) {
      const auto& e = g.edges()[i];
      const auto& w = c.edge_witness[i];
      out << "  edge " << g.label(e.first) << "-" << g.label(e.second) << " " << verb << " " << g.label(w.first)
          << "," << g.label(w.second) << '\n';
    }
  }
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
  if (!f) throw Error("write to '" + path + "' failed");
}

inline Graph read_graph(const std::string& path) {
  if (path != "-") return read_edge_list_file(path);
  const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return parse_edge_list(text);
}

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace cli

// Entry point of the `geomon` tool. Exit codes: 0 success or pass, 1
// verification failure, 2 usage, input or parse error.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Geodetic-type parameters and quadruple realizations of graphs", "geomon"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  bool no_pruning = false;
  app.add_flag("--no-pruning", no_pruning, "disable forced/excluded-vertex pruning in the solvers");

  // compute
  auto* compute = app.add_subcommand("compute", "compute parameters of a graph given as an edge list");
  std::string compute_file;
  std::vector<std::string> compute_params;
  bool compute_cert = false, compute_json = false;
  compute->add_option("file", compute_file, "edge-list file, or - for standard input")->required();
  compute->add_option("--params", compute_params, "subset of g,eg,seg,meg")->delimiter(',');
  compute->add_flag("--certificate", compute_cert, "print the witnessing sets");
  compute->add_flag("--json", compute_json, "emit a JSON result document");

  // construct
  auto* construct = app.add_subcommand("construct", "build a graph realizing (a,b,c,d)");
  std::vector<int> construct_q;
  std::string construct_format = "edgelist", construct_out;
  bool construct_no_verify = false;
  construct->add_option("quadruple", construct_q, "a b c d")->required()->expected(4);
  construct->add_option("--format", construct_format, "edgelist, dot or json")
      ->check(CLI::IsMember({"edgelist", "dot", "json"}));
  construct->add_option("--out", construct_out, "output file (default: standard output)");
  construct->add_flag("--no-verify", construct_no_verify, "skip solving the built graph");

  // verify
  auto* verify = app.add_subcommand("verify", "build (a,b,c,d) and check it with the exact solvers");
  std::vector<int> verify_q;
  bool verify_json = false;
  verify->add_option("quadruple", verify_q, "a b c d")->required()->expected(4);
  verify->add_flag("--json", verify_json, "emit the verification record as JSON");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "verify every 2 <= a <= b <= c <= d <= max-d");
  int sweep_max_d = 0;
  std::string sweep_json;
  bool sweep_quiet = false;
  sweep_cmd->add_option("--max-d", sweep_max_d, "largest d")->required()->check(CLI::Range(2, 64));
  sweep_cmd->add_option("--json", sweep_json, "write the sweep report to this file");
  sweep_cmd->add_flag("--quiet", sweep_quiet, "print only the summary");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "run checks over connected graphs on n vertices");
  int enum_n = 0;
  std::size_t enum_sample = 0;
  std::uint64_t enum_seed = 1;
  bool enum_lemmas = false;
  std::string enum_json;
  enumerate->add_option("--vertices", enum_n, "number of vertices")->required();
  enumerate->add_flag("--lemmas", enum_lemmas, "evaluate the structural lemma suite on every graph");
  enumerate->add_option("--sample", enum_sample, "use this many seeded random graphs instead of all graphs");
  enumerate->add_option("--seed", enum_seed, "base seed for --sample");
  enumerate->add_option("--json", enum_json, "write the lemma report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  SolverConfig cfg;
  cfg.use_lemma_pruning = !no_pruning;

  auto quad_of = [](const std::vector<int>& v) { return Quadruple{v[0], v[1], v[2], v[3]}; };

  try {
    if (*compute) {
      std::vector<ParamKind> kinds;
      if (compute_params.empty()) {
        kinds.assign(kAllKinds.begin(), kAllKinds.end());
      } else {
        for (const auto& name : compute_params) {
          const auto k = parse_kind(name);
          if (!k) {
            err << "error: unknown parameter '" << name << "' (expected g, eg, seg or meg)\n";
            return kExitUsage;
          }
          if (std::find(kinds.begin(), kinds.end(), *k) == kinds.end()) kinds.push_back(*k);
        }
        std::sort(kinds.begin(), kinds.end());
      }
      const Graph g = cli::read_graph(compute_file);
      const auto start = std::chrono::steady_clock::now();
      const Analysis a(g);
      ResultDocument doc{g, {}, 0.0};
      for (auto k : kinds) doc.certificates.push_back(minimum(a, k, cfg));
      doc.seconds = cli::seconds_since(start);
      if (kinds.size() == kAllKinds.size()) {
        const auto& c = doc.certificates;
        if (!(c[0].value() <= c[1].value() && c[1].value() <= c[2].value() && c[2].value() <= c[3].value())) {
          err << "error: chain g <= eg <= seg <= meg violated\n";
          return kExitFail;
        }
      }
      if (compute_json) {
        out << result_to_json(doc).dump(2) << '\n';
      } else if (kinds.size() == 1 && !compute_cert) {
        out << doc.certificates.front().value() << '\n';
      } else {
        for (const auto& c : doc.certificates) {
          out << short_name(c.kind) << " = " << c.value() << '\n';
          if (compute_cert) cli::print_certificate(out, g, c);
        }
      }
      return kExitPass;
    }

    if (*construct) {
      const Quadruple q = quad_of(construct_q);
      const auto outcome = realize(q);
      if (outcome.status == Feasibility::InvalidOrder) {
        err << "error: " << q.str() << " needs 2 <= a <= b <= c <= d\n";
        return kExitUsage;
      }
      if (outcome.status != Feasibility::Feasible) {
        err << q.str() << " " << to_string(outcome.status) << '\n';
        return kExitFail;
      }
      const auto& built = *outcome.realization;
      std::optional<ParameterQuadruple> measured;
      if (!construct_no_verify) measured = quadruple(built.graph, cfg).values;
      std::string text;
      if (construct_format == "dot") {
        text = export_dot(built.graph, &built.plan);
      } else if (construct_format == "json") {
        text = construction_to_json(built, measured).dump(2) + "\n";
      } else {
        text = "# " + std::string(to_string(built.plan.family)) + " construction for " + q.str() + "\n" +
               write_edge_list(built.graph);
      }
      if (construct_out.empty()) {
        out << text;
      } else {
        cli::write_text(construct_out, text);
      }
      if (measured && !matches(*measured, q)) {
        err << "verification failed: built graph has " << cli::format_values(*measured) << ", expected " << q.str()
            << '\n';
        return kExitFail;
      }
      return kExitPass;
    }

    if (*verify) {
      const Quadruple q = quad_of(verify_q);
      const auto rec = verify_quadruple(q, cfg);
      if (rec.status == Feasibility::InvalidOrder) {
        err << "error: " << q.str() << " needs 2 <= a <= b <= c <= d\n";
        return kExitUsage;
      }
      if (verify_json) {
        out << record_to_json(rec).dump(2) << '\n';
      } else if (rec.status != Feasibility::Feasible) {
        out << q.str() << " " << to_string(rec.status) << '\n';
      } else {
        out << q.str() << " " << (rec.pass ? "pass" : "FAIL");
        if (rec.family) out << " family=" << to_string(*rec.family);
        out << " n=" << rec.order << " m=" << rec.size;
        if (rec.measured) out << " measured=" << cli::format_values(*rec.measured);
        if (!rec.cause.empty()) out << " cause=\"" << rec.cause << '"';
        out << '\n';
      }
      return rec.pass ? kExitPass : kExitFail;
    }

    if (*sweep_cmd) {
      auto progress = [&](const VerifyRecord& rec) {
        if (sweep_quiet && rec.pass) return;
        out << rec.target.str() << ' ';
        if (rec.status != Feasibility::Feasible) {
          out << (rec.pass ? "rejected" : "FAIL") << " (" << to_string(rec.status) << ")\n";
          return;
        }
        out << (rec.pass ? "pass" : "FAIL") << " family=" << (rec.family ? to_string(*rec.family) : "-")
            << " n=" << rec.order;
        if (rec.measured) out << " measured=" << cli::format_values(*rec.measured);
        if (!rec.cause.empty()) out << " cause=\"" << rec.cause << '"';
        out << '\n';
      };
      const auto report = sweep(sweep_max_d, cfg, progress);
      out << "sweep max_d=" << report.max_d << ": " << report.entries.size() << " quadruples, " << report.passed
          << " verified, " << report.rejected << " rejected as infeasible, " << report.failed << " failed ("
          << report.seconds << " s)\n";
      if (!sweep_json.empty()) cli::write_text(sweep_json, sweep_to_json(report).dump(2) + "\n");
      return report.failed == 0 ? kExitPass : kExitFail;
    }

    if (*enumerate) {
      if (enum_sample == 0) {
        if (!enum_lemmas) {
          const auto start = std::chrono::steady_clock::now();
          const auto count = for_each_connected_graph(enum_n, [](const Graph&) {});
          out << count << " connected labeled graphs on " << enum_n << " vertices (" << cli::seconds_since(start)
              << " s)\n";
          return kExitPass;
        }
      } else if (enum_n < 2) {
        throw InvalidParameters("--vertices must be at least 2");
      }
      if (!enum_lemmas) {
        err << "error: --sample needs --lemmas\n";
        return kExitUsage;
      }
      const auto report = enum_sample == 0
                              ? lemma_report_exhaustive(enum_n)
                              : lemma_report_sample(enum_sample, static_cast<std::size_t>(enum_n),
                                                    static_cast<std::size_t>(enum_n), enum_seed);
      out << report.universe << ": " << report.graphs << " graphs (" << report.seconds << " s)\n";
      for (const auto& t : report.tallies) {
        out << "  " << (t.failures == 0 ? "pass" : "FAIL") << "  " << t.id << "  checks=" << t.checks;
        if (t.failures) out << " failures=" << t.failures << " first: " << t.first_failure;
        out << '\n';
      }
      if (!enum_json.empty()) cli::write_text(enum_json, lemma_report_to_json(report).dump(2) + "\n");
      return report.all_pass() ? kExitPass : kExitFail;
    }
  } catch (const ChainViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace geomon
