#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "geomon/cli.hpp"

using namespace geomon;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "geomon");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(GEOMON_SOURCE_DIR) + "/data/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "geomon_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, ComputeSingleParameterPrintsBareValue) {
  const auto r = run({"compute", data("c4.edges"), "--params", "meg"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
}

TEST(Cli, ComputeAllParameters) {
  const auto r = run({"compute", data("c4.edges")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "g = 2\neg = 2\nseg = 3\nmeg = 4\n");
}

TEST(Cli, ComputeCertificateAndJson) {
  const auto cert = run({"compute", data("c4.edges"), "--params", "seg,meg", "--certificate"});
  EXPECT_EQ(cert.code, 0);
  EXPECT_NE(cert.out.find("seg = 3\n  set: "), std::string::npos);
  EXPECT_NE(cert.out.find("monitored by"), std::string::npos);

  const auto js = run({"compute", data("c4.edges"), "--json"});
  ASSERT_EQ(js.code, 0);
  const auto doc = result_from_json(Json::parse(js.out));
  const Analysis a(doc.graph);
  for (const auto& c : doc.certificates) EXPECT_TRUE(validate_certificate(a, c));
}

TEST(Cli, ComputeErrors) {
  EXPECT_EQ(run({"compute", data("bad_selfloop.edges")}).code, 2);
  EXPECT_NE(run({"compute", data("bad_selfloop.edges")}).err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"compute", data("c4.edges"), "--params", "xyz"}).code, 2);
  EXPECT_EQ(run({"compute", data("missing.edges")}).code, 2);
  EXPECT_EQ(run({"compute", data("disconnected.edges")}).code, 2);
}

TEST(Cli, Verify) {
  const auto pass = run({"verify", "2", "3", "4", "5"});
  EXPECT_EQ(pass.code, 0);
  EXPECT_NE(pass.out.find("pass"), std::string::npos);

  const auto infeasible = run({"verify", "2", "3", "3", "4"});
  EXPECT_EQ(infeasible.code, 0);
  EXPECT_NE(infeasible.out.find("infeasible"), std::string::npos);

  EXPECT_EQ(run({"verify", "4", "3", "5", "6"}).code, 2);
  EXPECT_EQ(run({"verify", "2", "3"}).code, 2);

  const auto js = run({"verify", "3", "3", "3", "3", "--json"});
  EXPECT_EQ(js.code, 0);
  EXPECT_EQ(Json::parse(js.out)["pass"], true);
}

TEST(Cli, ConstructFormats) {
  const auto edges = run({"construct", "3", "3", "3", "3"});
  EXPECT_EQ(edges.code, 0);
  const Graph g = parse_edge_list(edges.out);
  EXPECT_EQ(g.order(), 6u);

  const auto dot = run({"construct", "3", "3", "3", "3", "--format", "dot", "--no-verify"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("graph G {", 0), 0u);

  const auto path = scratch("construct.json");
  const auto js = run({"construct", "2", "4", "4", "4", "--format", "json", "--out", path.string()});
  EXPECT_EQ(js.code, 0);
  EXPECT_TRUE(js.out.empty());
  std::ifstream in(path);
  const auto doc = Json::parse(in);
  EXPECT_EQ(doc["verification"]["pass"], true);

  EXPECT_EQ(run({"construct", "2", "2", "2", "3"}).code, 1);
  EXPECT_EQ(run({"construct", "2", "2", "2", "3", "--format", "xml"}).code, 2);
}

TEST(Cli, SweepAndEnumerate) {
  const auto report = scratch("sweep.json");
  const auto s = run({"sweep", "--max-d", "4", "--json", report.string()});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("0 failed"), std::string::npos);
  std::ifstream in(report);
  EXPECT_EQ(Json::parse(in)["summary"]["failed"], 0);

  const auto count = run({"enumerate", "--vertices", "4"});
  EXPECT_EQ(count.code, 0);
  EXPECT_EQ(count.out.rfind("38 connected labeled graphs", 0), 0u);

  const auto lemmas = run({"enumerate", "--vertices", "4", "--lemmas"});
  EXPECT_EQ(lemmas.code, 0);
  EXPECT_EQ(lemmas.out.find("FAIL"), std::string::npos);

  const auto sample = run({"enumerate", "--vertices", "9", "--lemmas", "--sample", "5", "--seed", "3"});
  EXPECT_EQ(sample.code, 0);

  EXPECT_EQ(run({"enumerate", "--vertices", "8"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--vertices", "5", "--sample", "3"}).code, 2);
  EXPECT_EQ(run({"sweep"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
