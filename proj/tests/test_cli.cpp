#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "schubert/cli.hpp"
#include "schubert/complex.hpp"

using namespace schubert;
using schubert::cli::RunConfig;

namespace {

RunConfig config(const std::string& cmd, int n, std::optional<std::vector<int>> k = std::nullopt,
                 std::optional<std::vector<int>> theta = std::nullopt, const std::string& format = "text") {
  RunConfig c;
  c.command = cmd;
  c.n = n;
  c.k = std::move(k);
  c.theta = std::move(theta);
  c.format = format;
  return c;
}

struct Run {
  int status = -1;
  std::string out;
};

// Runs the built tool with stderr folded into the captured output.
Run tool(const std::string& args) {
  const char* exe = std::getenv("SCHUBERT_TOOL");
  Run r;
  if (!exe) return r;
  const std::string cmd = std::string("\"") + exe + "\" " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("theta selection") {
  CHECK(cli::resolve_theta(config("homology", 4, std::vector<int>{1, 3})) ==
        cli::resolve_theta(config("homology", 4, std::nullopt, std::vector<int>{2})));
  CHECK(cli::resolve_theta(config("homology", 4)) == ThetaSet::empty(4));
  CHECK_THROWS_AS(cli::resolve_theta(config("homology", 4, std::vector<int>{1}, std::vector<int>{2})), DomainError);
  CHECK_THROWS_AS(cli::resolve_theta(config("homology", 1)), DomainError);
  CHECK_THROWS(cli::resolve_theta(config("homology", 4, std::vector<int>{4})));
}

TEST_CASE("size cap") {
  std::ostringstream err;
  CHECK_NOTHROW(cli::check_cap(ThetaSet::empty(8), false, err));
  CHECK_THROWS_AS(cli::check_cap(ThetaSet::empty(9), false, err), DomainError);
  CHECK_NOTHROW(cli::check_cap(ThetaSet::from_k(9, {1, 2, 3}), false, err));
  CHECK_THROWS_AS(cli::check_cap(ThetaSet::from_k(10, {1}), false, err), DomainError);
  CHECK(err.str().empty());
  CHECK_NOTHROW(cli::check_cap(ThetaSet::empty(9), true, err));
  CHECK(err.str().find("cost estimate") != std::string::npos);
  CHECK_THROWS_AS(cli::cmd_homology(config("homology", 9)), DomainError);
}

TEST_CASE("homology text") {
  CHECK(cli::cmd_homology(config("homology", 3, std::vector<int>{1})) ==
        "n=3 k={1} dim=2\nH_0 = Z\nH_1 = Z2\nH_2 = 0\n");
  const std::string gr = cli::cmd_homology(config("homology", 4, std::vector<int>{2}));
  CHECK(gr.find("H_0 = Z\nH_1 = Z2\nH_2 = Z2\nH_3 = 0\nH_4 = Z\n") != std::string::npos);
  const std::string circle = cli::cmd_homology(config("homology", 2));
  CHECK(circle.find("H_0 = Z\nH_1 = Z\n") != std::string::npos);
  CHECK_THROWS_AS(cli::cmd_homology(config("homology", 3, std::nullopt, std::nullopt, "dot")), DomainError);
}

TEST_CASE("homology json round trip") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& th : all_theta_sets(n)) {
      const std::string doc = cli::cmd_homology(config("homology", n, th.k_set(), std::nullopt, "json"));
      const auto j = nlohmann::json::parse(doc);
      CHECK(j["n"] == n);
      CHECK(j["k"].get<std::vector<int>>() == th.k_set());
      CHECK(j["dim"] == th.dimension());
      REQUIRE(j["groups"].size() == static_cast<std::size_t>(th.dimension() + 1));
      for (std::size_t d = 0; d < j["groups"].size(); ++d) {
        const auto& g = j["groups"][d];
        CHECK(g["degree"] == d);
        CHECK(g["betti"].is_number_integer());
        for (const auto& f : g["torsion"]) CHECK(f == 2);
      }
      const RunConfig again = config("homology", j["n"].get<int>(), j["k"].get<std::vector<int>>(), std::nullopt, "json");
      CHECK(cli::cmd_homology(again) == doc);
    }
  const auto gr = nlohmann::json::parse(cli::cmd_homology(config("homology", 4, std::vector<int>{2}, std::nullopt, "json")));
  CHECK(gr["groups"][1]["torsion"] == nlohmann::json::array({2}));
  CHECK(gr["groups"][4]["betti"] == 1);
}

TEST_CASE("poincare") {
  const std::string s3 = cli::cmd_poincare(config("poincare", 3));
  CHECK(s3.find("P(t)  = 1+2t+2t^2+t^3\n") != std::string::npos);
  CHECK(s3.find("FP(t) = 1+t^3\n") != std::string::npos);
  CHECK(s3.find("TP(t) = 2t\n") != std::string::npos);
  const std::string pt = cli::cmd_poincare(config("poincare", 3, std::nullopt, std::vector<int>{1, 2}));
  CHECK(pt.find("P(t)  = 1\nFP(t) = 1\nTP(t) = 0\n") != std::string::npos);
  const auto j = nlohmann::json::parse(cli::cmd_poincare(config("poincare", 4, std::vector<int>{2}, std::nullopt, "json")));
  CHECK(j["P"] == nlohmann::json::array({1, 1, 2, 1, 1}));
  CHECK(j["FP"] == nlohmann::json::array({1, 0, 0, 0, 1}));
  CHECK(j["TP"] == nlohmann::json::array({0, 1, 1}));
  CHECK(j["L"] == 2);
}

TEST_CASE("incidence diagrams") {
  const std::string golden =
      "digraph incidence {\n"
      "  // n=3 k={1} dim=2\n"
      "  rankdir=BT;\n"
      "  node [shape=box, fontname=\"monospace\"];\n"
      "  c0_0 [label=\"1 2 3\\n(0,0)\"];\n"
      "  { rank=same; c0_0; }\n"
      "  c1_0 [label=\"2 1 3\\n(1,0)\"];\n"
      "  { rank=same; c1_0; }\n"
      "  c2_0 [label=\"3 1 2\\n(2,0)\"];\n"
      "  { rank=same; c2_0; }\n"
      "  c2_0 -> c1_0 [style=solid, label=\"-2\"];\n"
      "}\n";
  CHECK(cli::cmd_incidence(config("incidence", 3, std::vector<int>{1}, std::nullopt, "dot")) == golden);

  const ThetaSet th = ThetaSet::empty(4);
  const std::string dot = cli::cmd_incidence(config("incidence", 4, std::nullopt, std::nullopt, "dot"));
  CHECK(dot == cli::cmd_incidence(config("incidence", 4, std::nullopt, std::nullopt, "dot")));
  CHECK(count(dot, "[label=\"") == 24);
  const ChainComplex cx = build_complex(th);
  int plus = 0, minus = 0;
  for (int d = 1; d <= cx.dimension(); ++d)
    for (int c = 0; c < cx.boundary(d).cols(); ++c)
      for (const auto& [r, v] : cx.boundary(d).column(c)) (v > 0 ? plus : minus) += 1;
  CHECK(count(dot, "style=dashed, label=\"+2\"") == plus);
  CHECK(count(dot, "style=solid, label=\"-2\"") == minus);
  CHECK(count(dot, " -> ") == plus + minus);

  const std::string pt = cli::cmd_incidence(config("incidence", 4, std::nullopt, std::vector<int>{1, 2, 3}, "dot"));
  CHECK(count(pt, "[label=\"") == 1);
  CHECK(count(pt, " -> ") == 0);
}

TEST_CASE("generators") {
  const std::string g = cli::cmd_generators(config("generators", 4));
  CHECK(g.find("X_{1,1,3} (torsion) = <1,1,3>") != std::string::npos);
  const auto j = nlohmann::json::parse(cli::cmd_generators(config("generators", 4, std::vector<int>{2}, std::nullopt, "json")));
  CHECK(j.is_object());
}

TEST_CASE("verify") {
  RunConfig c;
  c.command = "verify";
  c.tier = "quick";
  std::ostringstream out;
  CHECK(cli::cmd_verify(c, out) == 0);
  const std::string s = out.str();
  for (const char* suite : {"dd-zero", "oracle-equivalence", "polynomial-match", "T3/T4-match", "generator-cycles", "geom-identities"})
    CHECK(s.find(std::string("] ") + suite + ":") != std::string::npos);
  CHECK(s.find("[FAIL]") == std::string::npos);
  CHECK(s.find("[WARN] T3/T4-match") != std::string::npos);
  CHECK(s.find("T4 formula 2 vs SNF 3 at n=4 Theta={}") != std::string::npos);
}

TEST_CASE("command-line tool") {
  if (!std::getenv("SCHUBERT_TOOL")) {
    MESSAGE("SCHUBERT_TOOL not set; skipping");
    return;
  }
  const Run rp2 = tool("homology --n 3 --k 1");
  CHECK(rp2.status == 0);
  CHECK(rp2.out == "n=3 k={1} dim=2\nH_0 = Z\nH_1 = Z2\nH_2 = 0\n");
  CHECK(tool("homology --n 4 --theta 2 --format json").out ==
        cli::cmd_homology(config("homology", 4, std::nullopt, std::vector<int>{2}, "json")));

  const Run both = tool("homology --n 4 --k 1 --theta 2");
  CHECK(both.status != 0);
  const Run capped = tool("homology --n 10");
  CHECK(capped.status == 2);
  CHECK(capped.out.find("cap") != std::string::npos);

  const std::string path = "cli_test_incidence.dot";
  const Run written = tool("incidence --n 3 --k 1 --out " + path);
  CHECK(written.status == 0);
  std::ifstream f(path);
  std::stringstream body;
  body << f.rdbuf();
  CHECK(body.str() == cli::cmd_incidence(config("incidence", 3, std::vector<int>{1}, std::nullopt, "dot")));
  std::remove(path.c_str());

  const Run v = tool("verify --tier quick");
  CHECK(v.status == 0);
  CHECK(std::regex_search(v.out, std::regex(R"(\[PASS\] dd-zero: .*\(\d+\.\d\ds\))")));
}
