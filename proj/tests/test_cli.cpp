#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "holo/cli.hpp"
#include "holo/io.hpp"
#include "support.hpp"

using namespace holo;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "holoreduce");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return test::data(rel); }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("holoreduce_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("analyze the Domb operator") {
  const Run r = run({"analyze", "--operator", data("operators/domb_m-32.json")});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "d = 3\n"));
  CHECK(contains(r.out, "R_L = {} (empty)"));
  CHECK(contains(r.out, "coprime check: pass"));
  const Run j = run({"--json", "analyze", "--sequence", "domb", "--geom", "1/16"});
  CHECK(j.code == kExitOk);
  const Json doc = parse_json_text(j.out);
  CHECK(doc["d"] == 2);
  CHECK(doc["R_L"].empty());
  CHECK(doc["f"] == "-6*s-9");  // -3(2s+3) after content normalization
}

TEST_CASE("reduce a Franel polynomial") {
  const Run r = run({"reduce", "--operator", data("operators/franel.json"), "--poly", "27*k^2*(3*k+1)", "--json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{\"cs\":{\"0\":\"-1\",\"2\":\"-3\"},\"kept\":{},\"residual\":\"0\"}\n");
}

TEST_CASE("adjoint, telescope and generate") {
  const Run a = run({"adjoint", "--operator", data("operators/franel.json"), "-p", "1"});
  CHECK(a.code == kExitOk);
  CHECK(contains(a.out, "L*(1) = -9*k-6"));

  const Run t = run({"telescope", "--operator", data("operators/franel.json"), "--sequence", "franel",
                     "--alternating", "-p", "k^2", "--hi", "60"});
  CHECK(t.code == kExitOk);
  CHECK(contains(t.out, "window-normalized: -n^2*(8*p(n-1)*F(n-1)+p(n-2)*F(n))"));
  CHECK(contains(t.out, "checked n <= 60: pass"));

  const Run f = run({"--json", "telescope", "--sequence", "delannoy", "--family", "--hi", "100"});
  CHECK(f.code == kExitOk);
  CHECK(contains(f.out, "\"claim\":\"sum_{k=0}^{n-1} (-4*k-2)*F(k) == 0 (mod (n))\""));

  const Run g = run({"generate", "--seed", data("seeds/domb_m-32.json"), "-P", "n^2"});
  CHECK(g.code == kExitOk);
  CHECK(contains(g.out, "sum_{n>=0} (9n^4-8n^3-n^2) * Domb(n)/(-32)^n = 4/(3*pi)"));
  CHECK(contains(g.out, "membership check: pass"));
}

TEST_CASE("sequences and guessing") {
  const Run s = run({"seq", "--sequence", "delannoy", "-N", "4"});
  CHECK(s.out == "0 1\n1 3\n2 13\n3 63\n4 321\n");
  const Run r = run({"seq", "--sequence", "franel", "--alternating", "-N", "3", "--recurrence", "--json"});
  CHECK(r.out == "{\"n\":0,\"value\":\"1\"}\n{\"n\":1,\"value\":\"-2\"}\n{\"n\":2,\"value\":\"10\"}\n"
                 "{\"n\":3,\"value\":\"-56\"}\n");
  const Run g = run({"guess", "--sequence", "delannoy", "-D", "1", "--json"});
  CHECK(g.code == kExitOk);
  CHECK(contains(g.out, "\"coeffs\":[\"n+1\",\"-6*n-9\",\"n+2\"]"));
  CHECK(run({"guess", "--sequence", "franel", "-J", "1", "-D", "1"}).code == kExitMathFailure);
}

TEST_CASE("verification subcommands") {
  const Run v = run({"--json", "verify-series", "--seed", data("seeds/domb_m64.json"), "-N", "200"});
  CHECK(v.code == kExitOk);
  const Json j = parse_json_text(v.out);
  CHECK(j["target"] == "8*sqrt(3)/(3*pi)");
  CHECK(j["partial_terms"] == 200);
  CHECK(j["pass"] == true);

  const Run c = run({"verify-congruence", "--claim", data("claims/franel_0.json"), "--json"});
  CHECK(c.code == kExitOk);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 23);
  CHECK(contains(c.out, "{\"n\":5,\"lhs_mod\":\"24\",\"rhs_mod\":\"24\",\"pass\":true}"));

  const std::string bad = temp_file("bad_claim.json", R"({"sequence": {"name": "franel", "alternating": true},
    "weight": "3*k+2", "modulus": {"const": 4, "poly": "n^2"}, "rhs": {"coeff": 0}, "range": {"lo": 1, "hi": 30}})");
  const Run f = run({"verify-congruence", "--claim", bad});
  CHECK(f.code == kExitMathFailure);
  CHECK(contains(f.out, "counterexample"));
  const Run e = run({"verify-congruence", "--claim", bad, "--exhaustive", "--json"});
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 30);
}

TEST_CASE("selftest passes") {
  const Run r = run({"selftest"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "selftest: all golden cases pass"));
  CHECK_FALSE(contains(r.out, "FAIL"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"reduce", "--operator", data("operators/franel.json")}).code == kExitUsage);
  const Run p = run({"reduce", "--operator", data("operators/franel.json"), "--poly", "k^^2"});
  CHECK(p.code == kExitUsage);
  CHECK(contains(p.err, "position 2"));
  const std::string broken = temp_file("broken.json", "{\"var\": \"n\", \"coeffs\": [\"n\", }");
  const Run b = run({"analyze", "--operator", broken});
  CHECK(b.code == kExitUsage);
  CHECK(contains(b.err, "position"));
  CHECK(run({"seq", "--sequence", "nope", "-N", "3"}).code == kExitUsage);
  CHECK(run({"verify-series", "--seed", data("seeds/domb_m64.json"), "--digits", "10"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("precision from the environment") {
  setenv("HOLOREDUCE_DIGITS", "12", 1);
  CHECK(run({"verify-series", "--seed", data("seeds/domb_m64.json"), "-N", "50"}).code == kExitUsage);
  setenv("HOLOREDUCE_DIGITS", "40", 1);
  const Run r = run({"--json", "verify-series", "--seed", data("seeds/domb_m64.json"), "-N", "200"});
  CHECK(parse_json_text(r.out)["abs_residual"] == "<1e-40");
  unsetenv("HOLOREDUCE_DIGITS");
}

TEST_CASE("no identity means a mathematical failure") {
  // Q constant cannot absorb the degree-1 part of L*(n) against P = n.
  const Run r = run({"generate", "--seed", data("seeds/domb_m-32.json"), "-P", "n", "--qdeg", "0"});
  CHECK(r.code == kExitMathFailure);
}

TEST_CASE("JSON output is byte-identical across runs") {
  const std::vector<std::vector<std::string>> commands = {
      {"--json", "adjoint", "--operator", data("operators/domb_m-32.json"), "-p", "n^2+1"},
      {"--json", "analyze", "--operator", data("operators/franel.json")},
      {"--json", "reduce", "--operator", data("operators/franel.json"), "-p", "k^5-k"},
      {"--json", "telescope", "--operator", data("operators/franel.json"), "--sequence", "franel", "--alternating"},
      {"--json", "generate", "--seed", data("seeds/franel4_m5776.json"), "-P", "n^3"},
      {"--json", "guess", "--sequence", "domb", "-D", "3"},
      {"--json", "seq", "--sequence", "domb", "-N", "10"},
      {"--json", "verify-series", "--seed", data("seeds/domb_m-32.json"), "-N", "200"},
      {"--json", "verify-congruence", "--claim", data("claims/franel_3_2.json")},
      {"--json", "selftest"},
  };
  for (const auto& cmd : commands) {
    const Run a = run(cmd);
    const Run b = run(cmd);
    CAPTURE(cmd[1]);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
    std::istringstream lines(a.out);
    for (std::string line; std::getline(lines, line);) CHECK_NOTHROW(parse_json_text(line));
  }
}
