#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cspec/cli.hpp"
#include "oracles.hpp"

using namespace cspec;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& input = {}) {
  args.insert(args.begin(), "cspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST(Cli, ConstructLinkedComplement) {
  const Result r = invoke({"construct", "--family", "BB", "--n1", "3", "--n2", "3", "--k", "1", "--complement"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, graph6_encode(complete_bipartite(3, 3).without_edge(0, 3)) + "\n");
}

TEST(Cli, ConstructFormats) {
  const Result e = invoke({"construct", "--family", "B", "--s", "1", "--t", "3", "--k", "2", "--format", "edgelist"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(edgelist_decode(e.out), build_detached_join({1, 3, 2}));
  const Result j = invoke({"construct", "--family", "calB", "--s", "2", "--t", "2", "--k", "1", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  const json doc = json::parse(j.out);
  EXPECT_EQ(doc["n"], 5);
  EXPECT_EQ(doc["graph6"], graph6_encode(build_three_clique_join({2, 2, 1})));
}

TEST(Cli, ConstructErrors) {
  const Result bad = invoke({"construct", "--family", "B", "--s", "1", "--t", "2", "--k", "2"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("t-1 >= kappa required for family B"), std::string::npos);
  EXPECT_EQ(invoke({"construct", "--family", "B", "--s", "1", "--n1", "3", "--k", "1"}).code, 2);
  EXPECT_EQ(invoke({"construct", "--family", "BB", "--n1", "3", "--k", "1"}).code, 2);
  EXPECT_EQ(invoke({"construct", "--family", "X"}).code, 2);
  EXPECT_EQ(invoke({"construct", "--family", "B", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"verify", "construct"}).code, 2);
}

TEST(Cli, SpectrumOfEdge) {
  const Result r = invoke({"spectrum", "--format", "graph6"}, "A_\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["values"], json::array({1.0, -1.0}));
  EXPECT_EQ(doc["lambda_1"], 1.0);
  EXPECT_EQ(doc["lambda_n"], -1.0);
  EXPECT_EQ(invoke({"spectrum"}, "Bx\n").code, 2);
  EXPECT_EQ(invoke({"spectrum", "--input", "/nonexistent/file"}).code, 2);
}

TEST(Cli, ConstructPipesIntoSpectrum) {
  for (int s = 1; s <= 4; ++s)
    for (int t = std::max(s, 2); s + t <= 13; ++t)
      for (int k = 1; k <= t - 1 && s + t + k <= 14; ++k) {
        const Result c = invoke({"construct", "--family", "B", "--s", std::to_string(s), "--t", std::to_string(t), "--k",
                                 std::to_string(k), "--complement"});
        ASSERT_EQ(c.code, 0);
        const json doc = json::parse(invoke({"spectrum"}, c.out).out);
        const double top = doc["lambda_1"];
        const double x2 = ((k + s * t) + std::sqrt(std::pow(k + s * t, 2) - 4.0 * k * s * (t - 1))) / 2;
        EXPECT_NEAR(top, std::sqrt(x2), 1e-9 + 1e-11 * top);
      }
}

TEST(Cli, Enumerate) {
  const Result all = invoke({"enumerate", "--n", "4", "--kappa", "3", "--count-only"});
  EXPECT_EQ(all.out, "1\n");
  const Result dedup = invoke({"enumerate", "--n", "5", "--kappa", "1", "--dedup"});
  ASSERT_EQ(dedup.code, 0);
  std::istringstream lines(dedup.out);
  int count = 0;
  for (std::string line; std::getline(lines, line); ++count) EXPECT_EQ(vertex_connectivity(graph6_decode(line)), 1);
  EXPECT_EQ(count, std::stoi(invoke({"enumerate", "--n", "5", "--kappa", "1", "--dedup", "--count-only"}).out));
  EXPECT_EQ(invoke({"enumerate", "--n", "8", "--kappa", "1", "--count-only"}).code, 2);
  EXPECT_EQ(invoke({"enumerate", "--n", "9", "--kappa", "1"}).code, 2);
}

TEST(Cli, VerifyLinkedSixOne) {
  const Result r = invoke({"verify", "--theorem", "4.3", "--n", "6", "--kappa", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc["verdict"], "confirmed");
  EXPECT_NEAR(doc["min_value"].get<double>(), -2.7320508, 1e-7);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(invoke({"verify", "--theorem", "4.3", "--n", "6", "--kappa", "2"}).code, 1);
  EXPECT_EQ(invoke({"verify", "--theorem", "3.4", "--n", "8", "--kappa", "2"}).code, 2);
  EXPECT_EQ(invoke({"verify", "--theorem", "9.9", "--n", "6", "--kappa", "2"}).code, 2);
  const Result cut = invoke({"verify", "--theorem", "lemma3.2", "--n", "6", "--kappa", "2"});
  EXPECT_EQ(cut.code, 0);
  EXPECT_EQ(json::parse(cut.out)["verdict"], "confirmed");
}

TEST(Cli, JobsDoNotChangeOutput) {
  const Result one = invoke({"verify", "--theorem", "3.4", "--n", "6", "--kappa", "1", "--jobs", "1"});
  const Result four = invoke({"verify", "--theorem", "3.4", "--n", "6", "--kappa", "1", "--jobs", "4"});
  EXPECT_EQ(one.out, four.out);
  ::setenv("SPECTRA_JOBS", "3", 1);
  const Result env = invoke({"verify", "--theorem", "3.4", "--n", "6", "--kappa", "1"});
  ::unsetenv("SPECTRA_JOBS");
  EXPECT_EQ(env.out, one.out);
}

TEST(Cli, SweepAndAudit) {
  const Result s33 = invoke({"sweep", "--lemma", "3.3", "--max-n", "12"});
  EXPECT_EQ(s33.code, 0);
  EXPECT_EQ(s33.out.rfind("s,t,kappa", 0), 0U);
  // the radius-above-kappa column fails for n <= 3 kappa, so the sweep reports a failed row
  const Result s42 = invoke({"sweep", "--lemma", "4.2", "--max-n", "12"});
  EXPECT_EQ(s42.code, 1);
  EXPECT_EQ(s42.out.rfind("n1,n2,kappa", 0), 0U);
  EXPECT_NE(s42.out.find("\n4,4,3,"), std::string::npos);
  EXPECT_EQ(invoke({"sweep", "--lemma", "4.2", "--max-n", "5"}).code, 1);
  const Result audit = invoke({"audit", "--max-n", "6"});
  EXPECT_EQ(audit.code, 0);
  EXPECT_NE(audit.out.find("radius-vs-transmission,\"P3\",1.41421356237,2.66666666667"), std::string::npos);
  EXPECT_EQ(invoke({"sweep", "--lemma", "2.2", "--max-n", "12"}).code, 2);
}
