#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gsp/io.hpp"
#include "helpers.hpp"

namespace {

std::string g_cli;

int run(const std::string& args, std::string* out = nullptr) {
  std::string cmd = g_cli + " " + args;
  std::string capture = "/tmp/gsp_cli_capture.txt";
  int rc = std::system((cmd + " > " + capture + " 2>/dev/null").c_str());
  if (out) {
    std::ifstream in(capture);
    std::ostringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
  }
  return WEXITSTATUS(rc);
}

struct Fixture {
  std::string graph_path = "/tmp/gsp_cli_graph.tsv";
  std::string mixture_path = "/tmp/gsp_cli_mixture.json";

  Fixture() {
    gsp::write_edge_list(graph_path, testutil::random_graph(80, 0.25, 12345));
    gsp::write_file(mixture_path,
                    R"({"K":2,"weights":[0.5,0.5],"supports":[[0.0,0.5],[0.5,1.0]],)"
                    R"("kernel":[[0.9,0.05],[0.05,0.9]]})"
                    "\n");
  }
};

}  // namespace

TEST_CASE("sample then verify on its own output is consistent") {
  Fixture fx;
  std::string set_path = "/tmp/gsp_cli_set.json";
  int rc = run("sample --graph " + fx.graph_path +
               " --q 8 --p 4 --m 20 --seed 7 --out " + set_path);
  REQUIRE(rc == 0);
  gsp::SampleSet s = gsp::sample_set_from_json(gsp::read_file(set_path));
  CHECK(s.indices.size() == 20);
  CHECK(s.method == "graphon");

  std::string out;
  rc = run("verify --graph " + fx.graph_path + " --set " + set_path + " --K 4", &out);
  CHECK(rc == 0);
  CHECK(out.find("rank=") != std::string::npos);
  CHECK(out.find("certified=") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  Fixture fx;
  CHECK(run("sample --graph " + fx.graph_path + " --q 0") == 2);
  CHECK(run("sample") == 2);
  CHECK(run("no-such-command") == 2);
  CHECK(run("sample --graph " + fx.graph_path + " --strategy bogus") == 2);
}

TEST_CASE("computational errors exit with code 1") {
  CHECK(run("verify --graph /tmp/gsp_cli_missing.tsv --set /tmp/also_missing.json") == 1);
  Fixture fx;
  // A sample set referencing nodes outside the graph is a runtime error.
  gsp::write_file("/tmp/gsp_cli_bad_set.json",
                  R"({"method":"graphon","seed":null,"budget":1,"indices":[9999]})"
                  "\n");
  CHECK(run("verify --graph " + fx.graph_path + " --set /tmp/gsp_cli_bad_set.json") == 1);
}

TEST_CASE("sample output is byte identical across runs and thread counts") {
  Fixture fx;
  std::string a = "/tmp/gsp_cli_det_a.json", b = "/tmp/gsp_cli_det_b.json";
  std::string args = "sample --graph " + fx.graph_path +
                     " --q 8 --p 4 --m 20 --strategy community --c 2 --seed 42 --out ";
  REQUIRE(std::system(("GRAPHON_SAMPLE_THREADS=1 " + g_cli + " " + args + a).c_str()) == 0);
  REQUIRE(std::system(("GRAPHON_SAMPLE_THREADS=8 " + g_cli + " " + args + b).c_str()) == 0);
  CHECK(gsp::read_file(a) == gsp::read_file(b));
}

TEST_CASE("interval reuse restricts a second graph to the stored intervals") {
  Fixture fx;
  std::string iv = "/tmp/gsp_cli_iv.json";
  std::string s1 = "/tmp/gsp_cli_s1.json", s2 = "/tmp/gsp_cli_s2.json";
  REQUIRE(run("sample --graph " + fx.graph_path + " --q 8 --p 4 --m 16 --seed 3 --out " +
              s1 + " --intervals-out " + iv) == 0);
  REQUIRE(run("sample --graph " + fx.graph_path + " --q 8 --p 4 --m 16 --seed 4 --out " +
              s2 + " --intervals-in " + iv) == 0);
  gsp::IntervalSample saved = gsp::interval_sample_from_json(gsp::read_file(iv));
  CHECK(saved.q == 8);
  CHECK(saved.interval_indices.size() == 4);
  CHECK(gsp::sample_set_from_json(gsp::read_file(s2)).indices.size() == 16);
}

TEST_CASE("poincare subcommand emits a certificate") {
  Fixture fx;
  std::string set_path = "/tmp/gsp_cli_pset.json";
  gsp::write_file(set_path,
                  R"({"method":"graphon","seed":null,"budget":2,"indices":[0,1]})"
                  "\n");
  std::string out;
  int rc = run("poincare --graph " + fx.graph_path + " --set " + set_path +
               " --check 100 --seed 5",
               &out);
  CHECK(rc == 0);
  CHECK(out.find("\"lambda1\"") != std::string::npos);
}

TEST_CASE("difficulty subcommand reports all fields") {
  Fixture fx;
  std::string out;
  int rc = run("difficulty --mixture " + fx.mixture_path, &out);
  CHECK(rc == 0);
  for (const char* key : {"s_max", "coupling", "gamma_min", "b_max", "phi"})
    CHECK(out.find(key) != std::string::npos);
}

TEST_CASE("experiments run end to end with reproducible bytes") {
  Fixture fx;
  std::string out1, out2;
  std::string args = "reconstruct-exp --mixture " + fx.mixture_path +
                     " --n 60 --q 6 --p 3 --m 14 --K 3 --trials 3 --seed 9";
  REQUIRE(run(args, &out1) == 0);
  REQUIRE(run(args, &out2) == 0);
  CHECK(out1 == out2);
  CHECK(out1.find("trial,method,n,budget,certified,rel_error,ms") != std::string::npos);

  std::string cons;
  REQUIRE(run("consistency-exp --mixture " + fx.mixture_path +
              " --n-grid 30,60 --trials 4 --seed 2",
              &cons) == 0);
  CHECK(cons.find("n,trials,components_hit_rate,certified_rate") != std::string::npos);
}

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::string(argv[i]) == "--cli" && i + 1 < argc) {
      g_cli = argv[++i];
      continue;
    }
    rest.push_back(argv[i]);
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: cli_tests --cli <path-to-binary>\n");
    return 1;
  }
  return doctest::Context(int(rest.size()), rest.data()).run();
}
