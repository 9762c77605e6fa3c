#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "bkm/json_io.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using bkm::Json;
using namespace bkm::test;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(BKM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string fixture(const std::string& name) {
  return (fs::path(BKM_FIXTURE_DIR) / name).string();
}

std::string temp_json(const std::string& name, const std::string& body) {
  fs::path dir = fs::temp_directory_path() / "bkm_cli_tests";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("validate: well-formed algebra") {
  auto r = run_cli("validate " + fixture("a2.json"));
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["n"] == 2);
  CHECK(j["real_idx"] == Json::array({0, 1}));
  CHECK(j["im_idx"] == Json::array());
  CHECK(j["symmetrizer"] == Json::array({1, 1}));
}

TEST_CASE("validate: axiom violation gives exit 2 and a JSON error report") {
  auto r = run_cli("validate " + fixture("bad_zero_sym.json"));
  CHECK(r.exit_code == 2);
  Json j = Json::parse(r.out);
  CHECK(j["ok"] == false);
  CHECK(j["error"]["type"] == "AxiomError");
  CHECK(j["error"]["message"].get<std::string>().size() > 0);
}

TEST_CASE("missing file gives exit 3, malformed JSON gives exit 4") {
  CHECK(run_cli("validate /no/such/file.json").exit_code == 3);
  auto bad = temp_json("broken.json", "{\"matrix\": [[2,");
  CHECK(run_cli("validate " + bad).exit_code == 4);
  CHECK(run_cli("numerator " + fixture("a1.json") + " " +
                temp_json("w.json", "{\"h\": [1]}") + " --chi bogus")
            .exit_code == 4);
}

TEST_CASE("numerator output round-trips and matches the library") {
  auto w = temp_json("w2.json", "{\"h\": [2]}");
  auto r = run_cli("numerator " + fixture("a1.json") + " " + w + " -H 10");
  REQUIRE(r.exit_code == 0);
  auto parsed = bkm::series_from_json(Json::parse(r.out), 1);
  auto expect = bkm::numerator(a1(), wt({2}), bkm::make_chi_sign(a1()), 10);
  CHECK(parsed == expect);
  CHECK(parsed.coefficient({3}) == -1);
}

TEST_CASE("output bytes are deterministic across runs") {
  auto w = temp_json("w111.json", "{\"h\": [1, 1, 1]}");
  std::string args =
      "numerator " + fixture("example1.json") + " " + w + " -H 8";
  auto r1 = run_cli(args);
  auto r2 = run_cli(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK_FALSE(r1.out.empty());
}

TEST_CASE("character matches the library") {
  auto w = temp_json("w101.json", "{\"h\": [1, 0, 1]}");
  auto r = run_cli("character " + fixture("example1.json") + " " + w + " -H 6");
  REQUIRE(r.exit_code == 0);
  auto parsed = bkm::series_from_json(Json::parse(r.out), 3);
  CHECK(parsed == bkm::normalized_character(example1(), wt({1, 0, 1}), 6));
}

TEST_CASE("tensor-char accepts a weight list") {
  auto w = temp_json("pair.json", "[{\"h\": [1]}, {\"h\": [1]}]");
  auto r = run_cli("tensor-char " + fixture("a1.json") + " " + w + " -H 4");
  REQUIRE(r.exit_code == 0);
  auto parsed = bkm::series_from_json(Json::parse(r.out), 1);
  CHECK(parsed.coefficient({1}) == 2);
}

TEST_CASE("decide and oracle-check on the bundled instance") {
  auto r = run_cli("decide " + fixture("decide_example1.json"));
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["isomorphic"] == true);
  CHECK(j["witness"].size() == 4);

  auto o = run_cli("oracle-check " + fixture("decide_example1.json") + " -H 8");
  REQUIRE(o.exit_code == 0);
  Json oj = Json::parse(o.out);
  CHECK(oj["equal_to_H"] == true);
  CHECK(oj["sum_check"]["equal"] == true);
  CHECK(oj["H"] == 8);
}

TEST_CASE("graph-c on the bundled path graph") {
  auto r = run_cli("graph-c " + fixture("graph_p3.json"));
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["c"] == 1);
  CHECK(j["c_k"] == Json::array({0, 2, 6}));
  CHECK(j["connected"] == true);
}

TEST_CASE("custom chi file") {
  auto w = temp_json("w111b.json", "{\"h\": [1, 1, 1]}");
  auto r = run_cli("numerator " + fixture("example1.json") + " " + w +
                   " --chi @" + fixture("chi_custom_example1.json") + " -H 8");
  REQUIRE(r.exit_code == 0);
  auto A = example1();
  auto chi = bkm::make_chi_custom(A, {{0, -1}, {2, -1}},
                                  {{1, bkm::Rational(7, 2)}});
  CHECK(bkm::series_from_json(Json::parse(r.out), 3) ==
        bkm::numerator(A, wt({1, 1, 1}), chi, 8));
}

TEST_CASE("log-check reports a full match") {
  auto w = temp_json("w101b.json", "{\"h\": [1, 0, 1]}");
  auto r = run_cli("log-check " + fixture("example1.json") + " " + w);
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["all_match"] == true);
  CHECK(j["checks"].size() == 8);  // all subsets of a 3-element Pi(lambda)
  for (const auto& e : j["checks"]) CHECK(e["match"] == true);
}

TEST_CASE("text format and --out") {
  auto w = temp_json("w1.json", "{\"h\": [1]}");
  auto r = run_cli("numerator " + fixture("a1.json") + " " + w +
                   " --format text");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("X0^2") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);

  fs::path outp = fs::temp_directory_path() / "bkm_cli_tests" / "out.json";
  auto r2 = run_cli("numerator " + fixture("a1.json") + " " + w + " --out " +
                    outp.string());
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.empty());
  std::ifstream in(outp);
  REQUIRE(in.good());
  Json j = Json::parse(in);
  CHECK(bkm::series_from_json(j, 1) ==
        bkm::numerator(a1(), wt({1}), bkm::make_chi_sign(a1()), 10));
}

TEST_CASE("dominance violation is a domain error") {
  auto w = temp_json("wneg.json", "{\"h\": [-1]}");
  auto r = run_cli("character " + fixture("a1.json") + " " + w);
  CHECK(r.exit_code == 2);
  Json j = Json::parse(r.out);
  CHECK(j["ok"] == false);
}
