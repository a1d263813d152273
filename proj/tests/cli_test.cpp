#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "catalog.hpp"
#include "htype.hpp"
#include "serialize.hpp"

using namespace dern;
using Json = nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

const std::string& temp_root() {
  static std::string dir = [] {
    char buf[] = "/tmp/dern_cli_test_XXXXXX";
    if (!mkdtemp(buf)) std::abort();
    return std::string(buf);
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string err_file = temp_root() + "/stderr." + std::to_string(counter++);
  std::string cmd = std::string(DERN_CLI_PATH) + " " + args + " 2>" + err_file;
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  std::ifstream ef(err_file);
  std::stringstream ss;
  ss << ef.rdbuf();
  r.err = ss.str();
  return r;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json strip_timings(const std::string& text) {
  Json j = Json::parse(text);
  j.erase("timings");
  return j;
}

// so(1,4) structure relabeled as an unknown family: the computed verdict no
// longer matches the (empty) expectation for its family
std::string relabeled_exceptional_path() {
  static std::string path = [] {
    nlohmann::ordered_json doc =
        nlohmann::ordered_json::parse(algebra_to_json(*build_so(1, 4)));
    doc["name"] = "relabeled";
    doc["family"] = "custom";
    std::string p = temp_root() + "/relabel.json";
    write_file(p, doc.dump(2) + "\n");
    return p;
  }();
  return path;
}

}  // namespace

TEST_CASE("version and bad invocations") {
  RunResult r = run_cli("--version");
  CHECK(r.code == 0);
  CHECK(r.out.find("0.1.0") != std::string::npos);

  r = run_cli("");
  CHECK(r.code == 1);
  r = run_cli("frobnicate");
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("build emits the library document") {
  RunResult r = run_cli("build sl3R");
  REQUIRE(r.code == 0);
  CHECK(r.out == algebra_to_json(*build_algebra("sl3R")));

  std::string path = temp_root() + "/so14.json";
  r = run_cli("build 'so(1,4)' --out " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(read_file(path) == algebra_to_json(*build_algebra("so(1,4)")));

  RunResult again = run_cli("build @" + path);
  REQUIRE(again.code == 0);
  CHECK(again.out == read_file(path));

  r = run_cli("build sl3R --output markdown");
  CHECK(r.code == 0);
  CHECK(r.out.find("# algebra sl3R") != std::string::npos);

  r = run_cli("build @" + temp_root() + "/missing.json");
  CHECK(r.code == 1);
  CHECK(r.err.find("cannot read") != std::string::npos);
}

TEST_CASE("roots report matches the decomposition") {
  RunResult r = run_cli("roots 'su(1,2)'");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["algebra"]["name"] == "su(1,2)");
  CHECK(j["roots"]["rank"] == 1);
  CHECK(j["roots"]["positive_count"] == 2);
  CHECK(j["roots"]["n_dim"] == 3);
  CHECK(j["roots"]["m_dim"] == 1);
  CHECK(j["roots"]["positive"][0]["mult"] == 2);
  CHECK(j["roots"]["positive"][1]["mult"] == 1);
  CHECK(j["roots"]["positive"][1]["height"] == 2);

  RunResult md = run_cli("roots 'su(1,2)' --output markdown");
  CHECK(md.code == 0);
  CHECK(md.out.find("| root | in simple roots |") != std::string::npos);
  CHECK(md.out.find("highest") != std::string::npos);
}

TEST_CASE("solve command modes and dimensions") {
  RunResult r = run_cli("der solve sl3R --mode rootspace");
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["derivations"]["dim"] == 2);
  CHECK(j["derivations"]["n_dim"] == 3);
  CHECK(j["derivations"]["sym_dim"] == 2);
  CHECK(j["derivations"]["skew_dim"] == 0);
  REQUIRE(j["derivations"]["basis"].size() == 2);
  CHECK(j["derivations"]["basis"][0].size() == 3);

  r = run_cli("der solve sl3R");
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["derivations"]["mode"] == "rootspace");

  r = run_cli("der solve sl3R --mode all");
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["derivations"]["dim"] == 6);

  r = run_cli("der solve sl3R --mode grading");
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["derivations"]["dim"] == 4);

  r = run_cli("der solve sl3R --mode bogus");
  CHECK(r.code == 1);

  r = run_cli("der solve 'su(1,3)' --mode rootspace --output markdown");
  CHECK(r.code == 0);
  CHECK(r.out.find("solution dimension: 11") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  RunResult r = run_cli("der verify sl3R");
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["verdict"]["equal"] == true);
  CHECK(j["verdict"]["matches_expectation"] == true);

  // an expected exception still exits 0
  r = run_cli("der verify 'so(1,3)'");
  CHECK(r.code == 0);
  j = Json::parse(r.out);
  CHECK(j["verdict"]["equal"] == false);
  CHECK(j["verdict"]["exceptional_expected"] == true);
  REQUIRE(j["verdict"]["witness"].is_array());

  r = run_cli("der verify 'bogus(9'");
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("error:") != std::string::npos);

  r = run_cli("der verify @" + relabeled_exceptional_path());
  CHECK(r.code == 2);
  j = Json::parse(r.out);
  CHECK(j["verdict"]["equal"] == false);
  CHECK(j["verdict"]["exceptional_expected"] == false);
  CHECK(j["verdict"]["matches_expectation"] == false);

  r = run_cli("der verify @" + relabeled_exceptional_path() + " --output markdown");
  CHECK(r.code == 2);
  CHECK(r.out.find("| relabeled |") != std::string::npos);

  r = run_cli("der verify 'so(2,2)'");
  CHECK(r.code == 1);
  CHECK(r.err.find("simple") != std::string::npos);
}

TEST_CASE("htype check command") {
  RootDatum rd = decompose(build_algebra("su(1,2)"));
  HighestSplit hs = highest_split(rd);
  MetricTwoStep m = two_step_from_roots(rd, hs.sigma1, rd.omega);
  std::string path = temp_root() + "/slice.json";
  write_file(path, metric_two_step_to_json(m));

  RunResult r = run_cli("htype check " + path);
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["two_step"]["v_dim"] == 2);
  CHECK(j["htype"]["is_htype"] == true);
  CHECK(j["htype"]["sampled_identity"]["failures"] == 0);

  r = run_cli("htype check " + path + " --output markdown --seed 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("H-type: yes") != std::string::npos);

  write_file(temp_root() + "/junk.json", "{\"format\": \"wrong\"}\n");
  r = run_cli("htype check " + temp_root() + "/junk.json");
  CHECK(r.code == 1);
  r = run_cli("htype check " + temp_root() + "/missing.json");
  CHECK(r.code == 1);
}

TEST_CASE("batch command") {
  std::string list = temp_root() + "/list.txt";
  write_file(list, "sl3R\n# comment line\n\nso(1,3)\nsplit-G2\n");
  RunResult r = run_cli("der batch " + list);
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["batch"]["count"] == 3);
  CHECK(j["batch"]["mismatches"] == 0);
  CHECK(j["batch"]["errors"] == 0);
  CHECK(j["batch"]["entries"][1]["algebra"] == "so(1,3)");
  CHECK(j["batch"]["entries"][1]["equal"] == false);
  CHECK(j["batch"]["entries"][1]["matches_expectation"] == true);

  // the run continues past a bad line and flags it
  write_file(list, "sl3R\nnope(\nso(2,3)\n");
  r = run_cli("der batch " + list);
  CHECK(r.code == 1);
  j = Json::parse(r.out);
  CHECK(j["batch"]["count"] == 3);
  CHECK(j["batch"]["errors"] == 1);
  CHECK(j["batch"]["entries"][1].contains("error"));
  CHECK(j["batch"]["entries"][2]["equal"] == true);

  write_file(list, "sl3R\n@" + relabeled_exceptional_path() + "\n");
  r = run_cli("der batch " + list);
  CHECK(r.code == 2);
  j = Json::parse(r.out);
  CHECK(j["batch"]["mismatches"] == 1);

  write_file(list, "");
  r = run_cli("der batch " + list);
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["batch"]["count"] == 0);

  write_file(list, "so(1,3)\nsl3R\n");
  r = run_cli("der batch " + list + " --output markdown");
  CHECK(r.code == 0);
  size_t first = r.out.find("| so(1,3) |");
  size_t second = r.out.find("| sl3R |");
  REQUIRE(first != std::string::npos);
  REQUIRE(second != std::string::npos);
  CHECK(first < second);
}

TEST_CASE("identical invocations agree up to timings") {
  RunResult a = run_cli("der verify 'su(1,2)'");
  RunResult b = run_cli("der verify 'su(1,2)'");
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(strip_timings(a.out) == strip_timings(b.out));

  RunResult m1 = run_cli("roots 'so(2,3)' --output markdown");
  RunResult m2 = run_cli("roots 'so(2,3)' --output markdown");
  REQUIRE(m1.code == 0);
  CHECK_FALSE(m1.out.empty());
  CHECK(m1.out == m2.out);
}
