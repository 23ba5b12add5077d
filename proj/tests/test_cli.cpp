#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using nlohmann::json;

namespace {

#ifndef LIE4_CLI_PATH
#error "LIE4_CLI_PATH must point at the CLI binary"
#endif

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(LIE4_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("cli_input_") + name + ".json";
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("check: abelian spec passes with exit 0") {
  auto path = write_temp("abelian", R"({"structure_constants": []})");
  auto r = run_cli("check " + path);
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["all_zero"] == true);
  CHECK(rep["jacobi_zero"] == true);
  CHECK(rep["is_solvable"] == true);
}

TEST_CASE("check: malformed file exits 2") {
  auto path = write_temp("broken_json", "{ not json");
  CHECK(run_cli("check " + path).exit_code == 2);
  auto both = write_temp("both_forms", R"({"structure_constants": [], "coframe_d": []})");
  CHECK(run_cli("check " + both).exit_code == 2);
  CHECK(run_cli("check does_not_exist.json").exit_code == 2);
}

TEST_CASE("check: broken Jacobi with curvature requested exits 3") {
  auto path = write_temp("bad_jacobi", R"({
    "structure_constants": [
      {"i": 1, "j": 2, "k": 2, "value": "1"},
      {"i": 1, "j": 3, "k": 3, "value": "1"},
      {"i": 2, "j": 3, "k": 1, "value": "1"}],
    "J": [["0","-1","0","0"],["1","0","0","0"],["0","0","0","-1"],["0","0","1","0"]]})");
  auto r = run_cli("check " + path);
  CHECK(r.exit_code == 3);
  json rep = json::parse(r.out);
  CHECK(rep["jacobi_zero"] == false);
  CHECK(rep["jacobi_failures"].size() >= 1);
}

TEST_CASE("check: coframe input with the standard structure") {
  // the two-parameter family at (1,1): de1 = -e13 + e23 + e24, de2 = -e13 + e14 + e23, de3 = 2 e34
  auto path = write_temp("family11", R"({
    "coframe_d": [
      ["0","-1","0","1","1","0"],
      ["0","-1","1","1","0","0"],
      ["0","0","0","0","0","2"],
      ["0","0","0","0","0","0"]],
    "J": [["0","-1","0","0"],["1","0","0","0"],["0","0","0","-1"],["0","0","1","0"]],
    "omega": ["1","0","0","0","0","1"]})");
  auto r = run_cli("check " + path);
  json rep = json::parse(r.out);
  CHECK(rep["jacobi_zero"] == true);
  CHECK(rep["d_omega_zero"] == true);
  CHECK(rep["ricci_j_invariant"] == true);
  CHECK(rep["nijenhuis_zero"] == false);
  CHECK(rep["ricci"][2][2] == "-6");
  CHECK(rep["w2_zero"] == true);
  CHECK(rep["w3_zero"] == true);
}

TEST_CASE("family: exact Ricci and domain error") {
  auto r = run_cli("family --s 0 --t 1");
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["ricci"][2][2] == "-3/2");
  CHECK(rep["ricci"][0][0] == "0");
  CHECK(rep["nijenhuis_zero"] == false);
  CHECK(run_cli("family --s 1 --t 0").exit_code == 4);
}

TEST_CASE("classify: single branch and range checking") {
  auto r = run_cli("classify --branch 16");
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["id"] == 16);
  CHECK(rep["all_zero"] == true);
  CHECK(rep["integrable"] == false);
  CHECK(run_cli("classify --branch 0").exit_code == 2);
  CHECK(run_cli("classify --branch 18").exit_code == 2);
  CHECK(run_cli("classify --branch x").exit_code == 2);
}

TEST_CASE("classify: all branches") {
  auto r = run_cli("classify --branch all");
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["branches"].size() == 17);
  for (const auto& c : rep["branches"]) CHECK(c["all_zero"] == true);
  for (const auto& red : rep["reductions"]) CHECK(red["ok"] == true);
}

TEST_CASE("model g49 emits the expected coframe") {
  auto r = run_cli("model g49 --alpha 1/2");
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["coframe_d"][1][0] == "1/2");  // df2 = (1 - alpha) f12
  CHECK(rep["coframe_d"][2][1] == "-1");   // df3 = -f13
  CHECK(rep["jacobi_zero"] == true);
}

TEST_CASE("model r2sol2 emits valid structure constants") {
  auto r = run_cli("model r2sol2");
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["jacobi_zero"] == true);
  CHECK(rep["is_solvable"] == true);
  CHECK(rep["structure_constants"].size() == 4);
}

TEST_CASE("model kowalski reports homogeneous samples") {
  auto r = run_cli("model kowalski --lambda 1 --points 3");
  CHECK(r.exit_code == 0);
  json rep = json::parse(r.out);
  CHECK(rep["points"].size() == 3);
  for (const auto& p : rep["points"]) CHECK(p["richardson_ok"] == true);
  CHECK(run_cli("model kowalski --lambda -1").exit_code == 4);
}

TEST_CASE("sweep: CSV shape and determinism") {
  auto r1 = run_cli("sweep --s-range 0:1 --t-range 1:2 --grid 3");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out.rfind("s,t,ricci33,trace_ad_e4,g2_residual,w2_residual,w3_residual,nijenhuis_norm\n",
                     0) == 0);
  int lines = 0;
  for (char c : r1.out)
    if (c == '\n') ++lines;
  CHECK(lines == 10);  // header + 9 grid points (t never 0 in this range)
  auto r2 = run_cli("sweep --s-range 0:1 --t-range 1:2 --grid 3");
  CHECK(r1.out == r2.out);  // byte-identical reruns

  // zero-t rows are skipped
  auto r3 = run_cli("sweep --s-range 0:1 --t-range -1:1 --grid 3");
  int lines3 = 0;
  for (char c : r3.out)
    if (c == '\n') ++lines3;
  CHECK(lines3 == 7);  // header + 6 (middle t row removed)
}

TEST_CASE("reports round-trip through the JSON parser") {
  for (const std::string& args : {std::string("family --s 1/2 --t 2"), std::string("classify --branch 5"),
                                  std::string("model g49 --alpha 2")}) {
    auto r = run_cli(args);
    json once = json::parse(r.out);
    json twice = json::parse(once.dump());
    CHECK(once == twice);
  }
}
