#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "dedekind/serialize.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " DEDEKIND_CLI_PATH " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) {
    out.append(buf, n);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("cli single computations") {
  CHECK(run("sum 2 7").out == "1/14\n");
  CHECK(run("inv 6 7").out == "15\n");
  CHECK(run("inv 6 7 --method closed").out == "15\n");
  const auto poly = run("poly 5 --format json");
  CHECK(poly.code == 0);
  CHECK(nlohmann::json::parse(poly.out) ==
        nlohmann::json::parse(R"({"b":5,"degree":6,"phi":4,"terms":{"0":1,"3":2,"6":1}})"));
}

TEST_CASE("cli poly output round-trips") {
  for (int b : {2, 3, 17, 64, 100}) {
    const auto out = run("poly " + std::to_string(b) + " --format json").out;
    const auto p = dedekind::serialize::invpoly_from_json(nlohmann::json::parse(out));
    for (const auto& r : dedekind::structural_check(p)) {
      CHECK(r.passed);
    }
  }
}

TEST_CASE("cli exit codes") {
  CHECK(run("sum 2 7").code == 0);
  CHECK(run("sum 0x2 7").code == 2);
  CHECK(run("sum 2e0 7").code == 2);
  CHECK(run("sum 2 4").code == 2);
  CHECK(run("inv 2").code == 2);
  CHECK(run("nosuch").code == 2);
  CHECK(run("verify prop9.9").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("verify prop2.6 --bmax 100").code == 0);
  CHECK(run("verify conj2.7 --bmax 20 --mode multiset").code == 1);
}

TEST_CASE("cli json reports") {
  const auto r = run("--json verify prop2.6 --bmax 100");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("status") == "ok");
  CHECK(j.at("payload").at("status") == "verified-at-scale");
  const auto bad = run("--json verify conj2.7 --bmax 20 --mode multiset");
  const auto jb = nlohmann::json::parse(bad.out);
  CHECK(jb.at("status") == "counterexamples");
  CHECK_FALSE(jb.at("payload").at("counterexamples").empty());
  const auto err = run("--json sum 2 4");
  CHECK(err.code == 2);
  CHECK(nlohmann::json::parse(err.out).at("status") == "error");
}

TEST_CASE("cli table1 and numroots") {
  const auto t = run("--json table1 --bmax 30");
  CHECK(nlohmann::json::parse(t.out).at("payload").at("rows").size() == 5);
  const auto dir = std::filesystem::temp_directory_path() / "dedekind_cli_test";
  std::filesystem::create_directories(dir);
  const auto r = run("numroots 11 --out roots.csv", "DEDEKIND_OUT_DIR=" + dir.string());
  CHECK(r.code == 0);
  std::ifstream in(dir / "roots.csv");
  std::string line;
  int rows = -1;
  while (std::getline(in, line)) {
    ++rows;
  }
  CHECK(rows == 45);
  std::filesystem::remove_all(dir);
}
