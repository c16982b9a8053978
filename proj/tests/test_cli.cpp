// Drives the installed binary through a shell and pins the output formats
// and the exit-code contract: 0 ok, 1 verification failure, 2 input error,
// 3 budget exceeded.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef POSETX_BIN
#define POSETX_BIN "posetx"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(POSETX_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) output.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = std::string("cli_") + name + ".poset";
  std::ofstream out(path);
  out << body;
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("info lines") {
  std::string chain = write_temp("chain3", "points 3\nrel 0 1\nrel 1 2\n");
  RunResult r = run("info " + chain);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "k=3 d=4 exp=+1*4 -1*3"));

  std::string n2 = write_temp("fence2", "points 4\nrel 0 1\nrel 2 1\nrel 2 3\n");
  r = run("info " + n2);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "d=8 exp=+1*8 -1*6 -1*5 +1*4"));

  std::string empty = write_temp("empty", "points 0\n");
  r = run("info " + empty);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "k=0 d=1 exp=+1*1"));

  r = run("info " + chain + " --format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"d\": \"4\""));
  CHECK(contains(r.output, "\"exp\": \"+1*4 -1*3\""));
}

TEST_CASE("downsets command") {
  std::string n2 = write_temp("fence2b", "points 4\nrel 0 1\nrel 2 1\nrel 2 3\n");
  for (const char* algo : {"brute", "split", "antichain"}) {
    RunResult r = run("downsets " + n2 + " --algo " + algo);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "d=8"));
  }
  RunResult r = run("downsets " + n2 + " --list");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "{}\n{0}\n{2}\n{0,2}\n{0,1,2}\n{2,3}\n{0,2,3}\n{0,1,2,3}\n"));
}

TEST_CASE("expo command") {
  std::string n2 = write_temp("fence2c", "points 4\nrel 0 1\nrel 2 1\nrel 2 3\n");
  RunResult r = run("expo " + n2 + " --m 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "19"));
  r = run("expo " + n2 + " --sum");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "+1*8 -1*6 -1*5 +1*4"));
  r = run("expo " + n2 + " --verify");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "[ok]   oracle-agreement"));
}

TEST_CASE("catalog tables") {
  RunResult r = run("catalog tables --max-k 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "e_3(m) = +1*8 +6*6 +6*5 -6*4 -18*3 +12*2 -1*1"));
  CHECK(contains(r.output, "e_33(m) = +1*8 -3*4 +3*2 -1*1"));
  CHECK(contains(r.output, "e_3^3(m) = +6*4 -6*3"));
  CHECK(contains(r.output, "p: 1 1 3 19 219"));
}

TEST_CASE("catalog tables through five points") {
  RunResult r = run("catalog tables --max-k 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "p: 1 1 3 19 219 4231 130023"));
  CHECK(contains(r.output, "e_5^5(m) = +120*6 -120*5"));
}

TEST_CASE("catalog build and verify") {
  RunResult r = run("catalog build --max-k 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "posetx-catalog v1 kmax=2"));
  r = run("catalog verify --max-k 3 --m-max 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "all checks passed"));
}

TEST_CASE("exit codes") {
  std::string bad = write_temp("bad", "points 2\nrel 0 5\n");
  CHECK(run("info " + bad).exit_code == 2);
  std::string cyclic = write_temp("cyclic", "points 2\nrel 0 1\nrel 1 0\n");
  CHECK(run("info " + cyclic).exit_code == 2);
  CHECK(run("info no_such_file.poset").exit_code == 2);
  CHECK(run("catalog build --max-k 9").exit_code == 3);
  std::string a1 = write_temp("a1", "points 1\n");
  CHECK(run("expo " + a1 + " --verify").exit_code == 0);
}
