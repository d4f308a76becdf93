#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(EVOMONAD_CLI_PATH) + " " + args;
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), n);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_spec(const std::string& name, const std::string& body) {
  std::string path = "/tmp/evomonad_cli_" + name + ".evo";
  std::ofstream(path) << body;
  return path;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(line);
      line.clear();
    } else {
      line += c;
    }
  }
  if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("simulate emits the thermostat pipeline as CSV") {
  auto spec = write_spec("thermo", "maintainer . thermostat\n");
  auto r = run("simulate " + spec + " --input 10 --step 5 --horizon 30");
  CHECK(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "t,temp");
  CHECK(lines[1] == "0.000000,10.000000");
  CHECK(lines[2] == "5.000000,15.000000");
  CHECK(lines[3] == "10.000000,20.000000");
  CHECK(lines[4] == "15.000000,19.041076");
  CHECK(lines[7].substr(0, 9) == "30.000000");
}

TEST_CASE("simulate includes the final instant of a finite evolution") {
  auto spec = write_spec("finite", "thermostat\n");
  auto r = run("simulate " + spec + " --input 13 --step 4");
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 2);
  // duration 7 is off the 4-step grid and still emitted
  CHECK(lines.back() == "7.000000,20.000000");
}

TEST_CASE("simulate threads water levels through iterations") {
  auto spec = write_spec("water3", "iterate(water, 3)\n");
  auto r = run("simulate " + spec + " --input '(0,0)' --step 10 --horizon 40");
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "t,state,tank1,tank2");
  CHECK(lines[1] == "0.000000,down,0.000000,0.000000");
  CHECK(lines[2] == "10.000000,down,10.000000,0.000000");
  CHECK(lines[3] == "20.000000,down,10.000000,10.000000");
  CHECK(lines[4] == "30.000000,down,20.000000,10.000000");
}

TEST_CASE("simulate completes the ball state like the plots do") {
  auto spec = write_spec("ball", "iterate(ball_earth, 3)\n");
  auto r = run("simulate " + spec + " --input 5 --step 1 --with-duration");
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 3);
  CHECK(lines[0] == "t,vel,pos,duration");
  // position and total duration follow the three-arc closed forms
  CHECK(lines[1].find("0.000000,") == 0);
  CHECK(lines[1].find(",5.000000,2.525381") != std::string::npos);
  CHECK(lines[2].find(",0.100000,") != std::string::npos);
  CHECK(lines.back() == "2.525381,1.237437,0.000000,2.525381");
}

TEST_CASE("an incompatible strict pair exits 3 with a diagnostic") {
  auto spec = write_spec("mismatch", "pair<<thermostat, maintainer>>\n");
  auto r = run("simulate " + spec + " --input 10", true);
  CHECK(r.code == 3);
  CHECK(r.out.find("10") != std::string::npos);
  CHECK(r.out.find("inf") != std::string::npos);
}

TEST_CASE("parse validates specs") {
  auto good = write_spec("good", "supervisor . maintainer . thermostat\n");
  auto r = run("parse " + good);
  CHECK(r.code == 0);
  CHECK(r.out == "supervisor . maintainer . thermostat\n");

  auto bad = write_spec("bad", "supervisor . (maintainer\n");
  CHECK(run("parse " + bad).code == 2);
  auto unknown = write_spec("unknown", "mystery . thermostat\n");
  CHECK(run("parse " + unknown).code == 2);
  CHECK(run("parse /tmp/no_such_file.evo").code == 2);
}

TEST_CASE("simulate rejects bad input literals") {
  auto spec = write_spec("inputs", "thermostat\n");
  CHECK(run("simulate " + spec + " --input up").code == 2);
  CHECK(run("simulate " + spec + " --input '(1,2,3)'").code == 2);
}

TEST_CASE("check exits cleanly and honours the filter") {
  auto r = run("check --only monad --inputs 8 --grid 32");
  CHECK(r.code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);  // three laws and a summary
  CHECK(lines[0].find("monad.left_unit") != std::string::npos);
  CHECK(lines[3].find("3/3") != std::string::npos);
}

TEST_CASE("check --json is byte-identical across runs") {
  const std::string args = "check --seed 42 --json --inputs 8 --grid 32";
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("kleisli.assoc") != std::string::npos);
}

TEST_CASE("repeated simulations are byte-identical") {
  auto spec = write_spec("det", "lift(add) . pair<<sig(1), sig(3)>>\n");
  auto a = run("simulate " + spec + " --input 0 --step 0.25");
  auto b = run("simulate " + spec + " --input 0 --step 0.25");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("list names the catalog") {
  auto r = run("list");
  CHECK(r.code == 0);
  CHECK(r.out.find("thermostat") != std::string::npos);
  CHECK(r.out.find("ball_moon g=1.622") != std::string::npos);
  CHECK(r.out.find("delay") != std::string::npos);
}
