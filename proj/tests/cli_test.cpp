#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "oddspec/graph.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only; stderr is left on the test log
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("analyze reports the named fixtures") {
  RunResult r = run("analyze name:petersen 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("odd_lengths: 5 9") != std::string::npos);
  CHECK(r.output.find("chi: 3") != std::string::npos);
  CHECK(r.output.find("omega: 2") != std::string::npos);

  RunResult j = run("analyze name:groetzsch --json 2>/dev/null");
  CHECK(j.exit_code == 0);
  CHECK(j.output.find("\"chi\":4") != std::string::npos);
  CHECK(j.output.find("\"odd_lengths\":[5,7,9,11]") != std::string::npos);
}

TEST_CASE("analyze accepts graph6 directly and over stdin") {
  std::string pet = oddspec::to_graph6(oddspec::named_graph("petersen"));
  RunResult direct = run("analyze " + pet + " 2>/dev/null");
  CHECK(direct.exit_code == 0);
  CHECK(direct.output.find("graph6: " + pet) != std::string::npos);

  const char* path = "cli_test_stdin.g6";
  {
    std::ofstream f(path);
    f << pet << "\n" << oddspec::to_graph6(oddspec::named_graph("chvatal")) << "\n";
  }
  RunResult piped = run("analyze - --json < " + std::string(path) + " 2>/dev/null");
  CHECK(piped.exit_code == 0);
  CHECK(std::count(piped.output.begin(), piped.output.end(), '\n') == 2);
  std::remove(path);
}

TEST_CASE("analyze rejects bad input with a usage failure") {
  RunResult r = run("analyze '###' 2>/dev/null");
  CHECK(r.exit_code == 1);
  RunResult bare = run("2>/dev/null");
  CHECK(bare.exit_code == 1);
}

TEST_CASE("verify emits a report and a clean exit") {
  RunResult csv = run("verify --corpus gen:5 --format csv 2>/dev/null");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.rfind("check,pass,fail,skip_hypothesis,skip_budget\n", 0) == 0);

  RunResult json = run("verify --corpus gen:5 --jobs 2 2>/dev/null");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("\"graphs\": 34") != std::string::npos);

  RunResult limited = run("verify --corpus gen:5 --checks gyarfas_bound 2>/dev/null");
  CHECK(limited.exit_code == 0);
  CHECK(limited.output.find("wang_35") == std::string::npos);

  RunResult unknown = run("verify --corpus gen:5 --checks nonsense 2>/dev/null");
  CHECK(unknown.exit_code == 1);

  RunResult budget = run("verify --corpus name_of_missing_file.g6 2>/dev/null");
  CHECK(budget.exit_code == 1);
}

TEST_CASE("verify reports incompleteness through exit code 3") {
  RunResult r = run("verify --corpus rand:12,0.6,3,1 --budget 5 2>/dev/null");
  CHECK(r.exit_code == 3);
}

TEST_CASE("verify writes the report to a file on request") {
  const char* path = "cli_test_report.json";
  RunResult r = run("verify --corpus gen:4 --out " + std::string(path) + " 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string body((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(body.find("\"corpus\": \"gen:4\"") != std::string::npos);
  std::remove(path);
}

TEST_CASE("mine filters a corpus file") {
  const char* path = "cli_test_mine.g6";
  {
    std::ofstream f(path);
    f << oddspec::to_graph6(oddspec::named_graph("petersen")) << "\n"
      << oddspec::to_graph6(oddspec::named_graph("groetzsch")) << "\n";
  }
  RunResult r = run("mine --corpus " + std::string(path) +
                    " --triangle-free --odd-lengths 4 --chi 4 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.output == oddspec::to_graph6(oddspec::named_graph("groetzsch")) + "\n");
  std::remove(path);
}

TEST_CASE("gen prints named graphs") {
  RunResult r = run("gen --name petersen --graph6 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(r.output == oddspec::to_graph6(oddspec::named_graph("petersen")) + "\n");

  RunResult summary = run("gen --name 'book(3)' 2>/dev/null");
  CHECK(summary.exit_code == 0);
  CHECK(summary.output.find("n=5") != std::string::npos);

  RunResult bad = run("gen --name nonesuch 2>/dev/null");
  CHECK(bad.exit_code == 1);
}
