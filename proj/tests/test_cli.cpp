#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#ifndef OKOUNKOV_CLI_PATH
#error "OKOUNKOV_CLI_PATH must be defined by the build"
#endif
#ifndef OKOUNKOV_FIXTURE_DIR
#error "OKOUNKOV_FIXTURE_DIR must be defined by the build"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(OKOUNKOV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("models subcommand lists the catalog") {
  RunResult r = run_cli("models");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("pgl2_wonderful") != std::string::npos);
  RunResult j = run_cli("models --format json");
  REQUIRE(j.exit_code == 0);
  auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc["models"].size() == 4);
  REQUIRE(doc["models"][3]["boundary_count"] == 1);
}

TEST_CASE("compute subcommand emits cones with string integers") {
  RunResult r = run_cli("compute moment-cone pgl2_wonderful --bound 4");
  REQUIRE(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["cone"]["rays"].size() == 5);
  REQUIRE(doc["cone"]["rays"][0][0].is_string());

  RunResult c = run_cli("compute cone p1_sl2 --bound 2");
  REQUIRE(c.exit_code == 0);
  REQUIRE(nlohmann::json::parse(c.out)["cone"]["rays"].size() == 2);
}

TEST_CASE("compute output is byte-for-byte deterministic") {
  RunResult a = run_cli("compute Ktilde pgl2_wonderful --bound 3");
  RunResult b = run_cli("compute Ktilde pgl2_wonderful --bound 3");
  REQUIRE(a.exit_code == 0);
  REQUIRE(a.out == b.out);
}

TEST_CASE("usage and domain errors map to the documented exit codes") {
  REQUIRE(run_cli("compute K p1_sl2").exit_code == 3);          // r = 0
  REQUIRE(run_cli("compute cone no_such_model").exit_code == 2);  // unknown model
  REQUIRE(run_cli("models --bogus").exit_code == 2);              // unknown flag
  REQUIRE(run_cli("slice p1_sl2 --divisor -1").exit_code == 3);   // non-effective
  REQUIRE(run_cli("compute nonsense p1_sl2").exit_code == 2);     // bad what
}

TEST_CASE("slice subcommand computes bodies with exact volumes") {
  RunResult r = run_cli("slice pgl2_wonderful --divisor 1 --body okounkov");
  REQUIRE(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["volume"] == "1/6");
  REQUIRE(doc["vertices"].size() == 5);

  RunResult m = run_cli("slice pgl2_wonderful --divisor 1 --body moment");
  REQUIRE(m.exit_code == 0);
  REQUIRE(nlohmann::json::parse(m.out)["vertices"].size() == 2);
}

TEST_CASE("verify subcommand passes on catalog models") {
  RunResult r = run_cli("verify p1_sl2 --bound 2 --samples 5");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("ALL CHECKS PASSED") != std::string::npos);

  RunResult j = run_cli("verify pgl2_wonderful --checks inductive --bound 3 --format json");
  REQUIRE(j.exit_code == 0);
  auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc["passed"] == true);
  REQUIRE(doc["reports"].size() == 1);
}

TEST_CASE("verify reports are byte-for-byte reproducible") {
  const std::string args = "verify pgl2_wonderful --bound 3 --samples 10 --seed 7 --format json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  REQUIRE(a.out == b.out);
}

TEST_CASE("output files land in the directory named by the environment") {
  std::string dir = std::filesystem::temp_directory_path() / "okounkov_cli_test";
  std::filesystem::create_directories(dir);
  std::string cmd = "OKOUNKOV_OUTPUT_DIR=" + dir + " " + OKOUNKOV_CLI_PATH +
                    " models --format json --output listing.json 2>/dev/null";
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::ifstream in(dir + "/listing.json");
  REQUIRE(in.good());
  auto doc = nlohmann::json::parse(in);
  REQUIRE(doc["models"].size() == 4);
  std::filesystem::remove_all(dir);
}

TEST_CASE("every corrupted fixture fails verification with exit code 1") {
  const std::string dir = OKOUNKOV_FIXTURE_DIR;
  for (const char* fixture :
       {"corrupt_boundary_section.json", "corrupt_chart_map.json",
        "corrupt_restriction_psi.json", "corrupt_coordinate_weights.json"}) {
    RunResult r = run_cli("verify " + dir + "/" + fixture + " --bound 2 --samples 5");
    INFO(fixture);
    REQUIRE(r.exit_code == 1);
  }
}
