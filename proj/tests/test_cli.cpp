#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(LSX_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixture(const std::string& name) { return std::string(LSX_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("classify reports verdicts and exits zero") {
  const CliResult r = run_cli("classify " + fixture("g5.ls") + " --json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["schema"] == "lsx-report/1");
  CHECK(doc["verdicts"]["tarski"] == false);
  CHECK(doc["verdicts"]["lindIII"] == true);
  CHECK(doc["verdicts"]["lindIV"] == true);
  CHECK(doc["verdicts"]["lindI"] == true);
  CHECK(doc["verdicts"]["lindII"] == true);
  CHECK(doc["verdicts"]["tl4"] == false);
  CHECK(doc["structure"]["elements"] == 3);
  CHECK(doc.contains("timing_ms"));
}

TEST_CASE("text and json outputs encode the same verdicts") {
  const CliResult text = run_cli("classify " + fixture("g5.ls"));
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("tarski: no") != std::string::npos);
  CHECK(text.output.find("lindIV: yes") != std::string::npos);
}

TEST_CASE("check exits one on a counterexample and zero on a pass") {
  CHECK(run_cli("check " + fixture("g5.ls") + " --property reflexive").exit_code == 0);
  const CliResult r = run_cli("check " + fixture("g5.ls") + " --property monotone");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("witness") != std::string::npos);

  CHECK(run_cli("check " + fixture("g5.ls") +
                " --property alpha-saturated --gamma 0,1 --alpha 2")
            .exit_code == 0);
  CHECK(run_cli("check " + fixture("g5.ls") + " --property trivial --gamma empty").exit_code ==
        0);
  CHECK(run_cli("check " + fixture("id2.ls") + " --property modus-ponens --arrow " +
                fixture("proj2_2.arrow"))
            .exit_code == 0);
}

TEST_CASE("parse and usage errors exit two") {
  const CliResult bad = run_cli("classify " + fixture("bad_parse.ls"));
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("duplicate map line") != std::string::npos);
  CHECK(run_cli("classify " + fixture("missing.ls")).exit_code == 2);
  CHECK(run_cli("check " + fixture("g5.ls") + " --property nonsense").exit_code == 2);
  CHECK(run_cli("check " + fixture("g5.ls") + " --property closed").exit_code == 2);  // no gamma
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("budget overflow exits two") {
  const std::string command = "LSX_BUDGET=4 " + std::string(LSX_CLI_PATH) + " classify " +
                              fixture("g5.ls") + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 2);
  CHECK(output.find("budget") != std::string::npos);
}

TEST_CASE("enumerate lists subsets") {
  const CliResult r = run_cli("enumerate " + fixture("g5.ls") + " --kind maximal-nontrivial");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("{0 1}") != std::string::npos);
}

TEST_CASE("verify runs the registry on one structure") {
  CHECK(run_cli("verify " + fixture("id2.ls") + " --theorems all").exit_code == 0);
  const CliResult r = run_cli("verify " + fixture("g5.ls") + " --theorems T21,T26 --json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["all_passed"] == true);
  CHECK(doc["theorems"].size() == 2);
}

TEST_CASE("corpus command runs a seeded registry sweep") {
  const CliResult r = run_cli(
      "corpus --generator bivaluation --count 40 --size-min 3 --size-max 5 --seed 42 "
      "--theorems T22,T24,T26,T27,T29 --json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["all_passed"] == true);
  CHECK(doc["uncovered"].empty());
}

TEST_CASE("gallery commands") {
  const CliResult list = run_cli("gallery list");
  CHECK(list.exit_code == 0);
  CHECK(list.output.find("G6-omega-patched") != std::string::npos);

  const CliResult run = run_cli("gallery run G6 --json");
  CHECK(run.exit_code == 0);
  const auto doc = nlohmann::json::parse(run.output);
  CHECK(doc["all_pass"] == true);
  CHECK(doc["gallery"] == "G6-omega-patched");
}

TEST_CASE("bival extraction and comparison") {
  const CliResult r = run_cli("bival " + fixture("id2.ls") + " --emit scs --compare --json");
  CHECK(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["family"]["kind"] == "scs");
  CHECK(doc["family"]["valuations"].size() == 2);
  CHECK(doc["compare"]["sound"] == true);
  CHECK(doc["compare"]["complete"] == true);

  const CliResult g5 = run_cli("bival " + fixture("g5.ls") + " --emit scs --compare --json");
  CHECK(g5.exit_code == 0);
  const auto doc5 = nlohmann::json::parse(g5.output);
  CHECK(doc5["family"]["size"] == 0);
  CHECK(doc5["compare"]["sound"] == true);
  CHECK(doc5["compare"]["complete"] == false);
  CHECK(doc5["compare"]["empty_family"] == true);
}
