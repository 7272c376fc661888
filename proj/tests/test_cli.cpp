// End-to-end checks of the qotsim binary: seeded determinism, schema
// conformance of the JSON outputs, and the documented exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "schema_check.hpp"

#ifndef QOTSIM_BINARY
#error "QOTSIM_BINARY must point at the CLI executable"
#endif
#ifndef QOTSIM_SCHEMA_DIR
#error "QOTSIM_SCHEMA_DIR must point at the schemas directory"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QOTSIM_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), output};
}

nlohmann::json load_schema(const std::string& name) {
  std::ifstream f(std::string(QOTSIM_SCHEMA_DIR) + "/" + name);
  REQUIRE(f.good());
  return nlohmann::json::parse(f);
}

void expect_valid(const std::string& output, const std::string& schema_name) {
  const auto doc = nlohmann::json::parse(output);
  const auto errors = schema_check::validate(doc, load_schema(schema_name));
  for (const auto& e : errors) MESSAGE(e);
  CHECK(errors.empty());
}

}  // namespace

TEST_CASE("cli: repeated seeded invocations are byte-identical") {
  const std::vector<std::string> invocations{
      "teleport --b2 0.2 --state plus --trials 1 --seed 42",
      "teleport --b2 0.2 --state plus --trials 2000 --seed 42",
      "ot --b2 0.25 --mode bit --bit 1 --encoding plus-minus --trials 2000 --repeat 2 --seed 9",
      "attack fake-bm --b2 0.2 --true 2 --reported 3 --state 0.6,0.8",
      "attack pauli --b2 0.2 --k 1,0,0,0 --state 0.6,0.8",
      "attack entangle --b2 0.2 --state 0.6,0.8",
      "channel --b2 0.2 --n 2 --m 2 --k 10 --eavesdropper intercept-resend --seed 5",
      "sweep --grid 0.1,0.2 --trials 2000 --seed 12",
  };
  for (const auto& args : invocations) {
    CAPTURE(args);
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.output == second.output);
    CHECK(first.exit_code == second.exit_code);
    CHECK(!first.output.empty());
  }
}

TEST_CASE("cli: single-run transcript validates against the published schema") {
  const auto r = run_cli("teleport --b2 0.2 --state plus --trials 1 --seed 7");
  CHECK(r.exit_code == 0);
  expect_valid(r.output, "transcript.schema.json");
}

TEST_CASE("cli: Monte Carlo teleport report validates and agrees") {
  const auto r = run_cli("teleport --b2 0.2 --state plus --trials 20000 --seed 7");
  CHECK(r.exit_code == 0);
  expect_valid(r.output, "teleport_report.schema.json");
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["agrees_within_4_sigma"].get<bool>());
  CHECK(doc["analytic"]["success_probability"].get<double>() == doctest::Approx(0.4));
}

TEST_CASE("cli: ot report validates; computational encoding is flagged") {
  const auto r = run_cli("ot --b2 0.25 --mode bit --bit 0 --trials 5000 --repeat 3 --seed 3");
  CHECK(r.exit_code == 0);
  expect_valid(r.output, "ot_report.schema.json");
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["analytic_learn_rate"].get<double>() == doctest::Approx(0.5));
  CHECK(doc["curve"].size() == 3);

  const auto flagged =
      run_cli("ot --b2 0.25 --mode bit --bit 0 --encoding computational --trials 500 --seed 3");
  CHECK(flagged.exit_code == 0);
  const auto fdoc = nlohmann::json::parse(flagged.output);
  CHECK(fdoc["non_oblivious_encoding"].get<bool>());
  CHECK(fdoc["learn_rate"].get<double>() == 1.0);
  CHECK(fdoc["decode_accuracy"].get<double>() == 1.0);
}

TEST_CASE("cli: attack reports validate against the schema") {
  const auto fake = run_cli("attack fake-bm --b2 0.2 --true 2 --reported 3 --state 0.6,0.8");
  CHECK(fake.exit_code == 0);
  expect_valid(fake.output, "attack_report.schema.json");
  const auto fdoc = nlohmann::json::parse(fake.output);
  CHECK(fdoc["outcome"]["fidelity_to_intended"].get<double>() == doctest::Approx(0.0));

  const auto pauli = run_cli("attack pauli --b2 0.2 --k 1,0,0,0 --state 0.6,0.8");
  CHECK(pauli.exit_code == 0);
  expect_valid(pauli.output, "attack_report.schema.json");
  const auto pdoc = nlohmann::json::parse(pauli.output);
  CHECK(pdoc["honest_equivalent"].get<bool>());
  CHECK(pdoc["note"].get<std::string>() == "equivalent to honest protocol");

  const auto ent = run_cli("attack entangle --b2 0.2 --state 0.6,0.8");
  CHECK(ent.exit_code == 0);
  expect_valid(ent.output, "attack_report.schema.json");
  const auto edoc = nlohmann::json::parse(ent.output);
  CHECK(edoc["outcome"]["alice_information"]["joint_em_diagonal"]["mutual_information"]
            .get<double>() == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("cli: channel report validates; acceptance drives the exit code") {
  const auto honest = run_cli("channel --b2 0.2 --n 2 --m 2 --k 10 --seed 1");
  CHECK(honest.exit_code == 0);
  expect_valid(honest.output, "channel_report.schema.json");
  CHECK(nlohmann::json::parse(honest.output)["report"]["accepted"].get<bool>());

  // With 20 decoys an interceptor is caught on virtually every seed.
  int rejected = 0;
  for (int seed = 0; seed < 5; ++seed) {
    const auto r = run_cli("channel --b2 0.2 --n 2 --m 1 --k 20 --eavesdropper "
                           "intercept-resend --seed " +
                           std::to_string(seed));
    expect_valid(r.output, "channel_report.schema.json");
    if (r.exit_code == 1) ++rejected;
  }
  CHECK(rejected >= 4);
}

TEST_CASE("cli: sweep emits the documented CSV header and analytic column") {
  const auto r = run_cli("sweep --grid 0.1,0.2,0.3,0.4 --trials 4000 --seed 2");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.output);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "b2,analytic_p,empirical_p,stderr,trials");
  std::vector<double> analytic;
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::getline(cells, cell, ',');
    std::getline(cells, cell, ',');
    analytic.push_back(std::stod(cell));
  }
  REQUIRE(analytic.size() == 4);
  CHECK(analytic[0] == doctest::Approx(0.2));
  CHECK(analytic[1] == doctest::Approx(0.4));
  CHECK(analytic[2] == doctest::Approx(0.6));
  CHECK(analytic[3] == doctest::Approx(0.8));
}

TEST_CASE("cli: usage and validation errors exit with code 2") {
  CHECK(run_cli("teleport --b2 0.6 --trials 1 --seed 1").exit_code == 2);
  CHECK(run_cli("teleport --b2 0.5 --trials 1 --seed 1").exit_code == 2);
  CHECK(run_cli("teleport --trials 1").exit_code == 2);  // missing --b2
  CHECK(run_cli("attack pauli --b2 0.2 --k 1,1,0,0").exit_code == 2);  // non-unitary
  CHECK(run_cli("attack fake-bm --b2 0.2 --true 5 --reported 1").exit_code == 2);
  CHECK(run_cli("sweep --grid , --trials 10").exit_code == 2);  // empty grid
  CHECK(run_cli("sweep --grid 0.7 --trials 10").exit_code == 2);
  CHECK(run_cli("ot --b2 0.2 --state 0,0,0,0").exit_code == 2);  // zero state
}

TEST_CASE("cli: --out writes the same bytes as stdout") {
  const std::string path = "cli_out_test.json";
  const auto direct = run_cli("attack entangle --b2 0.2 --state 0.6,0.8");
  const auto filed = run_cli("attack entangle --b2 0.2 --state 0.6,0.8 --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::stringstream content;
  content << f.rdbuf();
  CHECK(content.str() == direct.output);
  std::remove(path.c_str());
}
