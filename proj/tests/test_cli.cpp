// Copyright 2026 The coherence-lab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

const std::string kCli = COHLAB_CLI_PATH;
const std::string kFixtures = COHLAB_FIXTURE_DIR;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string command = kCli + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) {
    result.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fx(const std::string& name) { return kFixtures + "/" + name; }

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("measure sp of the maximally mixed qubit against itself is 1") {
  const RunResult r = run("measure --state-a " + fx("state_mixed_qubit.json") +
                          " --state-b " + fx("state_mixed_qubit.json") + " --measure sp");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1.000000000000") != std::string::npos);
}

TEST_CASE("measure lsp of I/2 against |0><0| is 1/sqrt(2)") {
  const RunResult r = run("measure --state-a " + fx("state_mixed_qubit.json") +
                          " --state-b " + fx("state_pure_zero.json") + " --measure lsp");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.707106781187") != std::string::npos);
}

TEST_CASE("measure gsp of the diagonal pair") {
  const RunResult r = run("measure --state-a " + fx("state_diag_07_03.json") +
                          " --state-b " + fx("state_diag_06_04.json") + " --measure gsp");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.994484231355") != std::string::npos);
}

TEST_CASE("measure glsp of the diagonal pair") {
  const RunResult r = run("measure --state-a " + fx("state_diag_07_03.json") +
                          " --state-b " + fx("state_diag_06_04.json") + " --measure glsp");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.648074069841") != std::string::npos);
}

TEST_CASE("measure emits valid JSON on request") {
  const RunResult r = run("measure --state-a " + fx("state_mixed_qubit.json") +
                          " --state-b " + fx("state_pure_zero.json") +
                          " --measure sp --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["measure"] == "sp");
  CHECK(j["value_fixed"] == "0.707106781187");
}

TEST_CASE("measure exit codes follow the contract") {
  // dimension mismatch -> 3
  CHECK(run("measure --state-a " + fx("state_mixed_qubit.json") + " --state-b " +
            fx("state_mixed_qutrit.json") + " --measure sp")
            .exit_code == 3);
  // unreadable file -> 2
  CHECK(run("measure --state-a " + fx("missing.json") + " --state-b " +
            fx("state_mixed_qubit.json") + " --measure sp")
            .exit_code == 2);
  // invalid payload (a channel where a state is needed) -> 2
  CHECK(run("measure --state-a " + fx("channel_dephasing.json") + " --state-b " +
            fx("state_mixed_qubit.json") + " --measure sp")
            .exit_code == 2);
}

TEST_CASE("interfere on the identity-like fixture gluing") {
  const RunResult r = run("interfere --gluing " + fx("gluing_fig4b.json") + " --input " +
                          fx("state_plus.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.707106781187") != std::string::npos);
}

TEST_CASE("interfere cross-checks formula against simulation") {
  for (const char* fixture : {"gluing_lsp_seeded.json", "gluing_sp_seeded.json"}) {
    const RunResult r =
        run("interfere --gluing " + fx(fixture) + " --input " + fx("state_plus.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("difference") != std::string::npos);
  }
}

TEST_CASE("interfere accepts a shift and scan samples") {
  const RunResult r = run("interfere --gluing " + fx("gluing_lsp_seeded.json") +
                          " --input " + fx("state_mixed_qubit.json") + " --shift " +
                          fx("unitary_sigma_x.json") + " --scan 5 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["samples"].size() == 5);
  CHECK(j["difference"].get<double>() < 1e-10);
}

TEST_CASE("interfere exit 4 when the tolerance is unappeasable") {
  const RunResult r = run("interfere --gluing " + fx("gluing_lsp_seeded.json") +
                          " --input " + fx("state_plus.json") + " --tolerance -1");
  CHECK(r.exit_code == 4);
}

TEST_CASE("verify runs clean and is reproducible") {
  const RunResult first = run("verify --dim 2 --trials 10 --seed 7");
  CHECK(first.exit_code == 0);
  const RunResult second = run("verify --dim 2 --trials 10 --seed 7");
  CHECK(second.output == first.output);
  CHECK(first.output.find("all") != std::string::npos);
}

TEST_CASE("verify with zero trials is a vacuous pass") {
  CHECK(run("verify --dim 2 --trials 0 --seed 1").exit_code == 0);
}

TEST_CASE("verify rejects out-of-range dimensions") {
  CHECK(run("verify --dim 7 --trials 1").exit_code == 2);
}

TEST_CASE("distinguish-demo separates the two relaxation dilations") {
  const RunResult r = run("distinguish-demo");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1.000000000000") != std::string::npos);
  CHECK(r.output.find("0.707106781187") != std::string::npos);
  CHECK(r.output.find("Choi distance") != std::string::npos);
}

TEST_CASE("the COHERENCE_LAB_SEED env var sets the default seed") {
  const std::string cmd = "COHERENCE_LAB_SEED=9 " + kCli + " verify --dim 2 --trials 3";
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer{};
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) {
    output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 0);
  const RunResult explicit_seed = run("verify --dim 2 --trials 3 --seed 9");
  CHECK(output == explicit_seed.output);
}

TEST_SUITE_END();
