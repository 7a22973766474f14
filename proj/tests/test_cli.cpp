// Copyright 2026 The Charshift Authors
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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CHARSHIFT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("help and version") {
  CHECK(run_cli("--help").exit_code == 0);
  const auto v = run_cli("--version");
  CHECK(v.exit_code == 0);
  CHECK(contains(v.out, "0.1.0"));
}

TEST_CASE("solve-ff exact report") {
  const auto r = run_cli(
      "solve-ff --p 7 --r 1 --char-index 3 --shift 4 --mode exact");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "solution=[4]"));
  CHECK(contains(r.out, "prep_probability=6/7"));
  CHECK(contains(r.out, "success_probability=0.73469387755102"));
  CHECK(contains(r.out, "oracle_verified=true"));

  const auto zero = run_cli(
      "solve-ff --p 7 --r 1 --char-index 3 --shift 0 --mode exact");
  CHECK(contains(zero.out, "solution=[0]"));
}

TEST_CASE("byte-identical reruns") {
  const std::string cmd =
      "solve-ring --n 15 --char jacobi --shift 7 --mode sampled --trials 25 "
      "--seed 9 --json";
  const auto a = run_cli(cmd);
  const auto b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"command\":\"solve-ring\""));
  CHECK(contains(a.out, "\"theoretical_success\":"));
  CHECK(a.out.front() == '{');
}

TEST_CASE("sampled mode reports theory next to the empirical rate") {
  const auto r = run_cli(
      "solve-ff --p 7 --r 1 --char-index 3 --shift 4 --mode sampled "
      "--trials 2000 --seed 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "theoretical_success=0.73469387755102"));
  const auto pos = r.out.find("empirical_success=");
  REQUIRE(pos != std::string::npos);
  const double phat = std::strtod(
      r.out.c_str() + pos + std::string("empirical_success=").size(), nullptr);
  // Binomial three-sigma band around 36/49 at 2000 trials.
  CHECK(std::abs(phat - 36.0 / 49.0) < 3.0 * 0.0099);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("solve-ff --p 8 --char-index 1 --shift 1").exit_code == 2);
  CHECK(run_cli("solve-ff --p 7 --char-index 99 --shift 1").exit_code == 2);
  CHECK(run_cli("solve-ring --n 1000001 --char jacobi --shift 1").exit_code ==
        4);
  CHECK(run_cli("nonsense-subcommand").exit_code == 2);
  // Zero sampled trials cannot verify anything: verification failure.
  CHECK(run_cli("solve-ff --p 7 --char-index 3 --shift 4 --mode sampled "
                "--trials 0")
            .exit_code == 3);
}

TEST_CASE("seed resolution from the environment") {
  auto run_shell = [](const std::string& cmd) {
    CmdResult r;
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  };

  const auto from_env = run_shell(
      std::string("CHARSHIFT_SEED=5 ") + CHARSHIFT_CLI_PATH +
      " solve-ff --p 7 --char-index 3 --shift 4 --mode exact");
  CHECK(from_env.exit_code == 0);
  CHECK(contains(from_env.out, "seed=5"));

  const auto flag_wins = run_shell(
      std::string("CHARSHIFT_SEED=5 ") + CHARSHIFT_CLI_PATH +
      " solve-ff --p 7 --char-index 3 --shift 4 --mode exact --seed 11");
  CHECK(flag_wins.exit_code == 0);
  CHECK(contains(flag_wins.out, "seed=11"));
}

TEST_CASE("gauss-table residual is tiny") {
  const auto field = run_cli("gauss-table --p 7 --k 3");
  CHECK(field.exit_code == 0);
  CHECK(contains(field.out, "identity_residual_max="));
  // Residual printed in scientific notation well under 1e-9.
  const auto pos = field.out.find("identity_residual_max=");
  const double residual = std::strtod(
      field.out.c_str() + pos + std::string("identity_residual_max=").size(),
      nullptr);
  CHECK(residual < 1e-9);

  const auto ring = run_cli("gauss-table --n 15 --char jacobi");
  CHECK(ring.exit_code == 0);
}

TEST_CASE("break-homo and solve-hcp reports") {
  const auto homo = run_cli("break-homo --p 31 --seed 7 --random-secret");
  CHECK(homo.exit_code == 0);
  CHECK(contains(homo.out, "match=true"));
  CHECK(contains(homo.out, "logical_queries="));

  const auto hcp = run_cli("solve-hcp --instance z8-flat --shift 5");
  CHECK(hcp.exit_code == 0);
  CHECK(contains(hcp.out, "alpha=3/4"));
  CHECK(contains(hcp.out, "beta=1/2"));
  CHECK(contains(hcp.out, "success_probability=0.375"));
}

TEST_CASE("verify subcommand") {
  const auto r = run_cli("verify");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "check=dft_fast_vs_reference"));
  CHECK(contains(r.out, "all_pass=true"));
}
