//------------------------------------------------------------------------------
//
//   Copyright 2026 The relparam Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#ifndef RELPARAM_CLI_PATH
#error "RELPARAM_CLI_PATH must name the CLI binary"
#endif

namespace {

struct Run
{
  int         code;
  std::string out;
};

Run run(std::string const &args)
{
  std::string const cmd  = std::string(RELPARAM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE             *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string             out;
  std::array<char, 4096> buf{};
  std::size_t             n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
  {
    out.append(buf.data(), n);
  }
  int const status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(std::string const &s)
{
  std::vector<std::string> out;
  std::istringstream       in(s);
  for (std::string line; std::getline(in, line);)
  {
    out.push_back(line);
  }
  return out;
}

char const *const kHeader = "scenario,j,label,P_lambda,I_lambda,I_avg,i,stderr,estimator,samples_or_nodes,seed";

}  // namespace

TEST_CASE("usage errors exit with 2")
{
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("compute --scenario a-spinj --j 0.3").code == 2);
  CHECK(run("compute --scenario c-spinj --j 1").code == 2);
  CHECK(run("compute --scenario a-qubits --estimator quad1d").code == 2);
  CHECK(run("compute --scenario a-qubits --estimator bogus").code == 2);
  CHECK(run("compute --scenario a-qubits --samples 0").code == 2);
  CHECK(run("sweep-j --spacing cubic").code == 2);
  CHECK(run("sweep-j --j-min 1 --j-max 2 --j-points 9").code == 2);
  CHECK(run("compute --format xml").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("compute emits a deterministic JSON report")
{
  std::string const args = "compute --scenario a-qubits --estimator mc --samples 100000 --seed 7";
  Run const         a    = run(args + " --workers 1");
  Run const         b    = run(args + " --workers 3");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"scenario\": \"a-qubits\"") != std::string::npos);
  CHECK(a.out.find("\"per_spin\"") != std::string::npos);
}

TEST_CASE("compute on method B shows the pair decomposition")
{
  Run const r = run("compute --scenario b-spinj --j 2 --estimator quad1d");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"additivity\"") != std::string::npos);
  CHECK(r.out.find("\"pair_sum\"") != std::string::npos);
}

TEST_CASE("compute CSV has one row per outcome")
{
  Run const r = run("compute --scenario a-spinj --j 3/2 --estimator quad3d --nodes 16 --format csv");
  CHECK(r.code == 0);
  auto const l = lines(r.out);
  REQUIRE(l.size() == 5);
  CHECK(l[0] == kHeader);
  CHECK(l[1].rfind("a-spinj,1.5,j',", 0) == 0);
}

TEST_CASE("default sweep has 24 rows")
{
  Run const r = run("sweep-j --nodes 16");
  CHECK(r.code == 0);
  auto const l = lines(r.out);
  REQUIRE(l.size() == 25);
  CHECK(l[0] == kHeader);
  CHECK(l[1].rfind("a-spinj,0.5,all,", 0) == 0);
  CHECK(l[2].rfind("b-spinj,0.5,all,", 0) == 0);
  CHECK(l[24].rfind("b-spinj,25,all,", 0) == 0);
}

TEST_CASE("sweep writes data and a gnuplot script")
{
  std::string const data   = "cli_test_sweep.csv";
  std::string const script = "cli_test_sweep.gp";
  Run const         r      = run("sweep-j --j-max 3 --j-points 3 --nodes 16 --per-label --out " + data +
                                 " --gnuplot " + script);
  CHECK(r.code == 0);
  std::ifstream d(data), g(script);
  std::stringstream ds, gs;
  ds << d.rdbuf();
  gs << g.rdbuf();
  CHECK(lines(ds.str()).size() == 1 + 3 * (4 + 1) + 3 * (8 + 1));
  CHECK(gs.str().find("plot '" + data + "'") != std::string::npos);
  std::remove(data.c_str());
  std::remove(script.c_str());
}

TEST_CASE("verify passes")
{
  Run const r = run("verify");
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 8);
}
