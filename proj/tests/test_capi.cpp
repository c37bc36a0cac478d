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

#include "relparam/relparam.h"

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

TEST_CASE("spin parsing and formatting")
{
  int t = 0;
  CHECK(rp_parse_spin("3/2", &t) == RP_OK);
  CHECK(t == 3);
  CHECK(rp_parse_spin("2.5", &t) == RP_OK);
  CHECK(t == 5);
  CHECK(rp_parse_spin("0.3", &t) == RP_INVALID_ARGUMENT);
  CHECK(std::strlen(rp_last_error()) > 0);
  CHECK(rp_parse_spin("0", &t) == RP_INVALID_ARGUMENT);
  CHECK(rp_parse_spin(nullptr, &t) == RP_INVALID_ARGUMENT);
  char buf[8];
  CHECK(rp_format_spin(7, buf, sizeof buf) == RP_OK);
  CHECK(std::string(buf) == "7/2");
  CHECK(rp_format_spin(7, buf, 2) == RP_INVALID_ARGUMENT);
}

TEST_CASE("scenario handles and likelihoods")
{
  rp_scenario *s = nullptr;
  REQUIRE(rp_scenario_create("a-qubits", 0, RP_COUPLING_QUBIT_SPIN, &s) == RP_OK);
  CHECK(std::string(rp_scenario_name(s)) == "a-qubits");
  CHECK(rp_scenario_outcome_count(s) == 3);
  CHECK(rp_scenario_spin_count(s) == 3);
  CHECK(rp_scenario_is_method_a(s) == 1);
  CHECK(std::string(rp_scenario_label(s, 0)) == "1/2'");
  CHECK(rp_scenario_label(s, 3) == nullptr);

  double p[3];
  CHECK(rp_likelihood(s, 0.2, 0.1, -0.3, p, 3) == RP_OK);
  CHECK(p[0] == doctest::Approx((1 - 0.2) / 4));
  CHECK(p[0] + p[1] + p[2] == doctest::Approx(1.0));
  CHECK(rp_likelihood(s, 1, 1, -1, p, 3) == RP_PRECONDITION_FAILED);
  CHECK(std::string(rp_last_error()).find("det G") != std::string::npos);
  CHECK(rp_likelihood(s, 0, 0, 0, p, 2) == RP_INVALID_ARGUMENT);
  rp_scenario_destroy(s);

  CHECK(rp_scenario_create("z-spinj", 3, RP_COUPLING_QUBIT_SPIN, &s) == RP_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(rp_scenario_create("a-spinj", 0, RP_COUPLING_QUBIT_SPIN, &s) == RP_INVALID_ARGUMENT);
  rp_scenario_destroy(nullptr);
}

TEST_CASE("info gain report")
{
  rp_scenario *s = nullptr;
  REQUIRE(rp_scenario_create("b-spinj", 4, RP_COUPLING_QUBIT_SPIN, &s) == RP_OK);
  rp_estimator e;
  rp_estimator_defaults(RP_ESTIMATOR_QUAD1D, &e);
  rp_report *r = nullptr;
  REQUIRE(rp_info_gain(s, &e, &r) == RP_OK);
  rp_report_summary sum{};
  REQUIRE(rp_report_get_summary(r, &sum) == RP_OK);
  CHECK(sum.outcome_count == 8);
  CHECK(sum.pair_count == 3);
  CHECK(sum.converged == 1);
  double pairs = 0.0;
  for (size_t i = 0; i < 3; ++i)
  {
    rp_pair_gain pg{};
    REQUIRE(rp_report_get_pair(r, i, &pg) == RP_OK);
    pairs += pg.average_gain;
  }
  CHECK(pairs == doctest::Approx(sum.average_gain).epsilon(1e-12));
  CHECK(sum.per_spin == doctest::Approx(sum.average_gain / 6));
  rp_outcome o{};
  CHECK(rp_report_get_outcome(r, 0, &o) == RP_OK);
  CHECK(std::string(o.label) == "000");
  CHECK(rp_report_get_outcome(r, 8, &o) == RP_INVALID_ARGUMENT);
  rp_report_destroy(r);

  rp_scenario *a = nullptr;
  REQUIRE(rp_scenario_create("a-qubits", 0, RP_COUPLING_QUBIT_SPIN, &a) == RP_OK);
  CHECK(rp_info_gain(a, &e, &r) == RP_INVALID_ARGUMENT);  // quad1d on method A
  rp_estimator_defaults(RP_ESTIMATOR_MC, &e);
  e.samples = 50'000;
  e.seed    = 3;
  REQUIRE(rp_info_gain(a, &e, &r) == RP_OK);
  REQUIRE(rp_report_get_summary(r, &sum) == RP_OK);
  CHECK(sum.evaluations == 50'000);
  CHECK(sum.average_gain == doctest::Approx(0.1708).epsilon(0.05));
  rp_report_destroy(r);
  rp_scenario_destroy(a);
  rp_scenario_destroy(s);
}

TEST_CASE("closed-form helpers")
{
  rp_pair_gain pg{};
  REQUIRE(rp_pair_info_gain(1, 256, &pg) == RP_OK);
  CHECK(pg.average_gain == doctest::Approx(2 - 0.75 * std::log2(3.0) - 1 / (2 * std::log(2.0))).epsilon(1e-10));
  CHECK(rp_pair_info_gain(1, 4, &pg) == RP_INVALID_ARGUMENT);
  double g = 0, err = 0;
  REQUIRE(rp_singlet_gain(256, &g, &err) == RP_OK);
  CHECK(g == doctest::Approx(1 - 1 / (2 * std::log(2.0))).epsilon(1e-10));

  double c[12];
  REQUIRE(rp_pauli_coefficients(c) == RP_OK);
  CHECK(c[0] == doctest::Approx(0.25));
  CHECK(c[1] == doctest::Approx(-0.25));
  CHECK(c[8] == doctest::Approx(0.5));
  CHECK(c[11] == doctest::Approx(1.0 / 6));

  size_t           n = 0;
  std::vector<int> grid(12);
  REQUIRE(rp_j_grid(1, 50, 12, RP_SPACING_GEOMETRIC, grid.data(), grid.size(), &n) == RP_OK);
  CHECK(n == 12);
  CHECK(grid.front() == 1);
  CHECK(grid.back() == 50);
  CHECK(rp_j_grid(1, 2, 5, RP_SPACING_LINEAR, nullptr, 0, &n) == RP_INVALID_ARGUMENT);
}

TEST_CASE("name lookups")
{
  rp_estimator_method m{};
  CHECK(rp_parse_estimator("quad3d", &m) == RP_OK);
  CHECK(m == RP_ESTIMATOR_QUAD3D);
  CHECK(std::string(rp_estimator_name(m)) == "quad3d");
  CHECK(rp_parse_estimator("nope", &m) == RP_INVALID_ARGUMENT);
  rp_coupling c{};
  CHECK(rp_parse_coupling("qubit-pair", &c) == RP_OK);
  CHECK(c == RP_COUPLING_QUBIT_PAIR);
  CHECK(std::string(rp_status_string(RP_NUMERICAL_ERROR)) == "numerical error");
  CHECK(std::strlen(rp_version()) > 0);
}

TEST_CASE("verification summary")
{
  rp_verify_summary *v = nullptr;
  REQUIRE(rp_verify(0, &v) == RP_OK);
  CHECK(rp_verify_suite_count(v) == 7);
  CHECK(rp_verify_all_pass(v) == 1);
  rp_verify_suite s{};
  REQUIRE(rp_verify_get_suite(v, 0, &s) == RP_OK);
  CHECK(s.passed == s.total);
  CHECK(rp_verify_failure(v, 0, 0) == nullptr);
  rp_verify_summary_destroy(v);
}
