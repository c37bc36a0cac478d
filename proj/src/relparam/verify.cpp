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

#include "relparam/verify.hpp"

#include "relparam/inference.hpp"
#include "relparam/povm.hpp"
#include "relparam/protocols.hpp"
#include "relparam/spin_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace relparam {

namespace {

std::string fmt(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

class Suite
{
public:
  explicit Suite(std::string name) { r_.name = std::move(name); }

  void check(double residual, double tol, std::string const &what)
  {
    ++r_.total;
    r_.worst = std::max(r_.worst, residual);
    if (std::isfinite(residual) && residual <= tol)
    {
      ++r_.passed;
    }
    else
    {
      r_.failures.push_back(what + ": residual " + fmt(residual) + " > " + fmt(tol));
    }
  }

  SuiteResult done() { return std::move(r_); }

private:
  SuiteResult r_;
};

std::vector<Direction> random_directions(Rng &rng, std::size_t n)
{
  std::vector<Direction> out;
  for (std::size_t i = 0; i < n; ++i)
  {
    out.push_back(HaarProductPrior::sample_direction(rng));
  }
  return out;
}

double max_difference(std::vector<double> const &a, std::vector<double> const &b)
{
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

SuiteResult projector_algebra(VerifyConfig const &cfg)
{
  Suite s("projector-algebra");
  s.check(projector_residuals(three_qubit_projectors()).worst(), cfg.tolerance, "three qubits");
  for (auto j : cfg.spins)
  {
    for (auto c : {Coupling::QubitSpin, Coupling::QubitPair})
    {
      s.check(projector_residuals(coupled_projectors(j, c)).worst(), cfg.tolerance,
              "coupled j=" + j.to_string() + " " + std::string(to_string(c)));
    }
    s.check(projector_residuals(pair_projectors(j)).worst(), cfg.tolerance, "pair j=" + j.to_string());
  }
  return s.done();
}

SuiteResult spectral_equivalence(VerifyConfig const &cfg)
{
  Suite s("spectral-equivalence");
  for (auto j : cfg.spins)
  {
    for (auto c : {Coupling::QubitSpin, Coupling::QubitPair})
    {
      s.check(max_projector_deviation(coupled_projectors(j, c), spectral_coupled_projectors(j, c)),
              cfg.tolerance, "coupled j=" + j.to_string() + " " + std::string(to_string(c)));
    }
    s.check(max_projector_deviation(pair_projectors(j), spectral_pair_projectors(j)), cfg.tolerance,
            "pair j=" + j.to_string());
  }
  return s.done();
}

SuiteResult linear_system(VerifyConfig const &cfg)
{
  Suite                s("linear-system");
  LinearSystemSolution const sol = solve_projector_system();
  // Rows 1/2', 1/2, 3/2 in the basis (I, s1.s2, s2.s3, s1.s3).
  std::array<std::array<double, 4>, 3> const expected{{{0.25, -0.25, 0.0, 0.0},
                                                       {0.25, 1.0 / 12.0, -1.0 / 6.0, -1.0 / 6.0},
                                                       {0.5, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0}}};
  for (std::size_t p = 0; p < 3; ++p)
  {
    double worst = 0.0;
    for (std::size_t k = 0; k < 4; ++k)
    {
      worst = std::max(worst, std::abs(sol.coefficients[p][k] - expected[p][k]));
    }
    s.check(worst, cfg.system_tolerance, "coefficients of " + sol.projectors.labels[p]);
  }
  s.check(sol.expansion_residual, cfg.system_tolerance, "expansion residual");
  s.check(max_projector_deviation(sol.projectors, three_qubit_projectors()), cfg.tolerance,
          "solved vs closed-form projectors");
  return s.done();
}

// Both orthogonality relations of the coupling matrix for j1 x j2.
SuiteResult cg_unitarity(VerifyConfig const &cfg)
{
  Suite s("cg-unitarity");
  auto  h = [](int t) { return HalfInteger::from_twice(t); };
  std::vector<std::pair<int, int>> couples{{1, 1}, {2, 1}, {3, 4}, {4, 4}, {5, 3}};
  for (auto j : cfg.spins)
  {
    if (j.twice() <= 20)
    {
      couples.emplace_back(j.twice(), 1);
    }
  }
  couples.emplace_back(100, 1);
  for (auto [t1, t2] : couples)
  {
    int const n1 = t1 + 1;
    int const n2 = t2 + 1;
    // rows: (J, M); columns: (m1, m2)
    std::vector<std::pair<int, int>> jm;
    for (int tJ = std::abs(t1 - t2); tJ <= t1 + t2; tJ += 2)
    {
      for (int tM = -tJ; tM <= tJ; tM += 2)
      {
        jm.emplace_back(tJ, tM);
      }
    }
    Eigen::MatrixXd u(static_cast<Eigen::Index>(jm.size()), n1 * n2);
    for (std::size_t r = 0; r < jm.size(); ++r)
    {
      for (int a = 0; a < n1; ++a)
      {
        for (int b = 0; b < n2; ++b)
        {
          int const tm1 = t1 - 2 * a;
          int const tm2 = t2 - 2 * b;
          u(static_cast<Eigen::Index>(r), a * n2 + b) =
              tm1 + tm2 == jm[r].second
                  ? clebsch_gordan(h(t1), tm1, h(t2), tm2, h(jm[r].first), jm[r].second)
                  : 0.0;
        }
      }
    }
    auto const n = u.rows();
    std::string const tag = h(t1).to_string() + " x " + h(t2).to_string();
    s.check((u * u.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), cfg.cg_tolerance,
            tag + " rows");
    s.check((u.transpose() * u - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff(), cfg.cg_tolerance,
            tag + " columns");
  }
  return s.done();
}

SuiteResult rotation_invariance(VerifyConfig const &cfg)
{
  Suite                 s("rotation-invariance");
  Rng                   rng(cfg.seed, 0x526f74ull);
  std::vector<Scenario> scenarios{Scenario::a_qubits(), Scenario::b_qubits()};
  for (auto j : cfg.spins)
  {
    if (j.twice() <= 10)
    {
      scenarios.push_back(Scenario::a_spinj(j));
      scenarios.push_back(Scenario::b_spinj(j));
    }
  }
  for (auto const &sc : scenarios)
  {
    StateRoute const route(sc);
    double           worst = 0.0;
    for (int i = 0; i < cfg.rotations; ++i)
    {
      auto const   dirs  = random_directions(rng, sc.direction_count());
      Direction const axis = HaarProductPrior::sample_direction(rng);
      double const angle = 2.0 * std::numbers::pi * rng.uniform();
      worst              = std::max(worst, rotation_invariance_check(route, dirs, axis, angle));
    }
    s.check(worst, cfg.tolerance, sc.name() + " j=" + sc.j().to_string());
  }
  return s.done();
}

SuiteResult oracle_equivalence(VerifyConfig const &cfg)
{
  Suite  s("oracle-equivalence");
  Rng    rng(cfg.seed, 0x4f7263ull);
  int const trials = 20;

  for (auto j : cfg.spins)
  {
    if (j.twice() > 10)
    {
      continue;
    }
    for (auto c : {Coupling::QubitSpin, Coupling::QubitPair})
    {
      Scenario const   sc = Scenario::a_spinj(j, c);
      StateRoute const route(sc);
      double           worst = 0.0;
      for (int t = 0; t < trials; ++t)
      {
        auto const dirs = random_directions(rng, 3);
        worst = std::max(worst, max_difference(route.evaluate(dirs).probabilities,
                                               likelihood(sc, cosines_of(sc, dirs)).probabilities));
      }
      s.check(worst, cfg.tolerance, "fast path vs dense state, j=" + j.to_string() + " " +
                                        std::string(to_string(c)));
    }
  }

  // j = 1/2: the qubit-pair coupling reproduces the three-qubit POVM outcome
  // for outcome; the qubit-spin coupling does so with alpha and beta swapped.
  Scenario const aq = Scenario::a_qubits();
  double         worst_pair = 0.0, worst_spin = 0.0;
  for (int t = 0; t < trials; ++t)
  {
    auto const   dirs = random_directions(rng, 3);
    CosineTriple const c = cosines_of(aq, dirs);
    auto const   q    = likelihood_a_qubits(c).probabilities;
    auto const   qs   = likelihood_a_qubits({c.y, c.x, c.z}).probabilities;
    auto const   pair = likelihood_a_spinj(HalfInteger::from_twice(1), c, Coupling::QubitPair);
    auto const   spin = likelihood_a_spinj(HalfInteger::from_twice(1), c, Coupling::QubitSpin);
    // spin-j labels j', j-1, j, j+1 map to 1/2', -, 1/2, 3/2
    std::vector<double> const from_pair{pair.probabilities[0], pair.probabilities[3], pair.probabilities[2]};
    std::vector<double> const from_spin{spin.probabilities[0], spin.probabilities[3], spin.probabilities[2]};
    worst_pair = std::max(worst_pair, max_difference(q, from_pair));
    worst_spin = std::max(worst_spin, max_difference(qs, from_spin));
  }
  s.check(worst_pair, cfg.tolerance, "j=1/2 qubit-pair vs three qubits");
  s.check(worst_spin, cfg.tolerance, "j=1/2 qubit-spin vs three qubits (alpha <-> beta)");

  Scenario const bq    = Scenario::b_qubits();
  StateRoute const broute(bq);
  double           worst_b = 0.0;
  for (int t = 0; t < trials; ++t)
  {
    auto const dirs = random_directions(rng, 6);
    worst_b = std::max(worst_b, max_difference(broute.evaluate(dirs).probabilities,
                                               likelihood(bq, cosines_of(bq, dirs)).probabilities));
  }
  s.check(worst_b, cfg.tolerance, "method B product vs dense pairs");
  return s.done();
}

SuiteResult coherent_states(VerifyConfig const &cfg)
{
  Suite s("coherent-states");
  Rng   rng(cfg.seed, 0x436f68ull);
  for (int tj = 1; tj <= 6; ++tj)
  {
    HalfInteger const j     = HalfInteger::from_twice(tj);
    double            worst = 0.0;
    for (int t = 0; t < 20; ++t)
    {
      Direction const a = HaarProductPrior::sample_direction(rng);
      Direction const b = HaarProductPrior::sample_direction(rng);
      double const    overlap = std::norm(coherent_state(j, a).dot(coherent_state(j, b)));
      worst = std::max(worst, std::abs(overlap - std::pow((1.0 + a.dot(b)) / 2.0, tj)));
    }
    s.check(worst, cfg.tolerance, "overlap law j=" + j.to_string());
  }
  return s.done();
}

}  // namespace

bool VerifySummary::all_pass() const noexcept
{
  return std::all_of(suites.begin(), suites.end(), [](SuiteResult const &s) { return s.ok(); });
}

int VerifySummary::passed() const noexcept
{
  int n = 0;
  for (auto const &s : suites)
  {
    n += s.passed;
  }
  return n;
}

int VerifySummary::total() const noexcept
{
  int n = 0;
  for (auto const &s : suites)
  {
    n += s.total;
  }
  return n;
}

VerifySummary run_verification(VerifyConfig const &config)
{
  VerifySummary out;
  out.suites.push_back(projector_algebra(config));
  out.suites.push_back(spectral_equivalence(config));
  out.suites.push_back(linear_system(config));
  out.suites.push_back(cg_unitarity(config));
  out.suites.push_back(rotation_invariance(config));
  out.suites.push_back(oracle_equivalence(config));
  out.suites.push_back(coherent_states(config));
  return out;
}

}  // namespace relparam
