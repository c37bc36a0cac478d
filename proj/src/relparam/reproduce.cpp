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

#include "relparam/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace relparam {

namespace {

ComparisonRow row(std::string name, std::optional<double> published, double reference, double computed,
                  double standard_error, double tolerance, std::string note = {})
{
  ComparisonRow r;
  r.name           = std::move(name);
  r.published          = published;
  r.reference      = reference;
  r.computed       = computed;
  r.standard_error = standard_error;
  r.tolerance      = tolerance;
  r.pass           = std::isfinite(computed) && std::abs(computed - reference) <= tolerance;
  r.note           = std::move(note);
  return r;
}

// Monte Carlo rows pass within k standard errors, with a floor so a
// degenerate zero-variance estimate does not demand exact equality.
double sigma_tolerance(double k, double standard_error)
{
  return std::max(k * standard_error, 1e-12);
}

std::string jlabel(HalfInteger j)
{
  return "j=" + j.to_string();
}

}  // namespace

std::array<double, 4> spinj_marginals(HalfInteger j) noexcept
{
  double const v = j.value();
  return {0.25, (2.0 * v - 1.0) / (8.0 * v + 4.0), 0.25, (2.0 * v + 3.0) / (8.0 * v + 4.0)};
}

double singlet_gain_closed_form() noexcept
{
  return 1.0 - 1.0 / (2.0 * std::numbers::ln2);
}

double qubit_pair_gain_closed_form() noexcept
{
  return 2.0 - 0.75 * std::log2(3.0) - 1.0 / (2.0 * std::numbers::ln2);
}

std::vector<ComparisonRow> reproduce(ReproduceConfig const &config)
{
  std::vector<ComparisonRow> rows;
  auto const mc   = EstimatorConfig::monte_carlo(config.samples, config.seed, config.workers);
  auto const q1   = EstimatorConfig::quadrature_1d(config.nodes_1d);
  auto const q3   = EstimatorConfig::quadrature_3d(config.nodes_3d);
  auto const qref = EstimatorConfig::quadrature_3d(config.reference_nodes);

  // Three qubits, one system.
  Scenario const       aq     = Scenario::a_qubits();
  InfoGainReport const aq_q   = info_gain(aq, q3);
  InfoGainReport const aq_ref = info_gain(aq, qref);
  InfoGainReport const aq_mc  = info_gain(aq, mc);
  double const         exact_p[] = {0.25, 0.5, 0.25};
  for (std::size_t k = 0; k < 3; ++k)
  {
    std::string const p = "P(" + aq.labels()[k] + ") A_QUBITS";
    rows.push_back(row(p + " quad", exact_p[k], exact_p[k], aq_q.probabilities[k],
                       aq_q.probability_errors[k], 1e-6));
    rows.push_back(row(p + " mc", exact_p[k], exact_p[k], aq_mc.probabilities[k],
                       aq_mc.probability_errors[k], sigma_tolerance(4.0, aq_mc.probability_errors[k])));
  }

  LinearChannelGain const singlet = linear_outcome_gain(0.25, config.nodes_1d);
  rows.push_back(row("I(1/2') A_QUBITS quad1d", 0.27, singlet_gain_closed_form(), singlet.gain,
                     singlet.error, 1e-8, "published value rounded down"));
  rows.push_back(row("I(1/2') A_QUBITS mc", 0.27, singlet_gain_closed_form(), aq_mc.gains[0],
                     aq_mc.gain_errors[0], sigma_tolerance(3.0, aq_mc.gain_errors[0])));
  double const published_gain[] = {0.27, 0.07, 0.24};
  for (std::size_t k = 1; k < 3; ++k)
  {
    rows.push_back(row("I(" + aq.labels()[k] + ") A_QUBITS mc", published_gain[k], aq_ref.gains[k],
                       aq_mc.gains[k], aq_mc.gain_errors[k], sigma_tolerance(3.0, aq_mc.gain_errors[k]),
                       "reference: quad3d " + std::to_string(config.reference_nodes) + " nodes"));
  }
  rows.push_back(row("I_avg A_QUBITS mc", 0.17, aq_ref.average_gain, aq_mc.average_gain,
                     aq_mc.average_gain_error, sigma_tolerance(3.0, aq_mc.average_gain_error)));
  rows.push_back(row("i A_QUBITS mc", 0.056, aq_ref.per_spin, aq_mc.per_spin, aq_mc.per_spin_error,
                     sigma_tolerance(3.0, aq_mc.per_spin_error)));

  // Three qubit pairs.
  double const   pair_exact = qubit_pair_gain_closed_form();
  PairGain const pair       = pair_info_gain(HalfInteger::from_twice(1), config.nodes_1d);
  rows.push_back(row("I_pair B_QUBITS quad1d", 0.08, pair_exact, pair.average_gain, pair.error, 1e-8,
                     "published 0.08 differs from the closed form"));
  Scenario const       bq    = Scenario::b_qubits();
  InfoGainReport const bq_q  = info_gain(bq, q1);
  InfoGainReport const bq_mc = info_gain(bq, mc);
  rows.push_back(row("I_avg B_QUBITS quad1d", 0.24, 3.0 * pair_exact, bq_q.average_gain,
                     bq_q.average_gain_error, 1e-6, "published 0.24 follows from the pair value 0.08"));
  rows.push_back(row("I_avg B_QUBITS mc", 0.24, 3.0 * pair_exact, bq_mc.average_gain,
                     bq_mc.average_gain_error, sigma_tolerance(3.0, bq_mc.average_gain_error)));
  rows.push_back(row("i B_QUBITS quad1d", 0.04, pair_exact / 2.0, bq_q.per_spin, bq_q.per_spin_error, 1e-6));

  // Spin-j marginals and the j = 1/2 reduction.
  for (auto j : config.spin_sample)
  {
    InfoGainReport const r     = info_gain(Scenario::a_spinj(j, config.coupling), q3);
    auto const           exact = spinj_marginals(j);
    for (std::size_t k = 0; k < 4; ++k)
    {
      if (exact[k] == 0.0 && r.labels[k] == "j-1")
      {
        continue;  // no J = j-1 subspace at j = 1/2
      }
      rows.push_back(row("P(" + r.labels[k] + ") A_SPINJ " + jlabel(j), exact[k], exact[k],
                         r.probabilities[k], r.probability_errors[k], 1e-6));
    }
    if (j.twice() == 1)
    {
      rows.push_back(row("i A_SPINJ j=1/2 quad3d", 0.056, aq_ref.per_spin, r.per_spin, r.per_spin_error,
                         1e-6, "equals the three-qubit value"));
      InfoGainReport const b = info_gain(Scenario::b_spinj(j), q1);
      rows.push_back(row("i B_SPINJ j=1/2 quad1d", 0.04, pair_exact / 2.0, b.per_spin, b.per_spin_error,
                         1e-6));
    }
  }

  // Per-spin values approaching their large-j limits.
  double const         gain_limit = 2.0 * singlet_gain_closed_form();
  InfoGainReport const a_inf = info_gain(Scenario::a_spinj(config.asymptotic_j, config.coupling), q3);
  InfoGainReport const b_inf = info_gain(Scenario::b_spinj(config.asymptotic_j), q1);
  rows.push_back(row("i A_SPINJ " + jlabel(config.asymptotic_j), 0.18, gain_limit / 3.0, a_inf.per_spin,
                     a_inf.per_spin_error, 0.01, "reference: large-j limit 0.557/3"));
  double const b_limit = (pair_exact + 2.0 * singlet_gain_closed_form()) / 6.0;
  rows.push_back(row("i B_SPINJ " + jlabel(config.asymptotic_j), 0.10, b_limit, b_inf.per_spin,
                     b_inf.per_spin_error, 0.005, "reference: qubit pair plus two large-j pairs"));

  InfoGainReport const a_large = info_gain(Scenario::a_spinj(config.large_j, config.coupling), q3);
  for (std::size_t k = 0; k < a_large.labels.size(); ++k)
  {
    rows.push_back(row("I(" + a_large.labels[k] + ") A_SPINJ " + jlabel(config.large_j), 0.55, gain_limit,
                       a_large.gains[k], a_large.gain_errors[k], 0.015,
                       "reference: 2(1 - 1/(2 ln 2)); published value two digits"));
  }
  PairGain const pair_large = pair_info_gain(config.large_j, config.nodes_1d);
  rows.push_back(row("I_pair B_SPINJ " + jlabel(config.large_j), std::nullopt, singlet_gain_closed_form(),
                     pair_large.average_gain, pair_large.error, 0.015,
                     "reference: limiting likelihoods (1 +- c)/2"));
  return rows;
}

bool all_pass(std::vector<ComparisonRow> const &rows) noexcept
{
  return std::all_of(rows.begin(), rows.end(), [](ComparisonRow const &r) { return r.pass; });
}

}  // namespace relparam
