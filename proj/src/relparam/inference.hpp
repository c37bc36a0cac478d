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

#pragma once

#include "relparam/half_integer.hpp"
#include "relparam/linalg.hpp"
#include "relparam/protocols.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace relparam {

// Information gain of a measurement on encoded relative angles.
//
// For a prior p(theta) and likelihoods L_k(theta) = P(k | theta), Bob's gain on
// outcome k is the relative entropy of the posterior from the prior,
//
//   I_k = \int p(theta | k) log2[p(theta | k) / p(theta)]
//       = E_prior[L_k log2 L_k] / P(k) - log2 P(k),     P(k) = E_prior[L_k],
//
// and the average gain is the mutual information between outcome and angles,
//
//   I_avg = sum_k P(k) I_k = E_prior[ sum_k L_k log2(L_k / P(k)) ].
//
// The second form needs only prior expectations of L_k and L_k log2 L_k, so
// both the Monte Carlo and quadrature estimators accumulate exactly those two
// moments per outcome. Logarithms are base 2 and 0 log 0 = 0.

/// Counter-derived 64-bit stream: stream `index` of a seed is independent of
/// how many streams are consumed and by which thread.
class Rng
{
public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;

private:
  std::mt19937_64 engine_;
};

/// Haar-product prior: every transmitted spin points along an independent
/// uniformly random direction. For three directions the cosine triple has
/// density 1 / (4 pi sqrt(det G)) on det G > 0 and each cosine is uniform on
/// [-1, 1]; for method B the three pair cosines are independent and uniform.
struct HaarProductPrior
{
  static double triple_density(CosineTriple const &c) noexcept;
  static Direction sample_direction(Rng &rng) noexcept;
};

struct PriorSample
{
  std::vector<Direction> directions;
  CosineTriple           cosines;
};

/// Draws scenario.direction_count() directions and their cosine triple.
PriorSample sample_prior(Scenario const &scenario, Rng &rng);

enum class EstimatorMethod
{
  MonteCarlo,
  Quadrature1D,
  Quadrature3D,
};

std::string_view to_string(EstimatorMethod m) noexcept;
/// "mc", "quad1d", "quad3d".
EstimatorMethod parse_estimator(std::string_view text);

struct EstimatorConfig
{
  EstimatorMethod method{EstimatorMethod::MonteCarlo};
  std::uint64_t   samples{2'000'000};
  /// Nodes per axis; 0 picks 256 for 1-D and 64 for 3-D rules.
  int           nodes{0};
  std::uint64_t seed{0};
  unsigned      workers{1};

  static EstimatorConfig monte_carlo(std::uint64_t samples, std::uint64_t seed, unsigned workers = 1);
  static EstimatorConfig quadrature_1d(int nodes = 256);
  static EstimatorConfig quadrature_3d(int nodes = 64);

  int effective_nodes() const noexcept;
  /// samples or nodes, whichever the method uses.
  std::uint64_t budget() const noexcept;
  /// Throws InvalidArgument for a zero budget or fewer than 8 nodes.
  void validate() const;
};

/// Per-pair decomposition of a method-B gain.
struct PairGain
{
  HalfInteger           j;
  double                average_gain{0.0};
  double                error{0.0};
  std::array<double, 2> probabilities{};
  std::array<double, 2> gains{};
  int                   nodes{0};
  bool                  converged{true};
};

struct InfoGainReport
{
  Scenario                 scenario = Scenario::a_qubits();
  EstimatorConfig          estimator;
  std::vector<std::string> labels;
  std::vector<double>      probabilities;
  std::vector<double>      probability_errors;
  std::vector<double>      gains;        ///< I_k in bits
  std::vector<double>      gain_errors;
  double                   average_gain{0.0};
  double                   average_gain_error{0.0};
  double                   per_spin{0.0};
  double                   per_spin_error{0.0};
  std::uint64_t            evaluations{0};
  bool                     converged{true};
  /// Method-B only: the three pair gains whose sum is average_gain.
  std::vector<PairGain> pairs;
};

/// Prior-averaged likelihoods (with errors) for a scenario.
struct OutcomeEstimate
{
  std::vector<std::string> labels;
  std::vector<double>      probabilities;
  std::vector<double>      errors;
};

OutcomeEstimate outcome_probabilities(Scenario const &scenario, EstimatorConfig const &estimator);

InfoGainReport info_gain(Scenario const &scenario, EstimatorConfig const &estimator);

/// Exact-likelihood 1-D integration over the pair cosine. Converged when
/// doubling the node count moves the gain by at most 1e-7.
PairGain pair_info_gain(HalfInteger j, int nodes = 256);

/// Gain of a two-outcome channel whose lower outcome has likelihood
/// `slope * (1 - c)` with c uniform on [-1, 1]; the pair channel and the
/// primed outcome of the three-spin POVMs both have this form.
struct LinearChannelGain
{
  double probability;
  double gain;
  double error;
};
LinearChannelGain linear_outcome_gain(double slope, int nodes = 256);

struct SweepRow
{
  HalfInteger    j;
  InfoGainReport method_a;
  InfoGainReport method_b;
};

/// Evaluates A_SPINJ(j) and B_SPINJ(j) for every j.
std::vector<SweepRow> sweep_j(std::span<HalfInteger const> js, EstimatorConfig const &method_a,
                              EstimatorConfig const &method_b, Coupling coupling = Coupling::QubitSpin);

enum class Spacing
{
  Linear,
  Geometric,
};

/// `points` distinct half-integers from j_min to j_max. Values are rounded to
/// the nearest half-integer and nudged up by 1/2 where rounding would repeat
/// the previous value; throws InvalidArgument if the range cannot hold them.
std::vector<HalfInteger> j_grid(HalfInteger j_min, HalfInteger j_max, int points, Spacing spacing);

}  // namespace relparam
