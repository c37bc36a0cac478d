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
#include "relparam/povm.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace relparam {

/// (cos alpha, cos beta, cos gamma). Which vectors each angle joins depends on
/// the scenario; see Scenario::pairing().
struct CosineTriple
{
  double x{1.0};
  double y{1.0};
  double z{1.0};

  /// det of [[1,x,z],[x,1,y],[z,y,1]] = 1 + 2xyz - x^2 - y^2 - z^2. Symmetric in
  /// the three cosines, so it does not depend on the pairing.
  double gram_determinant() const noexcept;
  bool   in_range() const noexcept;
};

enum class ScenarioKind
{
  AQubits,
  BQubits,
  ASpinJ,
  BSpinJ,
};

/// Indices of the two directions an encoded angle is measured between.
struct AnglePair
{
  std::size_t first;
  std::size_t second;
};

/// One of the four encodings. Method A sends one three-spin system whose
/// directions are (n, m, r); method B sends three independent pairs whose
/// directions are (d0, d1), (d2, d3), (d4, d5).
class Scenario
{
public:
  static Scenario a_qubits();
  static Scenario b_qubits();
  static Scenario a_spinj(HalfInteger j, Coupling coupling = Coupling::QubitSpin);
  static Scenario b_spinj(HalfInteger j);
  /// "a-qubits", "b-qubits", "a-spinj", "b-spinj".
  static Scenario from_name(std::string_view name, HalfInteger j,
                            Coupling coupling = Coupling::QubitSpin);

  ScenarioKind kind() const noexcept { return kind_; }
  HalfInteger  j() const noexcept { return j_; }
  Coupling     coupling() const noexcept { return coupling_; }
  bool         is_method_a() const noexcept;
  std::string  name() const;

  /// 3 for method A, 6 for method B.
  int spin_count() const noexcept;
  /// Number of directions an encoding consumes (equals spin_count()).
  std::size_t direction_count() const noexcept { return static_cast<std::size_t>(spin_count()); }
  /// Spins of each transmitted particle, in tensor order.
  std::vector<HalfInteger> spins() const;
  /// (alpha, beta, gamma) -> direction pairs.
  std::array<AnglePair, 3> pairing() const noexcept;
  /// Spin of the partner of the spin-1/2 particle in each method-B pair.
  std::array<HalfInteger, 3> pair_spins() const;

  std::vector<std::string> labels() const;
  std::size_t              outcome_count() const noexcept;

private:
  Scenario(ScenarioKind kind, HalfInteger j, Coupling coupling)
      : kind_(kind), j_(j), coupling_(coupling)
  {}
  ScenarioKind kind_;
  HalfInteger  j_;
  Coupling     coupling_;
};

struct OutcomeDistribution
{
  std::vector<std::string> labels;
  std::vector<double>      probabilities;

  double sum() const noexcept;
  double at(std::string_view label) const;
};

/// Cosines of the scenario's three angles for a list of directions.
CosineTriple cosines_of(Scenario const &scenario, std::span<Direction const> directions);

/// Throws PreconditionError (message names det G) when the Gram matrix is
/// not positive semidefinite to within 1e-12, or a cosine leaves [-1, 1].
void require_realizable(CosineTriple const &c);

/// Directions (n, m, r) for a method-A scenario realizing the cosines in the
/// gauge r = z, m in the x-z plane with m_x >= 0, n azimuth in [0, pi].
std::array<Direction, 3> realize_triple(Scenario const &scenario, CosineTriple const &c);

/// |n> (x) |m> (x) |r_j>. Method-B scenarios are rejected.
StateVector encode_state(Scenario const &scenario, std::span<Direction const> directions);

/// Closed form over (1/2', 3/2, 1/2); y joins m and r, z joins n and r.
OutcomeDistribution likelihood_a_qubits(CosineTriple const &c);

/// Outcome probabilities over (j', j-1, j, j+1) from Clebsch-Gordan
/// amplitudes of the gauge-fixed product state.
OutcomeDistribution likelihood_a_spinj(HalfInteger j, CosineTriple const &c,
                                       Coupling coupling = Coupling::QubitSpin);

/// Same quantity from the dense state and coupled_projectors().
OutcomeDistribution likelihood_a_spinj_state(HalfInteger j, CosineTriple const &c,
                                             ProjectorSet const &projectors);

/// (j-1/2, j+1/2) for a spin-1/2 / spin-j pair at relative angle beta.
OutcomeDistribution likelihood_b_pair(HalfInteger j, double cos_beta);

/// Product over the three pairs; labels "abc" with a, b, c in {0, 1}
/// (0 = lower total spin).
OutcomeDistribution likelihood_b(Scenario const &scenario, CosineTriple const &c);

/// Any scenario, routed to the closed forms / CG path above.
OutcomeDistribution likelihood(Scenario const &scenario, CosineTriple const &c);

/// Allocation-free evaluator used by the estimators. Coefficients that only
/// depend on j are computed once.
class LikelihoodModel
{
public:
  explicit LikelihoodModel(Scenario scenario);

  Scenario const &scenario() const noexcept { return scenario_; }
  std::size_t     outcome_count() const noexcept { return outcomes_; }

  /// Writes outcome_count() probabilities. Does not check the Gram condition.
  void evaluate(CosineTriple const &c, std::span<double> out) const;

private:
  // One term of an outcome amplitude: coefficient * n[s1] * m[s2], landing
  // on total projection index `m_index`.
  struct Term
  {
    int    s1;
    int    s2;
    int    m_index;
    double coefficient;
  };

  void evaluate_spinj(CosineTriple const &c, std::span<double> out) const;

  Scenario                           scenario_;
  std::size_t                        outcomes_;
  std::array<std::vector<Term>, 4>   terms_;
};

/// Dense-state evaluator: projector expectation values on the encoded state
/// (method A) or on each encoded pair (method B).
class StateRoute
{
public:
  explicit StateRoute(Scenario scenario);

  Scenario const &scenario() const noexcept { return scenario_; }
  OutcomeDistribution evaluate(std::span<Direction const> directions) const;

private:
  Scenario                    scenario_;
  ProjectorSet                joint_;
  std::array<ProjectorSet, 3> pairs_;
};

/// Rotates every direction by the same rotation and returns the largest
/// change of any likelihood component.
double rotation_invariance_check(StateRoute const &route, std::span<Direction const> directions,
                                 Direction const &axis, double angle);
double rotation_invariance_check(Scenario const &scenario, std::span<Direction const> directions,
                                 Direction const &axis, double angle);

}  // namespace relparam
