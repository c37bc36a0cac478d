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

#include "relparam/protocols.hpp"

#include "relparam/errors.hpp"
#include "relparam/spin_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace relparam {

namespace {

constexpr double kGramTolerance        = 1e-12;
constexpr double kProbabilityTolerance = 1e-10;

double clamp_probability(double p)
{
  if (!std::isfinite(p) || p < -kProbabilityTolerance || p > 1.0 + kProbabilityTolerance)
  {
    throw NumericalError("probability " + std::to_string(p) + " outside [0, 1]");
  }
  return std::clamp(p, 0.0, 1.0);
}

OutcomeDistribution make_distribution(std::vector<std::string> labels, std::span<double const> raw)
{
  OutcomeDistribution d;
  d.labels = std::move(labels);
  d.probabilities.reserve(raw.size());
  for (double p : raw)
  {
    d.probabilities.push_back(clamp_probability(p));
  }
  return d;
}

std::vector<std::string> product_labels()
{
  std::vector<std::string> out;
  for (int k = 0; k < 8; ++k)
  {
    out.push_back({static_cast<char>('0' + ((k >> 2) & 1)), static_cast<char>('0' + ((k >> 1) & 1)),
                   static_cast<char>('0' + (k & 1))});
  }
  return out;
}

double pair_lower(HalfInteger j, double cos_beta)
{
  return j.value() * (1.0 - cos_beta) / (j.twice() + 1.0);
}

}  // namespace

double CosineTriple::gram_determinant() const noexcept
{
  return 1.0 + 2.0 * x * y * z - x * x - y * y - z * z;
}

bool CosineTriple::in_range() const noexcept
{
  auto ok = [](double v) { return std::isfinite(v) && v >= -1.0 && v <= 1.0; };
  return ok(x) && ok(y) && ok(z);
}

Scenario Scenario::a_qubits()
{
  return {ScenarioKind::AQubits, half(), Coupling::QubitPair};
}

Scenario Scenario::b_qubits()
{
  return {ScenarioKind::BQubits, half(), Coupling::QubitSpin};
}

Scenario Scenario::a_spinj(HalfInteger j, Coupling coupling)
{
  if (j.twice() < 1)
  {
    throw InvalidArgument("spin-j scenarios need j >= 1/2");
  }
  return {ScenarioKind::ASpinJ, j, coupling};
}

Scenario Scenario::b_spinj(HalfInteger j)
{
  if (j.twice() < 1)
  {
    throw InvalidArgument("spin-j scenarios need j >= 1/2");
  }
  return {ScenarioKind::BSpinJ, j, Coupling::QubitSpin};
}

Scenario Scenario::from_name(std::string_view name, HalfInteger j, Coupling coupling)
{
  if (name == "a-qubits")
  {
    return a_qubits();
  }
  if (name == "b-qubits")
  {
    return b_qubits();
  }
  if (name == "a-spinj")
  {
    return a_spinj(j, coupling);
  }
  if (name == "b-spinj")
  {
    return b_spinj(j);
  }
  throw InvalidArgument("unknown scenario '" + std::string(name) + "'");
}

bool Scenario::is_method_a() const noexcept
{
  return kind_ == ScenarioKind::AQubits || kind_ == ScenarioKind::ASpinJ;
}

std::string Scenario::name() const
{
  switch (kind_)
  {
  case ScenarioKind::AQubits:
    return "a-qubits";
  case ScenarioKind::BQubits:
    return "b-qubits";
  case ScenarioKind::ASpinJ:
    return "a-spinj";
  case ScenarioKind::BSpinJ:
    return "b-spinj";
  }
  return "unknown";
}

int Scenario::spin_count() const noexcept
{
  return is_method_a() ? 3 : 6;
}

std::vector<HalfInteger> Scenario::spins() const
{
  if (is_method_a())
  {
    return {half(), half(), j_};
  }
  auto const p = pair_spins();
  return {half(), p[0], half(), p[1], half(), p[2]};
}

std::array<AnglePair, 3> Scenario::pairing() const noexcept
{
  switch (kind_)
  {
  case ScenarioKind::AQubits:
    // alpha: n-m, beta: m-r, gamma: n-r
    return {{{0, 1}, {1, 2}, {0, 2}}};
  case ScenarioKind::ASpinJ:
    // alpha: n-m, beta: n-r, gamma: m-r
    return {{{0, 1}, {0, 2}, {1, 2}}};
  default:
    return {{{0, 1}, {2, 3}, {4, 5}}};
  }
}

std::array<HalfInteger, 3> Scenario::pair_spins() const
{
  if (is_method_a())
  {
    throw InvalidArgument("pair_spins() applies to method-B scenarios");
  }
  return {half(), j_, j_};
}

std::vector<std::string> Scenario::labels() const
{
  switch (kind_)
  {
  case ScenarioKind::AQubits:
    return {"1/2'", "3/2", "1/2"};
  case ScenarioKind::ASpinJ:
    return {"j'", "j-1", "j", "j+1"};
  default:
    return product_labels();
  }
}

std::size_t Scenario::outcome_count() const noexcept
{
  switch (kind_)
  {
  case ScenarioKind::AQubits:
    return 3;
  case ScenarioKind::ASpinJ:
    return 4;
  default:
    return 8;
  }
}

double OutcomeDistribution::sum() const noexcept
{
  double s = 0.0;
  for (double p : probabilities)
  {
    s += p;
  }
  return s;
}

double OutcomeDistribution::at(std::string_view label) const
{
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end())
  {
    throw InvalidArgument("unknown outcome label '" + std::string(label) + "'");
  }
  return probabilities[static_cast<std::size_t>(it - labels.begin())];
}

CosineTriple cosines_of(Scenario const &scenario, std::span<Direction const> directions)
{
  if (directions.size() != scenario.direction_count())
  {
    throw InvalidArgument(scenario.name() + " needs " + std::to_string(scenario.direction_count()) +
                          " directions");
  }
  auto const p = scenario.pairing();
  auto cosine  = [&](AnglePair ap) { return directions[ap.first].dot(directions[ap.second]); };
  return {cosine(p[0]), cosine(p[1]), cosine(p[2])};
}

void require_realizable(CosineTriple const &c)
{
  if (!c.in_range())
  {
    throw PreconditionError("cosines must lie in [-1, 1]");
  }
  double const det = c.gram_determinant();
  if (det < -kGramTolerance)
  {
    std::ostringstream msg;
    msg.precision(6);
    msg << "cosine triple (" << c.x << ", " << c.y << ", " << c.z
        << ") is not realizable: Gram determinant det G = " << det << " < 0";
    throw PreconditionError(msg.str());
  }
}

std::array<Direction, 3> realize_triple(Scenario const &scenario, CosineTriple const &c)
{
  if (!scenario.is_method_a())
  {
    throw InvalidArgument("realize_triple applies to method-A scenarios");
  }
  // cos[a][b] between directions a, b of (n, m, r).
  double     cos[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto const pairing   = scenario.pairing();
  double const values[3] = {c.x, c.y, c.z};
  for (std::size_t k = 0; k < 3; ++k)
  {
    cos[pairing[k].first][pairing[k].second] = values[k];
    cos[pairing[k].second][pairing[k].first] = values[k];
  }
  double const c_nm = std::clamp(cos[0][1], -1.0, 1.0);
  double const c_nr = std::clamp(cos[0][2], -1.0, 1.0);
  double const c_mr = std::clamp(cos[1][2], -1.0, 1.0);

  double const sin_m = std::sqrt(std::max(0.0, 1.0 - c_mr * c_mr));
  double const sin_n = std::sqrt(std::max(0.0, 1.0 - c_nr * c_nr));
  double       n_x   = sin_n;
  if (sin_m > 1e-300)
  {
    n_x = std::clamp((c_nm - c_nr * c_mr) / sin_m, -sin_n, sin_n);
  }
  double const n_y = std::sqrt(std::max(0.0, 1.0 - c_nr * c_nr - n_x * n_x));

  return {Direction::from_vector({n_x, n_y, c_nr}), Direction::from_vector({sin_m, 0.0, c_mr}),
          Direction::z_axis()};
}

StateVector encode_state(Scenario const &scenario, std::span<Direction const> directions)
{
  if (!scenario.is_method_a())
  {
    throw InvalidArgument("encode_state builds method-A states; method-B pairs are encoded per pair");
  }
  if (directions.size() != 3)
  {
    throw InvalidArgument("method-A encoding needs three directions (n, m, r)");
  }
  std::array<StateVector, 3> factors{qubit_state(directions[0]), qubit_state(directions[1]),
                                     coherent_state(scenario.j(), directions[2])};
  return tensor(factors);
}

OutcomeDistribution likelihood_a_qubits(CosineTriple const &c)
{
  require_realizable(c);
  std::array<double, 3> raw{};
  LikelihoodModel(Scenario::a_qubits()).evaluate(c, raw);
  return make_distribution(Scenario::a_qubits().labels(), raw);
}

OutcomeDistribution likelihood_a_spinj(HalfInteger j, CosineTriple const &c, Coupling coupling)
{
  require_realizable(c);
  auto const            scenario = Scenario::a_spinj(j, coupling);
  std::array<double, 4> raw{};
  LikelihoodModel(scenario).evaluate(c, raw);
  return make_distribution(scenario.labels(), raw);
}

OutcomeDistribution likelihood_a_spinj_state(HalfInteger j, CosineTriple const &c,
                                             ProjectorSet const &projectors)
{
  require_realizable(c);
  auto const scenario = Scenario::a_spinj(j);
  auto const dirs     = realize_triple(scenario, c);
  auto const psi      = encode_state(scenario, dirs);
  if (projectors.dim() != psi.size())
  {
    throw InvalidArgument("projector dimension does not match the encoded state");
  }
  std::vector<double> raw;
  for (auto const &p : projectors.projectors)
  {
    raw.push_back(expectation(p, psi));
  }
  return make_distribution(projectors.labels, raw);
}

OutcomeDistribution likelihood_b_pair(HalfInteger j, double cos_beta)
{
  if (!std::isfinite(cos_beta) || cos_beta < -1.0 || cos_beta > 1.0)
  {
    throw PreconditionError("cos beta must lie in [-1, 1], got " + std::to_string(cos_beta));
  }
  if (j.twice() < 1)
  {
    throw InvalidArgument("pair likelihood needs j >= 1/2");
  }
  double const lower = pair_lower(j, cos_beta);
  std::array<double, 2> raw{lower, 1.0 - lower};
  return make_distribution({"j-1/2", "j+1/2"}, raw);
}

OutcomeDistribution likelihood_b(Scenario const &scenario, CosineTriple const &c)
{
  if (scenario.is_method_a())
  {
    throw InvalidArgument("likelihood_b applies to method-B scenarios");
  }
  if (!c.in_range())
  {
    throw PreconditionError("cosines must lie in [-1, 1]");
  }
  std::array<double, 8> raw{};
  LikelihoodModel(scenario).evaluate(c, raw);
  return make_distribution(scenario.labels(), raw);
}

OutcomeDistribution likelihood(Scenario const &scenario, CosineTriple const &c)
{
  switch (scenario.kind())
  {
  case ScenarioKind::AQubits:
    return likelihood_a_qubits(c);
  case ScenarioKind::ASpinJ:
    return likelihood_a_spinj(scenario.j(), c, scenario.coupling());
  default:
    return likelihood_b(scenario, c);
  }
}

LikelihoodModel::LikelihoodModel(Scenario scenario)
    : scenario_(scenario), outcomes_(scenario.outcome_count())
{
  if (scenario_.kind() != ScenarioKind::ASpinJ)
  {
    return;
  }
  HalfInteger const j   = scenario_.j();
  int const         tj  = j.twice();
  auto const        h   = half();
  int const         s[] = {1, -1};  // twice the qubit projection, index 0 = up

  // (intermediate twice-spin, total twice-spin) for outcomes j', j-1, j, j+1.
  bool const qubit_pair = scenario_.coupling() == Coupling::QubitPair;
  int const  low        = qubit_pair ? 0 : tj - 1;
  int const  high       = qubit_pair ? 2 : tj + 1;
  std::array<std::pair<int, int>, 4> const outcomes{
      {{low, tj}, {qubit_pair ? high : low, tj - 2}, {high, tj}, {high, tj + 2}}};

  for (std::size_t o = 0; o < 4; ++o)
  {
    auto const [tk, tJ] = outcomes[o];
    if (tJ < 0 || tk < 0)
    {
      continue;
    }
    auto const K = HalfInteger::from_twice(tk);
    auto const J = HalfInteger::from_twice(tJ);
    for (int a = 0; a < 2; ++a)
    {
      for (int b = 0; b < 2; ++b)
      {
        int const tM = s[a] + s[b] + tj;
        double    coef;
        if (qubit_pair)
        {
          coef = clebsch_gordan(h, s[a], h, s[b], K, s[a] + s[b]) *
                 clebsch_gordan(K, s[a] + s[b], j, tj, J, tM);
        }
        else
        {
          coef = clebsch_gordan(h, s[a], j, tj, K, s[a] + tj) *
                 clebsch_gordan(K, s[a] + tj, h, s[b], J, tM);
        }
        if (coef != 0.0)
        {
          terms_[o].push_back({a, b, (tj + 2 - tM) / 2, coef});
        }
      }
    }
  }
}

void LikelihoodModel::evaluate(CosineTriple const &c, std::span<double> out) const
{
  if (out.size() < outcomes_)
  {
    throw InvalidArgument("output span too small for the scenario's outcomes");
  }
  switch (scenario_.kind())
  {
  case ScenarioKind::AQubits:
    out[0] = 0.25 - 0.25 * c.x;
    out[1] = 0.5 + (c.x + c.y + c.z) / 6.0;
    out[2] = 0.25 + c.x / 12.0 - (c.y + c.z) / 6.0;
    return;
  case ScenarioKind::ASpinJ:
    evaluate_spinj(c, out);
    return;
  default:
    break;
  }
  auto const   spins = scenario_.pair_spins();
  double const lo[3] = {pair_lower(spins[0], c.x), pair_lower(spins[1], c.y),
                        pair_lower(spins[2], c.z)};
  for (int k = 0; k < 8; ++k)
  {
    double p = 1.0;
    for (int pair = 0; pair < 3; ++pair)
    {
      bool const upper = (k >> (2 - pair)) & 1;
      p *= upper ? 1.0 - lo[pair] : lo[pair];
    }
    out[static_cast<std::size_t>(k)] = p;
  }
}

void LikelihoodModel::evaluate_spinj(CosineTriple const &c, std::span<double> out) const
{
  auto const        dirs = realize_triple(scenario_, c);
  StateVector const n    = qubit_state(dirs[0]);
  StateVector const m    = qubit_state(dirs[1]);
  for (std::size_t o = 0; o < 4; ++o)
  {
    Complex amp[3] = {};
    for (auto const &t : terms_[o])
    {
      amp[t.m_index] += t.coefficient * n(t.s1) * m(t.s2);
    }
    out[o] = std::norm(amp[0]) + std::norm(amp[1]) + std::norm(amp[2]);
  }
}

StateRoute::StateRoute(Scenario scenario) : scenario_(scenario)
{
  if (scenario_.kind() == ScenarioKind::AQubits)
  {
    auto const set = three_qubit_projectors();
    joint_         = {scenario_.labels(), {set.at("1/2'"), set.at("3/2"), set.at("1/2")}};
  }
  else if (scenario_.kind() == ScenarioKind::ASpinJ)
  {
    joint_ = coupled_projectors(scenario_.j(), scenario_.coupling());
  }
  else
  {
    auto const spins = scenario_.pair_spins();
    for (std::size_t k = 0; k < 3; ++k)
    {
      pairs_[k] = pair_projectors(spins[k]);
    }
  }
}

OutcomeDistribution StateRoute::evaluate(std::span<Direction const> directions) const
{
  if (directions.size() != scenario_.direction_count())
  {
    throw InvalidArgument(scenario_.name() + " needs " +
                          std::to_string(scenario_.direction_count()) + " directions");
  }
  std::vector<double> raw;
  if (scenario_.is_method_a())
  {
    StateVector const psi = encode_state(scenario_, directions);
    for (auto const &p : joint_.projectors)
    {
      raw.push_back(expectation(p, psi));
    }
    return make_distribution(joint_.labels, raw);
  }

  auto const            spins = scenario_.pair_spins();
  std::array<double, 3> lower{};
  for (std::size_t k = 0; k < 3; ++k)
  {
    std::array<StateVector, 2> f{qubit_state(directions[2 * k]),
                                 coherent_state(spins[k], directions[2 * k + 1])};
    lower[k] = expectation(pairs_[k].projectors[0], tensor(f));
  }
  for (int k = 0; k < 8; ++k)
  {
    double p = 1.0;
    for (int pair = 0; pair < 3; ++pair)
    {
      bool const upper = (k >> (2 - pair)) & 1;
      p *= upper ? 1.0 - lower[pair] : lower[pair];
    }
    raw.push_back(p);
  }
  return make_distribution(scenario_.labels(), raw);
}

double rotation_invariance_check(StateRoute const &route, std::span<Direction const> directions,
                                 Direction const &axis, double angle)
{
  std::vector<Direction> rotated;
  rotated.reserve(directions.size());
  for (auto const &d : directions)
  {
    rotated.push_back(d.rotated(axis, angle));
  }
  auto const before = route.evaluate(directions);
  auto const after  = route.evaluate(rotated);
  double     worst  = 0.0;
  for (std::size_t k = 0; k < before.probabilities.size(); ++k)
  {
    worst = std::max(worst, std::abs(before.probabilities[k] - after.probabilities[k]));
  }
  return worst;
}

double rotation_invariance_check(Scenario const &scenario, std::span<Direction const> directions,
                                 Direction const &axis, double angle)
{
  return rotation_invariance_check(StateRoute(scenario), directions, axis, angle);
}

}  // namespace relparam
