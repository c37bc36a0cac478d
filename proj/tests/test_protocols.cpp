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

#include "relparam/errors.hpp"
#include "relparam/protocols.hpp"
#include "test_support.hpp"

using namespace relparam;
namespace ts = testing_support;

namespace {

HalfInteger hj(int twice)
{
  return HalfInteger::from_twice(twice);
}

double casimir_value(int twice)
{
  double const j = 0.5 * twice;
  return j * (j + 1);
}

struct Factors
{
  std::vector<int> twice;  // 2j of each factor
};

// Total spin squared of a subset of factors on the product space.
ComplexMatrix casimir_of(Factors const &f, std::vector<int> const &subset)
{
  Eigen::Index dim = 1;
  for (int t : f.twice)
  {
    dim *= t + 1;
  }
  ComplexMatrix comp[3] = {ComplexMatrix::Zero(dim, dim), ComplexMatrix::Zero(dim, dim),
                           ComplexMatrix::Zero(dim, dim)};
  for (int which : subset)
  {
    auto const s = ts::spin(f.twice[which]);
    ComplexMatrix const *ops[3] = {&s.x, &s.y, &s.z};
    for (int a = 0; a < 3; ++a)
    {
      ComplexMatrix m = ComplexMatrix::Identity(1, 1);
      for (std::size_t k = 0; k < f.twice.size(); ++k)
      {
        m = ts::kron(m, static_cast<int>(k) == which ? *ops[a] : ts::identity(f.twice[k] + 1));
      }
      comp[a] += m;
    }
  }
  return comp[0] * comp[0] + comp[1] * comp[1] + comp[2] * comp[2];
}

StateVector product_state(std::vector<int> const &twice, std::vector<Direction> const &dirs)
{
  StateVector psi = StateVector::Ones(1);
  for (std::size_t k = 0; k < twice.size(); ++k)
  {
    psi = ts::kron(psi, ts::rotated_highest_weight(twice[k], dirs[k]));
  }
  return psi;
}

// Method A probabilities from the encoded state and eigenprojectors of the
// intermediate and total Casimirs; order j', j-1, j, j+1.
std::vector<double> brute_force_a_spinj(int tj, Coupling coupling, std::vector<Direction> const &dirs)
{
  Factors const f{{1, 1, tj}};
  bool const    qs    = coupling == Coupling::QubitSpin;
  ComplexMatrix const k2 = casimir_of(f, qs ? std::vector<int>{0, 2} : std::vector<int>{0, 1});
  ComplexMatrix const j2 = casimir_of(f, {0, 1, 2});
  int const           klow  = qs ? tj - 1 : 0;
  int const           khigh = qs ? tj + 1 : 2;
  StateVector const   psi   = product_state(f.twice, dirs);
  auto prob = [&](ComplexMatrix const &p) { return ts::expectation(p, psi); };
  ComplexMatrix const jm  = ts::eigenprojector(j2, casimir_value(tj));
  double const        low = tj >= 2 ? prob(ts::eigenprojector(j2, casimir_value(tj - 2))) : 0.0;
  return {prob(ts::eigenprojector(k2, casimir_value(klow)) * jm), low,
          prob(ts::eigenprojector(k2, casimir_value(khigh)) * jm),
          prob(ts::eigenprojector(j2, casimir_value(tj + 2)))};
}

std::vector<Direction> random_dirs(std::mt19937_64 &g, int n)
{
  std::vector<Direction> d;
  for (int i = 0; i < n; ++i)
  {
    d.push_back(ts::random_direction(g));
  }
  return d;
}

}  // namespace

TEST_CASE("scenario metadata")
{
  CHECK(Scenario::a_qubits().spin_count() == 3);
  CHECK(Scenario::b_qubits().spin_count() == 6);
  CHECK(Scenario::a_spinj(hj(4)).outcome_count() == 4);
  CHECK(Scenario::b_spinj(hj(4)).outcome_count() == 8);
  CHECK(Scenario::a_qubits().labels() == std::vector<std::string>{"1/2'", "3/2", "1/2"});
  CHECK(Scenario::b_qubits().labels().front() == "000");
  CHECK(Scenario::b_qubits().labels().back() == "111");
  CHECK(Scenario::from_name("b-spinj", hj(3)).name() == "b-spinj");
  CHECK(Scenario::from_name("a-spinj", hj(3), Coupling::QubitPair).coupling() == Coupling::QubitPair);
  CHECK_THROWS_AS(Scenario::from_name("c-qubits", hj(1)), InvalidArgument);
  CHECK_THROWS_AS(Scenario::a_spinj(hj(0)), InvalidArgument);
  auto const ps = Scenario::b_spinj(hj(5)).pair_spins();
  CHECK(ps[0] == hj(1));
  CHECK(ps[1] == hj(5));
  CHECK(ps[2] == hj(5));
}

TEST_CASE("three-qubit likelihoods from the encoded state")
{
  std::mt19937_64 g(21);
  Scenario const  sc = Scenario::a_qubits();
  Factors const   f{{1, 1, 1}};
  ComplexMatrix const s12 = casimir_of(f, {0, 1});
  ComplexMatrix const all = casimir_of(f, {0, 1, 2});
  ComplexMatrix const primed  = ts::eigenprojector(s12, 0.0) * ts::eigenprojector(all, 0.75);
  ComplexMatrix const quartet = ts::eigenprojector(all, 3.75);
  for (int t = 0; t < 50; ++t)
  {
    auto const        dirs = random_dirs(g, 3);
    StateVector const psi  = product_state(f.twice, dirs);
    auto const        l    = likelihood(sc, cosines_of(sc, dirs));
    double const      p0   = ts::expectation(primed, psi);
    double const      p2   = ts::expectation(quartet, psi);
    CHECK(l.at("1/2'") == doctest::Approx(p0).epsilon(1e-12));
    CHECK(l.at("3/2") == doctest::Approx(p2).epsilon(1e-12));
    CHECK(l.at("1/2") == doctest::Approx(1 - p0 - p2).epsilon(1e-12));
    CHECK(l.sum() == doctest::Approx(1.0));
  }
}

TEST_CASE("spin-j likelihoods from the encoded state")
{
  std::mt19937_64 g(22);
  for (int tj : {1, 2, 3, 4, 7})
  {
    for (auto coupling : {Coupling::QubitSpin, Coupling::QubitPair})
    {
      Scenario const sc = Scenario::a_spinj(hj(tj), coupling);
      for (int t = 0; t < 8; ++t)
      {
        auto const dirs = random_dirs(g, 3);
        auto const ref  = brute_force_a_spinj(tj, coupling, dirs);
        auto const got  = likelihood(sc, cosines_of(sc, dirs));
        for (std::size_t k = 0; k < 4; ++k)
        {
          CHECK_MESSAGE(std::abs(got.probabilities[k] - ref[k]) < 1e-10, "2j=", tj, " outcome ", k);
        }
      }
    }
  }
}

TEST_CASE("fast path, dense state route and batch model agree")
{
  std::mt19937_64 g(23);
  for (int tj : {1, 2, 5, 12})
  {
    Scenario const        sc = Scenario::a_spinj(hj(tj));
    StateRoute const      route(sc);
    LikelihoodModel const model(sc);
    auto const            projectors = coupled_projectors(hj(tj));
    for (int t = 0; t < 5; ++t)
    {
      auto const         dirs = random_dirs(g, 3);
      CosineTriple const c    = cosines_of(sc, dirs);
      auto const         a    = likelihood_a_spinj(hj(tj), c);
      auto const         b    = route.evaluate(dirs);
      auto const         d    = likelihood_a_spinj_state(hj(tj), c, projectors);
      std::array<double, 4> e{};
      model.evaluate(c, e);
      for (std::size_t k = 0; k < 4; ++k)
      {
        CHECK(std::abs(a.probabilities[k] - b.probabilities[k]) < 1e-10);
        CHECK(std::abs(a.probabilities[k] - d.probabilities[k]) < 1e-10);
        CHECK(std::abs(a.probabilities[k] - e[k]) < 1e-14);
      }
    }
  }
}

TEST_CASE("j = 1/2 reduces to the three-qubit POVM")
{
  std::mt19937_64 g(24);
  for (int t = 0; t < 30; ++t)
  {
    auto const         dirs = random_dirs(g, 3);
    CosineTriple const c    = cosines_of(Scenario::a_spinj(hj(1)), dirs);
    auto const         q    = likelihood_a_qubits(c);
    auto const         pair = likelihood_a_spinj(hj(1), c, Coupling::QubitPair);
    CHECK(pair.at("j'") == doctest::Approx(q.at("1/2'")).epsilon(1e-12));
    CHECK(pair.at("j") == doctest::Approx(q.at("1/2")).epsilon(1e-12));
    CHECK(pair.at("j+1") == doctest::Approx(q.at("3/2")).epsilon(1e-12));
    CHECK(pair.at("j-1") == 0.0);
    // qubit-spin coupling: the primed pair is (n, r), i.e. alpha and beta swap
    auto const swapped = likelihood_a_qubits({c.y, c.x, c.z});
    auto const spin    = likelihood_a_spinj(hj(1), c, Coupling::QubitSpin);
    CHECK(spin.at("j'") == doctest::Approx(swapped.at("1/2'")).epsilon(1e-12));
    CHECK(spin.at("j") == doctest::Approx(swapped.at("1/2")).epsilon(1e-12));
    CHECK(spin.at("j+1") == doctest::Approx(swapped.at("3/2")).epsilon(1e-12));
  }
}

TEST_CASE("pair likelihood closed form and state route")
{
  std::mt19937_64 g(25);
  for (int tj : {1, 2, 3, 10})
  {
    Factors const       f{{1, tj}};
    ComplexMatrix const lower = ts::eigenprojector(casimir_of(f, {0, 1}), casimir_value(tj - 1));
    for (int t = 0; t < 10; ++t)
    {
      auto const   dirs = random_dirs(g, 2);
      double const c    = dirs[0].dot(dirs[1]);
      double const ref  = ts::expectation(lower, product_state(f.twice, dirs));
      auto const   l    = likelihood_b_pair(hj(tj), c);
      double const j    = 0.5 * tj;
      CHECK(l.probabilities[0] == doctest::Approx(ref).epsilon(1e-12));
      CHECK(l.probabilities[0] == doctest::Approx(j * (1 - c) / (2 * j + 1)).epsilon(1e-12));
    }
  }
}

TEST_CASE("method B factorizes over pairs")
{
  Scenario const     sc = Scenario::b_spinj(hj(4));
  CosineTriple const c{0.3, -0.2, 0.9};
  auto const         l  = likelihood(sc, c);
  auto const         a  = likelihood_b_pair(hj(1), 0.3);
  auto const         b  = likelihood_b_pair(hj(4), -0.2);
  auto const         d  = likelihood_b_pair(hj(4), 0.9);
  CHECK(l.at("000") == doctest::Approx(a.probabilities[0] * b.probabilities[0] * d.probabilities[0]));
  CHECK(l.at("101") == doctest::Approx(a.probabilities[1] * b.probabilities[0] * d.probabilities[1]));
  CHECK(l.sum() == doctest::Approx(1.0));
  // pair cosines are unconstrained: this triple has det G < 0
  CHECK(CosineTriple{1, 1, -1}.gram_determinant() < 0);
  CHECK_NOTHROW(likelihood(sc, {1, 1, -1}));
}

TEST_CASE("collective rotations leave likelihoods unchanged")
{
  std::mt19937_64 g(26);
  for (int tj : {1, 3})
  {
    Factors const f{{1, 1, tj}};
    auto const    proj = coupled_projectors(hj(tj));
    for (int t = 0; t < 10; ++t)
    {
      auto const      dirs  = random_dirs(g, 3);
      Direction const axis  = ts::random_direction(g);
      double const    angle = 0.7 * (t + 1);
      StateVector const psi = product_state(f.twice, dirs);
      ComplexMatrix   u     = ComplexMatrix::Identity(1, 1);
      for (int tw : f.twice)
      {
        auto const    s   = ts::spin(tw);
        ComplexMatrix gen = ts::cplx(0, -angle) * (axis.x() * s.x + axis.y() * s.y + axis.z() * s.z);
        u                 = ts::kron(u, ComplexMatrix(gen.exp()));
      }
      StateVector const rotated = u * psi;
      for (auto const &p : proj.projectors)
      {
        CHECK(std::abs(ts::expectation(p, psi) - ts::expectation(p, rotated)) < 1e-10);
      }
    }
  }
}

TEST_CASE("realizing a cosine triple")
{
  std::mt19937_64 g(27);
  for (auto const &sc : {Scenario::a_qubits(), Scenario::a_spinj(hj(4))})
  {
    for (int t = 0; t < 20; ++t)
    {
      auto const         dirs = random_dirs(g, 3);
      CosineTriple const c    = cosines_of(sc, dirs);
      auto const         r    = realize_triple(sc, c);
      CosineTriple const back = cosines_of(sc, r);
      CHECK(back.x == doctest::Approx(c.x).epsilon(1e-10));
      CHECK(back.y == doctest::Approx(c.y).epsilon(1e-10));
      CHECK(back.z == doctest::Approx(c.z).epsilon(1e-10));
      CHECK(r[2].z() == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("preconditions")
{
  CHECK_THROWS_AS(require_realizable({1, 1, -1}), PreconditionError);
  CHECK_THROWS_AS(require_realizable({1.5, 0, 0}), PreconditionError);
  CHECK_NOTHROW(require_realizable({1, 1, 1}));
  CHECK_THROWS_AS(likelihood(Scenario::a_qubits(), {1, 1, -1}), PreconditionError);
  std::vector<Direction> six(6);
  CHECK_THROWS_AS(encode_state(Scenario::b_qubits(), six), InvalidArgument);
  std::vector<Direction> two(2);
  CHECK_THROWS(cosines_of(Scenario::a_qubits(), two));
  try
  {
    require_realizable({1, 1, -1});
  }
  catch (PreconditionError const &e)
  {
    CHECK(std::string(e.what()).find("det G") != std::string::npos);
  }
}
