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
#include "relparam/half_integer.hpp"
#include "relparam/spin_algebra.hpp"
#include "test_support.hpp"

using namespace relparam;
namespace ts = testing_support;

namespace {

HalfInteger hj(int twice)
{
  return HalfInteger::from_twice(twice);
}

}  // namespace

TEST_CASE("half-integers parse fractions and decimals")
{
  CHECK(HalfInteger::parse("3/2").twice() == 3);
  CHECK(HalfInteger::parse("1.5").twice() == 3);
  CHECK(HalfInteger::parse("2").twice() == 4);
  CHECK(HalfInteger::parse("0.5").twice() == 1);
  CHECK(HalfInteger::parse("4/2").twice() == 4);
  CHECK_THROWS_AS(HalfInteger::parse("0.3"), InvalidArgument);
  CHECK_THROWS_AS(HalfInteger::parse("1/3"), InvalidArgument);
  CHECK_THROWS_AS(HalfInteger::parse("-1/2"), InvalidArgument);
  CHECK_THROWS_AS(HalfInteger::parse("abc"), InvalidArgument);
  CHECK_FALSE(HalfInteger::try_parse("").has_value());
  CHECK(hj(5).to_string() == "5/2");
  CHECK(hj(6).to_string() == "3");
  CHECK(hj(5).dimension() == 6);
  CHECK_FALSE(hj(1).shifted(-2).has_value());
  CHECK(hj(3).shifted(2)->twice() == 5);
}

TEST_CASE("spin operators match ladder matrix elements")
{
  for (int tj = 1; tj <= 12; ++tj)
  {
    auto const s  = spin_operators(hj(tj));
    auto const o  = ts::spin(tj);
    CHECK(ts::max_abs(s.x - o.x) < 1e-14);
    CHECK(ts::max_abs(s.y - o.y) < 1e-14);
    CHECK(ts::max_abs(s.z - o.z) < 1e-14);
    // [Jx, Jy] = i Jz and the Casimir
    ComplexMatrix const comm = s.x * s.y - s.y * s.x;
    CHECK(ts::max_abs(comm - ts::cplx(0, 1) * s.z) < 1e-12);
    double const j = 0.5 * tj;
    CHECK(ts::max_abs(s.casimir() - j * (j + 1) * ts::identity(tj + 1)) < 1e-12);
  }
}

TEST_CASE("coherent states agree with the rotated highest-weight state")
{
  std::mt19937_64 g(11);
  for (int tj = 1; tj <= 8; ++tj)
  {
    for (int t = 0; t < 10; ++t)
    {
      Direction const   n    = ts::random_direction(g);
      StateVector const mine = coherent_state(hj(tj), n);
      StateVector const ref  = ts::rotated_highest_weight(tj, n);
      // equal up to a global phase
      CHECK(std::abs(std::abs(ref.dot(mine)) - 1.0) < 1e-12);
      CHECK(mine(0).imag() == doctest::Approx(0.0));
      CHECK(mine(0).real() >= 0.0);
      // J.n |n> = j |n>
      auto const s = spin_operators(hj(tj));
      CHECK((s.along(n) * mine - 0.5 * tj * mine).norm() < 1e-12);
    }
  }
}

TEST_CASE("coherent state at the poles")
{
  StateVector const up   = coherent_state(hj(4), Direction::z_axis());
  StateVector const down = coherent_state(hj(4), -Direction::z_axis());
  CHECK(std::abs(up(0) - 1.0) < 1e-15);
  CHECK(std::abs(down(4) - 1.0) < 1e-15);
  CHECK(down.head(4).norm() < 1e-15);
}

TEST_CASE("coherent-state overlap law")
{
  std::mt19937_64 g(5);
  for (int tj = 1; tj <= 6; ++tj)
  {
    for (int t = 0; t < 20; ++t)
    {
      Direction const a = ts::random_direction(g);
      Direction const b = ts::random_direction(g);
      double const    f = std::norm(coherent_state(hj(tj), a).dot(coherent_state(hj(tj), b)));
      CHECK(f == doctest::Approx(std::pow((1 + a.dot(b)) / 2, tj)).epsilon(1e-10));
    }
  }
}

TEST_CASE("qubit state is the +1 eigenvector of sigma.n")
{
  std::mt19937_64 g(2);
  auto const      p = pauli();
  for (int t = 0; t < 20; ++t)
  {
    Direction const n = ts::random_direction(g);
    StateVector     q = qubit_state(n);
    CHECK((p.along(n) * q - q).norm() < 1e-13);
  }
}

// |J M> states of j1 (x) j2 built from the kernel of J+ and repeated J-, with
// the Condon-Shortley sign <j1 j1; j2 J-j1 | J J> > 0.
double cg_by_lowering(int t1, int t2, int tJ, int tM, int tm1, int tm2)
{
  auto const   a  = ts::spin(t1);
  auto const   b  = ts::spin(t2);
  int const    d1 = t1 + 1, d2 = t2 + 1;
  auto const   id1 = ts::identity(d1), id2 = ts::identity(d2);
  ComplexMatrix jz   = ts::kron(a.z, id2) + ts::kron(id1, b.z);
  ComplexMatrix plus = ts::kron(ComplexMatrix(a.x + ts::cplx(0, 1) * a.y), id2) +
                       ts::kron(id1, ComplexMatrix(b.x + ts::cplx(0, 1) * b.y));
  ComplexMatrix minus = plus.adjoint();

  std::vector<Eigen::Index> sector;
  for (Eigen::Index i = 0; i < jz.rows(); ++i)
  {
    if (std::abs(jz(i, i).real() - 0.5 * tJ) < 1e-9)
    {
      sector.push_back(i);
    }
  }
  ComplexMatrix restricted(plus.rows(), static_cast<Eigen::Index>(sector.size()));
  for (std::size_t c = 0; c < sector.size(); ++c)
  {
    restricted.col(static_cast<Eigen::Index>(c)) = plus.col(sector[c]);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(restricted, Eigen::ComputeFullV);
  StateVector kernel = svd.matrixV().col(static_cast<Eigen::Index>(sector.size()) - 1);
  StateVector top    = StateVector::Zero(jz.rows());
  for (std::size_t c = 0; c < sector.size(); ++c)
  {
    top(sector[c]) = kernel(static_cast<Eigen::Index>(c));
  }
  // sign: the m1 = j1 component (index 0 of the first factor) is positive
  Eigen::Index const anchor = (t2 - (tJ - t1)) / 2;
  ts::cplx const     phase  = top(anchor) / std::abs(top(anchor));
  top /= phase;
  for (int s = 0; s < (tJ - tM) / 2; ++s)
  {
    top = minus * top;
    top.normalize();
  }
  Eigen::Index const idx = (t1 - tm1) / 2 * d2 + (t2 - tm2) / 2;
  return top(idx).real();
}

TEST_CASE("Clebsch-Gordan coefficients against the lowering construction")
{
  std::vector<std::pair<int, int>> couples{{1, 1}, {2, 1}, {1, 2}, {3, 2}, {4, 3}, {2, 2}, {6, 1}};
  for (auto [t1, t2] : couples)
  {
    for (int tJ = std::abs(t1 - t2); tJ <= t1 + t2; tJ += 2)
    {
      for (int tM = -tJ; tM <= tJ; tM += 2)
      {
        for (int tm1 = -t1; tm1 <= t1; tm1 += 2)
        {
          int const tm2 = tM - tm1;
          if (std::abs(tm2) > t2)
          {
            continue;
          }
          double const ref = cg_by_lowering(t1, t2, tJ, tM, tm1, tm2);
          double const got = clebsch_gordan(hj(t1), tm1, hj(t2), tm2, hj(tJ), tM);
          CHECK_MESSAGE(std::abs(ref - got) < 1e-12, t1, "/2 x ", t2, "/2 -> ", tJ, "/2 M=", tM, " m1=", tm1);
        }
      }
    }
  }
}

TEST_CASE("Clebsch-Gordan closed forms and selection rules")
{
  double const r2 = 1.0 / std::sqrt(2.0);
  CHECK(clebsch_gordan(hj(1), 1, hj(1), -1, hj(0), 0) == doctest::Approx(r2));
  CHECK(clebsch_gordan(hj(1), -1, hj(1), 1, hj(0), 0) == doctest::Approx(-r2));
  CHECK(clebsch_gordan(hj(2), 2, hj(2), -2, hj(0), 0) == doctest::Approx(1 / std::sqrt(3.0)));
  // <j, m - 1/2; 1/2, 1/2 | j + 1/2, m> = sqrt((j + m + 1/2) / (2j + 1))
  for (int tj : {2, 7, 40, 200})
  {
    for (int tM = -(tj - 1); tM <= tj + 1; tM += 2)
    {
      double const j = 0.5 * tj, m = 0.5 * tM;
      double const got = clebsch_gordan(hj(tj), tM - 1, hj(1), 1, hj(tj + 1), tM);
      CHECK(got == doctest::Approx(std::sqrt((j + m + 0.5) / (2 * j + 1))).epsilon(1e-12));
    }
  }
  CHECK(clebsch_gordan(hj(2), 2, hj(2), 0, hj(2), 0) == 0.0);  // M != m1 + m2
  CHECK(clebsch_gordan(hj(2), 0, hj(2), 0, hj(8), 0) == 0.0);  // triangle
  CHECK(clebsch_gordan(hj(2), 4, hj(2), 0, hj(4), 4) == 0.0);  // |m1| > j1
}

TEST_CASE("rotation operators are matrix exponentials")
{
  std::mt19937_64 g(3);
  for (int tj : {1, 2, 5})
  {
    auto const s = ts::spin(tj);
    for (int t = 0; t < 5; ++t)
    {
      Direction const n     = ts::random_direction(g);
      double const    angle = 0.37 + t;
      ComplexMatrix   gen   = ts::cplx(0, -angle) * (n.x() * s.x + n.y() * s.y + n.z() * s.z);
      ComplexMatrix const ref = gen.exp();
      ComplexMatrix const got = rotation_operator(hj(tj), n, angle);
      CHECK(ts::max_abs(ref - got) < 1e-11);
      CHECK(unitarity_defect(got) < 1e-12);
    }
  }
}

TEST_CASE("rotating a coherent state rotates its direction")
{
  std::mt19937_64 g(4);
  for (int t = 0; t < 10; ++t)
  {
    Direction const n     = ts::random_direction(g);
    Direction const axis  = ts::random_direction(g);
    double const    angle = 2.1 * t;
    StateVector const a   = rotation_operator(hj(3), axis, angle) * coherent_state(hj(3), n);
    StateVector const b   = coherent_state(hj(3), n.rotated(axis, angle));
    CHECK(std::abs(std::abs(a.dot(b)) - 1.0) < 1e-12);
  }
}

TEST_CASE("product-space embeddings and spin_dot")
{
  std::array<HalfInteger, 3> spins{hj(1), hj(1), hj(4)};
  CHECK(product_dimension(spins) == 20);
  auto const    s  = ts::spin(1);
  auto const    s2 = ts::spin(4);
  ComplexMatrix ref = ts::kron(ts::kron(s.x, ts::identity(2)), s2.x) +
                      ts::kron(ts::kron(s.y, ts::identity(2)), s2.y) +
                      ts::kron(ts::kron(s.z, ts::identity(2)), s2.z);
  CHECK(ts::max_abs(spin_dot(spins, 0, 2) - ref) < 1e-13);
  // eigenvalues of S.J for s=1/2 with spin 2: j/2 and -(j+1)/2
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(spin_dot(spins, 0, 2));
  CHECK(es.eigenvalues().minCoeff() == doctest::Approx(-1.5));
  CHECK(es.eigenvalues().maxCoeff() == doctest::Approx(1.0));

  auto const total = total_spin_operators(spins);
  CHECK(ts::max_abs(total.casimir() - total.casimir().adjoint()) < 1e-13);
  std::array<std::size_t, 2> sub{0, 1};
  auto const pair = total_spin_operators(spins, sub);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ps(pair.casimir());
  CHECK(ps.eigenvalues().minCoeff() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ps.eigenvalues().maxCoeff() == doctest::Approx(2.0));
}

TEST_CASE("collective rotation commutes with total spin squared")
{
  std::array<HalfInteger, 3> spins{hj(1), hj(1), hj(3)};
  ComplexMatrix const        u = collective_rotation(Direction::from_vector({1, 2, 3}), 0.8, spins);
  ComplexMatrix const        c = total_spin_operators(spins).casimir();
  CHECK(unitarity_defect(u) < 1e-12);
  CHECK(ts::max_abs(u * c - c * u) < 1e-11);
}

TEST_CASE("invalid inputs are rejected")
{
  CHECK_THROWS_AS(Direction::from_vector({0, 0, 0}), InvalidArgument);
  CHECK_THROWS_AS(basis_state(hj(2), 3), InvalidArgument);
  std::array<HalfInteger, 2> spins{hj(1), hj(1)};
  CHECK_THROWS_AS(spin_dot(spins, 0, 0), InvalidArgument);
}
