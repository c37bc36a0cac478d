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

#include "relparam/inference.hpp"

#include "relparam/errors.hpp"
#include "relparam/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

namespace relparam {

namespace {

constexpr std::uint64_t kChunkSize           = 1u << 16;
constexpr double        kTinyLikelihood      = 1e-300;
constexpr double        kQuad1DConvergence   = 1e-7;
constexpr double        kQuad3DConvergence   = 1e-4;
constexpr int           kDefault1DNodes      = 256;
constexpr int           kDefault3DNodes      = 64;

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double xlog2x(double p) noexcept
{
  return p > kTinyLikelihood ? p * std::log2(p) : 0.0;
}

// Weighted sums of L_k and L_k log2 L_k; the Monte Carlo path also keeps the
// second moments needed for delta-method standard errors.
struct Moments
{
  explicit Moments(std::size_t k, bool second_order = false)
      : outcomes(k), l(k, 0.0), a(k, 0.0)
  {
    if (second_order)
    {
      ll.assign(k * k, 0.0);
      gl.assign(k, 0.0);
      aa.assign(k, 0.0);
      al.assign(k, 0.0);
    }
  }

  void add(double w, std::span<double const> like)
  {
    count += 1;
    weight += w;
    double g = 0.0;
    double av[8];
    for (std::size_t k = 0; k < outcomes; ++k)
    {
      av[k] = xlog2x(like[k]);
      l[k] += w * like[k];
      a[k] += w * av[k];
      g += av[k];
    }
    if (ll.empty())
    {
      return;
    }
    g2 += w * g * g;
    for (std::size_t k = 0; k < outcomes; ++k)
    {
      gl[k] += w * g * like[k];
      aa[k] += w * av[k] * av[k];
      al[k] += w * av[k] * like[k];
      for (std::size_t m = 0; m < outcomes; ++m)
      {
        ll[k * outcomes + m] += w * like[k] * like[m];
      }
    }
  }

  void merge(Moments const &o)
  {
    count += o.count;
    weight += o.weight;
    g2 += o.g2;
    auto plus = [](std::vector<double> &x, std::vector<double> const &y) {
      for (std::size_t i = 0; i < x.size(); ++i)
      {
        x[i] += y[i];
      }
    };
    plus(l, o.l);
    plus(a, o.a);
    plus(ll, o.ll);
    plus(gl, o.gl);
    plus(aa, o.aa);
    plus(al, o.al);
  }

  std::size_t         outcomes;
  std::uint64_t       count{0};
  double              weight{0.0};
  double              g2{0.0};
  std::vector<double> l, a, ll, gl, aa, al;
};

struct GainEstimate
{
  std::vector<double> p, p_err, gain, gain_err;
  double              average{0.0};
  double              average_err{0.0};
};

// Point estimates from first moments.
GainEstimate point_estimate(Moments const &m)
{
  GainEstimate e;
  std::size_t const k = m.outcomes;
  e.p.resize(k);
  e.gain.resize(k);
  e.p_err.assign(k, 0.0);
  e.gain_err.assign(k, 0.0);
  double const norm = 1.0 / m.weight;
  for (std::size_t i = 0; i < k; ++i)
  {
    double const p  = m.l[i] * norm;
    double const ea = m.a[i] * norm;
    e.p[i]          = p;
    e.gain[i]       = p > kTinyLikelihood ? ea / p - std::log2(p) : 0.0;
    e.average += ea - xlog2x(p);
  }
  return e;
}

GainEstimate monte_carlo_estimate(Moments const &m)
{
  GainEstimate      e = point_estimate(m);
  std::size_t const k = m.outcomes;
  double const      n = static_cast<double>(m.count);
  auto const        var_to_err = [n](double v) { return std::sqrt(std::max(0.0, v) / n); };

  // I_avg influence: h = sum_k a_k - sum_k L_k log2 P_k.
  std::vector<double> c(k, 0.0);
  double              eh = 0.0;
  for (std::size_t i = 0; i < k; ++i)
  {
    c[i] = e.p[i] > kTinyLikelihood ? std::log2(e.p[i]) : 0.0;
    eh += m.a[i] / n - c[i] * e.p[i];
  }
  double eh2 = m.g2 / n;
  for (std::size_t i = 0; i < k; ++i)
  {
    eh2 -= 2.0 * c[i] * m.gl[i] / n;
    for (std::size_t j = 0; j < k; ++j)
    {
      eh2 += c[i] * c[j] * m.ll[i * k + j] / n;
    }
  }
  e.average_err = var_to_err(eh2 - eh * eh);

  for (std::size_t i = 0; i < k; ++i)
  {
    double const p    = e.p[i];
    double const el2  = m.ll[i * k + i] / n;
    e.p_err[i]        = var_to_err(el2 - p * p);
    if (p <= kTinyLikelihood)
    {
      continue;
    }
    double const ea    = m.a[i] / n;
    double const var_a = m.aa[i] / n - ea * ea;
    double const var_l = el2 - p * p;
    double const cov   = m.al[i] / n - ea * p;
    double const alpha = 1.0 / p;
    double const beta  = -ea / (p * p) - 1.0 / (p * std::numbers::ln2);
    e.gain_err[i] = var_to_err(alpha * alpha * var_a + beta * beta * var_l + 2.0 * alpha * beta * cov);
  }
  return e;
}

void check_finite(GainEstimate const &e, std::string const &what)
{
  auto bad = [](double v) { return !std::isfinite(v); };
  bool any = bad(e.average) || bad(e.average_err) ||
             std::any_of(e.p.begin(), e.p.end(), bad) ||
             std::any_of(e.gain.begin(), e.gain.end(), bad) ||
             std::any_of(e.gain_err.begin(), e.gain_err.end(), bad);
  if (any)
  {
    throw NumericalError("non-finite intermediate value while estimating " + what);
  }
}

struct DrawnSample
{
  std::array<Direction, 6> dirs;
  CosineTriple             cosines;
};

void draw(Scenario const &scenario, Rng &rng, DrawnSample &out)
{
  std::size_t const n = scenario.direction_count();
  for (std::size_t i = 0; i < n; ++i)
  {
    out.dirs[i] = HaarProductPrior::sample_direction(rng);
  }
  out.cosines = cosines_of(scenario, std::span<Direction const>(out.dirs.data(), n));
}

Moments run_monte_carlo(Scenario const &scenario, EstimatorConfig const &cfg)
{
  LikelihoodModel const model(scenario);
  std::size_t const     k       = model.outcome_count();
  std::uint64_t const   chunks  = (cfg.samples + kChunkSize - 1) / kChunkSize;
  std::vector<Moments>  partial(chunks, Moments(k, true));
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    std::array<double, 8> like{};
    DrawnSample           s;
    for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
    {
      Rng                 rng(cfg.seed, c);
      std::uint64_t const begin = c * kChunkSize;
      std::uint64_t const end   = std::min(cfg.samples, begin + kChunkSize);
      Moments             local(k, true);
      for (std::uint64_t i = begin; i < end; ++i)
      {
        draw(scenario, rng, s);
        model.evaluate(s.cosines, like);
        local.add(1.0, std::span<double const>(like.data(), k));
      }
      partial[c] = std::move(local);
    }
  };

  unsigned const threads =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, cfg.workers), chunks));
  if (threads <= 1)
  {
    worker();
  }
  else
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
    {
      pool.emplace_back(worker);
    }
  }

  // Fixed chunk order: the result does not depend on the worker count.
  Moments total(k, true);
  for (auto const &p : partial)
  {
    total.merge(p);
  }
  return total;
}

Moments run_quadrature_3d(Scenario const &scenario, int nodes)
{
  LikelihoodModel const model(scenario);
  std::size_t const     k = model.outcome_count();
  Moments               m(k);
  std::array<double, 8> like{};
  QuadratureRule const  cosine_rule = endpoint_graded_rule(nodes, -1.0, 1.0);

  if (scenario.is_method_a())
  {
    // r = z; u = cos(m, r), v = cos(n, r) uniform; relative azimuth phi
    // uniform on [0, pi] by reflection symmetry.
    QuadratureRule const phi_rule = endpoint_graded_rule(nodes, 0.0, std::numbers::pi);
    bool const           spinj    = scenario.kind() == ScenarioKind::ASpinJ;
    for (std::size_t iu = 0; iu < cosine_rule.nodes.size(); ++iu)
    {
      double const u  = cosine_rule.nodes[iu];
      double const su = std::sqrt(std::max(0.0, 1.0 - u * u));
      for (std::size_t iv = 0; iv < cosine_rule.nodes.size(); ++iv)
      {
        double const v  = cosine_rule.nodes[iv];
        double const sv = std::sqrt(std::max(0.0, 1.0 - v * v));
        double const w_uv = 0.25 * cosine_rule.weights[iu] * cosine_rule.weights[iv];
        for (std::size_t ip = 0; ip < phi_rule.nodes.size(); ++ip)
        {
          double const x = std::clamp(u * v + su * sv * std::cos(phi_rule.nodes[ip]), -1.0, 1.0);
          CosineTriple const c = spinj ? CosineTriple{x, v, u} : CosineTriple{x, u, v};
          model.evaluate(c, like);
          m.add(w_uv * phi_rule.weights[ip] / std::numbers::pi, std::span<double const>(like.data(), k));
        }
      }
    }
    return m;
  }

  for (std::size_t ix = 0; ix < cosine_rule.nodes.size(); ++ix)
  {
    for (std::size_t iy = 0; iy < cosine_rule.nodes.size(); ++iy)
    {
      double const wxy = 0.25 * cosine_rule.weights[ix] * cosine_rule.weights[iy];
      for (std::size_t iz = 0; iz < cosine_rule.nodes.size(); ++iz)
      {
        CosineTriple const c{cosine_rule.nodes[ix], cosine_rule.nodes[iy], cosine_rule.nodes[iz]};
        model.evaluate(c, like);
        m.add(wxy * 0.5 * cosine_rule.weights[iz], std::span<double const>(like.data(), k));
      }
    }
  }
  return m;
}

struct PairPoint
{
  double                lower_probability;
  double                average_gain;
  std::array<double, 2> gains;
};

PairPoint pair_quadrature(HalfInteger j, int nodes)
{
  QuadratureRule const rule  = endpoint_graded_rule(nodes, -1.0, 1.0);
  double const         slope = j.value() / (j.twice() + 1.0);
  Moments              m(2);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
  {
    double const lower = slope * (1.0 - rule.nodes[i]);
    double const like[2] = {lower, 1.0 - lower};
    m.add(0.5 * rule.weights[i], like);
  }
  GainEstimate const e = point_estimate(m);
  return {e.p[0], e.average, {e.gain[0], e.gain[1]}};
}

void fill_report(InfoGainReport &r, GainEstimate const &e)
{
  r.probabilities      = e.p;
  r.probability_errors = e.p_err;
  r.gains              = e.gain;
  r.gain_errors        = e.gain_err;
  r.average_gain       = e.average;
  r.average_gain_error = e.average_err;
  r.per_spin           = e.average / r.scenario.spin_count();
  r.per_spin_error     = e.average_err / r.scenario.spin_count();
}

GainEstimate quadrature_with_error(Scenario const &scenario, int nodes, std::uint64_t &evaluations)
{
  Moments const fine   = run_quadrature_3d(scenario, nodes);
  Moments const coarse = run_quadrature_3d(scenario, std::max(4, nodes / 2));
  evaluations          = fine.count + coarse.count;
  GainEstimate       e = point_estimate(fine);
  GainEstimate const c = point_estimate(coarse);
  for (std::size_t i = 0; i < e.p.size(); ++i)
  {
    e.p_err[i]    = std::abs(e.p[i] - c.p[i]);
    e.gain_err[i] = std::abs(e.gain[i] - c.gain[i]);
  }
  e.average_err = std::abs(e.average - c.average);
  return e;
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(splitmix64(seed ^ splitmix64(stream + 0x632BE59BD9B4E019ull)))
{}

double Rng::uniform() noexcept
{
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double HaarProductPrior::triple_density(CosineTriple const &c) noexcept
{
  if (!c.in_range())
  {
    return 0.0;
  }
  double const det = c.gram_determinant();
  return det > 0.0 ? 1.0 / (4.0 * std::numbers::pi * std::sqrt(det)) : 0.0;
}

Direction HaarProductPrior::sample_direction(Rng &rng) noexcept
{
  double const z   = 2.0 * rng.uniform() - 1.0;
  double const phi = 2.0 * std::numbers::pi * rng.uniform();
  double const s   = std::sqrt(std::max(0.0, 1.0 - z * z));
  return Direction::from_vector({s * std::cos(phi), s * std::sin(phi), z});
}

PriorSample sample_prior(Scenario const &scenario, Rng &rng)
{
  PriorSample out;
  out.directions.reserve(scenario.direction_count());
  for (std::size_t i = 0; i < scenario.direction_count(); ++i)
  {
    out.directions.push_back(HaarProductPrior::sample_direction(rng));
  }
  out.cosines = cosines_of(scenario, out.directions);
  return out;
}

std::string_view to_string(EstimatorMethod m) noexcept
{
  switch (m)
  {
  case EstimatorMethod::MonteCarlo:
    return "mc";
  case EstimatorMethod::Quadrature1D:
    return "quad1d";
  case EstimatorMethod::Quadrature3D:
    return "quad3d";
  }
  return "unknown";
}

EstimatorMethod parse_estimator(std::string_view text)
{
  if (text == "mc")
  {
    return EstimatorMethod::MonteCarlo;
  }
  if (text == "quad1d")
  {
    return EstimatorMethod::Quadrature1D;
  }
  if (text == "quad3d")
  {
    return EstimatorMethod::Quadrature3D;
  }
  throw InvalidArgument("unknown estimator '" + std::string(text) + "' (expected mc, quad1d, quad3d)");
}

EstimatorConfig EstimatorConfig::monte_carlo(std::uint64_t samples, std::uint64_t seed, unsigned workers)
{
  EstimatorConfig c;
  c.method  = EstimatorMethod::MonteCarlo;
  c.samples = samples;
  c.seed    = seed;
  c.workers = workers;
  return c;
}

EstimatorConfig EstimatorConfig::quadrature_1d(int nodes)
{
  EstimatorConfig c;
  c.method = EstimatorMethod::Quadrature1D;
  c.nodes  = nodes;
  return c;
}

EstimatorConfig EstimatorConfig::quadrature_3d(int nodes)
{
  EstimatorConfig c;
  c.method = EstimatorMethod::Quadrature3D;
  c.nodes  = nodes;
  return c;
}

int EstimatorConfig::effective_nodes() const noexcept
{
  if (nodes > 0)
  {
    return nodes;
  }
  return method == EstimatorMethod::Quadrature1D ? kDefault1DNodes : kDefault3DNodes;
}

std::uint64_t EstimatorConfig::budget() const noexcept
{
  return method == EstimatorMethod::MonteCarlo ? samples
                                               : static_cast<std::uint64_t>(effective_nodes());
}

void EstimatorConfig::validate() const
{
  if (method == EstimatorMethod::MonteCarlo && samples < 1)
  {
    throw InvalidArgument("Monte Carlo estimator needs at least one sample");
  }
  if (method != EstimatorMethod::MonteCarlo && effective_nodes() < 8)
  {
    throw InvalidArgument("quadrature estimators need at least 8 nodes");
  }
}

LinearChannelGain linear_outcome_gain(double slope, int nodes)
{
  if (!(slope > 0.0) || slope > 0.5)
  {
    throw InvalidArgument("linear outcome slope must lie in (0, 1/2]");
  }
  auto eval = [slope](int n) {
    QuadratureRule const rule = endpoint_graded_rule(n, -1.0, 1.0);
    double               p = 0.0, ea = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    {
      double const l = slope * (1.0 - rule.nodes[i]);
      p += 0.5 * rule.weights[i] * l;
      ea += 0.5 * rule.weights[i] * xlog2x(l);
    }
    return std::pair{p, ea / p - std::log2(p)};
  };
  auto const [p, g]   = eval(nodes);
  auto const [p2, g2] = eval(2 * nodes);
  return {p, g, std::abs(g - g2)};
}

PairGain pair_info_gain(HalfInteger j, int nodes)
{
  if (nodes < 16)
  {
    throw InvalidArgument("pair_info_gain needs at least 16 nodes");
  }
  if (j.twice() < 1)
  {
    throw InvalidArgument("pair_info_gain needs j >= 1/2");
  }
  PairPoint const base    = pair_quadrature(j, nodes);
  PairPoint const doubled = pair_quadrature(j, 2 * nodes);
  PairGain        out;
  out.j             = j;
  out.nodes         = nodes;
  out.average_gain  = base.average_gain;
  out.probabilities = {base.lower_probability, 1.0 - base.lower_probability};
  out.gains         = base.gains;
  out.error         = std::abs(base.average_gain - doubled.average_gain);
  out.converged     = out.error <= kQuad1DConvergence;
  if (!std::isfinite(out.average_gain))
  {
    throw NumericalError("non-finite pair gain for j = " + j.to_string());
  }
  return out;
}

InfoGainReport info_gain(Scenario const &scenario, EstimatorConfig const &estimator)
{
  estimator.validate();
  InfoGainReport r;
  r.scenario  = scenario;
  r.estimator = estimator;
  r.labels    = scenario.labels();

  switch (estimator.method)
  {
  case EstimatorMethod::MonteCarlo: {
    Moments const      m = run_monte_carlo(scenario, estimator);
    GainEstimate const e = monte_carlo_estimate(m);
    check_finite(e, scenario.name());
    fill_report(r, e);
    r.evaluations = m.count;
    break;
  }
  case EstimatorMethod::Quadrature3D: {
    GainEstimate const e = quadrature_with_error(scenario, estimator.effective_nodes(), r.evaluations);
    check_finite(e, scenario.name());
    fill_report(r, e);
    r.converged = e.average_err <= kQuad3DConvergence;
    break;
  }
  case EstimatorMethod::Quadrature1D: {
    if (scenario.is_method_a())
    {
      throw InvalidArgument("1-D quadrature applies to method-B scenarios; use quad3d or mc for " +
                            scenario.name());
    }
    auto const spins = scenario.pair_spins();
    for (auto j : spins)
    {
      r.pairs.push_back(pair_info_gain(j, estimator.effective_nodes()));
    }
    GainEstimate e;
    for (int k = 0; k < 8; ++k)
    {
      double p = 1.0, g = 0.0, err = 0.0;
      for (int pair = 0; pair < 3; ++pair)
      {
        auto const upper = static_cast<std::size_t>((k >> (2 - pair)) & 1);
        p *= r.pairs[pair].probabilities[upper];
        g += r.pairs[pair].gains[upper];
        err += r.pairs[pair].error;
      }
      e.p.push_back(p);
      e.p_err.push_back(0.0);
      e.gain.push_back(g);
      e.gain_err.push_back(err);
    }
    for (auto const &pg : r.pairs)
    {
      e.average += pg.average_gain;
      e.average_err += pg.error;
      r.converged = r.converged && pg.converged;
    }
    check_finite(e, scenario.name());
    fill_report(r, e);
    r.evaluations = 3u * 3u * static_cast<std::uint64_t>(estimator.effective_nodes());
    break;
  }
  }

  if (!scenario.is_method_a() && r.pairs.empty())
  {
    // Decomposition alongside the joint estimate.
    for (auto j : scenario.pair_spins())
    {
      r.pairs.push_back(pair_info_gain(j, kDefault1DNodes));
    }
  }
  return r;
}

OutcomeEstimate outcome_probabilities(Scenario const &scenario, EstimatorConfig const &estimator)
{
  InfoGainReport const r = info_gain(scenario, estimator);
  return {r.labels, r.probabilities, r.probability_errors};
}

std::vector<SweepRow> sweep_j(std::span<HalfInteger const> js, EstimatorConfig const &method_a,
                              EstimatorConfig const &method_b, Coupling coupling)
{
  std::vector<SweepRow> rows;
  rows.reserve(js.size());
  for (auto j : js)
  {
    rows.push_back({j, info_gain(Scenario::a_spinj(j, coupling), method_a),
                    info_gain(Scenario::b_spinj(j), method_b)});
  }
  return rows;
}

std::vector<HalfInteger> j_grid(HalfInteger j_min, HalfInteger j_max, int points, Spacing spacing)
{
  if (j_min.twice() < 1 || j_max < j_min || points < 1)
  {
    throw InvalidArgument("j range needs 1/2 <= j_min <= j_max and at least one point");
  }
  if (points > j_max.twice() - j_min.twice() + 1)
  {
    throw InvalidArgument("j range holds fewer than " + std::to_string(points) + " half-integers");
  }
  if (points == 1)
  {
    return {j_min};
  }
  std::vector<HalfInteger> out;
  double const lo = j_min.value();
  double const hi = j_max.value();
  int          prev = j_min.twice() - 1;
  for (int k = 0; k < points; ++k)
  {
    double const t = static_cast<double>(k) / (points - 1);
    double const v = spacing == Spacing::Geometric ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo);
    int twice      = static_cast<int>(std::lround(2.0 * v));
    twice          = std::max(twice, prev + 1);
    // Leave room for the remaining points below j_max.
    twice = std::min(twice, j_max.twice() - (points - 1 - k));
    out.push_back(HalfInteger::from_twice(twice));
    prev = twice;
  }
  return out;
}

}  // namespace relparam
