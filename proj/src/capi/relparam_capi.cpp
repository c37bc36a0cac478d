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

#include "relparam/relparam.h"

#include "relparam/errors.hpp"
#include "relparam/inference.hpp"
#include "relparam/povm.hpp"
#include "relparam/protocols.hpp"
#include "relparam/reproduce.hpp"
#include "relparam/verify.hpp"

#include <cstring>
#include <exception>
#include <new>
#include <string>

using namespace relparam;

struct rp_scenario
{
  Scenario                 scenario;
  std::string              name;
  std::vector<std::string> labels;
};

struct rp_report
{
  InfoGainReport report;
};

struct rp_comparison_table
{
  std::vector<ComparisonRow> rows;
};

struct rp_verify_summary
{
  VerifySummary summary;
};

namespace {

thread_local std::string last_error;

rp_status fail(rp_status status, std::string message)
{
  last_error = std::move(message);
  return status;
}

// Maps library exceptions onto status codes at the boundary.
template <typename F>
rp_status guarded(F &&f) noexcept
{
  try
  {
    f();
    return RP_OK;
  }
  catch (InvalidArgument const &e)
  {
    return fail(RP_INVALID_ARGUMENT, e.what());
  }
  catch (PreconditionError const &e)
  {
    return fail(RP_PRECONDITION_FAILED, e.what());
  }
  catch (NumericalError const &e)
  {
    return fail(RP_NUMERICAL_ERROR, e.what());
  }
  catch (std::bad_alloc const &)
  {
    return fail(RP_INTERNAL_ERROR, "out of memory");
  }
  catch (std::exception const &e)
  {
    return fail(RP_INTERNAL_ERROR, e.what());
  }
  catch (...)
  {
    return fail(RP_INTERNAL_ERROR, "unknown error");
  }
}

void require(bool condition, char const *message)
{
  if (!condition)
  {
    throw InvalidArgument(message);
  }
}

HalfInteger spin_from_twice(int twice_j)
{
  require(twice_j >= 1, "spin must be a positive half-integer");
  return HalfInteger::from_twice(twice_j);
}

EstimatorConfig to_config(rp_estimator const &e)
{
  require(e.method >= RP_ESTIMATOR_MC && e.method <= RP_ESTIMATOR_QUAD3D, "unknown estimator method");
  require(e.nodes >= 0, "node count must be non-negative");
  EstimatorConfig c;
  c.method  = static_cast<EstimatorMethod>(e.method);
  c.samples = e.samples;
  c.nodes   = e.nodes;
  c.seed    = e.seed;
  c.workers = e.workers == 0 ? 1u : e.workers;
  return c;
}

Coupling to_coupling(rp_coupling c)
{
  require(c == RP_COUPLING_QUBIT_SPIN || c == RP_COUPLING_QUBIT_PAIR, "unknown coupling");
  return c == RP_COUPLING_QUBIT_PAIR ? Coupling::QubitPair : Coupling::QubitSpin;
}

rp_pair_gain to_c(PairGain const &p)
{
  rp_pair_gain out{};
  out.twice_j        = p.j.twice();
  out.nodes          = p.nodes;
  out.converged      = p.converged ? 1 : 0;
  out.average_gain   = p.average_gain;
  out.error          = p.error;
  out.probability[0] = p.probabilities[0];
  out.probability[1] = p.probabilities[1];
  out.gain[0]        = p.gains[0];
  out.gain[1]        = p.gains[1];
  return out;
}

}  // namespace

extern "C" {

const char *rp_version(void)
{
  return "1.0.0";
}

const char *rp_status_string(rp_status status)
{
  switch (status)
  {
  case RP_OK:
    return "ok";
  case RP_INVALID_ARGUMENT:
    return "invalid argument";
  case RP_PRECONDITION_FAILED:
    return "precondition failed";
  case RP_NUMERICAL_ERROR:
    return "numerical error";
  case RP_INTERNAL_ERROR:
    return "internal error";
  }
  return "unknown status";
}

const char *rp_last_error(void)
{
  return last_error.c_str();
}

rp_status rp_parse_spin(const char *text, int *twice_j)
{
  return guarded([&] {
    require(text != nullptr && twice_j != nullptr, "null argument");
    HalfInteger const j = HalfInteger::parse(text);
    require(j.twice() >= 1, "spin must be at least 1/2");
    *twice_j = j.twice();
  });
}

rp_status rp_format_spin(int twice_j, char *buffer, size_t capacity)
{
  return guarded([&] {
    require(buffer != nullptr, "null buffer");
    require(twice_j >= 0, "spin must be non-negative");
    std::string const s = HalfInteger::from_twice(twice_j).to_string();
    require(s.size() < capacity, "buffer too small");
    std::memcpy(buffer, s.c_str(), s.size() + 1);
  });
}

rp_status rp_parse_estimator(const char *text, rp_estimator_method *method)
{
  return guarded([&] {
    require(text != nullptr && method != nullptr, "null argument");
    *method = static_cast<rp_estimator_method>(parse_estimator(text));
  });
}

const char *rp_estimator_name(rp_estimator_method method)
{
  switch (method)
  {
  case RP_ESTIMATOR_MC:
    return "mc";
  case RP_ESTIMATOR_QUAD1D:
    return "quad1d";
  case RP_ESTIMATOR_QUAD3D:
    return "quad3d";
  }
  return "unknown";
}

rp_status rp_parse_coupling(const char *text, rp_coupling *coupling)
{
  return guarded([&] {
    require(text != nullptr && coupling != nullptr, "null argument");
    *coupling = parse_coupling(text) == Coupling::QubitPair ? RP_COUPLING_QUBIT_PAIR : RP_COUPLING_QUBIT_SPIN;
  });
}

void rp_estimator_defaults(rp_estimator_method method, rp_estimator *out)
{
  if (out == nullptr)
  {
    return;
  }
  EstimatorConfig const d;
  out->method  = method;
  out->samples = d.samples;
  out->nodes   = 0;
  out->seed    = d.seed;
  out->workers = d.workers;
}

rp_status rp_scenario_create(const char *name, int twice_j, rp_coupling coupling, rp_scenario **out)
{
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    *out                = nullptr;
    std::string const n = name;
    HalfInteger const j = n == "a-qubits" || n == "b-qubits" ? half() : spin_from_twice(twice_j);
    Scenario const    s = Scenario::from_name(n, j, to_coupling(coupling));
    *out                = new rp_scenario{s, s.name(), s.labels()};
  });
}

void rp_scenario_destroy(rp_scenario *scenario)
{
  delete scenario;
}

const char *rp_scenario_name(const rp_scenario *scenario)
{
  return scenario ? scenario->name.c_str() : "";
}

int rp_scenario_twice_j(const rp_scenario *scenario)
{
  return scenario ? scenario->scenario.j().twice() : 0;
}

int rp_scenario_is_method_a(const rp_scenario *scenario)
{
  return scenario && scenario->scenario.is_method_a() ? 1 : 0;
}

int rp_scenario_spin_count(const rp_scenario *scenario)
{
  return scenario ? scenario->scenario.spin_count() : 0;
}

size_t rp_scenario_outcome_count(const rp_scenario *scenario)
{
  return scenario ? scenario->labels.size() : 0;
}

const char *rp_scenario_label(const rp_scenario *scenario, size_t index)
{
  if (scenario == nullptr || index >= scenario->labels.size())
  {
    return nullptr;
  }
  return scenario->labels[index].c_str();
}

rp_status rp_likelihood(const rp_scenario *scenario, double x, double y, double z, double *out,
                        size_t capacity)
{
  return guarded([&] {
    require(scenario != nullptr && out != nullptr, "null argument");
    require(capacity >= scenario->labels.size(), "output buffer smaller than the outcome count");
    OutcomeDistribution const d = likelihood(scenario->scenario, {x, y, z});
    std::copy(d.probabilities.begin(), d.probabilities.end(), out);
  });
}

rp_status rp_info_gain(const rp_scenario *scenario, const rp_estimator *estimator, rp_report **out)
{
  return guarded([&] {
    require(scenario != nullptr && estimator != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new rp_report{info_gain(scenario->scenario, to_config(*estimator))};
  });
}

void rp_report_destroy(rp_report *report)
{
  delete report;
}

rp_status rp_report_get_summary(const rp_report *report, rp_report_summary *out)
{
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    auto const &r           = report->report;
    out->average_gain       = r.average_gain;
    out->average_gain_error = r.average_gain_error;
    out->per_spin           = r.per_spin;
    out->per_spin_error     = r.per_spin_error;
    out->evaluations        = r.evaluations;
    out->converged          = r.converged ? 1 : 0;
    out->outcome_count      = r.labels.size();
    out->pair_count         = r.pairs.size();
  });
}

rp_status rp_report_get_outcome(const rp_report *report, size_t index, rp_outcome *out)
{
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    auto const &r = report->report;
    require(index < r.labels.size(), "outcome index out of range");
    out->label             = r.labels[index].c_str();
    out->probability       = r.probabilities[index];
    out->probability_error = r.probability_errors[index];
    out->gain              = r.gains[index];
    out->gain_error        = r.gain_errors[index];
  });
}

rp_status rp_report_get_pair(const rp_report *report, size_t index, rp_pair_gain *out)
{
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    require(index < report->report.pairs.size(), "pair index out of range");
    *out = to_c(report->report.pairs[index]);
  });
}

rp_status rp_pair_info_gain(int twice_j, int nodes, rp_pair_gain *out)
{
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = to_c(pair_info_gain(spin_from_twice(twice_j), nodes));
  });
}

rp_status rp_singlet_gain(int nodes, double *gain, double *error)
{
  return guarded([&] {
    require(gain != nullptr, "null argument");
    require(nodes >= 8, "singlet gain needs at least 8 nodes");
    LinearChannelGain const g = linear_outcome_gain(0.25, nodes);
    *gain                     = g.gain;
    if (error != nullptr)
    {
      *error = g.error;
    }
  });
}

rp_status rp_j_grid(int twice_min, int twice_max, int points, rp_spacing spacing, int *twice_out,
                    size_t capacity, size_t *count)
{
  return guarded([&] {
    require(count != nullptr, "null argument");
    require(spacing == RP_SPACING_LINEAR || spacing == RP_SPACING_GEOMETRIC, "unknown spacing");
    auto const grid = j_grid(spin_from_twice(twice_min), spin_from_twice(twice_max), points,
                             spacing == RP_SPACING_LINEAR ? Spacing::Linear : Spacing::Geometric);
    *count = grid.size();
    for (std::size_t i = 0; i < grid.size() && i < capacity && twice_out != nullptr; ++i)
    {
      twice_out[i] = grid[i].twice();
    }
  });
}

rp_status rp_pauli_coefficients(double out[12])
{
  return guarded([&] {
    require(out != nullptr, "null argument");
    LinearSystemSolution const sol = solve_projector_system();
    for (std::size_t p = 0; p < 3; ++p)
    {
      for (std::size_t k = 0; k < 4; ++k)
      {
        out[4 * p + k] = sol.coefficients[p][k];
      }
    }
  });
}

void rp_reproduce_defaults(rp_reproduce_config *out)
{
  if (out == nullptr)
  {
    return;
  }
  ReproduceConfig const d;
  out->samples  = d.samples;
  out->seed     = d.seed;
  out->workers  = d.workers;
  out->nodes_1d = d.nodes_1d;
  out->nodes_3d = d.nodes_3d;
  out->coupling = RP_COUPLING_QUBIT_SPIN;
}

rp_status rp_reproduce(const rp_reproduce_config *config, rp_comparison_table **out)
{
  return guarded([&] {
    require(config != nullptr && out != nullptr, "null argument");
    require(config->samples >= 1, "reproduce needs at least one sample");
    require(config->nodes_1d >= 16 && config->nodes_3d >= 8, "too few quadrature nodes");
    *out = nullptr;
    ReproduceConfig c;
    c.samples  = config->samples;
    c.seed     = config->seed;
    c.workers  = config->workers == 0 ? 1u : config->workers;
    c.nodes_1d = config->nodes_1d;
    c.nodes_3d = config->nodes_3d;
    c.coupling = to_coupling(config->coupling);
    *out       = new rp_comparison_table{reproduce(c)};
  });
}

void rp_comparison_table_destroy(rp_comparison_table *table)
{
  delete table;
}

size_t rp_comparison_table_size(const rp_comparison_table *table)
{
  return table ? table->rows.size() : 0;
}

int rp_comparison_table_all_pass(const rp_comparison_table *table)
{
  return table && all_pass(table->rows) ? 1 : 0;
}

rp_status rp_comparison_table_row(const rp_comparison_table *table, size_t index, rp_comparison_row *out)
{
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    require(index < table->rows.size(), "row index out of range");
    ComparisonRow const &r = table->rows[index];
    out->name              = r.name.c_str();
    out->has_published         = r.published.has_value() ? 1 : 0;
    out->published             = r.published.value_or(0.0);
    out->reference         = r.reference;
    out->computed          = r.computed;
    out->standard_error    = r.standard_error;
    out->tolerance         = r.tolerance;
    out->pass              = r.pass ? 1 : 0;
    out->note              = r.note.c_str();
  });
}

rp_status rp_verify(uint64_t seed, rp_verify_summary **out)
{
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    VerifyConfig c;
    c.seed = seed;
    *out   = new rp_verify_summary{run_verification(c)};
  });
}

void rp_verify_summary_destroy(rp_verify_summary *summary)
{
  delete summary;
}

size_t rp_verify_suite_count(const rp_verify_summary *summary)
{
  return summary ? summary->summary.suites.size() : 0;
}

int rp_verify_all_pass(const rp_verify_summary *summary)
{
  return summary && summary->summary.all_pass() ? 1 : 0;
}

rp_status rp_verify_get_suite(const rp_verify_summary *summary, size_t index, rp_verify_suite *out)
{
  return guarded([&] {
    require(summary != nullptr && out != nullptr, "null argument");
    require(index < summary->summary.suites.size(), "suite index out of range");
    SuiteResult const &s = summary->summary.suites[index];
    out->name            = s.name.c_str();
    out->passed          = s.passed;
    out->total           = s.total;
    out->worst           = s.worst;
    out->failure_count   = s.failures.size();
  });
}

const char *rp_verify_failure(const rp_verify_summary *summary, size_t suite, size_t index)
{
  if (summary == nullptr || suite >= summary->summary.suites.size() ||
      index >= summary->summary.suites[suite].failures.size())
  {
    return nullptr;
  }
  return summary->summary.suites[suite].failures[index].c_str();
}

}  // extern "C"
