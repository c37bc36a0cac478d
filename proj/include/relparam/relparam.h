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

#ifndef RELPARAM_RELPARAM_H
#define RELPARAM_RELPARAM_H

/*
 * C interface to the relparam library: relative-parameter encodings of three
 * angles in spin systems, their measurement statistics and information gains.
 *
 * Conventions
 *   - Spins are passed as twice their value (j = 3/2 -> 3).
 *   - Every fallible call returns rp_status; on failure rp_last_error()
 *     describes the problem for the calling thread.
 *   - Handles are opaque and owned by the caller; release them with the
 *     matching *_destroy function. Handles are immutable and may be shared
 *     between threads.
 *   - Strings returned by accessors live as long as the handle they came from.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(RELPARAM_BUILDING)
#define RP_API __declspec(dllexport)
#else
#define RP_API __declspec(dllimport)
#endif
#else
#define RP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rp_status
{
  RP_OK                  = 0,
  RP_INVALID_ARGUMENT    = 1, /* malformed input: bad name, spin, size, null pointer */
  RP_PRECONDITION_FAILED = 2, /* well-formed input outside the domain, e.g. det G < 0 */
  RP_NUMERICAL_ERROR     = 3, /* non-finite or out-of-range intermediate value */
  RP_INTERNAL_ERROR      = 4
} rp_status;

typedef enum rp_estimator_method
{
  RP_ESTIMATOR_MC     = 0,
  RP_ESTIMATOR_QUAD1D = 1,
  RP_ESTIMATOR_QUAD3D = 2
} rp_estimator_method;

typedef enum rp_coupling
{
  RP_COUPLING_QUBIT_SPIN = 0, /* first qubit coupled to the spin-j factor first */
  RP_COUPLING_QUBIT_PAIR = 1  /* the two qubits coupled first */
} rp_coupling;

typedef enum rp_spacing
{
  RP_SPACING_LINEAR    = 0,
  RP_SPACING_GEOMETRIC = 1
} rp_spacing;

typedef struct rp_estimator
{
  rp_estimator_method method;
  uint64_t            samples; /* Monte Carlo only */
  int                 nodes;   /* quadrature nodes per axis; 0 = default */
  uint64_t            seed;
  unsigned            workers; /* results do not depend on this */
} rp_estimator;

typedef struct rp_outcome
{
  const char *label;
  double      probability;
  double      probability_error;
  double      gain; /* bits */
  double      gain_error;
} rp_outcome;

typedef struct rp_report_summary
{
  double   average_gain;
  double   average_gain_error;
  double   per_spin;
  double   per_spin_error;
  uint64_t evaluations;
  int      converged;
  size_t   outcome_count;
  size_t   pair_count; /* method B: 3, otherwise 0 */
} rp_report_summary;

typedef struct rp_pair_gain
{
  int    twice_j;
  int    nodes;
  int    converged;
  double average_gain;
  double error;
  double probability[2]; /* lower, upper total spin */
  double gain[2];
} rp_pair_gain;

typedef struct rp_reproduce_config
{
  uint64_t    samples;
  uint64_t    seed;
  unsigned    workers;
  int         nodes_1d;
  int         nodes_3d;
  rp_coupling coupling;
} rp_reproduce_config;

typedef struct rp_comparison_row
{
  const char *name;
  int         has_published;
  double      published;
  double      reference;
  double      computed;
  double      standard_error;
  double      tolerance;
  int         pass;
  const char *note;
} rp_comparison_row;

typedef struct rp_verify_suite
{
  const char *name;
  int         passed;
  int         total;
  double      worst;
  size_t      failure_count;
} rp_verify_suite;

typedef struct rp_scenario         rp_scenario;
typedef struct rp_report           rp_report;
typedef struct rp_comparison_table rp_comparison_table;
typedef struct rp_verify_summary   rp_verify_summary;

RP_API const char *rp_version(void);
RP_API const char *rp_status_string(rp_status status);
/* Message of the last failed call on this thread; "" if none. */
RP_API const char *rp_last_error(void);

/* "3/2", "1.5" or "2"; rejects anything that is not a positive half-integer. */
RP_API rp_status rp_parse_spin(const char *text, int *twice_j);
/* Writes the canonical form ("3/2", "2") including the terminator. */
RP_API rp_status rp_format_spin(int twice_j, char *buffer, size_t capacity);

RP_API rp_status rp_parse_estimator(const char *text, rp_estimator_method *method);
RP_API const char *rp_estimator_name(rp_estimator_method method);
RP_API rp_status   rp_parse_coupling(const char *text, rp_coupling *coupling);
/* Defaults: 2e6 samples, default node counts, seed 0, one worker. */
RP_API void rp_estimator_defaults(rp_estimator_method method, rp_estimator *out);

/* name: "a-qubits", "b-qubits", "a-spinj", "b-spinj". twice_j is ignored for
 * the qubit scenarios; coupling only matters for "a-spinj". */
RP_API rp_status rp_scenario_create(const char *name, int twice_j, rp_coupling coupling, rp_scenario **out);
RP_API void      rp_scenario_destroy(rp_scenario *scenario);
RP_API const char *rp_scenario_name(const rp_scenario *scenario);
RP_API int         rp_scenario_twice_j(const rp_scenario *scenario);
RP_API int         rp_scenario_is_method_a(const rp_scenario *scenario);
RP_API int         rp_scenario_spin_count(const rp_scenario *scenario);
RP_API size_t      rp_scenario_outcome_count(const rp_scenario *scenario);
RP_API const char *rp_scenario_label(const rp_scenario *scenario, size_t index);

/* Outcome probabilities at the cosine triple (x, y, z) = (cos a, cos b, cos g).
 * Method A triples must be realizable by unit vectors. */
RP_API rp_status rp_likelihood(const rp_scenario *scenario, double x, double y, double z, double *out,
                               size_t capacity);

RP_API rp_status rp_info_gain(const rp_scenario *scenario, const rp_estimator *estimator, rp_report **out);
RP_API void      rp_report_destroy(rp_report *report);
RP_API rp_status rp_report_get_summary(const rp_report *report, rp_report_summary *out);
RP_API rp_status rp_report_get_outcome(const rp_report *report, size_t index, rp_outcome *out);
RP_API rp_status rp_report_get_pair(const rp_report *report, size_t index, rp_pair_gain *out);

RP_API rp_status rp_pair_info_gain(int twice_j, int nodes, rp_pair_gain *out);
/* 1-D quadrature of the gain of an outcome with likelihood proportional to 1 - c. */
RP_API rp_status rp_singlet_gain(int nodes, double *gain, double *error);

/* Fills up to `capacity` values; *count receives the number of grid points. */
RP_API rp_status rp_j_grid(int twice_min, int twice_max, int points, rp_spacing spacing, int *twice_out,
                           size_t capacity, size_t *count);

/* Pauli-expansion coefficients of the three-qubit projectors from the linear
 * system: rows 1/2', 1/2, 3/2; columns I, s1.s2, s2.s3, s1.s3. */
RP_API rp_status rp_pauli_coefficients(double out[12]);

RP_API void      rp_reproduce_defaults(rp_reproduce_config *out);
RP_API rp_status rp_reproduce(const rp_reproduce_config *config, rp_comparison_table **out);
RP_API void      rp_comparison_table_destroy(rp_comparison_table *table);
RP_API size_t    rp_comparison_table_size(const rp_comparison_table *table);
RP_API int       rp_comparison_table_all_pass(const rp_comparison_table *table);
RP_API rp_status rp_comparison_table_row(const rp_comparison_table *table, size_t index, rp_comparison_row *out);

RP_API rp_status   rp_verify(uint64_t seed, rp_verify_summary **out);
RP_API void        rp_verify_summary_destroy(rp_verify_summary *summary);
RP_API size_t      rp_verify_suite_count(const rp_verify_summary *summary);
RP_API int         rp_verify_all_pass(const rp_verify_summary *summary);
RP_API rp_status   rp_verify_get_suite(const rp_verify_summary *summary, size_t index, rp_verify_suite *out);
RP_API const char *rp_verify_failure(const rp_verify_summary *summary, size_t suite, size_t index);

#ifdef __cplusplus
}
#endif

#endif /* RELPARAM_RELPARAM_H */
