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

// Command-line front end. Talks to the library only through the C API.

#include "relparam/relparam.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk      = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage   = 2;

using json = nlohmann::ordered_json;

// Raised for bad flag values; maps to exit code 2.
struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

// Raised when the library fails on valid input; maps to exit code 1.
struct RunError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

void check(rp_status status)
{
  if (status == RP_OK)
  {
    return;
  }
  std::string const msg = std::string(rp_status_string(status)) + ": " + rp_last_error();
  if (status == RP_INVALID_ARGUMENT || status == RP_PRECONDITION_FAILED)
  {
    throw UsageError(msg);
  }
  throw RunError(msg);
}

template <typename T, void (*Destroy)(T *)>
struct Deleter
{
  void operator()(T *p) const { Destroy(p); }
};
using ScenarioPtr = std::unique_ptr<rp_scenario, Deleter<rp_scenario, rp_scenario_destroy>>;
using ReportPtr   = std::unique_ptr<rp_report, Deleter<rp_report, rp_report_destroy>>;
using TablePtr    = std::unique_ptr<rp_comparison_table, Deleter<rp_comparison_table, rp_comparison_table_destroy>>;
using VerifyPtr   = std::unique_ptr<rp_verify_summary, Deleter<rp_verify_summary, rp_verify_summary_destroy>>;

std::string num(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(std::string const &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
  {
    return s;
  }
  std::string out = "\"";
  for (char c : s)
  {
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  }
  return out + "\"";
}

std::string spin_text(int twice_j)
{
  char buf[32];
  check(rp_format_spin(twice_j, buf, sizeof buf));
  return buf;
}

int parse_spin(std::string const &text, char const *flag)
{
  int twice = 0;
  if (rp_parse_spin(text.c_str(), &twice) != RP_OK)
  {
    throw UsageError(std::string(flag) + ": " + rp_last_error());
  }
  return twice;
}

struct Options
{
  std::string   scenario{"a-qubits"};
  std::string   j{"1/2"};
  std::string   j_min{"1/2"};
  std::string   j_max{"25"};
  int           j_points{12};
  std::string   spacing{"geometric"};
  std::string   estimator;
  std::uint64_t samples{2'000'000};
  int           nodes{0};
  std::uint64_t seed{0};
  std::string   format;
  std::string   out;
  unsigned      workers{0};
  std::string   coupling{"qubit-spin"};
  std::string   gnuplot;
  bool          per_label{false};
};

class Output
{
public:
  explicit Output(std::string const &path)
  {
    if (!path.empty())
    {
      file_.open(path, std::ios::binary);
      if (!file_)
      {
        throw UsageError("cannot open output file '" + path + "'");
      }
    }
  }

  std::ostream &stream() { return file_.is_open() ? file_ : std::cout; }

  void line(std::string const &text)
  {
    stream() << text << '\n';
    stream().flush();
  }

private:
  std::ofstream file_;
};

rp_coupling coupling_of(Options const &o)
{
  rp_coupling c{};
  if (rp_parse_coupling(o.coupling.c_str(), &c) != RP_OK)
  {
    throw UsageError(std::string("--coupling: ") + rp_last_error());
  }
  return c;
}

unsigned workers_of(Options const &o)
{
  if (o.workers > 0)
  {
    return o.workers;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

rp_estimator estimator_of(Options const &o, std::string const &method)
{
  rp_estimator_method m{};
  if (rp_parse_estimator(method.c_str(), &m) != RP_OK)
  {
    throw UsageError(std::string("--estimator: ") + rp_last_error());
  }
  if (o.samples < 1)
  {
    throw UsageError("--samples must be positive");
  }
  if (o.nodes < 0)
  {
    throw UsageError("--nodes must be non-negative");
  }
  rp_estimator e;
  rp_estimator_defaults(m, &e);
  e.samples = o.samples;
  e.nodes   = o.nodes;
  e.seed    = o.seed;
  e.workers = workers_of(o);
  return e;
}

std::string format_of(Options const &o, std::string const &fallback)
{
  std::string const f = o.format.empty() ? fallback : o.format;
  if (f != "csv" && f != "json")
  {
    throw UsageError("--format must be csv or json");
  }
  return f;
}

std::uint64_t budget_of(rp_estimator const &e)
{
  if (e.method == RP_ESTIMATOR_MC)
  {
    return e.samples;
  }
  if (e.nodes > 0)
  {
    return static_cast<std::uint64_t>(e.nodes);
  }
  return e.method == RP_ESTIMATOR_QUAD1D ? 256u : 64u;
}

char const *const kCsvHeader = "scenario,j,label,P_lambda,I_lambda,I_avg,i,stderr,estimator,samples_or_nodes,seed";

std::string csv_row(std::string const &scenario, int twice_j, std::string const &label, double p, double gain,
                    rp_report_summary const &s, double err, rp_estimator const &e)
{
  return scenario + "," + num(0.5 * twice_j) + "," + csv_field(label) + "," + num(p) + "," + num(gain) + "," +
         num(s.average_gain) + "," + num(s.per_spin) + "," + num(err) + "," + rp_estimator_name(e.method) +
         "," + std::to_string(budget_of(e)) + "," + std::to_string(e.seed);
}

ReportPtr evaluate(rp_scenario const *sc, rp_estimator const &e)
{
  rp_report *raw = nullptr;
  check(rp_info_gain(sc, &e, &raw));
  return ReportPtr(raw);
}

ScenarioPtr make_scenario(std::string const &name, int twice_j, rp_coupling c)
{
  rp_scenario *raw = nullptr;
  check(rp_scenario_create(name.c_str(), twice_j, c, &raw));
  return ScenarioPtr(raw);
}

json report_json(rp_scenario const *sc, rp_report const *r, rp_estimator const &e, std::string const &coupling)
{
  rp_report_summary s{};
  check(rp_report_get_summary(r, &s));
  json out;
  out["scenario"] = rp_scenario_name(sc);
  if (std::string(rp_scenario_name(sc)).find("spinj") != std::string::npos)
  {
    out["j"] = spin_text(rp_scenario_twice_j(sc));
  }
  if (std::string(rp_scenario_name(sc)) == "a-spinj")
  {
    out["coupling"] = coupling;
  }
  out["estimator"] = {{"method", rp_estimator_name(e.method)},
                      {"samples_or_nodes", budget_of(e)},
                      {"seed", e.seed}};
  json outcomes = json::array();
  for (std::size_t k = 0; k < s.outcome_count; ++k)
  {
    rp_outcome o{};
    check(rp_report_get_outcome(r, k, &o));
    outcomes.push_back({{"label", o.label},
                        {"probability", o.probability},
                        {"probability_error", o.probability_error},
                        {"gain", o.gain},
                        {"gain_error", o.gain_error}});
  }
  out["outcomes"]           = outcomes;
  out["average_gain"]       = s.average_gain;
  out["average_gain_error"] = s.average_gain_error;
  out["spins"]              = rp_scenario_spin_count(sc);
  out["per_spin"]           = s.per_spin;
  out["per_spin_error"]     = s.per_spin_error;
  out["evaluations"]        = s.evaluations;
  out["converged"]          = s.converged != 0;
  if (s.pair_count > 0)
  {
    json   pairs = json::array();
    double sum   = 0.0;
    for (std::size_t i = 0; i < s.pair_count; ++i)
    {
      rp_pair_gain p{};
      check(rp_report_get_pair(r, i, &p));
      sum += p.average_gain;
      pairs.push_back({{"j", spin_text(p.twice_j)},
                       {"average_gain", p.average_gain},
                       {"error", p.error},
                       {"probabilities", {p.probability[0], p.probability[1]}},
                       {"gains", {p.gain[0], p.gain[1]}},
                       {"converged", p.converged != 0}});
    }
    out["additivity"] = {{"pairs", pairs},
                         {"pair_sum", sum},
                         {"joint", s.average_gain},
                         {"difference", s.average_gain - sum}};
  }
  return out;
}

int cmd_compute(Options const &o)
{
  std::string const fmt   = format_of(o, "json");
  int const         twice = parse_spin(o.j, "--j");
  ScenarioPtr const sc    = make_scenario(o.scenario, twice, coupling_of(o));
  std::string       method = o.estimator;
  if (method.empty())
  {
    method = rp_scenario_is_method_a(sc.get()) ? "mc" : "quad1d";
  }
  rp_estimator const e = estimator_of(o, method);
  Output             out(o.out);
  ReportPtr const    r = evaluate(sc.get(), e);
  if (fmt == "json")
  {
    out.line(report_json(sc.get(), r.get(), e, o.coupling).dump(2));
    return kExitOk;
  }
  rp_report_summary s{};
  check(rp_report_get_summary(r.get(), &s));
  out.line(kCsvHeader);
  for (std::size_t k = 0; k < s.outcome_count; ++k)
  {
    rp_outcome oc{};
    check(rp_report_get_outcome(r.get(), k, &oc));
    out.line(csv_row(rp_scenario_name(sc.get()), rp_scenario_twice_j(sc.get()), oc.label, oc.probability,
                     oc.gain, s, oc.gain_error, e));
  }
  return kExitOk;
}

void write_gnuplot(std::string const &path, std::string const &data)
{
  std::ofstream g(path, std::ios::binary);
  if (!g)
  {
    throw UsageError("cannot open gnuplot script '" + path + "'");
  }
  g << "# Information gain per spin against j; data from relparam sweep-j.\n"
    << "set datafile separator ','\n"
    << "set logscale x\n"
    << "set xlabel 'j'\n"
    << "set ylabel 'i (bits per spin)'\n"
    << "set key bottom right\n"
    << "plot '" << data << "' every ::1 using (strcol(1) eq 'a-spinj' && strcol(3) eq 'all' ? $2 : NaN):7 "
    << "smooth unique with linespoints title '(a) method A', \\\n"
    << "     '" << data << "' every ::1 using (strcol(1) eq 'b-spinj' && strcol(3) eq 'all' ? $2 : NaN):7 "
    << "smooth unique with linespoints title '(b) method B'\n";
}

int cmd_sweep(Options const &o)
{
  std::string const fmt = format_of(o, "csv");
  if (!o.gnuplot.empty() && (o.out.empty() || fmt != "csv"))
  {
    throw UsageError("--gnuplot needs CSV output written with --out");
  }
  int const  lo = parse_spin(o.j_min, "--j-min");
  int const  hi = parse_spin(o.j_max, "--j-max");
  rp_spacing sp{};
  if (o.spacing == "linear")
  {
    sp = RP_SPACING_LINEAR;
  }
  else if (o.spacing == "geometric")
  {
    sp = RP_SPACING_GEOMETRIC;
  }
  else
  {
    throw UsageError("--spacing must be linear or geometric");
  }
  std::size_t count = 0;
  check(rp_j_grid(lo, hi, o.j_points, sp, nullptr, 0, &count));
  std::vector<int> grid(count);
  check(rp_j_grid(lo, hi, o.j_points, sp, grid.data(), grid.size(), &count));

  rp_estimator const ea = estimator_of(o, o.estimator.empty() ? "quad3d" : o.estimator);
  rp_estimator const eb = estimator_of(o, o.estimator.empty() ? "quad1d" : o.estimator);
  rp_coupling const  c  = coupling_of(o);

  Output out(o.out);
  json   rows = json::array();
  if (fmt == "csv")
  {
    out.line(kCsvHeader);
  }
  for (int twice : grid)
  {
    for (auto const &[name, e] : {std::pair{"a-spinj", ea}, std::pair{"b-spinj", eb}})
    {
      ScenarioPtr const sc = make_scenario(name, twice, c);
      ReportPtr const   r  = evaluate(sc.get(), e);
      rp_report_summary s{};
      check(rp_report_get_summary(r.get(), &s));
      if (fmt == "json")
      {
        rows.push_back(report_json(sc.get(), r.get(), e, o.coupling));
        continue;
      }
      double psum = 0.0;
      for (std::size_t k = 0; k < s.outcome_count; ++k)
      {
        rp_outcome oc{};
        check(rp_report_get_outcome(r.get(), k, &oc));
        psum += oc.probability;
        if (o.per_label)
        {
          out.line(csv_row(name, twice, oc.label, oc.probability, oc.gain, s, oc.gain_error, e));
        }
      }
      out.line(csv_row(name, twice, "all", psum, s.average_gain, s, s.per_spin_error, e));
    }
  }
  if (fmt == "json")
  {
    out.line(rows.dump(2));
  }
  if (!o.gnuplot.empty())
  {
    write_gnuplot(o.gnuplot, o.out);
  }
  return kExitOk;
}

int cmd_reproduce(Options const &o)
{
  std::string const   fmt = format_of(o, "csv");
  rp_reproduce_config cfg{};
  rp_reproduce_defaults(&cfg);
  if (o.samples < 1)
  {
    throw UsageError("--samples must be positive");
  }
  cfg.samples  = o.samples;
  cfg.seed     = o.seed;
  cfg.workers  = workers_of(o);
  cfg.coupling = coupling_of(o);
  if (o.nodes > 0)
  {
    cfg.nodes_1d = o.nodes;
    cfg.nodes_3d = o.nodes;
  }
  rp_comparison_table *raw = nullptr;
  check(rp_reproduce(&cfg, &raw));
  TablePtr const table(raw);

  Output out(o.out);
  json   rows = json::array();
  if (fmt == "csv")
  {
    out.line("name,published,reference,computed,stderr,tolerance,pass,note");
  }
  for (std::size_t i = 0; i < rp_comparison_table_size(table.get()); ++i)
  {
    rp_comparison_row r{};
    check(rp_comparison_table_row(table.get(), i, &r));
    if (fmt == "csv")
    {
      out.line(csv_field(r.name) + "," + (r.has_published ? num(r.published) : std::string()) + "," + num(r.reference) +
               "," + num(r.computed) + "," + num(r.standard_error) + "," + num(r.tolerance) + "," +
               (r.pass ? "pass" : "fail") + "," + csv_field(r.note));
      continue;
    }
    json row{{"name", r.name}};
    row["published"]     = r.has_published ? json(r.published) : json(nullptr);
    row["reference"] = r.reference;
    row["computed"]  = r.computed;
    row["stderr"]    = r.standard_error;
    row["tolerance"] = r.tolerance;
    row["pass"]      = r.pass != 0;
    row["note"]      = r.note;
    rows.push_back(row);
  }
  if (fmt == "json")
  {
    out.line(rows.dump(2));
  }
  return rp_comparison_table_all_pass(table.get()) ? kExitOk : kExitFailure;
}

int cmd_verify(Options const &o)
{
  std::string const  fmt = format_of(o, "csv");
  rp_verify_summary *raw = nullptr;
  check(rp_verify(o.seed, &raw));
  VerifyPtr const summary(raw);

  Output out(o.out);
  json   suites = json::array();
  if (fmt == "csv")
  {
    out.line("suite,passed,total,worst,status");
  }
  for (std::size_t i = 0; i < rp_verify_suite_count(summary.get()); ++i)
  {
    rp_verify_suite s{};
    check(rp_verify_get_suite(summary.get(), i, &s));
    std::vector<std::string> failures;
    for (std::size_t k = 0; k < s.failure_count; ++k)
    {
      failures.emplace_back(rp_verify_failure(summary.get(), i, k));
      std::cerr << "FAIL " << s.name << ": " << failures.back() << '\n';
    }
    bool const ok = s.passed == s.total;
    if (fmt == "csv")
    {
      out.line(std::string(s.name) + "," + std::to_string(s.passed) + "," + std::to_string(s.total) + "," +
               num(s.worst) + "," + (ok ? "pass" : "fail"));
      continue;
    }
    suites.push_back({{"suite", s.name},
                      {"passed", s.passed},
                      {"total", s.total},
                      {"worst", s.worst},
                      {"failures", failures}});
  }
  bool const ok = rp_verify_all_pass(summary.get()) != 0;
  if (fmt == "json")
  {
    out.line(json{{"all_pass", ok}, {"suites", suites}}.dump(2));
  }
  return ok ? kExitOk : kExitFailure;
}

void add_estimator_flags(CLI::App *cmd, Options &o)
{
  cmd->add_option("--estimator", o.estimator, "mc, quad1d or quad3d");
  cmd->add_option("--samples", o.samples, "Monte Carlo sample count");
  cmd->add_option("--nodes", o.nodes, "quadrature nodes per axis (0 = default)");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--workers", o.workers, "worker threads (0 = all cores); results do not depend on it");
  cmd->add_option("--coupling", o.coupling, "spin-j coupling order: qubit-spin or qubit-pair");
}

void add_output_flags(CLI::App *cmd, Options &o)
{
  cmd->add_option("--format", o.format, "csv or json");
  cmd->add_option("--out", o.out, "output path (default: standard output)");
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Relative-parameter encodings in spin systems: information gain calculator"};
  app.require_subcommand(1);
  Options o;

  auto *reproduce = app.add_subcommand("reproduce", "compare computed values with published ones");
  add_estimator_flags(reproduce, o);
  add_output_flags(reproduce, o);

  auto *sweep = app.add_subcommand("sweep-j", "per-spin gains of both methods over a range of j");
  sweep->add_option("--j-min", o.j_min, "smallest j (default 1/2)");
  sweep->add_option("--j-max", o.j_max, "largest j (default 25)");
  sweep->add_option("--j-points", o.j_points, "number of j values (default 12)");
  sweep->add_option("--spacing", o.spacing, "linear or geometric (default)");
  sweep->add_option("--gnuplot", o.gnuplot, "also write a gnuplot script for the CSV");
  sweep->add_flag("--per-label", o.per_label, "emit one row per outcome before each aggregate row");
  add_estimator_flags(sweep, o);
  add_output_flags(sweep, o);

  auto *compute = app.add_subcommand("compute", "full report for one scenario");
  compute->add_option("--scenario", o.scenario, "a-qubits, b-qubits, a-spinj or b-spinj");
  compute->add_option("--j", o.j, "spin j for the spin-j scenarios, e.g. 3/2 or 1.5");
  add_estimator_flags(compute, o);
  add_output_flags(compute, o);

  auto *verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--seed", o.seed, "random seed");
  add_output_flags(verify, o);

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::CallForAllHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e)
  {
    app.exit(e);
    return kExitUsage;
  }

  try
  {
    if (*reproduce)
    {
      return cmd_reproduce(o);
    }
    if (*sweep)
    {
      return cmd_sweep(o);
    }
    if (*compute)
    {
      return cmd_compute(o);
    }
    return cmd_verify(o);
  }
  catch (UsageError const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  catch (std::exception const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
