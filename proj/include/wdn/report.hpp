#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wdn/benchmarks.hpp"
#include "wdn/montecarlo.hpp"
#include "wdn/sta.hpp"

namespace wdn {

// Fixed per-iteration trace schema (one row per iteration, iteration 0 is the
// post-initialization state; costs are totals at that iteration's pc;
// feasible_flag tracks the archive design).
inline constexpr const char* kTraceHeader = "iteration,archive_cost,working_cost,pc,feasible_flag";

std::string trace_csv(const std::vector<TraceRow>& trace);

// Aggregate over a set of seeded runs. A run counts as feasible when it
// produced (encountered) at least one zero-penalty design; the "feasible"
// statistics cover each such run's best zero-penalty objective — the run's
// reportable answer, which with a weak penalty coefficient can be cheaper
// territory than the final archive design. The sample standard deviation of
// a single feasible run is reported as 0, and the feasible mean/std of zero
// feasible runs as NaN.
struct RunSetSummary {
  int runs = 0;
  int feasible_runs = 0;
  double feasibility_percent = 0.0;

  int best_run = -1;           // lowest final archive total, ties -> lowest run index
  double best_total = 0.0;
  double best_objective = 0.0;
  bool best_feasible = false;
  long long best_evals_to_best = 0;

  int best_feasible_run = -1;  // lowest best-feasible objective, ties -> lowest run index
  double best_feasible_objective = 0.0;
  long long best_feasible_evals = 0;

  double mean_feasible = 0.0;  // NaN when feasible_runs == 0
  double std_feasible = 0.0;   // NaN when feasible_runs == 0
};

RunSetSummary summarize(const std::vector<RunResult>& results);

// "mean ± std (feasibility%)" cell, e.g. "4.3181e5 ± 1.3870e4 (85%)";
// "n/a (0%)" when no run was feasible.
std::string summary_cell(const RunSetSummary& s);

// Full machine-readable record of an optimize invocation; carries every
// parameter (including the seed) needed to reproduce the identical run.
nlohmann::json run_report(const Network& net, const std::string& network_source,
                          const PenaltySchedule& schedule, const SearchConfig& config, int runs,
                          int jobs, const std::vector<RunResult>& results,
                          const std::vector<std::string>& trace_paths);

// One sweep-grid cell (one (se, pc) combination, `runs` seeded runs).
struct SweepRow {
  int se = 0;
  std::string pc_label;  // "2e4" or "1e4:1e5" for a linear ramp
  RunSetSummary summary;
};

std::string sweep_csv(const std::vector<SweepRow>& rows);

std::string montecarlo_csv(const std::vector<MonteCarloCell>& cells);

// Human-readable verification table; one line per reference check.
std::string verification_table(const std::vector<ReferenceCheck>& checks);

nlohmann::json verification_json(const std::string& benchmark,
                                 const std::vector<ReferenceCheck>& checks);

// Evaluation printout with a per-node head table (display units, 0.01
// precision), mirroring the published head tables' format.
std::string evaluation_report(const Network& net, const Evaluation& eval,
                              const HydraulicState& state);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace wdn
