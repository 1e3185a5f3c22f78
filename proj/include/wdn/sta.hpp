#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wdn/evaluate.hpp"
#include "wdn/network.hpp"
#include "wdn/rng.hpp"

namespace wdn {

struct SearchConfig {
  int se = 8;              // candidates per operator application
  double p1 = 0.1;         // restore-to-archive probability, drawn once per iteration
  double p2 = 0.1;         // risk probability: accept a non-improving fittest candidate
  int m_a = 2;             // swap: max positions rotated
  int m_b = 1;             // shift: max run length moved
  int m_c = 0;             // symmetry: max center width
  int m_d = 1;             // substitute: max positions replaced
  int max_iterations = 200;
  std::uint64_t seed = 1;
};

enum class Operator { swap = 0, shift = 1, symmetry = 2, substitute = 3 };

// ---- Deterministic kernels (exact transformations, no randomness) ----

// Left-rotates the values at the given positions: value(p[i]) <- value(p[i+1]).
// Two positions = a transposition.
Design swap_apply(const Design& d, const std::vector<int>& positions);

// Removes the run [start, start+len) and reinserts it so it begins at index
// `slot` of the shortened vector (slot 0 = front, slot = n-len = back).
Design shift_apply(const Design& d, int start, int len, int slot);

// Reverses the segment [start, start+len).
Design reverse_apply(const Design& d, int start, int len);

// Sets position -> value for each pair.
Design substitute_apply(const Design& d, const std::vector<std::pair<int, int>>& position_value);

// ---- Randomized candidate generators ----
//
// Each returns exactly `se` candidates derived from `d` (copies when the
// design is too short to transform). Draw order is pinned per candidate:
//   swap:       k = U[2..min(m_a,n)], then k distinct positions
//   shift:      len = U[1..min(m_b,n-1)], start = U[0..n-len], slot = U[0..n-len]
//   symmetry:   start = U[0..n-2]; center w = U[0..m_c] (no draw when m_c=0);
//               flank f = U[1..(n-start-w)/2]; infeasible (start,w) pairs are
//               redrawn up to 8 times, then w clamps to 0; reverses the
//               contiguous block of length w+2f beginning at `start`
//   substitute: k = U[1..min(m_d,n)], k distinct positions, then per position
//               a uniform replacement from 1..catalog_size excluding the
//               current value
std::vector<Design> op_swap(const Design& d, int m_a, int se, Rng& rng);
std::vector<Design> op_shift(const Design& d, int m_b, int se, Rng& rng);
std::vector<Design> op_symmetry(const Design& d, int m_c, int se, Rng& rng);
std::vector<Design> op_substitute(const Design& d, int m_d, int se, Rng& rng, int catalog_size);

// ---- Search loop ----

struct Scored {
  Design design;
  Evaluation eval;
};

using EvaluateFn = std::function<Evaluation(const Design&)>;

struct OperatorOutcome {
  int evaluations = 0;  // always the candidate count (= se)
  bool accepted = false;
};

// One operator application against the working incumbent: generate se
// candidates, evaluate all, pick the fittest (ties -> first encountered);
// strictly better totals are accepted greedily, otherwise the fittest is
// accepted with probability p2 (one draw, taken only on that branch).
// Totals are compared at the supplied coefficient pc.
OperatorOutcome apply_operator(Scored& working, double pc, Operator op, const SearchConfig& config,
                               int catalog_size, Rng& rng, const EvaluateFn& evaluate_fn);

struct TraceRow {
  int iteration = 0;          // 0 = state right after initialization
  double archive_cost = 0.0;  // archive total at this iteration's pc
  double working_cost = 0.0;  // working total at this iteration's pc
  double pc = 0.0;
  bool feasible = false;      // archive design feasibility
  int improving_op = -1;      // Operator that produced an archive update, -1 if none
};

struct RunResult {
  int run_index = 0;
  std::uint64_t seed = 0;
  Design best;                // archive design at the end of the budget
  Evaluation best_eval;       // its evaluation, totals at the end-of-budget pc
  std::vector<TraceRow> trace;
  long long evaluations = 0;     // exact count of evaluate calls: se*(1+4*iters)
  long long evals_to_best = 0;   // counter value when the archived design was produced
  double wall_seconds = 0.0;

  // Best zero-penalty design among every evaluated candidate (ties -> first
  // encountered). The archive orders by penalized total, so with a weak
  // coefficient it can finish infeasible even though the run walked through
  // feasible designs; the run's reportable feasible answer is kept here.
  bool found_feasible = false;
  Design best_feasible;
  Evaluation best_feasible_eval;
  long long evals_to_best_feasible = 0;  // counter value at that evaluation
};

// One full search:
//   init: se uniform random designs, fittest (ties -> first) becomes the
//         working incumbent and seeds the archive;
//   each iteration: swap, shift, symmetry, substitute in that order, then an
//         archive update on strict improvement, then one restore draw
//         (working <- archive with probability p1);
//   totals are always compared at the current iteration's coefficient,
//   recombined from stored raw parts (no re-solves when pc changes).
// The trace has max_iterations+1 rows (iteration 0 included).
RunResult run_sta(const Network& net, const PenaltySchedule& schedule, const SearchConfig& config,
                  const SolverSettings& settings = {});

// Independent seeded runs; run r uses seed = Rng::stream_seed(config.seed, r),
// so results do not depend on worker count or completion order.
// jobs <= 0 means hardware concurrency.
std::vector<RunResult> run_many(const Network& net, const PenaltySchedule& schedule,
                                const SearchConfig& config, int runs, int jobs = 0,
                                const SolverSettings& settings = {});

}  // namespace wdn
