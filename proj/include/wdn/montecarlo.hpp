#pragma once

#include <cstdint>
#include <vector>

namespace wdn {

// Abstract one-dimensional probe of the accept/restore mechanism: each
// iteration proposes a fresh uniform value; improvements are kept greedily,
// non-improvements are kept with probability p2 (risk), the best value seen
// is archived, and the working value falls back to the archive with
// probability p1 (restore). Reported is the optimality gap 1 - best after a
// fixed iteration budget, aggregated over many independent runs.
struct MonteCarloCell {
  double p1 = 0.0;
  double p2 = 0.0;
  int iterations = 0;
  long long runs = 0;
  double mean_gap = 0.0;
  double std_gap = 0.0;  // sample standard deviation
};

// One (p1, p2) cell. Per run: best = working = 0.5; each iteration draws
// r1, r2, r3 in that order; working <- r1 if improving, else if r2 < p2;
// best <- max(best, working); working <- best if r3 < p1. Gap = 1 - best.
MonteCarloCell monte_carlo_cell(double p1, double p2, int iterations, long long runs,
                                std::uint64_t seed);

// Cartesian grid of cells, row-major over (p1, p2). Cell (i, j) uses the
// derived seed stream index i*|p2_grid|+j, so results are independent of
// evaluation order and worker count. jobs <= 0 means hardware concurrency.
std::vector<MonteCarloCell> monte_carlo_study(const std::vector<double>& p1_grid,
                                              const std::vector<double>& p2_grid, int iterations,
                                              long long runs, std::uint64_t seed, int jobs = 0);

}  // namespace wdn
