#include "wdn/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "wdn/rng.hpp"

namespace wdn {

MonteCarloCell monte_carlo_cell(double p1, double p2, int iterations, long long runs,
                                std::uint64_t seed) {
  MonteCarloCell cell;
  cell.p1 = p1;
  cell.p2 = p2;
  cell.iterations = iterations;
  cell.runs = runs;

  Rng rng(seed);
  double sum = 0.0, sumsq = 0.0;
  for (long long r = 0; r < runs; ++r) {
    double best = 0.5;
    double working = best;
    for (int it = 0; it < iterations; ++it) {
      const double r1 = rng.uniform01();
      const double r2 = rng.uniform01();
      const double r3 = rng.uniform01();
      if (working < r1) {
        working = r1;          // greedy improvement
      } else if (r2 < p2) {
        working = r1;          // risk: keep a worse proposal
      }
      if (best < working) best = working;
      if (r3 < p1) working = best;  // restore
    }
    const double gap = 1.0 - best;
    sum += gap;
    sumsq += gap * gap;
  }
  cell.mean_gap = sum / static_cast<double>(runs);
  if (runs > 1) {
    const double var =
        (sumsq - sum * sum / static_cast<double>(runs)) / static_cast<double>(runs - 1);
    cell.std_gap = var > 0.0 ? std::sqrt(var) : 0.0;
  }
  return cell;
}

std::vector<MonteCarloCell> monte_carlo_study(const std::vector<double>& p1_grid,
                                              const std::vector<double>& p2_grid, int iterations,
                                              long long runs, std::uint64_t seed, int jobs) {
  const int n1 = static_cast<int>(p1_grid.size());
  const int n2 = static_cast<int>(p2_grid.size());
  const int cells = n1 * n2;
  std::vector<MonteCarloCell> out(cells);
  if (cells == 0) return out;

  if (jobs <= 0) {
    const unsigned hc = std::thread::hardware_concurrency();
    jobs = hc > 0 ? static_cast<int>(hc) : 1;
  }
  jobs = std::min(jobs, cells);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int c = next.fetch_add(1);
      if (c >= cells) return;
      const int i = c / n2, j = c % n2;
      out[c] = monte_carlo_cell(p1_grid[i], p2_grid[j], iterations, runs,
                                Rng::stream_seed(seed, static_cast<std::uint64_t>(c)));
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace wdn
