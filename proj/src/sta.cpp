#include "wdn/sta.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <thread>

namespace wdn {

Design swap_apply(const Design& d, const std::vector<int>& positions) {
  Design out = d;
  if (positions.size() < 2) return out;
  const int first = out.indices.at(positions[0]);
  for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
    out.indices.at(positions[i]) = out.indices.at(positions[i + 1]);
  }
  out.indices.at(positions.back()) = first;
  return out;
}

Design shift_apply(const Design& d, int start, int len, int slot) {
  const int n = static_cast<int>(d.indices.size());
  if (start < 0 || len < 1 || start + len > n || slot < 0 || slot > n - len) {
    throw std::out_of_range("shift_apply arguments out of range");
  }
  Design out;
  std::vector<int> run(d.indices.begin() + start, d.indices.begin() + start + len);
  std::vector<int> rest;
  rest.reserve(n - len);
  for (int i = 0; i < n; ++i) {
    if (i < start || i >= start + len) rest.push_back(d.indices[i]);
  }
  out.indices.assign(rest.begin(), rest.begin() + slot);
  out.indices.insert(out.indices.end(), run.begin(), run.end());
  out.indices.insert(out.indices.end(), rest.begin() + slot, rest.end());
  return out;
}

Design reverse_apply(const Design& d, int start, int len) {
  const int n = static_cast<int>(d.indices.size());
  if (start < 0 || len < 0 || start + len > n) {
    throw std::out_of_range("reverse_apply arguments out of range");
  }
  Design out = d;
  std::reverse(out.indices.begin() + start, out.indices.begin() + start + len);
  return out;
}

Design substitute_apply(const Design& d, const std::vector<std::pair<int, int>>& position_value) {
  Design out = d;
  for (const auto& [pos, val] : position_value) out.indices.at(pos) = val;
  return out;
}

std::vector<Design> op_swap(const Design& d, int m_a, int se, Rng& rng) {
  const int n = static_cast<int>(d.indices.size());
  std::vector<Design> out;
  out.reserve(se);
  for (int s = 0; s < se; ++s) {
    if (n < 2) {
      out.push_back(d);
      continue;
    }
    const int k = rng.uniform_int(2, std::max(2, std::min(m_a, n)));
    out.push_back(swap_apply(d, rng.sample_distinct(0, n - 1, k)));
  }
  return out;
}

std::vector<Design> op_shift(const Design& d, int m_b, int se, Rng& rng) {
  const int n = static_cast<int>(d.indices.size());
  std::vector<Design> out;
  out.reserve(se);
  for (int s = 0; s < se; ++s) {
    if (n < 2) {
      out.push_back(d);
      continue;
    }
    const int len = rng.uniform_int(1, std::max(1, std::min(m_b, n - 1)));
    const int start = rng.uniform_int(0, n - len);
    const int slot = rng.uniform_int(0, n - len);
    out.push_back(shift_apply(d, start, len, slot));
  }
  return out;
}

std::vector<Design> op_symmetry(const Design& d, int m_c, int se, Rng& rng) {
  const int n = static_cast<int>(d.indices.size());
  std::vector<Design> out;
  out.reserve(se);
  for (int s = 0; s < se; ++s) {
    if (n < 3) {
      out.push_back(d);
      continue;
    }
    int start = rng.uniform_int(0, n - 2);
    int width = m_c > 0 ? rng.uniform_int(0, m_c) : 0;
    for (int attempt = 0; n - start - width < 2 && attempt < 8; ++attempt) {
      start = rng.uniform_int(0, n - 2);
      width = m_c > 0 ? rng.uniform_int(0, m_c) : 0;
    }
    if (n - start - width < 2) width = 0;  // always leaves room: start <= n-2
    const int flank = rng.uniform_int(1, (n - start - width) / 2);
    out.push_back(reverse_apply(d, start, width + 2 * flank));
  }
  return out;
}

std::vector<Design> op_substitute(const Design& d, int m_d, int se, Rng& rng, int catalog_size) {
  const int n = static_cast<int>(d.indices.size());
  std::vector<Design> out;
  out.reserve(se);
  for (int s = 0; s < se; ++s) {
    if (n < 1 || catalog_size < 2) {
      out.push_back(d);
      continue;
    }
    const int k = rng.uniform_int(1, std::max(1, std::min(m_d, n)));
    const std::vector<int> positions = rng.sample_distinct(0, n - 1, k);
    std::vector<std::pair<int, int>> change;
    change.reserve(positions.size());
    for (int pos : positions) {
      const int current = d.indices[pos];
      int v = rng.uniform_int(1, catalog_size - 1);
      if (v >= current) ++v;  // uniform over 1..catalog_size minus the current value
      change.push_back({pos, v});
    }
    out.push_back(substitute_apply(d, change));
  }
  return out;
}

namespace {

std::vector<Design> make_candidates(Operator op, const Design& base, const SearchConfig& cfg,
                                    int catalog_size, Rng& rng) {
  switch (op) {
    case Operator::swap: return op_swap(base, cfg.m_a, cfg.se, rng);
    case Operator::shift: return op_shift(base, cfg.m_b, cfg.se, rng);
    case Operator::symmetry: return op_symmetry(base, cfg.m_c, cfg.se, rng);
    case Operator::substitute: return op_substitute(base, cfg.m_d, cfg.se, rng, catalog_size);
  }
  throw std::logic_error("unknown operator");
}

}  // namespace

OperatorOutcome apply_operator(Scored& working, double pc, Operator op, const SearchConfig& config,
                               int catalog_size, Rng& rng, const EvaluateFn& evaluate_fn) {
  const std::vector<Design> candidates = make_candidates(op, working.design, config, catalog_size, rng);
  OperatorOutcome outcome;
  outcome.evaluations = static_cast<int>(candidates.size());

  Scored fittest;
  double fittest_total = std::numeric_limits<double>::infinity();
  for (const Design& cand : candidates) {
    Evaluation ev = evaluate_fn(cand);
    const double total = ev.total_at(pc);
    if (total < fittest_total) {
      fittest_total = total;
      fittest = {cand, std::move(ev)};
    }
  }

  if (fittest_total < working.eval.total_at(pc)) {
    working = std::move(fittest);
    outcome.accepted = true;
  } else if (rng.uniform01() < config.p2) {
    working = std::move(fittest);
    outcome.accepted = true;
  }
  return outcome;
}

RunResult run_sta(const Network& net, const PenaltySchedule& schedule, const SearchConfig& config,
                  const SolverSettings& settings) {
  if (config.se < 1) throw std::invalid_argument("se must be >= 1");
  if (config.m_a < 2 || config.m_b < 1 || config.m_c < 0 || config.m_d < 1) {
    throw std::invalid_argument("operator factors below their minima (m_a>=2, m_b>=1, m_c>=0, m_d>=1)");
  }
  if (config.p1 < 0 || config.p1 > 1 || config.p2 < 0 || config.p2 > 1) {
    throw std::invalid_argument("p1 and p2 must lie in [0, 1]");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const int n = net.decision_arc_count();
  const int catalog_size = net.catalog.size();
  const int budget = config.max_iterations;

  Rng rng(config.seed);
  RunResult result;
  result.seed = config.seed;

  long long counter = 0;
  int current_iteration = 0;
  const EvaluateFn eval_fn = [&](const Design& d) {
    ++counter;
    Evaluation ev = evaluate(d, net, schedule, current_iteration, budget, settings);
    if (ev.feasible &&
        (!result.found_feasible || ev.objective < result.best_feasible_eval.objective)) {
      result.found_feasible = true;
      result.best_feasible = d;
      result.best_feasible_eval = ev;
      result.evals_to_best_feasible = counter;
    }
    return ev;
  };

  // Initialization: se uniform random designs, fittest (ties -> first) seeds
  // both the working incumbent and the archive.
  Scored working;
  {
    double best_total = std::numeric_limits<double>::infinity();
    const double pc0 = pc_at(schedule, 0, budget);
    for (int s = 0; s < config.se; ++s) {
      Design d;
      d.indices.resize(n);
      for (int i = 0; i < n; ++i) d.indices[i] = rng.uniform_int(1, catalog_size);
      Evaluation ev = eval_fn(d);
      const double total = ev.total_at(pc0);
      if (total < best_total) {
        best_total = total;
        working = {std::move(d), std::move(ev)};
      }
    }
  }
  Scored archive = working;
  long long last_accept_counter = counter;  // evaluation count when `working` was produced
  result.evals_to_best = counter;

  {
    const double pc0 = pc_at(schedule, 0, budget);
    result.trace.push_back({0, archive.eval.total_at(pc0), working.eval.total_at(pc0), pc0,
                            archive.eval.feasible, -1});
  }

  for (int it = 1; it <= budget; ++it) {
    current_iteration = it;
    const double pc = pc_at(schedule, it, budget);
    int last_accept_op = -1;
    for (int op = 0; op < 4; ++op) {
      const OperatorOutcome outcome = apply_operator(working, pc, static_cast<Operator>(op),
                                                     config, catalog_size, rng, eval_fn);
      if (outcome.accepted) {
        last_accept_counter = counter;
        last_accept_op = op;
      }
    }
    int improving_op = -1;
    if (working.eval.total_at(pc) < archive.eval.total_at(pc)) {
      archive = working;
      result.evals_to_best = last_accept_counter;
      improving_op = last_accept_op;
    }
    if (rng.uniform01() < config.p1) working = archive;
    result.trace.push_back({it, archive.eval.total_at(pc), working.eval.total_at(pc), pc,
                            archive.eval.feasible, improving_op});
  }

  // Finalize headline totals at the end-of-budget coefficient (for feasible
  // designs the total is coefficient-independent).
  const double pc_final = pc_at(schedule, budget, budget);
  archive.eval.pc_used = pc_final;
  archive.eval.penalty = pc_final * archive.eval.deficit_measure;
  archive.eval.total = archive.eval.objective + archive.eval.penalty;

  result.best = archive.design;
  result.best_eval = archive.eval;
  result.evaluations = counter;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::vector<RunResult> run_many(const Network& net, const PenaltySchedule& schedule,
                                const SearchConfig& config, int runs, int jobs,
                                const SolverSettings& settings) {
  if (runs < 1) return {};
  if (jobs <= 0) {
    const unsigned hc = std::thread::hardware_concurrency();
    jobs = hc > 0 ? static_cast<int>(hc) : 1;
  }
  jobs = std::min(jobs, runs);

  std::vector<RunResult> results(runs);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= runs) return;
      SearchConfig run_cfg = config;
      run_cfg.seed = Rng::stream_seed(config.seed, static_cast<std::uint64_t>(r));
      RunResult res = run_sta(net, schedule, run_cfg, settings);
      res.run_index = r;
      results[r] = std::move(res);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace wdn
