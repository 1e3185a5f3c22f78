// Acceptance gate: re-derives the published benchmark results and the solver
// guarantees this toolkit commits to, printing one PASS/FAIL line per
// criterion. Failures carry the measured numbers; the known irreproducible
// printed columns fail here by design rather than being papered over.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <utility>
#include <string>
#include <vector>

#include "wdn/benchmarks.hpp"
#include "wdn/evaluate.hpp"
#include "wdn/hydraulics.hpp"
#include "wdn/montecarlo.hpp"
#include "wdn/report.hpp"
#include "wdn/rng.hpp"
#include "wdn/sta.hpp"

namespace {

using namespace wdn;

int g_pass = 0;
int g_fail = 0;
std::vector<std::string> g_failed;

std::string vfmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  va_list copy;
  va_copy(copy, args);
  const int needed = std::vsnprintf(nullptr, 0, format, copy);
  va_end(copy);
  std::string out(needed > 0 ? static_cast<std::size_t>(needed) : 0, '\0');
  std::vsnprintf(out.data(), out.size() + 1, format, args);
  va_end(args);
  return out;
}

void report(const std::string& id, bool pass, const std::string& detail) {
  std::printf("%s  %-4s %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (pass) {
    ++g_pass;
  } else {
    ++g_fail;
    g_failed.push_back(id);
  }
}

const ReferenceDesign& ref_named(const Benchmark& b, const std::string& name) {
  for (const ReferenceDesign& r : b.references)
    if (r.name == name) return r;
  std::fprintf(stderr, "missing reference %s\n", name.c_str());
  std::exit(2);
}

Design random_design(const Network& net, Rng& rng) {
  Design d;
  d.indices.reserve(net.decision_arc_count());
  for (int i = 0; i < net.decision_arc_count(); ++i)
    d.indices.push_back(rng.uniform_int(1, net.catalog.size()));
  return d;
}

// Independent signed head-loss formula for the closure checks.
double hw_loss(double omega, double length_m, double c, double diameter_m, double q_m3s) {
  const double r = omega * length_m / (std::pow(c, 1.852) * std::pow(diameter_m, 4.871));
  return r * q_m3s * std::pow(std::abs(q_m3s), 0.852);
}

double mass_balance_error(const Network& net, const HydraulicState& state) {
  double worst = 0.0;
  double reservoir_out = 0.0;
  double total_demand = 0.0;
  for (std::size_t p = 0; p < net.nodes.size(); ++p) {
    const NodeRecord& n = net.nodes[p];
    if (net.is_reservoir(n.id)) continue;
    total_demand += n.demand_m3s;
    double inflow = 0.0;
    for (std::size_t a = 0; a < net.arcs.size(); ++a) {
      if (net.arcs[a].to == n.id) inflow += state.flows_m3s[a];
      if (net.arcs[a].from == n.id) inflow -= state.flows_m3s[a];
    }
    worst = std::max(worst, std::abs(inflow - n.demand_m3s));
  }
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    if (net.is_reservoir(net.arcs[a].from)) reservoir_out += state.flows_m3s[a];
    if (net.is_reservoir(net.arcs[a].to)) reservoir_out -= state.flows_m3s[a];
  }
  return std::max(worst, std::abs(reservoir_out - total_demand));
}

double head_consistency_error(const Network& net, const std::vector<double>& diameters_m,
                              const HydraulicState& state) {
  double worst = 0.0;
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    if (diameters_m[a] <= 0.0) continue;
    const PipeArc& pipe = net.arcs[a];
    const double drop =
        state.heads_m[net.node_pos(pipe.from)] - state.heads_m[net.node_pos(pipe.to)];
    const double loss =
        hw_loss(net.hw.omega, pipe.length_m, pipe.roughness_c, diameters_m[a], state.flows_m3s[a]);
    worst = std::max(worst, std::abs(drop - loss));
  }
  return worst;
}

// Two-loop closure oracle: both loop residuals are strictly increasing in
// their own chord flow, so nested bisection pins the flows without touching
// the production solver's linear algebra.
std::vector<double> two_loop_oracle_flows(const std::vector<double>& diameters_m, double omega) {
  auto h = [&](int arc_pos, double q_m3h) {
    return hw_loss(omega, 1000.0, 130.0, diameters_m[arc_pos], q_m3h / 3600.0);
  };
  auto r1 = [&](double x, double y) {
    return h(3, x) + h(2, 450 + x + y) - h(6, 470 - x - y) - h(1, 570 - x - y);
  };
  auto r2 = [&](double x, double y) {
    return h(5, y) + h(7, y - 200) - h(6, 470 - x - y) - h(1, 570 - x - y) +
           h(2, 450 + x + y) + h(4, 330 + y);
  };
  auto solve_x = [&](double y) {
    double lo = -3000.0, hi = 3000.0;
    for (int i = 0; i < 120; ++i) {
      const double mid = 0.5 * (lo + hi);
      (r1(mid, y) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  double lo = -3000.0, hi = 3000.0;
  for (int i = 0; i < 120; ++i) {
    const double mid = 0.5 * (lo + hi);
    (r2(solve_x(mid), mid) < 0.0 ? lo : hi) = mid;
  }
  const double y = 0.5 * (lo + hi);
  const double x = solve_x(y);
  const double q_m3h[8] = {1120.0,    570.0 - x - y, 450.0 + x + y, x,
                           330.0 + y, y,             470.0 - x - y, y - 200.0};
  std::vector<double> flows;
  for (double q : q_m3h) flows.push_back(q / 3600.0);
  return flows;
}

// ---- criteria -------------------------------------------------------------

void criterion_1_two_loop_reference() {
  const Benchmark b = load_benchmark("two-loop");
  const ReferenceCheck c = verify_reference(b.network, ref_named(b, "sta-fixed"));
  const bool exact_cost = c.computed_cost == 419000.0;
  report("1", exact_cost && c.heads_ok && c.feasible,
         vfmt("two-loop design: cost $%.0f (exact match %s), heads within ±0.05 m of the "
              "published column (max dev %+.3f m, omega %.4f), feasible %s",
              c.computed_cost, exact_cost ? "yes" : "NO", c.max_head_dev, c.omega_used,
              c.feasible ? "yes" : "no"));
}

void criterion_2_hanoi_references() {
  const Benchmark b = load_benchmark("hanoi");
  const ReferenceCheck f1 = verify_reference(b.network, ref_named(b, "sta-fixed-w1"));
  const ReferenceCheck v1 = verify_reference(b.network, ref_named(b, "sta-variable-w1"));
  const ReferenceCheck f2 = verify_reference(b.network, ref_named(b, "sta-fixed-w2"));
  const ReferenceCheck v2 = verify_reference(b.network, ref_named(b, "sta-variable-w2"));

  report("2a", f1.cost_ok && v1.cost_ok,
         vfmt("hanoi omega-10.6744 costs within $1000: fixed %+.1f, variable %+.1f of "
              "$6.097M/$6.109M",
              f1.cost_delta, v1.cost_delta));
  report("2b", f1.heads_ok && v1.heads_ok && f1.feasible && v1.feasible,
         vfmt("hanoi omega-10.6744 heads within ±0.1 m (max dev %+.3f / %+.3f) and every "
              "pressure head at or above 30 m",
              f1.max_head_dev, v1.max_head_dev));
  report("2c", f2.cost_ok && v2.cost_ok && f2.feasible && v2.feasible,
         vfmt("hanoi omega-10.5088 costs within $1000 of $6.056M/$6.065M: fixed %+.1f, "
              "variable %+.1f; both feasible",
              f2.cost_delta, v2.cost_delta));
  report("2d", f2.heads_ok && v2.heads_ok,
         vfmt("hanoi omega-10.5088 head columns within ±0.1 m: max dev %+.3f m (node %d) and "
              "%+.3f m (node %d) — the printed columns match no solve at either calibrated "
              "coefficient and behave like an intermediate coefficient near 10.588",
              f2.max_head_dev, f2.worst_node, v2.max_head_dev, v2.worst_node));
}

void criterion_3_new_york_references() {
  const Benchmark b = load_benchmark("new-york");
  const ReferenceCheck f1 = verify_reference(b.network, ref_named(b, "sta-fixed-w1"));
  const ReferenceCheck v1 = verify_reference(b.network, ref_named(b, "sta-variable-w1"));
  const ReferenceCheck v2 = verify_reference(b.network, ref_named(b, "sta-variable-w2"));
  const ReferenceCheck f2p = verify_reference(b.network, ref_named(b, "sta-fixed-w2-printed"));

  report("3a", f1.cost_ok && v1.cost_ok,
         vfmt("new-york omega-10.6744 cost within $10000 of $38.64M: %+.1f (fixed and variable "
              "print the identical design)",
              f1.cost_delta));
  report("3b", f1.heads_ok && f1.feasible,
         vfmt("new-york omega-10.6744 heads within ±0.1 ft (max dev %+.3f ft at node %d), all "
              "minimum total heads met",
              f1.max_head_dev, f1.worst_node));
  report("3c", v2.cost_ok,
         vfmt("new-york omega-10.5088 cost within $10000 of $37.13M: %+.1f on the variable-pc "
              "column (the fixed-pc column as printed prices %+.0f off its own cost row — its "
              "pipe-18 entry is inconsistent and the cost belongs to the variable-pc design)",
              v2.cost_delta, f2p.cost_delta));
  report("3d", v2.heads_ok,
         vfmt("new-york omega-10.5088 head column within ±0.1 ft: max dev %+.3f ft (node %d) — "
              "the printed column matches no solve at either calibrated coefficient and behaves "
              "like an intermediate coefficient near 10.565",
              v2.max_head_dev, v2.worst_node));
  report("3e", f1.feasible && v1.feasible && v2.feasible && f2p.feasible,
         "new-york: every printed design meets every minimum total head");
}

void criterion_4_comparison_designs() {
  const Benchmark hanoi = load_benchmark("hanoi");
  const ReferenceCheck sw1 = verify_reference(hanoi.network, ref_named(hanoi, "savic-walters"));
  const ReferenceCheck sw2 =
      verify_reference(hanoi.network, ref_named(hanoi, "savic-walters"), 10.5088);
  report("4a", sw1.cost_ok,
         vfmt("hanoi 6.073M comparison design within $2000: %+.1f (feasibility sign reported, "
              "not asserted: %s at 10.6744, %s at 10.5088)",
              sw1.cost_delta, sw1.feasible ? "feasible" : "infeasible",
              sw2.feasible ? "feasible" : "infeasible"));

  const Benchmark ny = load_benchmark("new-york");
  const ReferenceCheck gessler = verify_reference(ny.network, ref_named(ny, "gessler"));
  report("4b", gessler.cost_ok,
         vfmt("new-york 41.80M comparison design within $50000: %+.1f — the column uses "
              "100 in and 80 in, which are not catalog sizes; pricing them by linear "
              "interpolation between adjacent catalog entries cannot land closer",
              gessler.cost_delta));

  const ReferenceCheck mg = verify_reference(ny.network, ref_named(ny, "morgan-goulter"));
  const ReferenceCheck mgp =
      verify_reference(ny.network, ref_named(ny, "morgan-goulter-printed"));
  report("4c", mg.cost_ok,
         vfmt("new-york 39.20M comparison design within $50000: %+.1f on the cost-consistent "
              "variant (the column as printed prices %+.0f off its own cost row — its pipe-8 "
              "entry is inconsistent)",
              mg.cost_delta, mgp.cost_delta));
}

std::vector<RunResult> criterion_5_two_loop_search() {
  const Network net = load_benchmark("two-loop").network;
  SearchConfig config;
  config.se = 8;
  config.max_iterations = 200;
  config.seed = 7;
  const auto results = run_many(net, PenaltySchedule::fixed_pc(2e4), config, 20);
  const RunSetSummary s = summarize(results);

  report("5a", s.feasible_runs > 0 && s.best_feasible_objective == 419000.0,
         vfmt("two-loop search (se 8, pc 2e4, 200 iters, 20 runs, seed 7): best feasible "
              "design costs $%.0f — the exact optimum",
              s.best_feasible_objective));
  report("5b", s.feasibility_percent >= 60.0,
         vfmt("two-loop search: %.0f%% of runs produced a feasible design (threshold 60%%)",
              s.feasibility_percent));
  report("5c", s.feasible_runs > 0 && s.mean_feasible <= 4.6e5,
         vfmt("two-loop search: mean feasible cost %.4e <= 4.6e5 (spread %.4e)",
              s.mean_feasible, s.std_feasible));
  return results;
}

std::vector<RunResult> criterion_6_hanoi_search() {
  Network net = load_benchmark("hanoi").network;
  net.hw.omega = 10.5088;
  SearchConfig config;
  config.se = 20;
  config.max_iterations = 1000;
  config.seed = 7;
  const auto results = run_many(net, PenaltySchedule::fixed_pc(4e4), config, 20);
  const RunSetSummary s = summarize(results);

  const double target = 6.056e6;
  const double rel = s.feasible_runs > 0
                         ? std::abs(s.best_feasible_objective - target) / target
                         : 1.0;
  report("6a", rel <= 0.02,
         vfmt("hanoi search (se 20, pc 4e4, 1000 iters, 20 runs, seed 7, omega 10.5088): best "
              "feasible $%.2f is %.2f%% from the published $6.056M (window 2%%)",
              s.best_feasible_objective, 100.0 * rel));
  report("6b", s.feasibility_percent >= 50.0,
         vfmt("hanoi search: %.0f%% of runs produced a feasible design (threshold 50%%)",
              s.feasibility_percent));
  return results;
}

std::vector<RunResult> criterion_7_new_york_search() {
  const Network net = load_benchmark("new-york").network;
  SearchConfig config;
  config.se = 10;
  config.max_iterations = 2000;
  config.seed = 7;
  const auto results = run_many(net, PenaltySchedule::fixed_pc(2e6), config, 20);
  const RunSetSummary s = summarize(results);

  const double target = 38.64e6;
  const double rel = s.feasible_runs > 0
                         ? std::abs(s.best_feasible_objective - target) / target
                         : 1.0;
  report("7", rel <= 0.02,
         vfmt("new-york search (se 10, pc 2e6, 2000 iters, 20 runs, seed 7): best feasible "
              "$%.0f is %.4f%% from the published $38.64M (window 2%%)",
              s.best_feasible_objective, 100.0 * rel));
  return results;
}

void criterion_8_evaluation_accounting(const std::vector<const std::vector<RunResult>*>& batches,
                                       const std::vector<std::pair<int, int>>& shapes) {
  bool literal_form = true;   // se*(1+4*iters) + se
  bool actual_form = true;    // se*(1+4*iters)
  for (std::size_t i = 0; i < batches.size(); ++i) {
    const auto [se, iters] = shapes[i];
    const long long with_extra = static_cast<long long>(se) * (1 + 4 * iters) + se;
    const long long exact = static_cast<long long>(se) * (1 + 4 * iters);
    for (const RunResult& r : *batches[i]) {
      literal_form = literal_form && r.evaluations == with_extra;
      actual_form = actual_form && r.evaluations == exact;
    }
  }
  report("8a", literal_form,
         "evaluation counts equal se*(1+4*iters)+se on every run — they do not: the counter "
         "equals se*(1+4*iters) (one initialization batch plus four operator batches per "
         "iteration); the extra +se term counts the initialization batch twice and matches no "
         "evaluation the search performs");
  report("8b", actual_form,
         "evaluation counts equal se*(1+4*iters) exactly on every stochastic run above");

  // Reaching the two-loop optimum within 2048 evaluations is a reachable
  // outcome, demonstrated by a wider batch of the criterion-5 workload.
  const Network net = load_benchmark("two-loop").network;
  SearchConfig config;
  config.se = 8;
  config.max_iterations = 200;
  config.seed = 7;
  const auto wide = run_many(net, PenaltySchedule::fixed_pc(2e4), config, 100);
  long long fastest = -1;
  for (const RunResult& r : wide) {
    if (r.found_feasible && r.best_feasible_eval.objective == 419000.0) {
      if (fastest < 0 || r.evals_to_best_feasible < fastest) fastest = r.evals_to_best_feasible;
    }
  }
  report("8c", fastest > 0 && fastest <= 2048,
         vfmt("the published minimum-evaluations remark is a reachable statistic, not a "
              "guarantee: across 100 seeded runs the fastest hit of the $419,000 optimum came "
              "at evaluation %lld (<= 2048)",
              fastest));
}

void criterion_9_monte_carlo() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto cells = monte_carlo_study({0.1}, {0.1}, 1000, 10000, 1, 0);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const MonteCarloCell& c = cells.at(0);
  report("9", c.mean_gap >= 5e-4 && c.mean_gap <= 2e-3 && seconds < 60.0,
         vfmt("accept/restore probe (p1 0.1, p2 0.1, 1000 iters, 10000 runs): mean gap "
              "%.4e ± %.4e in [5e-4, 2e-3], consistent with the published 9.9254e-4 ± "
              "9.8274e-4 cell; %.2f s (< 60 s)",
              c.mean_gap, c.std_gap, seconds));
}

void criterion_10_properties(const std::vector<const std::vector<RunResult>*>& batches) {
  // 10a/10b: conservation on 200 random designs per benchmark.
  double worst_mass = 0.0;
  double worst_closure = 0.0;
  bool solved_all = true;
  for (const std::string& name : benchmark_names()) {
    const Network net = load_benchmark(name).network;
    Rng rng(20240819);
    for (int trial = 0; trial < 200; ++trial) {
      const Design d = random_design(net, rng);
      const HydraulicState state = solve_flows(net, d);
      if (!state.ok) {
        solved_all = false;
        continue;
      }
      worst_mass = std::max(worst_mass, mass_balance_error(net, state));
      worst_closure =
          std::max(worst_closure, head_consistency_error(net, arc_diameters(net, d), state));
    }
  }
  report("10a", solved_all && worst_mass <= 1e-9,
         vfmt("mass balance on 200 random designs per benchmark: worst node imbalance "
              "%.3e m3/s (<= 1e-9)",
              worst_mass));
  report("10b", solved_all && worst_closure <= 1e-7,
         vfmt("loop-energy closure on the same designs: worst per-arc mismatch %.3e m (<= 1e-7)",
              worst_closure));

  // 10c: spanning-tree construction order cannot change the solution.
  double worst_order_dev = 0.0;
  for (const std::string& name : benchmark_names()) {
    const Network net = load_benchmark(name).network;
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
      const Design d = random_design(net, rng);
      const HydraulicState a = solve_flows(net, d, {}, TraversalOrder::lowest_arc_id_bfs);
      const HydraulicState b = solve_flows(net, d, {}, TraversalOrder::highest_arc_id_bfs);
      const HydraulicState c = solve_flows(net, d, {}, TraversalOrder::lowest_arc_id_dfs);
      if (!a.ok || !b.ok || !c.ok) {
        solved_all = false;
        continue;
      }
      for (std::size_t i = 0; i < a.flows_m3s.size(); ++i) {
        worst_order_dev = std::max(worst_order_dev, std::abs(a.flows_m3s[i] - b.flows_m3s[i]));
        worst_order_dev = std::max(worst_order_dev, std::abs(a.flows_m3s[i] - c.flows_m3s[i]));
      }
      for (std::size_t i = 0; i < a.heads_m.size(); ++i) {
        worst_order_dev = std::max(worst_order_dev, std::abs(a.heads_m[i] - b.heads_m[i]));
        worst_order_dev = std::max(worst_order_dev, std::abs(a.heads_m[i] - c.heads_m[i]));
      }
    }
  }
  report("10c", solved_all && worst_order_dev <= 1e-6,
         vfmt("spanning-tree independence over 10 designs per benchmark and 3 construction "
              "orders: worst deviation %.3e (<= 1e-6)",
              worst_order_dev));

  // 10d: archive totals never worsen within any fixed-coefficient run above.
  bool monotone = true;
  int traced_runs = 0;
  for (const auto* batch : batches) {
    for (const RunResult& r : *batch) {
      ++traced_runs;
      for (std::size_t i = 1; i < r.trace.size(); ++i) {
        monotone = monotone && r.trace[i].archive_cost <= r.trace[i - 1].archive_cost + 1e-9;
      }
    }
  }
  report("10d", monotone,
         vfmt("archive monotonicity on every stochastic run above (%d fixed-coefficient traces)",
              traced_runs));

  // 10e: operators preserve the design multiset (swap/shift/symmetry) and
  // substitute perturbs uniformly (chi-square across position x value cells).
  bool closure_ok = true;
  {
    const Network net = load_benchmark("hanoi").network;
    Rng rng(5150);
    for (int trial = 0; trial < 50 && closure_ok; ++trial) {
      const Design d = random_design(net, rng);
      std::vector<int> base = d.indices;
      std::sort(base.begin(), base.end());
      auto is_permutation = [&](const std::vector<Design>& cands) {
        for (const Design& c : cands) {
          std::vector<int> s = c.indices;
          std::sort(s.begin(), s.end());
          if (s != base) return false;
        }
        return true;
      };
      closure_ok = closure_ok && is_permutation(op_swap(d, 4, 8, rng));
      closure_ok = closure_ok && is_permutation(op_shift(d, 3, 8, rng));
      closure_ok = closure_ok && is_permutation(op_symmetry(d, 2, 8, rng));
      for (const Design& c : op_substitute(d, 2, 8, rng, net.catalog.size())) {
        int changed = 0;
        for (std::size_t i = 0; i < c.indices.size(); ++i) {
          if (c.indices[i] != d.indices[i]) ++changed;
          closure_ok = closure_ok && c.indices[i] >= 1 && c.indices[i] <= net.catalog.size();
        }
        closure_ok = closure_ok && changed >= 1 && changed <= 2;
      }
    }
  }
  double chi2 = 0.0;
  {
    const Network net = load_benchmark("two-loop").network;  // catalog of 14
    Design d;
    d.indices.assign(8, 7);
    Rng rng(424242);
    std::map<std::pair<int, int>, long long> counts;
    const int samples = 52000;
    for (int i = 0; i < samples; i += 8) {
      for (const Design& c : op_substitute(d, 1, 8, rng, net.catalog.size())) {
        for (std::size_t p = 0; p < c.indices.size(); ++p) {
          if (c.indices[p] != d.indices[p]) ++counts[{static_cast<int>(p), c.indices[p]}];
        }
      }
    }
    const int cells = 8 * (net.catalog.size() - 1);  // 104 position x value pairs
    const double expected = static_cast<double>(samples) / cells;
    long long total = 0;
    for (int p = 0; p < 8; ++p) {
      for (int v = 1; v <= net.catalog.size(); ++v) {
        if (v == 7) continue;
        const long long n = counts[{p, v}];
        total += n;
        chi2 += (n - expected) * (n - expected) / expected;
      }
    }
    // df = 103; the 0.999 quantile is about 159.
    report("10e", closure_ok && total == samples && chi2 < 160.0,
           vfmt("operator closure holds on 50 random designs and single-position substitution "
                "is uniform: chi-square %.1f over 104 cells (threshold 160)",
                chi2));
  }

  // 10f: production flows against the closure-bisection oracle.
  double worst_oracle_dev = 0.0;
  {
    const Network net = load_benchmark("two-loop").network;
    Rng rng(31415);
    for (int trial = 0; trial < 10; ++trial) {
      const Design d = random_design(net, rng);
      const HydraulicState state = solve_flows(net, d);
      if (!state.ok) {
        solved_all = false;
        continue;
      }
      std::vector<double> diam(8, 0.0);
      const std::vector<double> all = arc_diameters(net, d);
      for (int i = 0; i < 8; ++i) diam[static_cast<std::size_t>(i)] = all[static_cast<std::size_t>(i)];
      const std::vector<double> oracle = two_loop_oracle_flows(diam, net.hw.omega);
      for (int i = 0; i < 8; ++i) {
        worst_oracle_dev = std::max(
            worst_oracle_dev,
            std::abs(state.flows_m3s[static_cast<std::size_t>(i)] - oracle[static_cast<std::size_t>(i)]));
      }
    }
  }
  report("10f", worst_oracle_dev <= 1e-4,
         vfmt("two-chord solver agrees with an independent nested-bisection oracle on 10 "
              "random designs: worst flow deviation %.3e m3/s (<= 1e-4)",
              worst_oracle_dev));
}

}  // namespace

int main() {
  std::printf("acceptance gate: published-benchmark reproduction and solver properties\n\n");

  criterion_1_two_loop_reference();
  criterion_2_hanoi_references();
  criterion_3_new_york_references();
  criterion_4_comparison_designs();

  const std::vector<RunResult> r5 = criterion_5_two_loop_search();
  const std::vector<RunResult> r6 = criterion_6_hanoi_search();
  const std::vector<RunResult> r7 = criterion_7_new_york_search();

  const std::vector<const std::vector<RunResult>*> batches = {&r5, &r6, &r7};
  criterion_8_evaluation_accounting(batches, {{8, 200}, {20, 1000}, {10, 2000}});
  criterion_9_monte_carlo();
  criterion_10_properties(batches);

  std::printf("\nacceptance: %d passed, %d failed", g_pass, g_fail);
  if (!g_failed.empty()) {
    std::printf(" [");
    for (std::size_t i = 0; i < g_failed.size(); ++i)
      std::printf("%s%s", i ? " " : "", g_failed[i].c_str());
    std::printf("]");
  }
  std::printf("\n");
  if (g_fail > 0) {
    std::printf("the failing criteria quote printed columns that are internally inconsistent "
                "or tied to an unstated intermediate head-loss coefficient; the measured "
                "numbers above show how far outside tolerance they land\n");
  }
  return g_fail > 0 ? 1 : 0;
}
