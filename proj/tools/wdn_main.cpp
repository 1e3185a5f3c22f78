// Command-line driver: optimize / evaluate / verify / sweep / montecarlo
// over embedded benchmarks or sectioned network files.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wdn/benchmarks.hpp"
#include "wdn/montecarlo.hpp"
#include "wdn/parse.hpp"
#include "wdn/report.hpp"
#include "wdn/sta.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

struct LoadedNetwork {
  wdn::Network network;
  std::vector<wdn::ReferenceDesign> references;
  std::string source;  // "embedded:<name>" or the file path
  bool is_benchmark = false;
};

LoadedNetwork load_target(const std::string& target) {
  const auto names = wdn::benchmark_names();
  if (std::find(names.begin(), names.end(), target) != names.end()) {
    wdn::Benchmark b = wdn::load_benchmark(target);
    return {std::move(b.network), std::move(b.references), "embedded:" + target, true};
  }
  if (!std::filesystem::exists(target)) {
    throw std::invalid_argument("'" + target + "' is neither a benchmark name (" +
                                "two-loop, hanoi, new-york) nor an existing network file");
  }
  return {wdn::parse_network_file(target), {}, target, false};
}

void apply_omega(wdn::Network& net, const std::optional<double>& omega) {
  if (!omega) return;
  const double w = *omega;
  if (std::abs(w - 10.6744) > 1e-9 && std::abs(w - 10.5088) > 1e-9) {
    throw std::invalid_argument("--omega must be 10.6744 or 10.5088");
  }
  net.hw.omega = w;
}

wdn::PenaltySchedule make_schedule(const std::optional<double>& pc,
                                   const std::optional<std::string>& pc_linear) {
  if (pc && pc_linear) throw std::invalid_argument("--pc and --pc-linear are mutually exclusive");
  if (pc_linear) {
    const auto colon = pc_linear->find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("--pc-linear expects START:END, e.g. 1e4:1e5");
    }
    try {
      const double a = std::stod(pc_linear->substr(0, colon));
      const double b = std::stod(pc_linear->substr(colon + 1));
      return wdn::PenaltySchedule::linear_pc(a, b);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("--pc-linear expects START:END, e.g. 1e4:1e5");
    }
  }
  return wdn::PenaltySchedule::fixed_pc(pc.value_or(2e4));
}

std::vector<double> parse_double_list(const std::string& csv, const char* what) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw std::invalid_argument(std::string(what) + ": bad number '" + tok + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

std::filesystem::path ensure_out_dir(const std::string& out) {
  std::filesystem::path dir(out);
  std::filesystem::create_directories(dir);
  return dir;
}

// ---- optimize ------------------------------------------------------------

struct OptimizeArgs {
  std::string target;
  std::optional<double> omega;
  std::optional<double> pc;
  std::optional<std::string> pc_linear;
  int se = 8;
  int iters = 200;
  int runs = 20;
  std::uint64_t seed = 1;
  double p1 = 0.1;
  double p2 = 0.1;
  int jobs = 0;
  std::string out;
};

int cmd_optimize(const OptimizeArgs& args) {
  LoadedNetwork loaded = load_target(args.target);
  apply_omega(loaded.network, args.omega);
  const wdn::PenaltySchedule schedule = make_schedule(args.pc, args.pc_linear);

  wdn::SearchConfig config;
  config.se = args.se;
  config.max_iterations = args.iters;
  config.seed = args.seed;
  config.p1 = args.p1;
  config.p2 = args.p2;

  if (schedule.mode == wdn::PenaltySchedule::Mode::fixed) {
    std::printf("optimize %s: omega %.4f, pc %g, se %d, iters %d, runs %d, seed %llu\n",
                loaded.network.name.c_str(), loaded.network.hw.omega, schedule.pc, config.se,
                config.max_iterations, args.runs, static_cast<unsigned long long>(config.seed));
  } else {
    std::printf("optimize %s: omega %.4f, pc %g:%g, se %d, iters %d, runs %d, seed %llu\n",
                loaded.network.name.c_str(), loaded.network.hw.omega, schedule.pc_start,
                schedule.pc_end, config.se, config.max_iterations, args.runs,
                static_cast<unsigned long long>(config.seed));
  }

  const std::vector<wdn::RunResult> results =
      wdn::run_many(loaded.network, schedule, config, args.runs, args.jobs);

  std::vector<std::string> trace_paths(results.size());
  std::filesystem::path dir;
  if (!args.out.empty()) {
    dir = ensure_out_dir(args.out);
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto path = dir / ("trace-run" + std::to_string(results[i].run_index) + ".csv");
      wdn::write_text_file(path.string(), wdn::trace_csv(results[i].trace));
      trace_paths[i] = path.string();
    }
  }

  for (const wdn::RunResult& r : results) {
    std::string feas = "none";
    if (r.found_feasible) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.10g (evals %lld)", r.best_feasible_eval.objective,
                    r.evals_to_best_feasible);
      feas = buf;
    }
    std::printf("run %2d  seed %20llu  total %.10g  objective %.10g  feasible %s  "
                "best-feasible %s  evals %lld  to-best %lld  wall %.2fs\n",
                r.run_index, static_cast<unsigned long long>(r.seed), r.best_eval.total,
                r.best_eval.objective, r.best_eval.feasible ? "yes" : "no", feas.c_str(),
                r.evaluations, r.evals_to_best, r.wall_seconds);
  }

  const wdn::RunSetSummary s = wdn::summarize(results);
  std::printf("summary: best %.10g (run %d, %s)  |  %s\n", s.best_total, s.best_run,
              s.best_feasible ? "feasible" : "infeasible", wdn::summary_cell(s).c_str());
  if (s.feasible_runs > 0) {
    std::printf("summary: best feasible %.10g (run %d, evals %lld)\n", s.best_feasible_objective,
                s.best_feasible_run, s.best_feasible_evals);
  }

  if (!args.out.empty()) {
    const nlohmann::json j = wdn::run_report(loaded.network, loaded.source, schedule, config,
                                             args.runs, args.jobs, results, trace_paths);
    const auto path = dir / "report.json";
    wdn::write_text_file(path.string(), j.dump(2) + "\n");
    std::printf("report: %s\n", path.string().c_str());
  }
  return kExitOk;
}

// ---- evaluate ------------------------------------------------------------

struct EvaluateArgs {
  std::string target;
  std::optional<double> omega;
  std::optional<double> pc;
  std::string design;          // display-unit diameters, comma separated
  std::string design_indices;  // 1-based catalog indices, comma separated
  std::string design_file;     // whitespace-separated display-unit diameters
};

int cmd_evaluate(const EvaluateArgs& args) {
  LoadedNetwork loaded = load_target(args.target);
  apply_omega(loaded.network, args.omega);
  const wdn::Network& net = loaded.network;

  const int given = (!args.design.empty()) + (!args.design_indices.empty()) +
                    (!args.design_file.empty());
  if (given != 1) {
    throw std::invalid_argument(
        "exactly one of --design, --design-indices, --design-file is required");
  }

  wdn::Design design;
  if (!args.design_indices.empty()) {
    for (double v : parse_double_list(args.design_indices, "--design-indices")) {
      design.indices.push_back(static_cast<int>(v));
      if (v != std::floor(v)) throw std::invalid_argument("--design-indices: not an integer");
    }
    if (static_cast<int>(design.indices.size()) != net.decision_arc_count()) {
      throw std::invalid_argument("--design-indices: expected " +
                                  std::to_string(net.decision_arc_count()) + " entries");
    }
  } else {
    std::vector<double> diameters;
    if (!args.design.empty()) {
      diameters = parse_double_list(args.design, "--design");
    } else {
      std::ifstream f(args.design_file);
      if (!f) throw std::invalid_argument("cannot open design file: " + args.design_file);
      double v = 0.0;
      while (f >> v) diameters.push_back(v);
    }
    design = wdn::design_from_diameters(net, diameters);
  }

  const wdn::PenaltySchedule schedule = wdn::PenaltySchedule::fixed_pc(args.pc.value_or(2e4));
  const wdn::Evaluation eval = wdn::evaluate(design, net, schedule);
  const wdn::HydraulicState state = wdn::solve_flows(net, design);
  std::fputs(wdn::evaluation_report(net, eval, state).c_str(), stdout);
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::string& benchmark, const std::string& out) {
  wdn::Benchmark b = wdn::load_benchmark(benchmark);

  std::vector<wdn::ReferenceCheck> checks;
  for (const wdn::ReferenceDesign& ref : b.references) {
    if (!ref.evaluable || ref.omega > 0.0) {
      checks.push_back(wdn::verify_reference(b.network, ref));
      continue;
    }
    // Column does not state its head-loss coefficient: check under both and
    // count the reference as passing if either coefficient fits.
    wdn::ReferenceCheck c1 = wdn::verify_reference(b.network, ref, 10.6744);
    wdn::ReferenceCheck c2 = wdn::verify_reference(b.network, ref, 10.5088);
    const bool either = c1.pass || c2.pass;
    c1.pass = c2.pass = either;
    checks.push_back(std::move(c1));
    checks.push_back(std::move(c2));
  }

  std::fputs(wdn::verification_table(checks).c_str(), stdout);
  const bool all_pass =
      std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  std::printf("verify %s: %s\n", benchmark.c_str(), all_pass ? "PASS" : "FAIL");

  if (!out.empty()) {
    const auto dir = ensure_out_dir(out);
    const auto path = dir / "verify.json";
    wdn::write_text_file(path.string(), wdn::verification_json(benchmark, checks).dump(2) + "\n");
    std::printf("report: %s\n", path.string().c_str());
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string target;
  std::optional<double> omega;
  std::string se_grid = "8";
  std::string pc_grid = "2e4";
  int iters = 200;
  int runs = 20;
  std::uint64_t seed = 1;
  double p1 = 0.1;
  double p2 = 0.1;
  int jobs = 0;
  std::string out;
};

int cmd_sweep(const SweepArgs& args) {
  LoadedNetwork loaded = load_target(args.target);
  apply_omega(loaded.network, args.omega);

  std::vector<int> se_grid;
  for (double v : parse_double_list(args.se_grid, "--se-grid")) {
    se_grid.push_back(static_cast<int>(v));
  }

  // Each pc token is a constant ("2e4") or a linear ramp ("1e4:1e5").
  std::vector<std::pair<std::string, wdn::PenaltySchedule>> schedules;
  {
    std::stringstream ss(args.pc_grid);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      if (tok.find(':') != std::string::npos) {
        schedules.emplace_back(tok, make_schedule(std::nullopt, tok));
      } else {
        schedules.emplace_back(tok, make_schedule(std::stod(tok), std::nullopt));
      }
    }
    if (schedules.empty()) throw std::invalid_argument("--pc-grid: empty list");
  }

  std::vector<wdn::SweepRow> rows;
  int cell = 0;
  for (int se : se_grid) {
    for (const auto& [label, schedule] : schedules) {
      wdn::SearchConfig config;
      config.se = se;
      config.max_iterations = args.iters;
      config.p1 = args.p1;
      config.p2 = args.p2;
      // Every cell gets its own seed stream, derived from the master seed so
      // the whole grid is reproducible yet cells stay independent.
      config.seed = wdn::Rng::stream_seed(args.seed, static_cast<std::uint64_t>(cell++));
      const auto results = wdn::run_many(loaded.network, schedule, config, args.runs, args.jobs);
      rows.push_back({se, label, wdn::summarize(results)});
    }
  }

  const std::string csv = wdn::sweep_csv(rows);
  std::fputs(csv.c_str(), stdout);
  if (!args.out.empty()) {
    const auto dir = ensure_out_dir(args.out);
    const auto path = dir / "sweep.csv";
    wdn::write_text_file(path.string(), csv);
    std::printf("report: %s\n", path.string().c_str());
  }
  return kExitOk;
}

// ---- montecarlo ------------------------------------------------------------

struct MonteCarloArgs {
  std::string p1_grid = "0.1,0.3,0.5,0.7,0.9";
  std::string p2_grid = "0.1,0.3,0.5,0.7,0.9";
  int iters = 1000;
  long long runs = 10000;
  std::uint64_t seed = 1;
  int jobs = 0;
  std::string out;
};

int cmd_montecarlo(const MonteCarloArgs& args) {
  const auto p1 = parse_double_list(args.p1_grid, "--p1-grid");
  const auto p2 = parse_double_list(args.p2_grid, "--p2-grid");
  const auto cells = wdn::monte_carlo_study(p1, p2, args.iters, args.runs, args.seed, args.jobs);
  const std::string csv = wdn::montecarlo_csv(cells);
  std::fputs(csv.c_str(), stdout);
  if (!args.out.empty()) {
    const auto dir = ensure_out_dir(args.out);
    const auto path = dir / "montecarlo.csv";
    wdn::write_text_file(path.string(), csv);
    std::printf("report: %s\n", path.string().c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Looped water-network hydraulics and least-cost pipe sizing"};
  app.require_subcommand(1);

  OptimizeArgs opt;
  CLI::App* optimize = app.add_subcommand("optimize", "Run seeded searches and report the best design");
  optimize->add_option("target", opt.target, "benchmark name or network file")->required();
  optimize->add_option("--omega", opt.omega, "head-loss coefficient (10.6744 or 10.5088)");
  optimize->add_option("--pc", opt.pc, "fixed penalty coefficient (default 2e4)");
  optimize->add_option("--pc-linear", opt.pc_linear, "linear penalty ramp START:END");
  optimize->add_option("--se", opt.se, "candidates per operator application (default 8)");
  optimize->add_option("--iters", opt.iters, "iterations per run (default 200)");
  optimize->add_option("--runs", opt.runs, "independent seeded runs (default 20)");
  optimize->add_option("--seed", opt.seed, "master seed (default 1)");
  optimize->add_option("--p1", opt.p1, "restore probability (default 0.1)");
  optimize->add_option("--p2", opt.p2, "risk probability (default 0.1)");
  optimize->add_option("--jobs", opt.jobs, "worker threads (default: logical cores)");
  optimize->add_option("--out", opt.out, "directory for report.json and per-run trace CSVs");

  EvaluateArgs ev;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Evaluate one design and print its head table");
  evaluate->add_option("target", ev.target, "benchmark name or network file")->required();
  evaluate->add_option("--omega", ev.omega, "head-loss coefficient (10.6744 or 10.5088)");
  evaluate->add_option("--pc", ev.pc, "penalty coefficient for the printout (default 2e4)");
  evaluate->add_option("--design", ev.design, "comma-separated diameters in display units");
  evaluate->add_option("--design-indices", ev.design_indices, "comma-separated 1-based catalog indices");
  evaluate->add_option("--design-file", ev.design_file, "file of whitespace-separated diameters");

  std::string verify_benchmark, verify_out;
  CLI::App* verify = app.add_subcommand("verify", "Re-evaluate published reference designs");
  verify->add_option("benchmark", verify_benchmark, "two-loop, hanoi, or new-york")->required();
  verify->add_option("--out", verify_out, "directory for verify.json");

  SweepArgs sw;
  CLI::App* sweep = app.add_subcommand("sweep", "Grid of (se, pc) cells, each a set of seeded runs");
  sweep->add_option("target", sw.target, "benchmark name or network file")->required();
  sweep->add_option("--omega", sw.omega, "head-loss coefficient (10.6744 or 10.5088)");
  sweep->add_option("--se-grid", sw.se_grid, "comma-separated se values (default 8)");
  sweep->add_option("--pc-grid", sw.pc_grid, "comma-separated pc values; A:B means a linear ramp");
  sweep->add_option("--iters", sw.iters, "iterations per run (default 200)");
  sweep->add_option("--runs", sw.runs, "runs per cell (default 20)");
  sweep->add_option("--seed", sw.seed, "master seed (default 1)");
  sweep->add_option("--p1", sw.p1, "restore probability (default 0.1)");
  sweep->add_option("--p2", sw.p2, "risk probability (default 0.1)");
  sweep->add_option("--jobs", sw.jobs, "worker threads (default: logical cores)");
  sweep->add_option("--out", sw.out, "directory for sweep.csv");

  MonteCarloArgs mc;
  CLI::App* montecarlo = app.add_subcommand("montecarlo", "Abstract accept/restore probe over a (p1, p2) grid");
  montecarlo->add_option("--p1-grid", mc.p1_grid, "comma-separated p1 values");
  montecarlo->add_option("--p2-grid", mc.p2_grid, "comma-separated p2 values");
  montecarlo->add_option("--iters", mc.iters, "iterations per run (default 1000)");
  montecarlo->add_option("--runs", mc.runs, "runs per cell (default 10000)");
  montecarlo->add_option("--seed", mc.seed, "master seed (default 1)");
  montecarlo->add_option("--jobs", mc.jobs, "worker threads (default: logical cores)");
  montecarlo->add_option("--out", mc.out, "directory for montecarlo.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (optimize->parsed()) return cmd_optimize(opt);
    if (evaluate->parsed()) return cmd_evaluate(ev);
    if (verify->parsed()) return cmd_verify(verify_benchmark, verify_out);
    if (sweep->parsed()) return cmd_sweep(sw);
    if (montecarlo->parsed()) return cmd_montecarlo(mc);
  } catch (const wdn::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
