#include "wdn/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace wdn {
namespace {

std::string fmt(const char* format, ...) {
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

const char* operator_name(int op) {
  switch (op) {
    case 0: return "swap";
    case 1: return "shift";
    case 2: return "symmetry";
    case 3: return "substitute";
    default: return "none";
  }
}

}  // namespace

std::string trace_csv(const std::vector<TraceRow>& trace) {
  std::string out = kTraceHeader;
  out += '\n';
  for (const TraceRow& row : trace) {
    out += fmt("%d,%.17g,%.17g,%.17g,%d\n", row.iteration, row.archive_cost, row.working_cost,
               row.pc, row.feasible ? 1 : 0);
  }
  return out;
}

RunSetSummary summarize(const std::vector<RunResult>& results) {
  RunSetSummary s;
  s.runs = static_cast<int>(results.size());
  if (results.empty()) {
    s.mean_feasible = std::numeric_limits<double>::quiet_NaN();
    s.std_feasible = std::numeric_limits<double>::quiet_NaN();
    return s;
  }

  std::vector<double> feasible_costs;
  for (const RunResult& r : results) {
    if (s.best_run < 0 || r.best_eval.total < s.best_total) {
      s.best_run = r.run_index;
      s.best_total = r.best_eval.total;
      s.best_objective = r.best_eval.objective;
      s.best_feasible = r.best_eval.feasible;
      s.best_evals_to_best = r.evals_to_best;
    }
    if (!r.found_feasible) continue;
    feasible_costs.push_back(r.best_feasible_eval.objective);
    if (s.best_feasible_run < 0 ||
        r.best_feasible_eval.objective < s.best_feasible_objective) {
      s.best_feasible_run = r.run_index;
      s.best_feasible_objective = r.best_feasible_eval.objective;
      s.best_feasible_evals = r.evals_to_best_feasible;
    }
  }
  s.feasible_runs = static_cast<int>(feasible_costs.size());
  s.feasibility_percent = 100.0 * s.feasible_runs / s.runs;

  if (feasible_costs.empty()) {
    s.mean_feasible = std::numeric_limits<double>::quiet_NaN();
    s.std_feasible = std::numeric_limits<double>::quiet_NaN();
  } else {
    double sum = 0.0;
    for (double c : feasible_costs) sum += c;
    s.mean_feasible = sum / static_cast<double>(feasible_costs.size());
    if (feasible_costs.size() == 1) {
      s.std_feasible = 0.0;
    } else {
      double ss = 0.0;
      for (double c : feasible_costs) ss += (c - s.mean_feasible) * (c - s.mean_feasible);
      s.std_feasible = std::sqrt(ss / static_cast<double>(feasible_costs.size() - 1));
    }
  }
  return s;
}

std::string summary_cell(const RunSetSummary& s) {
  if (s.feasible_runs == 0) return fmt("n/a (%.0f%%)", s.feasibility_percent);
  return fmt("%.4e ± %.4e (%.0f%%)", s.mean_feasible, s.std_feasible, s.feasibility_percent);
}

nlohmann::json run_report(const Network& net, const std::string& network_source,
                          const PenaltySchedule& schedule, const SearchConfig& config, int runs,
                          int jobs, const std::vector<RunResult>& results,
                          const std::vector<std::string>& trace_paths) {
  nlohmann::json j;
  j["command"] = "optimize";
  j["network"] = {
      {"name", net.name},
      {"source", network_source},
      {"nodes", net.nodes.size()},
      {"arcs", net.arcs.size()},
      {"decision_arcs", net.decision_arc_count()},
      {"catalog_size", net.catalog.size()},
      {"omega", net.hw.omega},
      {"alpha", net.hw.alpha},
      {"beta", net.hw.beta},
  };
  j["units"] = {
      {"flow", units::to_token(net.display.flow)},
      {"length", units::to_token(net.display.length)},
      {"diameter", units::to_token(net.display.diameter)},
      {"head", units::to_token(net.display.head)},
      {"cost", units::to_token(net.display.cost)},
  };
  nlohmann::json penalty;
  if (schedule.mode == PenaltySchedule::Mode::fixed) {
    penalty = {{"mode", "fixed"}, {"pc", schedule.pc}};
  } else {
    penalty = {{"mode", "linear"}, {"pc_start", schedule.pc_start}, {"pc_end", schedule.pc_end}};
  }
  penalty["rho"] = schedule.rho;
  j["config"] = {
      {"se", config.se},
      {"p1", config.p1},
      {"p2", config.p2},
      {"m_a", config.m_a},
      {"m_b", config.m_b},
      {"m_c", config.m_c},
      {"m_d", config.m_d},
      {"iterations", config.max_iterations},
      {"runs", runs},
      {"seed", config.seed},
      {"jobs", jobs},
      {"penalty", penalty},
  };

  j["runs"] = nlohmann::json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const RunResult& r = results[i];
    nlohmann::json run;
    run["run"] = r.run_index;
    run["seed"] = r.seed;
    run["best_indices"] = r.best.indices;
    std::vector<double> diameters;
    diameters.reserve(r.best.indices.size());
    for (int idx : r.best.indices) {
      diameters.push_back(
          units::diameter_from_si(net.catalog.entry(idx).diameter_m, net.display.diameter));
    }
    run["best_diameters"] = diameters;
    run["objective"] = r.best_eval.objective;
    run["penalty"] = r.best_eval.penalty;
    run["total"] = r.best_eval.total;
    run["feasible"] = r.best_eval.feasible;
    run["hydraulic_ok"] = r.best_eval.hydraulic_ok;
    run["evaluations"] = r.evaluations;
    run["evals_to_best"] = r.evals_to_best;
    run["found_feasible"] = r.found_feasible;
    if (r.found_feasible) {
      run["best_feasible"] = {
          {"indices", r.best_feasible.indices},
          {"objective", r.best_feasible_eval.objective},
          {"evals_to_best_feasible", r.evals_to_best_feasible},
      };
    }
    run["wall_seconds"] = r.wall_seconds;
    if (i < trace_paths.size() && !trace_paths[i].empty()) run["trace"] = trace_paths[i];
    j["runs"].push_back(std::move(run));
  }

  const RunSetSummary s = summarize(results);
  j["summary"] = {
      {"runs", s.runs},
      {"feasible_runs", s.feasible_runs},
      {"feasibility_percent", s.feasibility_percent},
      {"best_run", s.best_run},
      {"best_total", s.best_total},
      {"best_objective", s.best_objective},
      {"best_feasible", s.best_feasible},
      {"best_evals_to_best", s.best_evals_to_best},
      {"cell", summary_cell(s)},
  };
  if (s.feasible_runs > 0) {
    j["summary"]["mean_feasible"] = s.mean_feasible;
    j["summary"]["std_feasible"] = s.std_feasible;
    j["summary"]["best_feasible_run"] = s.best_feasible_run;
    j["summary"]["best_feasible_objective"] = s.best_feasible_objective;
    j["summary"]["best_feasible_evals"] = s.best_feasible_evals;
  }
  return j;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "se,pc,best_total,best_feasible,mean_feasible,std_feasible,feasible_runs,runs\n";
  for (const SweepRow& row : rows) {
    const RunSetSummary& s = row.summary;
    out += fmt("%d,%s,%.17g,%d,", row.se, row.pc_label.c_str(), s.best_total,
               s.best_feasible ? 1 : 0);
    if (s.feasible_runs > 0) {
      out += fmt("%.17g,%.17g,", s.mean_feasible, s.std_feasible);
    } else {
      out += ",,";
    }
    out += fmt("%d,%d\n", s.feasible_runs, s.runs);
  }
  return out;
}

std::string montecarlo_csv(const std::vector<MonteCarloCell>& cells) {
  std::string out = "p1,p2,mean_gap,std_gap,iterations,runs\n";
  for (const MonteCarloCell& c : cells) {
    out += fmt("%.17g,%.17g,%.17g,%.17g,%d,%lld\n", c.p1, c.p2, c.mean_gap, c.std_gap,
               c.iterations, c.runs);
  }
  return out;
}

std::string verification_table(const std::vector<ReferenceCheck>& checks) {
  std::string out;
  out += fmt("%-26s %-9s %6s %14s %14s %10s %5s %5s %s\n", "reference", "omega", "pass", "cost",
             "published", "delta", "heads", "feas", "notes");
  for (const ReferenceCheck& c : checks) {
    if (c.skipped) {
      out += fmt("%-26s %-9s %6s %14s %14.0f %10s %5s %5s %s\n", c.name.c_str(), "-", "skip", "-",
                 c.published_cost, "-", "-", "-", c.note.c_str());
      continue;
    }
    std::string heads = "-";
    if (c.has_heads) heads = fmt("%s", c.heads_ok ? "ok" : "FAIL");
    std::string headnote;
    if (c.has_heads) {
      headnote = fmt("max head dev %+.3f at node %d", c.max_head_dev, c.worst_node);
      if (!c.note.empty()) headnote += "; ";
    }
    out += fmt("%-26s %-9.4f %6s %14.1f %14.0f %+10.1f %5s %5s %s%s\n", c.name.c_str(),
               c.omega_used, c.pass ? "ok" : "FAIL", c.computed_cost, c.published_cost,
               c.cost_delta, heads.c_str(), c.feasible ? "yes" : "no", headnote.c_str(),
               c.note.c_str());
  }
  return out;
}

nlohmann::json verification_json(const std::string& benchmark,
                                 const std::vector<ReferenceCheck>& checks) {
  nlohmann::json j;
  j["command"] = "verify";
  j["benchmark"] = benchmark;
  j["references"] = nlohmann::json::array();
  bool all_pass = true;
  for (const ReferenceCheck& c : checks) {
    nlohmann::json r;
    r["name"] = c.name;
    r["source"] = c.source;
    r["pass"] = c.pass;
    r["skipped"] = c.skipped;
    r["off_catalog"] = c.off_catalog;
    r["published_cost"] = c.published_cost;
    if (!c.skipped) {
      r["omega"] = c.omega_used;
      r["computed_cost"] = c.computed_cost;
      r["cost_delta"] = c.cost_delta;
      r["cost_ok"] = c.cost_ok;
      r["hydraulic_ok"] = c.hydraulic_ok;
      r["feasible"] = c.feasible;
      r["max_deficit"] = c.max_deficit_disp;
      if (c.has_heads) {
        r["heads_ok"] = c.heads_ok;
        r["max_head_dev"] = c.max_head_dev;
        r["worst_node"] = c.worst_node;
        nlohmann::json heads = nlohmann::json::array();
        for (std::size_t i = 0; i < c.computed_heads.size(); ++i) {
          heads.push_back({{"node", c.computed_heads[i].first},
                           {"computed", c.computed_heads[i].second},
                           {"delta", c.head_devs[i].second}});
        }
        r["heads"] = std::move(heads);
      }
    }
    if (!c.note.empty()) r["note"] = c.note;
    all_pass = all_pass && c.pass;
    j["references"].push_back(std::move(r));
  }
  j["all_pass"] = all_pass;
  return j;
}

std::string evaluation_report(const Network& net, const Evaluation& eval,
                              const HydraulicState& state) {
  std::string out;
  out += fmt("objective  %.2f\n", eval.objective);
  out += fmt("penalty    %.2f (pc %.17g)\n", eval.penalty, eval.pc_used);
  out += fmt("total      %.2f\n", eval.total);
  out += fmt("hydraulics %s\n", eval.hydraulic_ok ? "converged" : eval.failure.c_str());
  if (eval.hydraulic_ok) {
    out += fmt("newton     %d iterations, residual %.3e m\n", eval.newton_iterations,
               eval.residual_m);
  }
  out += fmt("feasible   %s\n", eval.feasible ? "yes" : "no");
  if (!eval.hydraulic_ok) return out;

  const char* head_unit = net.display.head == units::HeadUnit::m ? "m" : "ft";
  out += fmt("\n%6s %12s %12s %12s %12s\n", "node", "total_head", "measure", "required",
             "deficit");
  for (std::size_t p = 0; p < net.nodes.size(); ++p) {
    const NodeRecord& n = net.nodes[p];
    const double head = units::head_from_si(state.heads_m[p], net.display.head);
    double measure = state.heads_m[p];
    if (n.min_head_kind == MinHeadKind::pressure_above_ground) measure -= n.ground_m;
    const double measure_disp = units::head_from_si(measure, net.display.head);
    const double required = units::head_from_si(n.min_head_m, net.display.head);
    const double deficit =
        eval.deficits_m.empty() ? 0.0 : units::head_from_si(eval.deficits_m[p], net.display.head);
    out += fmt("%6d %12.2f %12.2f %12.2f %12.2f", n.id, head, measure_disp, required, deficit);
    if (net.is_reservoir(n.id)) out += "  (reservoir)";
    out += fmt("  [%s]\n", head_unit);
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace wdn
