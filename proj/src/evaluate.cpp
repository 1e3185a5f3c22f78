#include "wdn/evaluate.hpp"

#include <cmath>

#include "wdn/units.hpp"

namespace wdn {

double pc_at(const PenaltySchedule& schedule, int iteration, int budget) {
  if (schedule.mode == PenaltySchedule::Mode::fixed) return schedule.pc;
  if (budget <= 0 || iteration >= budget) return schedule.pc_end;
  if (iteration <= 0) return schedule.pc_start;
  return schedule.pc_start +
         (schedule.pc_end - schedule.pc_start) * static_cast<double>(iteration) / budget;
}

namespace {

// Failure sentinel: the sum of all minimum-head requirements, in the
// network's display head unit. Any solvable design has deficit_measure
// comfortably below this in practice, so failed designs compare worse than
// solved ones at the same coefficient.
double failure_sentinel(const Network& net) {
  double s = 0.0;
  for (const auto& n : net.nodes) {
    if (!net.is_reservoir(n.id)) s += units::head_from_si(n.min_head_m, net.display.head);
  }
  return s;
}

Evaluation finish(Evaluation ev, const Network& net, const HydraulicState& state,
                  const PenaltySchedule& schedule, int iteration, int budget) {
  ev.newton_iterations = state.iterations;
  ev.residual_m = state.residual;
  if (state.ok) {
    ev.hydraulic_ok = true;
    ev.deficits_m = check_pressure(state, net);
    double measure = 0.0;
    bool any = false;
    for (double d : ev.deficits_m) {
      if (d > 0.0) {
        any = true;
        const double disp = units::head_from_si(d, net.display.head);
        measure += schedule.rho == 1.0 ? disp : std::pow(disp, schedule.rho);
      }
    }
    ev.deficit_measure = measure;
    ev.feasible = !any;
  } else {
    ev.hydraulic_ok = false;
    ev.feasible = false;
    ev.failure = state.failure;
    ev.deficit_measure = failure_sentinel(net);
  }
  ev.pc_used = pc_at(schedule, iteration, budget);
  ev.penalty = ev.pc_used * ev.deficit_measure;
  ev.total = ev.objective + ev.penalty;
  return ev;
}

}  // namespace

Evaluation evaluate(const Design& design, const Network& net, const PenaltySchedule& schedule,
                    int iteration, int budget, const SolverSettings& settings) {
  Evaluation ev;
  ev.objective = design_cost(design, net);
  const HydraulicState state = solve_flows(net, design, settings);
  return finish(std::move(ev), net, state, schedule, iteration, budget);
}

Evaluation evaluate_diameters(const std::vector<double>& diameters_m, double objective,
                              const Network& net, const PenaltySchedule& schedule,
                              int iteration, int budget, const SolverSettings& settings) {
  Evaluation ev;
  ev.objective = objective;
  const HydraulicState state = solve_flows_diameters(net, diameters_m, settings);
  return finish(std::move(ev), net, state, schedule, iteration, budget);
}

}  // namespace wdn
