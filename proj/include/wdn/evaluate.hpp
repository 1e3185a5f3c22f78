#pragma once

#include <string>
#include <vector>

#include "wdn/hydraulics.hpp"
#include "wdn/network.hpp"

namespace wdn {

// Penalty coefficient schedule: a constant, or a linear ramp across the
// iteration budget.
struct PenaltySchedule {
  enum class Mode { fixed, linear };
  Mode mode = Mode::fixed;
  double pc = 2e4;       // Mode::fixed
  double pc_start = 0.0; // Mode::linear
  double pc_end = 0.0;
  double rho = 1.0;      // deficit exponent

  static PenaltySchedule fixed_pc(double pc) {
    PenaltySchedule s;
    s.mode = Mode::fixed;
    s.pc = pc;
    return s;
  }
  static PenaltySchedule linear_pc(double start, double end) {
    PenaltySchedule s;
    s.mode = Mode::linear;
    s.pc_start = start;
    s.pc_end = end;
    return s;
  }
};

// Coefficient in effect at `iteration` of a run with `budget` iterations.
// Fixed mode ignores both arguments; linear mode interpolates
// pc_start + (pc_end - pc_start) * iteration / budget, clamped to pc_end
// past the budget (and for budget <= 0).
double pc_at(const PenaltySchedule& schedule, int iteration, int budget);

// Cost breakdown of one design. The parts are penalty-free raw measures so a
// total can be recombined at any coefficient without re-solving:
//   total_at(pc) = objective + pc * deficit_measure
// where deficit_measure is sum(deficit^rho) for a solved design, and the
// failure sentinel sum(min heads) when hydraulics failed — the latter
// dominates every same-pc deficit profile, keeping failures ordered last.
// Deficits enter the measure in the network's *display* head unit (the unit
// the benchmark's published penalty coefficients are calibrated to: metres
// for the metric networks, feet for the imperial one); the per-node deficits
// vector stays in metres like every other stored head quantity.
struct Evaluation {
  double objective = 0.0;        // pipe cost, currency
  double deficit_measure = 0.0;  // sum(deficit^rho) or the failure sentinel
  bool hydraulic_ok = false;
  bool feasible = false;         // hydraulic_ok and zero deficit everywhere

  double pc_used = 0.0;          // coefficient at the evaluated iteration
  double penalty = 0.0;          // pc_used * deficit_measure
  double total = 0.0;            // objective + penalty

  std::vector<double> deficits_m;  // per node; empty when hydraulics failed
  int newton_iterations = 0;
  double residual_m = 0.0;
  std::string failure;             // non-empty when hydraulic_ok is false

  double total_at(double pc) const { return objective + pc * deficit_measure; }
};

Evaluation evaluate(const Design& design, const Network& net, const PenaltySchedule& schedule,
                    int iteration = 0, int budget = 0, const SolverSettings& settings = {});

// Same on explicit per-arc diameters; objective must be supplied by the
// caller (off-catalog reference designs price themselves).
Evaluation evaluate_diameters(const std::vector<double>& diameters_m, double objective,
                              const Network& net, const PenaltySchedule& schedule,
                              int iteration = 0, int budget = 0,
                              const SolverSettings& settings = {});

}  // namespace wdn
