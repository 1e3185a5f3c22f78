#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdn/evaluate.hpp"
#include "wdn/network.hpp"

namespace wdn {

// A published design for one of the embedded benchmark networks, kept exactly
// as the source table prints it (diameters in the benchmark's display unit,
// costs in dollars). Some columns are annotations only: split-pipe solutions
// assign two diameters to one pipe and cannot be expressed as a Design.
struct ReferenceDesign {
  std::string name;    // short slug, unique within a benchmark ("sta-fixed-w1")
  std::string source;  // human label for the column ("Savic-Walters")

  // Diameter per decision arc, in the benchmark's display diameter unit
  // (inches for all three shipped benchmarks); 0 means "no parallel pipe".
  // Empty for annotation-only columns.
  std::vector<double> diameters_display;

  double published_cost = 0.0;  // dollars, as printed in the source table

  // Published head measure per node, in the benchmark's display head unit.
  // The measure matches each node's minimum-head kind: height above ground
  // where the requirement is a pressure head, total head otherwise.
  std::vector<std::pair<int, double>> published_heads;  // (node id, value)

  // The head-loss coefficient the published head column states it used;
  // 0 when the source does not say. Head comparisons participate in
  // pass/fail only when this is stated.
  double omega = 0.0;

  bool evaluable = true;     // false for split-pipe annotation columns
  bool off_catalog = false;  // true when some diameter is not a catalog entry

  double cost_tolerance = 0.0;  // dollars; pinned per reference
  double head_tolerance = 0.0;  // display head units; pinned per reference

  std::string note;  // transcription caveats (typos, inconsistent cost rows)
};

struct Benchmark {
  Network network;
  std::vector<ReferenceDesign> references;
};

// Names accepted by load_benchmark, in canonical order.
std::vector<std::string> benchmark_names();

// Build one of the embedded benchmark networks together with its published
// reference designs. Throws std::invalid_argument for an unknown name.
Benchmark load_benchmark(const std::string& name);

// Unit cost (per metre, SI) for a diameter, linearly interpolated between
// adjacent catalog entries; exact at catalog diameters. Used to price
// off-catalog reference designs. Throws std::out_of_range when the diameter
// lies outside the catalog's range (a zero diameter always prices at zero).
double interpolated_unit_cost(const DiameterCatalog& catalog, double diameter_m);

// Price a per-arc diameter assignment against the catalog with interpolation.
// Fixed arcs cost nothing; decision arcs are priced by their diameter.
double interpolated_design_cost(const Network& net, const std::vector<double>& decision_diameters_m);

// Outcome of re-evaluating one published reference design.
struct ReferenceCheck {
  std::string name;
  std::string source;
  std::string note;

  bool evaluable = false;
  bool off_catalog = false;
  bool skipped = false;  // annotation-only column: nothing to evaluate

  double omega_used = 0.0;

  double computed_cost = 0.0;  // dollars (interpolated pricing for off-catalog)
  double published_cost = 0.0;
  double cost_delta = 0.0;  // computed - published
  bool cost_ok = false;

  bool has_heads = false;  // a stated-omega head column was compared
  double max_head_dev = 0.0;
  int worst_node = 0;
  bool heads_ok = false;
  std::vector<std::pair<int, double>> computed_heads;  // (node id, display units)
  std::vector<std::pair<int, double>> head_devs;       // computed - published

  bool hydraulic_ok = false;
  bool feasible = false;          // reported, never part of pass/fail
  double max_deficit_disp = 0.0;  // display head units

  bool pass = false;  // cost_ok && (heads_ok || !has_heads); true when skipped
};

// Re-evaluate a published design with the hydraulic solver and compare cost,
// heads, and feasibility against the printed values. `omega_override`, when
// positive, replaces the reference's stated omega (falling back to the
// network default when neither is stated).
ReferenceCheck verify_reference(const Network& net, const ReferenceDesign& ref,
                                double omega_override = 0.0);

// Map display-unit diameters (one per decision arc; must all be catalog
// entries) to a catalog-index Design. Throws std::invalid_argument when a
// diameter is absent from the catalog or the count is wrong.
Design design_from_diameters(const Network& net, const std::vector<double>& diameters_display);

}  // namespace wdn
