#pragma once

#include <string>
#include <vector>

#include "wdn/units.hpp"

namespace wdn {

// Which kind of head floor a node carries. Exactly one applies per node.
enum class MinHeadKind {
  pressure_above_ground,  // requirement on H - ground_level
  total_head,             // requirement on H itself
};

struct NodeRecord {
  int id = 0;
  double demand_m3s = 0.0;   // positive = withdrawal at the node
  double ground_m = 0.0;     // ground elevation
  MinHeadKind min_head_kind = MinHeadKind::pressure_above_ground;
  double min_head_m = 0.0;   // metres of pressure head, or metres of total head

  bool operator==(const NodeRecord&) const = default;
};

struct Reservoir {
  int node_id = 0;
  double fixed_head_m = 0.0;  // hydraulic grade line

  bool operator==(const Reservoir&) const = default;
};

enum class ArcKind {
  decision,            // diameter chosen from the catalog by a Design index
  fixed,               // diameter given in the file, never changed
  parallel_candidate,  // decision arc duplicating an existing fixed arc
};

struct PipeArc {
  int id = 0;
  int from = 0;
  int to = 0;
  double length_m = 0.0;
  double roughness_c = 0.0;   // Hazen-Williams roughness coefficient
  ArcKind kind = ArcKind::decision;
  // fixed: the pipe's diameter. parallel_candidate: the diameter of the
  // existing pipe this arc parallels (informational). decision: 0.
  double given_diameter_m = 0.0;

  bool operator==(const PipeArc&) const = default;
};

struct CatalogEntry {
  double diameter_m = 0.0;
  double unit_cost_per_m = 0.0;

  bool operator==(const CatalogEntry&) const = default;
};

// Commercial pipe sizes, strictly increasing diameters, non-decreasing costs.
// Indices are 1-based everywhere (a Design holds values in 1..size()).
struct DiameterCatalog {
  std::vector<CatalogEntry> entries;

  int size() const { return static_cast<int>(entries.size()); }
  const CatalogEntry& entry(int index_1based) const {
    return entries.at(static_cast<std::size_t>(index_1based - 1));
  }

  bool operator==(const DiameterCatalog&) const = default;
};

// Hazen-Williams head-loss model h = r * Q * |Q|^(alpha-1),
// r = omega * L / (C^alpha * D^beta), SI units.
struct HazenWilliams {
  double omega = 10.6744;  // alternative SI convention: 10.5088
  double alpha = 1.852;
  double beta = 4.871;

  bool operator==(const HazenWilliams&) const = default;
};

struct Network {
  std::string name;
  std::vector<NodeRecord> nodes;   // file order
  std::vector<Reservoir> reservoirs;
  std::vector<PipeArc> arcs;       // file order; defines Design ordering
  DiameterCatalog catalog;
  HazenWilliams hw;
  units::UnitSet display;          // units the file used / output should prefer

  // Positions (into arcs) of arcs a Design assigns, in file order.
  std::vector<int> decision_arc_positions;

  int node_pos(int id) const;      // -1 when the id is unknown
  bool is_reservoir(int id) const;
  int decision_arc_count() const {
    return static_cast<int>(decision_arc_positions.size());
  }

  bool operator==(const Network&) const = default;
};

// One catalog index (1-based) per decision arc, in Network decision order.
struct Design {
  std::vector<int> indices;

  bool operator==(const Design&) const = default;
};

// Head-loss resistance r = omega * L / (C^alpha * D^beta).
// Throws std::invalid_argument for diameter <= 0: a zero diameter means the
// arc is closed and must be removed from the hydraulic graph by the caller,
// never fed to this formula.
double resistance_factor(const PipeArc& arc, double diameter_m, const Network& net);

// Total pipe cost: sum over decision arcs of length * unit cost of the
// selected catalog entry. Fixed arcs contribute nothing.
// Throws std::out_of_range for indices outside 1..catalog size.
double design_cost(const Design& design, const Network& net);

// Effective diameter of every arc (by arc position) under a design:
// fixed arcs keep their given diameter, decision arcs get the catalog value.
// A zero entry marks a closed arc.
std::vector<double> arc_diameters(const Network& net, const Design& design);

// Dimension of the cycle space of the hydraulic multigraph (zero-diameter
// arcs removed, all reservoirs merged into one source vertex):
// |arcs| - |vertices| + |connected components|.
int cycle_space_dimension(const Network& net, const std::vector<double>& diameters_m);

// Structural validation shared by the parser and the embedded benchmarks:
// ids unique, endpoints exist, lengths/roughness positive, catalog strictly
// increasing in diameter with non-decreasing costs, at least one reservoir,
// graph connected, single-reservoir demand balance. Throws
// std::invalid_argument with a descriptive message on the first violation.
void validate_network(const Network& net);

// Design with every index at the given catalog value.
Design uniform_design(const Network& net, int index_1based);

}  // namespace wdn
