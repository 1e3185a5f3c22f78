#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "wdn/network.hpp"

namespace wdn {

// Spanning-tree construction order. All orders must yield identical flows and
// heads (path-independence of the solution); alternatives exist to test that.
enum class TraversalOrder {
  lowest_arc_id_bfs,   // canonical order used everywhere by default
  highest_arc_id_bfs,
  lowest_arc_id_dfs,
};

struct SolverSettings {
  double tolerance = 1e-8;   // metres, on max |loop residual|
  int max_iterations = 100;  // Newton steps
  int max_halvings = 30;     // step-halving line search depth
  double q_epsilon = 1e-10;  // m³/s, derivative regularizer at Q = 0
};

// Reduction of continuity to cycle-space dimension: a spanning tree of the
// merged-reservoir multigraph fixes every arc flow as an affine function of
// the chord flows,  Q = base + coeff · q_chords,  with coeff entries in
// {-1, 0, +1}; one energy equation per chord closes the system.
struct FlowDecomposition {
  std::vector<char> active;       // per arc position: diameter > 0
  std::vector<int> tree_arcs;     // arc positions, in tree-construction order
  std::vector<int> chords;        // arc positions, ascending arc id
  Eigen::VectorXd base_flows;     // per arc position (0 for closed arcs), m³/s
  Eigen::MatrixXd chord_coeff;    // |arcs| x |chords|, entries in {-1, 0, +1}

  // Fundamental cycle per chord: (arc position, ±1) terms, the chord itself
  // first with sign +1. el_offset is the reservoir head difference a
  // reservoir-to-reservoir path must absorb (0 for true cycles).
  std::vector<std::vector<std::pair<int, double>>> cycles;
  std::vector<double> el_offset;  // metres, per chord

  // Traversal data over the reservoir-merged multigraph (vertex 0 is the
  // super-source), used for the head walk and debug dumps.
  std::vector<int> vertex_of_node;  // node position -> merged vertex
  std::vector<int> node_of_vertex;  // merged vertex -> node position (-1 for 0)
  std::vector<int> order;           // vertices in tree-construction order
  std::vector<int> parent_arc;      // per vertex: arc position to parent (-1 at root)
  std::vector<int> parent_vertex;   // per vertex: parent vertex (-1 at root)
};

// Builds the decomposition for the hydraulic multigraph induced by the given
// per-arc diameters (zero-diameter arcs removed). Throws std::runtime_error
// ("hydraulically disconnected design") when a non-reservoir node is
// unreachable from the reservoirs.
FlowDecomposition decompose(const Network& net, const std::vector<double>& diameters_m,
                            TraversalOrder order = TraversalOrder::lowest_arc_id_bfs);

// Energy residual of every fundamental cycle/path (metres) at the given chord
// flows: sum of signed head losses minus the reservoir offset.
Eigen::VectorXd loop_residuals(const FlowDecomposition& decomp,
                               const Eigen::VectorXd& chord_flows, const Network& net,
                               const std::vector<double>& diameters_m);

struct HydraulicState {
  bool ok = false;               // converged and heads computed
  std::string failure;           // empty when ok; otherwise the reason
  std::vector<double> flows_m3s; // per arc position, signed by declared direction
  std::vector<double> heads_m;   // per node position, total head; EL at reservoirs
  double residual = 0.0;         // max |loop residual| at exit, metres
  int iterations = 0;            // Newton steps taken
};

// Newton-Raphson on the chord flows (start 0, damped steps, symmetric
// Jacobian solve), then a head walk down the spanning tree from the
// reservoirs. Never throws for hydraulic reasons: disconnection,
// non-convergence and singular systems come back as ok = false.
HydraulicState solve_flows(const Network& net, const Design& design,
                           const SolverSettings& settings = {},
                           TraversalOrder order = TraversalOrder::lowest_arc_id_bfs);

// Same, with explicit per-arc diameters (reference designs may use diameters
// that are not catalog entries).
HydraulicState solve_flows_diameters(const Network& net, const std::vector<double>& diameters_m,
                                     const SolverSettings& settings = {},
                                     TraversalOrder order = TraversalOrder::lowest_arc_id_bfs);

// Per-node head deficit in metres (>= 0): how far the node falls short of its
// minimum pressure head (above ground) or minimum total head. Reservoir nodes
// report 0. Requires a converged state.
std::vector<double> check_pressure(const HydraulicState& state, const Network& net);

// Human-readable dump of a decomposition (tree, chords, signed cycles).
std::string decomposition_dump(const FlowDecomposition& decomp, const Network& net);

}  // namespace wdn
