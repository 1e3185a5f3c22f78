#include "wdn/hydraulics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wdn {

namespace {

double phi(double q, double alpha) { return q * std::pow(std::abs(q), alpha - 1.0); }

double dphi(double q, double alpha, double eps) {
  return alpha * std::pow(std::abs(q) + eps, alpha - 1.0);
}

double max_abs(const Eigen::VectorXd& v) {
  if (v.size() == 0) return 0.0;
  if (!v.allFinite()) return std::numeric_limits<double>::infinity();
  return v.cwiseAbs().maxCoeff();
}

// Vertex labels of the reservoir-merged multigraph: every reservoir node maps
// to vertex 0 (the super-source); other nodes get 1..k in file order.
struct Merged {
  std::vector<int> vertex_of_node;  // by node position
  std::vector<int> node_of_vertex;  // by vertex; -1 for vertex 0
  int vcount = 1;
};

Merged merge_reservoirs(const Network& net) {
  Merged m;
  m.vertex_of_node.resize(net.nodes.size());
  m.node_of_vertex.assign(1, -1);
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    if (net.is_reservoir(net.nodes[i].id)) {
      m.vertex_of_node[i] = 0;
    } else {
      m.vertex_of_node[i] = m.vcount++;
      m.node_of_vertex.push_back(static_cast<int>(i));
    }
  }
  return m;
}

double reservoir_head_at(const Network& net, int node_pos) {
  const int id = net.nodes[node_pos].id;
  for (const auto& r : net.reservoirs) {
    if (r.node_id == id) return r.fixed_head_m;
  }
  throw std::logic_error("node is not a reservoir");
}

std::vector<double> arc_resistances(const Network& net, const std::vector<double>& diameters_m,
                                    const std::vector<char>& active) {
  std::vector<double> r(net.arcs.size(), 0.0);
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    if (active[a]) r[a] = resistance_factor(net.arcs[a], diameters_m[a], net);
  }
  return r;
}

}  // namespace

FlowDecomposition decompose(const Network& net, const std::vector<double>& diameters_m,
                            TraversalOrder order) {
  if (diameters_m.size() != net.arcs.size()) {
    throw std::invalid_argument("diameter vector length does not match arc count");
  }
  const Merged m = merge_reservoirs(net);
  const int narcs = static_cast<int>(net.arcs.size());

  FlowDecomposition d;
  d.active.resize(narcs);
  for (int a = 0; a < narcs; ++a) d.active[a] = diameters_m[a] > 0.0 ? 1 : 0;

  // Adjacency of the merged multigraph over active arcs, ordered by arc id.
  std::vector<std::vector<std::pair<int, int>>> adj(m.vcount);  // (arc pos, other vertex)
  auto arc_vertices = [&](int a) {
    return std::pair<int, int>{m.vertex_of_node[net.node_pos(net.arcs[a].from)],
                               m.vertex_of_node[net.node_pos(net.arcs[a].to)]};
  };
  for (int a = 0; a < narcs; ++a) {
    if (!d.active[a]) continue;
    const auto [u, v] = arc_vertices(a);
    adj[u].push_back({a, v});
    adj[v].push_back({a, u});
  }
  const bool descending = order == TraversalOrder::highest_arc_id_bfs;
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(), [&](const auto& x, const auto& y) {
      const int ix = net.arcs[x.first].id, iy = net.arcs[y.first].id;
      return descending ? ix > iy : ix < iy;
    });
  }

  // Spanning tree from the super-source.
  std::vector<char> visited(m.vcount, 0);
  std::vector<int> parent_arc(m.vcount, -1), parent_vertex(m.vcount, -1);
  std::deque<int> frontier{0};
  visited[0] = 1;
  d.order.push_back(0);
  const bool lifo = order == TraversalOrder::lowest_arc_id_dfs;
  while (!frontier.empty()) {
    int x;
    if (lifo) {
      x = frontier.back();
      frontier.pop_back();
    } else {
      x = frontier.front();
      frontier.pop_front();
    }
    for (const auto& [a, y] : adj[x]) {
      if (!visited[y]) {
        visited[y] = 1;
        parent_arc[y] = a;
        parent_vertex[y] = x;
        d.tree_arcs.push_back(a);
        d.order.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  for (int v = 0; v < m.vcount; ++v) {
    if (!visited[v]) {
      throw std::runtime_error("hydraulically disconnected design: node " +
                               std::to_string(net.nodes[m.node_of_vertex[v]].id) +
                               " unreachable from the reservoirs");
    }
  }

  std::vector<char> in_tree(narcs, 0);
  for (int a : d.tree_arcs) in_tree[a] = 1;
  for (int a = 0; a < narcs; ++a) {
    if (d.active[a] && !in_tree[a]) d.chords.push_back(a);
  }
  std::sort(d.chords.begin(), d.chords.end(),
            [&](int x, int y) { return net.arcs[x].id < net.arcs[y].id; });
  const int nch = static_cast<int>(d.chords.size());

  // Affine tree flows: continuity at each merged vertex, children first.
  d.base_flows = Eigen::VectorXd::Zero(narcs);
  d.chord_coeff = Eigen::MatrixXd::Zero(narcs, nch);
  for (int c = 0; c < nch; ++c) d.chord_coeff(d.chords[c], c) = 1.0;
  for (auto it = d.order.rbegin(); it != d.order.rend(); ++it) {
    const int x = *it;
    if (x == 0) continue;
    const int pa = parent_arc[x];
    const double demand = net.nodes[m.node_of_vertex[x]].demand_m3s;
    double sum_base = 0.0;
    Eigen::RowVectorXd sum_coeff = Eigen::RowVectorXd::Zero(nch);
    double inc_parent = 0.0;
    for (const auto& [a, y] : adj[x]) {
      const auto [u, v] = arc_vertices(a);
      if (u == v) continue;  // merged self-loop: inflow and outflow cancel
      const double inc = u == x ? 1.0 : -1.0;  // +1 when the arc leaves x
      if (a == pa) {
        inc_parent = inc;
        continue;
      }
      sum_base += inc * d.base_flows(a);
      sum_coeff += inc * d.chord_coeff.row(a);
    }
    d.base_flows(pa) = (-demand - sum_base) / inc_parent;
    d.chord_coeff.row(pa) = -sum_coeff / inc_parent;
  }

  // Fundamental cycle of each chord: chord first (+1), then the tree path
  // from the chord's head back to its tail. A walk that passes through the
  // super-source is an open reservoir-to-reservoir path; the head difference
  // of the two reservoirs it touches becomes the cycle's offset.
  struct Step {
    int vertex;
    int arc;
    int parent;
  };
  auto path_to_root = [&](int x) {
    std::vector<Step> path;
    while (x != 0) {
      path.push_back({x, parent_arc[x], parent_vertex[x]});
      x = parent_vertex[x];
    }
    return path;
  };
  auto source_side_node = [&](int a) {  // original node pos of the arc's vertex-0 end
    const int pf = net.node_pos(net.arcs[a].from);
    return m.vertex_of_node[pf] == 0 ? pf : net.node_pos(net.arcs[a].to);
  };
  d.cycles.resize(nch);
  d.el_offset.assign(nch, 0.0);
  for (int c = 0; c < nch; ++c) {
    const int p = d.chords[c];
    const auto [mu, mv] = arc_vertices(p);
    auto pu = path_to_root(mu);
    auto pv = path_to_root(mv);
    std::size_t i = pu.size(), j = pv.size();
    while (i > 0 && j > 0 && pu[i - 1].arc == pv[j - 1].arc) {
      --i;
      --j;
    }
    auto& terms = d.cycles[c];
    terms.push_back({p, +1.0});
    // Up the tree from the chord's head (child -> parent direction).
    for (std::size_t s = 0; s < j; ++s) {
      const int a = pv[s].arc;
      const int from_v = m.vertex_of_node[net.node_pos(net.arcs[a].from)];
      terms.push_back({a, from_v == pv[s].vertex ? +1.0 : -1.0});
    }
    // Down the tree to the chord's tail (parent -> child direction).
    for (std::size_t s = i; s-- > 0;) {
      const int a = pu[s].arc;
      const int from_v = m.vertex_of_node[net.node_pos(net.arcs[a].from)];
      terms.push_back({a, from_v == pu[s].parent ? +1.0 : -1.0});
    }
    // Reservoir endpoints of the open walk, when it touches vertex 0.
    int a_end = -1, b_end = -1;
    if (mu == 0) {
      a_end = net.node_pos(net.arcs[p].from);
    } else if (i > 0 && pu[i - 1].parent == 0) {
      a_end = source_side_node(pu[i - 1].arc);
    }
    if (mv == 0) {
      b_end = net.node_pos(net.arcs[p].to);
    } else if (j > 0 && pv[j - 1].parent == 0) {
      b_end = source_side_node(pv[j - 1].arc);
    }
    if (a_end >= 0 && b_end >= 0 && a_end != b_end) {
      d.el_offset[c] = reservoir_head_at(net, a_end) - reservoir_head_at(net, b_end);
    }
  }

  d.vertex_of_node = m.vertex_of_node;
  d.node_of_vertex = m.node_of_vertex;
  d.parent_arc = parent_arc;
  d.parent_vertex = parent_vertex;
  return d;
}

Eigen::VectorXd loop_residuals(const FlowDecomposition& decomp,
                               const Eigen::VectorXd& chord_flows, const Network& net,
                               const std::vector<double>& diameters_m) {
  const std::vector<double> r = arc_resistances(net, diameters_m, decomp.active);
  const Eigen::VectorXd q = decomp.base_flows + decomp.chord_coeff * chord_flows;
  Eigen::VectorXd res(static_cast<int>(decomp.cycles.size()));
  for (std::size_t c = 0; c < decomp.cycles.size(); ++c) {
    double s = -decomp.el_offset[c];
    for (const auto& [a, sign] : decomp.cycles[c]) {
      s += sign * r[a] * phi(q(a), net.hw.alpha);
    }
    res(static_cast<int>(c)) = s;
  }
  return res;
}

HydraulicState solve_flows_diameters(const Network& net, const std::vector<double>& diameters_m,
                                     const SolverSettings& settings, TraversalOrder order) {
  HydraulicState state;
  state.flows_m3s.assign(net.arcs.size(), 0.0);
  state.heads_m.assign(net.nodes.size(),
                       std::numeric_limits<double>::quiet_NaN());

  FlowDecomposition d;
  try {
    d = decompose(net, diameters_m, order);
  } catch (const std::runtime_error& e) {
    state.failure = e.what();
    return state;
  }
  const std::vector<double> r = arc_resistances(net, diameters_m, d.active);
  const double alpha = net.hw.alpha;
  const int nch = static_cast<int>(d.chords.size());

  auto residual_at = [&](const Eigen::VectorXd& q, Eigen::VectorXd& flows) {
    flows = d.base_flows + d.chord_coeff * q;
    Eigen::VectorXd res(nch);
    for (int c = 0; c < nch; ++c) {
      double s = -d.el_offset[c];
      for (const auto& [a, sign] : d.cycles[c]) s += sign * r[a] * phi(flows(a), alpha);
      res(c) = s;
    }
    return res;
  };

  Eigen::VectorXd q = Eigen::VectorXd::Zero(nch);
  Eigen::VectorXd flows;
  Eigen::VectorXd res = residual_at(q, flows);
  double norm = max_abs(res);

  while (norm > settings.tolerance && state.iterations < settings.max_iterations) {
    ++state.iterations;
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(nch, nch);
    for (int c = 0; c < nch; ++c) {
      for (const auto& [a, sign] : d.cycles[c]) {
        jac.row(c) += sign * r[a] * dphi(flows(a), alpha, settings.q_epsilon) * d.chord_coeff.row(a);
      }
    }
    Eigen::VectorXd delta;
    {
      Eigen::LDLT<Eigen::MatrixXd> ldlt(jac);
      if (ldlt.info() == Eigen::Success) delta = ldlt.solve(-res);
      if (ldlt.info() != Eigen::Success || !delta.allFinite()) {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
        if (!lu.isInvertible()) {
          state.residual = norm;
          state.failure = "singular jacobian in the loop-flow Newton system";
          return state;
        }
        delta = lu.solve(-res);
      }
    }
    // Step-halving line search; keep the best residual norm seen so a
    // non-improving full step still makes the most progress available.
    double lambda = 1.0;
    double best_norm = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_q = q;
    for (int h = 0; h <= settings.max_halvings; ++h) {
      const Eigen::VectorXd cand = q + lambda * delta;
      Eigen::VectorXd cand_flows;
      const double n = max_abs(residual_at(cand, cand_flows));
      if (n < best_norm) {
        best_norm = n;
        best_q = cand;
      }
      if (n < norm) break;
      lambda *= 0.5;
    }
    q = best_q;
    res = residual_at(q, flows);
    norm = max_abs(res);
    if (!std::isfinite(norm)) break;
  }

  state.residual = norm;
  if (!(norm <= settings.tolerance)) {
    std::ostringstream msg;
    msg << "hydraulic non-convergence: residual " << norm << " m after "
        << state.iterations << " iterations";
    state.failure = msg.str();
    return state;
  }

  for (int a = 0; a < static_cast<int>(net.arcs.size()); ++a) state.flows_m3s[a] = flows(a);

  // Head walk down the spanning tree, starting from each arc's reservoir-side
  // original endpoint so multiple reservoirs seed their own heads.
  for (const auto& rsv : net.reservoirs) {
    state.heads_m[net.node_pos(rsv.node_id)] = rsv.fixed_head_m;
  }
  for (int x : d.order) {
    if (x == 0) continue;
    const int a = d.parent_arc[x];
    const int pf = net.node_pos(net.arcs[a].from);
    const int pt = net.node_pos(net.arcs[a].to);
    const double loss = r[a] * phi(flows(a), alpha);
    const int self = d.node_of_vertex[x];
    if (d.vertex_of_node[pf] == x) {
      state.heads_m[self] = state.heads_m[pt] + loss;  // declared tail is here
    } else {
      state.heads_m[self] = state.heads_m[pf] - loss;
    }
  }
  state.ok = true;
  return state;
}

HydraulicState solve_flows(const Network& net, const Design& design,
                           const SolverSettings& settings, TraversalOrder order) {
  return solve_flows_diameters(net, arc_diameters(net, design), settings, order);
}

std::vector<double> check_pressure(const HydraulicState& state, const Network& net) {
  std::vector<double> deficits(net.nodes.size(), 0.0);
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    const auto& n = net.nodes[i];
    if (net.is_reservoir(n.id)) continue;
    const double have = n.min_head_kind == MinHeadKind::pressure_above_ground
                            ? state.heads_m[i] - n.ground_m
                            : state.heads_m[i];
    deficits[i] = std::max(0.0, n.min_head_m - have);
  }
  return deficits;
}

std::string decomposition_dump(const FlowDecomposition& decomp, const Network& net) {
  std::ostringstream out;
  out << "tree arcs:";
  for (int a : decomp.tree_arcs) out << " " << net.arcs[a].id;
  out << "\nchords:";
  for (int a : decomp.chords) out << " " << net.arcs[a].id;
  out << "\n";
  for (std::size_t c = 0; c < decomp.cycles.size(); ++c) {
    out << "cycle " << net.arcs[decomp.chords[c]].id << ":";
    for (const auto& [a, sign] : decomp.cycles[c]) {
      out << " " << (sign > 0 ? "+" : "-") << net.arcs[a].id;
    }
    if (decomp.el_offset[c] != 0.0) out << " offset " << decomp.el_offset[c] << " m";
    out << "\n";
  }
  return out.str();
}

}  // namespace wdn
