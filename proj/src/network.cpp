#include "wdn/network.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace wdn {

int Network::node_pos(int id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

bool Network::is_reservoir(int id) const {
  for (const auto& r : reservoirs) {
    if (r.node_id == id) return true;
  }
  return false;
}

double resistance_factor(const PipeArc& arc, double diameter_m, const Network& net) {
  if (!(diameter_m > 0.0)) {
    throw std::invalid_argument("closed arc: resistance undefined for non-positive diameter (arc " +
                                std::to_string(arc.id) + ")");
  }
  const auto& hw = net.hw;
  return hw.omega * arc.length_m /
         (std::pow(arc.roughness_c, hw.alpha) * std::pow(diameter_m, hw.beta));
}

double design_cost(const Design& design, const Network& net) {
  if (static_cast<int>(design.indices.size()) != net.decision_arc_count()) {
    throw std::out_of_range("design length " + std::to_string(design.indices.size()) +
                            " does not match decision arc count " +
                            std::to_string(net.decision_arc_count()));
  }
  double total = 0.0;
  for (std::size_t k = 0; k < design.indices.size(); ++k) {
    const int idx = design.indices[k];
    if (idx < 1 || idx > net.catalog.size()) {
      throw std::out_of_range("catalog index " + std::to_string(idx) + " outside 1.." +
                              std::to_string(net.catalog.size()));
    }
    const PipeArc& arc = net.arcs[net.decision_arc_positions[k]];
    total += arc.length_m * net.catalog.entry(idx).unit_cost_per_m;
  }
  return total;
}

std::vector<double> arc_diameters(const Network& net, const Design& design) {
  if (static_cast<int>(design.indices.size()) != net.decision_arc_count()) {
    throw std::out_of_range("design length does not match decision arc count");
  }
  std::vector<double> diam(net.arcs.size());
  for (std::size_t a = 0; a < net.arcs.size(); ++a) diam[a] = net.arcs[a].given_diameter_m;
  for (std::size_t k = 0; k < design.indices.size(); ++k) {
    const int idx = design.indices[k];
    if (idx < 1 || idx > net.catalog.size()) {
      throw std::out_of_range("catalog index outside catalog");
    }
    diam[net.decision_arc_positions[k]] = net.catalog.entry(idx).diameter_m;
  }
  return diam;
}

namespace {

// Maps node ids to contracted vertex indices with every reservoir sharing
// vertex 0; non-reservoir nodes get 1..k in file order.
std::vector<int> merged_vertex_of(const Network& net) {
  std::vector<int> vertex(net.nodes.size());
  int next = 1;
  for (std::size_t i = 0; i < net.nodes.size(); ++i) {
    vertex[i] = net.is_reservoir(net.nodes[i].id) ? 0 : next++;
  }
  return vertex;
}

}  // namespace

int cycle_space_dimension(const Network& net, const std::vector<double>& diameters_m) {
  const std::vector<int> vertex = merged_vertex_of(net);
  int vcount = 1;
  for (int v : vertex) vcount = std::max(vcount, v + 1);

  // Union-find over contracted vertices.
  std::vector<int> parent(vcount);
  for (int i = 0; i < vcount; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  int active_arcs = 0;
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    if (!(diameters_m[a] > 0.0)) continue;
    ++active_arcs;
    const int u = find(vertex[net.node_pos(net.arcs[a].from)]);
    const int v = find(vertex[net.node_pos(net.arcs[a].to)]);
    if (u != v) parent[u] = v;
  }
  std::set<int> roots;
  for (int i = 0; i < vcount; ++i) roots.insert(find(i));
  return active_arcs - vcount + static_cast<int>(roots.size());
}

void validate_network(const Network& net) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };

  if (net.nodes.empty()) fail("network has no nodes");
  if (net.reservoirs.empty()) fail("network has no reservoirs");

  std::set<int> node_ids;
  for (const auto& n : net.nodes) {
    if (!node_ids.insert(n.id).second) fail("duplicate node id " + std::to_string(n.id));
  }
  std::set<int> reservoir_ids;
  for (const auto& r : net.reservoirs) {
    if (!node_ids.count(r.node_id)) {
      fail("reservoir references unknown node " + std::to_string(r.node_id));
    }
    if (!reservoir_ids.insert(r.node_id).second) {
      fail("duplicate reservoir at node " + std::to_string(r.node_id));
    }
    if (!(r.fixed_head_m > 0.0)) {
      fail("reservoir head must be positive at node " + std::to_string(r.node_id));
    }
  }

  std::set<int> arc_ids;
  for (const auto& a : net.arcs) {
    if (!arc_ids.insert(a.id).second) fail("duplicate pipe id " + std::to_string(a.id));
    if (!node_ids.count(a.from)) {
      fail("pipe " + std::to_string(a.id) + " references unknown node " + std::to_string(a.from));
    }
    if (!node_ids.count(a.to)) {
      fail("pipe " + std::to_string(a.id) + " references unknown node " + std::to_string(a.to));
    }
    if (a.from == a.to) fail("pipe " + std::to_string(a.id) + " is a self-loop");
    if (!(a.length_m > 0.0)) fail("pipe " + std::to_string(a.id) + " has non-positive length");
    if (!(a.roughness_c > 0.0)) fail("pipe " + std::to_string(a.id) + " has non-positive roughness");
    if (a.kind == ArcKind::fixed && !(a.given_diameter_m > 0.0)) {
      fail("fixed pipe " + std::to_string(a.id) + " needs a positive diameter");
    }
  }

  // Decision positions must exactly list the non-fixed arcs, in file order.
  {
    std::vector<int> expect;
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
      if (net.arcs[i].kind != ArcKind::fixed) expect.push_back(static_cast<int>(i));
    }
    if (expect != net.decision_arc_positions) {
      fail("decision arc positions out of sync with arc kinds");
    }
  }

  if (net.decision_arc_count() > 0) {
    if (net.catalog.size() < 1) fail("catalog is empty but the network has decision pipes");
  }
  for (int i = 1; i <= net.catalog.size(); ++i) {
    const auto& e = net.catalog.entry(i);
    if (e.diameter_m < 0.0 || e.unit_cost_per_m < 0.0) {
      fail("catalog entry " + std::to_string(i) + " is negative");
    }
    if (i > 1) {
      const auto& prev = net.catalog.entry(i - 1);
      if (!(e.diameter_m > prev.diameter_m)) {
        fail("catalog diameters must be strictly increasing (entry " + std::to_string(i) + ")");
      }
      if (e.unit_cost_per_m < prev.unit_cost_per_m) {
        fail("catalog costs must be non-decreasing (entry " + std::to_string(i) + ")");
      }
    }
  }

  // Connectivity over the full arc set (decision arcs open at any diameter).
  {
    std::vector<char> seen(net.nodes.size(), 0);
    std::queue<int> q;
    q.push(net.node_pos(net.reservoirs.front().node_id));
    seen[q.front()] = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const auto& a : net.arcs) {
        const int pf = net.node_pos(a.from);
        const int pt = net.node_pos(a.to);
        int other = -1;
        if (pf == u) other = pt;
        else if (pt == u) other = pf;
        if (other >= 0 && !seen[other]) {
          seen[other] = 1;
          q.push(other);
        }
      }
    }
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
      if (!seen[i]) fail("disconnected graph: node " + std::to_string(net.nodes[i].id) +
                         " unreachable from the reservoirs");
    }
  }

  // Single-source demand balance: the reservoir carries the negative of the
  // total withdrawal, so all demands sum to zero.
  if (net.reservoirs.size() == 1) {
    double sum = 0.0;
    for (const auto& n : net.nodes) sum += n.demand_m3s;
    if (std::abs(sum) > 1e-9) {
      fail("single-reservoir network: demands sum to " + std::to_string(sum) +
           " m3/s, expected 0 (reservoir row must carry the negative total)");
    }
  }
}

Design uniform_design(const Network& net, int index_1based) {
  if (index_1based < 1 || index_1based > net.catalog.size()) {
    throw std::out_of_range("catalog index outside catalog");
  }
  Design d;
  d.indices.assign(static_cast<std::size_t>(net.decision_arc_count()), index_1based);
  return d;
}

}  // namespace wdn
