#include "wdn/parse.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace wdn {

namespace units {

std::string to_token(FlowUnit u) {
  switch (u) {
    case FlowUnit::m3s: return "m3s";
    case FlowUnit::m3h: return "m3h";
    case FlowUnit::cfs: return "cfs";
  }
  return "?";
}
std::string to_token(LengthUnit u) { return u == LengthUnit::m ? "m" : "ft"; }
std::string to_token(DiameterUnit u) { return u == DiameterUnit::m ? "m" : "in"; }
std::string to_token(HeadUnit u) { return u == HeadUnit::m ? "m" : "ft"; }
std::string to_token(CostBasis u) { return u == CostBasis::per_m ? "per_m" : "per_ft"; }

FlowUnit flow_from_token(const std::string& tok) {
  if (tok == "m3s") return FlowUnit::m3s;
  if (tok == "m3h") return FlowUnit::m3h;
  if (tok == "cfs") return FlowUnit::cfs;
  throw std::invalid_argument("unknown flow unit '" + tok + "' (expected m3s|m3h|cfs)");
}
LengthUnit length_from_token(const std::string& tok) {
  if (tok == "m") return LengthUnit::m;
  if (tok == "ft") return LengthUnit::ft;
  throw std::invalid_argument("unknown length unit '" + tok + "' (expected m|ft)");
}
DiameterUnit diameter_from_token(const std::string& tok) {
  if (tok == "m") return DiameterUnit::m;
  if (tok == "in") return DiameterUnit::in;
  throw std::invalid_argument("unknown diameter unit '" + tok + "' (expected m|in)");
}
HeadUnit head_from_token(const std::string& tok) {
  if (tok == "m") return HeadUnit::m;
  if (tok == "ft") return HeadUnit::ft;
  throw std::invalid_argument("unknown head unit '" + tok + "' (expected m|ft)");
}
CostBasis cost_from_token(const std::string& tok) {
  if (tok == "per_m") return CostBasis::per_m;
  if (tok == "per_ft") return CostBasis::per_ft;
  throw std::invalid_argument("unknown cost basis '" + tok + "' (expected per_m|per_ft)");
}

}  // namespace units

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

double parse_double(const std::string& tok, int line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "trailing characters in number '" + tok + "'");
  return v;
}

int parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "trailing characters in integer '" + tok + "'");
  return static_cast<int>(v);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Network parse_network(const std::string& text) {
  Network net;
  units::UnitSet file_units;   // how quantities in this file are expressed
  bool display_given = false;

  enum class Section { none, meta, nodes, reservoirs, pipes, catalog };
  Section section = Section::none;

  struct ArcLine { int line; };
  std::vector<ArcLine> arc_lines;
  std::vector<int> reservoir_lines;

  const auto lines = tokenize(text);
  for (const auto& line : lines) {
    const auto& t = line.tokens;
    if (t[0][0] == '[') {
      if (t[0] == "[META]") section = Section::meta;
      else if (t[0] == "[NODES]") section = Section::nodes;
      else if (t[0] == "[RESERVOIRS]") section = Section::reservoirs;
      else if (t[0] == "[PIPES]") section = Section::pipes;
      else if (t[0] == "[CATALOG]") section = Section::catalog;
      else throw ParseError(line.number, "unknown section " + t[0]);
      continue;
    }
    switch (section) {
      case Section::none:
        throw ParseError(line.number, "content before the first section header");
      case Section::meta: {
        const std::string& key = t[0];
        if (key == "name") {
          if (t.size() < 2) throw ParseError(line.number, "name needs a value");
          std::string joined = t[1];
          for (std::size_t i = 2; i < t.size(); ++i) joined += " " + t[i];
          net.name = joined;
        } else if (key == "omega" || key == "alpha" || key == "beta") {
          if (t.size() != 2) throw ParseError(line.number, key + " needs one value");
          const double v = parse_double(t[1], line.number);
          if (key == "omega") net.hw.omega = v;
          else if (key == "alpha") net.hw.alpha = v;
          else net.hw.beta = v;
        } else if (key == "units" || key == "display") {
          if (t.size() != 6) {
            throw ParseError(line.number, key + " needs 5 tokens: flow length diameter head cost");
          }
          try {
            units::UnitSet u;
            u.flow = units::flow_from_token(t[1]);
            u.length = units::length_from_token(t[2]);
            u.diameter = units::diameter_from_token(t[3]);
            u.head = units::head_from_token(t[4]);
            u.cost = units::cost_from_token(t[5]);
            if (key == "units") file_units = u;
            else {
              net.display = u;
              display_given = true;
            }
          } catch (const std::invalid_argument& e) {
            throw ParseError(line.number, e.what());
          }
        } else {
          throw ParseError(line.number, "unknown META key '" + key + "'");
        }
        break;
      }
      case Section::nodes: {
        if (t.size() != 5) {
          throw ParseError(line.number,
                           "node row needs: id demand ground_level min_head_kind min_head_value");
        }
        NodeRecord n;
        n.id = parse_int(t[0], line.number);
        n.demand_m3s = units::flow_to_si(parse_double(t[1], line.number), file_units.flow);
        n.ground_m = units::head_to_si(parse_double(t[2], line.number), file_units.head);
        if (t[3] == "pressure") n.min_head_kind = MinHeadKind::pressure_above_ground;
        else if (t[3] == "total") n.min_head_kind = MinHeadKind::total_head;
        else throw ParseError(line.number, "min_head_kind must be pressure|total, got '" + t[3] + "'");
        n.min_head_m = units::head_to_si(parse_double(t[4], line.number), file_units.head);
        net.nodes.push_back(n);
        break;
      }
      case Section::reservoirs: {
        if (t.size() != 2) throw ParseError(line.number, "reservoir row needs: node_id fixed_head");
        Reservoir r;
        r.node_id = parse_int(t[0], line.number);
        r.fixed_head_m = units::head_to_si(parse_double(t[1], line.number), file_units.head);
        net.reservoirs.push_back(r);
        reservoir_lines.push_back(line.number);
        break;
      }
      case Section::pipes: {
        if (t.size() < 6) {
          throw ParseError(line.number,
                           "pipe row needs: id from to length roughness kind [diameter]");
        }
        PipeArc a;
        a.id = parse_int(t[0], line.number);
        a.from = parse_int(t[1], line.number);
        a.to = parse_int(t[2], line.number);
        a.length_m = units::length_to_si(parse_double(t[3], line.number), file_units.length);
        a.roughness_c = parse_double(t[4], line.number);
        const std::string& kind = t[5];
        if (kind == "decision") {
          if (t.size() != 6) throw ParseError(line.number, "decision pipe takes no diameter");
          a.kind = ArcKind::decision;
        } else if (kind == "fixed" || kind == "parallel") {
          if (t.size() != 7) {
            throw ParseError(line.number, std::string(kind) + " pipe needs a diameter");
          }
          a.kind = kind == "fixed" ? ArcKind::fixed : ArcKind::parallel_candidate;
          a.given_diameter_m =
              units::diameter_to_si(parse_double(t[6], line.number), file_units.diameter);
        } else {
          throw ParseError(line.number, "pipe kind must be decision|fixed|parallel, got '" + kind + "'");
        }
        net.arcs.push_back(a);
        arc_lines.push_back({line.number});
        break;
      }
      case Section::catalog: {
        if (t.size() != 3) throw ParseError(line.number, "catalog row needs: index diameter unit_cost");
        const int idx = parse_int(t[0], line.number);
        if (idx != net.catalog.size() + 1) {
          throw ParseError(line.number, "catalog index " + std::to_string(idx) +
                                            " out of order (expected " +
                                            std::to_string(net.catalog.size() + 1) + ")");
        }
        CatalogEntry e;
        e.diameter_m = units::diameter_to_si(parse_double(t[1], line.number), file_units.diameter);
        e.unit_cost_per_m = units::cost_to_si(parse_double(t[2], line.number), file_units.cost);
        if (net.catalog.size() > 0) {
          const auto& prev = net.catalog.entries.back();
          if (!(e.diameter_m > prev.diameter_m)) {
            throw ParseError(line.number, "catalog diameters must be strictly increasing");
          }
          if (e.unit_cost_per_m < prev.unit_cost_per_m) {
            throw ParseError(line.number, "catalog costs must be non-decreasing");
          }
        }
        net.catalog.entries.push_back(e);
        break;
      }
    }
  }

  if (!display_given) net.display = file_units;

  // Per-item reference checks with line numbers.
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    if (net.node_pos(a.from) < 0) {
      throw ParseError(arc_lines[i].line, "unknown node " + std::to_string(a.from));
    }
    if (net.node_pos(a.to) < 0) {
      throw ParseError(arc_lines[i].line, "unknown node " + std::to_string(a.to));
    }
  }
  for (std::size_t i = 0; i < net.reservoirs.size(); ++i) {
    if (net.node_pos(net.reservoirs[i].node_id) < 0) {
      throw ParseError(reservoir_lines[i],
                       "unknown node " + std::to_string(net.reservoirs[i].node_id));
    }
  }

  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    if (net.arcs[i].kind != ArcKind::fixed) {
      net.decision_arc_positions.push_back(static_cast<int>(i));
    }
  }

  // Single-reservoir demand balance: a zero reservoir demand is filled in as
  // the negative total withdrawal; a nonzero one must already balance.
  if (net.reservoirs.size() == 1) {
    const int rpos = net.node_pos(net.reservoirs.front().node_id);
    if (rpos >= 0) {
      double others = 0.0;
      for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        if (static_cast<int>(i) != rpos) others += net.nodes[i].demand_m3s;
      }
      if (net.nodes[rpos].demand_m3s == 0.0) {
        net.nodes[rpos].demand_m3s = -others;
      } else if (std::abs(net.nodes[rpos].demand_m3s + others) > 1e-9) {
        throw ParseError(0, "reservoir demand " + std::to_string(net.nodes[rpos].demand_m3s) +
                                " m3/s does not balance total withdrawal " +
                                std::to_string(others) + " m3/s");
      }
    }
  }

  try {
    validate_network(net);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return net;
}

Network parse_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

std::string serialize_network(const Network& net) {
  std::ostringstream out;
  out << "[META]\n";
  if (!net.name.empty()) out << "name " << net.name << "\n";
  out << "omega " << fmt(net.hw.omega) << "\n";
  out << "alpha " << fmt(net.hw.alpha) << "\n";
  out << "beta " << fmt(net.hw.beta) << "\n";
  out << "units m3s m m m per_m\n";
  out << "display " << units::to_token(net.display.flow) << " "
      << units::to_token(net.display.length) << " " << units::to_token(net.display.diameter)
      << " " << units::to_token(net.display.head) << " " << units::to_token(net.display.cost)
      << "\n";

  out << "\n[NODES]\n";
  for (const auto& n : net.nodes) {
    out << n.id << " " << fmt(n.demand_m3s) << " " << fmt(n.ground_m) << " "
        << (n.min_head_kind == MinHeadKind::pressure_above_ground ? "pressure" : "total") << " "
        << fmt(n.min_head_m) << "\n";
  }

  out << "\n[RESERVOIRS]\n";
  for (const auto& r : net.reservoirs) {
    out << r.node_id << " " << fmt(r.fixed_head_m) << "\n";
  }

  out << "\n[PIPES]\n";
  for (const auto& a : net.arcs) {
    out << a.id << " " << a.from << " " << a.to << " " << fmt(a.length_m) << " "
        << fmt(a.roughness_c) << " ";
    switch (a.kind) {
      case ArcKind::decision:
        out << "decision";
        break;
      case ArcKind::fixed:
        out << "fixed " << fmt(a.given_diameter_m);
        break;
      case ArcKind::parallel_candidate:
        out << "parallel " << fmt(a.given_diameter_m);
        break;
    }
    out << "\n";
  }

  out << "\n[CATALOG]\n";
  for (int i = 1; i <= net.catalog.size(); ++i) {
    const auto& e = net.catalog.entry(i);
    out << i << " " << fmt(e.diameter_m) << " " << fmt(e.unit_cost_per_m) << "\n";
  }
  return out.str();
}

}  // namespace wdn
