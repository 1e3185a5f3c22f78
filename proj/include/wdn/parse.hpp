#pragma once

#include <stdexcept>
#include <string>

#include "wdn/network.hpp"

namespace wdn {

// Parse/validation failure. line is 1-based within the parsed text, or 0 when
// the problem is not tied to a single line (e.g. disconnected graph).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line_number, const std::string& message)
      : std::runtime_error(line_number > 0
                               ? "line " + std::to_string(line_number) + ": " + message
                               : message),
        line(line_number) {}
  int line;
};

// Plain-text sectioned network format (whitespace-delimited, '#' comments):
//
//   [META]
//   name <string>
//   omega <value>            # default 10.6744
//   alpha <value>            # default 1.852
//   beta <value>             # default 4.871
//   units <flow> <length> <diameter> <head> <cost>
//                            # tokens: m3s|m3h|cfs, m|ft, m|in, m|ft, per_m|per_ft
//                            # default: all SI (m3s m m m per_m)
//   display <flow> <length> <diameter> <head> <cost>
//                            # optional; output hint, defaults to `units`
//   [NODES]
//   id demand ground_level min_head_kind min_head_value    # kind: pressure|total
//   [RESERVOIRS]
//   node_id fixed_head
//   [PIPES]
//   id from to length roughness kind [diameter]
//                            # kind: decision | fixed | parallel
//                            # diameter required for fixed and parallel
//   [CATALOG]
//   index diameter unit_cost # index must run 1..n in order
//
// All quantities are converted to SI during parsing; `display` (or `units`)
// is retained on the Network so output can use the original units.
Network parse_network(const std::string& text);

Network parse_network_file(const std::string& path);

// Writes a Network in the same format, always in SI units, with a `display`
// line preserving the original units. parse_network(serialize_network(n)) == n
// field-for-field.
std::string serialize_network(const Network& net);

}  // namespace wdn
