#pragma once

#include <stdexcept>
#include <string>

namespace wdn::units {

inline constexpr double kInchToMetre = 0.0254;
inline constexpr double kFootToMetre = 0.3048;
// 1 ft³/s = 28.3168 L/s = 0.0283168 m³/s
inline constexpr double kCfsToM3s = 0.0283168;

enum class FlowUnit { m3s, m3h, cfs };
enum class LengthUnit { m, ft };
enum class DiameterUnit { m, in };
enum class HeadUnit { m, ft };
enum class CostBasis { per_m, per_ft };

// Carries the units a file used (and the units human output should prefer).
// Internally everything is SI; this struct is a display/ingestion hint only.
struct UnitSet {
  FlowUnit flow = FlowUnit::m3s;
  LengthUnit length = LengthUnit::m;
  DiameterUnit diameter = DiameterUnit::m;
  HeadUnit head = HeadUnit::m;
  CostBasis cost = CostBasis::per_m;

  bool operator==(const UnitSet&) const = default;
};

inline double flow_to_si(double v, FlowUnit u) {
  switch (u) {
    case FlowUnit::m3s: return v;
    case FlowUnit::m3h: return v / 3600.0;
    case FlowUnit::cfs: return v * kCfsToM3s;
  }
  throw std::logic_error("bad flow unit");
}
inline double flow_from_si(double v, FlowUnit u) {
  switch (u) {
    case FlowUnit::m3s: return v;
    case FlowUnit::m3h: return v * 3600.0;
    case FlowUnit::cfs: return v / kCfsToM3s;
  }
  throw std::logic_error("bad flow unit");
}
inline double length_to_si(double v, LengthUnit u) {
  return u == LengthUnit::m ? v : v * kFootToMetre;
}
inline double length_from_si(double v, LengthUnit u) {
  return u == LengthUnit::m ? v : v / kFootToMetre;
}
inline double diameter_to_si(double v, DiameterUnit u) {
  return u == DiameterUnit::m ? v : v * kInchToMetre;
}
inline double diameter_from_si(double v, DiameterUnit u) {
  return u == DiameterUnit::m ? v : v / kInchToMetre;
}
inline double head_to_si(double v, HeadUnit u) {
  return u == HeadUnit::m ? v : v * kFootToMetre;
}
inline double head_from_si(double v, HeadUnit u) {
  return u == HeadUnit::m ? v : v / kFootToMetre;
}
// Unit costs are stored as currency per metre; a per-foot cost c satisfies
// c $/ft = c/0.3048 $/m, keeping length*cost products identical.
inline double cost_to_si(double v, CostBasis u) {
  return u == CostBasis::per_m ? v : v / kFootToMetre;
}
inline double cost_from_si(double v, CostBasis u) {
  return u == CostBasis::per_m ? v : v * kFootToMetre;
}

std::string to_token(FlowUnit u);
std::string to_token(LengthUnit u);
std::string to_token(DiameterUnit u);
std::string to_token(HeadUnit u);
std::string to_token(CostBasis u);

FlowUnit flow_from_token(const std::string& tok);
LengthUnit length_from_token(const std::string& tok);
DiameterUnit diameter_from_token(const std::string& tok);
HeadUnit head_from_token(const std::string& tok);
CostBasis cost_from_token(const std::string& tok);

}  // namespace wdn::units
