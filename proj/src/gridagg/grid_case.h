#pragma once

#include <string>
#include <vector>

#include "gridagg/common.h"
#include "gridagg/json_io.h"

namespace gridagg {

// One region's deterministic physical and economic description over a
// horizon of T slots. Parsed from `gridagg-case-v1` JSON; all invariants
// hold after load_case returns.
struct Bus {
  int id = 0;
  bool is_boundary_ac = false;
};

struct Line {
  std::string id;
  int from = 0, to = 0;  // bus ids
  double reactance = 0;  // p.u.
  double capacity = 0;   // MW; 0 means unlimited is NOT implied, it means 0
};

struct GenCost {
  double a = 0, b = 0, c = 0;        // $/MW^2, $/MW, $
  double price_reserve_up = 0;       // $/MW
  double price_reserve_dn = 0;       // $/MW
};

struct ThermalGen {
  std::string id;
  int bus = 0;
  double p_min = 0, p_max = 0;       // MW
  double ramp_dn = 0, ramp_up = 0;   // MW/h
  Vec reserve_cap_dn, reserve_cap_up;  // per slot, +inf when uncapped
  double contingency_deviation_cap = kInf;  // MW
  GenCost cost;
};

struct Renewable {
  std::string id;
  int bus = 0;
  double p_min = 0;
  Vec forecast_max;  // per slot, MW
  double contingency_deviation_cap = kInf;  // MW
};

enum class TieKind { AC, DC };

struct TieLine {
  std::string id;
  TieKind kind = TieKind::DC;
  int boundary_bus = 0;
  double reactance = 0;  // p.u., AC only
  double capacity = 0;   // MW
};

enum class OutageKind { line, gen };

struct Contingency {
  OutageKind kind = OutageKind::line;
  std::string element;            // line or gen id
  double max_angle_shift = kInf;  // rad, bound on every bus-angle deviation
};

struct GridCase {
  std::string region_id;
  int T = 0;
  double dt = 1.0;        // hours per slot
  double mva_base = 100.0;
  std::vector<Bus> buses;
  int ref_bus = 0;
  Vec ref_angle;          // per slot, rad
  std::vector<Line> lines;
  std::vector<ThermalGen> thermal_gens;
  std::vector<Renewable> renewables;
  Mat load;               // buses x T, MW (dense; zero where unspecified)
  std::vector<TieLine> tie_lines;
  Vec reserve_req_dn, reserve_req_up;  // per slot, MW
  std::vector<Contingency> contingencies;

  int bus_index(int bus_id) const;  // dense index; throws on unknown id
  int line_index(const std::string& id) const;
  int gen_index(const std::string& id) const;
  int num_buses() const { return static_cast<int>(buses.size()); }
};

GridCase load_case(const Json& doc, const std::string& origin);
GridCase load_case_file(const std::string& path);

}  // namespace gridagg
