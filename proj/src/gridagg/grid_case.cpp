#include "gridagg/grid_case.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace gridagg {

namespace {

// Accepts a scalar (broadcast) or a length-T array; absent yields `dflt`.
Vec per_slot(const Json& j, const std::string& key, int T, double dflt,
             const std::string& path) {
  if (!j.contains(key)) return Vec::Constant(T, dflt);
  const Json& v = j.at(key);
  if (v.is_number()) return Vec::Constant(T, v.get<double>());
  if (v.is_array()) {
    Vec out = vec_from_json(v, path + "." + key);
    require(out.size() == T, ErrorCode::parse, "{}.{}: expected {} entries, got {}", path, key,
            T, out.size());
    return out;
  }
  fail(ErrorCode::parse, "{}.{}: expected number or array", path, key);
}

// Union-find connectivity over in-service lines (optionally skipping one).
bool connected(const GridCase& c, int skip_line) {
  int n = c.num_buses();
  if (n == 0) return false;
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int l = 0; l < static_cast<int>(c.lines.size()); ++l) {
    if (l == skip_line) continue;
    int a = find(c.bus_index(c.lines[static_cast<size_t>(l)].from));
    int b = find(c.bus_index(c.lines[static_cast<size_t>(l)].to));
    parent[static_cast<size_t>(a)] = b;
  }
  int root = find(0);
  for (int i = 1; i < n; ++i)
    if (find(i) != root) return false;
  return true;
}

}  // namespace

int GridCase::bus_index(int bus_id) const {
  for (int i = 0; i < num_buses(); ++i)
    if (buses[static_cast<size_t>(i)].id == bus_id) return i;
  fail(ErrorCode::invalid_argument, "unknown bus id {}", bus_id);
}

int GridCase::line_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(lines.size()); ++i)
    if (lines[static_cast<size_t>(i)].id == id) return i;
  fail(ErrorCode::invalid_argument, "unknown line id {}", id);
}

int GridCase::gen_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(thermal_gens.size()); ++i)
    if (thermal_gens[static_cast<size_t>(i)].id == id) return i;
  fail(ErrorCode::invalid_argument, "unknown generator id {}", id);
}

GridCase load_case_file(const std::string& path) {
  return load_case(load_json_file(path), path);
}

GridCase load_case(const Json& doc, const std::string& origin) {
  const std::string& P = origin;
  reject_unknown_fields(
      doc,
      {"schema", "region_id", "horizon", "dt_hours", "mva_base", "ref_bus", "ref_angle", "buses",
       "lines", "thermal_gens", "renewables", "loads", "tie_lines", "reserve_req_dn",
       "reserve_req_up", "contingencies"},
      P);
  require(get_string(doc, "schema", P) == "gridagg-case-v1", ErrorCode::parse,
          "{}: schema must be gridagg-case-v1", P);

  GridCase c;
  c.region_id = get_string(doc, "region_id", P);
  c.T = get_int(doc, "horizon", P);
  require(c.T >= 1, ErrorCode::parse, "{}.horizon: must be >= 1", P);
  c.dt = get_number_or(doc, "dt_hours", 1.0, P);
  require(c.dt > 0, ErrorCode::parse, "{}.dt_hours: must be positive", P);
  c.mva_base = get_number_or(doc, "mva_base", 100.0, P);
  require(c.mva_base > 0, ErrorCode::parse, "{}.mva_base: must be positive", P);

  std::set<int> bus_ids;
  for (size_t i = 0; i < get_array(doc, "buses", P).size(); ++i) {
    const Json& jb = doc.at("buses").at(i);
    std::string p = fmt::format("{}.buses[{}]", P, i);
    reject_unknown_fields(jb, {"id", "is_boundary_ac"}, p);
    Bus b;
    b.id = get_int(jb, "id", p);
    b.is_boundary_ac = get_bool_or(jb, "is_boundary_ac", false, p);
    require(bus_ids.insert(b.id).second, ErrorCode::parse, "{}: duplicate bus id {}", p, b.id);
    c.buses.push_back(b);
  }
  require(!c.buses.empty(), ErrorCode::parse, "{}.buses: empty", P);

  c.ref_bus = get_int(doc, "ref_bus", P);
  require(bus_ids.count(c.ref_bus), ErrorCode::parse, "{}.ref_bus: unknown bus {}", P, c.ref_bus);
  c.ref_angle = doc.contains("ref_angle") ? per_slot(doc, "ref_angle", c.T, 0.0, P)
                                          : Vec::Zero(c.T);

  std::set<std::string> line_ids;
  if (doc.contains("lines")) {
    for (size_t i = 0; i < get_array(doc, "lines", P).size(); ++i) {
      const Json& jl = doc.at("lines").at(i);
      std::string p = fmt::format("{}.lines[{}]", P, i);
      reject_unknown_fields(jl, {"id", "from", "to", "reactance", "capacity"}, p);
      Line l;
      l.id = jl.contains("id") ? get_string(jl, "id", p) : fmt::format("line{}", i);
      l.from = get_int(jl, "from", p);
      l.to = get_int(jl, "to", p);
      l.reactance = get_number(jl, "reactance", p);
      l.capacity = get_number(jl, "capacity", p);
      require(bus_ids.count(l.from) && bus_ids.count(l.to), ErrorCode::parse,
              "{}: endpoint bus unknown", p);
      require(l.from != l.to, ErrorCode::parse, "{}: self-loop", p);
      require(l.reactance > 0, ErrorCode::parse, "{}: reactance must be positive", p);
      require(l.capacity >= 0, ErrorCode::parse, "{}: capacity must be nonnegative", p);
      require(line_ids.insert(l.id).second, ErrorCode::parse, "{}: duplicate line id {}", p, l.id);
      c.lines.push_back(l);
    }
  }

  std::set<std::string> gen_ids;
  if (doc.contains("thermal_gens")) {
    for (size_t i = 0; i < get_array(doc, "thermal_gens", P).size(); ++i) {
      const Json& jg = doc.at("thermal_gens").at(i);
      std::string p = fmt::format("{}.thermal_gens[{}]", P, i);
      reject_unknown_fields(jg,
                            {"id", "bus", "p_min", "p_max", "ramp_dn", "ramp_up",
                             "reserve_cap_dn", "reserve_cap_up", "contingency_deviation_cap",
                             "cost"},
                            p);
      ThermalGen g;
      g.id = jg.contains("id") ? get_string(jg, "id", p) : fmt::format("gen{}", i);
      g.bus = get_int(jg, "bus", p);
      require(bus_ids.count(g.bus), ErrorCode::parse, "{}.bus: unknown bus {}", p, g.bus);
      g.p_min = get_number(jg, "p_min", p);
      g.p_max = get_number(jg, "p_max", p);
      require(g.p_min <= g.p_max, ErrorCode::parse, "{}: p_min > p_max", p);
      g.ramp_dn = get_number(jg, "ramp_dn", p);
      g.ramp_up = get_number(jg, "ramp_up", p);
      require(g.ramp_dn >= 0 && g.ramp_up >= 0, ErrorCode::parse, "{}: ramp rates must be >= 0",
              p);
      g.reserve_cap_dn = per_slot(jg, "reserve_cap_dn", c.T, kInf, p);
      g.reserve_cap_up = per_slot(jg, "reserve_cap_up", c.T, kInf, p);
      g.contingency_deviation_cap =
          jg.contains("contingency_deviation_cap")
              ? get_number(jg, "contingency_deviation_cap", p)
              : kInf;
      if (jg.contains("cost")) {
        const Json& jc = jg.at("cost");
        std::string pc = p + ".cost";
        reject_unknown_fields(jc, {"a", "b", "c", "price_reserve_up", "price_reserve_dn"}, pc);
        g.cost.a = get_number_or(jc, "a", 0.0, pc);
        g.cost.b = get_number_or(jc, "b", 0.0, pc);
        g.cost.c = get_number_or(jc, "c", 0.0, pc);
        g.cost.price_reserve_up = get_number_or(jc, "price_reserve_up", 0.0, pc);
        g.cost.price_reserve_dn = get_number_or(jc, "price_reserve_dn", 0.0, pc);
        require(g.cost.a >= 0, ErrorCode::parse, "{}: quadratic coefficient must be >= 0", pc);
      }
      require(gen_ids.insert(g.id).second, ErrorCode::parse, "{}: duplicate generator id {}", p,
              g.id);
      c.thermal_gens.push_back(std::move(g));
    }
  }

  if (doc.contains("renewables")) {
    std::set<std::string> ren_ids;
    for (size_t i = 0; i < get_array(doc, "renewables", P).size(); ++i) {
      const Json& jr = doc.at("renewables").at(i);
      std::string p = fmt::format("{}.renewables[{}]", P, i);
      reject_unknown_fields(jr, {"id", "bus", "p_min", "forecast_max", "contingency_deviation_cap"},
                            p);
      Renewable r;
      r.id = jr.contains("id") ? get_string(jr, "id", p) : fmt::format("ren{}", i);
      r.bus = get_int(jr, "bus", p);
      require(bus_ids.count(r.bus), ErrorCode::parse, "{}.bus: unknown bus {}", p, r.bus);
      r.p_min = get_number_or(jr, "p_min", 0.0, p);
      r.forecast_max = per_slot(jr, "forecast_max", c.T, 0.0, p);
      for (int t = 0; t < c.T; ++t)
        require(r.p_min <= r.forecast_max[t], ErrorCode::parse,
                "{}: p_min above forecast_max at slot {}", p, t);
      r.contingency_deviation_cap =
          jr.contains("contingency_deviation_cap")
              ? get_number(jr, "contingency_deviation_cap", p)
              : kInf;
      require(ren_ids.insert(r.id).second, ErrorCode::parse, "{}: duplicate renewable id {}", p,
              r.id);
      c.renewables.push_back(std::move(r));
    }
  }

  c.load = Mat::Zero(c.num_buses(), c.T);
  if (doc.contains("loads")) {
    for (size_t i = 0; i < get_array(doc, "loads", P).size(); ++i) {
      const Json& jl = doc.at("loads").at(i);
      std::string p = fmt::format("{}.loads[{}]", P, i);
      reject_unknown_fields(jl, {"bus", "demand"}, p);
      int bus = get_int(jl, "bus", p);
      require(bus_ids.count(bus), ErrorCode::parse, "{}.bus: unknown bus {}", p, bus);
      c.load.row(c.bus_index(bus)) += per_slot(jl, "demand", c.T, 0.0, p).transpose();
    }
  }

  std::set<std::string> tie_ids;
  std::set<int> tie_buses;
  for (size_t i = 0; i < get_array(doc, "tie_lines", P).size(); ++i) {
    const Json& jt = doc.at("tie_lines").at(i);
    std::string p = fmt::format("{}.tie_lines[{}]", P, i);
    reject_unknown_fields(jt, {"id", "kind", "boundary_bus", "reactance", "capacity"}, p);
    TieLine t;
    t.id = get_string(jt, "id", p);
    std::string kind = get_string(jt, "kind", p);
    require(kind == "AC" || kind == "DC", ErrorCode::parse, "{}.kind: must be AC or DC", p);
    t.kind = kind == "AC" ? TieKind::AC : TieKind::DC;
    t.boundary_bus = get_int(jt, "boundary_bus", p);
    require(bus_ids.count(t.boundary_bus), ErrorCode::parse, "{}.boundary_bus: unknown bus {}", p,
            t.boundary_bus);
    if (t.kind == TieKind::AC) {
      t.reactance = get_number(jt, "reactance", p);
      require(t.reactance > 0, ErrorCode::parse, "{}: reactance must be positive", p);
    }
    t.capacity = get_number(jt, "capacity", p);
    require(t.capacity >= 0, ErrorCode::parse, "{}: capacity must be nonnegative", p);
    require(tie_ids.insert(t.id).second, ErrorCode::parse, "{}: duplicate tie id {}", p, t.id);
    // the boundary coupling reads each tie's power off its bus balance, which
    // needs a one-to-one bus-tie map
    require(tie_buses.insert(t.boundary_bus).second, ErrorCode::parse,
            "{}: bus {} already hosts a tie line", p, t.boundary_bus);
    c.tie_lines.push_back(std::move(t));
  }
  require(!c.tie_lines.empty(), ErrorCode::parse, "{}.tie_lines: at least one tie required", P);

  for (const Bus& b : c.buses) {
    bool hosts_ac = false;
    for (const TieLine& t : c.tie_lines)
      if (t.boundary_bus == b.id && t.kind == TieKind::AC) hosts_ac = true;
    require(b.is_boundary_ac == hosts_ac, ErrorCode::parse,
            "{}: bus {} is_boundary_ac={} but hosts_ac_tie={}", P, b.id, b.is_boundary_ac,
            hosts_ac);
  }

  c.reserve_req_dn = per_slot(doc, "reserve_req_dn", c.T, 0.0, P);
  c.reserve_req_up = per_slot(doc, "reserve_req_up", c.T, 0.0, P);
  require(c.reserve_req_dn.minCoeff() >= 0 && c.reserve_req_up.minCoeff() >= 0, ErrorCode::parse,
          "{}: reserve requirements must be >= 0", P);

  if (doc.contains("contingencies")) {
    for (size_t i = 0; i < get_array(doc, "contingencies", P).size(); ++i) {
      const Json& jc = doc.at("contingencies").at(i);
      std::string p = fmt::format("{}.contingencies[{}]", P, i);
      reject_unknown_fields(jc, {"kind", "element", "max_angle_shift"}, p);
      Contingency k;
      std::string kind = get_string(jc, "kind", p);
      require(kind == "line" || kind == "gen", ErrorCode::parse, "{}.kind: must be line or gen",
              p);
      k.kind = kind == "line" ? OutageKind::line : OutageKind::gen;
      k.element = get_string(jc, "element", p);
      if (k.kind == OutageKind::line)
        c.line_index(k.element);  // resolves or throws
      else
        c.gen_index(k.element);
      k.max_angle_shift = jc.contains("max_angle_shift")
                              ? get_number(jc, "max_angle_shift", p)
                              : kInf;
      require(!(k.max_angle_shift < 0), ErrorCode::parse, "{}: max_angle_shift must be >= 0", p);
      c.contingencies.push_back(std::move(k));
    }
  }

  require(connected(c, -1), ErrorCode::parse, "{}: network graph is not connected", P);
  for (const Contingency& k : c.contingencies) {
    if (k.kind != OutageKind::line) continue;
    require(connected(c, c.line_index(k.element)), ErrorCode::parse,
            "{}: outage of line {} islands the network", P, k.element);
  }
  return c;
}

}  // namespace gridagg
