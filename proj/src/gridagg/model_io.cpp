#include "gridagg/model_io.h"

#include <set>

namespace gridagg {

namespace {

std::vector<std::string> string_list(const Json& doc, const std::string& key,
                                     const std::string& path) {
  std::vector<std::string> out;
  const Json& a = get_array(doc, key, path);
  for (size_t i = 0; i < a.size(); ++i) {
    require(a.at(i).is_string(), ErrorCode::parse, "{}.{}[{}]: expected a string", path, key, i);
    out.push_back(a.at(i).get<std::string>());
  }
  return out;
}

std::vector<int> int_list(const Json& doc, const std::string& key, const std::string& path) {
  std::vector<int> out;
  const Json& a = get_array(doc, key, path);
  for (size_t i = 0; i < a.size(); ++i) {
    require(a.at(i).is_number_integer(), ErrorCode::parse, "{}.{}[{}]: expected an integer", path,
            key, i);
    out.push_back(a.at(i).get<int>());
  }
  return out;
}

Json string_list_json(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const std::string& s : v) a.push_back(s);
  return a;
}

Json int_list_json(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

}  // namespace

Json model_to_json(const AggregatedModel& M) {
  Json j;
  j["schema"] = "gridagg-model-v1";
  j["region_id"] = M.region_id;
  j["horizon"] = M.T;
  j["dt_hours"] = M.dt;
  j["mva_base"] = M.mva_base;
  Json layout;
  layout["tie_ids"] = string_list_json(M.tie_ids);
  layout["tie_bus"] = int_list_json(M.tie_bus);
  layout["angle_bus_ids"] = int_list_json(M.angle_bus_ids);
  j["layout"] = std::move(layout);
  Json envs = Json::array();
  for (const GeneratorEnvelope& env : M.envelopes) envs.push_back(env.to_json());
  j["envelopes"] = std::move(envs);
  Json slices = Json::array();
  for (const TimeSliceEllipsoid& sl : M.slices) slices.push_back(sl.to_json());
  j["slices"] = std::move(slices);
  Json boxes = Json::array();
  for (size_t t = 0; t < M.angle_lo.size(); ++t) {
    Json b;
    b["slot"] = static_cast<int>(t);
    b["lo"] = vec_to_json(M.angle_lo[t]);
    b["hi"] = vec_to_json(M.angle_hi[t]);
    boxes.push_back(std::move(b));
  }
  j["angle_boxes"] = std::move(boxes);
  j["verified"] = M.verified;
  j["shrink_iters"] = M.shrink_iters;
  Json anomalies = Json::array();
  for (const std::string& a : M.anomalies) anomalies.push_back(a);
  j["anomalies"] = std::move(anomalies);
  j["note"] = M.note;
  j["provenance"] = M.provenance;
  return j;
}

AggregatedModel model_from_json(const Json& doc, const std::string& origin) {
  const std::string& P = origin;
  reject_unknown_fields(doc,
                        {"schema", "region_id", "horizon", "dt_hours", "mva_base", "layout",
                         "envelopes", "slices", "angle_boxes", "verified", "shrink_iters",
                         "anomalies", "note", "provenance"},
                        P);
  require(get_string(doc, "schema", P) == "gridagg-model-v1", ErrorCode::parse,
          "{}: schema must be gridagg-model-v1", P);
  AggregatedModel M;
  M.region_id = get_string(doc, "region_id", P);
  M.T = get_int(doc, "horizon", P);
  require(M.T >= 1, ErrorCode::parse, "{}.horizon: must be >= 1", P);
  M.dt = get_number(doc, "dt_hours", P);
  require(M.dt > 0, ErrorCode::parse, "{}.dt_hours: must be positive", P);
  M.mva_base = get_number(doc, "mva_base", P);
  require(M.mva_base > 0, ErrorCode::parse, "{}.mva_base: must be positive", P);

  const Json& layout = member(doc, "layout", P);
  std::string lp = P + ".layout";
  reject_unknown_fields(layout, {"tie_ids", "tie_bus", "angle_bus_ids"}, lp);
  M.tie_ids = string_list(layout, "tie_ids", lp);
  M.tie_bus = int_list(layout, "tie_bus", lp);
  M.angle_bus_ids = int_list(layout, "angle_bus_ids", lp);
  // Validates ordering and sizes as a side effect.
  BoundarySelectors sel = make_selectors(M.T, M.dt, M.tie_ids, M.tie_bus, M.angle_bus_ids);

  const Json& envs = get_array(doc, "envelopes", P);
  require(envs.size() == M.tie_ids.size(), ErrorCode::parse,
          "{}.envelopes: {} entries for {} ties", P, envs.size(), M.tie_ids.size());
  for (size_t i = 0; i < envs.size(); ++i) {
    GeneratorEnvelope env =
        GeneratorEnvelope::from_json(envs.at(i), fmt::format("{}.envelopes[{}]", P, i));
    require(env.tie_index == static_cast<int>(i) && env.tie_id == M.tie_ids[i], ErrorCode::parse,
            "{}.envelopes[{}]: expected tie {} at this position", P, i, M.tie_ids[i]);
    require(env.T() == M.T, ErrorCode::parse, "{}.envelopes[{}]: horizon {} does not match {}", P,
            i, env.T(), M.T);
    M.envelopes.push_back(std::move(env));
  }

  const Json& slices = get_array(doc, "slices", P);
  require(slices.empty() || slices.size() == static_cast<size_t>(M.T), ErrorCode::parse,
          "{}.slices: need 0 or {} entries, got {}", P, M.T, slices.size());
  for (size_t t = 0; t < slices.size(); ++t) {
    TimeSliceEllipsoid sl =
        TimeSliceEllipsoid::from_json(slices.at(t), fmt::format("{}.slices[{}]", P, t));
    require(sl.slot == static_cast<int>(t), ErrorCode::parse,
            "{}.slices[{}]: expected slot {} at this position", P, t, t);
    require(sl.ell.dim() == sel.per_slot, ErrorCode::parse,
            "{}.slices[{}]: ellipsoid dimension {} does not match the {} per-slot coordinates", P,
            t, sl.ell.dim(), sel.per_slot);
    M.slices.push_back(std::move(sl));
  }

  const Json& boxes = get_array(doc, "angle_boxes", P);
  if (!boxes.empty()) {
    require(M.slices.empty(), ErrorCode::parse,
            "{}.angle_boxes: a model carries slices or angle boxes, not both", P);
    require(!M.angle_bus_ids.empty(), ErrorCode::parse,
            "{}.angle_boxes: the layout exposes no boundary angles", P);
    require(boxes.size() == static_cast<size_t>(M.T), ErrorCode::parse,
            "{}.angle_boxes: need {} entries, got {}", P, M.T, boxes.size());
    for (size_t t = 0; t < boxes.size(); ++t) {
      std::string bp = fmt::format("{}.angle_boxes[{}]", P, t);
      reject_unknown_fields(boxes.at(t), {"slot", "lo", "hi"}, bp);
      require(get_int(boxes.at(t), "slot", bp) == static_cast<int>(t), ErrorCode::parse,
              "{}: expected slot {} at this position", bp, t);
      Vec lo = vec_from_json(member(boxes.at(t), "lo", bp), bp + ".lo");
      Vec hi = vec_from_json(member(boxes.at(t), "hi", bp), bp + ".hi");
      require(lo.size() == static_cast<int>(M.angle_bus_ids.size()) && hi.size() == lo.size(),
              ErrorCode::parse, "{}: need {} bounds per side", bp, M.angle_bus_ids.size());
      for (int a = 0; a < lo.size(); ++a)
        require(lo(a) <= hi(a), ErrorCode::parse, "{}: bounds crossed at angle {}", bp, a);
      M.angle_lo.push_back(std::move(lo));
      M.angle_hi.push_back(std::move(hi));
    }
  }

  const Json& jver = member(doc, "verified", P);
  require(jver.is_boolean(), ErrorCode::parse, "{}.verified: expected a boolean", P);
  M.verified = jver.get<bool>();
  M.shrink_iters = get_int(doc, "shrink_iters", P);
  for (const std::string& a : string_list(doc, "anomalies", P)) M.anomalies.push_back(a);
  M.note = get_string(doc, "note", P);
  M.provenance = member(doc, "provenance", P);
  require(M.provenance.is_object(), ErrorCode::parse, "{}.provenance: expected an object", P);
  return M;
}

AggregatedModel load_model_file(const std::string& path) {
  return model_from_json(load_json_file(path), path);
}

void save_model_file(const AggregatedModel& M, const std::string& path) {
  save_text_file(path, dump_json(model_to_json(M)));
}

Json cost_to_json(const PwlCost& K) {
  Json j;
  j["schema"] = "gridagg-cost-v1";
  j["region_id"] = K.region_id;
  j["horizon"] = K.T;
  j["tie_ids"] = string_list_json(K.tie_ids);
  Json grouping;
  grouping["group_of"] = int_list_json(K.grouping.group_of);
  grouping["num_groups"] = K.grouping.num_groups;
  j["grouping"] = std::move(grouping);
  Json slots = Json::array();
  for (const PwlSlot& s : K.slots) {
    Json js;
    js["slot"] = s.slot;
    Json pieces = Json::array();
    for (const PwlPiece& pc : s.pieces) {
      Json jp;
      jp["a"] = vec_to_json(pc.a);
      jp["b"] = pc.b;
      pieces.push_back(std::move(jp));
    }
    js["pieces"] = std::move(pieces);
    js["rms"] = s.rms;
    js["samples"] = s.samples;
    Json warn = Json::array();
    for (const std::string& w : s.warnings) warn.push_back(w);
    js["warnings"] = std::move(warn);
    slots.push_back(std::move(js));
  }
  j["slots"] = std::move(slots);
  return j;
}

PwlCost cost_from_json(const Json& doc, const std::string& origin) {
  const std::string& P = origin;
  reject_unknown_fields(doc, {"schema", "region_id", "horizon", "tie_ids", "grouping", "slots"},
                        P);
  require(get_string(doc, "schema", P) == "gridagg-cost-v1", ErrorCode::parse,
          "{}: schema must be gridagg-cost-v1", P);
  PwlCost K;
  K.region_id = get_string(doc, "region_id", P);
  K.T = get_int(doc, "horizon", P);
  require(K.T >= 1, ErrorCode::parse, "{}.horizon: must be >= 1", P);
  K.tie_ids = string_list(doc, "tie_ids", P);

  const Json& grouping = member(doc, "grouping", P);
  std::string gp = P + ".grouping";
  reject_unknown_fields(grouping, {"group_of", "num_groups"}, gp);
  K.grouping.group_of = int_list(grouping, "group_of", gp);
  K.grouping.num_groups = get_int(grouping, "num_groups", gp);
  require(K.grouping.group_of.size() == K.tie_ids.size(), ErrorCode::parse,
          "{}.group_of: {} entries for {} ties", gp, K.grouping.group_of.size(),
          K.tie_ids.size());
  require(K.grouping.num_groups >= 1, ErrorCode::parse, "{}.num_groups: must be >= 1", gp);
  for (int g : K.grouping.group_of)
    require(g >= 0 && g < K.grouping.num_groups, ErrorCode::parse,
            "{}.group_of: id {} outside [0, {})", gp, g, K.grouping.num_groups);

  const Json& slots = get_array(doc, "slots", P);
  require(slots.size() == static_cast<size_t>(K.T), ErrorCode::parse,
          "{}.slots: need {} entries, got {}", P, K.T, slots.size());
  for (size_t t = 0; t < slots.size(); ++t) {
    std::string sp = fmt::format("{}.slots[{}]", P, t);
    reject_unknown_fields(slots.at(t), {"slot", "pieces", "rms", "samples", "warnings"}, sp);
    PwlSlot s;
    s.slot = get_int(slots.at(t), "slot", sp);
    require(s.slot == static_cast<int>(t), ErrorCode::parse,
            "{}: expected slot {} at this position", sp, t);
    const Json& pieces = get_array(slots.at(t), "pieces", sp);
    require(!pieces.empty(), ErrorCode::parse, "{}.pieces: empty", sp);
    for (size_t i = 0; i < pieces.size(); ++i) {
      std::string pp = fmt::format("{}.pieces[{}]", sp, i);
      reject_unknown_fields(pieces.at(i), {"a", "b"}, pp);
      PwlPiece pc;
      pc.a = vec_from_json(member(pieces.at(i), "a", pp), pp + ".a");
      pc.b = get_number(pieces.at(i), "b", pp);
      require(pc.a.size() == K.grouping.num_groups, ErrorCode::parse,
              "{}.a: {} coefficients for {} groups", pp, pc.a.size(), K.grouping.num_groups);
      s.pieces.push_back(std::move(pc));
    }
    s.rms = get_number(slots.at(t), "rms", sp);
    s.samples = get_int(slots.at(t), "samples", sp);
    s.warnings = string_list(slots.at(t), "warnings", sp);
    K.slots.push_back(std::move(s));
  }
  return K;
}

PwlCost load_cost_file(const std::string& path) {
  return cost_from_json(load_json_file(path), path);
}

void save_cost_file(const PwlCost& K, const std::string& path) {
  save_text_file(path, dump_json(cost_to_json(K)));
}

Json net_to_json(const Interconnection& net) {
  Json j;
  j["schema"] = "gridagg-net-v1";
  j["regions"] = string_list_json(net.regions);
  Json ties = Json::array();
  for (const InterTie& t : net.ties) {
    Json jt;
    jt["id"] = t.id;
    jt["region_a"] = t.region_a;
    jt["tie_a"] = t.tie_a;
    jt["region_b"] = t.region_b;
    jt["tie_b"] = t.tie_b;
    jt["kind"] = t.kind == TieKind::AC ? "AC" : "DC";
    if (t.kind == TieKind::AC) jt["reactance"] = t.reactance;
    jt["capacity"] = t.capacity;
    ties.push_back(std::move(jt));
  }
  j["ties"] = std::move(ties);
  return j;
}

Interconnection net_from_json(const Json& doc, const std::string& origin) {
  const std::string& P = origin;
  reject_unknown_fields(doc, {"schema", "regions", "ties"}, P);
  require(get_string(doc, "schema", P) == "gridagg-net-v1", ErrorCode::parse,
          "{}: schema must be gridagg-net-v1", P);
  Interconnection net;
  net.regions = string_list(doc, "regions", P);
  require(!net.regions.empty(), ErrorCode::parse, "{}.regions: empty", P);
  std::set<std::string> ids;
  const Json& ties = get_array(doc, "ties", P);
  for (size_t i = 0; i < ties.size(); ++i) {
    std::string tp = fmt::format("{}.ties[{}]", P, i);
    reject_unknown_fields(
        ties.at(i),
        {"id", "region_a", "tie_a", "region_b", "tie_b", "kind", "reactance", "capacity"}, tp);
    InterTie t;
    t.id = get_string(ties.at(i), "id", tp);
    require(ids.insert(t.id).second, ErrorCode::parse, "{}: duplicate corridor id {}", tp, t.id);
    t.region_a = get_string(ties.at(i), "region_a", tp);
    t.tie_a = get_string(ties.at(i), "tie_a", tp);
    t.region_b = get_string(ties.at(i), "region_b", tp);
    t.tie_b = get_string(ties.at(i), "tie_b", tp);
    std::string kind = get_string(ties.at(i), "kind", tp);
    require(kind == "AC" || kind == "DC", ErrorCode::parse, "{}.kind: must be AC or DC", tp);
    t.kind = kind == "AC" ? TieKind::AC : TieKind::DC;
    t.reactance = get_number_or(ties.at(i), "reactance", 0.0, tp);
    if (t.kind == TieKind::AC)
      require(t.reactance > 0, ErrorCode::parse, "{}.reactance: must be positive on AC corridors",
              tp);
    t.capacity = get_number(ties.at(i), "capacity", tp);
    require(t.capacity >= 0, ErrorCode::parse, "{}.capacity: must be nonnegative", tp);
    net.ties.push_back(std::move(t));
  }
  return net;
}

Interconnection load_net_file(const std::string& path) {
  return net_from_json(load_json_file(path), path);
}

void save_net_file(const Interconnection& net, const std::string& path) {
  save_text_file(path, dump_json(net_to_json(net)));
}

Json dispatch_to_json(const CoordinationResult& res) {
  Json j;
  j["schema"] = "gridagg-dispatch-v1";
  j["status"] = to_string(res.status);
  j["note"] = res.note;
  j["objective"] = res.objective;
  Json regions = Json::array();
  for (const RegionSchedule& s : res.schedules) {
    Json jr;
    jr["region_id"] = s.region_id;
    jr["tie_ids"] = string_list_json(s.tie_ids);
    jr["angle_bus_ids"] = int_list_json(s.angle_bus_ids);
    jr["x_bd"] = vec_to_json(s.x_bd);
    jr["tie_power"] = mat_to_json(s.tie_power);
    jr["angle"] = mat_to_json(s.angle);
    jr["frame_offset"] = vec_to_json(s.frame_offset);
    jr["kappa"] = vec_to_json(s.kappa);
    regions.push_back(std::move(jr));
  }
  j["regions"] = std::move(regions);
  return j;
}

CoordinationResult dispatch_from_json(const Json& doc, const std::string& origin) {
  const std::string& P = origin;
  reject_unknown_fields(doc, {"schema", "status", "note", "objective", "regions"}, P);
  require(get_string(doc, "schema", P) == "gridagg-dispatch-v1", ErrorCode::parse,
          "{}: schema must be gridagg-dispatch-v1", P);
  CoordinationResult res;
  std::string status = get_string(doc, "status", P);
  bool known = false;
  for (SolveStatus st : {SolveStatus::optimal, SolveStatus::infeasible, SolveStatus::unbounded,
                         SolveStatus::limit, SolveStatus::error}) {
    if (status == to_string(st)) {
      res.status = st;
      known = true;
    }
  }
  require(known, ErrorCode::parse, "{}.status: unknown value {}", P, status);
  res.note = get_string(doc, "note", P);
  res.objective = get_number(doc, "objective", P);
  const Json& regions = get_array(doc, "regions", P);
  for (size_t r = 0; r < regions.size(); ++r) {
    std::string rp = fmt::format("{}.regions[{}]", P, r);
    reject_unknown_fields(regions.at(r),
                          {"region_id", "tie_ids", "angle_bus_ids", "x_bd", "tie_power", "angle",
                           "frame_offset", "kappa"},
                          rp);
    RegionSchedule s;
    s.region_id = get_string(regions.at(r), "region_id", rp);
    s.tie_ids = string_list(regions.at(r), "tie_ids", rp);
    s.angle_bus_ids = int_list(regions.at(r), "angle_bus_ids", rp);
    s.x_bd = vec_from_json(member(regions.at(r), "x_bd", rp), rp + ".x_bd");
    s.tie_power = mat_from_json(member(regions.at(r), "tie_power", rp), rp + ".tie_power");
    s.angle = mat_from_json(member(regions.at(r), "angle", rp), rp + ".angle");
    s.frame_offset =
        vec_from_json(member(regions.at(r), "frame_offset", rp), rp + ".frame_offset");
    s.kappa = vec_from_json(member(regions.at(r), "kappa", rp), rp + ".kappa");
    const int T = static_cast<int>(s.kappa.size());
    require(s.tie_power.rows() == static_cast<int>(s.tie_ids.size()) &&
                (s.tie_power.cols() == T || s.tie_ids.empty()),
            ErrorCode::parse, "{}.tie_power: expected {} x {}", rp, s.tie_ids.size(), T);
    require(s.angle.rows() == static_cast<int>(s.angle_bus_ids.size()) &&
                (s.angle.cols() == T || s.angle_bus_ids.empty()),
            ErrorCode::parse, "{}.angle: expected {} x {}", rp, s.angle_bus_ids.size(), T);
    require(s.x_bd.size() ==
                T * (static_cast<int>(s.tie_ids.size()) + static_cast<int>(s.angle_bus_ids.size())),
            ErrorCode::parse, "{}.x_bd: expected {} coordinates", rp,
            T * (s.tie_ids.size() + s.angle_bus_ids.size()));
    res.schedules.push_back(std::move(s));
  }
  return res;
}

CoordinationResult load_dispatch_file(const std::string& path) {
  return dispatch_from_json(load_json_file(path), path);
}

void save_dispatch_file(const CoordinationResult& res, const std::string& path) {
  save_text_file(path, dump_json(dispatch_to_json(res)));
}

}  // namespace gridagg
