#include "gridagg/pipeline.h"

#include <fmt/format.h>

#include <algorithm>
#include <string>
#include <vector>

#include "gridagg/region.h"
#include "gridagg/sampling.h"

namespace gridagg {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// One sampled dimension per group; the header names the ties it sums.
std::vector<std::string> group_names(const PwlCost& K) {
  std::vector<std::vector<std::string>> members(static_cast<size_t>(K.grouping.num_groups));
  for (size_t i = 0; i < K.grouping.group_of.size(); ++i)
    members[static_cast<size_t>(K.grouping.group_of[i])].push_back(K.tie_ids[i]);
  std::vector<std::string> names;
  names.reserve(members.size());
  for (const auto& m : members) names.push_back(join(m, "+"));
  return names;
}

void require_layout(const GridCase& c, const AggregatedModel& M, const BoundarySelectors& sel) {
  require(M.region_id == c.region_id && M.T == sel.T && M.tie_ids == sel.tie_ids &&
              M.angle_bus_ids == sel.angle_bus_ids,
          ErrorCode::invalid_argument, "model {} does not describe case {}", M.region_id,
          c.region_id);
}

}  // namespace

std::string render_report(const Json& report) {
  std::string out;
  auto line = [&out](std::string s) {
    out += s;
    out += '\n';
  };

  line(fmt::format("region {}", report.value("region_id", std::string("?"))));
  const std::string kind = report.value("kind", std::string("full"));
  line(kind == "box" ? "model  per-coordinate interval box"
                     : "model  per-tie windows with per-slot ellipsoids");
  if (report.contains("boundary")) {
    const Json& b = report["boundary"];
    std::vector<std::string> ties = b.value("ties", std::vector<std::string>{});
    std::vector<int> buses = b.value("ac_angle_buses", std::vector<int>{});
    line(fmt::format("boundary {} slots, {} coordinates each", b.value("slots", 0),
                     b.value("per_slot", 0)));
    line(fmt::format("  ties: {}", join(ties, ", ")));
    if (!buses.empty()) {
      std::string ids;
      for (size_t i = 0; i < buses.size(); ++i)
        ids += fmt::format("{}{}", i ? ", " : "", buses[i]);
      line(fmt::format("  AC boundary angle buses: {}", ids));
    }
  }
  if (report.contains("region_rows")) {
    line("");
    line("region constraint rows");
    for (auto& [name, count] : report["region_rows"].items())
      line(fmt::format("  {:<28} {}", name, count.get<long>()));
  }

  if (report.contains("envelope_fits")) {
    line("");
    line("per-tie window fits");
    for (const Json& e : report["envelope_fits"]) {
      std::string s = fmt::format("  {:<12} {} after {} iterations",
                                  e.value("tie_id", std::string("?")),
                                  e.value("verified", false) ? "verified" : "unverified",
                                  e.value("iterations", 0));
      if (e.contains("note")) s += fmt::format(" ({})", e["note"].get<std::string>());
      line(s);
    }
  }
  if (report.contains("slice_fits")) {
    line("");
    line("per-slot ellipsoid fits");
    for (const Json& e : report["slice_fits"])
      line(fmt::format("  slot {:<3} log det {:.8f}", e.value("slot", 0),
                       e.value("log_det", 0.0)));
  }

  if (report.contains("loop")) {
    const Json& lp = report["loop"];
    line("");
    if (lp.value("verified", false)) {
      line(fmt::format("joint loop verified the model after {} shrink steps",
                       lp.value("shrink_steps", 0)));
    } else {
      line(fmt::format("joint loop stopped UNVERIFIED after {} shrink steps",
                       lp.value("shrink_steps", 0)));
      if (lp.contains("note")) line(fmt::format("  reason: {}", lp["note"].get<std::string>()));
    }
    for (const Json& ev : lp.value("events", Json::array())) {
      std::string s = fmt::format("  it {:<3} {} ({})", ev.value("iteration", 0),
                                  ev.value("status", std::string("?")),
                                  ev.value("method", std::string("?")));
      if (ev.contains("residual"))
        s += fmt::format(", residual {:.3e}", ev["residual"].get<double>());
      if (ev.contains("active_slots"))
        s += fmt::format(", tightened {} slots + {} rows", ev["active_slots"].get<long>(),
                         ev["active_rows"].get<long>());
      if (ev.contains("progress"))
        s += fmt::format(", progress {:.3e}", ev["progress"].get<double>());
      if (ev.contains("note")) s += fmt::format(" ({})", ev["note"].get<std::string>());
      line(s);
    }
  }

  if (report.contains("anomalies")) {
    line("");
    line("anomalies");
    for (const Json& a : report["anomalies"]) line(fmt::format("  - {}", a.get<std::string>()));
  }
  return out;
}

Json coverage_report(const GridCase& c, const AggregatedModel& M,
                     const CoverageRunOptions& opts) {
  require(opts.samples >= 1 && opts.soundness_samples >= 0, ErrorCode::invalid_argument,
          "coverage needs at least one sample");
  auto [region, sel] = assemble_feasible_region(c);
  require_layout(c, M, sel);

  CoverageEstimate cov = coverage_rate(M, region, opts.samples, opts.seed, opts.jobs);
  Json out;
  out["region_id"] = M.region_id;
  out["model_verified"] = M.verified;
  Json cj;
  cj["samples"] = cov.k;
  cj["rate"] = cov.rate;
  cj["ci95"] = Json::array({cov.ci_lo, cov.ci_hi});
  out["coverage"] = std::move(cj);
  if (opts.soundness_samples > 0) {
    SoundnessCheck snd = verify_soundness(M, region, opts.soundness_samples,
                                          mix_seed(opts.seed, 0x736f756eULL), opts.tol,
                                          opts.jobs);
    Json sj;
    sj["samples"] = snd.k;
    sj["violations"] = snd.violations;
    sj["worst_residual"] = snd.worst;
    out["soundness"] = std::move(sj);
  }
  return out;
}

std::string cost_samples_csv(const std::vector<CostSample>& samples, const PwlCost& K) {
  std::string out = "slot";
  for (const std::string& g : group_names(K)) out += fmt::format(",{}_mw", g);
  out += ",cost,feasible\n";
  for (const CostSample& s : samples) {
    require(s.setpoint.size() == K.grouping.num_groups, ErrorCode::invalid_argument,
            "sample spans {} dimensions, the cost model {}", s.setpoint.size(),
            K.grouping.num_groups);
    out += fmt::format("{}", s.slot);
    for (int g = 0; g < s.setpoint.size(); ++g) out += fmt::format(",{}", s.setpoint(g));
    if (s.feasible)
      out += fmt::format(",{},1\n", s.cost);
    else
      out += ",,0\n";
  }
  return out;
}

std::string tie_flow_csv(const CoordinationResult& res, const Interconnection& net,
                         const std::string& corridor_id) {
  const InterTie* tie = nullptr;
  for (const InterTie& t : net.ties)
    if (t.id == corridor_id) tie = &t;
  require(tie != nullptr, ErrorCode::invalid_argument, "interconnection has no corridor {}",
          corridor_id);
  require(res.status == SolveStatus::optimal, ErrorCode::invalid_argument,
          "dispatch is {}; there is no schedule to export", to_string(res.status));

  auto end_row = [&res](const std::string& region, const std::string& tie_id) {
    for (const RegionSchedule& s : res.schedules)
      if (s.region_id == region) {
        for (size_t i = 0; i < s.tie_ids.size(); ++i)
          if (s.tie_ids[i] == tie_id) return std::pair<const RegionSchedule*, int>{&s, (int)i};
        fail(ErrorCode::invalid_argument, "schedule of region {} has no tie {}", region,
             tie_id);
      }
    fail(ErrorCode::invalid_argument, "dispatch has no schedule for region {}", region);
  };
  auto [sa, ra] = end_row(tie->region_a, tie->tie_a);
  auto [sb, rb] = end_row(tie->region_b, tie->tie_b);
  require(sa->tie_power.cols() == sb->tie_power.cols(), ErrorCode::invalid_argument,
          "schedules of {} and {} disagree on the horizon", tie->region_a, tie->region_b);

  std::string out =
      fmt::format("slot,{}_export_mw,{}_export_mw\n", tie->region_a, tie->region_b);
  for (int t = 0; t < sa->tie_power.cols(); ++t)
    out += fmt::format("{},{},{}\n", t, sa->tie_power(ra, t), sb->tie_power(rb, t));
  return out;
}

Json verify_schedule(const GridCase& c, const AggregatedModel& M,
                     const CoordinationResult& dispatch) {
  require(dispatch.status == SolveStatus::optimal, ErrorCode::invalid_argument,
          "dispatch is {}; there is no schedule to verify", to_string(dispatch.status));
  const RegionSchedule* sched = nullptr;
  for (const RegionSchedule& s : dispatch.schedules)
    if (s.region_id == M.region_id) sched = &s;
  require(sched != nullptr, ErrorCode::invalid_argument,
          "dispatch has no schedule for region {}", M.region_id);
  require(sched->tie_ids == M.tie_ids && sched->angle_bus_ids == M.angle_bus_ids &&
              sched->x_bd.size() == M.selectors().n_bd,
          ErrorCode::invalid_argument, "schedule of region {} does not match the model layout",
          M.region_id);

  Json out;
  out["region_id"] = M.region_id;
  out["model_verified"] = M.verified;
  const bool in_model = M.contains(sched->x_bd, 1e-6);
  out["in_model"] = in_model;
  out["fitted_cost"] = sched->kappa.sum();
  if (!in_model) {
    out["disaggregation"] = "skipped";
    out["note"] = "schedule lies outside the aggregated model; nothing to disaggregate";
    return out;
  }
  RegionDispatch d = disaggregate(c, M, sched->x_bd);
  out["disaggregation"] = "feasible";
  out["true_cost"] = d.cost;
  return out;
}

}  // namespace gridagg
