#include "gridagg/gridagg.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gridagg/aggregate.h"
#include "gridagg/coordinate.h"
#include "gridagg/cost.h"
#include "gridagg/grid_case.h"
#include "gridagg/json_io.h"
#include "gridagg/model_io.h"
#include "gridagg/pipeline.h"
#include "gridagg/region.h"

using namespace gridagg;

struct ga_case {
  GridCase c;
};
struct ga_model {
  AggregatedModel m;
  Json report = Json::object();
  Json timings = Json::object();
};
struct ga_cost {
  PwlCost k;
  std::vector<CostSample> samples;
};
struct ga_net {
  Interconnection n;
};
struct ga_dispatch {
  CoordinationResult r;
};

namespace {

thread_local std::string g_last_error;

// Exceptions never cross the C boundary; ErrorCode values match GA_ERR_*.
template <typename F>
int guarded(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return GA_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return GA_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// String-returning entry points signal failure with NULL + ga_last_error.
template <typename F>
char* guarded_string(F&& body) noexcept {
  std::string s;
  int rc = guarded([&] { s = body(); });
  if (rc != GA_OK) return nullptr;
  char* out = dup_string(s);
  if (!out) g_last_error = "out of memory";
  return out;
}

Json parse_options(const char* options_json, const std::vector<std::string>& allowed) {
  if (!options_json || !*options_json) return Json::object();
  Json j = parse_json(options_json, "options");
  require(j.is_object(), ErrorCode::invalid_argument, "options must be a JSON object");
  reject_unknown_fields(j, allowed, "options");
  return j;
}

std::uint64_t get_seed(const Json& j) {
  if (!j.contains("seed")) return 0;
  const Json& v = j["seed"];
  require(v.is_number_integer() && !v.is_number_float(), ErrorCode::invalid_argument,
          "options.seed must be an integer");
  return v.get<std::uint64_t>();
}

long get_long(const Json& j, const char* key, long dflt) {
  if (!j.contains(key)) return dflt;
  require(j[key].is_number_integer(), ErrorCode::invalid_argument,
          "options.{} must be an integer", key);
  return j[key].get<long>();
}

AggregateOptions aggregate_options(const char* options_json) {
  Json j = parse_options(options_json, {"max_iter", "envelope_max_iter", "tol", "seed", "jobs",
                                        "search_time_limit", "baseline_box"});
  AggregateOptions o;
  if (j.contains("max_iter")) o.max_iter = get_int(j, "max_iter", "options");
  if (j.contains("envelope_max_iter"))
    o.envelope_max_iter = get_int(j, "envelope_max_iter", "options");
  if (j.contains("tol")) o.tol = get_number(j, "tol", "options");
  if (j.contains("jobs")) o.jobs = get_int(j, "jobs", "options");
  if (j.contains("search_time_limit"))
    o.search_time_limit = get_number(j, "search_time_limit", "options");
  o.baseline_box = get_bool_or(j, "baseline_box", false, "options");
  o.seed = get_seed(j);
  return o;
}

CoverageRunOptions coverage_options(const char* options_json) {
  Json j = parse_options(options_json, {"samples", "soundness_samples", "seed", "tol", "jobs"});
  CoverageRunOptions o;
  o.samples = get_long(j, "samples", o.samples);
  o.soundness_samples = get_long(j, "soundness_samples", o.soundness_samples);
  if (j.contains("tol")) o.tol = get_number(j, "tol", "options");
  if (j.contains("jobs")) o.jobs = get_int(j, "jobs", "options");
  o.seed = get_seed(j);
  return o;
}

TieGrouping grouping_from_json(const Json& groups, const std::vector<std::string>& tie_ids) {
  TieGrouping g;
  g.group_of.assign(tie_ids.size(), -1);
  int next = 0;
  require(groups.is_array(), ErrorCode::invalid_argument, "options.groups must be an array");
  for (const Json& grp : groups) {
    require(grp.is_array() && !grp.empty(), ErrorCode::invalid_argument,
            "options.groups entries must be non-empty arrays of tie ids");
    for (const Json& name : grp) {
      require(name.is_string(), ErrorCode::invalid_argument,
              "options.groups entries must hold tie id strings");
      const std::string id = name.get<std::string>();
      size_t idx = 0;
      while (idx < tie_ids.size() && tie_ids[idx] != id) ++idx;
      require(idx < tie_ids.size(), ErrorCode::invalid_argument,
              "options.groups names unknown tie {}", id);
      require(g.group_of[idx] == -1, ErrorCode::invalid_argument,
              "tie {} appears in more than one group", id);
      g.group_of[idx] = next;
    }
    ++next;
  }
  for (int& v : g.group_of)
    if (v == -1) v = next++;
  g.num_groups = next;
  return g;
}

CostFitOptions cost_options(const char* options_json, const std::vector<std::string>& tie_ids) {
  Json j = parse_options(options_json,
                         {"pieces", "restarts", "seed", "jobs", "counts", "groups"});
  CostFitOptions o;
  if (j.contains("pieces")) o.pieces = get_int(j, "pieces", "options");
  if (j.contains("restarts")) o.restarts = get_int(j, "restarts", "options");
  if (j.contains("jobs")) o.jobs = get_int(j, "jobs", "options");
  o.seed = get_seed(j);
  if (j.contains("counts")) {
    require(j["counts"].is_array(), ErrorCode::invalid_argument,
            "options.counts must be an array of integers");
    for (const Json& v : j["counts"]) {
      require(v.is_number_integer(), ErrorCode::invalid_argument,
              "options.counts must be an array of integers");
      o.counts.push_back(v.get<int>());
    }
  }
  if (j.contains("groups")) o.grouping = grouping_from_json(j["groups"], tie_ids);
  return o;
}

}  // namespace

extern "C" {

const char* ga_version(void) { return "0.1.0"; }

const char* ga_status_name(int status) {
  switch (status) {
    case GA_OK: return "ok";
    case GA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GA_ERR_PARSE: return "parse error";
    case GA_ERR_INFEASIBLE: return "infeasible";
    case GA_ERR_UNVERIFIED: return "unverified";
    case GA_ERR_LIMIT: return "limit reached";
    case GA_ERR_SOLVER: return "solver failure";
    case GA_ERR_IO: return "io error";
    case GA_ERR_INTERNAL: return "internal error";
    default: return "unknown status";
  }
}

const char* ga_last_error(void) { return g_last_error.c_str(); }

void ga_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ cases */

int ga_case_load(const char* path, ga_case** out) {
  return guarded([&] {
    require(path && out, ErrorCode::invalid_argument, "ga_case_load needs path and out");
    auto h = std::make_unique<ga_case>();
    h->c = load_case_file(path);
    *out = h.release();
  });
}

int ga_case_parse(const char* json_text, const char* origin, ga_case** out) {
  return guarded([&] {
    require(json_text && out, ErrorCode::invalid_argument,
            "ga_case_parse needs json_text and out");
    const std::string where = origin ? origin : "<memory>";
    auto h = std::make_unique<ga_case>();
    h->c = load_case(parse_json(json_text, where), where);
    *out = h.release();
  });
}

void ga_case_free(ga_case* c) { delete c; }

char* ga_case_info(const ga_case* c) {
  return guarded_string([&] {
    require(c, ErrorCode::invalid_argument, "ga_case_info needs a case");
    BoundarySelectors sel = boundary_layout(c->c);
    Json j;
    j["region_id"] = c->c.region_id;
    j["horizon"] = c->c.T;
    j["dt_hours"] = c->c.dt;
    j["mva_base"] = c->c.mva_base;
    j["buses"] = c->c.buses.size();
    j["lines"] = c->c.lines.size();
    j["thermal_gens"] = c->c.thermal_gens.size();
    j["renewables"] = c->c.renewables.size();
    j["contingencies"] = c->c.contingencies.size();
    j["ties"] = sel.tie_ids;
    j["ac_angle_buses"] = sel.angle_bus_ids;
    j["boundary_coords"] = sel.n_bd;
    return dump_json(j);
  });
}

/* ----------------------------------------------------------------- models */

int ga_aggregate(const ga_case* c, const char* options_json, ga_model** out) {
  return guarded([&] {
    require(c && out, ErrorCode::invalid_argument, "ga_aggregate needs a case and out");
    AggregateOptions opts = aggregate_options(options_json);
    AggregateResult res = aggregate(c->c, opts);
    auto h = std::make_unique<ga_model>();
    h->m = std::move(res.model);
    h->report = std::move(res.report);
    h->timings = std::move(res.timings);
    *out = h.release();
  });
}

int ga_model_load(const char* path, ga_model** out) {
  return guarded([&] {
    require(path && out, ErrorCode::invalid_argument, "ga_model_load needs path and out");
    auto h = std::make_unique<ga_model>();
    h->m = load_model_file(path);
    *out = h.release();
  });
}

void ga_model_free(ga_model* m) { delete m; }

char* ga_model_to_json(const ga_model* m) {
  return guarded_string([&] {
    require(m, ErrorCode::invalid_argument, "ga_model_to_json needs a model");
    return dump_json(model_to_json(m->m));
  });
}

char* ga_model_report(const ga_model* m) {
  return guarded_string([&] {
    require(m, ErrorCode::invalid_argument, "ga_model_report needs a model");
    return render_report(m->report);
  });
}

char* ga_model_timings(const ga_model* m) {
  return guarded_string([&] {
    require(m, ErrorCode::invalid_argument, "ga_model_timings needs a model");
    return dump_json(m->timings);
  });
}

int ga_model_verified(const ga_model* m) { return m && m->m.verified ? 1 : 0; }

int ga_coverage(const ga_case* c, const ga_model* m, const char* options_json,
                char** json_out) {
  return guarded([&] {
    require(c && m && json_out, ErrorCode::invalid_argument,
            "ga_coverage needs a case, a model, and out");
    Json doc = coverage_report(c->c, m->m, coverage_options(options_json));
    *json_out = dup_string(dump_json(doc));
    require(*json_out, ErrorCode::internal, "out of memory");
  });
}

/* ------------------------------------------------------------------ costs */

int ga_cost_fit(const ga_case* c, const ga_model* m, const char* options_json, ga_cost** out) {
  return guarded([&] {
    require(c && m && out, ErrorCode::invalid_argument,
            "ga_cost_fit needs a case, a model, and out");
    CostFitOptions opts = cost_options(options_json, m->m.tie_ids);
    auto h = std::make_unique<ga_cost>();
    h->k = fit_cost_model(c->c, m->m, opts, &h->samples);
    *out = h.release();
  });
}

int ga_cost_load(const char* path, ga_cost** out) {
  return guarded([&] {
    require(path && out, ErrorCode::invalid_argument, "ga_cost_load needs path and out");
    auto h = std::make_unique<ga_cost>();
    h->k = load_cost_file(path);
    *out = h.release();
  });
}

void ga_cost_free(ga_cost* k) { delete k; }

char* ga_cost_to_json(const ga_cost* k) {
  return guarded_string([&] {
    require(k, ErrorCode::invalid_argument, "ga_cost_to_json needs a cost model");
    return dump_json(cost_to_json(k->k));
  });
}

char* ga_cost_samples_csv(const ga_cost* k) {
  return guarded_string([&] {
    require(k, ErrorCode::invalid_argument, "ga_cost_samples_csv needs a cost model");
    return cost_samples_csv(k->samples, k->k);
  });
}

/* ------------------------------------------------------------ coordination */

int ga_net_load(const char* path, ga_net** out) {
  return guarded([&] {
    require(path && out, ErrorCode::invalid_argument, "ga_net_load needs path and out");
    auto h = std::make_unique<ga_net>();
    h->n = load_net_file(path);
    *out = h.release();
  });
}

void ga_net_free(ga_net* n) { delete n; }

char* ga_net_corridors(const ga_net* n) {
  return guarded_string([&] {
    require(n, ErrorCode::invalid_argument, "ga_net_corridors needs a net");
    std::string out;
    for (const InterTie& t : n->n.ties) {
      out += t.id;
      out += '\n';
    }
    return out;
  });
}

int ga_dispatch_run(const ga_model* const* models, const ga_cost* const* costs, int n,
                    const ga_net* net, ga_dispatch** out) {
  return guarded([&] {
    require(models && costs && net && out && n >= 1, ErrorCode::invalid_argument,
            "ga_dispatch_run needs models, costs, a net, and out");
    std::vector<AggregatedModel> ms;
    std::vector<PwlCost> ks;
    ms.reserve(static_cast<size_t>(n));
    ks.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      require(models[i] && costs[i], ErrorCode::invalid_argument,
              "ga_dispatch_run entry {} is null", i);
      ms.push_back(models[i]->m);
      ks.push_back(costs[i]->k);
    }
    auto h = std::make_unique<ga_dispatch>();
    h->r = coordinate(ms, ks, net->n);
    *out = h.release();
  });
}

int ga_dispatch_load(const char* path, ga_dispatch** out) {
  return guarded([&] {
    require(path && out, ErrorCode::invalid_argument, "ga_dispatch_load needs path and out");
    auto h = std::make_unique<ga_dispatch>();
    h->r = load_dispatch_file(path);
    *out = h.release();
  });
}

void ga_dispatch_free(ga_dispatch* d) { delete d; }

char* ga_dispatch_to_json(const ga_dispatch* d) {
  return guarded_string([&] {
    require(d, ErrorCode::invalid_argument, "ga_dispatch_to_json needs a dispatch");
    return dump_json(dispatch_to_json(d->r));
  });
}

int ga_dispatch_optimal(const ga_dispatch* d) {
  return d && d->r.status == SolveStatus::optimal ? 1 : 0;
}

char* ga_dispatch_note(const ga_dispatch* d) {
  return guarded_string([&] {
    require(d, ErrorCode::invalid_argument, "ga_dispatch_note needs a dispatch");
    return d->r.note;
  });
}

char* ga_dispatch_tie_csv(const ga_dispatch* d, const ga_net* net, const char* corridor_id) {
  return guarded_string([&] {
    require(d && net && corridor_id, ErrorCode::invalid_argument,
            "ga_dispatch_tie_csv needs a dispatch, a net, and a corridor id");
    return tie_flow_csv(d->r, net->n, corridor_id);
  });
}

int ga_verify(const ga_case* c, const ga_model* m, const ga_dispatch* d, char** json_out,
              int* ok_out) {
  return guarded([&] {
    require(c && m && d && json_out, ErrorCode::invalid_argument,
            "ga_verify needs a case, a model, a dispatch, and out");
    Json doc = verify_schedule(c->c, m->m, d->r);
    const bool ok = doc.value("in_model", false) &&
                    doc.value("disaggregation", std::string()) == "feasible";
    *json_out = dup_string(dump_json(doc));
    require(*json_out, ErrorCode::internal, "out of memory");
    if (ok_out) *ok_out = ok ? 1 : 0;
  });
}

}  // extern "C"
