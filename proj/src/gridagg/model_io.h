#pragma once

#include <string>

#include "gridagg/aggregate.h"
#include "gridagg/coordinate.h"
#include "gridagg/cost.h"
#include "gridagg/json_io.h"

namespace gridagg {

// File formats. Each *_to_json / *_from_json pair round-trips bit-exact
// through dump_json (field order fixed, doubles shortest-round-trip).

// gridagg-model-v1
Json model_to_json(const AggregatedModel& M);
AggregatedModel model_from_json(const Json& doc, const std::string& origin);
AggregatedModel load_model_file(const std::string& path);
void save_model_file(const AggregatedModel& M, const std::string& path);

// gridagg-cost-v1
Json cost_to_json(const PwlCost& K);
PwlCost cost_from_json(const Json& doc, const std::string& origin);
PwlCost load_cost_file(const std::string& path);
void save_cost_file(const PwlCost& K, const std::string& path);

// gridagg-net-v1
Json net_to_json(const Interconnection& net);
Interconnection net_from_json(const Json& doc, const std::string& origin);
Interconnection load_net_file(const std::string& path);
void save_net_file(const Interconnection& net, const std::string& path);

// gridagg-dispatch-v1
Json dispatch_to_json(const CoordinationResult& res);
CoordinationResult dispatch_from_json(const Json& doc, const std::string& origin);
CoordinationResult load_dispatch_file(const std::string& path);
void save_dispatch_file(const CoordinationResult& res, const std::string& path);

}  // namespace gridagg
