#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gridagg/common.h"

namespace gridagg {

// Insertion-ordered documents keep serialized output stable across runs.
using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& origin);
void save_text_file(const std::string& path, const std::string& text);
std::string dump_json(const Json& j);  // canonical form: 2-space indent, '\n' EOF

// Typed field access with full JSON-pointer style paths in error messages.
const Json& member(const Json& j, const std::string& key, const std::string& path);
double get_number(const Json& j, const std::string& key, const std::string& path);
double get_number_or(const Json& j, const std::string& key, double dflt, const std::string& path);
int get_int(const Json& j, const std::string& key, const std::string& path);
std::string get_string(const Json& j, const std::string& key, const std::string& path);
bool get_bool_or(const Json& j, const std::string& key, bool dflt, const std::string& path);
const Json& get_array(const Json& j, const std::string& key, const std::string& path);

// Rejects keys outside `allowed` so schema drift is caught at the parse step.
void reject_unknown_fields(const Json& j, const std::vector<std::string>& allowed,
                           const std::string& path);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& a, const std::string& path);
Json mat_to_json(const Mat& m);  // row-major nested arrays
Mat mat_from_json(const Json& a, const std::string& path);

}  // namespace gridagg
