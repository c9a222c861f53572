#include "gridagg/json_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

namespace gridagg {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open {}", path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::parse, "{}: {}", origin, e.what());
  }
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::io, "cannot write {}", path);
  out << text;
  if (!out) fail(ErrorCode::io, "short write to {}", path);
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(ErrorCode::parse, "{}: expected object", path);
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorCode::parse, "{}.{}: missing", path, key);
  return *it;
}

double get_number(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = member(j, key, path);
  if (!v.is_number()) fail(ErrorCode::parse, "{}.{}: expected number", path, key);
  double x = v.get<double>();
  if (!std::isfinite(x)) fail(ErrorCode::parse, "{}.{}: must be finite", path, key);
  return x;
}

double get_number_or(const Json& j, const std::string& key, double dflt, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) return dflt;
  return get_number(j, key, path);
}

int get_int(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = member(j, key, path);
  if (!v.is_number_integer()) fail(ErrorCode::parse, "{}.{}: expected integer", path, key);
  return v.get<int>();
}

std::string get_string(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = member(j, key, path);
  if (!v.is_string()) fail(ErrorCode::parse, "{}.{}: expected string", path, key);
  return v.get<std::string>();
}

bool get_bool_or(const Json& j, const std::string& key, bool dflt, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) return dflt;
  const Json& v = j.at(key);
  if (!v.is_boolean()) fail(ErrorCode::parse, "{}.{}: expected bool", path, key);
  return v.get<bool>();
}

const Json& get_array(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = member(j, key, path);
  if (!v.is_array()) fail(ErrorCode::parse, "{}.{}: expected array", path, key);
  return v;
}

void reject_unknown_fields(const Json& j, const std::vector<std::string>& allowed,
                           const std::string& path) {
  if (!j.is_object()) return;
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const auto& a : allowed)
      if (it.key() == a) {
        known = true;
        break;
      }
    if (!known) fail(ErrorCode::parse, "{}.{}: unknown field", path, it.key());
  }
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Vec vec_from_json(const Json& a, const std::string& path) {
  if (!a.is_array()) fail(ErrorCode::parse, "{}: expected array", path);
  Vec v(static_cast<Eigen::Index>(a.size()));
  Eigen::Index i = 0;
  for (const auto& x : a) {
    if (!x.is_number()) fail(ErrorCode::parse, "{}[{}]: expected number", path, i);
    v[i++] = x.get<double>();
  }
  return v;
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i).transpose()));
  return rows;
}

Mat mat_from_json(const Json& a, const std::string& path) {
  if (!a.is_array()) fail(ErrorCode::parse, "{}: expected array of rows", path);
  if (a.empty()) return Mat(0, 0);
  std::vector<Vec> rows;
  Eigen::Index cols = -1;
  Eigen::Index i = 0;
  for (const auto& r : a) {
    Vec v = vec_from_json(r, fmt::format("{}[{}]", path, i++));
    if (cols < 0) cols = v.size();
    if (v.size() != cols) fail(ErrorCode::parse, "{}: ragged rows", path);
    rows.push_back(std::move(v));
  }
  Mat m(static_cast<Eigen::Index>(rows.size()), cols);
  for (Eigen::Index r = 0; r < m.rows(); ++r) m.row(r) = rows[static_cast<size_t>(r)].transpose();
  return m;
}

}  // namespace gridagg
