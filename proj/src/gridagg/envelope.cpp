#include "gridagg/envelope.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "gridagg/outlier.h"
#include "gridagg/sampling.h"
#include "gridagg/solve.h"

namespace gridagg {

namespace {

void check_window(const Vec& p_lo, const Vec& p_hi, const Vec& r_lo, const Vec& r_hi,
                  const std::string& what) {
  const int T = static_cast<int>(p_lo.size());
  require(T >= 1, ErrorCode::invalid_argument, "{}: horizon must be >= 1", what);
  require(p_hi.size() == T, ErrorCode::invalid_argument, "{}: p_lo/p_hi size mismatch", what);
  require(r_lo.size() == r_hi.size() && (r_lo.size() == T - 1 || r_lo.size() == 0),
          ErrorCode::invalid_argument, "{}: ramp bounds must have {} or 0 entries, got {}/{}",
          what, T - 1, r_lo.size(), r_hi.size());
  for (int t = 0; t < T; ++t)
    require(p_lo(t) <= p_hi(t), ErrorCode::invalid_argument,
            "{}: power window crossed at slot {} ({} > {})", what, t, p_lo(t), p_hi(t));
  for (int t = 0; t < static_cast<int>(r_lo.size()); ++t)
    require(r_lo(t) <= r_hi(t), ErrorCode::invalid_argument,
            "{}: ramp window crossed at step {} ({} > {})", what, t, r_lo(t), r_hi(t));
}

}  // namespace

HPolytope GeneratorEnvelope::polytope() const {
  const int T_ = T();
  const int nr = ramp_rows();
  Mat A = Mat::Zero(rows(), T_);
  Vec b(rows());
  for (int t = 0; t < T_; ++t) {
    A(t, t) = 1.0;
    b(t) = p_hi(t);
    A(T_ + t, t) = -1.0;
    b(T_ + t) = -p_lo(t);
  }
  for (int t = 0; t < nr; ++t) {
    int up = 2 * T_ + t;
    int dn = 2 * T_ + nr + t;
    A(up, t + 1) = 1.0 / dt;
    A(up, t) = -1.0 / dt;
    b(up) = r_hi(t);
    A(dn, t + 1) = -1.0 / dt;
    A(dn, t) = 1.0 / dt;
    b(dn) = -r_lo(t);
  }
  return HPolytope(std::move(A), std::move(b));
}

Vec GeneratorEnvelope::b_tie() const {
  const int T_ = T();
  const int nr = ramp_rows();
  Vec b(rows());
  b.segment(0, T_) = p_hi;
  b.segment(T_, T_) = -p_lo;
  if (nr > 0) {
    b.segment(2 * T_, nr) = r_hi;
    b.segment(2 * T_ + nr, nr) = -r_lo;
  }
  return b;
}

void GeneratorEnvelope::set_b_tie(const Vec& b) {
  const int T_ = T();
  const int nr = ramp_rows();
  require(b.size() == rows(), ErrorCode::invalid_argument,
          "envelope bound vector has {} entries, expected {}", b.size(), rows());
  Vec new_hi = b.segment(0, T_);
  Vec new_lo = -b.segment(T_, T_);
  Vec new_rhi = r_hi, new_rlo = r_lo;
  if (nr > 0) {
    new_rhi = b.segment(2 * T_, nr);
    new_rlo = -b.segment(2 * T_ + nr, nr);
  }
  check_window(new_lo, new_hi, new_rlo, new_rhi, fmt::format("tie {}", tie_id));
  p_hi = std::move(new_hi);
  p_lo = std::move(new_lo);
  r_hi = std::move(new_rhi);
  r_lo = std::move(new_rlo);
}

Json GeneratorEnvelope::to_json() const {
  Json j;
  j["tie_id"] = tie_id;
  j["tie_index"] = tie_index;
  j["dt_hours"] = dt;
  j["p_lo"] = vec_to_json(p_lo);
  j["p_hi"] = vec_to_json(p_hi);
  j["r_lo"] = vec_to_json(r_lo);
  j["r_hi"] = vec_to_json(r_hi);
  j["verified"] = verified;
  j["shrink_iters"] = shrink_iters;
  if (!note.empty()) j["note"] = note;
  return j;
}

GeneratorEnvelope GeneratorEnvelope::from_json(const Json& j, const std::string& path) {
  reject_unknown_fields(j,
                        {"tie_id", "tie_index", "dt_hours", "p_lo", "p_hi", "r_lo", "r_hi",
                         "verified", "shrink_iters", "note"},
                        path);
  GeneratorEnvelope env;
  env.tie_id = get_string(j, "tie_id", path);
  env.tie_index = get_int(j, "tie_index", path);
  env.dt = get_number(j, "dt_hours", path);
  require(env.dt > 0, ErrorCode::parse, "{}.dt_hours must be positive", path);
  env.p_lo = vec_from_json(get_array(j, "p_lo", path), path + ".p_lo");
  env.p_hi = vec_from_json(get_array(j, "p_hi", path), path + ".p_hi");
  env.r_lo = vec_from_json(get_array(j, "r_lo", path), path + ".r_lo");
  env.r_hi = vec_from_json(get_array(j, "r_hi", path), path + ".r_hi");
  env.verified = get_bool_or(j, "verified", false, path);
  env.shrink_iters = get_int(j, "shrink_iters", path);
  if (j.contains("note")) env.note = get_string(j, "note", path);
  check_window(env.p_lo, env.p_hi, env.r_lo, env.r_hi, path);
  return env;
}

Json TimeSliceEllipsoid::to_json() const {
  Json j;
  j["slot"] = slot;
  j["ellipsoid"] = ell.to_json();
  return j;
}

TimeSliceEllipsoid TimeSliceEllipsoid::from_json(const Json& j, const std::string& path) {
  reject_unknown_fields(j, {"slot", "ellipsoid"}, path);
  TimeSliceEllipsoid s;
  s.slot = get_int(j, "slot", path);
  require(s.slot >= 0, ErrorCode::parse, "{}.slot must be >= 0", path);
  s.ell = Ellipsoid::from_json(member(j, "ellipsoid", path), path + ".ellipsoid");
  return s;
}

GeneratorEnvelope circumscribe_envelope(const FeasibleRegionHD& region,
                                        const BoundarySelectors& sel, int tie_index) {
  require(tie_index >= 0 && tie_index < sel.num_ties(), ErrorCode::invalid_argument,
          "tie index {} out of range (layout has {} ties)", tie_index, sel.num_ties());
  require(region.n_bd == sel.n_bd, ErrorCode::invalid_argument,
          "selector layout ({} boundary coords) does not match the region ({})", sel.n_bd,
          region.n_bd);
  const int T = sel.T;
  const std::string& id = sel.tie_ids[static_cast<size_t>(tie_index)];
  Mat S = sel.S_tie(tie_index);
  Mat M = S * region.C;  // T x n_int
  Vec m0 = S * region.d;

  ConicProblem p;
  p.add_vars(region.n_int, -kInf, kInf);
  for (int i = 0; i < region.rows(); ++i) {
    LinExpr e;
    for (SpMatR::InnerIterator it(region.F, i); it; ++it)
      e.add(static_cast<int>(it.col()), it.value());
    p.add_row_le(region.f(i), e);
  }

  auto extent = [&](const Vec& c, double shift, const std::string& what) {
    std::fill(p.c.begin(), p.c.end(), 0.0);
    for (int j = 0; j < region.n_int; ++j)
      if (c(j) != 0.0) p.set_obj(j, c(j));
    p.sense = Sense::minimize;
    SolveOutcome lo = solve(p);
    require(lo.status != SolveStatus::unbounded, ErrorCode::invalid_argument,
            "tie {} {} has no lower bound in the region; add a tie capacity or tighter "
            "device limits",
            id, what);
    require(lo.status == SolveStatus::optimal, ErrorCode::solver,
            "bound solve for tie {} {} returned {}", id, what, to_string(lo.status));
    p.sense = Sense::maximize;
    SolveOutcome hi = solve(p);
    require(hi.status != SolveStatus::unbounded, ErrorCode::invalid_argument,
            "tie {} {} has no upper bound in the region; add a tie capacity or tighter "
            "device limits",
            id, what);
    require(hi.status == SolveStatus::optimal, ErrorCode::solver,
            "bound solve for tie {} {} returned {}", id, what, to_string(hi.status));
    return std::pair<double, double>(lo.obj + shift, hi.obj + shift);
  };

  GeneratorEnvelope env;
  env.tie_id = id;
  env.tie_index = tie_index;
  env.dt = sel.dt;
  env.p_lo.resize(T);
  env.p_hi.resize(T);
  env.r_lo.resize(T - 1);
  env.r_hi.resize(T - 1);
  for (int t = 0; t < T; ++t) {
    auto [lo, hi] = extent(M.row(t).transpose(), m0(t), fmt::format("power at slot {}", t));
    env.p_lo(t) = lo;
    env.p_hi(t) = hi;
  }
  for (int t = 0; t + 1 < T; ++t) {
    Vec g = ((M.row(t + 1) - M.row(t)) / env.dt).transpose();
    double g0 = (m0(t + 1) - m0(t)) / env.dt;
    auto [lo, hi] = extent(g, g0, fmt::format("ramp into slot {}", t + 1));
    env.r_lo(t) = lo;
    env.r_hi(t) = hi;
  }
  return env;
}

GeneratorEnvelope shrink_envelope(const FeasibleRegionHD& region, const BoundarySelectors& sel,
                                  int tie_index, GeneratorEnvelope env,
                                  const EnvelopeShrinkOptions& opts) {
  require(env.T() == sel.T, ErrorCode::invalid_argument,
          "envelope horizon {} does not match layout horizon {}", env.T(), sel.T);
  Mat S = sel.S_tie(tie_index);
  PreimageMap map{S * region.C, S * region.d};

  env.verified = false;
  env.note.clear();
  for (int k = 0; k <= opts.max_iter; ++k) {
    env.shrink_iters = k;
    ConvexBody body;
    body.dim = env.T();
    body.poly = env.polytope();

    UncoveredSearchOptions so;
    so.tol = opts.tol;
    so.probes = opts.probes;
    so.time_limit = opts.search_time_limit;
    so.seed = mix_seed(opts.seed, static_cast<std::uint64_t>(k));
    UncoveredResult found = find_uncovered_point(body, map, region, so);

    if (found.status == UncoveredStatus::none) {
      env.verified = true;
      return env;
    }
    if (found.status == UncoveredStatus::inconclusive) {
      env.note = fmt::format("window search came back open: {}", found.note);
      return env;
    }
    if (k == opts.max_iter) break;

    Vec z = nearest_covered_point(map, region, found.y);
    const HPolytope& poly = body.poly;
    std::vector<int> active;
    for (int j = 0; j < poly.rows(); ++j)
      if (std::abs(poly.A.row(j).dot(found.y) - poly.b(j)) <= 1e-6 * (1.0 + std::abs(poly.b(j))))
        active.push_back(j);
    if (active.empty()) {
      // interior landing: shrink the bounds best aligned with the escape direction
      Vec dir = found.y - z;
      double best = -kInf;
      std::vector<double> score(static_cast<size_t>(poly.rows()));
      for (int j = 0; j < poly.rows(); ++j) {
        score[static_cast<size_t>(j)] = poly.A.row(j).dot(dir) / poly.A.row(j).norm();
        best = std::max(best, score[static_cast<size_t>(j)]);
      }
      for (int j = 0; j < poly.rows(); ++j)
        if (score[static_cast<size_t>(j)] >= best - 1e-9) active.push_back(j);
    }

    Vec b = env.b_tie();
    int moved = 0;
    for (int j : active) {
      double target = poly.A.row(j).dot(z);
      if (target <= b(j) - 1e-9) {
        b(j) = target;
        ++moved;
      }
    }
    if (moved == 0) {
      env.note = "shrink stalled: no active bound moved by the minimum step";
      return env;
    }
    GeneratorEnvelope next = env;
    try {
      next.set_b_tie(b);
    } catch (const Error& e) {
      env.note = fmt::format("shrink stopped before crossing bounds: {}", e.what());
      return env;
    }
    if (poly_empty(next.polytope())) {
      env.note = "shrink stopped: the updated window has no feasible schedule";
      return env;
    }
    next.shrink_iters = env.shrink_iters;
    env = std::move(next);
  }
  env.note = fmt::format("iteration cap {} reached before verification", opts.max_iter);
  return env;
}

}  // namespace gridagg
