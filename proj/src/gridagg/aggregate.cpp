#include "gridagg/aggregate.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <tuple>
#include <utility>

#include "gridagg/mve.h"
#include "gridagg/parallel.h"
#include "gridagg/sampling.h"
#include "gridagg/solve.h"

namespace gridagg {

namespace {

constexpr double kMinStep = 1e-9;       // smallest bound move that counts as progress
constexpr double kActiveTol = 1e-6;     // relative tightness tolerance
constexpr long kCoverageChunk = 2000;   // fixed so results never depend on jobs

// Per-slot extent of one boundary row over the region; used for the box
// baseline's angle intervals.
std::pair<double, double> boundary_extent(const FeasibleRegionHD& region, const Vec& row,
                                          double shift, const std::string& what) {
  ConicProblem p;
  p.add_vars(region.n_int, -kInf, kInf);
  for (int i = 0; i < region.rows(); ++i) {
    LinExpr e;
    for (SpMatR::InnerIterator it(region.F, i); it; ++it)
      e.add(static_cast<int>(it.col()), it.value());
    p.add_row_le(region.f(i), e);
  }
  for (int j = 0; j < region.n_int; ++j)
    if (row(j) != 0.0) p.set_obj(j, row(j));
  SolveOutcome lo = solve(p);
  p.sense = Sense::maximize;
  SolveOutcome hi = solve(p);
  require(lo.status != SolveStatus::unbounded && hi.status != SolveStatus::unbounded,
          ErrorCode::invalid_argument, "{} is unbounded over the region", what);
  require(lo.status == SolveStatus::optimal && hi.status == SolveStatus::optimal,
          ErrorCode::solver, "extent solve for {} returned {}/{}", what, to_string(lo.status),
          to_string(hi.status));
  return {lo.obj + shift, hi.obj + shift};
}

Vec subvector(const Vec& x, const std::vector<int>& coords) {
  Vec y(static_cast<int>(coords.size()));
  for (int i = 0; i < y.size(); ++i) y(i) = x(coords[static_cast<size_t>(i)]);
  return y;
}

}  // namespace

BoundarySelectors AggregatedModel::selectors() const {
  return make_selectors(T, dt, tie_ids, tie_bus, angle_bus_ids);
}

ConvexBody AggregatedModel::body() const {
  require(static_cast<int>(envelopes.size()) == num_ties(), ErrorCode::invalid_argument,
          "model has {} envelopes for {} ties", envelopes.size(), num_ties());
  BoundarySelectors sel = selectors();
  const bool boxed = !angle_lo.empty();
  require(!boxed || (static_cast<int>(angle_lo.size()) == T &&
                     static_cast<int>(angle_hi.size()) == T),
          ErrorCode::invalid_argument, "angle boxes must cover all {} slots", T);

  int rows = 0;
  for (const GeneratorEnvelope& env : envelopes) rows += env.rows();
  if (boxed) rows += 2 * T * num_angles();

  Mat A = Mat::Zero(rows, sel.n_bd);
  Vec b(rows);
  int r0 = 0;
  for (int i = 0; i < num_ties(); ++i) {
    const GeneratorEnvelope& env = envelopes[static_cast<size_t>(i)];
    require(env.T() == T, ErrorCode::invalid_argument,
            "envelope for tie {} spans {} slots, model has {}", env.tie_id, env.T(), T);
    HPolytope ep = env.polytope();
    for (int r = 0; r < ep.rows(); ++r) {
      for (int t = 0; t < T; ++t)
        A(r0 + r, sel.tie_coords[static_cast<size_t>(i)][static_cast<size_t>(t)]) = ep.A(r, t);
      b(r0 + r) = ep.b(r);
    }
    r0 += ep.rows();
  }
  if (boxed) {
    const int nt = num_ties();
    for (int t = 0; t < T; ++t) {
      require(angle_lo[static_cast<size_t>(t)].size() == num_angles() &&
                  angle_hi[static_cast<size_t>(t)].size() == num_angles(),
              ErrorCode::invalid_argument, "angle box at slot {} has the wrong width", t);
      for (int a = 0; a < num_angles(); ++a) {
        int coord = sel.slot_coords[static_cast<size_t>(t)][static_cast<size_t>(nt + a)];
        A(r0, coord) = 1.0;
        b(r0) = angle_hi[static_cast<size_t>(t)](a);
        A(r0 + 1, coord) = -1.0;
        b(r0 + 1) = -angle_lo[static_cast<size_t>(t)](a);
        r0 += 2;
      }
    }
  }

  ConvexBody B;
  B.dim = sel.n_bd;
  B.poly = HPolytope(std::move(A), std::move(b));
  for (const TimeSliceEllipsoid& s : slices) {
    require(s.slot >= 0 && s.slot < T, ErrorCode::invalid_argument,
            "slice slot {} out of range", s.slot);
    require(s.ell.dim() == sel.per_slot, ErrorCode::invalid_argument,
            "slice at slot {} has dim {}, layout needs {}", s.slot, s.ell.dim(), sel.per_slot);
    EllipsoidalSection sec;
    sec.coords = sel.slot_coords[static_cast<size_t>(s.slot)];
    sec.ell = s.ell;
    B.sections.push_back(std::move(sec));
  }
  return B;
}

bool AggregatedModel::contains(const Vec& x_bd, double tol) const {
  return body().contains(x_bd, tol);
}

AggregatedModel::RowOrigin AggregatedModel::row_origin(int body_row) const {
  RowOrigin o;
  int r = body_row;
  for (int i = 0; i < num_ties(); ++i) {
    int nr = envelopes[static_cast<size_t>(i)].rows();
    if (r < nr) {
      o.tie = i;
      o.row = r;
      return o;
    }
    r -= nr;
  }
  const int block = 2 * num_angles();
  require(!angle_lo.empty() && block > 0 && r < T * block, ErrorCode::invalid_argument,
          "body row {} out of range", body_row);
  o.slot = r / block;
  o.angle = (r % block) / 2;
  o.upper = (r % 2) == 0;
  return o;
}

Categorization categorize(const BoundarySelectors& sel) {
  Categorization cat;
  cat.tie_subspaces = sel.tie_coords;
  cat.slot_subspaces = sel.slot_coords;
  return cat;
}

AggregatedModel recombine(std::vector<GeneratorEnvelope> envelopes,
                          std::vector<TimeSliceEllipsoid> slices,
                          const BoundarySelectors& sel, const std::string& region_id,
                          double mva_base) {
  require(static_cast<int>(envelopes.size()) == sel.num_ties(), ErrorCode::invalid_argument,
          "{} envelopes for {} ties", envelopes.size(), sel.num_ties());
  for (int i = 0; i < sel.num_ties(); ++i) {
    const GeneratorEnvelope& env = envelopes[static_cast<size_t>(i)];
    require(env.tie_index == i && env.tie_id == sel.tie_ids[static_cast<size_t>(i)],
            ErrorCode::invalid_argument, "envelope {} is out of layout order", env.tie_id);
  }
  require(slices.empty() || static_cast<int>(slices.size()) == sel.T,
          ErrorCode::invalid_argument, "need one slice per slot or none, got {} for {}",
          slices.size(), sel.T);
  std::sort(slices.begin(), slices.end(),
            [](const TimeSliceEllipsoid& a, const TimeSliceEllipsoid& b) {
              return a.slot < b.slot;
            });
  for (int t = 0; t < static_cast<int>(slices.size()); ++t)
    require(slices[static_cast<size_t>(t)].slot == t, ErrorCode::invalid_argument,
            "slice slots must cover 0..{} exactly", sel.T - 1);

  AggregatedModel M;
  M.region_id = region_id;
  M.T = sel.T;
  M.dt = sel.dt;
  M.mva_base = mva_base;
  M.tie_ids = sel.tie_ids;
  M.tie_bus = sel.tie_bus;
  M.angle_bus_ids = sel.angle_bus_ids;
  M.envelopes = std::move(envelopes);
  M.slices = std::move(slices);
  M.verified = false;

  if (!M.slices.empty() || M.num_angles() == 0) {
    try {
      body_interior_point(M.body());
    } catch (const Error&) {
      fail(ErrorCode::infeasible,
           "recombined model is empty: the window and slice fits have no common point");
    }
  }
  return M;
}

OutlierReport detect_outlier(const AggregatedModel& M, const FeasibleRegionHD& region,
                             const UncoveredSearchOptions& opts) {
  require(region.n_bd == M.selectors().n_bd, ErrorCode::invalid_argument,
          "model spans {} boundary coordinates, region has {}", M.selectors().n_bd,
          region.n_bd);
  ConvexBody body = M.body();
  try {
    body_interior_point(body);
  } catch (const Error&) {
    fail(ErrorCode::invalid_argument, "outlier search needs a nonempty model");
  }
  UncoveredResult r = find_uncovered_point(body, PreimageMap{region.C, region.d}, region, opts);
  OutlierReport rep;
  rep.status = r.status;
  rep.found = r.status == UncoveredStatus::found;
  rep.x_out = r.y;
  rep.infeasibility = r.infeasibility;
  rep.method = r.method;
  rep.note = r.note;
  return rep;
}

Vec nearest_boundary_point(const Vec& x_out, const FeasibleRegionHD& region, double tol) {
  PreimageMap map{region.C, region.d};
  double res = preimage_infeasibility(map, region, x_out);
  require(res > tol, ErrorCode::invalid_argument,
          "point is already realizable (residual {}); projection expects an uncovered point",
          res);
  return nearest_covered_point(map, region, x_out);
}

ActiveBounds identify_active_bounds(const AggregatedModel& M, const Vec& x_out,
                                    const Vec& x_bnd, double tol) {
  BoundarySelectors sel = M.selectors();
  require(x_out.size() == sel.n_bd && x_bnd.size() == sel.n_bd, ErrorCode::invalid_argument,
          "points must span {} boundary coordinates", sel.n_bd);
  ActiveBounds act;

  for (const TimeSliceEllipsoid& s : M.slices) {
    Vec y = subvector(x_out, sel.slot_coords[static_cast<size_t>(s.slot)]);
    if (ellipsoid_radius_at(s.ell, y) >= 1.0 - tol) act.slots.push_back(s.slot);
  }
  for (int i = 0; i < M.num_ties(); ++i) {
    const GeneratorEnvelope& env = M.envelopes[static_cast<size_t>(i)];
    HPolytope ep = env.polytope();
    Vec y = subvector(x_out, sel.tie_coords[static_cast<size_t>(i)]);
    for (int r = 0; r < ep.rows(); ++r)
      if (ep.b(r) - ep.A.row(r).dot(y) <= tol * (1.0 + std::abs(ep.b(r))))
        act.env_rows.emplace_back(i, r);
  }
  if (!M.angle_lo.empty()) {
    const int nt = M.num_ties();
    for (int t = 0; t < M.T; ++t)
      for (int a = 0; a < M.num_angles(); ++a) {
        double v = x_out(sel.slot_coords[static_cast<size_t>(t)][static_cast<size_t>(nt + a)]);
        double hi = M.angle_hi[static_cast<size_t>(t)](a);
        double lo = M.angle_lo[static_cast<size_t>(t)](a);
        if (hi - v <= tol * (1.0 + std::abs(hi))) act.angle_rows.emplace_back(t, a, true);
        if (v - lo <= tol * (1.0 + std::abs(lo))) act.angle_rows.emplace_back(t, a, false);
      }
  }
  if (!act.empty()) return act;

  // interior witness: pick the constraints most aligned with the escape
  // direction, keeping exact ties together
  Vec dir = x_out - x_bnd;
  require(dir.norm() > 0, ErrorCode::invalid_argument,
          "active-bound fallback needs distinct points");
  dir /= dir.norm();

  struct Scored {
    double score;
    int what;  // 0 linear row, 1 ellipsoid slot
    int index;
  };
  std::vector<Scored> scored;
  ConvexBody body = M.body();
  for (int r = 0; r < body.poly.rows(); ++r) {
    double nrm = body.poly.A.row(r).norm();
    if (nrm > 0) scored.push_back({body.poly.A.row(r).dot(dir) / nrm, 0, r});
  }
  for (const TimeSliceEllipsoid& s : M.slices) {
    Vec y = subvector(x_out, sel.slot_coords[static_cast<size_t>(s.slot)]);
    Vec g_local = s.ell.E_inv.transpose() * (s.ell.E_inv * (y - s.ell.e));
    Vec g = Vec::Zero(sel.n_bd);
    for (int c = 0; c < s.ell.dim(); ++c)
      g(sel.slot_coords[static_cast<size_t>(s.slot)][static_cast<size_t>(c)]) = g_local(c);
    double nrm = g.norm();
    if (nrm > 0) scored.push_back({g.dot(dir) / nrm, 1, s.slot});
  }
  double best = -kInf;
  for (const Scored& s : scored) best = std::max(best, s.score);
  for (const Scored& s : scored) {
    if (s.score < best - 1e-9) continue;
    if (s.what == 1) {
      act.slots.push_back(s.index);
    } else {
      AggregatedModel::RowOrigin o = M.row_origin(s.index);
      if (o.tie >= 0)
        act.env_rows.emplace_back(o.tie, o.row);
      else
        act.angle_rows.emplace_back(o.slot, o.angle, o.upper);
    }
  }
  return act;
}

AggregatedModel shrink_step(const AggregatedModel& M, const Vec& x_bnd,
                            const ActiveBounds& active) {
  BoundarySelectors sel = M.selectors();
  require(x_bnd.size() == sel.n_bd, ErrorCode::invalid_argument,
          "boundary point must span {} coordinates", sel.n_bd);
  AggregatedModel out = M;

  for (int t : active.slots) {
    require(t >= 0 && t < static_cast<int>(out.slices.size()), ErrorCode::invalid_argument,
            "active slot {} has no slice", t);
    Ellipsoid& ell = out.slices[static_cast<size_t>(t)].ell;
    Vec y = subvector(x_bnd, sel.slot_coords[static_cast<size_t>(t)]);
    double rho = ellipsoid_radius_at(ell, y);
    if (rho >= 1.0) {
      out.anomalies.push_back(
          fmt::format("slot {} ellipsoid kept: scale {:.9f} would not shrink it", t, rho));
      continue;
    }
    if (rho <= 1e-12) {
      out.anomalies.push_back(
          fmt::format("slot {} ellipsoid kept: boundary point sits at its center", t));
      continue;
    }
    ell = Ellipsoid(rho * ell.E, ell.e);
  }

  for (auto& [i, r] : active.env_rows) {
    require(i >= 0 && i < out.num_ties(), ErrorCode::invalid_argument,
            "active row names tie {} of {}", i, out.num_ties());
    GeneratorEnvelope& env = out.envelopes[static_cast<size_t>(i)];
    require(r >= 0 && r < env.rows(), ErrorCode::invalid_argument,
            "active row {} out of range for tie {}", r, env.tie_id);
    Vec y = subvector(x_bnd, sel.tie_coords[static_cast<size_t>(i)]);
    HPolytope ep = env.polytope();
    double target = ep.A.row(r).dot(y);
    Vec b = env.b_tie();
    if (target >= b(r)) {
      out.anomalies.push_back(fmt::format(
          "tie {} row {} kept: boundary value {:.9f} does not tighten {:.9f}", env.tie_id, r,
          target, b(r)));
      continue;
    }
    b(r) = target;
    try {
      env.set_b_tie(b);
    } catch (const Error& e) {
      out.anomalies.push_back(
          fmt::format("tie {} row {} kept: {}", env.tie_id, r, e.what()));
    }
  }

  const int nt = M.num_ties();
  for (auto& [t, a, upper] : active.angle_rows) {
    require(!out.angle_lo.empty(), ErrorCode::invalid_argument,
            "active angle row on a model without angle boxes");
    double v = x_bnd(sel.slot_coords[static_cast<size_t>(t)][static_cast<size_t>(nt + a)]);
    double& lo = out.angle_lo[static_cast<size_t>(t)](a);
    double& hi = out.angle_hi[static_cast<size_t>(t)](a);
    if (upper) {
      if (v >= hi || v < lo)
        out.anomalies.push_back(fmt::format(
            "slot {} angle {} upper bound kept: boundary value {:.9f} leaves [{:.9f}, {:.9f}]",
            t, a, v, lo, hi));
      else
        hi = v;
    } else {
      if (v <= lo || v > hi)
        out.anomalies.push_back(fmt::format(
            "slot {} angle {} lower bound kept: boundary value {:.9f} leaves [{:.9f}, {:.9f}]",
            t, a, v, lo, hi));
      else
        lo = v;
    }
  }
  return out;
}

double shrink_progress(const AggregatedModel& before, const AggregatedModel& after) {
  double drop = 0.0;
  for (int i = 0; i < before.num_ties() && i < after.num_ties(); ++i) {
    Vec b0 = before.envelopes[static_cast<size_t>(i)].b_tie();
    Vec b1 = after.envelopes[static_cast<size_t>(i)].b_tie();
    if (b0.size() == b1.size()) drop = std::max(drop, (b0 - b1).maxCoeff());
  }
  for (size_t s = 0; s < before.slices.size() && s < after.slices.size(); ++s) {
    double d0 = std::exp(before.slices[s].ell.log_det());
    double d1 = std::exp(after.slices[s].ell.log_det());
    drop = std::max(drop, d0 - d1);
  }
  for (size_t t = 0; t < before.angle_lo.size() && t < after.angle_lo.size(); ++t) {
    if (before.angle_hi[t].size() == after.angle_hi[t].size() &&
        before.angle_hi[t].size() > 0) {
      drop = std::max(drop, (before.angle_hi[t] - after.angle_hi[t]).maxCoeff());
      drop = std::max(drop, (after.angle_lo[t] - before.angle_lo[t]).maxCoeff());
    }
  }
  return drop;
}

namespace {

// Runs the joint outlier loop: detect, project, identify, shrink, until the
// search reports no uncovered point or the cap is hit.
void run_outlier_loop(AggregatedModel& M, const FeasibleRegionHD& region,
                      const AggregateOptions& opts, Json& events) {
  PreimageMap map{region.C, region.d};
  M.verified = false;
  M.shrink_iters = 0;
  for (int k = 0; k <= opts.max_iter; ++k) {
    UncoveredSearchOptions so;
    so.tol = opts.tol;
    so.time_limit = opts.search_time_limit;
    so.seed = mix_seed(opts.seed, 0x6c6f6f70ULL + static_cast<std::uint64_t>(k));
    OutlierReport rep = detect_outlier(M, region, so);

    Json ev;
    ev["iteration"] = k;
    ev["status"] = to_string(rep.status);
    ev["method"] = rep.method;
    if (rep.status == UncoveredStatus::none) {
      events.push_back(std::move(ev));
      M.verified = true;
      M.note.clear();
      return;
    }
    if (rep.status == UncoveredStatus::inconclusive) {
      ev["note"] = rep.note;
      events.push_back(std::move(ev));
      M.note = fmt::format("outlier search was inconclusive: {}", rep.note);
      return;
    }
    if (k == opts.max_iter) {
      ev["note"] = "iteration cap reached with an uncovered point outstanding";
      events.push_back(std::move(ev));
      M.note = fmt::format("iteration cap {} reached before verification", opts.max_iter);
      return;
    }

    Vec x_bnd = nearest_covered_point(map, region, rep.x_out);
    ActiveBounds act = identify_active_bounds(M, rep.x_out, x_bnd, kActiveTol);
    AggregatedModel next = shrink_step(M, x_bnd, act);
    double progress = shrink_progress(M, next);

    ev["residual"] = rep.infeasibility;
    ev["active_slots"] = act.slots.size();
    ev["active_rows"] = act.env_rows.size() + act.angle_rows.size();
    ev["progress"] = progress;
    events.push_back(std::move(ev));

    if (progress < kMinStep) {
      next.anomalies.push_back("outlier loop stalled: no bound moved by the minimum step");
      M = std::move(next);
      M.note = "outlier loop stalled: no bound moved by the minimum step";
      return;
    }
    try {
      body_interior_point(next.body());
    } catch (const Error&) {
      M.anomalies.push_back("shrink step would empty the model; kept the previous iterate");
      M.note = "shrink step would empty the model";
      return;
    }
    M = std::move(next);
    M.shrink_iters = k + 1;
  }
}

}  // namespace

AggregateResult aggregate_region(const FeasibleRegionHD& region, const BoundarySelectors& sel,
                                 const std::string& region_id, double mva_base,
                                 const AggregateOptions& opts) {
  const int nt = sel.num_ties();
  const int T = sel.T;
  const int na = static_cast<int>(sel.angle_bus_ids.size());

  Json report;
  report["region_id"] = region_id;
  report["kind"] = opts.baseline_box ? "box" : "full";
  {
    Json layout;
    layout["slots"] = T;
    layout["per_slot"] = sel.per_slot;
    layout["ties"] = sel.tie_ids;
    layout["ac_angle_buses"] = sel.angle_bus_ids;
    report["boundary"] = std::move(layout);
    RegionCensus census = region_census(region);
    Json rows = Json::object();
    for (auto& [name, count] : census.row_families) rows[name] = count;
    report["region_rows"] = std::move(rows);
  }

  std::vector<GeneratorEnvelope> envelopes(static_cast<size_t>(nt));
  std::vector<TimeSliceEllipsoid> slices(static_cast<size_t>(opts.baseline_box ? 0 : T));

  EnvelopeShrinkOptions eopts;
  eopts.max_iter = opts.envelope_max_iter;
  eopts.tol = opts.tol;
  eopts.search_time_limit = opts.search_time_limit;

  const auto t_start = std::chrono::steady_clock::now();
  auto secs_since = [](std::chrono::steady_clock::time_point from) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - from).count();
  };

  const int tasks = nt + static_cast<int>(slices.size());
  std::vector<double> task_secs(static_cast<size_t>(tasks), 0.0);
  parallel_for(tasks, opts.jobs, [&](int task) {
    const auto t0 = std::chrono::steady_clock::now();
    if (task < nt) {
      GeneratorEnvelope env = circumscribe_envelope(region, sel, task);
      if (opts.baseline_box) {
        env.r_lo.resize(0);
        env.r_hi.resize(0);
      }
      EnvelopeShrinkOptions eo = eopts;
      eo.seed = mix_seed(opts.seed, 0x656e76ULL + static_cast<std::uint64_t>(task));
      envelopes[static_cast<size_t>(task)] = shrink_envelope(region, sel, task, env, eo);
    } else {
      int t = task - nt;
      slices[static_cast<size_t>(t)] = {t, max_volume_ellipsoid(region, sel, t)};
    }
    task_secs[static_cast<size_t>(task)] = secs_since(t0);
  });

  Json fit = Json::array();
  for (const GeneratorEnvelope& env : envelopes) {
    Json e;
    e["tie_id"] = env.tie_id;
    e["verified"] = env.verified;
    e["iterations"] = env.shrink_iters;
    if (!env.note.empty()) e["note"] = env.note;
    fit.push_back(std::move(e));
  }
  report["envelope_fits"] = std::move(fit);
  if (!slices.empty()) {
    Json sj = Json::array();
    for (const TimeSliceEllipsoid& s : slices) {
      Json e;
      e["slot"] = s.slot;
      e["log_det"] = s.ell.log_det();
      sj.push_back(std::move(e));
    }
    report["slice_fits"] = std::move(sj);
  }

  AggregatedModel M = recombine(std::move(envelopes), std::move(slices), sel, region_id,
                                mva_base);
  if (opts.baseline_box && na > 0) {
    M.angle_lo.assign(static_cast<size_t>(T), Vec::Zero(na));
    M.angle_hi.assign(static_cast<size_t>(T), Vec::Zero(na));
    for (int t = 0; t < T; ++t)
      for (int a = 0; a < na; ++a) {
        int coord = sel.slot_coords[static_cast<size_t>(t)][static_cast<size_t>(nt + a)];
        auto [lo, hi] = boundary_extent(
            region, region.C.row(coord).transpose(), region.d(coord),
            fmt::format("bus {} angle at slot {}",
                        sel.angle_bus_ids[static_cast<size_t>(a)], t));
        M.angle_lo[static_cast<size_t>(t)](a) = lo;
        M.angle_hi[static_cast<size_t>(t)](a) = hi;
      }
    try {
      body_interior_point(M.body());
    } catch (const Error&) {
      fail(ErrorCode::infeasible, "recombined box model is empty");
    }
  }

  Json events = Json::array();
  const auto t_loop = std::chrono::steady_clock::now();
  run_outlier_loop(M, region, opts, events);
  const double loop_secs = secs_since(t_loop);
  report["loop"] = Json::object();
  report["loop"]["verified"] = M.verified;
  report["loop"]["shrink_steps"] = M.shrink_iters;
  if (!M.note.empty()) report["loop"]["note"] = M.note;
  report["loop"]["events"] = std::move(events);
  if (!M.anomalies.empty()) report["anomalies"] = M.anomalies;

  Json timings;
  {
    Json te = Json::array();
    for (int i = 0; i < nt; ++i) {
      Json e;
      e["tie_id"] = sel.tie_ids[static_cast<size_t>(i)];
      e["seconds"] = task_secs[static_cast<size_t>(i)];
      te.push_back(std::move(e));
    }
    timings["envelopes"] = std::move(te);
    if (tasks > nt) {
      Json ts = Json::array();
      for (int t = 0; t + nt < tasks; ++t) {
        Json e;
        e["slot"] = t;
        e["seconds"] = task_secs[static_cast<size_t>(nt + t)];
        ts.push_back(std::move(e));
      }
      timings["slices"] = std::move(ts);
    }
    timings["loop_seconds"] = loop_secs;
    timings["total_seconds"] = secs_since(t_start);
  }
  return {std::move(M), std::move(report), std::move(timings)};
}

AggregateResult aggregate(const GridCase& c, const AggregateOptions& opts) {
  auto [region, sel] = assemble_feasible_region(c);
  return aggregate_region(region, sel, c.region_id, c.mva_base, opts);
}

AggregateResult baseline_box(const FeasibleRegionHD& region, const BoundarySelectors& sel,
                             const std::string& region_id, double mva_base,
                             const AggregateOptions& opts) {
  AggregateOptions o = opts;
  o.baseline_box = true;
  return aggregate_region(region, sel, region_id, mva_base, o);
}

CoverageEstimate coverage_rate(const AggregatedModel& M, const FeasibleRegionHD& region, long k,
                               std::uint64_t seed, int jobs) {
  require(k >= 1, ErrorCode::invalid_argument, "need k >= 1 samples");
  require(region.n_bd == M.selectors().n_bd, ErrorCode::invalid_argument,
          "model spans {} boundary coordinates, region has {}", M.selectors().n_bd,
          region.n_bd);
  ConvexBody body = M.body();

  const int chunks = static_cast<int>((k + kCoverageChunk - 1) / kCoverageChunk);
  std::vector<long> inside(static_cast<size_t>(chunks), 0);
  parallel_for(chunks, jobs, [&](int c) {
    long lo = static_cast<long>(c) * kCoverageChunk;
    long len = std::min(kCoverageChunk, k - lo);
    std::vector<Vec> pts = sample_projection(region, static_cast<int>(len),
                                             mix_seed(seed, static_cast<std::uint64_t>(c)));
    long hit = 0;
    for (const Vec& x : pts)
      if (body.contains(x, 1e-7)) ++hit;
    inside[static_cast<size_t>(c)] = hit;
  });

  long total = 0;
  for (long h : inside) total += h;
  CoverageEstimate est;
  est.k = k;
  est.rate = static_cast<double>(total) / static_cast<double>(k);
  double half = 1.96 * std::sqrt(est.rate * (1.0 - est.rate) / static_cast<double>(k));
  est.ci_lo = std::max(0.0, est.rate - half);
  est.ci_hi = std::min(1.0, est.rate + half);
  return est;
}

SoundnessCheck verify_soundness(const AggregatedModel& M, const FeasibleRegionHD& region, long k,
                                std::uint64_t seed, double tol, int jobs) {
  require(k >= 1, ErrorCode::invalid_argument, "need k >= 1 samples");
  ConvexBody body = M.body();

  const int chunks = static_cast<int>((k + kCoverageChunk - 1) / kCoverageChunk);
  std::vector<std::vector<Vec>> parts(static_cast<size_t>(chunks));
  parallel_for(chunks, jobs, [&](int c) {
    long lo = static_cast<long>(c) * kCoverageChunk;
    long len = std::min(kCoverageChunk, k - lo);
    parts[static_cast<size_t>(c)] = sample_body(body, static_cast<int>(len),
                                                mix_seed(seed, static_cast<std::uint64_t>(c)));
  });
  std::vector<Vec> samples;
  samples.reserve(static_cast<size_t>(k));
  for (std::vector<Vec>& p : parts)
    for (Vec& x : p) samples.push_back(std::move(x));

  Vec res = preimage_residuals(PreimageMap{region.C, region.d}, region, samples, jobs);
  SoundnessCheck check;
  check.k = k;
  check.worst = res.size() > 0 ? res.maxCoeff() : 0.0;
  for (int i = 0; i < res.size(); ++i)
    if (res(i) > tol) ++check.violations;
  return check;
}

}  // namespace gridagg
