#include "gridagg/mve.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "gridagg/solve.h"

namespace gridagg {

namespace {

std::string coord_name(const BoundarySelectors& sel, int k) {
  const int nt = sel.num_ties();
  if (k < nt) return fmt::format("tie {} power", sel.tie_ids[static_cast<size_t>(k)]);
  return fmt::format("bus {} angle", sel.angle_bus_ids[static_cast<size_t>(k - nt)]);
}

}  // namespace

Ellipsoid max_volume_ellipsoid(const FeasibleRegionHD& region, const BoundarySelectors& sel,
                               int t) {
  require(t >= 0 && t < sel.T, ErrorCode::invalid_argument, "slot {} out of range (horizon {})",
          t, sel.T);
  require(region.n_bd == sel.n_bd, ErrorCode::invalid_argument,
          "selector layout ({} boundary coords) does not match the region ({})", sel.n_bd,
          region.n_bd);
  const int ns = sel.per_slot;
  const int n = region.n_int;
  Mat H = sel.H_bd(t);
  Mat M = H * region.C;  // ns x n
  Vec m0 = H * region.d;

  // extent pre-check so degenerate slices fail with the coordinate named
  ConicProblem lp;
  lp.add_vars(n, -kInf, kInf);
  for (int i = 0; i < region.rows(); ++i) {
    LinExpr e;
    for (SpMatR::InnerIterator it(region.F, i); it; ++it)
      e.add(static_cast<int>(it.col()), it.value());
    lp.add_row_le(region.f(i), e);
  }
  Vec lo(ns), hi(ns);
  for (int k = 0; k < ns; ++k) {
    std::fill(lp.c.begin(), lp.c.end(), 0.0);
    for (int j = 0; j < n; ++j)
      if (M(k, j) != 0.0) lp.set_obj(j, M(k, j));
    lp.sense = Sense::minimize;
    SolveOutcome a = solve(lp);
    lp.sense = Sense::maximize;
    SolveOutcome b = solve(lp);
    require(a.status != SolveStatus::unbounded && b.status != SolveStatus::unbounded,
            ErrorCode::invalid_argument,
            "slice at slot {} is unbounded along {}; add a capacity before fitting", t,
            coord_name(sel, k));
    require(a.status == SolveStatus::optimal && b.status == SolveStatus::optimal,
            ErrorCode::solver, "slice extent solve at slot {} returned {}/{}", t,
            to_string(a.status), to_string(b.status));
    lo(k) = a.obj + m0(k);
    hi(k) = b.obj + m0(k);
    require(hi(k) - lo(k) > 1e-9 * (1.0 + std::max(std::abs(lo(k)), std::abs(hi(k)))),
            ErrorCode::invalid_argument,
            "slice at slot {} is flat along {} (extent [{}, {}]); drop that coordinate from "
            "the boundary before fitting",
            t, coord_name(sel, k), lo(k), hi(k));
  }

  if (ns == 1) {
    Mat E(1, 1);
    E(0, 0) = 0.5 * (hi(0) - lo(0));
    Vec e(1);
    e(0) = 0.5 * (hi(0) + lo(0));
    return Ellipsoid(E, e);
  }

  // u centers an affine response u + V a; E = M V must be the symmetric
  // shape it induces on the slice. det-root via lower-triangular Z and
  // [[E, Z], [Z', diag(Z)]] PSD, then v_r <= log Z_rr summed as objective.
  ConicProblem p;
  p.sense = Sense::maximize;
  const int u0 = p.add_vars(n, -kInf, kInf);
  const int V0 = p.add_vars(n * ns, -kInf, kInf);  // V(j,s) at V0 + j*ns + s
  const int z0 = p.num_vars();
  for (int r = 0; r < ns; ++r)
    for (int c = 0; c <= r; ++c) p.add_var(-kInf, kInf);
  auto zidx = [&](int r, int c) { return z0 + r * (r + 1) / 2 + c; };
  const int v0 = p.add_vars(ns, -kInf, kInf);
  for (int r = 0; r < ns; ++r) p.set_obj(v0 + r, 1.0);

  auto shape_entry = [&](int r, int s) {
    LinExpr e;
    for (int j = 0; j < n; ++j)
      if (M(r, j) != 0.0) e.add(V0 + j * ns + s, M(r, j));
    return e;
  };

  for (int r = 0; r < ns; ++r)
    for (int s = r + 1; s < ns; ++s) {
      LinExpr e = shape_entry(r, s);
      for (int j = 0; j < n; ++j)
        if (M(s, j) != 0.0) e.add(V0 + j * ns + r, -M(s, j));
      p.add_row_eq(0.0, e);
    }

  for (int i = 0; i < region.rows(); ++i) {
    std::vector<LinExpr> rows(1);
    rows[0].constant = region.f(i);
    for (SpMatR::InnerIterator it(region.F, i); it; ++it)
      rows[0].add(u0 + static_cast<int>(it.col()), -it.value());
    for (int s = 0; s < ns; ++s) {
      LinExpr e;
      for (SpMatR::InnerIterator it(region.F, i); it; ++it)
        e.add(V0 + static_cast<int>(it.col()) * ns + s, it.value());
      rows.push_back(std::move(e));
    }
    p.add_soc(std::move(rows));
  }

  std::vector<std::vector<LinExpr>> ent(static_cast<size_t>(2 * ns));
  for (int i = 0; i < 2 * ns; ++i) ent[static_cast<size_t>(i)].resize(static_cast<size_t>(i + 1));
  for (int r = 0; r < ns; ++r)
    for (int c = 0; c <= r; ++c) ent[static_cast<size_t>(r)][static_cast<size_t>(c)] = shape_entry(r, c);
  for (int r = 0; r < ns; ++r)
    for (int c = 0; c < ns; ++c)
      if (c >= r)
        ent[static_cast<size_t>(ns + r)][static_cast<size_t>(c)] = LinExpr::var(zidx(c, r));
  for (int r = 0; r < ns; ++r)
    ent[static_cast<size_t>(ns + r)][static_cast<size_t>(ns + r)] = LinExpr::var(zidx(r, r));
  p.add_psd_lower(ent);
  for (int r = 0; r < ns; ++r)
    p.add_exp(LinExpr::var(v0 + r), LinExpr({}, 1.0), LinExpr::var(zidx(r, r)));

  SolveOutcome out = solve(p);
  require(out.status == SolveStatus::optimal, ErrorCode::solver,
          "slice fit at slot {} returned {}", t, to_string(out.status));

  Mat V(n, ns);
  for (int j = 0; j < n; ++j)
    for (int s = 0; s < ns; ++s) V(j, s) = out.x(V0 + j * ns + s);
  Mat E = M * V;
  E = 0.5 * (E + E.transpose()).eval();
  Vec e = M * out.x.head(n) + m0;

  Eigen::SelfAdjointEigenSolver<Mat> es(E);
  require(es.info() == Eigen::Success, ErrorCode::internal, "slice shape eigensolve failed");
  double lo_eig = es.eigenvalues().minCoeff();
  double hi_eig = es.eigenvalues().maxCoeff();
  require(lo_eig > 1e-7 * std::max(1.0, hi_eig), ErrorCode::invalid_argument,
          "slice at slot {} is flat along a coordinate combination (radii {} vs {}); drop a "
          "dependent coordinate from the boundary before fitting",
          t, lo_eig, hi_eig);
  return Ellipsoid(E, e);
}

}  // namespace gridagg
