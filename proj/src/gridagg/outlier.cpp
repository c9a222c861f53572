#include "gridagg/outlier.h"

#include <algorithm>
#include <chrono>
#include <random>
#include <utility>
#include <vector>

#include <Highs.h>

#include "gridagg/parallel.h"
#include "gridagg/solve.h"

namespace gridagg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Vec random_unit(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec u(dim);
  double norm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) u(i) = gauss(rng);
    norm = u.norm();
  } while (norm < 1e-12);
  return u / norm;
}

// min 1's over F x <= f, P x + s+ - s- = y - q, warm across target points y.
class PreimageLp {
 public:
  PreimageLp(const PreimageMap& map, const FeasibleRegionHD& region)
      : n_(region.n_int), k_(map.dim()), m_(region.rows()), q_(map.q) {
    HighsLp lp;
    lp.num_col_ = n_ + 2 * k_;
    lp.num_row_ = m_ + k_;
    lp.sense_ = ObjSense::kMinimize;
    lp.col_cost_.assign(static_cast<size_t>(lp.num_col_), 0.0);
    for (int j = 0; j < 2 * k_; ++j) lp.col_cost_[static_cast<size_t>(n_ + j)] = 1.0;
    lp.col_lower_.assign(static_cast<size_t>(lp.num_col_), 0.0);
    lp.col_upper_.assign(static_cast<size_t>(lp.num_col_), kHighsInf);
    for (int j = 0; j < n_; ++j) lp.col_lower_[static_cast<size_t>(j)] = -kHighsInf;
    lp.row_lower_.assign(static_cast<size_t>(lp.num_row_), -kHighsInf);
    lp.row_upper_.assign(static_cast<size_t>(lp.num_row_), 0.0);
    for (int r = 0; r < m_; ++r) lp.row_upper_[static_cast<size_t>(r)] = region.f(r);

    lp.a_matrix_.format_ = MatrixFormat::kColwise;
    std::vector<int>& start = lp.a_matrix_.start_;
    std::vector<int>& index = lp.a_matrix_.index_;
    std::vector<double>& value = lp.a_matrix_.value_;
    start.assign(1, 0);
    SpMat fc(region.F);  // column-major view for per-variable scans
    for (int j = 0; j < n_; ++j) {
      for (SpMat::InnerIterator it(fc, j); it; ++it) {
        index.push_back(static_cast<int>(it.row()));
        value.push_back(it.value());
      }
      for (int a = 0; a < k_; ++a) {
        if (map.P(a, j) != 0.0) {
          index.push_back(m_ + a);
          value.push_back(map.P(a, j));
        }
      }
      start.push_back(static_cast<int>(index.size()));
    }
    for (int a = 0; a < k_; ++a) {  // s+
      index.push_back(m_ + a);
      value.push_back(1.0);
      start.push_back(static_cast<int>(index.size()));
    }
    for (int a = 0; a < k_; ++a) {  // s-
      index.push_back(m_ + a);
      value.push_back(-1.0);
      start.push_back(static_cast<int>(index.size()));
    }

    highs_.setOptionValue("output_flag", false);
    highs_.setOptionValue("threads", 1);
    highs_.setOptionValue("random_seed", 0);
    highs_.setOptionValue("presolve", "off");
    require(highs_.passModel(lp) == HighsStatus::kOk, ErrorCode::solver,
            "preimage model rejected by the LP backend");
  }

  double residual(const Vec& y) {
    require(y.size() == k_, ErrorCode::invalid_argument,
            "preimage target has dim {}, expected {}", y.size(), k_);
    for (int a = 0; a < k_; ++a) {
      double rhs = y(a) - q_(a);
      highs_.changeRowBounds(m_ + a, rhs, rhs);
    }
    require(highs_.run() == HighsStatus::kOk &&
                highs_.getModelStatus() == HighsModelStatus::kOptimal,
            ErrorCode::solver, "preimage residual solve failed");
    return highs_.getObjectiveValue();
  }

 private:
  Highs highs_;
  int n_, k_, m_;
  Vec q_;
};

// Warm objective-swapping LP over {F x <= f}: per-row slack extents and
// variable boxes feeding the exact phase's activation bounds.
class RegionLp {
 public:
  explicit RegionLp(const FeasibleRegionHD& region) : n_(region.n_int) {
    HighsLp lp;
    lp.num_col_ = n_;
    lp.num_row_ = region.rows();
    lp.sense_ = ObjSense::kMinimize;
    lp.col_cost_.assign(static_cast<size_t>(n_), 0.0);
    lp.col_lower_.assign(static_cast<size_t>(n_), -kHighsInf);
    lp.col_upper_.assign(static_cast<size_t>(n_), kHighsInf);
    lp.row_lower_.assign(static_cast<size_t>(lp.num_row_), -kHighsInf);
    lp.row_upper_.resize(static_cast<size_t>(lp.num_row_));
    for (int r = 0; r < lp.num_row_; ++r) lp.row_upper_[static_cast<size_t>(r)] = region.f(r);
    lp.a_matrix_.format_ = MatrixFormat::kColwise;
    lp.a_matrix_.start_.assign(1, 0);
    SpMat fc(region.F);
    for (int j = 0; j < n_; ++j) {
      for (SpMat::InnerIterator it(fc, j); it; ++it) {
        lp.a_matrix_.index_.push_back(static_cast<int>(it.row()));
        lp.a_matrix_.value_.push_back(it.value());
      }
      lp.a_matrix_.start_.push_back(static_cast<int>(lp.a_matrix_.index_.size()));
    }
    highs_.setOptionValue("output_flag", false);
    highs_.setOptionValue("threads", 1);
    highs_.setOptionValue("random_seed", 0);
    require(highs_.passModel(lp) == HighsStatus::kOk, ErrorCode::solver,
            "region model rejected by the LP backend");
  }

  // min c'x; +inf marks an unbounded direction.
  double minimize(const Vec& c) {
    std::vector<double> cost(static_cast<size_t>(n_));
    for (int j = 0; j < n_; ++j) cost[static_cast<size_t>(j)] = c(j);
    highs_.changeColsCost(0, n_ - 1, cost.data());
    require(highs_.run() == HighsStatus::kOk, ErrorCode::solver, "region bound solve failed");
    HighsModelStatus st = highs_.getModelStatus();
    if (st == HighsModelStatus::kUnbounded || st == HighsModelStatus::kUnboundedOrInfeasible)
      return -kInf;
    require(st == HighsModelStatus::kOptimal, ErrorCode::solver,
            "region bound solve returned {}", highs_.modelStatusToString(st));
    return highs_.getObjectiveValue();
  }

  int dim() const { return n_; }

 private:
  Highs highs_;
  int n_;
};

struct TangentCut {
  Vec a;     // over body coordinates, sparse via section coords
  double b;
};

// a'(y) <= b supporting the section at the radial boundary point through y.
TangentCut tangent_at(const EllipsoidalSection& s, const Vec& y, int dim) {
  const int ds = s.ell.dim();
  Vec ys(ds);
  for (int c = 0; c < ds; ++c) ys(c) = y(s.coords[static_cast<size_t>(c)]);
  Vec u = s.ell.E_inv * (ys - s.ell.e);
  double rho = u.norm();
  Vec z = s.ell.e + (ys - s.ell.e) / rho;
  Vec g = s.ell.E_inv * (s.ell.E_inv * (z - s.ell.e));
  g /= g.norm();
  TangentCut cut;
  cut.a = Vec::Zero(dim);
  for (int c = 0; c < ds; ++c) cut.a(s.coords[static_cast<size_t>(c)]) = g(c);
  cut.b = g.dot(z);
  return cut;
}

// Sufficient containment certificate: one affine response x(y) = W y + w with
// P x(y) = y - q and F x(y) <= f for every y in the body. Each robust row
// splits its left-hand side over the body's polytope rows (multipliers l >= 0)
// and ellipsoid parts (free split vectors with their support e'c + ||E c||).
bool recourse_certificate(const ConvexBody& B, const PreimageMap& map,
                          const FeasibleRegionHD& region, double time_limit) {
  const int k = B.dim;
  const int n = region.n_int;
  const int m = region.rows();
  const int mA = B.poly.rows();
  const int ns = static_cast<int>(B.sections.size());

  ConicProblem p;
  const int W0 = p.add_vars(n * k, -kInf, kInf);  // W(j,a) at W0 + j*k + a
  const int w0 = p.add_vars(n, -kInf, kInf);
  const int l0 = mA > 0 ? p.add_vars(m * mA, 0.0, kInf) : 0;
  std::vector<int> c0(static_cast<size_t>(ns), 0), tau0(static_cast<size_t>(ns), 0);
  for (int s = 0; s < ns; ++s) {
    int ds = B.sections[static_cast<size_t>(s)].ell.dim();
    c0[static_cast<size_t>(s)] = p.add_vars(m * ds, -kInf, kInf);
    tau0[static_cast<size_t>(s)] = p.add_vars(m, 0.0, kInf);
  }

  for (int a = 0; a < k; ++a) {
    for (int bcol = 0; bcol < k; ++bcol) {
      LinExpr e;
      for (int j = 0; j < n; ++j)
        if (map.P(a, j) != 0.0) e.add(W0 + j * k + bcol, map.P(a, j));
      p.add_row_eq(a == bcol ? 1.0 : 0.0, e);
    }
    LinExpr e;
    for (int j = 0; j < n; ++j)
      if (map.P(a, j) != 0.0) e.add(w0 + j, map.P(a, j));
    p.add_row_eq(-map.q(a), e);
  }

  for (int i = 0; i < m; ++i) {
    std::vector<std::pair<int, double>> fi;
    for (SpMatR::InnerIterator it(region.F, i); it; ++it)
      fi.emplace_back(static_cast<int>(it.col()), it.value());

    for (int a = 0; a < k; ++a) {
      LinExpr e;
      for (int r = 0; r < mA; ++r)
        if (B.poly.A(r, a) != 0.0) e.add(l0 + i * mA + r, B.poly.A(r, a));
      for (int s = 0; s < ns; ++s) {
        const EllipsoidalSection& sec = B.sections[static_cast<size_t>(s)];
        for (int c = 0; c < sec.ell.dim(); ++c)
          if (sec.coords[static_cast<size_t>(c)] == a)
            e.add(c0[static_cast<size_t>(s)] + i * sec.ell.dim() + c, 1.0);
      }
      for (auto& [j, v] : fi) e.add(W0 + j * k + a, -v);
      p.add_row_eq(0.0, e);
    }

    LinExpr budget;
    for (int r = 0; r < mA; ++r)
      if (B.poly.b(r) != 0.0) budget.add(l0 + i * mA + r, B.poly.b(r));
    for (int s = 0; s < ns; ++s) {
      const EllipsoidalSection& sec = B.sections[static_cast<size_t>(s)];
      for (int c = 0; c < sec.ell.dim(); ++c)
        if (sec.ell.e(c) != 0.0)
          budget.add(c0[static_cast<size_t>(s)] + i * sec.ell.dim() + c, sec.ell.e(c));
      budget.add(tau0[static_cast<size_t>(s)] + i, 1.0);
    }
    for (auto& [j, v] : fi) budget.add(w0 + j, v);
    p.add_row_le(region.f(i), budget);

    for (int s = 0; s < ns; ++s) {
      const EllipsoidalSection& sec = B.sections[static_cast<size_t>(s)];
      int ds = sec.ell.dim();
      std::vector<LinExpr> rows;
      rows.push_back(LinExpr::var(tau0[static_cast<size_t>(s)] + i));
      for (int r = 0; r < ds; ++r) {
        LinExpr row;
        for (int c = 0; c < ds; ++c)
          if (sec.ell.E(r, c) != 0.0)
            row.add(c0[static_cast<size_t>(s)] + i * ds + c, sec.ell.E(r, c));
        rows.push_back(std::move(row));
      }
      p.add_soc(std::move(rows));
    }
  }

  SolveOptions so;
  so.time_limit = time_limit;
  SolveOutcome out = solve(p, so);
  return out.status == SolveStatus::optimal;
}

struct ExactBounds {
  Vec y_lo, y_hi;      // body box
  Vec slack_cap;       // per F row: max of f_i - F_i x
  Vec dev_hi, dev_lo;  // per coordinate a: extent of y_a - q_a - P_a x
  bool bounded = true;
  std::string gap;     // first unbounded quantity, for the inconclusive note
};

ExactBounds exact_bounds(const ConvexBody& B, const PreimageMap& map,
                         const FeasibleRegionHD& region) {
  const int k = B.dim;
  ExactBounds eb;
  eb.y_lo.resize(k);
  eb.y_hi.resize(k);
  for (int a = 0; a < k; ++a) {
    Vec dir = Vec::Zero(k);
    dir(a) = 1.0;
    eb.y_hi(a) = body_support_point(B, dir)(a);
    eb.y_lo(a) = body_support_point(B, -dir)(a);
  }

  RegionLp rl(region);
  const int m = region.rows();
  eb.slack_cap.resize(m);
  for (int i = 0; i < m; ++i) {
    Vec fi = Vec::Zero(region.n_int);
    for (SpMatR::InnerIterator it(region.F, i); it; ++it) fi(it.col()) = it.value();
    double lo = rl.minimize(fi);
    if (!std::isfinite(lo)) {
      eb.bounded = false;
      eb.gap = fmt::format("row {} ({}) has unbounded slack", i,
                           row_family_name(region.row_labels[static_cast<size_t>(i)].family));
      return eb;
    }
    eb.slack_cap(i) = region.f(i) - lo;
  }
  eb.dev_hi.resize(k);
  eb.dev_lo.resize(k);
  for (int a = 0; a < k; ++a) {
    Vec pa = map.P.row(a).transpose();
    double lo = rl.minimize(pa);
    double hi = -rl.minimize(-pa);
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
      eb.bounded = false;
      eb.gap = fmt::format("image coordinate {} is unbounded", a);
      return eb;
    }
    eb.dev_hi(a) = std::max(0.0, eb.y_hi(a) - map.q(a) - lo);
    eb.dev_lo(a) = std::max(0.0, hi - (eb.y_lo(a) - map.q(a)));
  }
  return eb;
}

// Maximize the preimage L1 residual over the body: primal and dual of the
// residual problem tied by binary complementarity, body ellipsoids replaced
// by the tangent pool.
ConicProblem build_exact_milp(const ConvexBody& B, const PreimageMap& map,
                              const FeasibleRegionHD& region, const ExactBounds& eb,
                              const std::vector<TangentCut>& cuts, double dual_cap) {
  const int k = B.dim;
  const int n = region.n_int;
  const int m = region.rows();

  ConicProblem p;
  p.sense = Sense::maximize;
  int y0 = 0;
  for (int a = 0; a < k; ++a) p.add_var(eb.y_lo(a), eb.y_hi(a));
  const int x0 = p.add_vars(n, -kInf, kInf);
  const int sp0 = p.add_vars(k, 0.0, kInf);
  const int sm0 = p.add_vars(k, 0.0, kInf);
  const int mu0 = p.add_vars(k, -1.0, 1.0);
  const int la0 = p.add_vars(m, 0.0, dual_cap);
  int be0 = -1;
  {
    be0 = p.num_vars();
    for (int i = 0; i < m; ++i) p.add_var(0.0, 1.0, VarType::integer);
  }
  const int gp0 = p.num_vars();
  for (int a = 0; a < 2 * k; ++a) p.add_var(0.0, 1.0, VarType::integer);
  const int gm0 = gp0 + k;

  for (int a = 0; a < k; ++a) {
    p.set_obj(sp0 + a, 1.0);
    p.set_obj(sm0 + a, 1.0);
  }

  for (int r = 0; r < B.poly.rows(); ++r) {
    LinExpr e;
    for (int a = 0; a < k; ++a)
      if (B.poly.A(r, a) != 0.0) e.add(y0 + a, B.poly.A(r, a));
    p.add_row_le(B.poly.b(r), e);
  }
  for (const TangentCut& c : cuts) {
    LinExpr e;
    for (int a = 0; a < k; ++a)
      if (c.a(a) != 0.0) e.add(y0 + a, c.a(a));
    p.add_row_le(c.b, e);
  }

  // P x + s+ - s- - y = -q
  for (int a = 0; a < k; ++a) {
    LinExpr e;
    for (int j = 0; j < n; ++j)
      if (map.P(a, j) != 0.0) e.add(x0 + j, map.P(a, j));
    e.add(sp0 + a, 1.0).add(sm0 + a, -1.0).add(y0 + a, -1.0);
    p.add_row_eq(-map.q(a), e);
  }

  // F x <= f, with activation binaries forcing tightness when priced
  for (int i = 0; i < m; ++i) {
    LinExpr fx;
    for (SpMatR::InnerIterator it(region.F, i); it; ++it)
      fx.add(x0 + static_cast<int>(it.col()), it.value());
    p.add_row_le(region.f(i), fx);
    LinExpr act = fx;
    act.add(be0 + i, -eb.slack_cap(i));
    p.add_row_ge(region.f(i) - eb.slack_cap(i), act);
    p.add_row_le(0.0, LinExpr({{la0 + i, 1.0}, {be0 + i, -dual_cap}}));
  }

  // P' mu = F' lambda
  {
    SpMat fc(region.F);
    for (int j = 0; j < n; ++j) {
      LinExpr e;
      for (int a = 0; a < k; ++a)
        if (map.P(a, j) != 0.0) e.add(mu0 + a, map.P(a, j));
      for (SpMat::InnerIterator it(fc, j); it; ++it)
        e.add(la0 + static_cast<int>(it.row()), -it.value());
      p.add_row_eq(0.0, e);
    }
  }

  // residual complementarity: s+ > 0 needs mu = 1, s- > 0 needs mu = -1
  for (int a = 0; a < k; ++a) {
    p.add_row_le(0.0, LinExpr({{sp0 + a, 1.0}, {gp0 + a, -std::max(eb.dev_hi(a), 1e-9)}}));
    p.add_row_le(1.0, LinExpr({{mu0 + a, -1.0}, {gp0 + a, 2.0}}));
    p.add_row_le(0.0, LinExpr({{sm0 + a, 1.0}, {gm0 + a, -std::max(eb.dev_lo(a), 1e-9)}}));
    p.add_row_le(1.0, LinExpr({{mu0 + a, 1.0}, {gm0 + a, 2.0}}));
    p.add_row_le(1.0, LinExpr({{gp0 + a, 1.0}, {gm0 + a, 1.0}}));
  }
  return p;
}

UncoveredResult exact_search(const ConvexBody& B, const PreimageMap& map,
                             const FeasibleRegionHD& region, const UncoveredSearchOptions& opts,
                             PreimageLp& lp, Clock::time_point t0) {
  UncoveredResult res;
  ExactBounds eb = exact_bounds(B, map, region);
  if (!eb.bounded) {
    res.status = UncoveredStatus::inconclusive;
    res.note = fmt::format("exact phase needs finite activation bounds: {}", eb.gap);
    return res;
  }

  std::vector<TangentCut> cuts;
  for (const EllipsoidalSection& s : B.sections) {
    // box tangents around the section keep the first relaxation from flying off
    for (int c = 0; c < s.ell.dim(); ++c) {
      double span = s.ell.E.row(c).norm();
      TangentCut up, dn;
      up.a = Vec::Zero(B.dim);
      up.a(s.coords[static_cast<size_t>(c)]) = 1.0;
      up.b = s.ell.e(c) + span;
      dn.a = -up.a;
      dn.b = span - s.ell.e(c);
      cuts.push_back(std::move(up));
      cuts.push_back(std::move(dn));
    }
  }

  double dual_cap = opts.dual_cap;
  for (int attempt = 0; attempt < 2; ++attempt) {
    for (int round = 0; round <= opts.cut_rounds; ++round) {
      double remaining = opts.time_limit - seconds_since(t0);
      if (remaining <= 1.0) {
        res.status = UncoveredStatus::inconclusive;
        res.note = "exact search ran out of time";
        return res;
      }
      ConicProblem milp = build_exact_milp(B, map, region, eb, cuts, dual_cap);
      SolveOptions so;
      so.time_limit = remaining;
      so.mip_gap = std::max(1e-8, opts.tol / 4.0);
      SolveOutcome out = solve(milp, so);
      if (out.status == SolveStatus::limit) {
        res.status = UncoveredStatus::inconclusive;
        res.note = "exact search hit the solver time limit";
        return res;
      }
      require(out.status == SolveStatus::optimal, ErrorCode::solver,
              "exact search solve returned {}", to_string(out.status));

      Vec y = out.x.head(B.dim);
      bool cut_added = false;
      for (const EllipsoidalSection& s : B.sections) {
        if (ellipsoid_radius_at(s.ell, [&] {
              Vec ys(s.ell.dim());
              for (int c = 0; c < s.ell.dim(); ++c)
                ys(c) = y(s.coords[static_cast<size_t>(c)]);
              return ys;
            }()) > 1.0 + 1e-7) {
          cuts.push_back(tangent_at(s, y, B.dim));
          cut_added = true;
        }
      }
      if (cut_added) continue;

      if (out.obj <= opts.tol) {
        res.status = UncoveredStatus::none;
        res.method = "exact";
        return res;
      }
      double validated = lp.residual(y);
      if (validated >= opts.tol) {
        res.status = UncoveredStatus::found;
        res.y = y;
        res.infeasibility = validated;
        res.method = "exact";
        return res;
      }
      // claimed residual did not validate; widen the multiplier cap once
      break;
    }
    if (dual_cap != opts.dual_cap * 100.0) {
      dual_cap = opts.dual_cap * 100.0;
      continue;
    }
    break;
  }
  res.status = UncoveredStatus::inconclusive;
  res.note = "exact search value did not validate against the preimage solve";
  return res;
}

}  // namespace

const char* to_string(UncoveredStatus s) {
  switch (s) {
    case UncoveredStatus::none: return "none";
    case UncoveredStatus::found: return "found";
    case UncoveredStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

double preimage_infeasibility(const PreimageMap& map, const FeasibleRegionHD& region,
                              const Vec& y) {
  require(map.P.rows() == map.q.size() && map.P.cols() == region.n_int,
          ErrorCode::invalid_argument, "preimage map shape mismatch ({}x{} vs {} internals)",
          map.P.rows(), map.P.cols(), region.n_int);
  PreimageLp lp(map, region);
  return lp.residual(y);
}

Vec preimage_residuals(const PreimageMap& map, const FeasibleRegionHD& region,
                       const std::vector<Vec>& targets, int jobs) {
  const int n = static_cast<int>(targets.size());
  Vec out(n);
  const int workers = std::min(resolve_jobs(jobs), std::max(1, n));
  parallel_for(workers, workers, [&](int w) {
    const int lo = static_cast<int>(static_cast<long>(n) * w / workers);
    const int hi = static_cast<int>(static_cast<long>(n) * (w + 1) / workers);
    if (lo >= hi) return;
    PreimageLp lp(map, region);
    for (int i = lo; i < hi; ++i) out(i) = lp.residual(targets[static_cast<size_t>(i)]);
  });
  return out;
}

Vec nearest_covered_point(const PreimageMap& map, const FeasibleRegionHD& region, const Vec& y,
                          Vec* x_int_out) {
  const int k = map.dim();
  require(y.size() == k, ErrorCode::invalid_argument, "target has dim {}, map expects {}",
          y.size(), k);
  ConicProblem p;
  const int x0 = p.add_vars(region.n_int, -kInf, kInf);
  const int r0 = p.add_vars(k, -kInf, kInf);
  for (int i = 0; i < region.rows(); ++i) {
    LinExpr e;
    for (SpMatR::InnerIterator it(region.F, i); it; ++it)
      e.add(x0 + static_cast<int>(it.col()), it.value());
    p.add_row_le(region.f(i), e);
  }
  for (int a = 0; a < k; ++a) {
    LinExpr e;
    for (int j = 0; j < region.n_int; ++j)
      if (map.P(a, j) != 0.0) e.add(x0 + j, map.P(a, j));
    e.add(r0 + a, -1.0);
    p.add_row_eq(y(a) - map.q(a), e);
  }
  for (int a = 0; a < k; ++a) p.add_obj_quad(r0 + a, r0 + a, 2.0);
  SolveOutcome out = solve(p);
  require(out.status == SolveStatus::optimal, ErrorCode::solver,
          "nearest covered point solve returned {}", to_string(out.status));
  if (x_int_out) *x_int_out = out.x.head(region.n_int);
  return y + out.x.tail(k);
}

UncoveredResult find_uncovered_point(const ConvexBody& body, const PreimageMap& map,
                                     const FeasibleRegionHD& region,
                                     const UncoveredSearchOptions& opts) {
  require(body.dim == map.dim(), ErrorCode::invalid_argument,
          "body dim {} does not match map dim {}", body.dim, map.dim());
  require(map.P.cols() == region.n_int, ErrorCode::invalid_argument,
          "map expects {} internals, region has {}", map.P.cols(), region.n_int);
  const Clock::time_point t0 = Clock::now();
  PreimageLp lp(map, region);

  std::vector<Vec> dirs;
  for (int r = 0; r < body.poly.rows() && static_cast<int>(dirs.size()) < opts.probes; ++r) {
    Vec a = body.poly.A.row(r).transpose();
    double norm = a.norm();
    if (norm > 1e-12) dirs.push_back(a / norm);
  }
  std::mt19937_64 rng(mix_seed(opts.seed, 0x70726f6265ULL));
  while (static_cast<int>(dirs.size()) < opts.probes) dirs.push_back(random_unit(rng, body.dim));

  for (const Vec& dir : dirs) {
    Vec y = body_support_point(body, dir);
    double res = lp.residual(y);
    if (res >= opts.tol) {
      UncoveredResult r;
      r.status = UncoveredStatus::found;
      r.y = y;
      r.infeasibility = res;
      r.method = "probe";
      return r;
    }
  }

  double remaining = opts.time_limit - seconds_since(t0);
  if (remaining > 1.0 &&
      recourse_certificate(body, map, region, remaining)) {
    UncoveredResult r;
    r.status = UncoveredStatus::none;
    r.method = "recourse";
    return r;
  }

  if (opts.skip_exact) {
    UncoveredResult r;
    r.status = UncoveredStatus::inconclusive;
    r.note = "probes found nothing and the exact phase was skipped";
    return r;
  }
  return exact_search(body, map, region, opts, lp, t0);
}

}  // namespace gridagg
