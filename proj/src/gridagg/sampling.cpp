#include "gridagg/sampling.h"

#include <Highs.h>

#include <cmath>
#include <random>

#include "gridagg/solve.h"

namespace gridagg {

namespace {

Vec gather(const Vec& x, const std::vector<int>& coords) {
  Vec y(static_cast<long>(coords.size()));
  for (size_t i = 0; i < coords.size(); ++i) y(static_cast<long>(i)) = x(coords[i]);
  return y;
}

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(mix_seed(seed, 0x9e3779b9)); }

Vec random_direction(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec u(n);
  double norm = 0.0;
  do {
    for (int i = 0; i < n; ++i) u(i) = gauss(rng);
    norm = u.norm();
  } while (norm < 1e-12);
  return u / norm;
}

// Support solve max c'x over the body; errors name `what` when unbounded.
SolveOutcome body_support_solve(const ConvexBody& B, const Vec& c, const std::string& what) {
  ConicProblem p;
  p.add_vars(B.dim, -kInf, kInf);
  p.sense = Sense::maximize;
  for (int j = 0; j < B.dim; ++j)
    if (c(j) != 0.0) p.set_obj(j, c(j));
  for (int r = 0; r < B.poly.rows(); ++r) {
    LinExpr e;
    for (int j = 0; j < B.dim; ++j) e.add(j, B.poly.A(r, j));
    p.add_row_le(B.poly.b(r), e);
  }
  for (const EllipsoidalSection& s : B.sections) {
    std::vector<LinExpr> rows;
    rows.emplace_back(LinExpr({}, 1.0));
    const int ns = s.ell.dim();
    for (int i = 0; i < ns; ++i) {
      LinExpr row({}, 0.0);
      double shift = 0.0;
      for (int j = 0; j < ns; ++j) {
        row.add(s.coords[j], s.ell.E_inv(i, j));
        shift -= s.ell.E_inv(i, j) * s.ell.e(j);
      }
      row.constant = shift;
      rows.push_back(std::move(row));
    }
    p.add_soc(std::move(rows));
  }
  SolveOutcome out = solve(p);
  if (out.status == SolveStatus::unbounded)
    fail(ErrorCode::invalid_argument, "body is unbounded along {}", what);
  require(out.status == SolveStatus::optimal, ErrorCode::solver,
          "support solve failed ({}) along {}", to_string(out.status), what);
  return out;
}

double body_support(const ConvexBody& B, const Vec& c, const std::string& what) {
  return body_support_solve(B, c, what).obj;
}

// Chord [t_lo, t_hi] of the body along x + t u. Collapses to {0} when the
// current point sits numerically outside a section.
std::pair<double, double> body_chord(const ConvexBody& B, const Vec& x, const Vec& u) {
  double t_lo = -kInf, t_hi = kInf;
  for (int r = 0; r < B.poly.rows(); ++r) {
    const double au = B.poly.A.row(r).dot(u);
    const double slack = B.poly.b(r) - B.poly.A.row(r).dot(x);
    if (au > 1e-14)
      t_hi = std::min(t_hi, slack / au);
    else if (au < -1e-14)
      t_lo = std::max(t_lo, slack / au);
  }
  for (const EllipsoidalSection& s : B.sections) {
    const Vec y0 = s.ell.E_inv * (gather(x, s.coords) - s.ell.e);
    const Vec v = s.ell.E_inv * gather(u, s.coords);
    const double a = v.squaredNorm();
    if (a < 1e-28) continue;
    const double b = 2.0 * y0.dot(v);
    const double cq = y0.squaredNorm() - 1.0;
    const double disc = b * b - 4.0 * a * cq;
    if (disc <= 0.0) return {0.0, 0.0};
    const double root = std::sqrt(disc);
    t_lo = std::max(t_lo, (-b - root) / (2.0 * a));
    t_hi = std::min(t_hi, (-b + root) / (2.0 * a));
  }
  return {t_lo, t_hi};
}

std::vector<Vec> run_chain(const ConvexBody& B, Vec x, int k, std::uint64_t seed, int thin) {
  auto rng = make_rng(seed);
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(std::max(k, 0)));
  const int burn_in = 100 + 10 * B.dim;
  const int steps = burn_in + std::max(k, 0) * thin;
  int taken = 0;
  for (int s = 0; s < steps && static_cast<int>(out.size()) < k; ++s) {
    const Vec u = random_direction(rng, B.dim);
    auto [t_lo, t_hi] = body_chord(B, x, u);
    if (t_hi > t_lo && std::isfinite(t_lo) && std::isfinite(t_hi)) {
      std::uniform_real_distribution<double> pick(t_lo, t_hi);
      x += pick(rng) * u;
    }
    ++taken;
    if (taken > burn_in && (taken - burn_in) % thin == 0) out.push_back(x);
  }
  return out;
}

}  // namespace

bool ConvexBody::contains(const Vec& x, double tol) const {
  require(x.size() == dim, ErrorCode::invalid_argument, "contains: dimension mismatch");
  if (poly.rows() > 0 && !poly_contains(poly, x, tol)) return false;
  for (const EllipsoidalSection& s : sections)
    if (!ellipsoid_contains(s.ell, gather(x, s.coords), tol)) return false;
  return true;
}

Vec body_interior_point(const ConvexBody& B) {
  if (B.sections.empty()) return poly_interior_point(B.poly);

  // max m s.t. a_r'x + ||a_r|| m <= b_r, || E^-1 (x_sub - e) || <= 1 - m.
  ConicProblem p;
  const int xv = p.add_vars(B.dim, -kInf, kInf);
  const int mv = p.add_var(-kInf, 1.0);
  p.sense = Sense::maximize;
  p.set_obj(mv, 1.0);
  for (int r = 0; r < B.poly.rows(); ++r) {
    LinExpr e;
    for (int j = 0; j < B.dim; ++j) e.add(xv + j, B.poly.A(r, j));
    e.add(mv, B.poly.A.row(r).norm());
    p.add_row_le(B.poly.b(r), e);
  }
  for (const EllipsoidalSection& s : B.sections) {
    std::vector<LinExpr> rows;
    LinExpr head({}, 1.0);
    head.add(mv, -1.0);
    rows.push_back(std::move(head));
    const int ns = s.ell.dim();
    for (int i = 0; i < ns; ++i) {
      LinExpr row;
      double shift = 0.0;
      for (int j = 0; j < ns; ++j) {
        row.add(xv + s.coords[j], s.ell.E_inv(i, j));
        shift -= s.ell.E_inv(i, j) * s.ell.e(j);
      }
      row.constant = shift;
      rows.push_back(std::move(row));
    }
    p.add_soc(std::move(rows));
  }
  SolveOutcome out = solve(p);
  require(out.status == SolveStatus::optimal, ErrorCode::infeasible,
          "no interior point: intersection solve returned {}", to_string(out.status));
  require(out.x(mv) > 1e-9, ErrorCode::infeasible,
          "intersection of envelope and ellipsoid constraints has empty interior (margin {})",
          out.x(mv));
  return out.x.head(B.dim);
}

std::vector<Vec> sample_body(const ConvexBody& B, int k, std::uint64_t seed) {
  require(B.dim >= 1, ErrorCode::invalid_argument, "sample_body: empty dimension");
  if (k <= 0) return {};
  for (int j = 0; j < B.dim; ++j) {
    Vec c = Vec::Zero(B.dim);
    c(j) = 1.0;
    body_support(B, c, fmt::format("+x{}", j));
    body_support(B, -c, fmt::format("-x{}", j));
  }
  const Vec x0 = body_interior_point(B);
  const int thin = std::max(1, B.dim / 2);
  return run_chain(B, x0, k, seed, thin);
}

std::vector<Vec> sample_polytope(const HPolytope& P, int k, std::uint64_t seed) {
  ConvexBody B;
  B.dim = P.dim();
  B.poly = P;
  Vec lo, hi;
  poly_bounding_box(P, lo, hi);  // throws on unbounded coordinates
  if (k <= 0) return {};
  const Vec x0 = poly_interior_point(P);
  return run_chain(B, x0, k, seed, std::max(1, B.dim / 2));
}

struct ProjectionChordOracle::Impl {
  Highs highs;
  int n_int = 0;
  int n_bd = 0;
  int nf = 0;
  int t_col = 0;
  Vec d;
  const FeasibleRegionHD* region_ref = nullptr;  // must outlive the oracle
  bool built = false;

  void build(const FeasibleRegionHD& region, const Vec& x0, const Vec& u) {
    HighsLp lp;
    lp.num_col_ = region.n_int + 1;
    lp.num_row_ = nf + n_bd;
    lp.col_cost_.assign(static_cast<size_t>(lp.num_col_), 0.0);
    lp.col_cost_[static_cast<size_t>(t_col)] = 1.0;
    lp.col_lower_.assign(static_cast<size_t>(lp.num_col_), -kHighsInf);
    lp.col_upper_.assign(static_cast<size_t>(lp.num_col_), kHighsInf);
    lp.col_lower_[static_cast<size_t>(t_col)] = -1e9;
    lp.col_upper_[static_cast<size_t>(t_col)] = 1e9;
    for (int r = 0; r < nf; ++r) {
      lp.row_lower_.push_back(-kHighsInf);
      lp.row_upper_.push_back(region.f(r));
    }
    for (int r = 0; r < n_bd; ++r) {
      lp.row_lower_.push_back(x0(r) - d(r));
      lp.row_upper_.push_back(x0(r) - d(r));
    }
    // Column-wise: x_int columns carry F and C entries; the t column carries
    // -u in the coupling rows.
    lp.a_matrix_.format_ = MatrixFormat::kColwise;
    lp.a_matrix_.start_.push_back(0);
    const SpMat Fc = region.F;  // column-major copy for per-column iteration
    for (int j = 0; j < region.n_int; ++j) {
      for (SpMat::InnerIterator it(Fc, j); it; ++it) {
        lp.a_matrix_.index_.push_back(static_cast<HighsInt>(it.row()));
        lp.a_matrix_.value_.push_back(it.value());
      }
      for (int r = 0; r < n_bd; ++r) {
        if (region.C(r, j) != 0.0) {
          lp.a_matrix_.index_.push_back(static_cast<HighsInt>(nf + r));
          lp.a_matrix_.value_.push_back(region.C(r, j));
        }
      }
      lp.a_matrix_.start_.push_back(static_cast<HighsInt>(lp.a_matrix_.index_.size()));
    }
    for (int r = 0; r < n_bd; ++r) {
      lp.a_matrix_.index_.push_back(static_cast<HighsInt>(nf + r));
      lp.a_matrix_.value_.push_back(-u(r));
    }
    lp.a_matrix_.start_.push_back(static_cast<HighsInt>(lp.a_matrix_.index_.size()));

    highs.setOptionValue("output_flag", false);
    highs.setOptionValue("threads", 1);
    highs.setOptionValue("random_seed", 0);
    highs.setOptionValue("presolve", "off");
    highs.passModel(lp);
    built = true;
  }

  double directed_extreme(ObjSense sense) {
    highs.changeObjectiveSense(sense);
    const HighsStatus st = highs.run();
    require(st != HighsStatus::kError, ErrorCode::solver, "chord LP failed");
    const HighsModelStatus ms = highs.getModelStatus();
    require(ms == HighsModelStatus::kOptimal, ErrorCode::internal,
            "chord LP not optimal ({}); start point left the projection",
            highs.modelStatusToString(ms));
    return highs.getSolution().col_value[static_cast<size_t>(t_col)];
  }
};

ProjectionChordOracle::ProjectionChordOracle(const FeasibleRegionHD& region)
    : impl_(new Impl), n_bd_(region.n_bd) {
  impl_->n_int = region.n_int;
  impl_->n_bd = region.n_bd;
  impl_->nf = region.rows();
  impl_->t_col = region.n_int;
  impl_->d = region.d;
  impl_->region_ref = &region;
}

ProjectionChordOracle::~ProjectionChordOracle() = default;

std::pair<double, double> ProjectionChordOracle::chord(const Vec& x0, const Vec& u) {
  require(x0.size() == n_bd_ && u.size() == n_bd_, ErrorCode::invalid_argument,
          "chord: dimension mismatch");
  if (!impl_->built) {
    impl_->build(*impl_->region_ref, x0, u);
  } else {
    for (int r = 0; r < n_bd_; ++r) {
      impl_->highs.changeCoeff(impl_->nf + r, impl_->t_col, -u(r));
      const double rhs = x0(r) - impl_->d(r);
      impl_->highs.changeRowBounds(impl_->nf + r, rhs, rhs);
    }
  }
  const double t_hi = impl_->directed_extreme(ObjSense::kMaximize);
  const double t_lo = impl_->directed_extreme(ObjSense::kMinimize);
  require(std::abs(t_hi) < 1e8 && std::abs(t_lo) < 1e8, ErrorCode::invalid_argument,
          "projection is unbounded along a sampled direction");
  return {t_lo, t_hi};
}

Vec projection_interior_point(const FeasibleRegionHD& region) {
  Vec acc = Vec::Zero(region.n_bd);
  for (int r = 0; r < region.n_bd; ++r) {
    for (const double sgn : {1.0, -1.0}) {
      ConicProblem p;
      p.add_vars(region.n_int, -kInf, kInf);
      p.sense = Sense::maximize;
      for (int j = 0; j < region.n_int; ++j)
        if (region.C(r, j) != 0.0) p.set_obj(j, sgn * region.C(r, j));
      for (int rr = 0; rr < region.rows(); ++rr) {
        LinExpr e;
        for (SpMatR::InnerIterator it(region.F, rr); it; ++it)
          e.add(static_cast<int>(it.col()), it.value());
        p.add_row_le(region.f(rr), e);
      }
      SolveOutcome out = solve(p);
      if (out.status == SolveStatus::unbounded)
        fail(ErrorCode::invalid_argument, "boundary coordinate {} ({} slot {}) is unbounded",
             r, region.bd_labels[r].element, region.bd_labels[r].slot);
      require(out.status == SolveStatus::optimal, ErrorCode::solver,
              "support solve for boundary coordinate {} returned {}", r, to_string(out.status));
      acc += region.boundary_of(out.x);
    }
  }
  return acc / (2.0 * region.n_bd);
}

std::vector<Vec> sample_projection(const FeasibleRegionHD& region, int k, std::uint64_t seed) {
  if (k <= 0) return {};
  Vec x = projection_interior_point(region);
  ProjectionChordOracle oracle(region);
  auto rng = make_rng(seed);
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(k));
  const int n = region.n_bd;
  const int burn_in = 100 + 10 * n;
  int degenerate_run = 0;
  for (int s = 0; static_cast<int>(out.size()) < k; ++s) {
    const Vec u = random_direction(rng, n);
    auto [t_lo, t_hi] = oracle.chord(x, u);
    if (t_hi - t_lo > 1e-12) {
      degenerate_run = 0;
      std::uniform_real_distribution<double> pick(t_lo, t_hi);
      x += pick(rng) * u;
    } else if (++degenerate_run > burn_in) {
      fail(ErrorCode::invalid_argument,
           "projection appears flat: {} consecutive zero-length chords", degenerate_run);
    }
    if (s >= burn_in) out.push_back(x);
  }
  return out;
}

Vec body_support_point(const ConvexBody& B, const Vec& dir) {
  require(dir.size() == B.dim, ErrorCode::invalid_argument,
          "support direction has dim {}, body has dim {}", dir.size(), B.dim);
  return body_support_solve(B, dir, "a caller-supplied direction").x;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace gridagg
