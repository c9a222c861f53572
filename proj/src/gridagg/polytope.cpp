#include "gridagg/polytope.h"

#include "gridagg/solve.h"

namespace gridagg {

HPolytope::HPolytope(Mat A_, Vec b_) : A(std::move(A_)), b(std::move(b_)) {
  require(A.rows() == b.size(), ErrorCode::invalid_argument,
          "polytope rows mismatch: A has {}, b has {}", A.rows(), b.size());
  require(A.cols() >= 1, ErrorCode::invalid_argument, "polytope needs at least one dimension");
  require(A.allFinite() && b.allFinite(), ErrorCode::invalid_argument,
          "polytope entries must be finite");
}

Json HPolytope::to_json() const {
  Json j;
  j["A"] = mat_to_json(A);
  j["b"] = vec_to_json(b);
  return j;
}

HPolytope HPolytope::from_json(const Json& j, const std::string& path) {
  return HPolytope(mat_from_json(member(j, "A", path), path + ".A"),
                   vec_from_json(member(j, "b", path), path + ".b"));
}

bool poly_contains(const HPolytope& P, const Vec& x, double tol) {
  require(x.size() == P.A.cols(), ErrorCode::invalid_argument,
          "point dim {} vs polytope dim {}", x.size(), P.A.cols());
  for (int i = 0; i < P.rows(); ++i) {
    double scale = 1.0 + P.A.row(i).norm();
    if (P.A.row(i).dot(x) > P.b[i] + tol * scale) return false;
  }
  return true;
}

namespace {

ConicProblem rows_problem(const HPolytope& P) {
  ConicProblem p;
  p.add_vars(P.dim(), -kInf, kInf);
  for (int i = 0; i < P.rows(); ++i) {
    LinExpr e;
    for (int j = 0; j < P.dim(); ++j) e.add(j, P.A(i, j));
    p.add_row_le(P.b[i], e);
  }
  return p;
}

}  // namespace

bool poly_empty(const HPolytope& P) {
  ConicProblem p = rows_problem(P);
  return !check_feasibility(p).feasible;
}

void poly_bounding_box(const HPolytope& P, Vec& lo, Vec& hi) {
  ConicProblem p = rows_problem(P);
  lo.resize(P.dim());
  hi.resize(P.dim());
  for (int j = 0; j < P.dim(); ++j) {
    for (bool upper : {false, true}) {
      ConicProblem q = p;
      q.sense = upper ? Sense::maximize : Sense::minimize;
      q.set_obj(j, 1.0);
      SolveOutcome out = solve(q);
      if (out.status == SolveStatus::unbounded)
        fail(ErrorCode::solver, "polytope unbounded in coordinate {} ({})", j,
             upper ? "above" : "below");
      if (out.status == SolveStatus::infeasible)
        fail(ErrorCode::infeasible, "polytope is empty");
      require(out.status == SolveStatus::optimal, ErrorCode::solver, "bound solve failed: {}",
              out.detail);
      (upper ? hi : lo)[j] = out.obj;
    }
  }
}

Vec poly_interior_point(const HPolytope& P) {
  // max r  s.t.  A x + r * ||a_i|| <= b
  ConicProblem p;
  p.add_vars(P.dim(), -kInf, kInf);
  int r = p.add_var(0.0, kInf);
  p.set_obj(r, 1.0);
  p.sense = Sense::maximize;
  for (int i = 0; i < P.rows(); ++i) {
    LinExpr e;
    for (int j = 0; j < P.dim(); ++j) e.add(j, P.A(i, j));
    e.add(r, P.A.row(i).norm());
    p.add_row_le(P.b[i], e);
  }
  SolveOutcome out = solve(p);
  if (out.status == SolveStatus::infeasible) fail(ErrorCode::infeasible, "polytope is empty");
  // an unbounded radius still yields a ray; cap it to get a point
  if (out.status == SolveStatus::unbounded) {
    p.ub[static_cast<size_t>(r)] = 1.0;
    out = solve(p);
  }
  require(out.status == SolveStatus::optimal && out.obj > 0, ErrorCode::infeasible,
          "polytope has no interior (radius {})", out.obj);
  return out.x.head(P.dim());
}

HPolytope make_box(const Vec& lo, const Vec& hi) {
  int n = static_cast<int>(lo.size());
  Mat A = Mat::Zero(2 * n, n);
  Vec b(2 * n);
  for (int j = 0; j < n; ++j) {
    A(2 * j, j) = 1.0;
    b[2 * j] = hi[j];
    A(2 * j + 1, j) = -1.0;
    b[2 * j + 1] = -lo[j];
  }
  return HPolytope(std::move(A), std::move(b));
}

}  // namespace gridagg
