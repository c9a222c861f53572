#include "gridagg/solve.h"

#include <atomic>
#include <cmath>
#include <cstdlib>

#include "gridagg/solver_clarabel.h"
#include "gridagg/solver_highs.h"

namespace gridagg {

SolverProfile solver_profile_from_env() {
  const char* v = std::getenv("GRIDAGG_SOLVER");
  if (!v || std::string(v).empty() || std::string(v) == "auto") return SolverProfile::automatic;
  std::string s(v);
  if (s == "highs") return SolverProfile::highs_only;
  if (s == "clarabel") return SolverProfile::clarabel_only;
  fail(ErrorCode::invalid_argument, "GRIDAGG_SOLVER must be auto, highs or clarabel (got {})", s);
}

bool profile_supports(SolverProfile prof, const ConicProblem& p) {
  if (p.has_cones() && p.has_integrality()) return false;
  switch (prof) {
    case SolverProfile::automatic: return true;
    case SolverProfile::highs_only: return !p.has_cones();
    case SolverProfile::clarabel_only: return !p.has_integrality();
  }
  return false;
}

namespace {

std::atomic<long> dump_counter{0};

void maybe_dump(const ConicProblem& p) {
  const char* dir = std::getenv("GRIDAGG_DUMP_DIR");
  if (!dir || !*dir) return;
  long n = dump_counter.fetch_add(1);
  dump_problem_lp(p, fmt::format("{}/problem_{:05d}.lp", dir, n));
}

SolveOutcome verify(const ConicProblem& p, SolveOutcome out, const SolveOptions& opts) {
  if (out.status != SolveStatus::optimal) return out;
  double viol = max_violation(p, out.x);
  double tol_accept = std::max(1e-6, 50.0 * opts.tol);
  if (viol > tol_accept) {
    out.status = SolveStatus::error;
    out.detail = fmt::format("reported optimum violates constraints by {:.3e}", viol);
    return out;
  }
  double obj = objective_value(p, out.x);
  if (std::abs(obj - out.obj) > 1e-6 * (1.0 + std::abs(obj))) {
    // trust the recomputation; engines round the reported value
    out.obj = obj;
  }
  return out;
}

}  // namespace

SolveOutcome solve(const ConicProblem& p, const SolveOptions& opts) {
  SolverProfile prof = solver_profile_from_env();
  require(profile_supports(prof, p), ErrorCode::solver,
          "problem class (cones={}, integer={}) unsupported under the active solver profile",
          p.has_cones(), p.has_integrality());
  maybe_dump(p);
  SolveOutcome out;
  bool use_clarabel = p.has_cones() || prof == SolverProfile::clarabel_only;
  out = use_clarabel ? solve_with_clarabel(p, opts) : solve_with_highs(p, opts);
  return verify(p, std::move(out), opts);
}

FeasibilityResult check_feasibility(const ConicProblem& p, double tol, const SolveOptions& opts) {
  require(!p.has_cones() && !p.has_integrality(), ErrorCode::invalid_argument,
          "feasibility relaxation is defined for linear systems");
  // relax every row by s+ - s-, minimize the total relaxation
  ConicProblem relax = p;
  std::fill(relax.c.begin(), relax.c.end(), 0.0);
  relax.Q.clear();
  relax.c0 = 0.0;
  relax.sense = Sense::minimize;
  const int n = p.num_vars();
  const int m = p.num_rows();
  for (int r = 0; r < m; ++r) {
    int sp = relax.add_var(0.0, kInf);
    int sm = relax.add_var(0.0, kInf);
    relax.set_obj(sp, 1.0);
    relax.set_obj(sm, 1.0);
    relax.A.emplace_back(r, sp, 1.0);
    relax.A.emplace_back(r, sm, -1.0);
  }
  SolveOutcome out = solve_with_highs(relax, opts);
  require(out.status == SolveStatus::optimal, ErrorCode::solver,
          "feasibility relaxation did not solve: {}", out.detail);

  FeasibilityResult res;
  res.residual = std::max(0.0, out.obj);
  if (res.residual <= tol) {
    res.feasible = true;
    res.point = out.x.head(n);
    return res;
  }
  res.feasible = false;
  require(out.row_dual.size() == m, ErrorCode::internal, "relaxation solve returned no duals");
  // Orient the multipliers so the certificate margin is negative.
  Vec y = out.row_dual;
  if (farkas_gap(p, y) > farkas_gap(p, Vec(-y))) y = -y;
  res.farkas = y;
  return res;
}

double farkas_gap(const ConicProblem& p, const Vec& y) {
  // gap = sup_x_in_box y'Ax - inf required by rows; < 0 proves emptiness.
  Vec g = Vec::Zero(p.num_vars());
  for (const auto& t : p.A) g[t.col()] += y[t.row()] * t.value();
  double box_sup = 0.0;
  for (int j = 0; j < p.num_vars(); ++j) {
    size_t sj = static_cast<size_t>(j);
    if (g[j] > 0)
      box_sup += g[j] * p.ub[sj];
    else if (g[j] < 0)
      box_sup += g[j] * p.lb[sj];
    if (!std::isfinite(box_sup)) return kInf;
  }
  double row_inf = 0.0;
  for (int r = 0; r < p.num_rows(); ++r) {
    size_t sr = static_cast<size_t>(r);
    if (y[r] > 0)
      row_inf += y[r] * p.rlb[sr];
    else if (y[r] < 0)
      row_inf += y[r] * p.rub[sr];
    if (!std::isfinite(row_inf)) return kInf;
  }
  return box_sup - row_inf;
}

}  // namespace gridagg
