#include "gridagg/solver_highs.h"

#include <Highs.h>

#include <algorithm>
#include <chrono>
#include <numeric>

namespace gridagg {

namespace {

// Column-wise CSC from row-indexed triplets; duplicate entries are summed.
void to_csc(const std::vector<Triplet>& trips, int rows, int cols,
            std::vector<HighsInt>& start, std::vector<HighsInt>& index,
            std::vector<double>& value) {
  (void)rows;
  std::vector<Triplet> t = trips;
  std::sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
    return a.col() != b.col() ? a.col() < b.col() : a.row() < b.row();
  });
  start.assign(static_cast<size_t>(cols) + 1, 0);
  index.clear();
  value.clear();
  for (size_t k = 0; k < t.size();) {
    size_t j = k;
    double sum = t[k].value();
    while (j + 1 < t.size() && t[j + 1].col() == t[k].col() && t[j + 1].row() == t[k].row()) {
      ++j;
      sum += t[j].value();
    }
    if (sum != 0.0) {
      index.push_back(t[k].row());
      value.push_back(sum);
      ++start[static_cast<size_t>(t[k].col()) + 1];
    }
    k = j + 1;
  }
  std::partial_sum(start.begin(), start.end(), start.begin());
}

HighsLp build_lp(const ConicProblem& p) {
  HighsLp lp;
  lp.num_col_ = p.num_vars();
  lp.num_row_ = p.num_rows();
  lp.col_cost_ = p.c;
  lp.col_lower_ = p.lb;
  lp.col_upper_ = p.ub;
  lp.row_lower_ = p.rlb;
  lp.row_upper_ = p.rub;
  lp.offset_ = p.c0;
  lp.sense_ = p.sense == Sense::minimize ? ObjSense::kMinimize : ObjSense::kMaximize;
  if (p.has_integrality()) {
    lp.integrality_.resize(static_cast<size_t>(p.num_vars()));
    for (int i = 0; i < p.num_vars(); ++i)
      lp.integrality_[static_cast<size_t>(i)] = p.vtype[static_cast<size_t>(i)] == VarType::integer
                                                    ? HighsVarType::kInteger
                                                    : HighsVarType::kContinuous;
  }
  lp.a_matrix_.format_ = MatrixFormat::kColwise;
  lp.a_matrix_.num_col_ = lp.num_col_;
  lp.a_matrix_.num_row_ = lp.num_row_;
  to_csc(p.A, p.num_rows(), p.num_vars(), lp.a_matrix_.start_, lp.a_matrix_.index_,
         lp.a_matrix_.value_);
  return lp;
}

HighsHessian build_hessian(const ConicProblem& p) {
  HighsHessian h;
  h.dim_ = p.num_vars();
  h.format_ = HessianFormat::kTriangular;
  // triplets hold the lower triangle; HiGHS wants column-wise lower CSC
  to_csc(p.Q, p.num_vars(), p.num_vars(), h.start_, h.index_, h.value_);
  return h;
}

void configure(Highs& highs, const SolveOptions& opts) {
  highs.setOptionValue("output_flag", opts.verbose);
  highs.setOptionValue("threads", 1);
  highs.setOptionValue("time_limit", opts.time_limit);
  highs.setOptionValue("mip_abs_gap", opts.mip_gap);
  highs.setOptionValue("mip_rel_gap", 0.0);
  highs.setOptionValue("primal_feasibility_tolerance", std::min(opts.tol, 1e-7));
  highs.setOptionValue("dual_feasibility_tolerance", std::min(opts.tol, 1e-7));
  highs.setOptionValue("random_seed", 0);
}

}  // namespace

SolveOutcome solve_with_highs(const ConicProblem& p, const SolveOptions& opts) {
  require(!p.has_cones(), ErrorCode::solver, "cone blocks not supported by this engine");
  auto t0 = std::chrono::steady_clock::now();

  Highs highs;
  configure(highs, opts);
  HighsLp lp = build_lp(p);
  if (highs.passModel(lp) != HighsStatus::kOk)
    fail(ErrorCode::solver, "model rejected by engine");
  if (p.has_quad_obj()) {
    require(!p.has_integrality(), ErrorCode::solver, "integer quadratic models unsupported");
    if (highs.passHessian(build_hessian(p)) != HighsStatus::kOk)
      fail(ErrorCode::solver, "hessian rejected by engine");
  }
  HighsStatus rs = highs.run();
  if (rs == HighsStatus::kError) fail(ErrorCode::solver, "engine error during solve");

  SolveOutcome out;
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  HighsModelStatus ms = highs.getModelStatus();
  const HighsSolution& sol = highs.getSolution();
  const HighsInfo& info = highs.getInfo();
  out.iterations = std::max<long>(info.simplex_iteration_count, info.ipm_iteration_count);
  out.detail = highs.modelStatusToString(ms);

  auto take_primal = [&] {
    out.x = Eigen::Map<const Vec>(sol.col_value.data(), static_cast<Eigen::Index>(sol.col_value.size()));
    if (sol.dual_valid)
      out.row_dual =
          Eigen::Map<const Vec>(sol.row_dual.data(), static_cast<Eigen::Index>(sol.row_dual.size()));
    out.obj = info.objective_function_value;
  };

  switch (ms) {
    case HighsModelStatus::kOptimal:
      out.status = SolveStatus::optimal;
      take_primal();
      break;
    case HighsModelStatus::kInfeasible:
      out.status = SolveStatus::infeasible;
      break;
    case HighsModelStatus::kUnbounded:
      out.status = SolveStatus::unbounded;
      break;
    case HighsModelStatus::kUnboundedOrInfeasible: {
      // disambiguate with a zero-objective feasibility run
      ConicProblem feas = p;
      std::fill(feas.c.begin(), feas.c.end(), 0.0);
      feas.Q.clear();
      feas.c0 = 0.0;
      SolveOutcome f = solve_with_highs(feas, opts);
      out.status = f.status == SolveStatus::optimal ? SolveStatus::unbounded
                                                    : SolveStatus::infeasible;
      break;
    }
    case HighsModelStatus::kTimeLimit:
    case HighsModelStatus::kIterationLimit:
    case HighsModelStatus::kSolutionLimit:
      out.status = SolveStatus::limit;
      if (sol.value_valid) take_primal();
      break;
    default:
      out.status = SolveStatus::error;
      break;
  }
  return out;
}

void dump_problem_lp(const ConicProblem& p, const std::string& path) {
  if (p.has_cones()) return;  // not representable in LP text format
  Highs highs;
  highs.setOptionValue("output_flag", false);
  highs.passModel(build_lp(p));
  if (p.has_quad_obj()) highs.passHessian(build_hessian(p));
  highs.writeModel(path);
}

}  // namespace gridagg
