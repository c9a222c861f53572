#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gridagg/common.h"

namespace gridagg {

enum class Sense { minimize, maximize };
enum class VarType : char { continuous, integer };

// Affine expression over problem variables: sum(coef * x[idx]) + constant.
struct LinExpr {
  std::vector<std::pair<int, double>> terms;
  double constant = 0.0;

  LinExpr() = default;
  LinExpr(std::initializer_list<std::pair<int, double>> t, double c = 0.0)
      : terms(t), constant(c) {}
  static LinExpr var(int idx, double coef = 1.0) { return LinExpr({{idx, coef}}); }
  LinExpr& add(int idx, double coef) {
    if (coef != 0.0) terms.emplace_back(idx, coef);
    return *this;
  }
  double eval(const Vec& x) const;
};

enum class ConeTag { second_order, psd, exponential };

// second_order: rows (t, v...) with t >= ||v||.
// psd: rows are the scaled lower triangle (column-major) of a symmetric
//      matrix required PSD; dim is the matrix side.
// exponential: rows (a, b, c) with b*exp(a/b) <= c, b > 0.
struct ConeBlock {
  ConeTag tag;
  int dim;
  std::vector<LinExpr> rows;
};

// One optimization problem over scalar variables:
//   optimize  c0 + c'x + 0.5 x'Qx
//   s.t.      rlb <= A x <= rub,  lb <= x <= ub,  cone blocks,  integrality.
struct ConicProblem {
  Sense sense = Sense::minimize;
  double c0 = 0.0;

  int num_vars() const { return static_cast<int>(lb.size()); }
  int num_rows() const { return static_cast<int>(rlb.size()); }

  int add_var(double lo, double hi, VarType t = VarType::continuous);
  int add_vars(int k, double lo, double hi);

  void set_obj(int var, double coef);
  void add_obj(int var, double coef);
  // Adds coef * x_i * x_j to the objective (handles the symmetric split).
  void add_obj_quad(int i, int j, double coef);

  int add_row(double lo, double hi, const LinExpr& e);
  int add_row_eq(double rhs, const LinExpr& e) { return add_row(rhs, rhs, e); }
  int add_row_le(double hi, const LinExpr& e) { return add_row(-kInf, hi, e); }
  int add_row_ge(double lo, const LinExpr& e) { return add_row(lo, kInf, e); }

  void add_soc(std::vector<LinExpr> rows);
  // entries[i][j] for j <= i gives M_ij of the symmetric matrix constrained PSD.
  void add_psd_lower(const std::vector<std::vector<LinExpr>>& entries);
  void add_exp(LinExpr a, LinExpr b, LinExpr c);

  bool has_integrality() const;
  bool has_quad_obj() const { return !Q.empty(); }
  bool has_cones() const { return !cones.empty(); }

  std::vector<double> lb, ub;
  std::vector<VarType> vtype;
  std::vector<double> c;
  std::vector<Triplet> Q;  // lower triangle of Q in 0.5 x'Qx
  std::vector<Triplet> A;  // row-indexed triplets
  std::vector<double> rlb, rub;
  std::vector<ConeBlock> cones;
};

enum class SolveStatus { optimal, infeasible, unbounded, limit, error };

const char* to_string(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::error;
  Vec x;         // primal values; empty unless optimal or limit-with-incumbent
  Vec row_dual;  // duals of linear rows when the backend provides them
  double obj = std::numeric_limits<double>::quiet_NaN();
  long iterations = 0;
  double wall_seconds = 0.0;
  std::string detail;

  bool has_primal() const { return x.size() > 0; }
};

struct SolveOptions {
  double time_limit = 600.0;
  double mip_gap = 1e-6;   // absolute gap on MILP objectives
  double tol = 1e-8;       // solver feasibility/optimality tolerance
  bool verbose = false;
};

// Largest constraint violation of x, scaled by 1 + |bound|. Covers variable
// bounds, linear rows, and cone residuals (PSD via eigenvalues).
double max_violation(const ConicProblem& p, const Vec& x);
double objective_value(const ConicProblem& p, const Vec& x);

}  // namespace gridagg
