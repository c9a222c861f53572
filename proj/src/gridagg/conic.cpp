#include "gridagg/conic.h"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace gridagg {

double LinExpr::eval(const Vec& x) const {
  double v = constant;
  for (const auto& [idx, coef] : terms) v += coef * x[idx];
  return v;
}

int ConicProblem::add_var(double lo, double hi, VarType t) {
  require(!(lo > hi), ErrorCode::invalid_argument, "variable bounds crossed: [{}, {}]", lo, hi);
  lb.push_back(lo);
  ub.push_back(hi);
  vtype.push_back(t);
  c.push_back(0.0);
  return num_vars() - 1;
}

int ConicProblem::add_vars(int k, double lo, double hi) {
  int first = num_vars();
  for (int i = 0; i < k; ++i) add_var(lo, hi);
  return first;
}

void ConicProblem::set_obj(int var, double coef) { c[static_cast<size_t>(var)] = coef; }

void ConicProblem::add_obj(int var, double coef) { c[static_cast<size_t>(var)] += coef; }

void ConicProblem::add_obj_quad(int i, int j, double coef) {
  if (coef == 0.0) return;
  // objective carries 0.5 x'Qx: diagonal needs 2*coef, off-diagonal coef on
  // the lower-triangle entry (the symmetric half is implied).
  if (i == j) {
    Q.emplace_back(i, i, 2.0 * coef);
  } else {
    Q.emplace_back(std::max(i, j), std::min(i, j), coef);
  }
}

int ConicProblem::add_row(double lo, double hi, const LinExpr& e) {
  require(!(lo > hi), ErrorCode::invalid_argument, "row bounds crossed: [{}, {}]", lo, hi);
  int r = num_rows();
  rlb.push_back(lo - e.constant);
  rub.push_back(hi - e.constant);
  for (const auto& [idx, coef] : e.terms) {
    if (coef != 0.0) A.emplace_back(r, idx, coef);
  }
  return r;
}

void ConicProblem::add_soc(std::vector<LinExpr> rows) {
  require(rows.size() >= 1, ErrorCode::invalid_argument, "soc block needs rows");
  ConeBlock b{ConeTag::second_order, static_cast<int>(rows.size()), std::move(rows)};
  cones.push_back(std::move(b));
}

void ConicProblem::add_psd_lower(const std::vector<std::vector<LinExpr>>& entries) {
  int n = static_cast<int>(entries.size());
  require(n >= 1, ErrorCode::invalid_argument, "psd block needs entries");
  const double rt2 = std::sqrt(2.0);
  // scaled lower triangle, column-major: the standard packed symmetric layout.
  std::vector<LinExpr> rows;
  rows.reserve(static_cast<size_t>(n * (n + 1) / 2));
  for (int j = 0; j < n; ++j) {
    for (int i = j; i < n; ++i) {
      require(static_cast<int>(entries[static_cast<size_t>(i)].size()) >= j + 1,
              ErrorCode::invalid_argument, "psd entries must give the lower triangle");
      LinExpr e = entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (i != j) {
        for (auto& t : e.terms) t.second *= rt2;
        e.constant *= rt2;
      }
      rows.push_back(std::move(e));
    }
  }
  cones.push_back(ConeBlock{ConeTag::psd, n, std::move(rows)});
}

void ConicProblem::add_exp(LinExpr a, LinExpr b, LinExpr c_) {
  cones.push_back(ConeBlock{ConeTag::exponential, 3, {std::move(a), std::move(b), std::move(c_)}});
}

bool ConicProblem::has_integrality() const {
  for (VarType t : vtype)
    if (t == VarType::integer) return true;
  return false;
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::limit: return "limit";
    case SolveStatus::error: return "error";
  }
  return "?";
}

double objective_value(const ConicProblem& p, const Vec& x) {
  double v = p.c0;
  for (int i = 0; i < p.num_vars(); ++i) v += p.c[static_cast<size_t>(i)] * x[i];
  for (const auto& t : p.Q) {
    double term = 0.5 * t.value() * x[t.row()] * x[t.col()];
    v += (t.row() == t.col()) ? term : 2.0 * term;
  }
  return v;
}

namespace {

double bound_violation(double v, double lo, double hi) {
  double viol = 0.0;
  if (v < lo) viol = (lo - v) / (1.0 + std::abs(lo));
  if (v > hi) viol = std::max(viol, (v - hi) / (1.0 + std::abs(hi)));
  return viol;
}

}  // namespace

double max_violation(const ConicProblem& p, const Vec& x) {
  double worst = 0.0;
  for (int i = 0; i < p.num_vars(); ++i) {
    size_t si = static_cast<size_t>(i);
    worst = std::max(worst, bound_violation(x[i], p.lb[si], p.ub[si]));
    if (p.vtype[si] == VarType::integer)
      worst = std::max(worst, std::abs(x[i] - std::round(x[i])));
  }
  Vec row_val = Vec::Zero(p.num_rows());
  for (const auto& t : p.A) row_val[t.row()] += t.value() * x[t.col()];
  for (int r = 0; r < p.num_rows(); ++r) {
    size_t sr = static_cast<size_t>(r);
    worst = std::max(worst, bound_violation(row_val[r], p.rlb[sr], p.rub[sr]));
  }
  for (const auto& blk : p.cones) {
    Vec s(blk.rows.size());
    for (size_t i = 0; i < blk.rows.size(); ++i)
      s[static_cast<Eigen::Index>(i)] = blk.rows[i].eval(x);
    switch (blk.tag) {
      case ConeTag::second_order: {
        double t = s[0], nv = s.tail(s.size() - 1).norm();
        worst = std::max(worst, (nv - t) / (1.0 + std::abs(t)));
        break;
      }
      case ConeTag::psd: {
        int n = blk.dim;
        Mat M(n, n);
        const double rt2 = std::sqrt(2.0);
        int k = 0;
        for (int j = 0; j < n; ++j)
          for (int i = j; i < n; ++i, ++k) {
            double v = (i == j) ? s[k] : s[k] / rt2;
            M(i, j) = v;
            M(j, i) = v;
          }
        Eigen::SelfAdjointEigenSolver<Mat> es(M, Eigen::EigenvaluesOnly);
        worst = std::max(worst, -es.eigenvalues().minCoeff());
        break;
      }
      case ConeTag::exponential: {
        double a = s[0], b = s[1], cc = s[2];
        if (b <= 0) {
          worst = std::max(worst, -b + (a > 0 ? a : 0.0));
        } else {
          worst = std::max(worst, (b * std::exp(a / b) - cc) / (1.0 + std::abs(cc)));
        }
        break;
      }
    }
  }
  return worst;
}

}  // namespace gridagg
