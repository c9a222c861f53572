#include "gridagg/solver_clarabel.h"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <numeric>

namespace {

struct CfSolution {
  int status;  // 0 solved, 1 primal infeas, 2 dual infeas, 3 almost, 4 limit, 5 numerics, 6 stall
  double obj;
  unsigned iterations;
};

extern "C" int cf_solve(
    size_t n, size_t m,
    const size_t* p_colptr, const size_t* p_rowind, const double* p_vals, size_t p_nnz,
    const double* q,
    const size_t* a_colptr, const size_t* a_rowind, const double* a_vals, size_t a_nnz,
    const double* b,
    const int* cone_tags, const size_t* cone_dims, size_t n_cones,
    unsigned max_iter, double time_limit, double tol, int verbose,
    double* x_out, double* z_out, double* s_out, CfSolution* sol);

}  // namespace

namespace gridagg {

namespace {

struct Csc {
  std::vector<size_t> colptr, rowind;
  std::vector<double> vals;
};

Csc to_csc(std::vector<Triplet> t, int cols) {
  std::sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
    return a.col() != b.col() ? a.col() < b.col() : a.row() < b.row();
  });
  Csc m;
  m.colptr.assign(static_cast<size_t>(cols) + 1, 0);
  for (size_t k = 0; k < t.size();) {
    size_t j = k;
    double sum = t[k].value();
    while (j + 1 < t.size() && t[j + 1].col() == t[k].col() && t[j + 1].row() == t[k].row()) {
      ++j;
      sum += t[j].value();
    }
    if (sum != 0.0) {
      m.rowind.push_back(static_cast<size_t>(t[k].row()));
      m.vals.push_back(sum);
      ++m.colptr[static_cast<size_t>(t[k].col()) + 1];
    }
    k = j + 1;
  }
  std::partial_sum(m.colptr.begin(), m.colptr.end(), m.colptr.begin());
  return m;
}

}  // namespace

SolveOutcome solve_with_clarabel(const ConicProblem& p, const SolveOptions& opts) {
  require(!p.has_integrality(), ErrorCode::solver, "integrality not supported by this engine");
  auto t0 = std::chrono::steady_clock::now();
  const int n = p.num_vars();

  // Assemble A x + s = b with s in (zero, nonneg, declared cones), in that
  // block order. Interior-point form; minimization only.
  std::vector<Triplet> At;
  std::vector<double> b;
  std::vector<int> tags;
  std::vector<size_t> dims;
  int row = 0;

  auto push_block = [&](int tag, size_t dim) {
    tags.push_back(tag);
    dims.push_back(dim);
  };

  // zero cone: equality rows
  int eq_count = 0;
  std::vector<char> is_eq(static_cast<size_t>(p.num_rows()), 0);
  for (int r = 0; r < p.num_rows(); ++r) {
    size_t sr = static_cast<size_t>(r);
    if (p.rlb[sr] == p.rub[sr]) {
      is_eq[sr] = 1;
      ++eq_count;
    }
  }
  std::vector<int> eq_row_of(static_cast<size_t>(p.num_rows()), -1);
  if (eq_count > 0) {
    for (int r = 0; r < p.num_rows(); ++r) {
      if (!is_eq[static_cast<size_t>(r)]) continue;
      eq_row_of[static_cast<size_t>(r)] = row;
      b.push_back(p.rub[static_cast<size_t>(r)]);
      ++row;
    }
    push_block(0, static_cast<size_t>(eq_count));
  }

  // nonneg cone: inequality rows and finite variable bounds
  int ineq_start = row;
  std::vector<int> le_row_of(static_cast<size_t>(p.num_rows()), -1);
  std::vector<int> ge_row_of(static_cast<size_t>(p.num_rows()), -1);
  for (int r = 0; r < p.num_rows(); ++r) {
    size_t sr = static_cast<size_t>(r);
    if (is_eq[sr]) continue;
    if (p.rub[sr] < kInf) {
      le_row_of[sr] = row;
      b.push_back(p.rub[sr]);
      ++row;
    }
    if (p.rlb[sr] > -kInf) {
      ge_row_of[sr] = row;
      b.push_back(-p.rlb[sr]);
      ++row;
    }
  }
  for (int v = 0; v < n; ++v) {
    size_t sv = static_cast<size_t>(v);
    if (p.ub[sv] < kInf) {
      At.emplace_back(row, v, 1.0);
      b.push_back(p.ub[sv]);
      ++row;
    }
    if (p.lb[sv] > -kInf) {
      At.emplace_back(row, v, -1.0);
      b.push_back(-p.lb[sv]);
      ++row;
    }
  }
  if (row > ineq_start) push_block(1, static_cast<size_t>(row - ineq_start));

  for (const auto& t : p.A) {
    size_t sr = static_cast<size_t>(t.row());
    if (is_eq[sr]) {
      At.emplace_back(eq_row_of[sr], t.col(), t.value());
    } else {
      if (le_row_of[sr] >= 0) At.emplace_back(le_row_of[sr], t.col(), t.value());
      if (ge_row_of[sr] >= 0) At.emplace_back(ge_row_of[sr], t.col(), -t.value());
    }
  }

  // declared cone blocks: s = h - (-G) x  =>  A = -G, b = h
  for (const auto& blk : p.cones) {
    for (const auto& e : blk.rows) {
      for (const auto& [idx, coef] : e.terms) At.emplace_back(row, idx, -coef);
      b.push_back(e.constant);
      ++row;
    }
    int tag = blk.tag == ConeTag::second_order ? 2 : blk.tag == ConeTag::psd ? 3 : 4;
    push_block(tag, blk.tag == ConeTag::psd ? static_cast<size_t>(blk.dim)
                                            : static_cast<size_t>(blk.rows.size()));
  }

  const size_t m = static_cast<size_t>(row);
  Csc Acsc = to_csc(At, n);

  // objective: minimize 0.5 x'Px + q'x  (flip for maximization)
  double sgn = p.sense == Sense::minimize ? 1.0 : -1.0;
  std::vector<Triplet> Pt;
  Pt.reserve(p.Q.size());
  for (const auto& t : p.Q) {  // stored lower triangle; engine wants upper
    Pt.emplace_back(std::min(t.row(), t.col()), std::max(t.row(), t.col()), sgn * t.value());
  }
  Csc Pcsc = to_csc(Pt, n);
  std::vector<double> q(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) q[static_cast<size_t>(i)] = sgn * p.c[static_cast<size_t>(i)];

  std::vector<double> x(static_cast<size_t>(n)), z(m), s(m);
  CfSolution cs{};
  int rc = cf_solve(static_cast<size_t>(n), m, Pcsc.colptr.data(), Pcsc.rowind.data(),
                    Pcsc.vals.data(), Pcsc.vals.size(), q.data(), Acsc.colptr.data(),
                    Acsc.rowind.data(), Acsc.vals.data(), Acsc.vals.size(), b.data(),
                    tags.data(), dims.data(), tags.size(), 2000, opts.time_limit,
                    std::max(opts.tol, 1e-12), opts.verbose ? 1 : 0, x.data(), z.data(),
                    s.data(), &cs);
  if (rc != 0) fail(ErrorCode::solver, "conic engine rejected the problem (rc={})", rc);

  SolveOutcome out;
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.iterations = cs.iterations;
  auto take_primal = [&] {
    out.x = Eigen::Map<const Vec>(x.data(), n);
    out.obj = sgn * cs.obj + p.c0;
  };
  switch (cs.status) {
    case 0:
      out.status = SolveStatus::optimal;
      take_primal();
      out.detail = "solved";
      break;
    case 3:
      out.status = SolveStatus::optimal;
      take_primal();
      out.detail = "almost solved";
      break;
    case 1:
      out.status = SolveStatus::infeasible;
      out.detail = "primal infeasible";
      break;
    case 2:
      out.status = SolveStatus::unbounded;
      out.detail = "dual infeasible";
      break;
    case 4:
      out.status = SolveStatus::limit;
      out.detail = "iteration or time limit";
      break;
    default:
      out.status = SolveStatus::error;
      out.detail = fmt::format("numerical trouble (code {})", cs.status);
      break;
  }
  return out;
}

}  // namespace gridagg
