#include "gridagg/fourier_motzkin.h"

#include <algorithm>
#include <set>

#include "gridagg/region.h"
#include "gridagg/solve.h"

namespace gridagg {

namespace {

struct Row {
  Vec a;
  double b = 0.0;
};

HPolytope empty_marker(int dim) {
  Mat A = Mat::Zero(1, dim);
  Vec b(1);
  b(0) = -1.0;
  return HPolytope(A, b);
}

// Unit normal; zero rows keep their rhs for the trivial/infeasible split.
void normalize(Row& r, double tol) {
  const double n = r.a.norm();
  if (n <= tol) {
    r.a.setZero();
    return;
  }
  r.a /= n;
  r.b /= n;
}

bool lex_less(const Row& x, const Row& y, double tol) {
  for (int j = 0; j < x.a.size(); ++j) {
    if (std::abs(x.a(j) - y.a(j)) > tol) return x.a(j) < y.a(j);
  }
  if (std::abs(x.b - y.b) > tol) return x.b < y.b;
  return false;
}

bool same_normal(const Row& x, const Row& y, double tol) {
  return (x.a - y.a).lpNorm<Eigen::Infinity>() <= tol;
}

// Sorts, merges rows sharing a normal (tightest rhs wins), drops trivially
// true rows. Returns false when a zero row with negative rhs proves
// emptiness.
bool canonicalize(std::vector<Row>& rows, double tol) {
  std::vector<Row> out;
  for (Row& r : rows) {
    normalize(r, tol);
    if (r.a.isZero(0.0)) {
      if (r.b < -tol) return false;
      continue;
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [&](const Row& x, const Row& y) { return lex_less(x, y, tol); });
  std::vector<Row> merged;
  for (Row& r : out) {
    if (!merged.empty() && same_normal(merged.back(), r, 10 * tol))
      merged.back().b = std::min(merged.back().b, r.b);
    else
      merged.push_back(std::move(r));
  }
  rows = std::move(merged);
  return true;
}

// Drops every row implied by the others (one LP per row). Unbounded support
// problems mean the row is essential.
void lp_prune(std::vector<Row>& rows, double tol) {
  for (size_t i = 0; i < rows.size();) {
    if (rows.size() == 1) break;
    ConicProblem p;
    const int n = static_cast<int>(rows[i].a.size());
    p.add_vars(n, -kInf, kInf);
    p.sense = Sense::maximize;
    for (int j = 0; j < n; ++j) p.set_obj(j, rows[i].a(j));
    for (size_t k = 0; k < rows.size(); ++k) {
      if (k == i) continue;
      LinExpr e;
      for (int j = 0; j < n; ++j) e.add(j, rows[k].a(j));
      p.add_row_le(rows[k].b, e);
    }
    SolveOutcome out = solve(p);
    const bool redundant =
        out.status == SolveStatus::optimal && out.obj <= rows[i].b + tol * (1.0 + std::abs(rows[i].b));
    if (redundant)
      rows.erase(rows.begin() + static_cast<long>(i));
    else
      ++i;
  }
}

}  // namespace

HPolytope fm_project(const Mat& A, const Vec& b, const std::vector<int>& keep,
                     const FmOptions& opts) {
  const int n = static_cast<int>(A.cols());
  require(A.rows() == b.size(), ErrorCode::invalid_argument, "fm_project: A/b shape mismatch");
  require(n <= opts.max_vars, ErrorCode::invalid_argument,
          "fm_project: {} variables exceeds the elimination guard of {}", n, opts.max_vars);
  require(static_cast<int>(keep.size()) <= opts.max_keep, ErrorCode::invalid_argument,
          "fm_project: keeping {} coordinates exceeds the guard of {}", keep.size(), opts.max_keep);
  std::set<int> keep_set(keep.begin(), keep.end());
  require(keep_set.size() == keep.size(), ErrorCode::invalid_argument,
          "fm_project: duplicate keep coordinates");
  for (int k : keep)
    require(k >= 0 && k < n, ErrorCode::invalid_argument, "fm_project: coordinate {} out of range",
            k);

  const int nk = static_cast<int>(keep.size());
  std::vector<Row> rows;
  rows.reserve(static_cast<size_t>(A.rows()));
  for (int r = 0; r < A.rows(); ++r) rows.push_back({A.row(r).transpose(), b(r)});

  std::vector<int> to_drop;
  for (int j = 0; j < n; ++j)
    if (!keep_set.count(j)) to_drop.push_back(j);

  auto split_count = [&](int j) {
    long pos = 0, neg = 0;
    for (const Row& r : rows) {
      if (r.a(j) > opts.tol) ++pos;
      else if (r.a(j) < -opts.tol) ++neg;
    }
    return std::pair<long, long>(pos, neg);
  };

  while (!to_drop.empty()) {
    // Greedy minimum-growth pivot order keeps intermediate systems small.
    size_t best = 0;
    long best_cost = -1;
    for (size_t k = 0; k < to_drop.size(); ++k) {
      auto [pos, neg] = split_count(to_drop[k]);
      const long cost = pos * neg - (pos + neg);
      if (best_cost == -1 || cost < best_cost) {
        best_cost = cost;
        best = k;
      }
    }
    const int j = to_drop[best];
    to_drop.erase(to_drop.begin() + static_cast<long>(best));

    std::vector<Row> zero, pos, neg;
    for (Row& r : rows) {
      if (r.a(j) > opts.tol) {
        r.b /= r.a(j);
        r.a /= r.a(j);
        pos.push_back(std::move(r));
      } else if (r.a(j) < -opts.tol) {
        r.b /= -r.a(j);
        r.a /= -r.a(j);
        neg.push_back(std::move(r));
      } else {
        r.a(j) = 0.0;
        zero.push_back(std::move(r));
      }
    }
    rows = std::move(zero);
    for (const Row& rp : pos)
      for (const Row& rn : neg) {
        Row comb{rp.a + rn.a, rp.b + rn.b};
        comb.a(j) = 0.0;
        rows.push_back(std::move(comb));
      }

    if (!canonicalize(rows, opts.tol)) return empty_marker(nk);
    if (static_cast<int>(rows.size()) > opts.prune_threshold) lp_prune(rows, 1e-7);
  }

  // Compress to the kept coordinates in caller order.
  std::vector<Row> low;
  for (const Row& r : rows) {
    Row c{Vec(nk), r.b};
    for (int k = 0; k < nk; ++k) c.a(k) = r.a(keep[k]);
    low.push_back(std::move(c));
  }
  if (!canonicalize(low, opts.tol)) return empty_marker(nk);
  lp_prune(low, 1e-7);
  if (!canonicalize(low, opts.tol)) return empty_marker(nk);

  Mat Ap = Mat::Zero(static_cast<long>(low.size()), nk);
  Vec bp(static_cast<long>(low.size()));
  for (size_t r = 0; r < low.size(); ++r) {
    Ap.row(static_cast<long>(r)) = low[r].a.transpose();
    bp(static_cast<long>(r)) = low[r].b;
  }
  return HPolytope(std::move(Ap), std::move(bp));
}

HPolytope exact_project(const FeasibleRegionHD& region, const std::vector<int>& dims,
                        const FmOptions& opts) {
  const int nk = static_cast<int>(dims.size());
  for (int r : dims)
    require(r >= 0 && r < region.n_bd, ErrorCode::invalid_argument,
            "exact_project: boundary coordinate {} out of range", r);
  const int total = nk + region.n_int;
  require(total <= opts.max_vars, ErrorCode::invalid_argument,
          "exact_project: {} variables ({} kept + {} internal) exceeds the elimination guard "
          "of {}; this oracle is for desk-scale systems",
          total, nk, region.n_int, opts.max_vars);

  // Variables [y; x_int] with y_r = C_r x_int + d_r as row pairs.
  const Mat Fd = region.dense_F();
  const long m = Fd.rows();
  Mat A = Mat::Zero(m + 2 * nk, total);
  Vec b(m + 2 * nk);
  A.block(0, nk, m, region.n_int) = Fd;
  b.head(m) = region.f;
  for (int k = 0; k < nk; ++k) {
    const int r = dims[k];
    A(m + 2 * k, k) = 1.0;
    A.row(m + 2 * k).segment(nk, region.n_int) = -region.C.row(r);
    b(m + 2 * k) = region.d(r);
    A.row(m + 2 * k + 1) = -A.row(m + 2 * k);
    b(m + 2 * k + 1) = -region.d(r);
  }
  std::vector<int> keep(dims.size());
  for (int k = 0; k < nk; ++k) keep[k] = k;
  return fm_project(A, b, keep, opts);
}

}  // namespace gridagg
