#include "gridagg/ptdf.h"

#include <Eigen/LU>

namespace gridagg {

Mat susceptance_matrix(const GridCase& c, std::optional<int> outage_line) {
  int n = c.num_buses();
  Mat B = Mat::Zero(n, n);
  for (int l = 0; l < static_cast<int>(c.lines.size()); ++l) {
    if (outage_line && *outage_line == l) continue;
    const Line& ln = c.lines[static_cast<size_t>(l)];
    int i = c.bus_index(ln.from), j = c.bus_index(ln.to);
    double y = 1.0 / ln.reactance;
    B(i, i) += y;
    B(j, j) += y;
    B(i, j) -= y;
    B(j, i) -= y;
  }
  return B;
}

Mat build_ptdf(const GridCase& c, std::optional<int> outage_line) {
  int n = c.num_buses();
  int m = static_cast<int>(c.lines.size());
  int ref = c.bus_index(c.ref_bus);
  if (outage_line)
    require(*outage_line >= 0 && *outage_line < m, ErrorCode::invalid_argument,
            "line index {} out of range", *outage_line);

  Mat B = susceptance_matrix(c, outage_line);
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (i != ref) keep.push_back(i);
  int k = static_cast<int>(keep.size());
  Mat Bred(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      Bred(i, j) = B(keep[static_cast<size_t>(i)], keep[static_cast<size_t>(j)]);

  Eigen::FullPivLU<Mat> lu(Bred);
  if (!lu.isInvertible()) {
    if (outage_line)
      fail(ErrorCode::invalid_argument, "outage of line {} islands the network",
           c.lines[static_cast<size_t>(*outage_line)].id);
    fail(ErrorCode::invalid_argument, "network graph is not connected");
  }
  Mat Bred_inv = lu.inverse();

  Mat ptdf = Mat::Zero(m, n);
  for (int l = 0; l < m; ++l) {
    if (outage_line && *outage_line == l) continue;
    const Line& ln = c.lines[static_cast<size_t>(l)];
    int fi = c.bus_index(ln.from), ti = c.bus_index(ln.to);
    double y = 1.0 / ln.reactance;
    // flow_l = y * (theta_from - theta_to); theta_red = Bred^{-1} * inj_red
    Vec w = Vec::Zero(k);
    for (int j = 0; j < k; ++j) {
      int bj = keep[static_cast<size_t>(j)];
      double tf = (bj == fi) ? 1.0 : 0.0;
      double tt = (bj == ti) ? 1.0 : 0.0;
      w[j] = y * (tf - tt);
    }
    Vec row = Bred_inv.transpose() * w;
    for (int j = 0; j < k; ++j) ptdf(l, keep[static_cast<size_t>(j)]) = row[j];
  }
  return ptdf;
}

}  // namespace gridagg
