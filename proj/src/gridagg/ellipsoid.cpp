#include "gridagg/ellipsoid.h"

#include <Eigen/Cholesky>

namespace gridagg {

Ellipsoid::Ellipsoid(Mat E_, Vec e_) : E(std::move(E_)), e(std::move(e_)) {
  require(E.rows() == E.cols() && E.rows() == e.size(), ErrorCode::invalid_argument,
          "ellipsoid shape {}x{} vs center {}", E.rows(), E.cols(), e.size());
  require((E - E.transpose()).cwiseAbs().maxCoeff() <= 1e-9 * (1.0 + E.cwiseAbs().maxCoeff()),
          ErrorCode::invalid_argument, "ellipsoid shape matrix must be symmetric");
  Eigen::LLT<Mat> llt(0.5 * (E + E.transpose()));
  require(llt.info() == Eigen::Success, ErrorCode::invalid_argument,
          "ellipsoid shape matrix must be positive definite");
  E_inv = llt.solve(Mat::Identity(E.rows(), E.cols()));
}

double Ellipsoid::log_det() const {
  Eigen::LLT<Mat> llt(0.5 * (E + E.transpose()));
  double ld = 0.0;
  const auto& L = llt.matrixLLT();
  for (int i = 0; i < E.rows(); ++i) ld += 2.0 * std::log(L(i, i));
  return ld;
}

Json Ellipsoid::to_json() const {
  Json j;
  j["E"] = mat_to_json(E);
  j["e"] = vec_to_json(e);
  return j;
}

Ellipsoid Ellipsoid::from_json(const Json& j, const std::string& path) {
  return Ellipsoid(mat_from_json(member(j, "E", path), path + ".E"),
                   vec_from_json(member(j, "e", path), path + ".e"));
}

bool ellipsoid_contains(const Ellipsoid& Q, const Vec& x, double tol) {
  return ellipsoid_radius_at(Q, x) <= 1.0 + tol;
}

double ellipsoid_radius_at(const Ellipsoid& Q, const Vec& x) {
  require(x.size() == Q.e.size(), ErrorCode::invalid_argument, "point dim {} vs ellipsoid dim {}",
          x.size(), Q.e.size());
  return (Q.E_inv * (x - Q.e)).norm();
}

}  // namespace gridagg
