#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <fmt/format.h>

#include <limits>
#include <stdexcept>
#include <string>

namespace gridagg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using SpMat = Eigen::SparseMatrix<double>;
using SpMatR = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Stable error taxonomy; mirrored one-to-one by the C API status codes.
enum class ErrorCode {
  invalid_argument = 1,  // bad inputs, dimension mismatches, schema violations
  parse = 2,             // malformed input file
  infeasible = 3,        // a model or case admits no solution
  unverified = 4,        // algorithm finished without its certificate
  limit = 5,             // iteration/time cap hit
  solver = 6,            // backend failure or unsupported problem class
  io = 7,                // filesystem
  internal = 8,          // invariant broken; always a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

template <typename... Args>
[[noreturn]] void fail(ErrorCode code, fmt::format_string<Args...> f, Args&&... args) {
  throw Error(code, fmt::format(f, std::forward<Args>(args)...));
}

template <typename... Args>
void require(bool ok, ErrorCode code, fmt::format_string<Args...> f, Args&&... args) {
  if (!ok) fail(code, f, std::forward<Args>(args)...);
}

}  // namespace gridagg
