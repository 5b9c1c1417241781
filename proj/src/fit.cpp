#include "gcircle/fit.hpp"

#include <cmath>

#include "gcircle/error.hpp"

namespace gcircle {

Eigen::VectorXd least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& rhs) {
  if (design.rows() < design.cols())
    throw ArgumentError("least_squares: underdetermined fit (" + std::to_string(design.rows()) +
                        " points for " + std::to_string(design.cols()) + " coefficients)");
  if (design.rows() != rhs.size()) throw ArgumentError("least_squares: size mismatch");
  return design.colPivHouseholderQr().solve(rhs);
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("loglog_slope: size mismatch");
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = std::log(x[i]);
    design(i, 1) = 1.0;
    rhs(i) = std::log(std::abs(y[i]));
  }
  return least_squares(design, rhs)(0);
}

Eigen::Vector3d fit_log_quadratic(std::span<const double> t, std::span<const double> v) {
  if (t.size() != v.size()) throw ArgumentError("fit_log_quadratic: size mismatch");
  const auto n = static_cast<Eigen::Index>(t.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(v.data(), n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double L = std::log(t[i]);
    design.row(i) << L * L, L, 1.0;
  }
  return least_squares(design, rhs);
}

}  // namespace gcircle
