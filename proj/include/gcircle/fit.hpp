// fit.hpp
//
// Least-squares helpers used by the regression reports.

#pragma once

#include <span>

#include <Eigen/Dense>

namespace gcircle {

// Coefficients c minimising |design * c - rhs|_2. Throws ArgumentError when
// the system has fewer rows than columns.
Eigen::VectorXd least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& rhs);

// Slope of the least-squares line through (log x_i, log |y_i|).
double loglog_slope(std::span<const double> x, std::span<const double> y);

// Fit v ~ a log^2 t + b log t + c; returns (a, b, c).
Eigen::Vector3d fit_log_quadratic(std::span<const double> t, std::span<const double> v);

}  // namespace gcircle
