#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rpedr {

using Matrix = Eigen::MatrixXd;

// Distances between the subspace spanned by an estimate and a reference.
// sin_theta is defined only when the column counts match; the false
// positive/negative norms allow them to differ.
struct SubspaceReport {
  double sin_theta = std::numeric_limits<double>::quiet_NaN();
  double d_fp = 0.0;
  double d_fn = 0.0;
};

namespace detail {

inline void require_orthonormal(const Matrix& a, const char* label, double tol = 1e-6) {
  if (a.cols() == 0) return;  // empty estimate: projector is 0 by convention
  Matrix gram = a.transpose() * a;
  double err = (gram - Matrix::Identity(a.cols(), a.cols())).cwiseAbs().maxCoeff();
  if (err > tol)
    throw std::invalid_argument(std::string(label) +
                                " does not have orthonormal columns (deviation " +
                                std::to_string(err) + ")");
}

}  // namespace detail

// sqrt( (1/2) || A_hat A_hat^T - A0 A0^T ||_F^2 ). Invariant to orthogonal
// changes of basis on either side; rejects unequal column counts rather than
// padding.
inline double sin_theta(const Matrix& a_hat, const Matrix& a0) {
  if (a_hat.rows() != a0.rows()) throw std::invalid_argument("sin_theta: ambient dimensions differ");
  if (a_hat.cols() != a0.cols())
    throw std::invalid_argument("sin_theta: column counts differ (" +
                                std::to_string(a_hat.cols()) + " vs " +
                                std::to_string(a0.cols()) + ")");
  detail::require_orthonormal(a_hat, "sin_theta: first argument");
  detail::require_orthonormal(a0, "sin_theta: second argument");
  Matrix diff = a_hat * a_hat.transpose() - a0 * a0.transpose();
  return std::sqrt(0.5 * diff.squaredNorm());
}

// ||(I - A0 A0^T) A_hat||_F: mass of the estimate outside the reference
// subspace. Zero iff span(A_hat) is contained in span(A0).
inline double d_fp(const Matrix& a_hat, const Matrix& a0) {
  if (a_hat.cols() == 0) return 0.0;
  if (a_hat.rows() != a0.rows()) throw std::invalid_argument("d_fp: ambient dimensions differ");
  detail::require_orthonormal(a_hat, "d_fp: first argument");
  detail::require_orthonormal(a0, "d_fp: second argument");
  Matrix residual = a_hat - a0 * (a0.transpose() * a_hat);
  return residual.norm();
}

// ||(I - A_hat A_hat^T) A0||_F: mass of the reference missed by the estimate.
// An empty estimate uses the zero-projector convention, giving sqrt(k).
inline double d_fn(const Matrix& a_hat, const Matrix& a0) {
  if (a0.cols() == 0) return 0.0;
  if (a_hat.cols() == 0) {
    detail::require_orthonormal(a0, "d_fn: second argument");
    return a0.norm();
  }
  return d_fp(a0, a_hat);
}

inline SubspaceReport subspace_report(const Matrix& a_hat, const Matrix& a0) {
  SubspaceReport report;
  report.d_fp = d_fp(a_hat, a0);
  report.d_fn = d_fn(a_hat, a0);
  if (a_hat.cols() == a0.cols() && a_hat.cols() > 0) report.sin_theta = sin_theta(a_hat, a0);
  return report;
}

}  // namespace rpedr
