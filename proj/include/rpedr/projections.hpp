#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpedr/rng.hpp"

namespace rpedr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class ProjectionKind { Gaussian, Cauchy };

// Distribution over p x d matrices with unit-norm columns. The mixture draws
// one Bernoulli(gaussian_weight) per matrix (the mixture sits outside the
// d-fold column product), so a single matrix never mixes kinds.
struct ProjectionDistribution {
  enum class Family { Gaussian, Cauchy, Mixture };

  Family family = Family::Mixture;
  double gaussian_weight = 0.5;  // used by Mixture only
  int p = 0;
  int d = 0;

  static ProjectionDistribution gaussian(int p, int d) { return {Family::Gaussian, 1.0, p, d}; }
  static ProjectionDistribution cauchy(int p, int d) { return {Family::Cauchy, 0.0, p, d}; }
  static ProjectionDistribution mixture(int p, int d, double w = 0.5) {
    return {Family::Mixture, w, p, d};
  }

  void validate() const {
    if (p < 1) throw std::invalid_argument("projection distribution: p must be >= 1");
    if (d < 1 || d > p)
      throw std::invalid_argument("projection distribution: need 1 <= d <= p, got d=" +
                                  std::to_string(d) + ", p=" + std::to_string(p));
    if (family == Family::Mixture && (gaussian_weight < 0.0 || gaussian_weight > 1.0))
      throw std::invalid_argument("mixture weight must lie in [0, 1]");
  }

  bool operator==(const ProjectionDistribution&) const = default;
};

inline std::string to_string(ProjectionDistribution::Family f) {
  switch (f) {
    case ProjectionDistribution::Family::Gaussian: return "gaussian";
    case ProjectionDistribution::Family::Cauchy: return "cauchy";
    default: return "mixture";
  }
}

// p x d matrix with unit-norm columns, tagged with the mixture component that
// produced it.
struct ProjectionMatrix {
  Matrix entries;
  ProjectionKind source_kind = ProjectionKind::Gaussian;
};

// One unit-norm column: Z/||Z|| with iid standard normal or Cauchy entries.
// An all-zero draw (probability zero) is regenerated.
inline Vector sample_column(ProjectionKind kind, int p, rng::Stream& stream) {
  if (p < 1) throw std::invalid_argument("sample_column: p must be >= 1");
  Vector z(p);
  for (;;) {
    if (kind == ProjectionKind::Gaussian) {
      std::normal_distribution<double> normal(0.0, 1.0);
      for (int i = 0; i < p; ++i) z(i) = normal(stream);
    } else {
      for (int i = 0; i < p; ++i) z(i) = rng::std_cauchy(stream);
    }
    double norm = z.norm();
    if (norm > 0.0 && std::isfinite(norm)) return z / norm;
  }
}

inline ProjectionMatrix sample_projection(const ProjectionDistribution& dist, rng::Stream& stream) {
  dist.validate();
  ProjectionKind kind;
  switch (dist.family) {
    case ProjectionDistribution::Family::Gaussian: kind = ProjectionKind::Gaussian; break;
    case ProjectionDistribution::Family::Cauchy: kind = ProjectionKind::Cauchy; break;
    default:
      kind = rng::uniform01(stream) < dist.gaussian_weight ? ProjectionKind::Gaussian
                                                           : ProjectionKind::Cauchy;
  }
  ProjectionMatrix proj;
  proj.source_kind = kind;
  proj.entries.resize(dist.p, dist.d);
  for (int j = 0; j < dist.d; ++j) proj.entries.col(j) = sample_column(kind, dist.p, stream);
  return proj;
}

// Output of the ensemble aggregation: orthonormal p x p direction matrix U and
// the nonincreasing eigenvalue vector D of the averaged outer product; the sum
// of D equals the projection dimension d (trace identity).
struct EnsembleOutput {
  Matrix directions;  // p x p, columns ordered by decreasing weight
  Vector weights;     // length p, nonincreasing, nonnegative
  int d = 0;
};

namespace detail {

// Fixes each eigenvector's sign so its largest-magnitude entry is positive
// (smallest index wins ties); makes outputs reproducible while leaving every
// downstream metric unchanged.
inline void canonicalize_signs(Matrix& vectors) {
  for (int j = 0; j < vectors.cols(); ++j) {
    int arg = 0;
    double best = -1.0;
    for (int i = 0; i < vectors.rows(); ++i) {
      double a = std::abs(vectors(i, j));
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    if (vectors(arg, j) < 0.0) vectors.col(j) = -vectors.col(j);
  }
}

inline void clamp_eigenvalues(Vector& values) {
  for (int i = 0; i < values.size(); ++i) {
    if (values(i) < 0.0) {
      if (values(i) < -1e-10)
        throw std::runtime_error("internal consistency error: eigenvalue " +
                                 std::to_string(values(i)) + " of a PSD aggregate");
      values(i) = 0.0;
    }
  }
}

// Eigendecomposition of a symmetric PSD matrix with eigenvalues sorted in
// decreasing order; coincides with the SVD for such matrices.
inline std::pair<Vector, Matrix> eigen_sym_descending(const Matrix& sym) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  const int p = static_cast<int>(sym.rows());
  Vector values(p);
  Matrix vectors(p, p);
  for (int j = 0; j < p; ++j) {  // solver returns ascending order
    values(j) = solver.eigenvalues()(p - 1 - j);
    vectors.col(j) = solver.eigenvectors().col(p - 1 - j);
  }
  clamp_eigenvalues(values);
  canonicalize_signs(vectors);
  return {std::move(values), std::move(vectors)};
}

inline Vector eigenvalues_descending(const Matrix& sym) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  const int p = static_cast<int>(sym.rows());
  Vector values(p);
  for (int j = 0; j < p; ++j) values(j) = solver.eigenvalues()(p - 1 - j);
  clamp_eigenvalues(values);
  return values;
}

}  // namespace detail

// Forms the average outer product (1/L) sum P P^T of the selected projections
// and returns its eigendecomposition.
inline EnsembleOutput aggregate_and_decompose(const std::vector<ProjectionMatrix>& selected) {
  if (selected.empty()) throw std::invalid_argument("aggregate_and_decompose: empty input");
  const int p = static_cast<int>(selected.front().entries.rows());
  const int d = static_cast<int>(selected.front().entries.cols());
  Matrix pi = Matrix::Zero(p, p);
  for (const auto& proj : selected) {
    if (proj.entries.rows() != p || proj.entries.cols() != d)
      throw std::invalid_argument("aggregate_and_decompose: dimension mismatch across projections");
    pi.selfadjointView<Eigen::Lower>().rankUpdate(proj.entries, 1.0);
  }
  pi /= static_cast<double>(selected.size());
  pi = pi.selfadjointView<Eigen::Lower>();

  auto [values, vectors] = detail::eigen_sym_descending(pi);
  EnsembleOutput out;
  out.directions = std::move(vectors);
  out.weights = std::move(values);
  out.d = d;
  return out;
}

}  // namespace rpedr
