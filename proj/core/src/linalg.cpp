#include "gridflow/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

namespace gridflow {

namespace {

double inf_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

}  // namespace

Matrix lu_solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatchError("lu_solve: A must be square");
  }
  if (a.rows() != b.rows()) {
    throw DimensionMismatchError("lu_solve: A and B row counts differ");
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const Eigen::VectorXd pivots = lu.matrixLU().diagonal();
  const double floor = 1e-13 * inf_norm(a);
  for (Index i = 0; i < pivots.size(); ++i) {
    if (std::abs(pivots[i]) <= floor) {
      throw SingularMatrixError(static_cast<int>(i), std::abs(pivots[i]));
    }
  }
  return lu.solve(b);
}

Vector lu_solve(const Matrix& a, const Vector& b) {
  Matrix rhs = b;
  return lu_solve(a, rhs).col(0);
}

Matrix lu_inverse(const Matrix& a) {
  return lu_solve(a, Matrix(Matrix::Identity(a.rows(), a.rows())));
}

Matrix pinv(const Matrix& a) {
  if (!a.allFinite()) {
    throw NonFiniteError("pinv: input has non-finite entries");
  }
  if (a.size() == 0) return Matrix(a.cols(), a.rows());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double cutoff = 1e-10 * (sigma.size() > 0 ? sigma[0] : 0.0);
  Eigen::VectorXd inv_sigma(sigma.size());
  for (Index i = 0; i < sigma.size(); ++i) {
    inv_sigma[i] = sigma[i] > cutoff ? 1.0 / sigma[i] : 0.0;
  }
  return svd.matrixV() * inv_sigma.asDiagonal() * svd.matrixU().transpose();
}

Matrix cholesky(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionMismatchError("cholesky: matrix must be square");
  }
  const Index n = a.rows();
  Matrix l = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) {
    double diag = a(j, j) - l.row(j).head(j).squaredNorm();
    if (!(diag > 0.0) || !std::isfinite(diag)) {
      throw NotPositiveDefiniteError(static_cast<int>(j));
    }
    l(j, j) = std::sqrt(diag);
    for (Index i = j + 1; i < n; ++i) {
      double s = a(i, j) - l.row(i).head(j).dot(l.row(j).head(j));
      l(i, j) = s / l(j, j);
    }
  }
  return l;
}

}  // namespace gridflow
