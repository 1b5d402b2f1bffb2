#pragma once

#include "gridflow/errors.hpp"
#include "gridflow/matrix.hpp"

namespace gridflow {

/// Solves A X = B by LU factorization with partial pivoting.
/// Throws SingularMatrixError when a pivot falls below 1e-13 * ||A||_inf.
Matrix lu_solve(const Matrix& a, const Matrix& b);
Vector lu_solve(const Matrix& a, const Vector& b);

/// Matrix inverse through lu_solve against the identity.
Matrix lu_inverse(const Matrix& a);

/// Moore-Penrose pseudo-inverse via SVD. Singular values below
/// 1e-10 * sigma_max are truncated to zero. Throws NonFiniteError on
/// non-finite input.
Matrix pinv(const Matrix& a);

/// Lower-triangular L with L L^T = A for symmetric positive definite A.
/// Throws NotPositiveDefiniteError with the failing row index.
Matrix cholesky(const Matrix& a);

}  // namespace gridflow
