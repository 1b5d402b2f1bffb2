#pragma once

#include <Eigen/Dense>
#include <complex>

namespace gridflow {

// Dense row-major storage throughout; the systems handled here stay small
// enough that sparse factorizations never pay off.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

using Index = Eigen::Index;

}  // namespace gridflow
