#pragma once

#include <complex>

#include <Eigen/Dense>

namespace sfd {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using DenseComplexMatrix = Eigen::MatrixXcd;

inline constexpr cplx I{0.0, 1.0};

}  // namespace sfd
