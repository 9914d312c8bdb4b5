#pragma once

#include <complex>

#include <Eigen/Dense>

namespace dspmem {

using complexd = std::complex<double>;
using Matrix6cd = Eigen::Matrix<complexd, 6, 6>;
using Vector6cd = Eigen::Matrix<complexd, 6, 1>;
using SuperOp = Eigen::Matrix<complexd, 36, 36>;
using Vector36cd = Eigen::Matrix<complexd, 36, 1>;

}  // namespace dspmem
