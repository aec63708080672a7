#pragma once

#include <Eigen/Core>

namespace nlevo {

/// Dense matrix exponential e^A by scaling-and-squaring with a degree-13 Pade
/// approximant; the number of squarings is chosen from the 1-norm of A.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& a);

}  // namespace nlevo
