#pragma once

#include <vector>

#include <Eigen/Core>

#include "nlevo/errors.hpp"

namespace nlevo {

using Vec = Eigen::VectorXd;

/// Chebyshev-Gauss-Lobatto mesh on [-1,1].
///
/// nodes[k] = cos((n-k)*pi/n) in ascending order, so nodes.front() == -1 and
/// nodes.back() == +1, with exact symmetry nodes[k] == -nodes[n-k].
/// steps[k-1] = nodes[k] - nodes[k-1].
struct Mesh {
  int n = 0;
  std::vector<double> nodes;
  std::vector<double> steps;
};

/// Builds the CGL mesh of degree n. Throws InvalidDegreeError for n < 2.
Mesh cgl_mesh(int n);

/// Barycentric weights for the CGL node set: w_j = (-1)^j c_j with
/// c_0 = c_n = 1/2 and c_j = 1 otherwise.
std::vector<double> barycentric_weights(int n);

/// Values of the n+1 Lagrange fundamental polynomials L_{j,n}(t), t in [-1,1].
/// Evaluated in barycentric form; within 1e-14 of a node the exact unit
/// coordinate vector is returned.
std::vector<double> lagrange_basis(const Mesh& mesh, double t);

/// Interpolation polynomial P_n(t) = sum_j values[j] * L_{j,n}(t).
/// Throws std::invalid_argument on a dimension mismatch among values.
Vec interpolate(const Mesh& mesh, const std::vector<Vec>& values, double t);

/// Lower bound on the Lebesgue constant of the node set: the maximum of
/// sum_j |L_{j,n}(t)| over a uniform grid of grid+1 points. A diagnostic grid
/// maximum, not a certified bound; it converges to Lambda_n from below as the
/// grid is refined. Requires grid >= 1000.
double lebesgue_constant(const Mesh& mesh, int grid);

}  // namespace nlevo
