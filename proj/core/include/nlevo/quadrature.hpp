#pragma once

#include <vector>

namespace nlevo {

/// A quadrature rule on the reference interval [-1,1].
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with `points` nodes (exact for polynomials of degree
/// 2*points-1). Rules are computed once and cached; the returned reference
/// stays valid for the lifetime of the process.
const QuadRule& gauss_legendre(int points);

}  // namespace nlevo
