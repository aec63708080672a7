#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nlevo/block.hpp"
#include "nlevo/mesh.hpp"
#include "nlevo/operator_family.hpp"

namespace nlevo {

/// Truncated exponential moments mu[p] = \int_0^tau u^p e^{-lambda u} du.
struct ExpMoments {
  double lambda = 0.0;
  double tau = 0.0;
  std::vector<double> mu;
};

/// Computes mu[0..p_max]. For lambda*tau >= 1e-3 the upward recurrence
/// mu[p] = (p mu[p-1] - tau^p e^{-lambda tau}) / lambda is used; below the
/// crossover a truncated series avoids the cancellation. Requires
/// lambda >= 0, tau > 0, p_max <= 64.
ExpMoments exp_moments(double lambda, double tau, int p_max);

namespace detail {
// Both algorithm routes, exposed for cross-validation.
ExpMoments exp_moments_recurrence(double lambda, double tau, int p_max);
ExpMoments exp_moments_series(double lambda, double tau, int p_max);
}  // namespace detail

/// How the alpha coefficients are evaluated.
enum class AlphaPath {
  Auto,          // ExactMoments when the family has polynomial eigenvalues
  Quadrature,    // Gauss-Legendre on each subinterval
  ExactMoments,  // polynomial-times-exponential expansion via exp_moments
  Both,          // diagnostic: run both and fail on disagreement
};

/// The discrete-system data: sigma[k-1] = e^{-A_k tau_k},
/// alpha[k-1][j] = \int_{t_{k-1}}^{t_k} e^{-A_k (t_k - s)} [A_k - A(s)]
/// L_{j,n}(s) ds and phi[k-1] = \int_{t_{k-1}}^{t_k} e^{-A_k (t_k - s)} f(s)
/// ds for k = 1..n, j = 0..n.
struct CoefficientSet {
  std::vector<OpBlock> sigma;
  std::vector<std::vector<OpBlock>> alpha;
  std::vector<Vec> phi;
  std::vector<std::string> warnings;
};

/// Gauss-Legendre points per subinterval used when the caller passes 0.
int default_quad_order(int n);

std::vector<OpBlock> compute_sigma(const Mesh& mesh, const Family& family);

std::vector<std::vector<OpBlock>> compute_alpha(
    const Mesh& mesh, const Family& family, int quad_order,
    AlphaPath path = AlphaPath::Auto);

/// phi_k integrals. The integral is evaluated at quad_order and re-evaluated
/// at doubled order; the refined values are returned and a warning is
/// appended when the two disagree beyond relative 1e-11.
std::vector<Vec> compute_phi(const Mesh& mesh, const Family& family,
                             const std::function<Vec(double)>& forcing,
                             int quad_order,
                             std::vector<std::string>* warnings = nullptr);

CoefficientSet compute_coefficients(const Mesh& mesh, const Family& family,
                                    const std::function<Vec(double)>& forcing,
                                    int quad_order = 0,
                                    AlphaPath path = AlphaPath::Auto);

}  // namespace nlevo
