#include "nlevo/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nlevo/quadrature.hpp"
#include "poly_internal.hpp"

namespace nlevo {

namespace {

constexpr double kMomentCrossover = 1e-3;  // series below, recurrence above
constexpr int kMaxMomentOrder = 64;

void check_moment_args(double lambda, double tau, int p_max) {
  if (lambda < 0.0) {
    throw std::invalid_argument("exp_moments: lambda must be >= 0");
  }
  if (!(tau > 0.0)) {
    throw std::invalid_argument("exp_moments: tau must be > 0");
  }
  if (p_max < 0 || p_max > kMaxMomentOrder) {
    throw std::invalid_argument("exp_moments: p_max must be in [0, 64]");
  }
}

int resolve_quad_order(int requested, int n) {
  if (requested <= 0) return default_quad_order(n);
  if (requested < n + 2) {
    throw std::invalid_argument(
        "quad_order must be at least n + 2 (got " + std::to_string(requested) +
        " for n = " + std::to_string(n) + ")");
  }
  return requested;
}

double block_max_abs_diff(const OpBlock& a, const OpBlock& b) {
  if (a.is_diagonal()) {
    return (a.diag() - b.diag()).cwiseAbs().maxCoeff();
  }
  return (a.mat() - b.mat()).cwiseAbs().maxCoeff();
}

}  // namespace

namespace detail {

ExpMoments exp_moments_recurrence(double lambda, double tau, int p_max) {
  ExpMoments result{lambda, tau, std::vector<double>(p_max + 1, 0.0)};
  if (lambda == 0.0) {
    double tp = tau;  // tau^{p+1}
    for (int p = 0; p <= p_max; ++p) {
      tp *= (p == 0) ? 1.0 : tau;
      result.mu[p] = std::pow(tau, p + 1) / (p + 1);
    }
    return result;
  }
  const double decay = std::exp(-lambda * tau);
  result.mu[0] = -std::expm1(-lambda * tau) / lambda;
  double tau_p = 1.0;
  for (int p = 1; p <= p_max; ++p) {
    tau_p *= tau;
    result.mu[p] = (p * result.mu[p - 1] - tau_p * decay) / lambda;
  }
  return result;
}

ExpMoments exp_moments_series(double lambda, double tau, int p_max) {
  ExpMoments result{lambda, tau, std::vector<double>(p_max + 1, 0.0)};
  const double lt = lambda * tau;
  double tau_pow = tau;
  for (int p = 0; p <= p_max; ++p) {
    // tau^{p+1} sum_i (-lambda tau)^i / (i! (p+1+i))
    double term = 1.0 / (p + 1);
    double sum = term;
    double power = 1.0;
    for (int i = 1; i <= 60; ++i) {
      power *= -lt / i;
      term = power / (p + 1 + i);
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    result.mu[p] = tau_pow * sum;
    tau_pow *= tau;
  }
  return result;
}

}  // namespace detail

ExpMoments exp_moments(double lambda, double tau, int p_max) {
  check_moment_args(lambda, tau, p_max);
  if (lambda * tau < kMomentCrossover) {
    return detail::exp_moments_series(lambda, tau, p_max);
  }
  return detail::exp_moments_recurrence(lambda, tau, p_max);
}

int default_quad_order(int n) { return std::max(2 * n + 16, 32); }

std::vector<OpBlock> compute_sigma(const Mesh& mesh, const Family& family) {
  std::vector<OpBlock> sigma;
  sigma.reserve(mesh.n);
  for (int k = 1; k <= mesh.n; ++k) {
    FrozenExp frozen(family, mesh.nodes[k]);
    sigma.push_back(frozen.block(mesh.steps[k - 1]));
  }
  return sigma;
}

namespace {

std::vector<std::vector<OpBlock>> alpha_by_quadrature(const Mesh& mesh,
                                                      const Family& family,
                                                      int quad_order) {
  const int n = mesh.n;
  const bool diag = is_diagonal(family);
  const Eigen::Index dim = state_dim(family);
  const QuadRule& rule = gauss_legendre(quad_order);

  std::vector<std::vector<OpBlock>> alpha(
      n, std::vector<OpBlock>(n + 1, OpBlock::zero(diag, dim)));
  for (int k = 1; k <= n; ++k) {
    const double tk = mesh.nodes[k];
    const double half = 0.5 * mesh.steps[k - 1];
    const double center = 0.5 * (mesh.nodes[k - 1] + tk);
    FrozenExp frozen(family, tk);
    for (size_t q = 0; q < rule.nodes.size(); ++q) {
      const double s = center + half * rule.nodes[q];
      const double weight = half * rule.weights[q];
      // e^{-A_k (t_k - s)} [A_k - A(s)]
      OpBlock difference = frozen.instant();
      difference.axpy(-1.0, eval_operator(family, s));
      const OpBlock kernel = frozen.block(tk - s).compose(difference);
      const std::vector<double> basis = lagrange_basis(mesh, s);
      for (int j = 0; j <= n; ++j) {
        alpha[k - 1][j].axpy(weight * basis[j], kernel);
      }
    }
  }
  return alpha;
}

std::vector<std::vector<OpBlock>> alpha_by_moments(const Mesh& mesh,
                                                   const DiagonalFamily& family) {
  const int n = mesh.n;
  std::vector<std::vector<OpBlock>> alpha(
      n, std::vector<OpBlock>(n + 1, OpBlock::zero(true, family.modes)));

  // Degree of the integrand polynomial: basis (n) plus eigenvalue degree.
  int eigen_degree = 0;
  for (int m = 1; m <= family.modes; ++m) {
    eigen_degree = std::max(
        eigen_degree, static_cast<int>(family.eigen_poly(m).size()) - 1);
  }
  const int p_max = n + eigen_degree;

  for (int k = 1; k <= n; ++k) {
    const double tk = mesh.nodes[k];
    const double tau = mesh.steps[k - 1];

    // L_{j,n}(t_k - u) as a polynomial in u, split into the product of
    // linear factors and its scalar denominator.
    std::vector<detail::Poly> shifted(n + 1);
    std::vector<double> denom(n + 1, 1.0);
    for (int j = 0; j <= n; ++j) {
      detail::Poly numer{1.0};
      for (int i = 0; i <= n; ++i) {
        if (i == j) continue;
        numer = detail::poly_mul(numer, {tk - mesh.nodes[i], -1.0});
        denom[j] *= mesh.nodes[j] - mesh.nodes[i];
      }
      shifted[j] = std::move(numer);
    }

    for (int m = 1; m <= family.modes; ++m) {
      const detail::Poly coeffs = family.eigen_poly(m);
      const double lambda_k = detail::poly_eval(coeffs, tk);
      // lambda(t_k) - lambda(t_k - u) as a polynomial in u.
      detail::Poly gap = detail::poly_compose_affine(coeffs, tk, -1.0);
      for (double& c : gap) c = -c;
      if (gap.empty()) gap = {0.0};
      gap[0] += lambda_k;

      const ExpMoments moments = exp_moments(lambda_k, tau, p_max);
      for (int j = 0; j <= n; ++j) {
        const detail::Poly integrand = detail::poly_mul(gap, shifted[j]);
        double value = 0.0;
        for (size_t p = 0; p < integrand.size(); ++p) {
          value += integrand[p] * moments.mu[p];
        }
        alpha[k - 1][j].diag()[m - 1] = value / denom[j];
      }
    }
  }
  return alpha;
}

bool moments_path_available(const Mesh& mesh, const Family& family) {
  const auto* diag = std::get_if<DiagonalFamily>(&family);
  if (diag == nullptr || !diag->eigen_poly) return false;
  int eigen_degree = 0;
  for (int m = 1; m <= diag->modes; ++m) {
    eigen_degree = std::max(
        eigen_degree, static_cast<int>(diag->eigen_poly(m).size()) - 1);
  }
  return mesh.n + eigen_degree <= kMaxMomentOrder;
}

}  // namespace

std::vector<std::vector<OpBlock>> compute_alpha(const Mesh& mesh,
                                                const Family& family,
                                                int quad_order,
                                                AlphaPath path) {
  quad_order = resolve_quad_order(quad_order, mesh.n);
  const bool exact_possible = moments_path_available(mesh, family);

  switch (path) {
    case AlphaPath::Quadrature:
      return alpha_by_quadrature(mesh, family, quad_order);
    case AlphaPath::ExactMoments:
      if (!exact_possible) {
        throw std::invalid_argument(
            "compute_alpha: exact moment path needs a diagonal family with "
            "polynomial eigenvalues of total degree <= 64");
      }
      return alpha_by_moments(mesh, std::get<DiagonalFamily>(family));
    case AlphaPath::Both: {
      if (!exact_possible) {
        throw std::invalid_argument(
            "compute_alpha: diagnostic mode needs the exact moment path");
      }
      auto exact = alpha_by_moments(mesh, std::get<DiagonalFamily>(family));
      auto quad = alpha_by_quadrature(mesh, family, quad_order);
      double worst = 0.0;
      for (int k = 0; k < mesh.n; ++k) {
        for (int j = 0; j <= mesh.n; ++j) {
          worst = std::max(worst,
                           block_max_abs_diff(exact[k][j], quad[k][j]));
        }
      }
      if (worst > 1e-9) {
        throw QuadratureMismatchError(
            "compute_alpha: quadrature and exact moment paths disagree by " +
            std::to_string(worst));
      }
      return exact;
    }
    case AlphaPath::Auto:
    default:
      return exact_possible
                 ? alpha_by_moments(mesh, std::get<DiagonalFamily>(family))
                 : alpha_by_quadrature(mesh, family, quad_order);
  }
}

namespace {

std::vector<Vec> phi_at_order(const Mesh& mesh, const Family& family,
                              const std::function<Vec(double)>& forcing,
                              int order) {
  const QuadRule& rule = gauss_legendre(order);
  std::vector<Vec> phi;
  phi.reserve(mesh.n);
  for (int k = 1; k <= mesh.n; ++k) {
    const double tk = mesh.nodes[k];
    const double half = 0.5 * mesh.steps[k - 1];
    const double center = 0.5 * (mesh.nodes[k - 1] + tk);
    FrozenExp frozen(family, tk);
    Vec acc = Vec::Zero(state_dim(family));
    for (size_t q = 0; q < rule.nodes.size(); ++q) {
      const double s = center + half * rule.nodes[q];
      const Vec f = forcing(s);
      if (!f.allFinite()) {
        throw EvaluationError("forcing produced non-finite values at t = " +
                              std::to_string(s));
      }
      acc += (half * rule.weights[q]) * frozen.apply(tk - s, f);
    }
    phi.push_back(std::move(acc));
  }
  return phi;
}

}  // namespace

std::vector<Vec> compute_phi(const Mesh& mesh, const Family& family,
                             const std::function<Vec(double)>& forcing,
                             int quad_order,
                             std::vector<std::string>* warnings) {
  quad_order = resolve_quad_order(quad_order, mesh.n);
  if (!forcing) {
    return std::vector<Vec>(mesh.n, Vec::Zero(state_dim(family)));
  }
  const std::vector<Vec> coarse = phi_at_order(mesh, family, forcing,
                                               quad_order);
  const std::vector<Vec> fine = phi_at_order(mesh, family, forcing,
                                             2 * quad_order);
  double scale = 0.0;
  double diff = 0.0;
  for (int k = 0; k < mesh.n; ++k) {
    scale = std::max(scale, fine[k].norm());
    diff = std::max(diff, (fine[k] - coarse[k]).norm());
  }
  if (scale > 0.0 && diff > 1e-11 * scale && warnings != nullptr) {
    warnings->push_back(
        "phi quadrature self-check: orders " + std::to_string(quad_order) +
        " and " + std::to_string(2 * quad_order) + " disagree by relative " +
        std::to_string(diff / scale));
  }
  return fine;
}

CoefficientSet compute_coefficients(const Mesh& mesh, const Family& family,
                                    const std::function<Vec(double)>& forcing,
                                    int quad_order, AlphaPath path) {
  CoefficientSet set;
  set.sigma = compute_sigma(mesh, family);
  set.alpha = compute_alpha(mesh, family, quad_order, path);
  set.phi = compute_phi(mesh, family, forcing, quad_order, &set.warnings);
  return set;
}

}  // namespace nlevo
