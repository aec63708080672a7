#include "nlevo/operator_family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "nlevo/expm.hpp"

namespace nlevo {

namespace {

double eval_poly(const std::vector<double>& coeffs, double t) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

double min_eigenvalue(const DenseFamily& family, double t) {
  const Mat a = family.matrix(t);
  if (!a.allFinite()) {
    throw EvaluationError("dense family produced non-finite entries at t = " +
                          std::to_string(t));
  }
  if (family.symmetric) {
    Eigen::SelfAdjointEigenSolver<Mat> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }
  Eigen::EigenSolver<Mat> es(a, false);
  return es.eigenvalues().real().minCoeff();
}

double compute_omega(const Family& family, int t_samples) {
  if (t_samples < 16) {
    throw std::invalid_argument("omega_lower_bound: need t_samples >= 16");
  }
  double omega = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= t_samples; ++i) {
    const double t = -1.0 + 2.0 * i / t_samples;
    if (const auto* diag = std::get_if<DiagonalFamily>(&family)) {
      for (int m = 1; m <= diag->modes; ++m) {
        omega = std::min(omega, diag->eigenvalue(m, t));
      }
    } else {
      omega = std::min(omega, min_eigenvalue(std::get<DenseFamily>(family), t));
    }
  }
  if (!(omega > 0.0)) {
    throw PositivityError(
        "operator family is not strongly positive: sampled spectral lower "
        "bound " +
        std::to_string(omega));
  }
  return omega;
}

}  // namespace

Eigen::Index state_dim(const Family& family) {
  if (const auto* diag = std::get_if<DiagonalFamily>(&family)) {
    return diag->modes;
  }
  return std::get<DenseFamily>(family).dim;
}

bool is_diagonal(const Family& family) {
  return std::holds_alternative<DiagonalFamily>(family);
}

DiagonalFamily make_polynomial_family(
    int modes, std::function<std::vector<double>(int m)> coefficients) {
  DiagonalFamily family;
  family.modes = modes;
  family.eigen_poly = coefficients;
  family.eigenvalue = [coefficients = std::move(coefficients)](int m,
                                                               double t) {
    return eval_poly(coefficients(m), t);
  };
  return family;
}

NonlocalProblem builtin_heat_problem() {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  NonlocalProblem problem;
  problem.family = make_polynomial_family(
      1, [pi2](int m) {
        return std::vector<double>{static_cast<double>(m) * m * pi2 + 1.0, 1.0};
      });
  problem.forcing = [pi2](double t) {
    Vec f(1);
    f(0) = std::exp(-pi2 * (1.0 + t)) * (1.0 + t);
    return f;
  };
  problem.alpha = 0.5;
  problem.phi = Vec::Constant(1, 1.0 + 0.5 * std::exp(-2.0 * pi2));
  problem.exact = [pi2](double t) {
    Vec v(1);
    v(0) = std::exp(-pi2 * (1.0 + t));
    return v;
  };
  return problem;
}

OpBlock eval_operator(const Family& family, double t) {
  if (const auto* diag = std::get_if<DiagonalFamily>(&family)) {
    Vec lambdas(diag->modes);
    for (int m = 1; m <= diag->modes; ++m) {
      lambdas(m - 1) = diag->eigenvalue(m, t);
    }
    if (!lambdas.allFinite()) {
      throw EvaluationError(
          "diagonal family produced non-finite eigenvalues at t = " +
          std::to_string(t));
    }
    return OpBlock::diagonal(std::move(lambdas));
  }
  const auto& dense = std::get<DenseFamily>(family);
  Mat a = dense.matrix(t);
  if (!a.allFinite()) {
    throw EvaluationError("dense family produced non-finite entries at t = " +
                          std::to_string(t));
  }
  return OpBlock::dense(std::move(a));
}

FrozenExp::FrozenExp(const Family& family, double t_eval)
    : instant_(eval_operator(family, t_eval)) {
  if (instant_.is_diagonal()) {
    path_ = Path::Diagonal;
    lambdas_ = instant_.diag();
    return;
  }
  const auto& dense = std::get<DenseFamily>(family);
  if (dense.symmetric) {
    path_ = Path::SymmetricEigen;
    Eigen::SelfAdjointEigenSolver<Mat> es(instant_.mat());
    eigvecs_ = es.eigenvectors();
    eigvals_ = es.eigenvalues();
  } else {
    path_ = Path::Pade;
    a_ = instant_.mat();
  }
}

Eigen::Index FrozenExp::dim() const { return instant_.dim(); }

OpBlock FrozenExp::block(double s) const {
  if (s < 0.0) {
    throw std::domain_error("FrozenExp: exponential duration must be >= 0");
  }
  switch (path_) {
    case Path::Diagonal:
      return OpBlock::diagonal((-s * lambdas_.array()).exp().matrix());
    case Path::SymmetricEigen: {
      const Vec e = (-s * eigvals_.array()).exp().matrix();
      return OpBlock::dense(eigvecs_ * e.asDiagonal() *
                            eigvecs_.transpose());
    }
    case Path::Pade:
    default:
      if (s == 0.0) return OpBlock::identity(false, a_.rows());
      return OpBlock::dense(matrix_exponential(-s * a_));
  }
}

Vec FrozenExp::apply(double s, const Vec& v) const {
  if (s < 0.0) {
    throw std::domain_error("FrozenExp: exponential duration must be >= 0");
  }
  if (s == 0.0) return v;
  if (path_ == Path::SymmetricEigen) {
    const Vec e = (-s * eigvals_.array()).exp().matrix();
    return eigvecs_ * e.cwiseProduct(eigvecs_.transpose() * v);
  }
  return block(s).apply(v);
}

Vec exp_action(const Family& family, double t_eval, double s, const Vec& v) {
  if (s < 0.0) {
    throw std::domain_error("exp_action: duration must be >= 0");
  }
  if (s == 0.0) return v;
  return FrozenExp(family, t_eval).apply(s, v);
}

double omega_lower_bound(Family& family, int t_samples) {
  const double omega = compute_omega(family, t_samples);
  std::visit([omega](auto& f) { f.omega = omega; }, family);
  return omega;
}

double wellposedness_margin(const NonlocalProblem& problem) {
  const std::optional<double> cached =
      std::visit([](const auto& f) { return f.omega; }, problem.family);
  const double omega = cached ? *cached : compute_omega(problem.family, 256);
  return 1.0 - std::abs(problem.alpha) * std::exp(-2.0 * omega);
}

}  // namespace nlevo
