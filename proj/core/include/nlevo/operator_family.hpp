#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "nlevo/block.hpp"
#include "nlevo/errors.hpp"

namespace nlevo {

/// Time-dependent strongly positive operator family in its eigenbasis:
/// A(t) acts mode-wise with eigenvalue(m, t) > 0 for m = 1..modes, t in
/// [-1,1]. When the eigenvalues are polynomial in t, eigen_poly(m) returns
/// the monomial coefficients in ascending degree; this enables the exact
/// moment path for the discrete coefficients.
struct DiagonalFamily {
  int modes = 1;
  std::function<double(int m, double t)> eigenvalue;
  std::function<std::vector<double>(int m)> eigen_poly;
  std::optional<double> omega;  // cached spectral lower bound
};

/// Finite-dimensional stand-in for a generic strongly positive A(t): a
/// matrix-valued function of t. Symmetric families get the eigendecomposition
/// exponential path, non-symmetric ones scaling-and-squaring.
struct DenseFamily {
  Eigen::Index dim = 1;
  std::function<Mat(double t)> matrix;
  bool symmetric = false;
  std::optional<double> omega;
};

using Family = std::variant<DiagonalFamily, DenseFamily>;

Eigen::Index state_dim(const Family& family);
bool is_diagonal(const Family& family);

/// Diagonal family whose mode-m eigenvalue is the polynomial with the given
/// ascending coefficients; sets both the evaluator and eigen_poly.
DiagonalFamily make_polynomial_family(
    int modes, std::function<std::vector<double>(int m)> coefficients);

/// The two-point nonlocal problem dv/dt + A(t) v = f(t) on [-1,1] with
/// v(-1) + alpha v(1) = phi.  `exact`, when set, is the reference solution
/// used for error reporting.
struct NonlocalProblem {
  Family family;
  std::function<Vec(double t)> forcing;  // null means f == 0
  double alpha = 0.0;
  Vec phi;
  std::function<Vec(double t)> exact;  // optional
};

/// The built-in heat problem: one sine mode of -d^2/dx^2 + (1+t) on (0,1)
/// with Dirichlet walls, eigenvalue pi^2 + 1 + t, alpha = 1/2, and the known
/// solution e^{-pi^2 (1+t)} attached.
NonlocalProblem builtin_heat_problem();

/// A(t) frozen at one time: diagonal value list or matrix.
/// Throws EvaluationError if the evaluator produces non-finite entries.
OpBlock eval_operator(const Family& family, double t);

/// Exponential evaluator for the frozen operator A(t_eval): produces
/// e^{-s A(t_eval)} for any s >= 0. Diagonal families use per-mode scalar
/// exponentials; symmetric dense families one eigendecomposition; other dense
/// families scaling-and-squaring per call.
class FrozenExp {
 public:
  FrozenExp(const Family& family, double t_eval);

  Eigen::Index dim() const;
  const OpBlock& instant() const { return instant_; }

  /// e^{-s A} as a block. Throws std::domain_error for s < 0.
  OpBlock block(double s) const;

  /// e^{-s A} v without forming the block for the symmetric dense path.
  Vec apply(double s, const Vec& v) const;

 private:
  enum class Path { Diagonal, SymmetricEigen, Pade };
  Path path_;
  OpBlock instant_;
  Vec lambdas_;    // Diagonal
  Mat eigvecs_;    // SymmetricEigen
  Vec eigvals_;    // SymmetricEigen
  Mat a_;          // Pade
};

/// e^{-s A(t_eval)} v.
Vec exp_action(const Family& family, double t_eval, double s, const Vec& v);

/// Estimates the spectral lower bound omega = inf lambda_min(A(t)) by
/// sampling t_samples uniform points of [-1,1] (plus the endpoints) and, for
/// diagonal families, all modes. Caches the estimate in the family. Throws
/// PositivityError if the estimate is not positive.
double omega_lower_bound(Family& family, int t_samples = 256);

/// Well-posedness margin 1 - |alpha| e^{-2 omega}. A positive margin
/// certifies invertibility of I + alpha U(1,-1) by the decay bound; a
/// nonpositive one only means the sufficient condition is inconclusive.
/// Uses the cached omega when present, otherwise samples with the default
/// resolution.
double wellposedness_margin(const NonlocalProblem& problem);

}  // namespace nlevo
