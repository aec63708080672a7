#pragma once

#include <Eigen/Core>

namespace nlevo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// One operator block of the discrete system: a linear map on state vectors,
/// stored either as a diagonal (per-mode multipliers of a diagonal family) or
/// as a dense matrix. Value type; all operations are const except the
/// in-place accumulators.
class OpBlock {
 public:
  OpBlock() = default;

  static OpBlock diagonal(Vec d);
  static OpBlock dense(Mat m);
  static OpBlock identity(bool diagonal_kind, Eigen::Index dim);
  static OpBlock zero(bool diagonal_kind, Eigen::Index dim);

  bool is_diagonal() const { return diag_kind_; }
  Eigen::Index dim() const;

  Vec apply(const Vec& v) const;

  /// Composition (*this) o rhs, i.e. the matrix product this * rhs.
  OpBlock compose(const OpBlock& rhs) const;

  /// *this += a * other.
  void axpy(double a, const OpBlock& other);
  void scale(double a);

  /// Operator 2-norm: max |entry| for diagonal blocks, spectral norm for
  /// dense ones.
  double norm() const;

  bool all_finite() const;

  Mat to_matrix() const;
  const Vec& diag() const { return d_; }
  const Mat& mat() const { return m_; }

 private:
  bool diag_kind_ = true;
  Vec d_;
  Mat m_;
};

}  // namespace nlevo
