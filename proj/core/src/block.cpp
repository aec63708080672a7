#include "nlevo/block.hpp"

#include <stdexcept>

#include <Eigen/SVD>

namespace nlevo {

OpBlock OpBlock::diagonal(Vec d) {
  OpBlock b;
  b.diag_kind_ = true;
  b.d_ = std::move(d);
  return b;
}

OpBlock OpBlock::dense(Mat m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("OpBlock::dense: matrix must be square");
  }
  OpBlock b;
  b.diag_kind_ = false;
  b.m_ = std::move(m);
  return b;
}

OpBlock OpBlock::identity(bool diagonal_kind, Eigen::Index dim) {
  return diagonal_kind ? diagonal(Vec::Ones(dim))
                       : dense(Mat::Identity(dim, dim));
}

OpBlock OpBlock::zero(bool diagonal_kind, Eigen::Index dim) {
  return diagonal_kind ? diagonal(Vec::Zero(dim)) : dense(Mat::Zero(dim, dim));
}

Eigen::Index OpBlock::dim() const { return diag_kind_ ? d_.size() : m_.rows(); }

Vec OpBlock::apply(const Vec& v) const {
  if (v.size() != dim()) {
    throw std::invalid_argument("OpBlock::apply: dimension mismatch");
  }
  return diag_kind_ ? Vec(d_.cwiseProduct(v)) : Vec(m_ * v);
}

OpBlock OpBlock::compose(const OpBlock& rhs) const {
  if (rhs.dim() != dim() || rhs.diag_kind_ != diag_kind_) {
    throw std::invalid_argument("OpBlock::compose: incompatible blocks");
  }
  return diag_kind_ ? diagonal(d_.cwiseProduct(rhs.d_)) : dense(m_ * rhs.m_);
}

void OpBlock::axpy(double a, const OpBlock& other) {
  if (other.dim() != dim() || other.diag_kind_ != diag_kind_) {
    throw std::invalid_argument("OpBlock::axpy: incompatible blocks");
  }
  if (diag_kind_) {
    d_ += a * other.d_;
  } else {
    m_ += a * other.m_;
  }
}

void OpBlock::scale(double a) {
  if (diag_kind_) {
    d_ *= a;
  } else {
    m_ *= a;
  }
}

double OpBlock::norm() const {
  if (diag_kind_) {
    return d_.size() == 0 ? 0.0 : d_.cwiseAbs().maxCoeff();
  }
  return m_.jacobiSvd().singularValues()(0);
}

bool OpBlock::all_finite() const {
  return diag_kind_ ? d_.allFinite() : m_.allFinite();
}

Mat OpBlock::to_matrix() const {
  return diag_kind_ ? Mat(d_.asDiagonal()) : m_;
}

}  // namespace nlevo
