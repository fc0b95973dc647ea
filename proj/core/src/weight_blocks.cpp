#include "delaybounds/weight_blocks.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <string>

namespace delaybounds {

WeightBlocks::WeightBlocks(std::vector<double> rho, Matrix w) : rho_(std::move(rho)), w_(std::move(w)) {
  if (rho_.empty()) throw DimensionMismatch("need at least rho_0");
  if (w_.rows() != w_.cols()) throw NotSquare("W must be square");
  for (double r : rho_)
    if (!(r > 0.0)) throw InvalidConfig("norm-squares rho must be positive");

  Eigen::LLT<Matrix> llt(w_);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite("weight matrix W is not positive definite");
  const Matrix winv = llt.solve(Matrix::Identity(w_.rows(), w_.cols()));

  const int n = static_cast<int>(w_.rows());
  const int m1 = static_cast<int>(rho_.size()) * n;
  cal_ = Matrix::Zero(m1, m1);
  cal_inv_ = Matrix::Zero(m1, m1);
  for (size_t k = 0; k < rho_.size(); ++k) {
    const Eigen::Index off = static_cast<Eigen::Index>(k) * n;
    cal_.block(off, off, n, n) = w_ / rho_[k];
    cal_inv_.block(off, off, n, n) = winv * rho_[k];
  }

  const double resid = (cal_ * cal_inv_ - Matrix::Identity(m1, m1)).cwiseAbs().maxCoeff();
  if (resid > 1e-10)
    throw NotPositiveDefinite("weight block inverse residual " + std::to_string(resid) +
                              " exceeds 1e-10; W is too ill-conditioned");
}

Matrix WeightBlocks::padded(Half i) const {
  const int m1 = this->m1();
  Matrix out = Matrix::Zero(2 * m1, 2 * m1);
  const Eigen::Index off = (i == Half::first) ? 0 : m1;
  out.block(off, off, m1, m1) = cal_;
  return out;
}

Matrix WeightBlocks::padded_inv(Half i) const {
  const int m1 = this->m1();
  Matrix out = Matrix::Zero(2 * m1, 2 * m1);
  const Eigen::Index off = (i == Half::first) ? 0 : m1;
  out.block(off, off, m1, m1) = cal_inv_;
  return out;
}

}  // namespace delaybounds
