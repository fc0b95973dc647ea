#include "delaybounds/psi_matrix.hpp"

#include <Eigen/Cholesky>
#include <string>

namespace delaybounds {

namespace {

Eigen::MatrixXd spd_inverse(const Eigen::MatrixXd& w) {
  Eigen::LLT<Eigen::MatrixXd> llt(w);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite("weight matrix W is not positive definite");
  return llt.solve(Eigen::MatrixXd::Identity(w.rows(), w.cols()));
}

}  // namespace

PsiMatrix::PsiMatrix(std::vector<std::vector<Matrix>> z_upper, std::vector<Matrix> n_blocks,
                     Matrix w)
    : z_upper_(std::move(z_upper)), n_blocks_(std::move(n_blocks)), w_(std::move(w)) {
  if (n_blocks_.empty() || z_upper_.size() != n_blocks_.size())
    throw DimensionMismatch("Z rows and N blocks must both have nu+1 entries");
  nu_ = static_cast<int>(n_blocks_.size()) - 1;
  if (w_.rows() != w_.cols()) throw NotSquare("W must be square");
  n_ = static_cast<int>(w_.rows());
  m_ = static_cast<int>(n_blocks_[0].rows());
  for (int k = 0; k <= nu_; ++k) {
    if (static_cast<int>(z_upper_[static_cast<size_t>(k)].size()) != nu_ - k + 1)
      throw DimensionMismatch("Z upper triangle row " + std::to_string(k) + " has wrong length");
    const Matrix& nk = n_blocks_[static_cast<size_t>(k)];
    if (nk.rows() != m_ || nk.cols() != n_)
      throw DimensionMismatch("N block " + std::to_string(k) + " must be M x n");
    for (const Matrix& zkl : z_upper_[static_cast<size_t>(k)])
      if (zkl.rows() != m_ || zkl.cols() != m_)
        throw DimensionMismatch("Z block in row " + std::to_string(k) + " must be M x M");
  }
}

PsiMatrix PsiMatrix::from_schur(const Matrix& phi, std::vector<Matrix> n_blocks, Matrix w) {
  const int count = static_cast<int>(n_blocks.size());
  if (count == 0) throw DimensionMismatch("need at least one N block");
  const int m = static_cast<int>(n_blocks[0].rows());
  if (phi.rows() != static_cast<Eigen::Index>(count) * m || phi.rows() != phi.cols())
    throw DimensionMismatch("Phi must be (nu+1)M square");
  const Matrix winv = spd_inverse(w);
  std::vector<std::vector<Matrix>> z_upper(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k)
    for (int l = k; l < count; ++l)
      z_upper[static_cast<size_t>(k)].push_back(
          phi.block(static_cast<Eigen::Index>(k) * m, static_cast<Eigen::Index>(l) * m, m, m) +
          n_blocks[static_cast<size_t>(k)] * winv * n_blocks[static_cast<size_t>(l)].transpose());
  return PsiMatrix(std::move(z_upper), std::move(n_blocks), std::move(w));
}

Matrix PsiMatrix::z(int k, int l) const {
  if (k < 0 || l < 0 || k > nu_ || l > nu_) throw DimensionMismatch("Z block index out of range");
  if (k <= l) return z_upper_[static_cast<size_t>(k)][static_cast<size_t>(l - k)];
  return z_upper_[static_cast<size_t>(l)][static_cast<size_t>(k - l)].transpose();
}

Matrix PsiMatrix::assemble() const {
  const Eigen::Index total = static_cast<Eigen::Index>(nu_ + 1) * m_ + n_;
  Matrix psi = Matrix::Zero(total, total);
  for (int k = 0; k <= nu_; ++k) {
    for (int l = k; l <= nu_; ++l) {
      const Matrix& zkl = z_upper_[static_cast<size_t>(k)][static_cast<size_t>(l - k)];
      psi.block(static_cast<Eigen::Index>(k) * m_, static_cast<Eigen::Index>(l) * m_, m_, m_) = zkl;
      if (l != k)
        psi.block(static_cast<Eigen::Index>(l) * m_, static_cast<Eigen::Index>(k) * m_, m_, m_) =
            zkl.transpose();
    }
    psi.block(static_cast<Eigen::Index>(k) * m_, total - n_, m_, n_) =
        n_blocks_[static_cast<size_t>(k)];
    psi.block(total - n_, static_cast<Eigen::Index>(k) * m_, n_, m_) =
        n_blocks_[static_cast<size_t>(k)].transpose();
  }
  psi.block(total - n_, total - n_, n_, n_) = w_;
  // the diagonal Z blocks need not be individually symmetric in storage;
  // symmetrize so the assembled matrix is exactly symmetric
  psi = 0.5 * (psi + psi.transpose()).eval();
  return psi;
}

Matrix PsiMatrix::schur_complement() const {
  const Matrix winv = spd_inverse(w_);
  const Eigen::Index total = static_cast<Eigen::Index>(nu_ + 1) * m_;
  Matrix phi = Matrix::Zero(total, total);
  for (int k = 0; k <= nu_; ++k)
    for (int l = k; l <= nu_; ++l) {
      const Matrix blk = z(k, l) - n_blocks_[static_cast<size_t>(k)] * winv *
                                       n_blocks_[static_cast<size_t>(l)].transpose();
      phi.block(static_cast<Eigen::Index>(k) * m_, static_cast<Eigen::Index>(l) * m_, m_, m_) = blk;
      if (l != k)
        phi.block(static_cast<Eigen::Index>(l) * m_, static_cast<Eigen::Index>(k) * m_, m_, m_) =
            blk.transpose();
    }
  phi = 0.5 * (phi + phi.transpose()).eval();
  return phi;
}

Matrix PsiMatrix::stacked_n() const {
  Matrix out(static_cast<Eigen::Index>(nu_ + 1) * m_, n_);
  for (int k = 0; k <= nu_; ++k)
    out.block(static_cast<Eigen::Index>(k) * m_, 0, m_, n_) = n_blocks_[static_cast<size_t>(k)];
  return out;
}

Matrix PsiMatrix::wide_n() const {
  Matrix out(m_, static_cast<Eigen::Index>(nu_ + 1) * n_);
  for (int k = 0; k <= nu_; ++k)
    out.block(0, static_cast<Eigen::Index>(k) * n_, m_, n_) = n_blocks_[static_cast<size_t>(k)];
  return out;
}

Matrix padded_free_matrix(const Matrix& hat, Half i) {
  const Eigen::Index m2 = hat.rows();
  const Eigen::Index m1 = hat.cols();
  if (m2 != 2 * m1) throw DimensionMismatch("padded free matrix expects an M2 x M1 hat block");
  Matrix out = Matrix::Zero(m2, m2);
  out.block(0, i == Half::first ? 0 : m1, m2, m1) = hat;
  return out;
}

}  // namespace delaybounds
