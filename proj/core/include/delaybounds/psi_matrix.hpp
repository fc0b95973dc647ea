#ifndef DELAYBOUNDS_PSI_MATRIX_HPP
#define DELAYBOUNDS_PSI_MATRIX_HPP

#include <vector>

#include "delaybounds/errors.hpp"
#include "delaybounds/linalg.hpp"

namespace delaybounds {

/// The symmetric free-parameter block matrix
///
///   Psi = [ Z_00  ...  Z_0v  N_0 ]
///         [  .     .    .     .  ]
///         [ Z_v0  ...  Z_vv  N_v ]
///         [ N_0^T ... N_v^T   W  ]
///
/// with Z_kl in R^{MxM} (Z_lk = Z_kl^T), N_k in R^{Mxn} and W in S_n+.
/// M is the block size: M_2 = 2(nu+1)n in the two-interval application,
/// M_1 = (nu+1)n in pure single-interval use. Feasibility of the bound
/// family means Psi >= 0.
class PsiMatrix {
 public:
  /// z_upper holds rows of the upper block triangle:
  /// z_upper[k] = {Z_kk, Z_k,k+1, ..., Z_k,nu}.
  PsiMatrix(std::vector<std::vector<Matrix>> z_upper, std::vector<Matrix> n_blocks, Matrix w);

  /// Build from a Schur-complement block matrix Phi:
  /// Z_kl = Phi_kl + N_k W^{-1} N_l^T, which makes Psi >= 0 whenever
  /// Phi >= 0 and W > 0.
  static PsiMatrix from_schur(const Matrix& phi, std::vector<Matrix> n_blocks, Matrix w);

  int order() const { return nu_; }
  int block_size() const { return m_; }
  int state_dim() const { return n_; }

  /// Z_kl for any k, l (transposing stored blocks below the diagonal).
  Matrix z(int k, int l) const;
  const Matrix& n_block(int k) const { return n_blocks_[static_cast<size_t>(k)]; }
  const Matrix& w() const { return w_; }

  /// Full ((nu+1)M + n) symmetric matrix.
  Matrix assemble() const;
  /// Schur complement of W: blocks phi_kl = Z_kl - N_k W^{-1} N_l^T.
  Matrix schur_complement() const;
  /// [N_0; N_1; ...; N_nu], size (nu+1)M x n.
  Matrix stacked_n() const;
  /// [N_0, N_1, ..., N_nu], size M x (nu+1)n.
  Matrix wide_n() const;

 private:
  int nu_;
  int m_;
  int n_;
  std::vector<std::vector<Matrix>> z_upper_;
  std::vector<Matrix> n_blocks_;
  Matrix w_;
};

/// Place a hat-block matrix (M_2 x M_1) into an M_2 x M_2 square with
/// zero padding: (Nhat, 0) for the first half, (0, Nhat) for the second.
Matrix padded_free_matrix(const Matrix& hat, Half i);

}  // namespace delaybounds

#endif
