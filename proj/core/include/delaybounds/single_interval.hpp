#ifndef DELAYBOUNDS_SINGLE_INTERVAL_HPP
#define DELAYBOUNDS_SINGLE_INTERVAL_HPP

#include <span>
#include <vector>

#include "delaybounds/basis.hpp"
#include "delaybounds/moments.hpp"
#include "delaybounds/psd.hpp"
#include "delaybounds/psi_matrix.hpp"
#include "delaybounds/weight_blocks.hpp"

namespace delaybounds {

/// Free parameters of the generalized free-matrix bound: the free vector
/// chi and the subinterval selector that fixes the zero-padding pattern
/// of the wide free matrix.
struct FreeParams {
  Vector chi;
  Half selector = Half::first;
};

/// Change of basis p_k = sum_j c(k,j) Pi_j between a linearly
/// independent system and the orthogonal one spanning the same subspace,
/// with Gram values gamma_kl = <p_k, p_l>. Throws SingularBasisChange if
/// C is numerically singular.
class BasisChange {
 public:
  /// Gram values from the analytic identity gamma = C diag(rho) C^T.
  BasisChange(Matrix c, std::span<const double> rho);
  /// Gram values from actual inner products of the combined polynomials,
  /// cross-checked against the analytic identity.
  BasisChange(Matrix c, const Basis& basis);

  const Matrix& c() const { return c_; }
  const Matrix& gamma() const { return gamma_; }
  double condition_number() const { return cond_; }
  int size() const { return static_cast<int>(c_.rows()); }

 private:
  void validate(std::span<const double> rho);
  Matrix c_;
  Matrix gamma_;
  double cond_ = 0.0;
};

/// Lower bound on <f_i, W f_i> from a feasible Psi:
///   -chi^T (sum_k rho_k Z_kk) chi - He(chi^T sum_k N_k w_k),
/// where w_half stacks the moments w_k = <f_i, Pi_k> of the selected
/// subinterval. Throws InfeasiblePsi when psd_check(Psi) fails.
double gfmb_bound(const PsiMatrix& psi, std::span<const double> rho, const Vector& chi,
                  const Vector& w_half, double psd_tol = 1e-8);

/// Same bound with the selector resolving which moment half pairs with
/// the free blocks.
double gfmb_bound(const PsiMatrix& psi, std::span<const double> rho, const FreeParams& fp,
                  const MomentVector& w, double psd_tol = 1e-8);

/// Variant over a merely linearly independent system with Gram values
/// gamma: -chi^T (sum_k gamma_kk Z_kk + sum_{k<l} He(gamma_kl Z_kl)) chi
/// - sum_k He(chi^T N_k wt_k), wt_k = <f_i, p_k>.
double ifb_gfmb_bound(const PsiMatrix& psi, const BasisChange& bc, const Vector& chi,
                      const Vector& w_tilde, double psd_tol = 1e-8);

/// Simplified bound obtained from the Schur-optimal Z choice:
///   -He(chi^T N w) - chi^T N What_inv N^T chi,
/// with N the wide (padded) square free matrix and What_inv the matching
/// padded weight-block inverse. Dominates gfmb_bound for the same
/// (chi, N) and any feasible Z blocks.
double sgfmb_bound(const Matrix& n_wide, const Vector& chi, const Vector& w,
                   const Matrix& what_inv);

/// sgfmb_bound at chi = w.
double sfmb_bound(const Matrix& n_wide, const Vector& w, const Matrix& what_inv);

/// Orthogonal-projection (Bessel) bound w^T What w; the tightest of the
/// family. Accepts either (w^i, calW_i) or (stacked w, padded What).
double bbi_bound(const Vector& w, const Matrix& what);

/// Wide free matrix N with N^T chi = -What w, so that
/// sgfmb_bound(N, chi, w) attains bbi_bound(w). Least-squares
/// construction N = -chi (What w)^T / (chi^T chi). Throws ZeroChi.
Matrix optimal_bbi_params(const Vector& w, const Matrix& what, const Vector& chi);

/// Certificate of the basis-change transport: blocks
///   Zt_jj = sum_{k,l} c(k,j) c(l,j) Z_kl,  Nt_j = sum_k c(k,j) N_k,
///   Zt_kl = Nt_k W^{-1} Nt_l^T (k != l),
/// packaged as a PsiMatrix. Whenever the input Psi is feasible the
/// transported one is too, and gfmb_bound on it reproduces
/// ifb_gfmb_bound on the input for every chi.
struct IfbTransform {
  PsiMatrix psi_tilde;
  /// PSD certificate of the transported Psi, for feasibility assertions
  PsdCertificate cert;
};

IfbTransform transform_ifb_to_gfmb(const PsiMatrix& psi, const BasisChange& bc,
                                   double psd_tol = 1e-8);

/// Certificate aligning the free vector with the moment vector:
/// eta = |chi|/|w| and orthogonal q with chi = eta q w (Householder
/// completion; q = I when chi is a positive multiple of w). The
/// transported free matrix n_tilde = eta q^T N satisfies
/// sfmb_bound(n_tilde, w) = sgfmb_bound(N, chi, w). Throws ZeroMoment
/// when w = 0.
struct MomentAlignment {
  double eta = 0.0;
  Matrix q;
  Matrix n_tilde;
};

MomentAlignment sfmb_from_sgfmb(const Vector& chi, const Matrix& n_wide, const Vector& w);

}  // namespace delaybounds

#endif
