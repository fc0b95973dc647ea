#include "delaybounds/single_interval.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <cmath>
#include <string>

namespace delaybounds {

namespace {

Matrix spd_inverse(const Matrix& w) {
  Eigen::LLT<Matrix> llt(w);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite("weight matrix W is not positive definite");
  return llt.solve(Matrix::Identity(w.rows(), w.cols()));
}

void require_feasible(const PsiMatrix& psi, double psd_tol) {
  const PsdCertificate cert = psd_check(psi.assemble(), psd_tol);
  if (!cert.pass)
    throw InfeasiblePsi("Psi fails the PSD feasibility test: lambda_min = " +
                        std::to_string(cert.lambda_min));
}

}  // namespace

BasisChange::BasisChange(Matrix c, std::span<const double> rho) : c_(std::move(c)) {
  validate(rho);
  Vector d(static_cast<Eigen::Index>(rho.size()));
  for (size_t j = 0; j < rho.size(); ++j) d(static_cast<Eigen::Index>(j)) = rho[j];
  gamma_ = c_ * d.asDiagonal() * c_.transpose();
}

BasisChange::BasisChange(Matrix c, const Basis& basis) : c_(std::move(c)) {
  validate(basis.rho());
  const int count = size();
  // combined polynomials p_k = sum_j c(k,j) Pi_j
  std::vector<Polynomial> p(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    Polynomial acc;
    for (int j = 0; j < count; ++j) acc = acc + basis.pi(j) * c_(k, j);
    p[static_cast<size_t>(k)] = acc;
  }
  gamma_ = Matrix(count, count);
  for (int k = 0; k < count; ++k)
    for (int l = k; l < count; ++l) {
      gamma_(k, l) = basis.space().inner(p[static_cast<size_t>(k)], p[static_cast<size_t>(l)]);
      gamma_(l, k) = gamma_(k, l);
    }
  // cross-check against gamma_kl = sum_j c_kj c_lj rho_j
  Vector d(count);
  for (int j = 0; j < count; ++j) d(j) = basis.rho(j);
  const Matrix analytic = c_ * d.asDiagonal() * c_.transpose();
  const double scale = std::max(1.0, analytic.cwiseAbs().maxCoeff());
  const double resid = (gamma_ - analytic).cwiseAbs().maxCoeff();
  if (resid > 1e-8 * scale)
    throw SingularBasisChange("Gram values disagree with C diag(rho) C^T by " +
                              std::to_string(resid));
}

void BasisChange::validate(std::span<const double> rho) {
  if (c_.rows() != c_.cols()) throw NotSquare("basis-change matrix C must be square");
  if (static_cast<size_t>(c_.rows()) != rho.size())
    throw DimensionMismatch("C must be (nu+1) x (nu+1)");
  Eigen::JacobiSVD<Matrix> svd(c_);
  const double smax = svd.singularValues().maxCoeff();
  const double smin = svd.singularValues().minCoeff();
  if (!(smin > 0.0) || smax / smin > 1e12)
    throw SingularBasisChange("basis-change matrix C is numerically singular");
  cond_ = smax / smin;
}

double gfmb_bound(const PsiMatrix& psi, std::span<const double> rho, const Vector& chi,
                  const Vector& w_half, double psd_tol) {
  const int nu = psi.order();
  const int m = psi.block_size();
  const int n = psi.state_dim();
  if (static_cast<int>(rho.size()) != nu + 1)
    throw DimensionMismatch("rho must have nu+1 entries");
  if (chi.size() != m) throw DimensionMismatch("chi must have the Z block size");
  if (w_half.size() != static_cast<Eigen::Index>(nu + 1) * n)
    throw DimensionMismatch("moment stack must have (nu+1) n entries");
  require_feasible(psi, psd_tol);

  double quad = 0.0;
  double pair = 0.0;
  for (int k = 0; k <= nu; ++k) {
    quad += rho[static_cast<size_t>(k)] * chi.dot(psi.z(k, k) * chi);
    pair += chi.dot(psi.n_block(k) * w_half.segment(static_cast<Eigen::Index>(k) * n, n));
  }
  return -quad - 2.0 * pair;
}

double gfmb_bound(const PsiMatrix& psi, std::span<const double> rho, const FreeParams& fp,
                  const MomentVector& w, double psd_tol) {
  return gfmb_bound(psi, rho, fp.chi, w.half(fp.selector), psd_tol);
}

double ifb_gfmb_bound(const PsiMatrix& psi, const BasisChange& bc, const Vector& chi,
                      const Vector& w_tilde, double psd_tol) {
  const int nu = psi.order();
  const int m = psi.block_size();
  const int n = psi.state_dim();
  if (bc.size() != nu + 1) throw DimensionMismatch("basis change must be (nu+1) x (nu+1)");
  if (chi.size() != m) throw DimensionMismatch("chi must have the Z block size");
  if (w_tilde.size() != static_cast<Eigen::Index>(nu + 1) * n)
    throw DimensionMismatch("moment stack must have (nu+1) n entries");
  require_feasible(psi, psd_tol);

  const Matrix& gamma = bc.gamma();
  double quad = 0.0;
  double pair = 0.0;
  for (int k = 0; k <= nu; ++k) {
    quad += gamma(k, k) * chi.dot(psi.z(k, k) * chi);
    for (int l = k + 1; l <= nu; ++l) quad += 2.0 * gamma(k, l) * chi.dot(psi.z(k, l) * chi);
    pair += chi.dot(psi.n_block(k) * w_tilde.segment(static_cast<Eigen::Index>(k) * n, n));
  }
  return -quad - 2.0 * pair;
}

double sgfmb_bound(const Matrix& n_wide, const Vector& chi, const Vector& w,
                   const Matrix& what_inv) {
  const Eigen::Index m = chi.size();
  if (n_wide.rows() != m || n_wide.cols() != w.size() || w.size() != m)
    throw DimensionMismatch("sgfmb operands must all share the stacked size");
  if (what_inv.rows() != m || what_inv.cols() != m)
    throw DimensionMismatch("padded weight inverse must match the stacked size");
  const Vector ntc = n_wide.transpose() * chi;
  return -2.0 * chi.dot(n_wide * w) - ntc.dot(what_inv * ntc);
}

double sfmb_bound(const Matrix& n_wide, const Vector& w, const Matrix& what_inv) {
  return sgfmb_bound(n_wide, w, w, what_inv);
}

double bbi_bound(const Vector& w, const Matrix& what) {
  if (what.rows() != w.size() || what.cols() != w.size())
    throw DimensionMismatch("weight block must match the moment vector size");
  return w.dot(what * w);
}

Matrix optimal_bbi_params(const Vector& w, const Matrix& what, const Vector& chi) {
  if (what.rows() != w.size() || what.cols() != w.size() || chi.size() != w.size())
    throw DimensionMismatch("optimal_bbi_params operands must share the stacked size");
  const double chi2 = chi.squaredNorm();
  if (chi2 == 0.0) throw ZeroChi("the free vector chi must be nonzero");
  return -(chi / chi2) * (what * w).transpose();
}

IfbTransform transform_ifb_to_gfmb(const PsiMatrix& psi, const BasisChange& bc, double psd_tol) {
  const int nu = psi.order();
  const int m = psi.block_size();
  const int n = psi.state_dim();
  if (bc.size() != nu + 1) throw DimensionMismatch("basis change must be (nu+1) x (nu+1)");
  require_feasible(psi, psd_tol);

  const Matrix& c = bc.c();
  const Matrix winv = spd_inverse(psi.w());

  std::vector<Matrix> n_tilde(static_cast<size_t>(nu) + 1);
  for (int j = 0; j <= nu; ++j) {
    Matrix acc = Matrix::Zero(m, n);
    for (int k = 0; k <= nu; ++k) acc += c(k, j) * psi.n_block(k);
    n_tilde[static_cast<size_t>(j)] = acc;
  }

  std::vector<std::vector<Matrix>> z_tilde(static_cast<size_t>(nu) + 1);
  for (int j = 0; j <= nu; ++j) {
    Matrix diag = Matrix::Zero(m, m);
    for (int k = 0; k <= nu; ++k)
      for (int l = 0; l <= nu; ++l) diag += c(k, j) * c(l, j) * psi.z(k, l);
    z_tilde[static_cast<size_t>(j)].push_back(diag);
    for (int l = j + 1; l <= nu; ++l)
      z_tilde[static_cast<size_t>(j)].push_back(n_tilde[static_cast<size_t>(j)] * winv *
                                                n_tilde[static_cast<size_t>(l)].transpose());
  }

  PsiMatrix psi_tilde(std::move(z_tilde), std::move(n_tilde), psi.w());
  const PsdCertificate cert = psd_check(psi_tilde.assemble(), psd_tol);
  return IfbTransform{std::move(psi_tilde), cert};
}

MomentAlignment sfmb_from_sgfmb(const Vector& chi, const Matrix& n_wide, const Vector& w) {
  const Eigen::Index m = w.size();
  if (chi.size() != m || n_wide.rows() != m || n_wide.cols() != m)
    throw DimensionMismatch("sfmb_from_sgfmb operands must share the stacked size");
  const double wn = w.norm();
  if (wn == 0.0) throw ZeroMoment("the moment vector must be nonzero to align chi = eta Q w");

  MomentAlignment out;
  const double cn = chi.norm();
  out.eta = cn / wn;
  if (cn == 0.0) {
    out.q = Matrix::Identity(m, m);
    out.n_tilde = Matrix::Zero(m, m);
    return out;
  }
  const Vector u = w / wn;
  const Vector v = chi / cn;
  constexpr double kParallelTol = 1e-12;
  if ((u - v).norm() <= kParallelTol) {
    out.q = Matrix::Identity(m, m);
  } else if ((u + v).norm() <= kParallelTol) {
    // chi = -lambda w: one reflection through the hyperplane orthogonal to u
    out.q = Matrix::Identity(m, m) - 2.0 * u * u.transpose();
  } else {
    // two reflections: u -> -v through the bisector, then -v -> v
    const Vector mid = (u + v).normalized();
    const Matrix h_mid = Matrix::Identity(m, m) - 2.0 * mid * mid.transpose();
    const Matrix h_v = Matrix::Identity(m, m) - 2.0 * v * v.transpose();
    out.q = h_v * h_mid;
  }
  out.n_tilde = out.eta * out.q.transpose() * n_wide;
  return out;
}

}  // namespace delaybounds
