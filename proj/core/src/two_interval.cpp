#include "delaybounds/two_interval.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <string>

namespace delaybounds {

namespace {

constexpr double kAlphaMin = 1e-6;

void check_dims(const Matrix& m, Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw DimensionMismatch(std::string(what) + " must be " + std::to_string(rows) + "x" +
                            std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
}

double quadratic_over_h(const Vector& w, const Matrix& omega, double h) {
  if (omega.rows() != w.size() || omega.cols() != w.size())
    throw DimensionMismatch("Omega must match the stacked moment size");
  if (!(h > 0.0)) throw InvalidSplit("interval length h must be positive");
  return w.dot(omega * w) / h;
}

}  // namespace

SplitGeometry SplitGeometry::from_interval(double a, double c, double b) {
  if (!(a < c && c < b)) throw InvalidSplit("split geometry requires a < c < b");
  SplitGeometry g;
  g.h = b - a;
  g.h1 = c - a;
  g.h2 = b - c;
  g.alpha = g.h1 / g.h;
  g.beta = 1.0 - g.alpha;
  return g;
}

SplitGeometry SplitGeometry::from_alpha(double h, double alpha) {
  if (!(h > 0.0)) throw InvalidSplit("interval length h must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidSplit("alpha must lie in (0, 1)");
  SplitGeometry g;
  g.h = h;
  g.alpha = alpha;
  g.beta = 1.0 - alpha;
  g.h1 = alpha * h;
  g.h2 = g.beta * h;
  return g;
}

WeightLadder::WeightLadder(int nu, const Matrix& w) : nu_(nu), w_(w) {
  if (nu < 0) throw InvalidConfig("ladder order must be nonnegative");
  if (w_.rows() != w_.cols()) throw NotSquare("W must be square");
  Eigen::LLT<Matrix> llt(w_);
  if (llt.info() != Eigen::Success)
    throw NotPositiveDefinite("weight matrix W is not positive definite");
  const Matrix winv = llt.solve(Matrix::Identity(w_.rows(), w_.cols()));
  const int n = static_cast<int>(w_.rows());
  const int m1 = (nu + 1) * n;
  mat_ = Matrix::Zero(m1, m1);
  inv_ = Matrix::Zero(m1, m1);
  for (int k = 0; k <= nu; ++k) {
    const double d = 2.0 * k + 1.0;
    const Eigen::Index off = static_cast<Eigen::Index>(k) * n;
    mat_.block(off, off, n, n) = d * w_;
    inv_.block(off, off, n, n) = winv / d;
  }
}

Matrix omega_b(const SplitGeometry& g, const WeightLadder& wl) {
  if (!(g.alpha >= kAlphaMin && g.alpha <= 1.0 - kAlphaMin))
    throw AlphaOutOfRange("alpha = " + std::to_string(g.alpha) + " too close to an endpoint");
  const int m1 = wl.m1();
  Matrix out = Matrix::Zero(2 * m1, 2 * m1);
  out.topLeftCorner(m1, m1) = wl.mat() / g.alpha;
  out.bottomRightCorner(m1, m1) = wl.mat() / g.beta;
  return out;
}

Matrix omega_f(const SplitGeometry& g, const FmbParams& p, const WeightLadder& wl) {
  if (!(g.alpha >= kAlphaMin && g.alpha <= 1.0 - kAlphaMin))
    throw AlphaOutOfRange("alpha = " + std::to_string(g.alpha) + " too close to an endpoint");
  const int m1 = wl.m1();
  check_dims(p.n1hat, 2 * m1, m1, "N1 hat");
  check_dims(p.n2hat, 2 * m1, m1, "N2 hat");
  const double h2 = g.h * g.h;
  Matrix concat(2 * m1, 2 * m1);
  concat.leftCols(m1) = -g.h * p.n1hat;
  concat.rightCols(m1) = -g.h * p.n2hat;
  return he(concat) - (h2 * g.alpha) * (p.n1hat * wl.inv() * p.n1hat.transpose()) -
         (h2 * g.beta) * (p.n2hat * wl.inv() * p.n2hat.transpose());
}

Matrix omega_mlsr(const SplitGeometry& g, const MlsrParams& p, const WeightLadder& wl) {
  const int m1 = wl.m1();
  check_dims(p.v1, 2 * m1, m1, "V1");
  check_dims(p.v2, 2 * m1, m1, "V2");
  Matrix concat(2 * m1, 2 * m1);
  concat.leftCols(m1) = p.v1;
  concat.rightCols(m1) = p.v2;
  return he(concat) - g.alpha * (p.v1 * wl.inv() * p.v1.transpose()) -
         g.beta * (p.v2 * wl.inv() * p.v2.transpose());
}

ErcFeasibility erc_feasible(const ErcParams& p, const WeightLadder& wl, double tol) {
  const int m1 = wl.m1();
  check_dims(p.x1, m1, m1, "X1");
  check_dims(p.x2, m1, m1, "X2");
  check_dims(p.y1, m1, m1, "Y1");
  check_dims(p.y2, m1, m1, "Y2");
  const double asym = std::max((p.x1 - p.x1.transpose()).cwiseAbs().maxCoeff(),
                               (p.x2 - p.x2.transpose()).cwiseAbs().maxCoeff());
  if (asym > 1e-12 * std::max(1.0, std::max(p.x1.cwiseAbs().maxCoeff(), p.x2.cwiseAbs().maxCoeff())))
    throw NotSymmetric("X1, X2 must be symmetric");

  Matrix endpoint1(2 * m1, 2 * m1);  // alpha = 1
  endpoint1.topLeftCorner(m1, m1) = wl.mat() - p.x1;
  endpoint1.topRightCorner(m1, m1) = -p.y1;
  endpoint1.bottomLeftCorner(m1, m1) = -p.y1.transpose();
  endpoint1.bottomRightCorner(m1, m1) = wl.mat();

  Matrix endpoint0(2 * m1, 2 * m1);  // alpha = 0
  endpoint0.topLeftCorner(m1, m1) = wl.mat();
  endpoint0.topRightCorner(m1, m1) = -p.y2;
  endpoint0.bottomLeftCorner(m1, m1) = -p.y2.transpose();
  endpoint0.bottomRightCorner(m1, m1) = wl.mat() - p.x2;

  ErcFeasibility out;
  out.at_alpha0 = psd_check(endpoint0, tol);
  out.at_alpha1 = psd_check(endpoint1, tol);
  out.pass = out.at_alpha0.pass && out.at_alpha1.pass;
  return out;
}

namespace {

Matrix erc_shape(const SplitGeometry& g, const Matrix& x1, const Matrix& x2, const Matrix& y1,
                 const Matrix& y2, const WeightLadder& wl) {
  const int m1 = wl.m1();
  Matrix out(2 * m1, 2 * m1);
  out.topLeftCorner(m1, m1) = wl.mat() + g.beta * x1;
  out.topRightCorner(m1, m1) = g.alpha * y1 + g.beta * y2;
  out.bottomLeftCorner(m1, m1) = out.topRightCorner(m1, m1).transpose();
  out.bottomRightCorner(m1, m1) = wl.mat() + g.alpha * x2;
  return out;
}

}  // namespace

Matrix omega_erc(const SplitGeometry& g, const ErcParams& p, const WeightLadder& wl, double tol) {
  const ErcFeasibility feas = erc_feasible(p, wl, tol);
  if (!feas.pass)
    throw InfeasibleParams("ERC parameters fail the endpoint feasibility condition: lambda_min = " +
                           std::to_string(std::min(feas.at_alpha0.lambda_min, feas.at_alpha1.lambda_min)));
  return erc_shape(g, p.x1, p.x2, p.y1, p.y2, wl);
}

Matrix omega_serc(const SplitGeometry& g, const SercParams& p, const WeightLadder& wl) {
  const int m1 = wl.m1();
  check_dims(p.y1, m1, m1, "Y1");
  check_dims(p.y2, m1, m1, "Y2");
  const Matrix xh1 = wl.mat() - p.y1 * wl.inv() * p.y1.transpose();
  const Matrix xh2 = wl.mat() - p.y2.transpose() * wl.inv() * p.y2;
  return erc_shape(g, xh1, xh2, p.y1, p.y2, wl);
}

Matrix omega_merc(const SplitGeometry& g, const MercParams& p, const WeightLadder& wl) {
  const int m1 = wl.m1();
  check_dims(p.y, m1, m1, "Y");
  const Matrix xb1 = wl.mat() - p.y * wl.inv() * p.y.transpose();
  const Matrix xb2 = wl.mat() - p.y.transpose() * wl.inv() * p.y;
  Matrix out(2 * m1, 2 * m1);
  out.topLeftCorner(m1, m1) = wl.mat() + g.beta * xb1;
  out.topRightCorner(m1, m1) = p.y;
  out.bottomLeftCorner(m1, m1) = p.y.transpose();
  out.bottomRightCorner(m1, m1) = wl.mat() + g.alpha * xb2;
  return out;
}

Matrix omega_rcc(const SplitGeometry& g, const RccParams& p, const WeightLadder& wl, double tol) {
  const int m1 = wl.m1();
  check_dims(p.y, m1, m1, "Y");
  const ErcParams zero{Matrix::Zero(m1, m1), Matrix::Zero(m1, m1), p.y, p.y};
  const ErcFeasibility feas = erc_feasible(zero, wl, tol);
  if (!feas.pass)
    throw InfeasibleParams("RCC parameter Y fails the endpoint feasibility condition");
  (void)g;  // constant in alpha
  Matrix out(2 * m1, 2 * m1);
  out.topLeftCorner(m1, m1) = wl.mat();
  out.topRightCorner(m1, m1) = p.y;
  out.bottomLeftCorner(m1, m1) = p.y.transpose();
  out.bottomRightCorner(m1, m1) = wl.mat();
  return out;
}

double dbbi_bound(const Vector& w, const Matrix& omega_b_mat, double h) {
  return quadratic_over_h(w, omega_b_mat, h);
}

double dsfmb_bound(const Vector& w, const Matrix& omega_f_mat, double h) {
  return quadratic_over_h(w, omega_f_mat, h);
}

double convexified_bound(const Vector& w, const Matrix& omega_k, double h) {
  return quadratic_over_h(w, omega_k, h);
}

}  // namespace delaybounds
