#include "delaybounds/psd.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "delaybounds/errors.hpp"

namespace delaybounds {

PsdCertificate psd_check(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols())
    throw NotSquare("psd_check needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()));
  const Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  PsdCertificate cert;
  cert.tol = tol;
  cert.lambda_min = es.eigenvalues().minCoeff();
  cert.lambda_max = es.eigenvalues().maxCoeff();
  cert.scale = std::max(1.0, std::max(std::abs(cert.lambda_min), std::abs(cert.lambda_max)));
  if (asym > tol * cert.scale)
    throw NotSymmetric("matrix asymmetry " + std::to_string(asym) + " exceeds tolerance");
  cert.pass = cert.lambda_min >= -tol * cert.scale;
  return cert;
}

}  // namespace delaybounds
