#ifndef DELAYBOUNDS_PSD_HPP
#define DELAYBOUNDS_PSD_HPP

#include <Eigen/Dense>

namespace delaybounds {

/// Outcome of a minimum-eigenvalue positive-semidefiniteness test.
struct PsdCertificate {
  bool pass = false;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  /// max(1, ||A||_2); the pass threshold is -tol * scale.
  double scale = 1.0;
  double tol = 0.0;
};

/// Certify A >= 0 by its minimum eigenvalue: pass iff
/// lambda_min(A) >= -tol * max(1, ||A||_2). The input is symmetrized as
/// (A + A^T)/2; asymmetry beyond tol * scale is rejected.
PsdCertificate psd_check(const Eigen::MatrixXd& a, double tol = 1e-8);

}  // namespace delaybounds

#endif
