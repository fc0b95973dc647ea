#ifndef DELAYBOUNDS_TWO_INTERVAL_HPP
#define DELAYBOUNDS_TWO_INTERVAL_HPP

#include <variant>

#include "delaybounds/errors.hpp"
#include "delaybounds/linalg.hpp"
#include "delaybounds/psd.hpp"

namespace delaybounds {

/// Lengths and ratios of a split interval: h = b-a, h1 = c-a, h2 = b-c,
/// alpha = h1/h, beta = 1 - alpha.
struct SplitGeometry {
  double h = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double alpha = 0.0;
  double beta = 0.0;

  static SplitGeometry from_interval(double a, double c, double b);
  static SplitGeometry from_alpha(double h, double alpha);
};

/// The interval-free weight ladder calW = diag{1, 3, ..., 2 nu + 1} (x) W
/// (size M_1) together with its inverse.
class WeightLadder {
 public:
  WeightLadder(int nu, const Matrix& w);

  int order() const { return nu_; }
  int n() const { return static_cast<int>(w_.rows()); }
  int m1() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }
  const Matrix& inv() const { return inv_; }
  const Matrix& w() const { return w_; }

 private:
  int nu_;
  Matrix w_;
  Matrix mat_;
  Matrix inv_;
};

/// Per-variant free parameters of the convexified two-interval bounds.
struct MlsrParams {
  Matrix v1, v2;  // M2 x M1
};
struct ErcParams {
  Matrix x1, x2;  // M1 x M1 symmetric
  Matrix y1, y2;  // M1 x M1
};
struct SercParams {
  Matrix y1, y2;  // M1 x M1
};
struct MercParams {
  Matrix y;  // M1 x M1
};
struct RccParams {
  Matrix y;  // M1 x M1
};
struct FmbParams {
  Matrix n1hat, n2hat;  // M2 x M1
};
using OmegaParams = std::variant<MlsrParams, ErcParams, SercParams, MercParams, RccParams, FmbParams>;

/// diag(calW/alpha, calW/beta). Guards the 1/alpha, 1/beta singularities:
/// alpha must stay in [1e-6, 1 - 1e-6].
Matrix omega_b(const SplitGeometry& g, const WeightLadder& wl);

/// The free-matrix form: He([-h N1, 0] + [0, -h N2])
/// - h^2 alpha N1 calW^{-1} N1^T - h^2 beta N2 calW^{-1} N2^T,
/// which coincides elementwise with omega_mlsr(g, -h N1, -h N2).
Matrix omega_f(const SplitGeometry& g, const FmbParams& p, const WeightLadder& wl);

/// He([V1, 0] + [0, V2]) - alpha V1 calW^{-1} V1^T - beta V2 calW^{-1} V2^T
/// with arbitrary V1, V2; always dominated by omega_b.
Matrix omega_mlsr(const SplitGeometry& g, const MlsrParams& p, const WeightLadder& wl);

/// Endpoint feasibility condition for the extended reciprocally convex
/// parameters: diag(calW, calW) - alpha [[X1, Y1], [Y1^T, 0]]
/// - beta [[0, Y2], [Y2^T, X2]] >= 0 at alpha = 0 and alpha = 1. By
/// affineness in alpha this certifies the whole range.
struct ErcFeasibility {
  PsdCertificate at_alpha0;
  PsdCertificate at_alpha1;
  bool pass = false;
};

ErcFeasibility erc_feasible(const ErcParams& p, const WeightLadder& wl, double tol = 1e-8);

/// [[calW + beta X1, alpha Y1 + beta Y2], [*, calW + alpha X2]];
/// requires erc_feasible, else throws InfeasibleParams.
Matrix omega_erc(const SplitGeometry& g, const ErcParams& p, const WeightLadder& wl,
                 double tol = 1e-8);

/// The simplified extended form: X1, X2 replaced by their feasibility
/// boundary values Xh1 = calW - Y1 calW^{-1} Y1^T and
/// Xh2 = calW - Y2^T calW^{-1} Y2; valid for arbitrary Y1, Y2.
Matrix omega_serc(const SplitGeometry& g, const SercParams& p, const WeightLadder& wl);

/// The merged form omega_serc with Y1 = Y2 = Y and constant off-diagonal Y.
Matrix omega_merc(const SplitGeometry& g, const MercParams& p, const WeightLadder& wl);

/// The classical reciprocally convex form [[calW, Y], [Y^T, calW]],
/// constant in alpha; Y must satisfy the endpoint condition with
/// X1 = X2 = 0, else InfeasibleParams.
Matrix omega_rcc(const SplitGeometry& g, const RccParams& p, const WeightLadder& wl,
                 double tol = 1e-8);

/// (1/h) w^T Omega w for the stacked two-interval moment vector.
double dbbi_bound(const Vector& w, const Matrix& omega_b_mat, double h);
double dsfmb_bound(const Vector& w, const Matrix& omega_f_mat, double h);
double convexified_bound(const Vector& w, const Matrix& omega_k, double h);

}  // namespace delaybounds

#endif
