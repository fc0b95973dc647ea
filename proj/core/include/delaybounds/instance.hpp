#ifndef DELAYBOUNDS_INSTANCE_HPP
#define DELAYBOUNDS_INSTANCE_HPP

#include <cstdint>

#include "delaybounds/moments.hpp"
#include "delaybounds/psi_matrix.hpp"
#include "delaybounds/trial_rng.hpp"

namespace delaybounds {

/// Comparison tolerances used throughout the suites. Soundness and
/// ordering checks are relative at 1e-9; proof-asserted equalities
/// certify at 1e-8; PSD margins allow -1e-8 * scale.
struct Tolerances {
  double soundness = 1e-9;
  double equality = 1e-8;
  double psd_margin = 1e-8;
  double identity = 1e-12;
  double tight = 1e-10;
  double orth = 1e-10;
  double witness_margin = 1e-6;
};

struct InstanceConfig {
  int n = 2;
  int nu = 1;
  SpaceKind kind = SpaceKind::continuous;
  /// split point as a fraction of the interval; outside (0, 1) means a
  /// random fraction in [0.2, 0.8] per trial
  double split_fraction = 0.0;
  /// degree bound for the random vector polynomial f
  int degree = 4;
  uint64_t seed = 1;
  long trials = 200;
  long budget = 10000;
  Tolerances tol;

  void validate() const;
};

/// One randomized test instance: a split domain with per-subdomain
/// orthogonal bases, a polynomial f and an SPD state weight W.
struct Instance {
  Space d0;
  Space d1;
  Space d2;
  Basis b0;
  Basis b1;
  Basis b2;
  VectorPolynomial f;
  Matrix w;
};

/// Deterministic in (cfg.seed, trial): identical inputs reproduce the
/// instance exactly.
Instance random_instance(const InstanceConfig& cfg, uint64_t trial);

/// f with every coordinate inside span{Pi_0..Pi_nu} of the given basis.
VectorPolynomial random_span_polynomial(TrialRng& rng, const Basis& basis, int n);

/// Feasible Psi by the Schur route: draw Phi = G^T G + eps I, draw the
/// N blocks freely, and set Z_kl = Phi_kl + N_k W^{-1} N_l^T.
PsiMatrix random_feasible_psi(TrialRng& rng, int nu, int m, const Matrix& w, double eps = 1e-6);

/// Same construction with the Phi spectrum shifted so that
/// lambda_min(Phi) = -0.5: deliberately infeasible.
PsiMatrix random_infeasible_psi(TrialRng& rng, int nu, int m, const Matrix& w);

}  // namespace delaybounds

#endif
