#include "delaybounds/suites.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "delaybounds/relations.hpp"
#include "delaybounds/single_interval.hpp"
#include "delaybounds/two_interval.hpp"
#include "delaybounds/weight_blocks.hpp"

namespace delaybounds {

namespace {

double spectral_norm(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.transpose() * a, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double cond2(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const double lo = svd.singularValues().minCoeff();
  if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
  return svd.singularValues().maxCoeff() / lo;
}

std::string digest_of(const InstanceConfig& cfg) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "n=%d nu=%d kind=%s", cfg.n, cfg.nu,
                cfg.kind == SpaceKind::continuous ? "continuous" : "discrete");
  return buf;
}

// Margin bookkeeping: slack- and eigenvalue-type margins keep their
// minimum over the suite, residual-type margins their maximum.
void track_min(SuiteReport& rep, const std::string& key, double v) {
  auto [it, inserted] = rep.worst_margins.try_emplace(key, v);
  if (!inserted && v < it->second) it->second = v;
}

void track_max(SuiteReport& rep, const std::string& key, double v) {
  auto [it, inserted] = rep.worst_margins.try_emplace(key, v);
  if (!inserted && v > it->second) it->second = v;
}

class Recorder {
 public:
  Recorder(SuiteReport& rep, long trial, std::string digest)
      : rep_(rep), trial_(trial), digest_(std::move(digest)) {}

  /// lhs <= rhs up to relative tolerance; margin = (rhs - lhs) / scale
  void require_leq(const std::string& check, double lhs, double rhs, double tol) {
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    const double margin = (rhs - lhs) / scale;
    track_min(rep_, check, margin);
    if (margin < -tol) rep_.failures.push_back({trial_, check, lhs, rhs, margin, digest_});
  }

  /// |a - b| / scale <= tol
  void require_eq(const std::string& check, double a, double b, double tol) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    const double resid = std::abs(a - b) / scale;
    track_max(rep_, check, resid);
    if (resid > tol) rep_.failures.push_back({trial_, check, a, b, resid, digest_});
  }

  void require_abs(const std::string& check, double resid, double tol) {
    track_max(rep_, check, resid);
    if (resid > tol) rep_.failures.push_back({trial_, check, resid, tol, resid, digest_});
  }

  void require_psd(const std::string& check, const PsdCertificate& cert) {
    const double margin = cert.lambda_min / cert.scale;
    track_min(rep_, check, margin);
    if (!cert.pass)
      rep_.failures.push_back({trial_, check, cert.lambda_min, 0.0, margin, digest_});
  }

  void require_true(const std::string& check, bool ok, double observed, double expected) {
    if (!ok) rep_.failures.push_back({trial_, check, observed, expected, 0.0, digest_});
  }

  void exception(const std::string& what) {
    rep_.failures.push_back({trial_, "exception: " + what, 0.0, 0.0, 0.0, digest_});
  }

 private:
  SuiteReport& rep_;
  long trial_;
  std::string digest_;
};

// Per-trial exception guard: a throwing trial (for example an evaluator
// precondition tripped by an over-tight tolerance override) is recorded
// as a failure rather than aborting the suite.
template <typename Fn>
void guarded_trial(SuiteReport& rep, long trial, const std::string& digest, Fn&& fn) {
  Recorder rec(rep, trial, digest);
  try {
    fn(rec);
  } catch (const Error& e) {
    rec.exception(e.what());
  }
  ++rep.trials;
}

Matrix random_cond_bounded(TrialRng& rng, int size, double max_cond) {
  for (;;) {
    Matrix c = rng.matrix(size, size);
    if (cond2(c) < max_cond) return c;
  }
}

Vector p_moments(const Space& s, const Basis& basis, const Matrix& c, const VectorPolynomial& f) {
  const int n = f.dim();
  const int count = basis.size();
  Vector wt(static_cast<Eigen::Index>(count) * n);
  for (int k = 0; k < count; ++k) {
    Polynomial pk;
    for (int j = 0; j < count; ++j) pk = pk + basis.pi(j) * c(k, j);
    for (int p = 0; p < n; ++p) wt(static_cast<Eigen::Index>(k) * n + p) = s.inner(f[p], pk);
  }
  return wt;
}

Matrix contraction_y(TrialRng& rng, const Matrix& sqrt_w, double s) {
  const int m1 = static_cast<int>(sqrt_w.rows());
  Matrix c = rng.matrix(m1, m1);
  const double nrm = spectral_norm(c);
  if (nrm > 0.0) c *= s / nrm;
  return sqrt_w * c * sqrt_w;
}

ErcParams random_feasible_erc(TrialRng& rng, const WeightLadder& wl, const Matrix& sqrt_w) {
  const Matrix y1 = contraction_y(rng, sqrt_w, rng.uniform(0.0, 0.95));
  const Matrix y2 = contraction_y(rng, sqrt_w, rng.uniform(0.0, 0.95));
  Matrix xh1 = wl.mat() - y1 * wl.inv() * y1.transpose();
  Matrix xh2 = wl.mat() - y2.transpose() * wl.inv() * y2;
  xh1 = 0.5 * (xh1 + xh1.transpose()).eval();
  xh2 = 0.5 * (xh2 + xh2.transpose()).eval();
  return ErcParams{rng.uniform(0.0, 1.0) * xh1, rng.uniform(0.0, 1.0) * xh2, y1, y2};
}

Matrix sqrt_spd(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  return es.operatorSqrt();
}

// Feasibility precondition level used when evaluating bounds on the
// suites' own feasible-by-construction draws; assertion tolerances are
// configurable separately.
constexpr double kFeasTol = 1e-8;

// ---------------------------------------------------------------------
// soundness: every bound stays below the brute-force energy
// ---------------------------------------------------------------------

void suite_soundness(SuiteReport& rep, const InstanceConfig& cfg) {
  const std::string digest = digest_of(cfg);
  const int n = cfg.n;
  const int nu = cfg.nu;
  const int m1 = (nu + 1) * n;

  for (long t = 0; t < cfg.trials; ++t) {
    guarded_trial(rep, t, digest, [&](Recorder& rec) {
      const Instance inst = random_instance(cfg, static_cast<uint64_t>(t));
      TrialRng rng(cfg.seed ^ 0x536f756eull, static_cast<uint64_t>(t));

      const double e0 = exact_energy(inst.d0, inst.f, inst.w);
      const double e1 = exact_energy(inst.d1, inst.f, inst.w);
      const double e2 = exact_energy(inst.d2, inst.f, inst.w);

      // pure single-interval on D0, block size M1
      const MomentVector mv0 = moments(inst.d0, inst.b0, inst.f);
      const WeightBlocks wb0(inst.b0.rho(), inst.w);
      const PsiMatrix psi = random_feasible_psi(rng, nu, m1, inst.w);
      const Vector chi = rng.vector(m1);
      rec.require_leq("gfmb<=exact",
                      gfmb_bound(psi, inst.b0.rho(), chi, mv0.half(Half::first), kFeasTol), e0,
                      cfg.tol.soundness);
      const Matrix n_sq = psi.wide_n();
      rec.require_leq("sgfmb<=exact", sgfmb_bound(n_sq, chi, mv0.stacked(), wb0.cal_inv()), e0,
                      cfg.tol.soundness);
      rec.require_leq("sfmb<=exact", sfmb_bound(n_sq, mv0.stacked(), wb0.cal_inv()), e0,
                      cfg.tol.soundness);
      rec.require_leq("bbi<=exact", bbi_bound(mv0.stacked(), wb0.cal()), e0, cfg.tol.soundness);

      const Matrix c = random_cond_bounded(rng, nu + 1, 100.0);
      const BasisChange bc(c, inst.b0);
      rec.require_leq("ifb-gfmb<=exact",
                      ifb_gfmb_bound(psi, bc, chi, p_moments(inst.d0, inst.b0, c, inst.f),
                                     kFeasTol),
                      e0, cfg.tol.soundness);

      // padded two-interval stack, block size M2, alternating subinterval
      const Half sel = (t % 2 == 0) ? Half::first : Half::second;
      const Basis& bsel = (sel == Half::first) ? inst.b1 : inst.b2;
      const double esel = (sel == Half::first) ? e1 : e2;
      const MomentVector mv2 =
          stack_moments(moments(inst.d1, inst.b1, inst.f), moments(inst.d2, inst.b2, inst.f));
      const WeightBlocks wbs(bsel.rho(), inst.w);
      const PsiMatrix psi2 = random_feasible_psi(rng, nu, 2 * m1, inst.w);
      const Vector chi2 = rng.vector(2 * m1);
      rec.require_leq("gfmb-padded<=exact",
                      gfmb_bound(psi2, bsel.rho(), chi2, mv2.half(sel), kFeasTol), esel,
                      cfg.tol.soundness);
      const Matrix n_pad = padded_free_matrix(psi2.wide_n(), sel);
      rec.require_leq("sgfmb-padded<=exact",
                      sgfmb_bound(n_pad, chi2, mv2.stacked(), wbs.padded_inv(sel)), esel,
                      cfg.tol.soundness);
      rec.require_leq("sfmb-padded<=exact", sfmb_bound(n_pad, mv2.stacked(), wbs.padded_inv(sel)),
                      esel, cfg.tol.soundness);
      rec.require_leq("bbi-padded<=exact", bbi_bound(mv2.half(sel), wbs.cal()), esel,
                      cfg.tol.soundness);

      // two-interval evaluators (continuous geometry only)
      if (cfg.kind == SpaceKind::continuous) {
        const WeightLadder wl(nu, inst.w);
        const SplitGeometry g =
            SplitGeometry::from_interval(inst.d0.lower(), inst.d1.upper(), inst.d0.upper());
        const Vector ws = mv2.stacked();
        rec.require_leq("dbbi<=exact", dbbi_bound(ws, omega_b(g, wl), g.h), e0,
                        cfg.tol.soundness);
        const FmbParams fp{rng.matrix(2 * m1, m1, -0.5, 0.5), rng.matrix(2 * m1, m1, -0.5, 0.5)};
        rec.require_leq("dsfmb<=exact", dsfmb_bound(ws, omega_f(g, fp, wl), g.h), e0,
                        cfg.tol.soundness);
        Matrix omega;
        switch (t % 5) {
          case 0:
            omega = omega_mlsr(g, MlsrParams{rng.matrix(2 * m1, m1), rng.matrix(2 * m1, m1)}, wl);
            break;
          case 1:
            omega = omega_erc(g, random_feasible_erc(rng, wl, sqrt_spd(wl.mat())), wl);
            break;
          case 2:
            omega = omega_serc(
                g, SercParams{rng.matrix(m1, m1, -2, 2), rng.matrix(m1, m1, -2, 2)}, wl);
            break;
          case 3:
            omega = omega_merc(g, MercParams{rng.matrix(m1, m1, -2, 2)}, wl);
            break;
          default:
            omega = omega_rcc(
                g, RccParams{contraction_y(rng, sqrt_spd(wl.mat()), rng.uniform(0.0, 0.95))}, wl);
            break;
        }
        rec.require_leq("convexified<=exact", convexified_bound(ws, omega, g.h), e0,
                        cfg.tol.soundness);
      }
    });
  }
}

// ---------------------------------------------------------------------
// ordering: gfmb <= sgfmb <= bbi for shared parameters
// ---------------------------------------------------------------------

void suite_ordering(SuiteReport& rep, const InstanceConfig& cfg) {
  const std::string digest = digest_of(cfg);
  const int nu = cfg.nu;
  const int m1 = (nu + 1) * cfg.n;

  for (long t = 0; t < cfg.trials; ++t) {
    guarded_trial(rep, t, digest, [&](Recorder& rec) {
      const Instance inst = random_instance(cfg, static_cast<uint64_t>(t));
      TrialRng rng(cfg.seed ^ 0x4f726465ull, static_cast<uint64_t>(t));

      const MomentVector mv0 = moments(inst.d0, inst.b0, inst.f);
      const WeightBlocks wb0(inst.b0.rho(), inst.w);
      const PsiMatrix psi = random_feasible_psi(rng, nu, m1, inst.w);
      const Vector chi = rng.vector(m1);
      const double g = gfmb_bound(psi, inst.b0.rho(), chi, mv0.half(Half::first), kFeasTol);
      const double s = sgfmb_bound(psi.wide_n(), chi, mv0.stacked(), wb0.cal_inv());
      const double b = bbi_bound(mv0.stacked(), wb0.cal());
      rec.require_leq("gfmb<=sgfmb", g, s, cfg.tol.soundness);
      rec.require_leq("sgfmb<=bbi", s, b, cfg.tol.soundness);

      if (t % 2 == 1) {
        const Half sel = (t % 4 == 1) ? Half::first : Half::second;
        const Basis& bsel = (sel == Half::first) ? inst.b1 : inst.b2;
        const MomentVector mv2 =
            stack_moments(moments(inst.d1, inst.b1, inst.f), moments(inst.d2, inst.b2, inst.f));
        const WeightBlocks wbs(bsel.rho(), inst.w);
        const PsiMatrix psi2 = random_feasible_psi(rng, nu, 2 * m1, inst.w);
        const Vector chi2 = rng.vector(2 * m1);
        const double g2 = gfmb_bound(psi2, bsel.rho(), chi2, mv2.half(sel), kFeasTol);
        const Matrix n_pad = padded_free_matrix(psi2.wide_n(), sel);
        const double s2 = sgfmb_bound(n_pad, chi2, mv2.stacked(), wbs.padded_inv(sel));
        const double b2 = bbi_bound(mv2.half(sel), wbs.cal());
        rec.require_leq("gfmb<=sgfmb-padded", g2, s2, cfg.tol.soundness);
        rec.require_leq("sgfmb<=bbi-padded", s2, b2, cfg.tol.soundness);
      }
    });
  }
}

// ---------------------------------------------------------------------
// equivalence-sgfmb-bbi: optimal parameters attain the projection bound
// ---------------------------------------------------------------------

void suite_equivalence_sgfmb_bbi(SuiteReport& rep, const InstanceConfig& cfg) {
  const std::string digest = digest_of(cfg);
  const int n = cfg.n;
  const int nu = cfg.nu;
  const int m1 = (nu + 1) * n;

  for (long t = 0; t < cfg.trials; ++t) {
    guarded_trial(rep, t, digest, [&](Recorder& rec) {
      const Instance inst = random_instance(cfg, static_cast<uint64_t>(t));
      TrialRng rng(cfg.seed ^ 0x45716269ull, static_cast<uint64_t>(t));

      const bool padded = (t % 2 == 1);
      const Half sel = (t % 4 < 2) ? Half::first : Half::second;
      Vector w_full, w_half;
      Matrix what, what_inv;
      std::vector<double> rho;
      if (!padded) {
        const MomentVector mv0 = moments(inst.d0, inst.b0, inst.f);
        const WeightBlocks wb0(inst.b0.rho(), inst.w);
        w_full = mv0.stacked();
        w_half = w_full;
        what = wb0.cal();
        what_inv = wb0.cal_inv();
        rho = inst.b0.rho();
      } else {
        const Basis& bsel = (sel == Half::first) ? inst.b1 : inst.b2;
        const MomentVector mv2 =
            stack_moments(moments(inst.d1, inst.b1, inst.f), moments(inst.d2, inst.b2, inst.f));
        const WeightBlocks wbs(bsel.rho(), inst.w);
        w_full = mv2.stacked();
        w_half = mv2.half(sel);
        what = wbs.padded(sel);
        what_inv = wbs.padded_inv(sel);
        rho = bsel.rho();
      }
      const int m = static_cast<int>(w_full.size());
      const double bb = bbi_bound(w_full, what);

      Vector chi = rng.vector(m);
      while (chi.norm() < 1e-6) chi = rng.vector(m);
      const Matrix n_opt = optimal_bbi_params(w_full, what, chi);
      rec.require_eq("sgfmb-attains-bbi", sgfmb_bound(n_opt, chi, w_full, what_inv), bb,
                     cfg.tol.equality);
      rec.require_abs("optimal-residual", (n_opt.transpose() * chi + what * w_full).norm(), 1e-10);

      // the admissible Z choice Z_kl = N_k W^{-1} N_l^T closes the chain
      const int off = (padded && sel == Half::second) ? m1 : 0;
      std::vector<Matrix> blocks;
      blocks.reserve(static_cast<size_t>(nu) + 1);
      for (int k = 0; k <= nu; ++k)
        blocks.push_back(n_opt.block(0, off + static_cast<Eigen::Index>(k) * n, m, n));
      const Matrix phi0 = Matrix::Zero(static_cast<Eigen::Index>(nu + 1) * m,
                                       static_cast<Eigen::Index>(nu + 1) * m);
      const PsiMatrix psi_opt = PsiMatrix::from_schur(phi0, std::move(blocks), inst.w);
      rec.require_eq("gfmb-attains-bbi", gfmb_bound(psi_opt, rho, chi, w_half, kFeasTol), bb,
                     cfg.tol.equality);

      const Matrix n_w =
          (w_full.norm() > 1e-9) ? optimal_bbi_params(w_full, what, w_full) : Matrix(-what);
      rec.require_eq("sfmb-attains-bbi", sfmb_bound(n_w, w_full, what_inv), bb, cfg.tol.equality);
    });
  }
}

// ---------------------------------------------------------------------
// equivalence-gfmb-ifb: basis-change transport preserves value and PSD
// ---------------------------------------------------------------------

void suite_equivalence_gfmb_ifb(SuiteReport& rep, const InstanceConfig& cfg) {
  const std::string digest = digest_of(cfg);
  const int nu = cfg.nu;
  const int m1 = (nu + 1) * cfg.n;

  for (long t = 0; t < cfg.trials; ++t) {
    guarded_trial(rep, t, digest, [&](Recorder& rec) {
      const Instance inst = random_instance(cfg, static_cast<uint64_t>(t));
      TrialRng rng(cfg.seed ^ 0x49666247ull, static_cast<uint64_t>(t));

      const bool padded = (t % 2 == 1);
      const Half sel = (t % 4 < 2) ? Half::first : Half::second;
      const Space& dom = padded ? ((sel == Half::first) ? inst.d1 : inst.d2) : inst.d0;
      const Basis& basis = padded ? ((sel == Half::first) ? inst.b1 : inst.b2) : inst.b0;
      const int m = padded ? 2 * m1 : m1;

      const PsiMatrix psi = random_feasible_psi(rng, nu, m, inst.w);
      const Vector chi = rng.vector(m);
      const Matrix c = random_cond_bounded(rng, nu + 1, 100.0);
      const BasisChange bc(c, basis);

      const double v_ifb =
          ifb_gfmb_bound(psi, bc, chi, p_moments(dom, basis, c, inst.f), kFeasTol);
      const IfbTransform tr = transform_ifb_to_gfmb(psi, bc, kFeasTol);
      const Vector w_half = moments(dom, basis, inst.f).half(Half::first);
      const double v_gfmb = gfmb_bound(tr.psi_tilde, basis.rho(), chi, w_half, kFeasTol);
      rec.require_eq("transform-value", v_ifb, v_gfmb, cfg.tol.equality);
      // re-certify the transported Psi at the configured margin
      rec.require_psd("transform-psd", psd_check(tr.psi_tilde.assemble(), cfg.tol.psd_margin));
    });
  }
}

// ---------------------------------------------------------------------
// equivalence-sfmb-sgfmb: the chi = eta Q w alignment
// ---------------------------------------------------------------------

void suite_equivalence_sfmb_sgfmb(SuiteReport& rep, const InstanceConfig& cfg) {
  const std::string digest = digest_of(cfg);
  const int nu = cfg.nu;
  const int m1 = (nu + 1) * cfg.n;

  for (long t = 0; t < cfg.trials; ++t) {
    guarded_trial(rep, t, digest, [&](Recorder& rec) {
      const Instance inst = random_instance(cfg, static_cast<uint64_t>(t));
      TrialRng rng(cfg.seed ^ 0x53666d62ull, static_cast<uint64_t>(t));

      const bool padded = (t % 2 == 1);
      const Half sel = (t % 4 < 2) ? Half::first : Half::second;
      Vector w_full;
      Matrix what_inv;
      Matrix n_sq;
      if (!padded) {
        w_full = moments(inst.d0, inst.b0, inst.f).stacked();
        what_inv = WeightBlocks(inst.b0.rho(), inst.w).cal_inv();
        n_sq = rng.matrix(m1, m1);
      } else {
        const Basis& bsel = (sel == Half::first) ? inst.b1 : inst.b2;
        w_full =
            stack_moments(moments(inst.d1, inst.b1, inst.f), moments(inst.d2, inst.b2, inst.f))
                .stacked();
        what_inv = WeightBlocks(bsel.rho(), inst.w).padded_inv(sel);
        n_sq = padded_free_matrix(rng.matrix(2 * m1, m1), sel);
      }
      if (w_full.norm() == 0.0) return;  // probability-zero draw; the w = 0 branch is unit-tested
      Vector chi = rng.vector(static_cast<int>(w_full.size()));
      // exercise the parallel and anti-parallel branches now and then
      if (t % 7 == 3) chi = 2.0 * w_full;
      if (t % 7 == 5) chi = -0.7 * w_full;

      const MomentAlignment al = sfmb_from_sgfmb(chi, n_sq, w_full);
      rec.require_eq("alignment-value", sfmb_bound(al.n_tilde, w_full, what_inv),
                     sgfmb_bound(n_sq, chi, w_full, what_inv), cfg.tol.equality);
      rec.require_abs("alignment-orth",
                      (al.q.transpose() * al.q - Matrix::Identity(al.q.rows(), al.q.cols())).norm(),
                      cfg.tol.orth);
      rec.require_abs("alignment-maps-w",
                      (al.eta * al.q * w_full - chi).norm() / std::max(1.0, chi.norm()),
                      cfg.tol.orth);
    });
  }
}

// ---------------------------------------------------------------------
// schur: the Psi test and the Phi test must agree
// ---------------------------------------------------------------------

void suite_schur(SuiteReport& rep, const InstanceConfig& cfg) {
  const std::string digest = digest_of(cfg);
  const int nu = cfg.nu;
  const int m1 = (nu + 1) * cfg.n;

  for (long t = 0; t < cfg.trials; ++t) {
    guarded_trial(rep, t, digest, [&](Recorder& rec) {
      TrialRng rng(cfg.seed ^ 0x53636872ull, static_cast<uint64_t>(t));
      const Matrix w = rng.spd(cfg.n);
      const int m = (t % 2 == 0) ? m1 : 2 * m1;
      const bool feasible = (t % 5 != 4);
      const PsiMatrix psi =
          feasible ? random_feasible_psi(rng, nu, m, w) : random_infeasible_psi(rng, nu, m, w);
      const PsdCertificate on_psi = psd_check(psi.assemble(), cfg.tol.psd_margin);
      const PsdCertificate on_phi = psd_check(psi.schur_complement(), cfg.tol.psd_margin);
      rec.require_true("schur-agreement", on_psi.pass == on_phi.pass, on_psi.lambda_min,
                       on_phi.lambda_min);
      rec.require_true("schur-expected", on_phi.pass == feasible, on_phi.lambda_min,
                       feasible ? 1.0 : 0.0);
      track_min(rep, feasible ? "feasible-margin" : "infeasible-margin",
                on_phi.lambda_min / on_phi.scale);
    });
  }
}

// ---------------------------------------------------------------------
// two-interval-domination: Omega_B >= Omega_k on the alpha grid
// ---------------------------------------------------------------------

void suite_two_interval_domination(SuiteReport& rep, const InstanceConfig& cfg) {
  const std::string digest = digest_of(cfg);
  const int nu = cfg.nu;
  const int m1 = (nu + 1) * cfg.n;
  constexpr int kGridPoints = 19;
  constexpr int kDrawsPerPoint = 100;

  for (int ai = 1; ai <= kGridPoints; ++ai) {
    const double alpha = 0.05 * ai;
    for (int d = 0; d < kDrawsPerPoint; ++d) {
      const long t = static_cast<long>(ai - 1) * kDrawsPerPoint + d;
      guarded_trial(rep, t, digest, [&](Recorder& rec) {
        TrialRng rng(cfg.seed ^ 0x446f6d69ull, static_cast<uint64_t>(t));
        const Matrix w = rng.spd(cfg.n);
        const WeightLadder wl(nu, w);
        const Matrix sw = sqrt_spd(wl.mat());
        const SplitGeometry g = SplitGeometry::from_alpha(1.0, alpha);
        const Matrix ob = omega_b(g, wl);

        rec.require_psd("dominates-mlsr",
                        psd_check(ob - omega_mlsr(g, MlsrParams{rng.matrix(2 * m1, m1, -2, 2),
                                                                rng.matrix(2 * m1, m1, -2, 2)},
                                                  wl),
                                  cfg.tol.psd_margin));
        rec.require_psd("dominates-erc",
                        psd_check(ob - omega_erc(g, random_feasible_erc(rng, wl, sw), wl),
                                  cfg.tol.psd_margin));
        rec.require_psd("dominates-serc",
                        psd_check(ob - omega_serc(g, SercParams{rng.matrix(m1, m1, -2, 2),
                                                                rng.matrix(m1, m1, -2, 2)},
                                                  wl),
                                  cfg.tol.psd_margin));
        rec.require_psd("dominates-merc",
                        psd_check(ob - omega_merc(g, MercParams{rng.matrix(m1, m1, -2, 2)}, wl),
                                  cfg.tol.psd_margin));
        rec.require_psd(
            "dominates-rcc",
            psd_check(ob - omega_rcc(g, RccParams{contraction_y(rng, sw, rng.uniform(0.0, 0.98))},
                                     wl),
                      cfg.tol.psd_margin));
      });
    }
  }
}

// ---------------------------------------------------------------------
// relations-ABCDE
// ---------------------------------------------------------------------

void suite_relations(SuiteReport& rep, const InstanceConfig& cfg) {
  const std::string digest = digest_of(cfg);
  const int nu = cfg.nu;
  const int m1 = (nu + 1) * cfg.n;

  auto geometry = [](TrialRng& rng) {
    return SplitGeometry::from_alpha(rng.uniform(0.5, 2.5), rng.uniform(0.05, 0.95));
  };

  // (A) exact identity between the free-matrix form and the first
  // convexifier, 200 draws, both substitution directions
  for (long t = 0; t < 200; ++t) {
    guarded_trial(rep, t, digest, [&](Recorder& rec) {
      TrialRng rng(cfg.seed ^ 0x52656c41ull, static_cast<uint64_t>(t));
      const WeightLadder wl(nu, rng.spd(cfg.n));
      const SplitGeometry g = geometry(rng);
      const FmbParams p{rng.matrix(2 * m1, m1, -0.5, 0.5), rng.matrix(2 * m1, m1, -0.5, 0.5)};
      const RelationReport r = check_relation(RelationId::A, p, g, wl, 0, 0);
      rec.require_abs("relation-A-identity", r.worst, cfg.tol.identity);
    });
  }

  // (B) forward: V-stacking reproduces the simplified extended form
  for (long t = 0; t < 200; ++t) {
    guarded_trial(rep, t, digest, [&](Recorder& rec) {
      TrialRng rng(cfg.seed ^ 0x52656c42ull, static_cast<uint64_t>(t));
      const WeightLadder wl(nu, rng.spd(cfg.n));
      const SplitGeometry g = geometry(rng);
      const SercParams p{rng.matrix(m1, m1, -2, 2), rng.matrix(m1, m1, -2, 2)};
      Matrix v1(2 * m1, m1);
      v1.topRows(m1) = wl.mat();
      v1.bottomRows(m1) = p.y2.transpose();
      Matrix v2(2 * m1, m1);
      v2.topRows(m1) = p.y1;
      v2.bottomRows(m1) = wl.mat();
      const Matrix o3 = omega_serc(g, p, wl);
      const double scale = std::max(1.0, o3.cwiseAbs().maxCoeff());
      rec.require_abs("relation-B-stacking",
                      (omega_mlsr(g, MlsrParams{v1, v2}, wl) - o3).cwiseAbs().maxCoeff() / scale,
                      1e-10);
    });
  }

  // (C) domination with shared Y blocks and boundary equality, 500 draws
  for (long t = 0; t < 500; ++t) {
    guarded_trial(rep, t, digest, [&](Recorder& rec) {
      TrialRng rng(cfg.seed ^ 0x52656c43ull, static_cast<uint64_t>(t));
      const WeightLadder wl(nu, rng.spd(cfg.n));
      const SplitGeometry g = geometry(rng);
      const ErcParams p = random_feasible_erc(rng, wl, sqrt_spd(wl.mat()));
      const RelationReport r = check_relation(RelationId::C, p, g, wl, 0, 0);
      rec.require_true("relation-C", r.pass, r.worst, 0.0);
      track_min(rep, "relation-C-margin", r.worst);
    });
  }

  // (D) forward: merged = simplified extended at Y1 = Y2
  for (long t = 0; t < 200; ++t) {
    guarded_trial(rep, t, digest, [&](Recorder& rec) {
      TrialRng rng(cfg.seed ^ 0x52656c44ull, static_cast<uint64_t>(t));
      const WeightLadder wl(nu, rng.spd(cfg.n));
      const SplitGeometry g = geometry(rng);
      const MercParams p{rng.matrix(m1, m1, -2, 2)};
      const Matrix o4 = omega_merc(g, p, wl);
      const double scale = std::max(1.0, o4.cwiseAbs().maxCoeff());
      rec.require_abs("relation-D-merge",
                      (o4 - omega_serc(g, SercParams{p.y, p.y}, wl)).cwiseAbs().maxCoeff() / scale,
                      1e-10);
    });
  }

  // (E) classical form dominated by the merged form, 500 feasible draws
  for (long t = 0; t < 500; ++t) {
    guarded_trial(rep, t, digest, [&](Recorder& rec) {
      TrialRng rng(cfg.seed ^ 0x52656c45ull, static_cast<uint64_t>(t));
      const WeightLadder wl(nu, rng.spd(cfg.n));
      const SplitGeometry g = geometry(rng);
      const RccParams p{contraction_y(rng, sqrt_spd(wl.mat()), rng.uniform(0.0, 0.98))};
      const RelationReport r = check_relation(RelationId::E, p, g, wl, 0, 0);
      rec.require_true("relation-E", r.pass, r.worst, 0.0);
      track_min(rep, "relation-E-margin", r.worst);
    });
  }

  // reverse implications of (B) and (D): witness searches
  guarded_trial(rep, 0, digest, [&](Recorder& rec) {
    TrialRng rng(cfg.seed ^ 0x52656c52ull, 0);
    const WeightLadder wl(nu, rng.spd(cfg.n));
    const SplitGeometry g = SplitGeometry::from_alpha(1.0, 0.5);
    const SercParams sp{rng.matrix(m1, m1), rng.matrix(m1, m1)};
    const RelationReport rb = check_relation(RelationId::B, sp, g, wl, cfg.budget, cfg.seed);
    rec.require_true("relation-B-reverse", rb.pass, rb.reverse ? rb.reverse->quad_neg : 0.0,
                     rb.reverse ? rb.reverse->quad_pos : 0.0);
    const MercParams mp{rng.matrix(m1, m1)};
    const RelationReport rd = check_relation(RelationId::D, mp, g, wl, cfg.budget, cfg.seed);
    rec.require_true("relation-D-reverse", rd.pass, rd.reverse ? rd.reverse->quad_neg : 0.0,
                     rd.reverse ? rd.reverse->quad_pos : 0.0);
  });
}

// ---------------------------------------------------------------------
// counterexamples-BD
// ---------------------------------------------------------------------

void suite_counterexamples(SuiteReport& rep, const InstanceConfig& cfg) {
  const std::string digest = digest_of(cfg);
  long t = 0;
  for (int nu : {0, 1}) {
    for (const SearchKind kind : {SearchKind::B, SearchKind::D}) {
      guarded_trial(rep, t, digest, [&](Recorder& rec) {
        SearchConfig sc;
        sc.n = 1;
        sc.nu = nu;
        sc.margin = cfg.tol.witness_margin;
        const SearchOutcome out = counterexample_search(kind, cfg.seed, cfg.budget, sc);
        const std::string name =
            std::string(kind == SearchKind::B ? "witness-B-nu" : "witness-D-nu") +
            std::to_string(nu);
        if (!out.found) {
          // exhausted: reported as such, never as a refutation
          rec.require_true(name + "-exhausted", false, static_cast<double>(out.trials_used),
                           static_cast<double>(cfg.budget));
        } else {
          rec.require_leq(name + "-neg", out.quad_neg, -cfg.tol.witness_margin, 0.0);
          rec.require_leq(name + "-pos", cfg.tol.witness_margin, out.quad_pos, 0.0);
          track_min(rep, name + "-trials", static_cast<double>(out.trials_used));
        }
      });
      ++t;
    }
  }
}

// ---------------------------------------------------------------------
// bessel-span-tightness
// ---------------------------------------------------------------------

void suite_bessel_span(SuiteReport& rep, const InstanceConfig& cfg) {
  const std::string digest = digest_of(cfg);

  for (long t = 0; t < cfg.trials; ++t) {
    guarded_trial(rep, t, digest, [&](Recorder& rec) {
      if (t == 0 && cfg.kind == SpaceKind::continuous && cfg.n == 2) {
        // the worked case: f = (t, 1) on [0, 1] with nu = 1, W = I
        const Space s = Space::continuous(0.0, 1.0);
        const Basis basis = Basis::build(s, 1);
        const VectorPolynomial f({Polynomial({0.0, 1.0}), Polynomial({1.0})});
        const Matrix w = Matrix::Identity(2, 2);
        const double exact = exact_energy(s, f, w);
        const double bb =
            bbi_bound(moments(s, basis, f).stacked(), WeightBlocks(basis.rho(), w).cal());
        rec.require_eq("worked-case-exact", exact, 4.0 / 3.0, cfg.tol.tight);
        rec.require_eq("worked-case-bbi", bb, 4.0 / 3.0, cfg.tol.tight);
        return;
      }
      const Instance inst = random_instance(cfg, static_cast<uint64_t>(t));
      TrialRng rng(cfg.seed ^ 0x42657373ull, static_cast<uint64_t>(t));
      const VectorPolynomial f = random_span_polynomial(rng, inst.b0, cfg.n);
      const double e = exact_energy(inst.d0, f, inst.w);
      const double bb = bbi_bound(moments(inst.d0, inst.b0, f).stacked(),
                                  WeightBlocks(inst.b0.rho(), inst.w).cal());
      rec.require_eq("span-tightness", bb, e, cfg.tol.tight);
    });
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "soundness",
      "ordering",
      "equivalence-gfmb-ifb",
      "equivalence-sgfmb-bbi",
      "equivalence-sfmb-sgfmb",
      "schur",
      "two-interval-domination",
      "relations-ABCDE",
      "counterexamples-BD",
      "bessel-span-tightness",
  };
  return names;
}

SuiteReport run_suite(std::string_view id, const InstanceConfig& cfg) {
  cfg.validate();
  SuiteReport rep;
  rep.suite = std::string(id);
  rep.seed = cfg.seed;
  rep.n = cfg.n;
  rep.nu = cfg.nu;
  rep.kind = cfg.kind == SpaceKind::continuous ? "continuous" : "discrete";

  const auto start = std::chrono::steady_clock::now();
  if (id == "soundness")
    suite_soundness(rep, cfg);
  else if (id == "ordering")
    suite_ordering(rep, cfg);
  else if (id == "equivalence-gfmb-ifb")
    suite_equivalence_gfmb_ifb(rep, cfg);
  else if (id == "equivalence-sgfmb-bbi")
    suite_equivalence_sgfmb_bbi(rep, cfg);
  else if (id == "equivalence-sfmb-sgfmb")
    suite_equivalence_sfmb_sgfmb(rep, cfg);
  else if (id == "schur")
    suite_schur(rep, cfg);
  else if (id == "two-interval-domination")
    suite_two_interval_domination(rep, cfg);
  else if (id == "relations-ABCDE")
    suite_relations(rep, cfg);
  else if (id == "counterexamples-BD")
    suite_counterexamples(rep, cfg);
  else if (id == "bessel-span-tightness")
    suite_bessel_span(rep, cfg);
  else
    throw UnknownSuite("unknown suite id: " + std::string(id));
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace delaybounds
