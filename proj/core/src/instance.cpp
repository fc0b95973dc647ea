#include "delaybounds/instance.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace delaybounds {

void InstanceConfig::validate() const {
  if (n < 1) throw InvalidConfig("state dimension n must be >= 1");
  if (nu < 0) throw InvalidConfig("basis order nu must be >= 0");
  if (trials < 1) throw InvalidConfig("trial count must be >= 1");
  if (degree < 0 || degree > VectorPolynomial::kMaxDegree)
    throw InvalidConfig("f degree bound must lie in [0, " +
                        std::to_string(VectorPolynomial::kMaxDegree) + "]");
  if (budget < 0) throw InvalidConfig("search budget must be nonnegative");
}

namespace {

VectorPolynomial random_polynomial(TrialRng& rng, int n, int degree) {
  std::vector<Polynomial> coords;
  coords.reserve(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) {
    std::vector<double> c(static_cast<size_t>(degree) + 1);
    for (double& x : c) x = rng.uniform(-1.0, 1.0);
    coords.emplace_back(std::move(c));
  }
  return VectorPolynomial(std::move(coords));
}

}  // namespace

Instance random_instance(const InstanceConfig& cfg, uint64_t trial) {
  cfg.validate();
  TrialRng rng(cfg.seed, trial);
  const double frac = (cfg.split_fraction > 0.0 && cfg.split_fraction < 1.0)
                          ? cfg.split_fraction
                          : rng.uniform(0.2, 0.8);

  if (cfg.kind == SpaceKind::continuous) {
    const double a = rng.uniform(-2.0, 2.0);
    const double h = rng.uniform(0.5, 3.0);
    const Space d0 = Space::continuous(a, a + h);
    const double c = a + frac * h;
    auto [d1, d2] = d0.split(c);
    VectorPolynomial f = random_polynomial(rng, cfg.n, cfg.degree);
    Matrix w = rng.spd(cfg.n);
    return Instance{d0, d1, d2, Basis::build(d0, cfg.nu), Basis::build(d1, cfg.nu),
                    Basis::build(d2, cfg.nu), std::move(f), std::move(w)};
  }

  const long a = rng.uniform_int(-5, 5);
  const long size1 = cfg.nu + 1 + rng.uniform_int(0, 5);
  const long size2 = cfg.nu + 1 + rng.uniform_int(0, 5);
  const long b = a + size1 + size2 - 1;
  const Space d0 = Space::discrete(a, b);
  auto [d1, d2] = d0.split(static_cast<double>(a + size1));
  VectorPolynomial f = random_polynomial(rng, cfg.n, cfg.degree);
  Matrix w = rng.spd(cfg.n);
  return Instance{d0, d1, d2, Basis::build(d0, cfg.nu), Basis::build(d1, cfg.nu),
                  Basis::build(d2, cfg.nu), std::move(f), std::move(w)};
}

VectorPolynomial random_span_polynomial(TrialRng& rng, const Basis& basis, int n) {
  std::vector<Polynomial> coords;
  coords.reserve(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) {
    Polynomial acc;
    for (int k = 0; k <= basis.order(); ++k) acc = acc + basis.pi(k) * rng.uniform(-1.0, 1.0);
    coords.push_back(std::move(acc));
  }
  return VectorPolynomial(std::move(coords));
}

PsiMatrix random_feasible_psi(TrialRng& rng, int nu, int m, const Matrix& w, double eps) {
  const int total = (nu + 1) * m;
  const Matrix g = rng.matrix(total, total, -1.0, 1.0) / std::sqrt(static_cast<double>(total));
  const Matrix phi = g.transpose() * g + eps * Matrix::Identity(total, total);
  std::vector<Matrix> n_blocks;
  n_blocks.reserve(static_cast<size_t>(nu) + 1);
  for (int k = 0; k <= nu; ++k) n_blocks.push_back(rng.matrix(m, static_cast<int>(w.rows())));
  return PsiMatrix::from_schur(phi, std::move(n_blocks), w);
}

PsiMatrix random_infeasible_psi(TrialRng& rng, int nu, int m, const Matrix& w) {
  const int total = (nu + 1) * m;
  const Matrix g = rng.matrix(total, total, -1.0, 1.0) / std::sqrt(static_cast<double>(total));
  Matrix phi = g.transpose() * g;
  Eigen::SelfAdjointEigenSolver<Matrix> es(phi, Eigen::EigenvaluesOnly);
  phi -= (es.eigenvalues().minCoeff() + 0.5) * Matrix::Identity(total, total);
  std::vector<Matrix> n_blocks;
  n_blocks.reserve(static_cast<size_t>(nu) + 1);
  for (int k = 0; k <= nu; ++k) n_blocks.push_back(rng.matrix(m, static_cast<int>(w.rows())));
  return PsiMatrix::from_schur(phi, std::move(n_blocks), w);
}

}  // namespace delaybounds
