#include "delaybounds/basis.hpp"

#include <cmath>
#include <string>

namespace delaybounds {

namespace {

// Standard Legendre polynomials P_0..P_nu on [-1, 1] via the three-term
// recurrence (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}.
std::vector<Polynomial> legendre(int nu) {
  std::vector<Polynomial> p;
  p.reserve(static_cast<size_t>(nu) + 1);
  p.push_back(Polynomial::constant(1.0));
  if (nu >= 1) p.push_back(Polynomial::monomial(1));
  for (int k = 1; k < nu; ++k) {
    Polynomial next = (Polynomial::monomial(1) * p.back()) * (2.0 * k + 1.0) -
                      p[static_cast<size_t>(k) - 1] * static_cast<double>(k);
    p.push_back(next * (1.0 / (k + 1.0)));
  }
  return p;
}

}  // namespace

Basis Basis::build(const Space& s, int nu) {
  if (nu < 0) throw InvalidConfig("basis order must be nonnegative");

  if (s.kind() == SpaceKind::continuous) {
    const double a = s.lower();
    const double h = s.upper() - a;
    // P_k(2u - 1) on the unit frame u = (t - a)/h has small integer
    // coefficients, so the stored representation is exact for the
    // supported orders; the norm-squares are h/(2k+1) in closed form
    std::vector<Polynomial> funcs;
    std::vector<double> rho;
    funcs.reserve(static_cast<size_t>(nu) + 1);
    for (const Polynomial& p : legendre(nu)) {
      const Polynomial unit = p.compose_affine(2.0, -1.0);
      funcs.push_back(Polynomial::in_frame(unit.coeffs(), a, h));
    }
    for (int k = 0; k <= nu; ++k) rho.push_back(h / (2.0 * k + 1.0));
    return Basis(s, std::move(funcs), std::move(rho));
  }

  const long points = static_cast<long>(s.measure());
  if (points < nu + 1)
    throw DegenerateBasis("discrete domain with " + std::to_string(points) +
                          " points cannot carry an orthogonal system of order " +
                          std::to_string(nu));
  // monic Gram-Schmidt on monomials of u = t - mid, with one
  // re-orthogonalization pass; the centered frame keeps coefficients
  // well conditioned on ranges away from zero
  const double mid = 0.5 * (s.lower() + s.upper());
  auto centered_monomial = [&](int k) {
    std::vector<double> v(static_cast<size_t>(k) + 1, 0.0);
    v.back() = 1.0;
    return Polynomial::in_frame(std::move(v), mid, 1.0);
  };
  std::vector<Polynomial> funcs;
  std::vector<double> rho;
  funcs.push_back(centered_monomial(0));
  rho.push_back(s.inner(funcs[0], funcs[0]));
  for (int k = 1; k <= nu; ++k) {
    Polynomial v = centered_monomial(k);
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j < k; ++j) {
        const double proj = s.inner(v, funcs[static_cast<size_t>(j)]) / rho[static_cast<size_t>(j)];
        v = v - funcs[static_cast<size_t>(j)] * proj;
      }
    }
    const double nrm2 = s.inner(v, v);
    if (!(nrm2 > 0.0))
      throw DegenerateBasis("orthogonalization collapsed at order " + std::to_string(k));
    funcs.push_back(v);
    rho.push_back(nrm2);
  }
  return Basis(s, std::move(funcs), std::move(rho));
}

}  // namespace delaybounds
