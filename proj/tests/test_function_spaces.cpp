#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "delaybounds/basis.hpp"
#include "delaybounds/instance.hpp"
#include "delaybounds/moments.hpp"
#include "delaybounds/space.hpp"

using namespace delaybounds;

namespace {

double rel_err(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

TEST_CASE("space construction and counting measure") {
  const Space unit = Space::continuous(0.0, 1.0);
  CHECK(unit.inner(Polynomial::constant(1.0), Polynomial::constant(1.0)) == doctest::Approx(1.0));

  const Space range = Space::discrete(0, 4);
  CHECK(range.inner(Polynomial::constant(1.0), Polynomial::constant(1.0)) == doctest::Approx(5.0));

  CHECK_THROWS_AS(Space::continuous(1.0, 0.0), InvalidInterval);
  CHECK_THROWS_AS(Space::continuous(0.0, 0.0), InvalidInterval);
  CHECK_THROWS_AS(Space::discrete(3, 1), InvalidInterval);
}

TEST_CASE("splits preserve the measure and reject degenerate points") {
  const Space unit = Space::continuous(0.0, 1.0);
  auto [left, right] = unit.split(0.5);
  const Polynomial one = Polynomial::constant(1.0);
  CHECK(left.inner(one, one) + right.inner(one, one) == doctest::Approx(1.0));

  const Space range = Space::discrete(0, 9);
  auto [lo, hi] = range.split(4.0);
  CHECK(lo.inner(one, one) == doctest::Approx(4.0));
  CHECK(hi.inner(one, one) == doctest::Approx(6.0));

  CHECK_THROWS_AS(unit.split(1.0), InvalidSplit);
  CHECK_THROWS_AS(unit.split(0.0), InvalidSplit);
  CHECK_THROWS_AS(range.split(0.0), InvalidSplit);  // empty first half
  CHECK_THROWS_AS(range.split(4.5), InvalidSplit);  // non-integer
}

TEST_CASE("inner products are exact on monomials") {
  const Space unit = Space::continuous(0.0, 1.0);
  const Polynomial t = Polynomial::monomial(1);
  CHECK(unit.inner(t, t) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(unit.inner(Polynomial({-1.0, 2.0}), Polynomial::constant(1.0)) ==
        doctest::Approx(0.0).epsilon(1e-14));

  const Space range = Space::discrete(0, 2);
  CHECK(range.inner(t, t) == doctest::Approx(5.0));
}

TEST_CASE("legendre basis on the unit interval") {
  const Space unit = Space::continuous(0.0, 1.0);
  const Basis b = Basis::build(unit, 2);
  CHECK(b.order() == 2);
  // Pi = {1, 2t-1, 6t^2-6t+1}
  CHECK(b.pi(0).coeff(0) == doctest::Approx(1.0));
  CHECK(b.pi(1).coeff(0) == doctest::Approx(-1.0));
  CHECK(b.pi(1).coeff(1) == doctest::Approx(2.0));
  CHECK(b.pi(2).coeff(0) == doctest::Approx(1.0));
  CHECK(b.pi(2).coeff(1) == doctest::Approx(-6.0));
  CHECK(b.pi(2).coeff(2) == doctest::Approx(6.0));
  CHECK(b.rho(0) == doctest::Approx(1.0));
  CHECK(b.rho(1) == doctest::Approx(1.0 / 3.0));
  CHECK(b.rho(2) == doctest::Approx(1.0 / 5.0));

  const Basis b0 = Basis::build(Space::continuous(0.0, 2.0), 0);
  CHECK(b0.rho(0) == doctest::Approx(2.0));
}

TEST_CASE("discrete basis by re-orthogonalized Gram-Schmidt") {
  const Space range = Space::discrete(0, 3);
  const Basis b = Basis::build(range, 1);
  // Pi_1(t) = t - 1.5, monic in the centered frame
  CHECK(b.pi(1).coeff(1) == doctest::Approx(1.0));
  CHECK(b.pi(1)(0.0) == doctest::Approx(-1.5));
  CHECK(b.pi(1)(3.0) == doctest::Approx(1.5));
  CHECK(b.rho(1) == doctest::Approx(5.0));

  CHECK_THROWS_AS(Basis::build(Space::discrete(0, 1), 2), DegenerateBasis);
}

TEST_CASE("moments of the worked polynomial") {
  const Space unit = Space::continuous(0.0, 1.0);
  const Basis b = Basis::build(unit, 1);
  const VectorPolynomial f({Polynomial({0.0, 1.0}), Polynomial({1.0})});
  const MomentVector mv = moments(unit, b, f);
  CHECK(mv.block(Half::first, 0)(0) == doctest::Approx(0.5));
  CHECK(mv.block(Half::first, 0)(1) == doctest::Approx(1.0));
  CHECK(mv.block(Half::first, 1)(0) == doctest::Approx(1.0 / 6.0));
  CHECK(mv.block(Half::first, 1)(1) == doctest::Approx(0.0));

  const MomentVector zero = moments(unit, b, VectorPolynomial::zero(2));
  CHECK(zero.stacked().norm() == doctest::Approx(0.0));

  const Space range = Space::discrete(0, 4);
  const Basis b0 = Basis::build(range, 0);
  const MomentVector ones = moments(range, b0, VectorPolynomial({Polynomial::constant(1.0)}));
  CHECK(ones.stacked()(0) == doctest::Approx(5.0));

  CHECK_THROWS_AS(moments(range, b, f), DimensionMismatch);
}

TEST_CASE("stacked moment order is col{w1, w2}") {
  const Space unit = Space::continuous(0.0, 1.0);
  auto [d1, d2] = unit.split(0.5);
  const Basis b1 = Basis::build(d1, 1);
  const Basis b2 = Basis::build(d2, 1);
  const VectorPolynomial f({Polynomial({0.0, 1.0})});
  const MomentVector two = stack_moments(moments(d1, b1, f), moments(d2, b2, f));
  const Vector s = two.stacked();
  REQUIRE(s.size() == 4);
  CHECK(s.head(2) == two.half(Half::first));
  CHECK(s.tail(2) == two.half(Half::second));
  CHECK(two.block(Half::second, 0)(0) == doctest::Approx(0.375));  // integral of t over [1/2, 1]
}

TEST_CASE("energy oracle") {
  const Space unit = Space::continuous(0.0, 1.0);
  const Matrix eye = Matrix::Identity(2, 2);
  CHECK(exact_energy(unit, VectorPolynomial({Polynomial({0.0, 1.0}), Polynomial({1.0})}), eye) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(exact_energy(unit, VectorPolynomial::zero(2), eye) == doctest::Approx(0.0));
  CHECK(exact_energy(unit, VectorPolynomial({Polynomial({0.0, 0.0, 1.0}), Polynomial()}), eye) ==
        doctest::Approx(0.2).epsilon(1e-14));
  CHECK_THROWS_AS(exact_energy(unit, VectorPolynomial::zero(2), Matrix::Identity(3, 3)),
                  DimensionMismatch);
}

TEST_CASE("energy additivity across splits") {
  InstanceConfig cfg;
  cfg.seed = 11;
  cfg.degree = 6;
  for (int kindsel = 0; kindsel < 2; ++kindsel) {
    cfg.kind = kindsel == 0 ? SpaceKind::continuous : SpaceKind::discrete;
    for (uint64_t t = 0; t < 100; ++t) {
      const Instance inst = random_instance(cfg, t);
      const double whole = exact_energy(inst.d0, inst.f, inst.w);
      const double parts =
          exact_energy(inst.d1, inst.f, inst.w) + exact_energy(inst.d2, inst.f, inst.w);
      CHECK(rel_err(whole, parts) <= 1e-12);
    }
  }
}

TEST_CASE("orthogonality up to order six") {
  TrialRng rng(99, 0);
  for (int trial = 0; trial < 40; ++trial) {
    const double a = rng.uniform(-3.0, 3.0);
    const double h = rng.uniform(0.4, 5.0);
    const Space s = Space::continuous(a, a + h);
    const Basis b = Basis::build(s, 6);
    for (int k = 0; k <= 6; ++k) {
      for (int l = k + 1; l <= 6; ++l) {
        const double ip = s.inner(b.pi(k), b.pi(l));
        CHECK(std::abs(ip) <= 1e-10 * std::sqrt(b.rho(k) * b.rho(l)));
      }
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    const long a = rng.uniform_int(-6, 6);
    const long count = rng.uniform_int(7, 30);
    const Space s = Space::discrete(a, a + count - 1);
    const Basis b = Basis::build(s, 6);
    for (int k = 0; k <= 6; ++k)
      for (int l = k + 1; l <= 6; ++l)
        CHECK(std::abs(s.inner(b.pi(k), b.pi(l))) <= 1e-10 * std::sqrt(b.rho(k) * b.rho(l)));
  }
}

TEST_CASE("continuous norm-square law rho_k = h/(2k+1)") {
  TrialRng rng(7, 1);
  for (int trial = 0; trial < 40; ++trial) {
    const double a = rng.uniform(-3.0, 3.0);
    const double h = rng.uniform(0.4, 5.0);
    const Space s = Space::continuous(a, a + h);
    const Basis b = Basis::build(s, 6);
    for (int k = 0; k <= 6; ++k) {
      const double computed = s.inner(b.pi(k), b.pi(k));
      const double analytic = h / (2.0 * k + 1.0);
      CHECK(rel_err(computed, analytic) <= 1e-10);
      CHECK(b.rho(k) == doctest::Approx(analytic));
    }
  }
}

TEST_CASE("projection truncation never exceeds the identity-weight energy") {
  // 1000 random polynomials of degree above the basis order
  InstanceConfig cfg;
  cfg.seed = 21;
  cfg.n = 2;
  for (uint64_t t = 0; t < 1000; ++t) {
    TrialRng rng(21, t);
    cfg.nu = static_cast<int>(rng.uniform_int(0, 3));
    cfg.degree = cfg.nu + 1 + static_cast<int>(rng.uniform_int(0, 4));
    cfg.kind = (t % 2 == 0) ? SpaceKind::continuous : SpaceKind::discrete;
    const Instance inst = random_instance(cfg, t);
    const MomentVector mv = moments(inst.d0, inst.b0, inst.f);
    double truncated = 0.0;
    for (int k = 0; k <= cfg.nu; ++k)
      truncated += mv.block(Half::first, k).squaredNorm() / inst.b0.rho(k);
    const double full = exact_energy(inst.d0, inst.f, Matrix::Identity(cfg.n, cfg.n));
    CHECK(truncated <= full + 1e-9 * std::max(1.0, full));
  }
}

TEST_CASE("degree cap is enforced") {
  std::vector<double> coeffs(14, 1.0);  // degree 13
  CHECK_THROWS_AS(VectorPolynomial({Polynomial(coeffs)}), InvalidConfig);
  std::vector<double> ok(13, 1.0);  // degree 12
  CHECK_NOTHROW(VectorPolynomial({Polynomial(ok)}));
}

TEST_CASE("polynomial algebra basics") {
  const Polynomial p({1.0, 2.0});        // 1 + 2t
  const Polynomial q({0.0, 0.0, 3.0});   // 3t^2
  CHECK((p * q).coeff(3) == doctest::Approx(6.0));
  CHECK((p + q)(2.0) == doctest::Approx(1.0 + 4.0 + 12.0));
  const Polynomial shifted = q.compose_affine(2.0, -1.0);  // 3(2t-1)^2
  CHECK(shifted(1.0) == doctest::Approx(3.0));
  CHECK(shifted(0.5) == doctest::Approx(0.0));
}
