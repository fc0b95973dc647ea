#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "delaybounds/instance.hpp"
#include "delaybounds/moments.hpp"
#include "delaybounds/relations.hpp"
#include "delaybounds/two_interval.hpp"
#include "delaybounds/weight_blocks.hpp"
#include "delaybounds/single_interval.hpp"

using namespace delaybounds;

namespace {

Matrix kron_ladder_expected(int nu, const Matrix& w) {
  const int n = static_cast<int>(w.rows());
  Matrix out = Matrix::Zero((nu + 1) * n, (nu + 1) * n);
  for (int k = 0; k <= nu; ++k) out.block(k * n, k * n, n, n) = (2.0 * k + 1.0) * w;
  return out;
}

}  // namespace

TEST_CASE("split geometry invariants") {
  const SplitGeometry g = SplitGeometry::from_interval(0.0, 0.25, 1.0);
  CHECK(g.h == doctest::Approx(1.0));
  CHECK(g.alpha == doctest::Approx(0.25));
  CHECK(g.beta == doctest::Approx(0.75));
  CHECK(g.alpha + g.beta == doctest::Approx(1.0));
  CHECK(g.h1 + g.h2 == doctest::Approx(g.h));

  CHECK_THROWS_AS(SplitGeometry::from_interval(0.0, 0.0, 1.0), InvalidSplit);
  CHECK_THROWS_AS(SplitGeometry::from_alpha(1.0, 0.0), InvalidSplit);
  CHECK_THROWS_AS(SplitGeometry::from_alpha(1.0, 1.0), InvalidSplit);
  CHECK_THROWS_AS(SplitGeometry::from_alpha(0.0, 0.5), InvalidSplit);
}

TEST_CASE("weight ladder structure") {
  TrialRng rng(1, 0);
  const Matrix w = rng.spd(2);
  const WeightLadder wl(2, w);
  CHECK(wl.m1() == 6);
  CHECK((wl.mat() - kron_ladder_expected(2, w)).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((wl.mat() * wl.inv() - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK_THROWS_AS(WeightLadder(0, (Matrix(1, 1) << 0.0).finished()), NotPositiveDefinite);
}

TEST_CASE("omega_b block diagonal") {
  const Matrix w = Matrix::Identity(2, 2);
  const WeightLadder wl(0, w);  // ladder = I2

  const Matrix half = omega_b(SplitGeometry::from_alpha(1.0, 0.5), wl);
  CHECK((half - 2.0 * Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-14);

  const Matrix quarter = omega_b(SplitGeometry::from_alpha(1.0, 0.25), wl);
  CHECK(quarter.topLeftCorner(2, 2) == 4.0 * Matrix::Identity(2, 2));
  CHECK((quarter.bottomRightCorner(2, 2) - (4.0 / 3.0) * Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() <= 1e-14);

  CHECK_THROWS_AS(omega_b(SplitGeometry::from_alpha(1.0, 1e-9), wl), AlphaOutOfRange);
}

TEST_CASE("omega_f vanishes at zero free blocks and matches the reparameterization") {
  TrialRng rng(2, 0);
  const WeightLadder wl(1, rng.spd(2));
  const int m1 = wl.m1();
  const SplitGeometry g = SplitGeometry::from_alpha(1.7, 0.3);

  const Matrix zero = omega_f(g, FmbParams{Matrix::Zero(2 * m1, m1), Matrix::Zero(2 * m1, m1)}, wl);
  CHECK(zero.cwiseAbs().maxCoeff() == doctest::Approx(0.0));

  for (uint64_t t = 0; t < 200; ++t) {
    TrialRng draw(2, t + 1);
    const FmbParams p{draw.matrix(2 * m1, m1, -0.5, 0.5), draw.matrix(2 * m1, m1, -0.5, 0.5)};
    const SplitGeometry gt = SplitGeometry::from_alpha(draw.uniform(0.5, 2.5),
                                                       draw.uniform(0.05, 0.95));
    const Matrix of = omega_f(gt, p, wl);
    const Matrix o1 = omega_mlsr(gt, MlsrParams{-gt.h * p.n1hat, -gt.h * p.n2hat}, wl);
    CHECK((of - o1).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("omega_mlsr degenerate and stacked parameters") {
  TrialRng rng(3, 0);
  const WeightLadder wl(1, rng.spd(2));
  const int m1 = wl.m1();
  const SplitGeometry g = SplitGeometry::from_alpha(1.0, 0.35);

  CHECK(omega_mlsr(g, MlsrParams{Matrix::Zero(2 * m1, m1), Matrix::Zero(2 * m1, m1)}, wl)
            .cwiseAbs()
            .maxCoeff() == doctest::Approx(0.0));

  // V1 = [calW; Y2^T], V2 = [Y1; calW] reproduces the simplified extended form
  const Matrix y1 = rng.matrix(m1, m1, -2.0, 2.0);
  const Matrix y2 = rng.matrix(m1, m1, -2.0, 2.0);
  Matrix v1(2 * m1, m1);
  v1.topRows(m1) = wl.mat();
  v1.bottomRows(m1) = y2.transpose();
  Matrix v2(2 * m1, m1);
  v2.topRows(m1) = y1;
  v2.bottomRows(m1) = wl.mat();
  const Matrix diff = omega_mlsr(g, MlsrParams{v1, v2}, wl) - omega_serc(g, SercParams{y1, y2}, wl);
  CHECK(diff.cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("endpoint feasibility condition") {
  const Matrix w = Matrix::Identity(1, 1);
  const WeightLadder wl(0, w);  // calW = 1 (scalar)
  const int m1 = 1;
  const Matrix zero = Matrix::Zero(m1, m1);

  CHECK(erc_feasible(ErcParams{zero, zero, zero, zero}, wl).pass);

  const Matrix y_edge = wl.mat();  // Y = calW sits on the feasibility boundary
  const ErcFeasibility edge = erc_feasible(ErcParams{zero, zero, y_edge, y_edge}, wl);
  CHECK(edge.pass);
  CHECK(edge.at_alpha1.lambda_min == doctest::Approx(0.0).epsilon(1e-10));

  CHECK_FALSE(erc_feasible(ErcParams{zero, zero, 2.0 * y_edge, 2.0 * y_edge}, wl).pass);
}

TEST_CASE("omega_erc shapes and the infeasible rejection") {
  TrialRng rng(4, 0);
  const WeightLadder wl(1, rng.spd(2));
  const int m1 = wl.m1();
  const Matrix zero = Matrix::Zero(m1, m1);
  const SplitGeometry g = SplitGeometry::from_alpha(1.0, 0.5);

  Matrix expected = Matrix::Zero(2 * m1, 2 * m1);
  expected.topLeftCorner(m1, m1) = wl.mat();
  expected.bottomRightCorner(m1, m1) = wl.mat();
  CHECK((omega_erc(g, ErcParams{zero, zero, zero, zero}, wl) - expected).cwiseAbs().maxCoeff() <=
        1e-14);

  // alpha = 1/2, X = 0, Y1 = Y2 = Y collapses onto the classical form
  const Matrix y = 0.5 * wl.mat();
  const Matrix via_erc = omega_erc(g, ErcParams{zero, zero, y, y}, wl);
  const Matrix via_rcc = omega_rcc(g, RccParams{y}, wl);
  CHECK((via_erc - via_rcc).cwiseAbs().maxCoeff() <= 1e-12);

  CHECK_THROWS_AS(omega_erc(g, ErcParams{zero, zero, 3.0 * wl.mat(), 3.0 * wl.mat()}, wl),
                  InfeasibleParams);
}

TEST_CASE("omega_serc and omega_merc specializations") {
  TrialRng rng(5, 0);
  const WeightLadder wl(1, rng.spd(2));
  const int m1 = wl.m1();
  const SplitGeometry g = SplitGeometry::from_alpha(1.0, 0.3);
  const Matrix zero = Matrix::Zero(m1, m1);

  Matrix expected = Matrix::Zero(2 * m1, 2 * m1);
  expected.topLeftCorner(m1, m1) = (1.0 + g.beta) * wl.mat();
  expected.bottomRightCorner(m1, m1) = (1.0 + g.alpha) * wl.mat();
  CHECK((omega_serc(g, SercParams{zero, zero}, wl) - expected).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((omega_merc(g, MercParams{zero}, wl) - expected).cwiseAbs().maxCoeff() <= 1e-12);

  const Matrix y = rng.matrix(m1, m1, -2.0, 2.0);
  CHECK((omega_merc(g, MercParams{y}, wl) - omega_serc(g, SercParams{y, y}, wl))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);

  // Y = calW cancels the boundary blocks entirely
  const Matrix all_w = omega_merc(g, MercParams{wl.mat()}, wl);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK((all_w.block(i * m1, j * m1, m1, m1) - wl.mat()).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("omega_rcc feasibility gate and relation-E shape") {
  TrialRng rng(6, 0);
  const WeightLadder wl(1, rng.spd(2));
  const int m1 = wl.m1();
  const SplitGeometry g = SplitGeometry::from_alpha(1.0, 0.4);
  const Matrix zero = Matrix::Zero(m1, m1);

  const Matrix o5 = omega_rcc(g, RccParams{zero}, wl);
  const Matrix o4 = omega_merc(g, MercParams{zero}, wl);
  Matrix gap = o4 - o5;
  CHECK((gap.topLeftCorner(m1, m1) - g.beta * wl.mat()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK((gap.bottomRightCorner(m1, m1) - g.alpha * wl.mat()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(psd_check(gap).pass);

  CHECK((omega_rcc(g, RccParams{wl.mat()}, wl) - omega_merc(g, MercParams{wl.mat()}, wl))
            .cwiseAbs()
            .maxCoeff() <= 1e-10);

  CHECK_THROWS_AS(omega_rcc(g, RccParams{2.0 * wl.mat()}, wl), InfeasibleParams);
}

TEST_CASE("domination by the block-diagonal form over random draws") {
  for (uint64_t t = 0; t < 200; ++t) {
    TrialRng rng(31, t);
    const int n = static_cast<int>(rng.uniform_int(1, 3));
    const int nu = static_cast<int>(rng.uniform_int(0, 2));
    const WeightLadder wl(nu, rng.spd(n));
    const int m1 = wl.m1();
    const SplitGeometry g = SplitGeometry::from_alpha(1.0, rng.uniform(0.05, 0.95));
    const Matrix ob = omega_b(g, wl);

    const Matrix o1 =
        omega_mlsr(g, MlsrParams{rng.matrix(2 * m1, m1, -2, 2), rng.matrix(2 * m1, m1, -2, 2)}, wl);
    CHECK(psd_check(ob - o1, 1e-8).pass);

    const Matrix o3 =
        omega_serc(g, SercParams{rng.matrix(m1, m1, -2, 2), rng.matrix(m1, m1, -2, 2)}, wl);
    CHECK(psd_check(ob - o3, 1e-8).pass);

    const Matrix o4 = omega_merc(g, MercParams{rng.matrix(m1, m1, -2, 2)}, wl);
    CHECK(psd_check(ob - o4, 1e-8).pass);
  }
}

TEST_CASE("two-interval bounds against the energy oracle") {
  const Space d0 = Space::continuous(0.0, 1.0);
  auto [d1, d2] = d0.split(0.5);
  const Basis b1 = Basis::build(d1, 1);
  const Basis b2 = Basis::build(d2, 1);
  const Matrix w = Matrix::Identity(2, 2);
  const WeightLadder wl(1, w);
  const SplitGeometry g = SplitGeometry::from_interval(0.0, 0.5, 1.0);

  const VectorPolynomial zero = VectorPolynomial::zero(2);
  const Vector wz = stack_moments(moments(d1, b1, zero), moments(d2, b2, zero)).stacked();
  CHECK(dbbi_bound(wz, omega_b(g, wl), g.h) == doctest::Approx(0.0));

  const VectorPolynomial f({Polynomial({0.0, 1.0}), Polynomial({1.0})});
  const Vector ws = stack_moments(moments(d1, b1, f), moments(d2, b2, f)).stacked();
  const double exact = exact_energy(d0, f, w);
  CHECK(exact == doctest::Approx(4.0 / 3.0));
  // f lies in the span on both halves, so the projection bound is exact
  CHECK(dbbi_bound(ws, omega_b(g, wl), g.h) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));

  const int m1 = wl.m1();
  const double via_rcc =
      convexified_bound(ws, omega_rcc(g, RccParams{Matrix::Zero(m1, m1)}, wl), g.h);
  CHECK(via_rcc <= 4.0 / 3.0 + 1e-12);
}

TEST_CASE("endpoint feasibility extends to interior ratios by affineness") {
  // tested directly against the alpha-parameterized matrix, not assumed
  for (uint64_t t = 0; t < 50; ++t) {
    TrialRng rng(77, t);
    const WeightLadder wl(1, rng.spd(2));
    const int m1 = wl.m1();
    Eigen::SelfAdjointEigenSolver<Matrix> es(wl.mat());
    const Matrix sw = es.operatorSqrt();

    // a feasible draw: contractions plus scaled boundary X blocks
    auto contraction = [&](double s) {
      Matrix c = rng.matrix(m1, m1);
      Eigen::SelfAdjointEigenSolver<Matrix> en(c.transpose() * c, Eigen::EigenvaluesOnly);
      const double nrm = std::sqrt(std::max(0.0, en.eigenvalues().maxCoeff()));
      if (nrm > 0.0) c *= s / nrm;
      return (sw * c * sw).eval();
    };
    const Matrix y1 = contraction(rng.uniform(0.0, 0.95));
    const Matrix y2 = contraction(rng.uniform(0.0, 0.95));
    Matrix xh1 = wl.mat() - y1 * wl.inv() * y1.transpose();
    Matrix xh2 = wl.mat() - y2.transpose() * wl.inv() * y2;
    const Matrix x1 = rng.uniform(0.0, 1.0) * 0.5 * (xh1 + xh1.transpose());
    const Matrix x2 = rng.uniform(0.0, 1.0) * 0.5 * (xh2 + xh2.transpose());
    REQUIRE(erc_feasible(ErcParams{x1, x2, y1, y2}, wl).pass);

    for (int i = 1; i <= 10; ++i) {
      const double alpha = i / 11.0;
      const double beta = 1.0 - alpha;
      Matrix g = Matrix::Zero(2 * m1, 2 * m1);
      g.topLeftCorner(m1, m1) = wl.mat() - alpha * x1;
      g.topRightCorner(m1, m1) = -alpha * y1 - beta * y2;
      g.bottomLeftCorner(m1, m1) = g.topRightCorner(m1, m1).transpose();
      g.bottomRightCorner(m1, m1) = wl.mat() - beta * x2;
      CHECK(psd_check(g, 1e-8).pass);
    }
  }
}

TEST_CASE("stacked free blocks route the free-matrix form onto the extended one") {
  // chaining the V-stacking through the reparameterization of relation A
  TrialRng rng(78, 0);
  const WeightLadder wl(1, rng.spd(2));
  const int m1 = wl.m1();
  const SplitGeometry g = SplitGeometry::from_alpha(1.4, 0.55);
  const Matrix y1 = rng.matrix(m1, m1);
  const Matrix y2 = rng.matrix(m1, m1);
  Matrix v1(2 * m1, m1);
  v1.topRows(m1) = wl.mat();
  v1.bottomRows(m1) = y2.transpose();
  Matrix v2(2 * m1, m1);
  v2.topRows(m1) = y1;
  v2.bottomRows(m1) = wl.mat();
  const Matrix of = omega_f(g, FmbParams{-v1 / g.h, -v2 / g.h}, wl);
  const Matrix o3 = omega_serc(g, SercParams{y1, y2}, wl);
  CHECK((of - o3).cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, o3.cwiseAbs().maxCoeff()));
}

TEST_CASE("relation A reports the exact identity") {
  TrialRng rng(8, 0);
  const WeightLadder wl(1, rng.spd(2));
  const int m1 = wl.m1();
  const SplitGeometry g = SplitGeometry::from_alpha(1.3, 0.45);

  const RelationReport zero = check_relation(
      RelationId::A, FmbParams{Matrix::Zero(2 * m1, m1), Matrix::Zero(2 * m1, m1)}, g, wl);
  CHECK(zero.pass);
  CHECK(zero.worst == doctest::Approx(0.0));

  const RelationReport rnd = check_relation(
      RelationId::A, FmbParams{rng.matrix(2 * m1, m1, -0.5, 0.5), rng.matrix(2 * m1, m1, -0.5, 0.5)},
      g, wl);
  CHECK(rnd.pass);
  CHECK(rnd.worst <= 1e-12);

  CHECK_THROWS_AS(
      check_relation(RelationId::A, MercParams{Matrix::Zero(m1, m1)}, g, wl),
      DimensionMismatch);
}

TEST_CASE("relation C and E verdicts") {
  TrialRng rng(9, 0);
  const WeightLadder wl(1, rng.spd(2));
  const int m1 = wl.m1();
  const SplitGeometry g = SplitGeometry::from_alpha(1.0, 0.6);
  const Matrix zero = Matrix::Zero(m1, m1);

  const RelationReport c =
      check_relation(RelationId::C, ErcParams{zero, zero, zero, zero}, g, wl);
  CHECK(c.pass);

  const RelationReport e = check_relation(RelationId::E, RccParams{zero}, g, wl);
  CHECK(e.pass);
  CHECK(e.worst >= -1e-12);
}

TEST_CASE("counterexample searches find scalar witnesses") {
  for (int nu : {0, 1}) {
    SearchConfig cfg;
    cfg.n = 1;
    cfg.nu = nu;
    const SearchOutcome b = counterexample_search(SearchKind::B, 7, 10000, cfg);
    REQUIRE(b.found);
    CHECK(b.trials_used <= 10000);
    CHECK(b.quad_neg <= -1e-6);
    CHECK(b.quad_pos >= 1e-6);

    const SearchOutcome d = counterexample_search(SearchKind::D, 7, 10000, cfg);
    REQUIRE(d.found);
    CHECK(d.quad_neg <= -1e-6);
    CHECK(d.quad_pos >= 1e-6);
  }
}

TEST_CASE("witness quadratic forms check out against the omega difference") {
  SearchConfig cfg;
  cfg.n = 1;
  cfg.nu = 0;
  const SearchOutcome b = counterexample_search(SearchKind::B, 7, 10000, cfg);
  REQUIRE(b.found);
  const WeightLadder wl(0, b.w);
  const SplitGeometry g = SplitGeometry::from_alpha(1.0, b.alpha);
  const Matrix o1 = omega_mlsr(g, MlsrParams{b.v1, b.v2}, wl);
  // any swept (Y1, Y2) must leave both signs in place; try a few fresh draws
  TrialRng rng(123, 9);
  for (int i = 0; i < 20; ++i) {
    const Matrix y1 = rng.matrix(1, 1, -3.0, 3.0);
    const Matrix y2 = rng.matrix(1, 1, -3.0, 3.0);
    const Matrix diff = o1 - omega_serc(g, SercParams{y1, y2}, wl);
    CHECK(b.witness_neg.dot(diff * b.witness_neg) < 0.0);
    CHECK(b.witness_pos.dot(diff * b.witness_pos) > 0.0);
  }
}

TEST_CASE("search honors the budget") {
  const SearchOutcome none = counterexample_search(SearchKind::B, 7, 0);
  CHECK_FALSE(none.found);
  CHECK(none.trials_used == 0);

  const SearchOutcome d_none = counterexample_search(SearchKind::D, 7, 0);
  CHECK_FALSE(d_none.found);
}

TEST_CASE("search outcomes are deterministic in the seed") {
  const SearchOutcome a = counterexample_search(SearchKind::B, 99, 10000);
  const SearchOutcome b = counterexample_search(SearchKind::B, 99, 10000);
  REQUIRE(a.found);
  REQUIRE(b.found);
  CHECK(a.trials_used == b.trials_used);
  CHECK(a.quad_neg == b.quad_neg);
  CHECK(a.quad_pos == b.quad_pos);
  CHECK((a.v1 - b.v1).cwiseAbs().maxCoeff() == 0.0);
}
