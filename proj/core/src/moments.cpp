#include "delaybounds/moments.hpp"

#include <cmath>
#include <string>

namespace delaybounds {

MomentVector MomentVector::single(int nu, int n, Vector w1) {
  if (w1.size() != static_cast<Eigen::Index>((nu + 1) * n))
    throw DimensionMismatch("moment stack has size " + std::to_string(w1.size()) + ", expected " +
                            std::to_string((nu + 1) * n));
  return MomentVector(nu, n, std::move(w1), std::nullopt);
}

MomentVector MomentVector::two(int nu, int n, Vector w1, Vector w2) {
  const Eigen::Index m1 = (nu + 1) * n;
  if (w1.size() != m1 || w2.size() != m1)
    throw DimensionMismatch("two-interval moment halves must both have size " + std::to_string(m1));
  return MomentVector(nu, n, std::move(w1), std::move(w2));
}

const Vector& MomentVector::half(Half i) const {
  if (i == Half::first) return w1_;
  if (!w2_) throw DimensionMismatch("single-interval moment vector has no second half");
  return *w2_;
}

Vector MomentVector::stacked() const {
  if (!w2_) return w1_;
  Vector out(2 * m1());
  out << w1_, *w2_;
  return out;
}

Vector MomentVector::block(Half i, int k) const {
  if (k < 0 || k > nu_) throw DimensionMismatch("moment block index out of range");
  return half(i).segment(static_cast<Eigen::Index>(k) * n_, n_);
}

MomentVector moments(const Space& s, const Basis& basis, const VectorPolynomial& f) {
  if (!(basis.space() == s)) throw DimensionMismatch("basis does not belong to the given space");
  const int n = f.dim();
  const int nu = basis.order();
  Vector w((nu + 1) * n);
  for (int k = 0; k <= nu; ++k)
    for (int p = 0; p < n; ++p) w(static_cast<Eigen::Index>(k) * n + p) = s.inner(f[p], basis.pi(k));
  return MomentVector::single(nu, n, std::move(w));
}

MomentVector stack_moments(const MomentVector& first, const MomentVector& second) {
  if (first.nu() != second.nu() || first.n() != second.n())
    throw DimensionMismatch("moment halves disagree in (nu, n)");
  if (first.has_second() || second.has_second())
    throw DimensionMismatch("stack_moments expects single-interval halves");
  return MomentVector::two(first.nu(), first.n(), first.half(Half::first), second.half(Half::first));
}

double exact_energy(const Space& s, const VectorPolynomial& f, const Matrix& w) {
  const int n = f.dim();
  if (w.rows() != n || w.cols() != n)
    throw DimensionMismatch("weight matrix is " + std::to_string(w.rows()) + "x" +
                            std::to_string(w.cols()) + ", expected " + std::to_string(n) + "x" +
                            std::to_string(n));
  double acc = 0.0;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (w(p, q) == 0.0) continue;
      acc += w(p, q) * s.inner(f[p], f[q]);
    }
  }
  return acc;
}

}  // namespace delaybounds
