#ifndef DELAYBOUNDS_MOMENTS_HPP
#define DELAYBOUNDS_MOMENTS_HPP

#include <optional>

#include "delaybounds/basis.hpp"
#include "delaybounds/linalg.hpp"

namespace delaybounds {

/// Stacked basis projections w_k = <f, Pi_k> of a vector polynomial.
/// Two-interval use stacks w = col{w^1, w^2} over the split with one
/// basis per subinterval; single-interval use stores only w^1.
class MomentVector {
 public:
  static MomentVector single(int nu, int n, Vector w1);
  static MomentVector two(int nu, int n, Vector w1, Vector w2);

  int nu() const { return nu_; }
  int n() const { return n_; }
  int m1() const { return (nu_ + 1) * n_; }
  bool has_second() const { return w2_.has_value(); }

  const Vector& half(Half i) const;
  /// col{w^1} or col{w^1, w^2}
  Vector stacked() const;
  /// w_k^i in R^n
  Vector block(Half i, int k) const;

 private:
  MomentVector(int nu, int n, Vector w1, std::optional<Vector> w2)
      : nu_(nu), n_(n), w1_(std::move(w1)), w2_(std::move(w2)) {}
  int nu_;
  int n_;
  Vector w1_;
  std::optional<Vector> w2_;
};

/// w_k = <f, Pi_k> componentwise; the basis must belong to s.
MomentVector moments(const Space& s, const Basis& basis, const VectorPolynomial& f);

/// Stack per-subinterval moments into the two-interval form.
MomentVector stack_moments(const MomentVector& first, const MomentVector& second);

/// <f, W f> on s, expanded coordinatewise through the exact inner
/// product. This is the brute-force oracle every bound is tested
/// against; it never touches any bound evaluator.
double exact_energy(const Space& s, const VectorPolynomial& f, const Matrix& w);

}  // namespace delaybounds

#endif
