#ifndef DELAYBOUNDS_POLYNOMIAL_HPP
#define DELAYBOUNDS_POLYNOMIAL_HPP

#include <vector>

#include "delaybounds/errors.hpp"

namespace delaybounds {

/// Scalar polynomial with real coefficients in the monomial basis of a
/// local frame variable u = (t - origin) / scale:
///
///   p(t) = sum_k coeffs()[k] * u^k.
///
/// The default frame (origin 0, scale 1) is the plain monomial basis.
/// Orthogonal bases store their interval's own frame so that
/// coefficients stay well conditioned on intervals far from the origin;
/// mixed-frame arithmetic rebases operands in extended precision.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  static Polynomial in_frame(std::vector<double> coeffs, double origin, double scale);

  static Polynomial constant(double c);
  /// c * t^k in the plain frame
  static Polynomial monomial(int k, double c = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  double origin() const { return origin_; }
  double scale() const { return scale_; }
  /// frame-local coefficient of u^k
  double coeff(int k) const;
  const std::vector<double>& coeffs() const { return coeffs_; }

  double operator()(double t) const;
  /// Horner evaluation carried in extended precision; used by the exact
  /// inner-product kernels.
  long double eval_ld(long double t) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(double s) const;
  Polynomial operator-() const;

  /// The same polynomial expressed in another frame (extended-precision
  /// recomposition; precision is limited by the conditioning of the
  /// source representation).
  Polynomial rebase(double origin, double scale) const;

  /// p(alpha * t + beta) in the plain frame.
  Polynomial compose_affine(double alpha, double beta) const;

  /// Raw affine expansion sum_k c_k (alpha x + beta)^k, kept in extended
  /// precision for the inner-product kernels.
  static std::vector<long double> expand_affine_ld(const std::vector<double>& coeffs,
                                                   long double alpha, long double beta);

 private:
  void trim();
  double origin_ = 0.0;
  double scale_ = 1.0;
  std::vector<double> coeffs_;
};

inline Polynomial operator*(double s, const Polynomial& p) { return p * s; }

/// Vector-valued polynomial f : R -> R^n, one scalar polynomial per
/// coordinate. Construction rejects coordinates above the supported
/// degree cap (12); all inner products of such f remain closed-form.
class VectorPolynomial {
 public:
  static constexpr int kMaxDegree = 12;

  explicit VectorPolynomial(std::vector<Polynomial> coords);
  static VectorPolynomial zero(int n);

  int dim() const { return static_cast<int>(coords_.size()); }
  int max_degree() const;
  const Polynomial& operator[](int i) const { return coords_[static_cast<size_t>(i)]; }

 private:
  std::vector<Polynomial> coords_;
};

}  // namespace delaybounds

#endif
