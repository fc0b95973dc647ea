#include "delaybounds/polynomial.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace delaybounds {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::in_frame(std::vector<double> coeffs, double origin, double scale) {
  if (!(scale != 0.0) || !std::isfinite(origin) || !std::isfinite(scale))
    throw InvalidConfig("polynomial frame must have a finite origin and nonzero scale");
  Polynomial p;
  p.origin_ = origin;
  p.scale_ = scale;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

Polynomial Polynomial::constant(double c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int k, double c) {
  if (k < 0) throw InvalidConfig("monomial degree must be nonnegative");
  std::vector<double> v(static_cast<size_t>(k) + 1, 0.0);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<size_t>(k)];
}

double Polynomial::operator()(double t) const {
  const double u = (t - origin_) / scale_;
  double acc = 0.0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * u + coeffs_[i];
  return acc;
}

long double Polynomial::eval_ld(long double t) const {
  const long double u = (t - static_cast<long double>(origin_)) / scale_;
  long double acc = 0.0L;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * u + static_cast<long double>(coeffs_[i]);
  return acc;
}

std::vector<long double> Polynomial::expand_affine_ld(const std::vector<double>& coeffs,
                                                      long double alpha, long double beta) {
  // Horner composition: result = (...(c_d (alpha x + beta) + c_{d-1}) ...) + c_0
  std::vector<long double> acc;
  for (size_t i = coeffs.size(); i-- > 0;) {
    std::vector<long double> next(acc.size() + 1, 0.0L);
    for (size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += alpha * acc[j];
      next[j] += beta * acc[j];
    }
    if (next.empty()) next.push_back(0.0L);
    next[0] += static_cast<long double>(coeffs[i]);
    acc = std::move(next);
  }
  return acc;
}

Polynomial Polynomial::rebase(double origin, double scale) const {
  if (origin == origin_ && scale == scale_) return *this;
  if (is_zero()) return in_frame({}, origin, scale);
  // u_old = (t - o1)/s1 with t = o2 + s2 u_new:
  // u_old = (s2/s1) u_new + (o2 - o1)/s1
  const long double alpha = static_cast<long double>(scale) / scale_;
  const long double beta = (static_cast<long double>(origin) - origin_) / scale_;
  const std::vector<long double> acc = expand_affine_ld(coeffs_, alpha, beta);
  std::vector<double> v(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) v[i] = static_cast<double>(acc[i]);
  return in_frame(std::move(v), origin, scale);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  const Polynomial rhs =
      (other.origin_ == origin_ && other.scale_ == scale_) ? other : other.rebase(origin_, scale_);
  std::vector<double> v(std::max(coeffs_.size(), rhs.coeffs_.size()), 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
  return in_frame(std::move(v), origin_, scale_);
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator-() const {
  std::vector<double> v = coeffs_;
  for (double& c : v) c = -c;
  return in_frame(std::move(v), origin_, scale_);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial();
  const Polynomial rhs =
      (other.origin_ == origin_ && other.scale_ == scale_) ? other : other.rebase(origin_, scale_);
  std::vector<long double> acc(coeffs_.size() + rhs.coeffs_.size() - 1, 0.0L);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      acc[i + j] += static_cast<long double>(coeffs_[i]) * rhs.coeffs_[j];
  std::vector<double> v(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) v[i] = static_cast<double>(acc[i]);
  return in_frame(std::move(v), origin_, scale_);
}

Polynomial Polynomial::operator*(double s) const {
  std::vector<double> v = coeffs_;
  for (double& c : v) c *= s;
  return in_frame(std::move(v), origin_, scale_);
}

Polynomial Polynomial::compose_affine(double alpha, double beta) const {
  if (is_zero()) return Polynomial();
  // q(t) = p(alpha t + beta): frame variable u = (alpha t + beta - o)/s
  const long double a = static_cast<long double>(alpha) / scale_;
  const long double b = (static_cast<long double>(beta) - origin_) / scale_;
  const std::vector<long double> acc = expand_affine_ld(coeffs_, a, b);
  std::vector<double> v(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) v[i] = static_cast<double>(acc[i]);
  return Polynomial(std::move(v));
}

VectorPolynomial::VectorPolynomial(std::vector<Polynomial> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionMismatch("vector polynomial needs at least one coordinate");
  for (const Polynomial& p : coords_) {
    if (p.degree() > kMaxDegree)
      throw InvalidConfig("vector polynomial degree " + std::to_string(p.degree()) +
                          " exceeds supported maximum " + std::to_string(kMaxDegree));
  }
}

VectorPolynomial VectorPolynomial::zero(int n) {
  if (n < 1) throw DimensionMismatch("vector polynomial needs at least one coordinate");
  return VectorPolynomial(std::vector<Polynomial>(static_cast<size_t>(n)));
}

int VectorPolynomial::max_degree() const {
  int d = -1;
  for (const Polynomial& p : coords_) d = std::max(d, p.degree());
  return d;
}

}  // namespace delaybounds
