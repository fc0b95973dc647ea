#ifndef DELAYBOUNDS_SPACE_HPP
#define DELAYBOUNDS_SPACE_HPP

#include <utility>

#include "delaybounds/polynomial.hpp"

namespace delaybounds {

enum class SpaceKind { continuous, discrete };

/// Inner-product domain for polynomials: either an interval [a, b] with
/// <phi, psi> = integral of phi*psi over [a, b], or an integer range
/// {a, ..., b} with <phi, psi> = sum of phi(t)*psi(t) over the points.
/// Both evaluations are closed-form (monomial integration / finite
/// summation), not quadrature.
class Space {
 public:
  static Space continuous(double a, double b);
  static Space discrete(long a, long b);

  SpaceKind kind() const { return kind_; }
  double lower() const { return a_; }
  double upper() const { return b_; }
  /// b - a for intervals, point count for ranges. Equals <1, 1>.
  double measure() const;

  /// Split into two adjoining subdomains whose inner products sum to this
  /// one's. Continuous: [a, c], [c, b] with a < c < b. Discrete:
  /// {a..c-1}, {c..b} with a < c <= b.
  std::pair<Space, Space> split(double c) const;

  double inner(const Polynomial& phi, const Polynomial& psi) const;

  bool operator==(const Space& other) const;

 private:
  Space(SpaceKind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}
  SpaceKind kind_;
  double a_;
  double b_;
};

}  // namespace delaybounds

#endif
