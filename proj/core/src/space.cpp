#include "delaybounds/space.hpp"

#include <cmath>
#include <string>

namespace delaybounds {

namespace {

// Neumaier-compensated accumulator.
struct CompSum {
  long double sum = 0.0L;
  long double comp = 0.0L;
  void add(long double x) {
    const long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  long double value() const { return sum + comp; }
};

bool is_integral(double x) { return std::rint(x) == x && std::isfinite(x); }

// Coefficients of p in the frame u = (t - origin)/scale, in extended
// precision. Frame matches cost nothing; everything else is one affine
// recomposition.
std::vector<long double> local_coeffs(const Polynomial& p, double origin, double scale) {
  if (p.origin() == origin && p.scale() == scale) {
    std::vector<long double> out(p.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = p.coeffs()[i];
    return out;
  }
  // u_old = (t - o1)/s1 with t = origin + scale * u_new
  const long double alpha = static_cast<long double>(scale) / p.scale();
  const long double beta = (static_cast<long double>(origin) - p.origin()) / p.scale();
  return Polynomial::expand_affine_ld(p.coeffs(), alpha, beta);
}

}  // namespace

Space Space::continuous(double a, double b) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw InvalidInterval("continuous space requires finite a < b, got [" + std::to_string(a) +
                          ", " + std::to_string(b) + "]");
  return Space(SpaceKind::continuous, a, b);
}

Space Space::discrete(long a, long b) {
  if (a > b)
    throw InvalidInterval("discrete space requires a <= b, got {" + std::to_string(a) + ".." +
                          std::to_string(b) + "}");
  return Space(SpaceKind::discrete, static_cast<double>(a), static_cast<double>(b));
}

double Space::measure() const {
  if (kind_ == SpaceKind::continuous) return b_ - a_;
  return b_ - a_ + 1.0;
}

std::pair<Space, Space> Space::split(double c) const {
  if (kind_ == SpaceKind::continuous) {
    if (!(a_ < c && c < b_))
      throw InvalidSplit("split point " + std::to_string(c) + " not inside (" +
                         std::to_string(a_) + ", " + std::to_string(b_) + ")");
    return {Space(SpaceKind::continuous, a_, c), Space(SpaceKind::continuous, c, b_)};
  }
  if (!is_integral(c)) throw InvalidSplit("discrete split point must be an integer");
  // {a..c-1} | {c..b}; both halves must be nonempty ranges.
  if (!(a_ < c && c <= b_))
    throw InvalidSplit("discrete split point " + std::to_string(c) + " not inside (" +
                       std::to_string(a_) + ", " + std::to_string(b_) + "]");
  return {Space(SpaceKind::discrete, a_, c - 1.0), Space(SpaceKind::discrete, c, b_)};
}

double Space::inner(const Polynomial& phi, const Polynomial& psi) const {
  if (phi.is_zero() || psi.is_zero()) return 0.0;
  CompSum acc;
  if (kind_ == SpaceKind::continuous) {
    // integrate in the unit frame: t = a + h u, u in [0, 1], so that
    // <u^j, u^k> = h / (j + k + 1); basis polynomials already live in
    // this frame and need no recomposition
    const double h = b_ - a_;
    const std::vector<long double> c = local_coeffs(phi, a_, h);
    const std::vector<long double> d = local_coeffs(psi, a_, h);
    for (size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0.0L) continue;
      for (size_t k = 0; k < d.size(); ++k) {
        if (d[k] == 0.0L) continue;
        acc.add(c[j] * d[k] / static_cast<long double>(j + k + 1));
      }
    }
    return static_cast<double>(acc.value() * static_cast<long double>(h));
  }
  const long lo = static_cast<long>(a_);
  const long hi = static_cast<long>(b_);
  for (long t = lo; t <= hi; ++t) {
    const long double tau = static_cast<long double>(t);
    acc.add(phi.eval_ld(tau) * psi.eval_ld(tau));
  }
  return static_cast<double>(acc.value());
}

bool Space::operator==(const Space& other) const {
  return kind_ == other.kind_ && a_ == other.a_ && b_ == other.b_;
}

}  // namespace delaybounds
