#ifndef DELAYBOUNDS_BASIS_HPP
#define DELAYBOUNDS_BASIS_HPP

#include <vector>

#include "delaybounds/space.hpp"

namespace delaybounds {

/// Orthogonal polynomial system Pi_0, ..., Pi_nu on a Space, with
/// Pi_0 == 1 and norm-squares rho_k = ||Pi_k||^2.
///
/// Continuous spaces get Legendre polynomials shifted to [a, b], for
/// which rho_k = h / (2k + 1) with h = b - a. Discrete ranges use
/// Gram-Schmidt on monomials with a re-orthogonalization pass, giving
/// monic Pi_k.
class Basis {
 public:
  static Basis build(const Space& s, int nu);

  const Space& space() const { return space_; }
  int order() const { return static_cast<int>(funcs_.size()) - 1; }
  int size() const { return static_cast<int>(funcs_.size()); }
  const Polynomial& pi(int k) const { return funcs_[static_cast<size_t>(k)]; }
  double rho(int k) const { return rho_[static_cast<size_t>(k)]; }
  const std::vector<double>& rho() const { return rho_; }

 private:
  Basis(Space s, std::vector<Polynomial> funcs, std::vector<double> rho)
      : space_(s), funcs_(std::move(funcs)), rho_(std::move(rho)) {}
  Space space_;
  std::vector<Polynomial> funcs_;
  std::vector<double> rho_;
};

}  // namespace delaybounds

#endif
