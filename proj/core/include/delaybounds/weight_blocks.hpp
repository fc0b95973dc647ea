#ifndef DELAYBOUNDS_WEIGHT_BLOCKS_HPP
#define DELAYBOUNDS_WEIGHT_BLOCKS_HPP

#include <vector>

#include "delaybounds/errors.hpp"
#include "delaybounds/linalg.hpp"

namespace delaybounds {

/// The block weight matrix of one subinterval,
/// calW = diag{1/rho_0, ..., 1/rho_nu} (x) W (size M_1), its inverse,
/// and the zero-padded two-interval forms diag(calW, 0) / diag(0, calW).
class WeightBlocks {
 public:
  WeightBlocks(std::vector<double> rho, Matrix w);

  int order() const { return static_cast<int>(rho_.size()) - 1; }
  int n() const { return static_cast<int>(w_.rows()); }
  int m1() const { return static_cast<int>(cal_.rows()); }

  const Matrix& cal() const { return cal_; }
  const Matrix& cal_inv() const { return cal_inv_; }
  const Matrix& w() const { return w_; }
  const std::vector<double>& rho() const { return rho_; }

  /// diag(calW, 0) or diag(0, calW), size M_2 = 2 M_1.
  Matrix padded(Half i) const;
  /// Same placement for calW^{-1}.
  Matrix padded_inv(Half i) const;

 private:
  std::vector<double> rho_;
  Matrix w_;
  Matrix cal_;
  Matrix cal_inv_;
};

}  // namespace delaybounds

#endif
