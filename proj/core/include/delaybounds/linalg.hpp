#ifndef DELAYBOUNDS_LINALG_HPP
#define DELAYBOUNDS_LINALG_HPP

#include <Eigen/Dense>

namespace delaybounds {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Subinterval selector i in {1, 2}: which half of a two-interval stack
/// a padded quantity lives on.
enum class Half { first, second };

/// A + A^T
inline Matrix he(const Matrix& a) { return a + a.transpose(); }

}  // namespace delaybounds

#endif
