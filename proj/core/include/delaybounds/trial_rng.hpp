#ifndef DELAYBOUNDS_TRIAL_RNG_HPP
#define DELAYBOUNDS_TRIAL_RNG_HPP

#include <cstdint>

#include "delaybounds/linalg.hpp"

namespace delaybounds {

inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Deterministic generator with independent streams per (seed, stream),
/// so parallel trial execution cannot change results. Uniform doubles
/// come straight from the high mantissa bits; no standard-library
/// distributions are involved, keeping reports byte-identical across
/// toolchains.
class TrialRng {
 public:
  TrialRng(uint64_t seed, uint64_t stream) {
    uint64_t s = seed;
    const uint64_t a = splitmix64(s);
    s = stream ^ 0xd1b54a32d192ed03ull;
    const uint64_t b = splitmix64(s);
    state_ = a ^ (b + 0x9e3779b97f4a7c15ull);
    (void)next();
    (void)next();
  }

  uint64_t next() { return splitmix64(state_); }

  /// uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// uniform integer in [lo, hi] inclusive
  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  Vector vector(int n, double lo = -1.0, double hi = 1.0) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
    return v;
  }

  Matrix matrix(int rows, int cols, double lo = -1.0, double hi = 1.0) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

  /// A^T A + ridge I with A entries uniform in [-1, 1]; lambda_min >= ridge.
  Matrix spd(int n, double ridge = 0.1) {
    const Matrix a = matrix(n, n);
    return a.transpose() * a + ridge * Matrix::Identity(n, n);
  }

 private:
  uint64_t state_;
};

}  // namespace delaybounds

#endif
