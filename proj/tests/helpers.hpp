#pragma once

#include <random>

#include "qweyl/linalg.hpp"
#include "qweyl/rng.hpp"

namespace test_helpers {

using qweyl::Complex;
using qweyl::Gate4;
using qweyl::Mat2;
using qweyl::State4;

/// Haar-random U(4): QR of a Ginibre matrix with the R diagonal phases
/// pushed into Q.
inline Gate4 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Gate4 g;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Gate4> qr(g);
  Gate4 q = qr.householderQ();
  const Gate4 rmat = qr.matrixQR();
  for (int i = 0; i < 4; ++i) {
    const Complex d = rmat(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

inline State4 random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  State4 v;
  for (int i = 0; i < 4; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / std::sqrt(v.squaredNorm());
}

inline double max_abs_diff(const Gate4& a, const Gate4& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline double max_abs_diff2(const Mat2& a, const Mat2& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace test_helpers
