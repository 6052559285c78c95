#include "qweyl/rng.hpp"

#include <cmath>

namespace qweyl {

Mat2 random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  double w, x, y, z, n2;
  do {
    w = gauss(rng);
    x = gauss(rng);
    y = gauss(rng);
    z = gauss(rng);
    n2 = w * w + x * x + y * y + z * z;
  } while (n2 < 1e-300);
  const double inv = 1.0 / std::sqrt(n2);
  w *= inv;
  x *= inv;
  y *= inv;
  z *= inv;
  Mat2 m;
  m << Complex(w, z), Complex(y, x), Complex(-y, x), Complex(w, -z);
  return m;
}

}  // namespace qweyl
