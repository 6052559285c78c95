#include "qweyl/epower.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qweyl/errors.hpp"
#include "qweyl/rng.hpp"
#include "qweyl/tolerances.hpp"

namespace qweyl {

namespace {

double purity_of_reduction(const State4& a, bool trace_out_second) {
  Mat2 rho = Mat2::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        const int r = trace_out_second ? 2 * i + k : 2 * k + i;
        const int c = trace_out_second ? 2 * j + k : 2 * k + j;
        rho(i, j) += a(r) * std::conj(a(c));
      }
  return (rho * rho).trace().real();
}

}  // namespace

double linear_entropy(const State4& psi) {
  const double norm_dev = std::abs(psi.squaredNorm() - 1.0);
  if (norm_dev > tolerances().state_norm)
    throw NotNormalizedError("state norm deviates from 1 by " +
                             std::to_string(norm_dev));

  const double e1 = 1.0 - purity_of_reduction(psi, true);
  const double e2 = 1.0 - purity_of_reduction(psi, false);
  if (std::abs(e1 - e2) > 1e-12)
    throw std::runtime_error("partial traces disagree; numerical breakdown");

  return std::clamp(e1, 0.0, 0.5);
}

ProductState sample_product_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::Vector2cd parts[2];
  for (auto& v : parts) {
    double n2;
    do {
      v(0) = Complex(gauss(rng), gauss(rng));
      v(1) = Complex(gauss(rng), gauss(rng));
      n2 = v.squaredNorm();
    } while (n2 < 1e-300);
    v /= std::sqrt(n2);
  }
  ProductState ps;
  ps.psi(0) = parts[0](0) * parts[1](0);
  ps.psi(1) = parts[0](0) * parts[1](1);
  ps.psi(2) = parts[0](1) * parts[1](0);
  ps.psi(3) = parts[0](1) * parts[1](1);
  return ps;
}

double entangling_power_closed(const WeylPoint& p) {
  const double x = std::cos(2 * p.c1);
  const double y = std::cos(2 * p.c2);
  const double z = std::cos(2 * p.c3);
  return (3.0 - (x * y + y * z + z * x)) / 18.0;
}

double entangling_power_closed(const Gate4& u) {
  return entangling_power_closed(coordinates_of(u));
}

namespace {

double mc_sample_entropy(const Gate4& u, std::uint64_t seed, std::uint64_t i) {
  std::mt19937_64 rng = sample_rng(seed, i);
  const ProductState ps = sample_product_state(rng);
  return linear_entropy(u * ps.psi);
}

/// Shared deterministic reduction: index-ordered mean, then a two-pass
/// variance. Both estimators funnel through this, so the parallel and
/// serial results are bit-identical whenever the buffers are.
EpEstimate reduce_entropies(const std::vector<double>& e) {
  EpEstimate est;
  est.n_samples = e.size();
  double sum = 0.0;
  for (double v : e) sum += v;
  est.mean = sum / static_cast<double>(e.size());
  if (e.size() > 1) {
    double ss = 0.0;
    for (double v : e) ss += (v - est.mean) * (v - est.mean);
    const double var = ss / static_cast<double>(e.size() - 1);
    est.std_error = std::sqrt(var / static_cast<double>(e.size()));
  }
  return est;
}

}  // namespace

EpEstimate entangling_power_mc(const Gate4& u, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample count must be positive");
  assert_unitary(u, tolerances().unitary);

  std::vector<double> e(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    e[static_cast<std::size_t>(i)] =
        mc_sample_entropy(u, seed, static_cast<std::uint64_t>(i));
  return reduce_entropies(e);
}

EpEstimate entangling_power_mc_serial(const Gate4& u, std::size_t n,
                                      std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample count must be positive");
  assert_unitary(u, tolerances().unitary);

  std::vector<double> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = mc_sample_entropy(u, seed, i);
  return reduce_entropies(e);
}

}  // namespace qweyl
