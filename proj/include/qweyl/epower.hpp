#pragma once

#include <cstdint>
#include <random>

#include "qweyl/linalg.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

/// Linear entropy E = 1 - tr(ρ1²) of a normalized two-qubit state, with
/// ρ1 the reduced density matrix of qubit 1. Cross-checked against the
/// trace over the other subsystem and clamped to [0, 1/2]. Throws
/// NotNormalizedError when |⟨ψ|ψ⟩ - 1| exceeds the state_norm tolerance.
double linear_entropy(const State4& psi);

/// A product state |ψ1⟩ ⊗ |ψ2⟩ drawn from the Haar measure on each
/// factor.
struct ProductState {
  State4 psi;
};

ProductState sample_product_state(std::mt19937_64& rng);

/// Closed-form entangling power at canonical coordinates:
///   e_p = (1/18)[3 - (cos2c1 cos2c2 + cos2c2 cos2c3 + cos2c3 cos2c1)].
double entangling_power_closed(const WeylPoint& p);

/// Closed form applied to the extracted coordinates of a gate.
double entangling_power_closed(const Gate4& u);

/// Monte-Carlo estimate of e_p: the mean linear entropy of U applied to
/// Haar-random product states. Ranges over [0, 2/9] as U varies.
struct EpEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
};

/// Parallel estimator. Per-sample counter-seeded RNG plus an ordered
/// reduction make the result bit-identical to the serial reference.
EpEstimate entangling_power_mc(const Gate4& u, std::size_t n, std::uint64_t seed);

/// Plain-loop reference implementation with identical output.
EpEstimate entangling_power_mc_serial(const Gate4& u, std::size_t n,
                                      std::uint64_t seed);

}  // namespace qweyl
