#pragma once

#include <cstdint>
#include <random>

#include "qweyl/linalg.hpp"

namespace qweyl {

/// splitmix64 finalizer. Used to decorrelate (seed, index) pairs before
/// seeding a per-sample engine.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Fresh engine for sample `index` of a stream identified by `seed`.
/// Each sample owns its engine, so results do not depend on how samples
/// are distributed over threads.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(mix64(mix64(seed) ^ mix64(index + 0x517cc1b727220a95ULL)));
}

/// Haar-random SU(2) element: normalized quaternion (w,x,y,z) mapped to
/// [[w+iz, y+ix], [-y+ix, w-iz]].
Mat2 random_su2(std::mt19937_64& rng);

}  // namespace qweyl
