#pragma once

#include <cstdint>
#include <vector>

#include "qweyl/invariants.hpp"
#include "qweyl/linalg.hpp"

namespace qweyl {

/// Canonical coordinates [c1, c2, c3] of a two-qubit gate class, in
/// radians. The canonical set is the tetrahedron with vertices O, A1,
/// A2, A3 below (c3 = 0 base glued along its mirror symmetry).
struct WeylPoint {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// Landmark points of the tetrahedron and of the perfect-entangler
/// polyhedron L M N P Q A2 sitting inside it.
namespace pts {
inline constexpr WeylPoint O{0.0, 0.0, 0.0};
inline constexpr WeylPoint A1{3.14159265358979323846, 0.0, 0.0};
inline constexpr WeylPoint A2{1.57079632679489661923, 1.57079632679489661923, 0.0};
inline constexpr WeylPoint A3{1.57079632679489661923, 1.57079632679489661923,
                              1.57079632679489661923};
inline constexpr WeylPoint L{1.57079632679489661923, 0.0, 0.0};
inline constexpr WeylPoint M{2.35619449019234492885, 0.78539816339744830961, 0.0};
inline constexpr WeylPoint N{2.35619449019234492885, 0.78539816339744830961,
                             0.78539816339744830961};
inline constexpr WeylPoint P{0.78539816339744830961, 0.78539816339744830961,
                             0.78539816339744830961};
inline constexpr WeylPoint Q{0.78539816339744830961, 0.78539816339744830961, 0.0};
}  // namespace pts

/// Invariants evaluated directly from coordinates:
///   G1 = ¼ [e^{-i c3} cos(c1-c2) + e^{i c3} cos(c1+c2)]²
///   G2 = cos 2c1 + cos 2c2 + cos 2c3.
LocalInvariants invariants_from_point(const WeylPoint& p);

/// Representative gate of the class [c1,c2,c3]: in the ordered basis
/// |00⟩,|01⟩,|10⟩,|11⟩ the block matrix
///   rows/cols {0,3}: e^{-i c3/2} [[cos c-, -i sin c-], [-i sin c-, cos c-]]
///   rows/cols {1,2}: e^{+i c3/2} [[cos c+, -i sin c+], [-i sin c+, cos c+]]
/// with c± = (c1 ± c2)/2. Equal to exp{-(i/2)(c1 XX + c2 YY + c3 ZZ)}.
Gate4 canonical_gate(const WeylPoint& p);

/// Membership test for the canonical tetrahedron with boundary slack:
/// 0 ≤ c3 ≤ c2 ≤ min(c1, π - c1) and 0 ≤ c1 ≤ π.
bool is_canonical(const WeylPoint& p);

/// Maps any coordinate triple to its canonical representative under the
/// symmetry group (coordinate permutations, even sign flips, shifts by
/// π). Canonical inputs are returned unchanged.
WeylPoint canonicalize(const WeylPoint& p);

/// Canonical coordinates of a gate, recovered from the spectrum of
/// M(U)/√det(U) and validated by invariant agreement. Throws
/// NoConvergenceError when no candidate triple reproduces the
/// invariants.
WeylPoint coordinates_of(const Gate4& u);

/// Signed margin of the perfect-entangler membership conditions: the
/// best over permutations (i,j,k) and both chains of
///   min(s1 - base, s2 - s1, upper - s2),
/// s1 = ci + ck, s2 = ci + cj + π/2, (base, upper) ∈ {(π/2, π), (3π/2, 2π)}.
/// Nonnegative inside the polyhedron, negative outside.
double pe_margin(const WeylPoint& p);

/// Coordinate route: pe_margin(canonicalize(p)) ≥ -pe_boundary.
bool is_perfect_entangler_coords(const WeylPoint& p);

/// Spectral route: U is a perfect entangler iff the convex hull of the
/// eigenvalues of M(U)/√det(U) (unit-circle points) contains zero.
/// Implemented as a largest-gap test on the sorted eigenphases.
bool is_perfect_entangler_hull(const Gate4& u);

/// Deterministic uniform sample from the tetrahedron: sample `index` of
/// stream `seed`, via sorted-uniform barycentric weights on (O,A1,A2,A3).
WeylPoint chamber_point(std::uint64_t seed, std::uint64_t index);

/// n chamber points in index order. Parallel and serial versions produce
/// identical vectors; the serial one exists as a reference for tests.
std::vector<WeylPoint> sample_chamber(std::size_t n, std::uint64_t seed);
std::vector<WeylPoint> sample_chamber_serial(std::size_t n, std::uint64_t seed);

/// Monte-Carlo estimate of the perfect-entangler fraction of the
/// tetrahedron (exact value 1/2).
struct PeVolumeEstimate {
  double fraction = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
};

PeVolumeEstimate pe_volume(std::size_t n, std::uint64_t seed);
PeVolumeEstimate pe_volume_serial(std::size_t n, std::uint64_t seed);

}  // namespace qweyl
