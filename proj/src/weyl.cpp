#include "qweyl/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qweyl/errors.hpp"
#include "qweyl/rng.hpp"
#include "qweyl/tolerances.hpp"

namespace qweyl {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

/// Reduce into [0, π). Shifts by π do not change the gate class.
double mod_pi(double x) {
  double r = std::fmod(x, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r = 0.0;  // rounding guard; π and 0 are the same class
  return r;
}

bool lex_less(const WeylPoint& a, const WeylPoint& b) {
  if (a.c1 != b.c1) return a.c1 < b.c1;
  if (a.c2 != b.c2) return a.c2 < b.c2;
  return a.c3 < b.c3;
}

}  // namespace

LocalInvariants invariants_from_point(const WeylPoint& p) {
  const Complex bracket = std::exp(-kI * p.c3) * std::cos(p.c1 - p.c2) +
                          std::exp(kI * p.c3) * std::cos(p.c1 + p.c2);
  const double g2 =
      std::cos(2 * p.c1) + std::cos(2 * p.c2) + std::cos(2 * p.c3);
  return LocalInvariants{0.25 * bracket * bracket, g2};
}

Gate4 canonical_gate(const WeylPoint& p) {
  const double cm = std::cos((p.c1 - p.c2) / 2);
  const double sm = std::sin((p.c1 - p.c2) / 2);
  const double cp = std::cos((p.c1 + p.c2) / 2);
  const double sp = std::sin((p.c1 + p.c2) / 2);
  const Complex outer = std::exp(-kI * (p.c3 / 2));
  const Complex inner = std::exp(kI * (p.c3 / 2));

  Gate4 u = Gate4::Zero();
  u(0, 0) = outer * cm;
  u(0, 3) = outer * (-kI) * sm;
  u(3, 0) = outer * (-kI) * sm;
  u(3, 3) = outer * cm;
  u(1, 1) = inner * cp;
  u(1, 2) = inner * (-kI) * sp;
  u(2, 1) = inner * (-kI) * sp;
  u(2, 2) = inner * cp;

  assert_unitary(u, tolerances().gate_construction);
  return u;
}

bool is_canonical(const WeylPoint& p) {
  const double tol = tolerances().chamber_boundary;
  return p.c1 >= -tol && p.c1 <= kPi + tol && p.c3 >= -tol &&
         p.c3 <= p.c2 + tol && p.c2 <= p.c1 + tol && p.c2 <= kPi - p.c1 + tol;
}

WeylPoint canonicalize(const WeylPoint& p) {
  if (is_canonical(p)) return p;

  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  static const double signs[4][3] = {
      {1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};

  const double c[3] = {p.c1, p.c2, p.c3};
  bool found = false;
  WeylPoint best;
  for (const auto& perm : perms) {
    for (const auto& sg : signs) {
      const WeylPoint cand{mod_pi(sg[0] * c[perm[0]]),
                           mod_pi(sg[1] * c[perm[1]]),
                           mod_pi(sg[2] * c[perm[2]])};
      if (!is_canonical(cand)) continue;
      if (!found || lex_less(cand, best)) {
        best = cand;
        found = true;
      }
    }
  }
  // Permutations, even sign flips and π-shifts tile coordinate space with
  // copies of the canonical tetrahedron, so one of the 24 images above is
  // always canonical.
  if (!found) throw NoConvergenceError("canonicalization found no image");
  return best;
}

WeylPoint coordinates_of(const Gate4& u) {
  const LocalInvariants target = local_invariants(u);  // also checks unitarity
  const Spectrum4 spec = eig4(m_matrix(u), /*unitary_input=*/true);
  const Complex root_det = std::sqrt(u.determinant());
  const double tol = tolerances().coords_validate;

  // Eigenphases of M/√det are the four combinations ∓(±c1 ± c2 ± c3) with
  // an even number of minus signs inside; pairwise sums recover the
  // coordinates. Ordering and 2π branches are unknown, so try every
  // assignment (both square roots shift all phases by π, a symmetry, but
  // trying them costs nothing) and keep the first candidate whose
  // invariants match.
  for (int branch = 0; branch < 2; ++branch) {
    const Complex s = branch == 0 ? root_det : -root_det;
    double theta[4];
    for (int i = 0; i < 4; ++i) theta[i] = std::arg(spec.values[i] / s);

    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        if (b == a) continue;
        for (int c = 0; c < 4; ++c) {
          if (c == a || c == b) continue;
          const WeylPoint raw{-(theta[a] + theta[b]) / 2,
                              -(theta[a] + theta[c]) / 2,
                              -(theta[b] + theta[c]) / 2};
          const WeylPoint cand = canonicalize(raw);
          const LocalInvariants got = invariants_from_point(cand);
          if (std::abs(got.g1 - target.g1) <= tol &&
              std::abs(got.g2 - target.g2) <= tol)
            return cand;
        }
      }
    }
  }
  throw NoConvergenceError("no coordinate triple reproduces the invariants");
}

double pe_margin(const WeylPoint& p) {
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const double c[3] = {p.c1, p.c2, p.c3};
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& perm : perms) {
    const double s1 = c[perm[0]] + c[perm[2]];
    const double s2 = c[perm[0]] + c[perm[1]] + kPi / 2;
    for (const double base : {kPi / 2, 3 * kPi / 2}) {
      const double upper = base + kPi / 2;
      const double margin = std::min({s1 - base, s2 - s1, upper - s2});
      best = std::max(best, margin);
    }
  }
  return best;
}

bool is_perfect_entangler_coords(const WeylPoint& p) {
  return pe_margin(canonicalize(p)) >= -tolerances().pe_boundary;
}

bool is_perfect_entangler_hull(const Gate4& u) {
  const Spectrum4 spec = eig4(m_matrix(u), /*unitary_input=*/true);
  const Complex s = std::sqrt(u.determinant());

  // U entangles perfectly iff 0 lies in the convex hull of the spectrum of
  // M/√det, four points on the unit circle: equivalently the largest gap
  // between consecutive eigenphases is at most π. The sign of the square
  // root rotates all phases by π and leaves the gaps unchanged.
  double phase[4];
  for (int i = 0; i < 4; ++i) phase[i] = std::arg(spec.values[i] / s);
  std::sort(phase, phase + 4);

  double max_gap = 2 * kPi - (phase[3] - phase[0]);
  for (int i = 0; i < 3; ++i) max_gap = std::max(max_gap, phase[i + 1] - phase[i]);
  return max_gap <= kPi + tolerances().pe_boundary;
}

WeylPoint chamber_point(std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng = sample_rng(seed, index);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double u[3] = {unif(rng), unif(rng), unif(rng)};
  std::sort(u, u + 3);

  // Barycentric weights over (O, A1, A2, A3) from sorted uniforms give a
  // uniform draw from the tetrahedron.
  const double w1 = u[1] - u[0];
  const double w2 = u[2] - u[1];
  const double w3 = 1.0 - u[2];
  return WeylPoint{kPi * w1 + (kPi / 2) * (w2 + w3), (kPi / 2) * (w2 + w3),
                   (kPi / 2) * w3};
}

std::vector<WeylPoint> sample_chamber(std::size_t n, std::uint64_t seed) {
  std::vector<WeylPoint> out(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    out[static_cast<std::size_t>(i)] =
        chamber_point(seed, static_cast<std::uint64_t>(i));
  return out;
}

std::vector<WeylPoint> sample_chamber_serial(std::size_t n, std::uint64_t seed) {
  std::vector<WeylPoint> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = chamber_point(seed, i);
  return out;
}

namespace {

PeVolumeEstimate pe_estimate_from_count(long long count, std::size_t n) {
  PeVolumeEstimate est;
  est.n_samples = n;
  est.fraction = static_cast<double>(count) / static_cast<double>(n);
  est.std_error =
      std::sqrt(est.fraction * (1.0 - est.fraction) / static_cast<double>(n));
  return est;
}

}  // namespace

PeVolumeEstimate pe_volume(std::size_t n, std::uint64_t seed) {
  const double tol = tolerances().pe_boundary;
  long long count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    const WeylPoint p = chamber_point(seed, static_cast<std::uint64_t>(i));
    if (pe_margin(p) >= -tol) ++count;
  }
  return pe_estimate_from_count(count, n);
}

PeVolumeEstimate pe_volume_serial(std::size_t n, std::uint64_t seed) {
  const double tol = tolerances().pe_boundary;
  long long count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const WeylPoint p = chamber_point(seed, i);
    if (pe_margin(p) >= -tol) ++count;
  }
  return pe_estimate_from_count(count, n);
}

}  // namespace qweyl
