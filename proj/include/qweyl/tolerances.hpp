#pragma once

namespace qweyl {

/// Central tolerance configuration. All numerical thresholds used by the
/// library live here; functions take their defaults from the active record.
struct Tolerances {
  /// max|(U†U - I)| accepted by assert_unitary.
  double unitary = 1e-10;
  /// Spectrum self-consistency (|λ|=1, Σλ=tr, Πλ=det) for unitary input.
  double spectrum = 1e-8;
  /// |Im G2| above which the invariant computation fails loudly.
  double g2_imag = 1e-9;
  /// Default tolerance for invariant equality in locally_equivalent.
  double invariant_match = 1e-9;
  /// Invariant agreement required of a coordinate-extraction candidate.
  double coords_validate = 1e-8;
  /// Boundary slack of the canonical-tetrahedron membership predicate.
  double chamber_boundary = 1e-9;
  /// Boundary slack of both perfect-entangler tests (closed polyhedron).
  double pe_boundary = 1e-9;
  /// Norm deviation accepted by linear_entropy.
  double state_norm = 1e-9;
  /// Self-check threshold for constructed canonical gates.
  double gate_construction = 1e-12;
};

/// Active tolerance record (defaults above until overridden).
const Tolerances& tolerances();

/// Replace the active record. Call once at startup, before any worker
/// threads exist; the record is read without synchronization.
void set_tolerances(const Tolerances& tol);

}  // namespace qweyl
