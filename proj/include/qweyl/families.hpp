#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qweyl/linalg.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

/// Fixed gates in the ordered basis |00⟩,|01⟩,|10⟩,|11⟩ with qubit 1 the
/// first tensor factor (CNOT: qubit 1 controls, qubit 2 is the target).
Gate4 identity4();
Gate4 cnot_gate();
Gate4 swap_gate();

/// SWAP^α for real α. With `inverse` set, SWAP^{-α}:
///   [[1,0,0,0],
///    [0,(1+e^{-iπα})/2,(1-e^{-iπα})/2,0],
///    [0,(1-e^{-iπα})/2,(1+e^{-iπα})/2,0],
///    [0,0,0,1]],
/// and SWAP^{+α} is its adjoint. Defined for every real α.
Gate4 swap_alpha(double alpha, bool inverse = false);

/// Closed-form values along a parametric family.
struct EdgeValues {
  double ep = 0.0;
  Complex g1;
  double g2 = 0.0;
};

/// A one-parameter gate family: an edge of the tetrahedron, an edge of
/// the perfect-entangler polyhedron, or the special line. `point(t)`
/// gives the coordinates, `closed(t)` the closed-form e_p, G1, G2; both
/// throw ParamOutOfRangeError outside [t_min, t_max].
struct EdgeFamily {
  std::string label;
  std::string param_symbol;
  double t_min = 0.0;
  double t_max = 0.0;
  std::function<WeylPoint(double)> point_fn;
  std::function<EdgeValues(double)> closed_fn;

  WeylPoint point(double t) const;
  EdgeValues closed(double t) const;
};

/// The six tetrahedron edge families: OA1, OA2, A2A1, A2A3, OA3, A1A3.
const std::vector<EdgeFamily>& weyl_edges();

/// The nine polyhedron edge families: LQ, LM, A2M, A2Q, QP, MN, PN, LN,
/// A2P.
const std::vector<EdgeFamily>& polyhedron_edges();

/// The special line [π/2, θ, 0], θ ∈ [0, π/2]: e_p constantly 2/9,
/// G1 = 0 throughout.
const EdgeFamily& spe_line();

/// Lookup by label across all sixteen families above. Throws
/// ParseError for unknown labels.
const EdgeFamily& find_family(const std::string& label);

}  // namespace qweyl
