#pragma once

#include "qweyl/linalg.hpp"

namespace qweyl {

/// The pair of local invariants of a two-qubit gate: complex G1 and real
/// G2. Two gates are equivalent up to single-qubit operations exactly
/// when both agree.
struct LocalInvariants {
  Complex g1;
  double g2;
};

/// Transformation into the Bell (magic) basis,
///   Q = (1/√2) [[1,0,0,i],[0,i,1,0],[0,i,-1,0],[1,0,0,-i]],
/// whose columns are the Bell states Φ+, Φ-, Ψ+, Ψ- up to phase.
const Gate4& bell_q();

/// U expressed in the Bell basis: Q† U Q.
Gate4 bell_transform(const Gate4& u);

/// Inverse change of basis: Q U_B Q†.
Gate4 bell_transform_inverse(const Gate4& ub);

/// M(U) = U_B^T U_B with U_B = Q† U Q. Symmetric unitary; its spectrum
/// determines the local equivalence class.
Gate4 m_matrix(const Gate4& u);

/// Local invariants
///   G1 = tr²[M] / (16 det U),  G2 = (tr²[M] - tr[M²]) / (4 det U).
/// Validates unitarity of u first and that G2 is real within the g2_imag
/// tolerance; range-checks |G1| ≤ 1 and |G2| ≤ 3.
LocalInvariants local_invariants(const Gate4& u);

/// True when u and v share both invariants within tol (component-wise on
/// G1, absolute on G2).
bool locally_equivalent(const Gate4& u, const Gate4& v, double tol = 1e-9);

}  // namespace qweyl
