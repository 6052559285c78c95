#include "qweyl/invariants.hpp"

#include <cmath>
#include <sstream>

#include "qweyl/errors.hpp"
#include "qweyl/tolerances.hpp"

namespace qweyl {

namespace {
const Complex kI(0.0, 1.0);
const double kInvSqrt2 = 0.70710678118654752440;
}  // namespace

const Gate4& bell_q() {
  static const Gate4 q = [] {
    Gate4 m;
    m << 1, 0, 0, kI,
         0, kI, 1, 0,
         0, kI, -1, 0,
         1, 0, 0, -kI;
    m *= kInvSqrt2;
    assert_unitary(m, 1e-15);
    return m;
  }();
  return q;
}

Gate4 bell_transform(const Gate4& u) { return bell_q().adjoint() * u * bell_q(); }

Gate4 bell_transform_inverse(const Gate4& ub) {
  return bell_q() * ub * bell_q().adjoint();
}

Gate4 m_matrix(const Gate4& u) {
  Gate4 ub = bell_transform(u);
  return ub.transpose() * ub;
}

LocalInvariants local_invariants(const Gate4& u) {
  assert_unitary(u, tolerances().unitary);

  const Gate4 m = m_matrix(u);
  const Complex det_u = u.determinant();
  const Complex tr_m = m.trace();
  const Complex tr_m2 = (m * m).trace();

  const Complex g1 = tr_m * tr_m / (16.0 * det_u);
  const Complex g2c = (tr_m * tr_m - tr_m2) / (4.0 * det_u);

  if (std::abs(g2c.imag()) > tolerances().g2_imag) {
    std::ostringstream msg;
    msg << "G2 has a nonzero imaginary part (" << g2c.imag()
        << "); input is not a genuine two-qubit unitary";
    throw NotUnitaryError(msg.str(), std::abs(g2c.imag()));
  }

  LocalInvariants inv{g1, g2c.real()};
  if (std::abs(inv.g1) > 1.0 + 1e-9 || std::abs(inv.g2) > 3.0 + 1e-9) {
    std::ostringstream msg;
    msg << "invariants out of range: |G1| = " << std::abs(inv.g1)
        << ", G2 = " << inv.g2;
    throw NotUnitaryError(msg.str(), std::abs(inv.g1));
  }
  return inv;
}

bool locally_equivalent(const Gate4& u, const Gate4& v, double tol) {
  const LocalInvariants a = local_invariants(u);
  const LocalInvariants b = local_invariants(v);
  return std::abs(a.g1 - b.g1) <= tol && std::abs(a.g2 - b.g2) <= tol;
}

}  // namespace qweyl
