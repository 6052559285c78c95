#include "qweyl/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "qweyl/errors.hpp"
#include "qweyl/tolerances.hpp"

namespace qweyl {

Gate4 kron(const Mat2& a, const Mat2& b) {
  Gate4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

double unitarity_deviation(const Gate4& u) {
  Gate4 d = u.adjoint() * u - Gate4::Identity();
  return d.cwiseAbs().maxCoeff();
}

void assert_unitary(const Gate4& u, double tol) {
  double dev = unitarity_deviation(u);
  if (!(dev <= tol)) {  // NaN lands here too
    std::ostringstream msg;
    msg << "matrix is not unitary: max|U†U - I| = " << dev << " > " << tol;
    throw NotUnitaryError(msg.str(), dev);
  }
}

Spectrum4 eig4(const Gate4& m, bool unitary_input) {
  Eigen::ComplexEigenSolver<Gate4> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NoConvergenceError("eigenvalue iteration did not converge");

  Spectrum4 spec;
  for (int i = 0; i < 4; ++i) spec.values[i] = solver.eigenvalues()(i);

  if (unitary_input) {
    const double tol = tolerances().spectrum;
    Complex sum = 0.0, prod = 1.0;
    for (const Complex& v : spec.values) {
      if (std::abs(std::abs(v) - 1.0) > tol)
        throw NotUnitaryError("eigenvalue off the unit circle",
                              std::abs(std::abs(v) - 1.0));
      sum += v;
      prod *= v;
    }
    if (std::abs(sum - m.trace()) > 10 * tol ||
        std::abs(prod - m.determinant()) > 10 * tol)
      throw NotUnitaryError("spectrum inconsistent with trace/determinant",
                            std::abs(sum - m.trace()));
  }
  return spec;
}

namespace {
const Complex kI(0.0, 1.0);
}

const Mat2& pauli_x() {
  static const Mat2 m = (Mat2() << 0, 1, 1, 0).finished();
  return m;
}

const Mat2& pauli_y() {
  static const Mat2 m = (Mat2() << 0, -kI, kI, 0).finished();
  return m;
}

const Mat2& pauli_z() {
  static const Mat2 m = (Mat2() << 1, 0, 0, -1).finished();
  return m;
}

const Mat2& identity2() {
  static const Mat2 m = Mat2::Identity();
  return m;
}

}  // namespace qweyl
