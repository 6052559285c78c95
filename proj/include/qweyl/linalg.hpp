#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace qweyl {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Gate4 = Eigen::Matrix4cd;
using State4 = Eigen::Vector4cd;

/// Eigenvalues of a 4x4 matrix, in the order the solver produces them.
struct Spectrum4 {
  std::array<Complex, 4> values;
};

/// Kronecker product a ⊗ b with the first factor acting on qubit 1.
/// Basis order throughout: |00⟩, |01⟩, |10⟩, |11⟩.
Gate4 kron(const Mat2& a, const Mat2& b);

/// max |(U†U - I)_jk| over all entries.
double unitarity_deviation(const Gate4& u);

/// Throws NotUnitaryError when unitarity_deviation(u) exceeds tol.
void assert_unitary(const Gate4& u, double tol);

/// Eigenvalues of an arbitrary complex 4x4 matrix. When `unitary_input`
/// is set the spectrum is sanity-checked (|λ|=1, Σλ=tr, Πλ=det) against
/// the spectrum tolerance. Throws NoConvergenceError if the QR iteration
/// fails, NotUnitaryError if the sanity check does.
Spectrum4 eig4(const Gate4& m, bool unitary_input = false);

/// Pauli matrices σx, σy, σz and the 2x2 identity.
const Mat2& pauli_x();
const Mat2& pauli_y();
const Mat2& pauli_z();
const Mat2& identity2();

}  // namespace qweyl
