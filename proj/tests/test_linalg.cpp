#include <algorithm>
#include <doctest.h>

#include "helpers.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/linalg.hpp"
#include "qweyl/rng.hpp"

using namespace qweyl;
using test_helpers::max_abs_diff;
using test_helpers::random_unitary;

TEST_CASE("kron of identities is the identity") {
  CHECK(max_abs_diff(kron(identity2(), identity2()), Gate4::Identity()) == 0.0);
}

TEST_CASE("kron entry layout: first factor acts on qubit 1") {
  // (σx ⊗ σz)|00⟩ = |10⟩, i.e. column 0 has its 1 in row 2.
  const Gate4 g = kron(pauli_x(), pauli_z());
  CHECK(g(2, 0) == Complex(1, 0));
  CHECK(g(3, 1) == Complex(-1, 0));
  CHECK(g(0, 2) == Complex(1, 0));
  CHECK(g(1, 3) == Complex(-1, 0));
  CHECK(std::abs(g(0, 0)) == 0.0);
}

TEST_CASE("kron is multiplicative: (a⊗b)(c⊗d) = ac⊗bd") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat2 a = random_su2(rng), b = random_su2(rng);
    const Mat2 c = random_su2(rng), d = random_su2(rng);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-14);
  }
}

TEST_CASE("unitarity deviation and assert_unitary") {
  CHECK(unitarity_deviation(Gate4::Identity()) == 0.0);
  CHECK_NOTHROW(assert_unitary(Gate4::Identity(), 1e-15));

  const Gate4 bad = 2.0 * Gate4::Identity();  // U†U = 4I, deviation 3
  CHECK(unitarity_deviation(bad) == doctest::Approx(3.0));
  CHECK_THROWS_AS(assert_unitary(bad, 1e-10), NotUnitaryError);
  try {
    assert_unitary(bad, 1e-10);
  } catch (const NotUnitaryError& e) {
    CHECK(e.deviation() == doctest::Approx(3.0));
  }
}

TEST_CASE("eig4 recovers a diagonal spectrum") {
  Gate4 d = Gate4::Zero();
  d(0, 0) = Complex(0, 1);
  d(1, 1) = Complex(0, -1);
  d(2, 2) = 1;
  d(3, 3) = -1;
  Spectrum4 s = eig4(d, /*unitary_input=*/true);

  std::array<Complex, 4> got = s.values;
  std::array<Complex, 4> want = {Complex(0, 1), Complex(0, -1), Complex(1, 0),
                                 Complex(-1, 0)};
  auto key = [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  };
  std::sort(got.begin(), got.end(), key);
  std::sort(want.begin(), want.end(), key);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-12);
}

TEST_CASE("eig4 sanity check rejects non-unitary input when asked") {
  CHECK_THROWS_AS(eig4(2.0 * Gate4::Identity(), /*unitary_input=*/true),
                  NotUnitaryError);
  CHECK_NOTHROW(eig4(2.0 * Gate4::Identity(), /*unitary_input=*/false));
}

TEST_CASE("Pauli algebra") {
  CHECK(test_helpers::max_abs_diff2(pauli_x() * pauli_x(), identity2()) == 0.0);
  CHECK(test_helpers::max_abs_diff2(pauli_y() * pauli_y(), identity2()) == 0.0);
  CHECK(test_helpers::max_abs_diff2(pauli_z() * pauli_z(), identity2()) == 0.0);
  CHECK(test_helpers::max_abs_diff2(pauli_x() * pauli_y(),
                                    Complex(0, 1) * pauli_z()) == 0.0);
  CHECK(test_helpers::max_abs_diff2(pauli_y() * pauli_z(),
                                    Complex(0, 1) * pauli_x()) == 0.0);
}

TEST_CASE("random_su2 draws genuine SU(2) elements") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Mat2 m = random_su2(rng);
    CHECK((m.adjoint() * m - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(m.determinant() - Complex(1, 0)) < 1e-14);
  }
}

TEST_CASE("random_unitary helper draws unitaries") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i)
    CHECK(unitarity_deviation(random_unitary(rng)) < 1e-13);
}

TEST_CASE("sample_rng decorrelates indices and is reproducible") {
  std::mt19937_64 a = sample_rng(42, 0);
  std::mt19937_64 b = sample_rng(42, 0);
  std::mt19937_64 c = sample_rng(42, 1);
  CHECK(a() == b());
  std::mt19937_64 a2 = sample_rng(42, 0);
  CHECK_FALSE(a2() == c());
}
