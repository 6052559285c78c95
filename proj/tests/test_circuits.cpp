#include <doctest.h>
#include <numbers>
#include <set>

#include "helpers.hpp"
#include "qweyl/circuits.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/families.hpp"
#include "qweyl/invariants.hpp"

using namespace qweyl;
using test_helpers::max_abs_diff;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("evaluate: empty product is the identity") {
  CHECK(max_abs_diff(evaluate(CircuitExpr{}), Gate4::Identity()) == 0.0);
}

TEST_CASE("evaluate: layers expand to Kronecker products, order is left-first") {
  CircuitExpr layer_only;
  layer_only.factors.emplace_back(LocalLayer{pauli_x(), pauli_z()});
  CHECK(max_abs_diff(evaluate(layer_only), kron(pauli_x(), pauli_z())) == 0.0);

  // Leftmost factor is applied last: [CNOT, SWAP] = CNOT·SWAP as matrices.
  CircuitExpr two;
  two.factors.emplace_back(cnot_gate());
  two.factors.emplace_back(swap_gate());
  CHECK(max_abs_diff(evaluate(two), cnot_gate() * swap_gate()) == 0.0);
  CHECK(max_abs_diff(evaluate(two), swap_gate() * cnot_gate()) > 0.5);
}

TEST_CASE("evaluate rejects non-unitary factors") {
  CircuitExpr bad;
  bad.factors.emplace_back(Gate4(2.0 * Gate4::Identity()));
  CHECK_THROWS_AS(evaluate(bad), NotUnitaryError);
}

TEST_CASE("verify_cnot_class on direct gates") {
  CircuitExpr cnot_expr;
  cnot_expr.factors.emplace_back(cnot_gate());
  const ClassVerdict good = verify_cnot_class(cnot_expr);
  CHECK(good.equivalent);
  CHECK(std::abs(good.measured.g1) < 1e-12);
  CHECK(good.measured.g2 == doctest::Approx(1.0));

  CircuitExpr swap_expr;
  swap_expr.factors.emplace_back(swap_gate());
  CHECK_FALSE(verify_cnot_class(swap_expr).equivalent);
}

TEST_CASE("construction catalog") {
  const auto& cons = cnot_constructions();
  CHECK(cons.size() == 7);
  std::set<std::string> labels;
  for (const Construction& c : cons) labels.insert(c.label);
  CHECK(labels.size() == 7);
}

TEST_CASE("every construction verifies at spot-checked parameters") {
  for (const Construction& con : cnot_constructions()) {
    CAPTURE(con.label);
    if (!con.parametric) {
      CHECK(verify_cnot_class(con.build(0)).equivalent);
      continue;
    }
    for (double frac : {0.0, 0.37, 1.0}) {
      const double t = con.t_min + (con.t_max - con.t_min) * frac;
      CHECK(verify_cnot_class(con.build(t)).equivalent);
    }
  }
}

TEST_CASE("sandwich constructions are parameter-independent as matrices") {
  // The free parameter cancels exactly, not just up to local equivalence.
  for (const Construction& con : cnot_constructions()) {
    if (!con.parametric) continue;
    CAPTURE(con.label);
    const Gate4 at_low = evaluate(con.build(con.t_min + 0.1));
    const Gate4 at_high = evaluate(con.build(con.t_min + 0.3));
    CHECK(max_abs_diff(at_low, at_high) < 1e-12);
  }
}

TEST_CASE("verify_all_constructions reports clean passes") {
  const auto reports = verify_all_constructions(11);
  CHECK(reports.size() == 7);
  for (const ConstructionReport& rep : reports) {
    CAPTURE(rep.label);
    CHECK(rep.passed);
    CHECK(rep.max_abs_g1 < 1e-12);
    CHECK(rep.max_dev_g2 < 1e-12);
  }
}

TEST_CASE("square-root-of-swap sandwiches equal the CNOT class") {
  const Gate4 root = swap_alpha(0.5, /*inverse=*/true);
  const Gate4 xy = root * kron(pauli_x(), pauli_y()) * root;
  const Gate4 xz = root * kron(pauli_x(), pauli_z()) * root;
  CHECK(locally_equivalent(xy, cnot_gate()));
  CHECK(locally_equivalent(xz, cnot_gate()));
}
