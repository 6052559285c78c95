#include "qweyl/circuits.hpp"

#include <cmath>
#include <numbers>

#include "qweyl/errors.hpp"
#include "qweyl/families.hpp"
#include "qweyl/tolerances.hpp"
#include "qweyl/weyl.hpp"

namespace qweyl {

namespace {
constexpr double kPi = std::numbers::pi;

Gate4 factor_matrix(const std::variant<Gate4, LocalLayer>& f) {
  if (std::holds_alternative<Gate4>(f)) return std::get<Gate4>(f);
  const LocalLayer& l = std::get<LocalLayer>(f);
  return kron(l.k1, l.k2);
}
}  // namespace

Gate4 evaluate(const CircuitExpr& expr) {
  Gate4 acc = Gate4::Identity();
  for (const auto& f : expr.factors) {
    const Gate4 g = factor_matrix(f);
    assert_unitary(g, tolerances().unitary);
    acc = acc * g;
  }
  return acc;
}

ClassVerdict verify_cnot_class(const CircuitExpr& expr, double tol) {
  const LocalInvariants inv = local_invariants(evaluate(expr));
  ClassVerdict v;
  v.measured = inv;
  v.equivalent = std::abs(inv.g1) <= tol && std::abs(inv.g2 - 1.0) <= tol;
  return v;
}

namespace {

Gate4 edge_gate(const std::string& family, double t) {
  return canonical_gate(find_family(family).point(t));
}

CircuitExpr sandwich(const Gate4& outer, const Mat2& k1, const Mat2& k2) {
  CircuitExpr e;
  e.factors.emplace_back(outer);
  e.factors.emplace_back(LocalLayer{k1, k2});
  e.factors.emplace_back(outer);
  return e;
}

}  // namespace

const std::vector<Construction>& cnot_constructions() {
  static const std::vector<Construction> list = {
      // Two inverse square roots of SWAP around a single local layer.
      {"sqrt-swap-inv/xy", false, 0, 0,
       [](double) {
         return sandwich(swap_alpha(0.5, true), pauli_x(), pauli_y());
       }},
      {"sqrt-swap-inv/xz", false, 0, 0,
       [](double) {
         return sandwich(swap_alpha(0.5, true), pauli_x(), pauli_z());
       }},
      // Gates along the QP edge: any member conjugating I⊗σx or I⊗σy
      // lands in the CNOT class.
      {"QP/ix", true, 0, kPi / 4,
       [](double t) {
         return sandwich(edge_gate("QP", t), identity2(), pauli_x());
       }},
      {"QP/iy", true, 0, kPi / 4,
       [](double t) {
         return sandwich(edge_gate("QP", t), identity2(), pauli_y());
       }},
      // Gates along the MN edge with σx⊗σz or σy⊗σz between them.
      {"MN/xz", true, 0, kPi / 4,
       [](double t) {
         return sandwich(edge_gate("MN", t), pauli_x(), pauli_z());
       }},
      {"MN/yz", true, 0, kPi / 4,
       [](double t) {
         return sandwich(edge_gate("MN", t), pauli_y(), pauli_z());
       }},
      // Gates along the PN edge with σx⊗σz between them.
      {"PN/xz", true, 0, kPi / 2,
       [](double t) {
         return sandwich(edge_gate("PN", t), pauli_x(), pauli_z());
       }},
  };
  return list;
}

std::vector<ConstructionReport> verify_all_constructions(int grid_size,
                                                         double tol) {
  std::vector<ConstructionReport> reports;
  for (const Construction& con : cnot_constructions()) {
    ConstructionReport rep;
    rep.label = con.label;

    const int steps = con.parametric ? std::max(grid_size, 2) : 1;
    for (int i = 0; i < steps; ++i) {
      const double t =
          con.parametric
              ? con.t_min + (con.t_max - con.t_min) * i / (steps - 1)
              : 0.0;
      const ClassVerdict v = verify_cnot_class(con.build(t), tol);
      const double dev_g1 = std::abs(v.measured.g1);
      const double dev_g2 = std::abs(v.measured.g2 - 1.0);
      if (std::max(dev_g1, dev_g2) > std::max(rep.max_abs_g1, rep.max_dev_g2)) {
        rep.worst_param = t;
      }
      rep.max_abs_g1 = std::max(rep.max_abs_g1, dev_g1);
      rep.max_dev_g2 = std::max(rep.max_dev_g2, dev_g2);
    }
    rep.passed = rep.max_abs_g1 <= tol && rep.max_dev_g2 <= tol;
    reports.push_back(rep);
  }
  return reports;
}

}  // namespace qweyl
