#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "qweyl/invariants.hpp"
#include "qweyl/linalg.hpp"

namespace qweyl {

/// A layer of single-qubit gates k1 ⊗ k2.
struct LocalLayer {
  Mat2 k1;
  Mat2 k2;
};

/// A product of two-qubit gates and local layers. Factors are listed
/// left to right as written on paper: the leftmost factor is applied
/// last.
struct CircuitExpr {
  std::vector<std::variant<Gate4, LocalLayer>> factors;
};

/// Multiplies the factors out. Each factor is unitarity-checked.
Gate4 evaluate(const CircuitExpr& expr);

/// Result of testing a circuit against the CNOT class (G1 = 0, G2 = 1).
struct ClassVerdict {
  bool equivalent = false;
  LocalInvariants measured;
};

ClassVerdict verify_cnot_class(const CircuitExpr& expr, double tol = 1e-9);

/// One CNOT construction: a named circuit template, possibly with a free
/// parameter swept over [t_min, t_max].
struct Construction {
  std::string label;
  bool parametric = false;
  double t_min = 0.0;
  double t_max = 0.0;
  std::function<CircuitExpr(double)> build;  // ignores t when !parametric
};

/// The CNOT constructions checked by `verify`: two square-root-of-SWAP
/// sandwiches, the QP/MN/PN edge-gate sandwiches with their local
/// layers, and the direct canonical gate at [π/2, 0, 0].
const std::vector<Construction>& cnot_constructions();

/// Per-construction worst-case deviation from the CNOT class over a
/// parameter grid.
struct ConstructionReport {
  std::string label;
  bool passed = false;
  double max_abs_g1 = 0.0;   // worst |G1|
  double max_dev_g2 = 0.0;   // worst |G2 - 1|
  double worst_param = 0.0;  // parameter attaining the worst deviation
};

std::vector<ConstructionReport> verify_all_constructions(int grid_size = 21,
                                                         double tol = 1e-9);

}  // namespace qweyl
