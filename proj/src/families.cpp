#include "qweyl/families.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {
constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Complex cis(double x) { return std::exp(kI * x); }
}  // namespace

Gate4 identity4() { return Gate4::Identity(); }

Gate4 cnot_gate() {
  Gate4 m = Gate4::Zero();
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  return m;
}

Gate4 swap_gate() {
  Gate4 m = Gate4::Zero();
  m(0, 0) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(3, 3) = 1;
  return m;
}

Gate4 swap_alpha(double alpha, bool inverse) {
  const Complex ph = cis(inverse ? -kPi * alpha : kPi * alpha);
  Gate4 m = Gate4::Zero();
  m(0, 0) = 1;
  m(3, 3) = 1;
  m(1, 1) = m(2, 2) = (1.0 + ph) / 2.0;
  m(1, 2) = m(2, 1) = (1.0 - ph) / 2.0;
  return m;
}

WeylPoint EdgeFamily::point(double t) const {
  if (t < t_min - 1e-12 || t > t_max + 1e-12) {
    std::ostringstream msg;
    msg << "family " << label << ": " << param_symbol << " = " << t
        << " outside [" << t_min << ", " << t_max << "]";
    throw ParamOutOfRangeError(msg.str());
  }
  return point_fn(t);
}

EdgeValues EdgeFamily::closed(double t) const {
  if (t < t_min - 1e-12 || t > t_max + 1e-12) {
    std::ostringstream msg;
    msg << "family " << label << ": " << param_symbol << " = " << t
        << " outside [" << t_min << ", " << t_max << "]";
    throw ParamOutOfRangeError(msg.str());
  }
  return closed_fn(t);
}

const std::vector<EdgeFamily>& weyl_edges() {
  static const std::vector<EdgeFamily> edges = {
      {"OA1", "theta", 0.0, kPi,
       [](double t) { return WeylPoint{t, 0, 0}; },
       [](double t) {
         const double c = std::cos(2 * t);
         return EdgeValues{(1 - c) / 9.0, Complex(std::cos(t) * std::cos(t)),
                           2 * std::cos(t) * std::cos(t) + 1};
       }},
      {"OA2", "theta", 0.0, kPi / 2,
       [](double t) { return WeylPoint{t, t, 0}; },
       [](double t) {
         const double c = std::cos(2 * t);
         return EdgeValues{(3 - c * c - 2 * c) / 18.0,
                           Complex(0.25 * (1 + c) * (1 + c)), 1 + 2 * c};
       }},
      {"A2A1", "phi", 0.0, kPi / 2,
       [](double t) { return WeylPoint{kPi / 2 + t, kPi / 2 - t, 0}; },
       [](double t) {
         const double c = std::cos(2 * t);
         return EdgeValues{(3 - c * c + 2 * c) / 18.0,
                           Complex(0.25 * (c - 1) * (c - 1)), 1 - 2 * c};
       }},
      {"A2A3", "phi", 0.0, kPi / 2,
       [](double t) { return WeylPoint{kPi / 2, kPi / 2, t}; },
       [](double t) {
         const double s = std::sin(t);
         return EdgeValues{(1 + std::cos(2 * t)) / 9.0, Complex(-s * s),
                           std::cos(2 * t) - 2};
       }},
      {"OA3", "alpha", 0.0, 1.0,
       [](double a) {
         return WeylPoint{kPi * a / 2, kPi * a / 2, kPi * a / 2};
       },
       [](double a) {
         return EdgeValues{
             (1 - std::cos(2 * kPi * a)) / 12.0,
             (9.0 * cis(-kPi * a) + cis(3 * kPi * a) + 6.0 * cis(kPi * a)) /
                 16.0,
             3 * std::cos(kPi * a)};
       }},
      {"A1A3", "alpha", 0.0, 1.0,
       [](double a) {
         return WeylPoint{kPi - kPi * a / 2, kPi * a / 2, kPi * a / 2};
       },
       [](double a) {
         return EdgeValues{
             (1 - std::cos(2 * kPi * a)) / 12.0,
             (9.0 * cis(kPi * a) + cis(-3 * kPi * a) + 6.0 * cis(-kPi * a)) /
                 16.0,
             3 * std::cos(kPi * a)};
       }},
  };
  return edges;
}

const std::vector<EdgeFamily>& polyhedron_edges() {
  static const std::vector<EdgeFamily> edges = {
      {"LQ", "theta", 0.0, kPi / 4,
       [](double t) { return WeylPoint{kPi / 2 - t, t, 0}; },
       [](double t) {
         const double c = std::cos(2 * t), s = std::sin(2 * t);
         return EdgeValues{(3 + c * c) / 18.0, Complex(0.25 * s * s), 1.0};
       }},
      {"LM", "theta", 0.0, kPi / 4,
       [](double t) { return WeylPoint{kPi / 2 + t, t, 0}; },
       [](double t) {
         const double c = std::cos(2 * t), s = std::sin(2 * t);
         return EdgeValues{(3 + c * c) / 18.0, Complex(0.25 * s * s), 1.0};
       }},
      {"A2M", "phi", 0.0, kPi / 4,
       [](double t) { return WeylPoint{kPi / 2 + t, kPi / 2 - t, 0}; },
       [](double t) {
         const double c = std::cos(2 * t);
         return EdgeValues{(3 - c * c + 2 * c) / 18.0,
                           Complex(0.25 * (1 - c) * (1 - c)), 1 - 2 * c};
       }},
      {"A2Q", "phi", 0.0, kPi / 4,
       [](double t) { return WeylPoint{kPi / 2 - t, kPi / 2 - t, 0}; },
       [](double t) {
         const double c = std::cos(2 * t);
         return EdgeValues{(3 - c * c + 2 * c) / 18.0,
                           Complex(0.25 * (1 - c) * (1 - c)), 1 - 2 * c};
       }},
      {"QP", "eta", 0.0, kPi / 4,
       [](double t) { return WeylPoint{kPi / 4, kPi / 4, t}; },
       [](double t) {
         return EdgeValues{1.0 / 6.0, 0.25 * cis(-2 * t), std::cos(2 * t)};
       }},
      {"MN", "eta", 0.0, kPi / 4,
       [](double t) { return WeylPoint{3 * kPi / 4, kPi / 4, t}; },
       [](double t) {
         return EdgeValues{1.0 / 6.0, 0.25 * cis(2 * t), std::cos(2 * t)};
       }},
      {"PN", "eta", 0.0, kPi / 2,
       [](double t) { return WeylPoint{kPi / 4 + t, kPi / 4, kPi / 4}; },
       [](double t) {
         return EdgeValues{1.0 / 6.0, -0.25 * kI * cis(-2 * t),
                           -std::sin(2 * t)};
       }},
      {"LN", "theta", 0.0, kPi / 4,
       [](double t) { return WeylPoint{kPi / 2 + t, t, t}; },
       [](double t) {
         const double c = std::cos(2 * t);
         const Complex b = cis(t) * std::sin(2 * t);
         return EdgeValues{(3 + c * c) / 18.0, 0.25 * b * b, c};
       }},
      {"A2P", "theta", 0.0, kPi / 4,
       [](double t) { return WeylPoint{kPi / 2 - t, kPi / 2 - t, t}; },
       [](double t) {
         const double c = std::cos(2 * t);
         const Complex b = cis(t) * std::sin(2 * t);
         return EdgeValues{(3 + c * c) / 18.0, -0.25 * b * b, -c};
       }},
  };
  return edges;
}

const EdgeFamily& spe_line() {
  static const EdgeFamily line = {
      "SPE", "theta", 0.0, kPi / 2,
      [](double t) { return WeylPoint{kPi / 2, t, 0}; },
      [](double t) {
        return EdgeValues{2.0 / 9.0, Complex(0.0), std::cos(2 * t)};
      }};
  return line;
}

const EdgeFamily& find_family(const std::string& label) {
  for (const auto& fam : weyl_edges())
    if (fam.label == label) return fam;
  for (const auto& fam : polyhedron_edges())
    if (fam.label == label) return fam;
  if (spe_line().label == label) return spe_line();
  throw ParseError("unknown family label: " + label);
}

}  // namespace qweyl
