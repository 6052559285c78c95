#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qweyl/linalg.hpp"
#include "qweyl/tolerances.hpp"

namespace qweyl {

/// On-disk gate representation: JSON object with an optional "name" and a
/// "matrix" of 4 rows × 4 entries, each entry a [re, im] pair. Doubles
/// round-trip bit-exactly.
struct GateFile {
  std::optional<std::string> name;
  Gate4 matrix;
};

GateFile read_gate_file(const std::string& path);
GateFile parse_gate_json(const std::string& text);
void write_gate_file(const std::string& path, const GateFile& gf);
std::string gate_to_json(const GateFile& gf);

/// One row of a family sweep.
struct SweepRecord {
  std::string family_label;
  double param_value = 0.0;
  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  double ep = 0.0;
  Complex g1;
  double g2 = 0.0;
  bool is_pe = false;
};

/// CSV with header
///   family_label,param_value,c1,c2,c3,e_p,g1_re,g1_im,g2,is_pe
/// numbers as %.12g, is_pe as 0/1, newline-terminated.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& rows);
std::vector<SweepRecord> read_sweep_csv(std::istream& is);

/// Tolerance overrides from a JSON object whose keys mirror the field
/// names of Tolerances. Unknown keys are a ParseError; missing keys keep
/// their defaults.
Tolerances load_tolerances(const std::string& path);

}  // namespace qweyl
