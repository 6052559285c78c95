#include "qweyl/io.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qweyl/errors.hpp"

namespace qweyl {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

GateFile parse_gate_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("gate file: top level must be an object");
  if (!j.contains("matrix")) throw ParseError("gate file: missing \"matrix\"");

  GateFile gf;
  if (j.contains("name")) {
    if (!j["name"].is_string())
      throw ParseError("gate file: \"name\" must be a string");
    gf.name = j["name"].get<std::string>();
  }

  const json& m = j["matrix"];
  if (!m.is_array() || m.size() != 4)
    throw ParseError("gate file: \"matrix\" must be an array of 4 rows");
  for (int r = 0; r < 4; ++r) {
    const json& row = m[r];
    if (!row.is_array() || row.size() != 4)
      throw ParseError("gate file: each row must hold 4 entries");
    for (int c = 0; c < 4; ++c) {
      const json& ent = row[c];
      if (!ent.is_array() || ent.size() != 2 || !ent[0].is_number() ||
          !ent[1].is_number())
        throw ParseError("gate file: entries must be [re, im] pairs");
      gf.matrix(r, c) = Complex(ent[0].get<double>(), ent[1].get<double>());
    }
  }
  return gf;
}

GateFile read_gate_file(const std::string& path) {
  return parse_gate_json(slurp(path));
}

std::string gate_to_json(const GateFile& gf) {
  json j;
  if (gf.name) j["name"] = *gf.name;
  json m = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c)
      row.push_back(json::array(
          {gf.matrix(r, c).real(), gf.matrix(r, c).imag()}));
    m.push_back(row);
  }
  j["matrix"] = m;
  return j.dump(2) + "\n";
}

void write_gate_file(const std::string& path, const GateFile& gf) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << gate_to_json(gf);
}

namespace {

constexpr const char* kSweepHeader =
    "family_label,param_value,c1,c2,c3,e_p,g1_re,g1_im,g2,is_pe";

std::string fmt12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& rows) {
  os << kSweepHeader << "\n";
  for (const SweepRecord& r : rows) {
    os << r.family_label << ',' << fmt12(r.param_value) << ',' << fmt12(r.c1)
       << ',' << fmt12(r.c2) << ',' << fmt12(r.c3) << ',' << fmt12(r.ep) << ','
       << fmt12(r.g1.real()) << ',' << fmt12(r.g1.imag()) << ','
       << fmt12(r.g2) << ',' << (r.is_pe ? '1' : '0') << "\n";
  }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("sweep CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSweepHeader)
    throw ParseError("sweep CSV: unexpected header: " + line);

  std::vector<SweepRecord> rows;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 10)
      throw ParseError("sweep CSV: expected 10 fields, got " +
                       std::to_string(fields.size()));

    auto num = [&](int i) {
      std::size_t pos = 0;
      double v;
      try {
        v = std::stod(fields[i], &pos);
      } catch (const std::exception&) {
        throw ParseError("sweep CSV: bad number: " + fields[i]);
      }
      if (pos != fields[i].size())
        throw ParseError("sweep CSV: bad number: " + fields[i]);
      return v;
    };

    SweepRecord r;
    r.family_label = fields[0];
    r.param_value = num(1);
    r.c1 = num(2);
    r.c2 = num(3);
    r.c3 = num(4);
    r.ep = num(5);
    r.g1 = Complex(num(6), num(7));
    r.g2 = num(8);
    if (fields[9] == "0")
      r.is_pe = false;
    else if (fields[9] == "1")
      r.is_pe = true;
    else
      throw ParseError("sweep CSV: is_pe must be 0 or 1, got " + fields[9]);
    rows.push_back(r);
  }
  return rows;
}

Tolerances load_tolerances(const std::string& path) {
  const json j = parse_json(slurp(path));
  if (!j.is_object())
    throw ParseError("tolerance file: top level must be an object");

  Tolerances tol;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number())
      throw ParseError("tolerance file: " + key + " must be a number");
    const double v = value.get<double>();
    if (key == "unitary")
      tol.unitary = v;
    else if (key == "spectrum")
      tol.spectrum = v;
    else if (key == "g2_imag")
      tol.g2_imag = v;
    else if (key == "invariant_match")
      tol.invariant_match = v;
    else if (key == "coords_validate")
      tol.coords_validate = v;
    else if (key == "chamber_boundary")
      tol.chamber_boundary = v;
    else if (key == "pe_boundary")
      tol.pe_boundary = v;
    else if (key == "state_norm")
      tol.state_norm = v;
    else if (key == "gate_construction")
      tol.gate_construction = v;
    else
      throw ParseError("tolerance file: unknown key: " + key);
  }
  return tol;
}

}  // namespace qweyl
