#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <string>
#include <vector>

#include "qweyl/circuits.hpp"
#include "qweyl/epower.hpp"
#include "qweyl/errors.hpp"
#include "qweyl/families.hpp"
#include "qweyl/invariants.hpp"
#include "qweyl/io.hpp"
#include "qweyl/tolerances.hpp"
#include "qweyl/weyl.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

/// Display-only cleanup: values below half the printed precision become a
/// plain 0 instead of "-0.000000000000".
double clean(double x) { return std::abs(x) < 5e-13 ? 0.0 : x; }

std::string fmt_f(double x) { return fmt("%.12f", clean(x)); }
std::string fmt_g(double x) { return fmt("%.12g", x); }

std::string fmt_complex(qweyl::Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%+.12f%+.12fi", clean(z.real()),
                clean(z.imag()));
  return buf;
}

std::string fmt_point_rad(const qweyl::WeylPoint& p) {
  return "[" + fmt_f(p.c1) + ", " + fmt_f(p.c2) + ", " + fmt_f(p.c3) + "]";
}

std::string fmt_point_pi(const qweyl::WeylPoint& p) {
  return "[" + fmt("%.10g", clean(p.c1 / kPi)) + "π, " +
         fmt("%.10g", clean(p.c2 / kPi)) + "π, " +
         fmt("%.10g", clean(p.c3 / kPi)) + "π]";
}

int cmd_analyze(const std::string& path, long mc_n, long long mc_seed,
                bool as_json) {
  const qweyl::GateFile gf = qweyl::read_gate_file(path);
  const qweyl::Gate4& u = gf.matrix;

  const qweyl::LocalInvariants inv = qweyl::local_invariants(u);
  const qweyl::WeylPoint c = qweyl::coordinates_of(u);
  const bool pe_coords = qweyl::is_perfect_entangler_coords(c);
  const bool pe_hull = qweyl::is_perfect_entangler_hull(u);
  const double ep = qweyl::entangling_power_closed(c);

  qweyl::EpEstimate mc;
  if (mc_n > 0)
    mc = qweyl::entangling_power_mc(u, static_cast<std::size_t>(mc_n),
                                    static_cast<std::uint64_t>(mc_seed));

  if (as_json) {
    nlohmann::json j;
    if (gf.name) j["name"] = *gf.name;
    j["g1"] = {clean(inv.g1.real()), clean(inv.g1.imag())};
    j["g2"] = clean(inv.g2);
    j["coordinates"] = {clean(c.c1), clean(c.c2), clean(c.c3)};
    j["coordinates_over_pi"] = {clean(c.c1 / kPi), clean(c.c2 / kPi),
                                clean(c.c3 / kPi)};
    j["perfect_entangler"] = {{"coordinate_test", pe_coords},
                              {"spectral_test", pe_hull}};
    j["entangling_power"] = {{"closed", ep}};
    if (mc_n > 0)
      j["entangling_power"]["mc"] = {{"mean", mc.mean},
                                     {"std_error", mc.std_error},
                                     {"n", mc.n_samples},
                                     {"seed", mc_seed}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "gate: " << (gf.name ? *gf.name : path) << "\n";
  std::cout << "G1 = " << fmt_complex(inv.g1) << "\n";
  std::cout << "G2 = " << fmt("%+.12f", clean(inv.g2)) << "\n";
  std::cout << "canonical coordinates: " << fmt_point_rad(c) << " rad\n";
  std::cout << "                       " << fmt_point_pi(c) << "\n";
  std::cout << "perfect entangler (coordinate test): "
            << (pe_coords ? "yes" : "no") << "\n";
  std::cout << "perfect entangler (spectral test):   "
            << (pe_hull ? "yes" : "no") << "\n";
  std::cout << "entangling power (closed form): " << fmt_f(ep) << "\n";
  if (mc_n > 0)
    std::cout << "entangling power (monte carlo): " << fmt("%.9f", mc.mean)
              << " +/- " << fmt("%.9f", mc.std_error) << "  [n=" << mc.n_samples
              << ", seed=" << mc_seed << "]\n";
  return 0;
}

int cmd_tables(const std::string& which, int grid) {
  const std::vector<qweyl::EdgeFamily>& families =
      which == "weyl" ? qweyl::weyl_edges() : qweyl::polyhedron_edges();

  for (const qweyl::EdgeFamily& fam : families) {
    std::cout << "family " << fam.label << "   " << fam.param_symbol << " in ["
              << fmt_g(fam.t_min) << ", " << fmt_g(fam.t_max) << "]\n";
    char header[120];
    std::snprintf(header, sizeof header,
                  "  %-12s  %-14s  %-31s  %-15s  PE\n", fam.param_symbol.c_str(),
                  "e_p", "G1", "G2");
    std::cout << header;

    double max_dep = 0.0, max_dg1 = 0.0, max_dg2 = 0.0;
    for (int i = 0; i < grid; ++i) {
      const double t = fam.t_min + (fam.t_max - fam.t_min) * i / (grid - 1);
      const qweyl::EdgeValues cv = fam.closed(t);
      const qweyl::WeylPoint pt = fam.point(t);

      // Independent pipeline route: invariants of the constructed gate and
      // the entangling-power formula evaluated at the coordinates.
      const qweyl::LocalInvariants pinv =
          qweyl::local_invariants(qweyl::canonical_gate(pt));
      const double pep = qweyl::entangling_power_closed(pt);

      max_dep = std::max(max_dep, std::abs(cv.ep - pep));
      max_dg1 = std::max(max_dg1, std::abs(cv.g1 - pinv.g1));
      max_dg2 = std::max(max_dg2, std::abs(cv.g2 - pinv.g2));

      std::cout << "  " << fmt("%-12.9f", t) << "  " << fmt("%.12f", cv.ep)
                << "  " << fmt_complex(cv.g1) << "  "
                << fmt("%+.12f", clean(cv.g2))
                << "  " << (qweyl::is_perfect_entangler_coords(pt) ? "yes" : "no")
                << "\n";
    }
    std::cout << "  pipeline cross-check: max|d e_p| = " << fmt("%.3g", max_dep)
              << ", max|d G1| = " << fmt("%.3g", max_dg1)
              << ", max|d G2| = " << fmt("%.3g", max_dg2) << "\n\n";
  }
  return 0;
}

int cmd_sweep(const std::string& label, int grid, const std::string& out) {
  const qweyl::EdgeFamily& fam = qweyl::find_family(label);

  std::vector<qweyl::SweepRecord> rows;
  rows.reserve(grid);
  for (int i = 0; i < grid; ++i) {
    const double t = fam.t_min + (fam.t_max - fam.t_min) * i / (grid - 1);
    const qweyl::EdgeValues cv = fam.closed(t);
    const qweyl::WeylPoint pt = fam.point(t);
    qweyl::SweepRecord r;
    r.family_label = fam.label;
    r.param_value = t;
    r.c1 = pt.c1;
    r.c2 = pt.c2;
    r.c3 = pt.c3;
    r.ep = cv.ep;
    r.g1 = cv.g1;
    r.g2 = cv.g2;
    r.is_pe = qweyl::is_perfect_entangler_coords(pt);
    rows.push_back(r);
  }

  if (out == "-") {
    qweyl::write_sweep_csv(std::cout, rows);
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + out);
    qweyl::write_sweep_csv(os, rows);
  }
  return 0;
}

int cmd_verify(int grid) {
  const std::vector<qweyl::ConstructionReport> reports =
      qweyl::verify_all_constructions(grid);

  bool all_ok = true;
  int n_pass = 0;
  for (const qweyl::ConstructionReport& rep : reports) {
    all_ok = all_ok && rep.passed;
    n_pass += rep.passed ? 1 : 0;
    std::printf("%s %-18s max|G1| = %.3e   max|G2-1| = %.3e",
                rep.passed ? "[PASS]" : "[FAIL]", rep.label.c_str(),
                rep.max_abs_g1, rep.max_dev_g2);
    if (!rep.passed) std::printf("   worst at t = %.9f", rep.worst_param);
    std::printf("\n");
  }
  std::printf("%d/%d constructions verify as the CNOT class\n", n_pass,
              static_cast<int>(reports.size()));
  return all_ok ? 0 : 1;
}

int cmd_pe_volume(long long n, long long seed) {
  const qweyl::PeVolumeEstimate est = qweyl::pe_volume(
      static_cast<std::size_t>(n), static_cast<std::uint64_t>(seed));
  std::cout << "perfect-entangler fraction: " << fmt("%.6f", est.fraction)
            << " +/- " << fmt("%.6f", est.std_error) << "  [n=" << est.n_samples
            << ", seed=" << seed << "]\n";
  std::cout << "exact value: 0.5\n";
  return 0;
}

int cmd_gates(const std::string& name, double param, bool has_param,
              double c1, double c2, double c3, bool has_coords,
              const std::string& out) {
  qweyl::GateFile gf;
  if (name == "cnot") {
    gf.name = "cnot";
    gf.matrix = qweyl::cnot_gate();
  } else if (name == "swap") {
    gf.name = "swap";
    gf.matrix = qweyl::swap_gate();
  } else if (name == "identity") {
    gf.name = "identity";
    gf.matrix = qweyl::identity4();
  } else if (name == "swap-pow" || name == "swap-inv-pow") {
    if (!has_param)
      throw qweyl::ParseError("gates " + name + " requires --param");
    if (param < 0.0 || param > 1.0)
      throw qweyl::ParamOutOfRangeError("gates " + name +
                                        ": --param must lie in [0, 1]");
    const bool inv = name == "swap-inv-pow";
    gf.name = name + " alpha=" + fmt_g(param);
    gf.matrix = qweyl::swap_alpha(param, inv);
  } else if (name == "canonical") {
    if (!has_coords)
      throw qweyl::ParseError("gates canonical requires --c1 --c2 --c3");
    gf.name = "canonical [" + fmt_g(c1) + ", " + fmt_g(c2) + ", " + fmt_g(c3) +
              "]";
    gf.matrix = qweyl::canonical_gate(qweyl::WeylPoint{c1, c2, c3});
  } else {
    throw qweyl::ParseError(
        "unknown gate name: " + name +
        " (expected cnot, swap, identity, swap-pow, swap-inv-pow, canonical)");
  }

  qweyl::write_gate_file(out, gf);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* tol_path = std::getenv("QWEYL_TOLERANCES")) {
    try {
      qweyl::set_tolerances(qweyl::load_tolerances(tol_path));
    } catch (const std::exception& e) {
      std::cerr << "error: QWEYL_TOLERANCES: " << e.what() << "\n";
      return 1;
    }
  }

  CLI::App app{
      "Two-qubit gate geometry: local invariants, canonical coordinates,\n"
      "perfect-entangler tests, entangling power, gate-family tables and\n"
      "CNOT-construction verification."};
  app.footer(
      "Environment:\n"
      "  QWEYL_TOLERANCES  path to a JSON file overriding the numerical\n"
      "                    tolerances (keys: unitary, spectrum, g2_imag,\n"
      "                    invariant_match, coords_validate, chamber_boundary,\n"
      "                    pe_boundary, state_norm, gate_construction;\n"
      "                    defaults: 1e-10, 1e-8, 1e-9, 1e-9, 1e-8, 1e-9,\n"
      "                    1e-9, 1e-9, 1e-12)");
  app.require_subcommand(1);
  int exit_code = 0;

  // analyze
  std::string an_file;
  long an_mc = 0;
  long long an_seed = 0;
  bool an_json = false;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Invariants, coordinates, PE verdicts and e_p of a gate file");
  analyze->add_option("file", an_file, "gate file (JSON)")->required();
  CLI::Option* opt_mc =
      analyze->add_option("--mc", an_mc, "Monte-Carlo e_p with this many samples")
          ->check(CLI::PositiveNumber);
  CLI::Option* opt_seed =
      analyze->add_option("--seed", an_seed, "seed for --mc");
  opt_mc->needs(opt_seed);
  analyze->add_flag("--json", an_json, "emit a JSON report");
  analyze->callback(
      [&] { exit_code = cmd_analyze(an_file, an_mc, an_seed, an_json); });

  // tables
  std::string tb_which;
  int tb_grid = 5;
  CLI::App* tables = app.add_subcommand(
      "tables", "Closed-form edge tables with a pipeline cross-check");
  tables->add_option("which", tb_which, "weyl | polyhedron")
      ->required()
      ->check(CLI::IsMember({"weyl", "polyhedron"}));
  tables->add_option("--grid", tb_grid, "grid points per edge (default 5)")
      ->check(CLI::Range(2, 100000));
  tables->callback([&] { exit_code = cmd_tables(tb_which, tb_grid); });

  // sweep
  std::string sw_family, sw_out;
  int sw_grid = 101;
  CLI::App* sweep =
      app.add_subcommand("sweep", "CSV sweep of one family (see tables)");
  sweep->add_option("family", sw_family,
                    "family label: OA1 OA2 A2A1 A2A3 OA3 A1A3 LQ LM A2M A2Q "
                    "QP MN PN LN A2P SPE")
      ->required();
  sweep->add_option("--grid", sw_grid, "grid points (default 101)")
      ->check(CLI::Range(2, 10000000));
  sweep->add_option("--out", sw_out, "output path ('-' for stdout)")->required();
  sweep->callback([&] { exit_code = cmd_sweep(sw_family, sw_grid, sw_out); });

  // verify
  int vf_grid = 21;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check the built-in CNOT constructions (exit 0 iff all pass)");
  verify->add_option("--grid", vf_grid, "parameter grid (default 21)")
      ->check(CLI::Range(2, 100000));
  verify->callback([&] { exit_code = cmd_verify(vf_grid); });

  // pe-volume
  long long pv_n = 0, pv_seed = 0;
  CLI::App* pe = app.add_subcommand(
      "pe-volume", "Monte-Carlo perfect-entangler fraction of the chamber");
  pe->add_option("--n", pv_n, "sample count (>= 10000)")
      ->required()
      ->check(CLI::Range(10000LL, 4000000000LL));
  pe->add_option("--seed", pv_seed, "RNG seed")->required();
  pe->callback([&] { exit_code = cmd_pe_volume(pv_n, pv_seed); });

  // gates
  std::string gt_name, gt_out;
  double gt_param = 0.0, gt_c1 = 0.0, gt_c2 = 0.0, gt_c3 = 0.0;
  CLI::App* gates = app.add_subcommand(
      "gates", "Write a built-in gate as a gate file");
  gates->add_option("name", gt_name,
                    "cnot | swap | identity | swap-pow | swap-inv-pow | "
                    "canonical")
      ->required();
  CLI::Option* opt_param = gates->add_option(
      "--param", gt_param, "exponent alpha for swap-pow / swap-inv-pow");
  CLI::Option* opt_c1 = gates->add_option("--c1", gt_c1, "canonical c1 (rad)");
  CLI::Option* opt_c2 = gates->add_option("--c2", gt_c2, "canonical c2 (rad)");
  CLI::Option* opt_c3 = gates->add_option("--c3", gt_c3, "canonical c3 (rad)");
  opt_c1->needs(opt_c2)->needs(opt_c3);
  gates->add_option("--out", gt_out, "output path")->required();
  gates->callback([&] {
    exit_code = cmd_gates(gt_name, gt_param, !opt_param->empty(), gt_c1, gt_c2,
                          gt_c3, !opt_c1->empty(), gt_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
