// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: single points, scans, FCI, gate counts and
// FCIDUMP generation for hydrogen chains.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcc/scan.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

// Config problems (bad flags, inconsistent settings) map to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string system = "h2";
  double bond_start = 0.735;
  double bond_stop = -1.0;  // defaults to bond_start
  double bond_step = 0.1;
  std::string ansatz = "both";
  int frozen = 0;
  int removed = 0;
  std::string fcidump;
  std::string manifest;
  std::string out_csv;
  std::string out_svg;
  std::string out_trace;
  int max_iters = 500;
  double ftol = 1e-6;
  double first_step = 0.1;
  int jobs = 1;
  bool warm_start = false;
  std::string dump_hamiltonian;
  std::string dump_state;
  std::vector<double> seed_params;
  std::string geometry;
  std::string out;
};

void add_system_options(CLI::App* app, Options& o) {
  app->add_option("--system", o.system, "h2, h4, h6, fcidump or manifest")
      ->check(CLI::IsMember({"h2", "h4", "h6", "fcidump", "manifest"}));
  app->add_option("--bond-start", o.bond_start,
                  "Hydrogen spacing in Angstrom (first scan point)");
  app->add_option("--fcidump", o.fcidump, "MO-basis FCIDUMP input");
  app->add_option("--frozen", o.frozen, "Frozen doubly occupied orbitals")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--removed", o.removed, "Removed high-energy virtuals")
      ->check(CLI::NonNegativeNumber);
}

void add_vqe_options(CLI::App* app, Options& o) {
  app->add_option("--ansatz", o.ansatz, "qccsd, uccsd or both")
      ->check(CLI::IsMember({"qccsd", "uccsd", "both"}));
  app->add_option("--max-iters", o.max_iters, "Optimizer iteration cap")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--ftol", o.ftol, "Stop when |dE| falls below this (Ha)")
      ->check(CLI::PositiveNumber);
  app->add_option("--seed-params", o.seed_params,
                  "Initial parameters, comma separated; one value broadcasts")
      ->delimiter(',');
  app->add_option("--first-step", o.first_step,
                  "Largest parameter change of the first optimizer step")
      ->check(CLI::PositiveNumber);
  app->add_option("--out-csv", o.out_csv, "CSV output (default stdout)");
}

qcc::ScanConfig make_config(const Options& o) {
  qcc::ScanConfig cfg;
  if (o.system == "fcidump" || (o.system == "h2" && !o.fcidump.empty())) {
    if (o.fcidump.empty()) throw ConfigError("--system fcidump needs --fcidump");
    cfg.source = qcc::SystemSource::Fcidump;
    cfg.fcidump_path = o.fcidump;
  } else if (o.system == "manifest") {
    if (o.manifest.empty()) {
      throw ConfigError("--system manifest needs --manifest");
    }
    cfg.source = qcc::SystemSource::Manifest;
    cfg.manifest_path = o.manifest;
  } else {
    cfg.source = qcc::SystemSource::HydrogenChain;
    cfg.chain_atoms = o.system[1] - '0';
  }
  cfg.bond_start = o.bond_start;
  cfg.bond_stop = o.bond_stop < 0.0 ? o.bond_start : o.bond_stop;
  cfg.bond_step = o.bond_step;
  cfg.run_qccsd = o.ansatz != "uccsd";
  cfg.run_uccsd = o.ansatz != "qccsd";
  cfg.active = {o.frozen, o.removed};
  cfg.optimizer.max_iterations = o.max_iters;
  cfg.optimizer.energy_tolerance = o.ftol;
  cfg.optimizer.first_step = o.first_step;
  cfg.seed_params = o.seed_params;
  cfg.warm_start = o.warm_start;
  cfg.jobs = o.jobs;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
  } else {
    auto f = open_out(path);
    fn(f);
  }
}

// Integrals of the first point of the configured system.
qcc::MolecularIntegrals first_point_integrals(const qcc::ScanConfig& cfg) {
  const auto points = qcc::scan_points(cfg);
  if (points.empty()) throw ConfigError("no scan points");
  return qcc::load_point_integrals(cfg, points.front());
}

qcc::PreparedSystem prepare(const qcc::ScanConfig& cfg) {
  const auto mi = first_point_integrals(cfg);
  try {
    return qcc::prepare_system(mi, cfg.active);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int cmd_run(const Options& o) {
  const qcc::ScanConfig cfg = make_config(o);
  const auto points = qcc::scan_points(cfg);
  if (!o.dump_hamiltonian.empty()) {
    const auto sys = prepare(cfg);
    auto f = open_out(o.dump_hamiltonian);
    qcc::write_pauli_sum(f, sys.hamiltonian);
  }
  qcc::ScanRow row;
  try {
    row = qcc::run_point(cfg, points.front());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  with_output(o.out_csv, [&](std::ostream& os) { qcc::write_scan_csv(os, {row}); });
  if (!o.out_trace.empty()) {
    auto f = open_out(o.out_trace);
    qcc::write_trace_csv(f, cfg.run_qccsd ? row.trace_q : row.trace_u);
  }
  if (!o.dump_state.empty() && row.status != "scf_failed" &&
      row.status != "input_failed") {
    const auto sys = prepare(cfg);
    const qcc::AnsatzKind kind =
        cfg.run_qccsd ? qcc::AnsatzKind::Qccsd : qcc::AnsatzKind::UccsdTrotter;
    const qcc::EnergyFunction f(
        {sys.hamiltonian, sys.hf_mask, sys.excitations, kind});
    auto out = open_out(o.dump_state);
    qcc::write_state(out, f.state(cfg.run_qccsd ? row.params_q : row.params_u));
  }
  if (row.status == "scf_failed" || row.status == "input_failed") {
    std::cerr << "qcc: point failed with status " << row.status << '\n';
    return kExitRuntime;
  }
  return 0;
}

int cmd_scan(const Options& o) {
  const qcc::ScanConfig cfg = make_config(o);
  std::vector<qcc::ScanRow> rows;
  try {
    rows = qcc::run_scan(cfg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  with_output(o.out_csv, [&](std::ostream& os) { qcc::write_scan_csv(os, rows); });
  if (!o.out_svg.empty()) {
    auto f = open_out(o.out_svg);
    qcc::write_scan_svg(f, rows, "Energy error vs bond length (" + o.system + ")");
  }
  return 0;
}

int cmd_exact(const Options& o) {
  const qcc::ScanConfig cfg = make_config(o);
  const auto sys = prepare(cfg);
  const auto sector = qcc::make_sector(sys.counts.n_spatial, sys.counts.n_alpha,
                                       sys.counts.n_beta);
  const auto ground = qcc::sector_ground_state(sys.hamiltonian, sector);
  const auto overlap = qcc::hf_ground_overlap(ground, sector, sys.hf_mask);
  if (!o.dump_hamiltonian.empty()) {
    auto f = open_out(o.dump_hamiltonian);
    qcc::write_pauli_sum(f, sys.hamiltonian);
  }
  std::printf("energy_hartree,overlap_hf\n%.12f,%.12f\n", ground.energy,
              overlap.probability);
  return 0;
}

int cmd_counts(const Options& o) {
  const qcc::ScanConfig cfg = make_config(o);
  const auto sys = prepare(cfg);
  const auto c = qcc::count_gates(sys.excitations);
  std::printf("n_qubits,params,exchange_gates,elementary_gates\n%d,%zu,%zu,%zu\n",
              c.n_qubits, c.params, c.exchange_gates, c.elementary_gates);
  return 0;
}

int cmd_gen_fcidump(const Options& o) {
  if (o.out.empty()) throw ConfigError("gen-fcidump needs --out");
  qcc::Geometry geom;
  if (!o.geometry.empty()) {
    std::ifstream in(o.geometry);
    if (!in) throw ConfigError("cannot open geometry " + o.geometry);
    try {
      geom = qcc::read_xyz(in);
      geom.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else {
    if (o.system != "h2" && o.system != "h4" && o.system != "h6") {
      throw ConfigError("gen-fcidump needs --geometry or an h-chain --system");
    }
    geom = qcc::hydrogen_chain(o.system[1] - '0', o.bond_start);
  }
  const auto rhf = qcc::hydrogen_rhf(geom);
  qcc::write_fcidump_file(rhf.mo, o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QCCSD and Trotterized UCCSD VQE for small molecules"};
  app.set_config("--config", "", "key=value config file; [run], [scan], ... sections");
  app.require_subcommand(1);
  app.fallthrough();  // accept --config after the subcommand too
  Options o;

  auto* run = app.add_subcommand("run", "Optimize one geometry and print a CSV row");
  add_system_options(run, o);
  add_vqe_options(run, o);
  run->add_option("--out-trace", o.out_trace, "Per-iteration optimizer trace CSV");
  run->add_option("--dump-hamiltonian", o.dump_hamiltonian, "Write the qubit Hamiltonian");
  run->add_option("--dump-state", o.dump_state, "Write the optimized state");

  auto* scan = app.add_subcommand("scan", "Bond-length scan with FCI reference");
  add_system_options(scan, o);
  add_vqe_options(scan, o);
  scan->add_option("--bond-stop", o.bond_stop, "Last bond length (Angstrom)");
  scan->add_option("--bond-step", o.bond_step, "Bond length increment")
      ->check(CLI::PositiveNumber);
  scan->add_option("--manifest", o.manifest, "File of 'bond_length,path' lines");
  scan->add_option("--out-svg", o.out_svg, "Semilog error plot");
  scan->add_option("--jobs", o.jobs, "Concurrent scan points")
      ->check(CLI::PositiveNumber);
  scan->add_flag("--warm-start", o.warm_start,
                 "Seed each point with the previous optimum (sequential)");

  auto* exact = app.add_subcommand("exact", "Sector FCI energy and HF overlap");
  add_system_options(exact, o);
  exact->add_option("--dump-hamiltonian", o.dump_hamiltonian, "Write the qubit Hamiltonian");

  auto* counts = app.add_subcommand("counts", "Parameter and gate counts");
  add_system_options(counts, o);

  auto* gen = app.add_subcommand("gen-fcidump", "RHF/STO-3G FCIDUMP for hydrogen");
  gen->add_option("--geometry", o.geometry, "Hydrogen-only XYZ file");
  gen->add_option("--system", o.system, "h2, h4 or h6 when no geometry is given")
      ->check(CLI::IsMember({"h2", "h4", "h6"}));
  gen->add_option("--bond-start", o.bond_start, "Chain spacing in Angstrom");
  gen->add_option("--out", o.out, "Output FCIDUMP path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return cmd_run(o);
    if (*scan) return cmd_scan(o);
    if (*exact) return cmd_exact(o);
    if (*counts) return cmd_counts(o);
    if (*gen) return cmd_gen_fcidump(o);
  } catch (const ConfigError& e) {
    std::cerr << "qcc: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "qcc: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitConfig;
}
