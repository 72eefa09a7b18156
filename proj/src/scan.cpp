// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcc/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace qcc {
namespace {

ParameterVector starting_point(const ScanConfig& cfg, std::size_t n,
                               const ParameterVector& seed) {
  const ParameterVector& src = seed.empty() ? cfg.seed_params : seed;
  ParameterVector out(n, 0.0);
  if (src.size() == 1) {
    std::fill(out.begin(), out.end(), src[0]);
  } else if (src.size() == n) {
    out = src;
  } else if (!src.empty()) {
    throw std::invalid_argument("seed parameter count " +
                                std::to_string(src.size()) + " does not match " +
                                std::to_string(n) + " parameters");
  }
  for (auto& v : out) {
    v = std::clamp(v, cfg.optimizer.bounds.lower, cfg.optimizer.bounds.upper);
  }
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(const std::optional<double>& v) {
  return v ? fmt(*v) : std::string{};
}

}  // namespace

void ScanConfig::validate() const {
  switch (source) {
    case SystemSource::HydrogenChain:
      if (chain_atoms != 2 && chain_atoms != 4 && chain_atoms != 6) {
        throw std::invalid_argument("hydrogen chains must have 2, 4 or 6 atoms");
      }
      if (!(bond_step > 0.0)) {
        throw std::invalid_argument("bond step must be positive");
      }
      if (!(bond_start > 0.0) || bond_stop < bond_start) {
        throw std::invalid_argument("bond range needs 0 < start <= stop");
      }
      break;
    case SystemSource::Fcidump:
      if (fcidump_path.empty()) throw std::invalid_argument("no FCIDUMP path");
      break;
    case SystemSource::Manifest:
      if (manifest_path.empty()) throw std::invalid_argument("no manifest path");
      break;
  }
  if (!run_qccsd && !run_uccsd) throw std::invalid_argument("no ansatz selected");
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (optimizer.max_iterations < 0) {
    throw std::invalid_argument("max iterations must be non-negative");
  }
  if (!(optimizer.energy_tolerance > 0.0)) {
    throw std::invalid_argument("energy tolerance must be positive");
  }
}

std::vector<ScanPoint> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  const std::filesystem::path base =
      std::filesystem::path(path).parent_path();
  std::vector<ScanPoint> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("manifest line " + std::to_string(line_no) +
                               ": expected 'bond_length,path'");
    }
    ScanPoint p;
    try {
      p.bond_length = std::stod(line.substr(0, comma));
    } catch (const std::exception&) {
      throw std::runtime_error("manifest line " + std::to_string(line_no) +
                               ": bad bond length");
    }
    std::string file = line.substr(comma + 1);
    file.erase(0, file.find_first_not_of(" \t"));
    file.erase(file.find_last_not_of(" \t\r") + 1);
    if (file == "bond_length" || file.empty()) {
      throw std::runtime_error("manifest line " + std::to_string(line_no) +
                               ": missing path");
    }
    std::filesystem::path fp(file);
    p.fcidump_path = fp.is_absolute() ? fp.string() : (base / fp).string();
    out.push_back(p);
  }
  return out;
}

std::vector<ScanPoint> scan_points(const ScanConfig& cfg) {
  switch (cfg.source) {
    case SystemSource::Fcidump:
      return {ScanPoint{cfg.bond_start, cfg.fcidump_path}};
    case SystemSource::Manifest:
      return read_manifest(cfg.manifest_path);
    case SystemSource::HydrogenChain:
      break;
  }
  std::vector<ScanPoint> out;
  const double span = cfg.bond_stop - cfg.bond_start;
  const int n = static_cast<int>(std::floor(span / cfg.bond_step + 1e-9));
  for (int k = 0; k <= n; ++k) {
    out.push_back({cfg.bond_start + k * cfg.bond_step, {}});
  }
  return out;
}

MolecularIntegrals load_point_integrals(const ScanConfig& cfg,
                                        const ScanPoint& point) {
  if (!point.fcidump_path.empty()) return read_fcidump_file(point.fcidump_path);
  return hydrogen_rhf(hydrogen_chain(cfg.chain_atoms, point.bond_length)).mo;
}

PreparedSystem prepare_system(const MolecularIntegrals& mi,
                              const ActiveSpace& as) {
  PreparedSystem sys;
  sys.integrals = mi;
  sys.counts = active_counts(mi, as);
  sys.hamiltonian = jordan_wigner(build_hamiltonian(mi, as));
  sys.hf_mask = hf_reference(sys.counts);
  sys.excitations = build_excitation_list(sys.counts.n_spatial,
                                          sys.counts.n_alpha,
                                          sys.counts.n_beta);
  return sys;
}

GateCounts count_gates(const ExcitationList& ex) {
  const ParameterVector zero(ex.size(), 0.0);
  const auto circuit = qccsd_circuit(ex, zero);
  return {ex.n_qubits(), ex.size(), circuit.size(),
          decompose_circuit(circuit).size()};
}

std::optional<double> ScanRow::err_qccsd() const {
  if (!e_qccsd) return std::nullopt;
  return *e_qccsd - e_fci;
}

std::optional<double> ScanRow::err_uccsd() const {
  if (!e_uccsd) return std::nullopt;
  return *e_uccsd - e_fci;
}

ScanRow run_point(const ScanConfig& cfg, const ScanPoint& point,
                  const ParameterVector& seed_q,
                  const ParameterVector& seed_u) {
  ScanRow row;
  row.bond_length = point.bond_length;
  MolecularIntegrals mi;
  try {
    mi = load_point_integrals(cfg, point);
  } catch (const ScfError&) {
    row.status = "scf_failed";
    return row;
  } catch (const std::exception&) {
    row.status = "input_failed";
    return row;
  }

  const PreparedSystem sys = prepare_system(mi, cfg.active);
  const SectorBasis sector =
      make_sector(sys.counts.n_spatial, sys.counts.n_alpha, sys.counts.n_beta);
  const SectorGroundState ground = sector_ground_state(sys.hamiltonian, sector);
  row.e_fci = ground.energy;
  row.overlap_hf = hf_ground_overlap(ground, sector, sys.hf_mask).probability;
  row.e_hf = expectation(sys.hamiltonian,
                         prepare_basis_state(sys.counts.n_qubits(), sys.hf_mask));
  const GateCounts counts = count_gates(sys.excitations);
  row.params = counts.params;
  row.gates = counts.elementary_gates;

  auto run = [&](AnsatzKind kind, const ParameterVector& seed) {
    VqeProblem problem{sys.hamiltonian, sys.hf_mask, sys.excitations, kind};
    const ParameterVector start =
        starting_point(cfg, sys.excitations.size(), seed);
    return minimize(problem, start, cfg.optimizer);
  };
  if (cfg.run_qccsd) {
    const VqeResult r = run(AnsatzKind::Qccsd, seed_q);
    row.e_qccsd = r.energy;
    row.iters_q = r.iterations;
    row.converged_q = r.converged;
    row.params_q = r.parameters;
    row.trace_q = r.trace;
  }
  if (cfg.run_uccsd) {
    const VqeResult r = run(AnsatzKind::UccsdTrotter, seed_u);
    row.e_uccsd = r.energy;
    row.iters_u = r.iterations;
    row.converged_u = r.converged;
    row.params_u = r.parameters;
    row.trace_u = r.trace;
  }
  if ((cfg.run_qccsd && !row.converged_q) ||
      (cfg.run_uccsd && !row.converged_u)) {
    row.status = "vqe_unconverged";
  }
  return row;
}

std::vector<ScanRow> run_scan(const ScanConfig& cfg) {
  cfg.validate();
  const std::vector<ScanPoint> points = scan_points(cfg);
  std::vector<ScanRow> rows(points.size());

  if (cfg.warm_start || cfg.jobs == 1 || points.size() < 2) {
    ParameterVector seed_q, seed_u;
    for (std::size_t k = 0; k < points.size(); ++k) {
      rows[k] = run_point(cfg, points[k], seed_q, seed_u);
      if (cfg.warm_start) {
        if (!rows[k].params_q.empty()) seed_q = rows[k].params_q;
        if (!rows[k].params_u.empty()) seed_u = rows[k].params_u;
      }
    }
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(points.size());
  auto worker = [&] {
    for (std::size_t k = next++; k < points.size(); k = next++) {
      try {
        rows[k] = run_point(cfg, points[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t n_threads =
      std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), points.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << kScanCsvHeader << '\n';
  for (const auto& r : rows) {
    os << fmt(r.bond_length) << ',' << fmt(r.e_hf) << ',' << fmt(r.e_fci)
       << ',' << fmt(r.e_qccsd) << ',' << fmt(r.e_uccsd) << ','
       << fmt(r.err_qccsd()) << ',' << fmt(r.err_uccsd()) << ','
       << fmt(r.overlap_hf) << ',' << r.params << ',' << r.gates << ','
       << r.iters_q << ',' << r.iters_u << ',' << (r.converged_q ? 1 : 0)
       << ',' << (r.converged_u ? 1 : 0) << ',' << r.status << '\n';
  }
}

void write_scan_svg(std::ostream& os, const std::vector<ScanRow>& rows,
                    const std::string& title) {
  constexpr double W = 640, H = 420, L = 70, R = 20, T = 40, B = 50;
  constexpr double kFloor = 1e-12;
  struct Series {
    const char* name;
    const char* color;
    std::vector<std::pair<double, double>> pts;
  };
  Series q{"QCCSD", "#1f77b4", {}}, u{"UCCSD", "#d62728", {}};
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& r : rows) {
    auto add = [&](Series& s, const std::optional<double>& err) {
      if (!err) return;
      const double y = std::log10(std::max(std::abs(*err), kFloor));
      s.pts.emplace_back(r.bond_length, y);
      xmin = std::min(xmin, r.bond_length);
      xmax = std::max(xmax, r.bond_length);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    };
    add(q, r.err_qccsd());
    add(u, r.err_uccsd());
  }
  if (xmin > xmax) xmin = 0.0, xmax = 1.0, ymin = -6.0, ymax = 0.0;
  if (xmax - xmin < 1e-9) xmin -= 0.05, xmax += 0.05;
  ymin = std::floor(ymin);
  ymax = std::ceil(ymax);
  if (ymax - ymin < 1.0) ymax = ymin + 1.0;
  auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double y) { return T + (ymax - y) / (ymax - ymin) * (H - T - B); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
     << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\">" << title
     << "</text>\n";
  os << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R
     << "\" height=\"" << H - T - B << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int e = static_cast<int>(ymin); e <= static_cast<int>(ymax); ++e) {
    os << "<line x1=\"" << L << "\" x2=\"" << W - R << "\" y1=\"" << py(e)
       << "\" y2=\"" << py(e) << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << L - 6 << "\" y=\"" << py(e) + 4
       << "\" text-anchor=\"end\">1e" << e << "</text>\n";
  }
  for (int k = 0; k <= 4; ++k) {
    const double x = xmin + k * (xmax - xmin) / 4;
    os << "<text x=\"" << px(x) << "\" y=\"" << H - B + 18
       << "\" text-anchor=\"middle\">" << fmt(std::round(x * 1000) / 1000)
       << "</text>\n";
  }
  os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 10
     << "\" text-anchor=\"middle\">bond length (angstrom)</text>\n";
  os << "<text x=\"16\" y=\"" << (T + H - B) / 2
     << "\" transform=\"rotate(-90 16 " << (T + H - B) / 2
     << ")\" text-anchor=\"middle\">|E - E_FCI| (hartree)</text>\n";
  int legend = 0;
  for (const Series* s : {&q, &u}) {
    if (s->pts.empty()) continue;
    os << "<polyline fill=\"none\" stroke=\"" << s->color << "\" points=\"";
    for (const auto& [x, y] : s->pts) os << px(x) << ',' << py(y) << ' ';
    os << "\"/>\n";
    for (const auto& [x, y] : s->pts) {
      os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
         << "\" r=\"3\" fill=\"" << s->color << "\"/>\n";
    }
    os << "<text x=\"" << W - R - 8 << "\" y=\"" << T + 16 + 16 * legend++
       << "\" text-anchor=\"end\" fill=\"" << s->color << "\">" << s->name
       << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace qcc
