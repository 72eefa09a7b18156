// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qcc/ansatz.hpp"
#include "qcc/exact.hpp"
#include "qcc/fermion.hpp"
#include "qcc/integrals.hpp"
#include "qcc/vqe.hpp"

namespace qcc {

/// Where the integrals of a scan come from.
enum class SystemSource { HydrogenChain, Fcidump, Manifest };

struct ScanConfig {
  SystemSource source = SystemSource::HydrogenChain;
  /// Chain length for SystemSource::HydrogenChain (2, 4 or 6).
  int chain_atoms = 2;
  std::string fcidump_path;
  std::string manifest_path;
  /// Angstrom; a single point when start == stop.
  double bond_start = 0.735;
  double bond_stop = 0.735;
  double bond_step = 0.1;
  bool run_qccsd = true;
  bool run_uccsd = true;
  ActiveSpace active;
  MinimizeOptions optimizer;
  /// Initial parameters; empty means all zero, one value is broadcast.
  std::vector<double> seed_params;
  /// Start each point from the previous point's optimum (forces jobs = 1).
  bool warm_start = false;
  int jobs = 1;

  /// Throws std::invalid_argument on inconsistent settings.
  void validate() const;
};

/// One geometry (or FCIDUMP file) of a scan.
struct ScanPoint {
  double bond_length = 0.0;
  std::string fcidump_path;  // empty for built-in hydrogen chains
};

/// Points in scan order; bond lengths are start + k * step up to stop.
std::vector<ScanPoint> scan_points(const ScanConfig& cfg);

/// "bond_length,path" lines; relative paths resolve against the manifest.
std::vector<ScanPoint> read_manifest(const std::string& path);

/// Everything the ansatz runs need for one point.
struct PreparedSystem {
  MolecularIntegrals integrals;  // full space, before the active-space cut
  ActiveCounts counts;
  PauliSum hamiltonian;
  std::uint64_t hf_mask = 0;
  ExcitationList excitations;
};

PreparedSystem prepare_system(const MolecularIntegrals& mi,
                              const ActiveSpace& as);

/// Loads or computes integrals for a point (RHF for hydrogen chains).
MolecularIntegrals load_point_integrals(const ScanConfig& cfg,
                                        const ScanPoint& point);

struct ScanRow {
  double bond_length = 0.0;
  double e_hf = 0.0;
  double e_fci = 0.0;
  std::optional<double> e_qccsd;
  std::optional<double> e_uccsd;
  double overlap_hf = 0.0;
  std::size_t params = 0;
  /// Elementary gates of the decomposed QCCSD circuit.
  std::size_t gates = 0;
  int iters_q = 0;
  int iters_u = 0;
  bool converged_q = false;
  bool converged_u = false;
  std::string status = "ok";
  ParameterVector params_q;
  ParameterVector params_u;
  std::vector<TraceRow> trace_q;
  std::vector<TraceRow> trace_u;

  std::optional<double> err_qccsd() const;
  std::optional<double> err_uccsd() const;
};

/// Runs one point; failures land in the row's status column. Non-empty
/// seeds override the configured starting parameters per ansatz.
ScanRow run_point(const ScanConfig& cfg, const ScanPoint& point,
                  const ParameterVector& seed_q = {},
                  const ParameterVector& seed_u = {});

/// All points, rows in scan order regardless of job scheduling.
std::vector<ScanRow> run_scan(const ScanConfig& cfg);

inline constexpr const char* kScanCsvHeader =
    "bond_length,e_hf,e_fci,e_qccsd,e_uccsd,err_qccsd,err_uccsd,overlap_hf,"
    "params,gates,iters_q,iters_u,converged_q,converged_u,status";

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows);

/// Semilog plot of |E - E_FCI| against bond length.
void write_scan_svg(std::ostream& os, const std::vector<ScanRow>& rows,
                    const std::string& title);

/// Parameter, exchange-gate and elementary-gate counts of the QCCSD circuit.
struct GateCounts {
  int n_qubits = 0;
  std::size_t params = 0;
  std::size_t exchange_gates = 0;
  std::size_t elementary_gates = 0;
};

GateCounts count_gates(const ExcitationList& ex);

}  // namespace qcc
