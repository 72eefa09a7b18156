// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcc/molecular_integrals.hpp"

namespace qcc {

/// Bohr radius in Angstrom (value used by common quantum chemistry codes).
inline constexpr double kBohrInAngstrom = 0.52917721092;

struct Atom {
  std::string element;
  /// Angstrom.
  std::array<double, 3> position{};
};

struct Geometry {
  std::vector<Atom> atoms;
  int charge = 0;
  int multiplicity = 1;

  /// Nuclear charge sum minus the molecular charge.
  int n_electrons() const;

  /// Throws std::invalid_argument if multiplicity and electron parity clash.
  void validate() const;
};

/// Plain XYZ: count line, comment line, then "element x y z" in Angstrom.
Geometry read_xyz(std::istream& is);
void write_xyz(std::ostream& os, const Geometry& g,
               const std::string& comment = "");

/// n hydrogens on the z axis with uniform spacing (Angstrom).
Geometry hydrogen_chain(int n_atoms, double spacing_angstrom);

/// F_0(x) = (1/2) sqrt(pi/x) erf(sqrt(x)), F_0(0) = 1.
double boys_f0(double x);

/// Atomic-orbital integrals over one contracted s function per atom.
struct AoIntegrals {
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd kinetic;
  Eigen::MatrixXd nuclear;
  TwoBodyTensor eri;
  double nuclear_repulsion = 0.0;
  int n_electrons = 0;

  int n_basis() const { return static_cast<int>(overlap.rows()); }
  Eigen::MatrixXd core_hamiltonian() const { return kinetic + nuclear; }
};

/// STO-3G integrals for an all-hydrogen geometry.
AoIntegrals sto3g_hydrogen_integrals(const Geometry& geom);

struct RhfOptions {
  int max_cycles = 200;
  double density_tolerance = 1e-10;
  double damping = 0.5;
  int damped_cycles = 5;
  /// Pulay extrapolation after the damped cycles; 0 disables it.
  int diis_vectors = 8;
};

struct RhfResult {
  /// MO-basis integrals, orbitals in ascending energy order.
  MolecularIntegrals mo;
  Eigen::MatrixXd coefficients;
  double energy = 0.0;
  std::vector<double> energy_history;
  int iterations = 0;
  double last_density_change = 0.0;
};

class ScfError : public std::runtime_error {
 public:
  ScfError(const std::string& what, double last_change)
      : std::runtime_error(what), last_density_change(last_change) {}
  double last_density_change;
};

/// Closed-shell SCF followed by the AO to MO integral transformation.
RhfResult rhf_solve(const AoIntegrals& ao, int n_electrons,
                    const RhfOptions& opts = {});

/// sto3g_hydrogen_integrals followed by rhf_solve.
RhfResult hydrogen_rhf(const Geometry& geom, const RhfOptions& opts = {});

class FcidumpError : public std::runtime_error {
 public:
  FcidumpError(int line, const std::string& what)
      : std::runtime_error("FCIDUMP line " + std::to_string(line) + ": " +
                           what),
        line(line) {}
  int line;
};

MolecularIntegrals parse_fcidump(std::istream& is);
void write_fcidump(const MolecularIntegrals& mi, std::ostream& os);

MolecularIntegrals read_fcidump_file(const std::string& path);
void write_fcidump_file(const MolecularIntegrals& mi, const std::string& path);

}  // namespace qcc
