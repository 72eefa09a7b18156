// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace qcc {

/// Rank-4 real tensor in chemists' notation (pq|rs), dense storage.
class TwoBodyTensor {
 public:
  TwoBodyTensor() = default;
  explicit TwoBodyTensor(int n) : n_(n), data_(std::size_t(n) * n * n * n) {}

  int size() const { return n_; }

  double& operator()(int p, int q, int r, int s) {
    return data_[index(p, q, r, s)];
  }
  double operator()(int p, int q, int r, int s) const {
    return data_[index(p, q, r, s)];
  }

  /// Writes v into all eight permutational partners of (pq|rs).
  void set_symmetric(int p, int q, int r, int s, double v);

  /// Largest deviation between any element and its symmetry partners.
  double max_symmetry_violation() const;

 private:
  std::size_t index(int p, int q, int r, int s) const {
    return ((std::size_t(p) * n_ + q) * n_ + r) * n_ + s;
  }

  int n_ = 0;
  std::vector<double> data_;
};

/// Spatial-orbital integrals of a molecular Hamiltonian (Hartree).
struct MolecularIntegrals {
  int n_spatial = 0;
  /// Nuclear repulsion plus any frozen-core energy.
  double core_energy = 0.0;
  Eigen::MatrixXd one_body;
  TwoBodyTensor two_body;
  Eigen::VectorXd orbital_energies;
  int n_alpha = 0;
  int n_beta = 0;
  /// Total SCF energy when the integrals come from an in-engine RHF run.
  std::optional<double> scf_energy;

  /// Throws std::invalid_argument if shapes or symmetries are broken.
  void validate(double tol = 1e-10) const;
};

/**
 * Complete-active-space partition. The lowest n_frozen_spatial orbitals are
 * kept doubly occupied and the highest n_removed_spatial are deleted.
 */
struct ActiveSpace {
  int n_frozen_spatial = 0;
  int n_removed_spatial = 0;
};

/// Electron and orbital counts left after an active-space reduction.
struct ActiveCounts {
  int n_spatial = 0;
  int n_alpha = 0;
  int n_beta = 0;

  int n_qubits() const { return 2 * n_spatial; }
};

/// Throws std::invalid_argument if the partition does not fit mi.
ActiveCounts active_counts(const MolecularIntegrals& mi, const ActiveSpace& as);

/**
 * Diagonal Fock elements for the aufbau occupation implied by the electron
 * counts, averaged over spin.
 */
Eigen::VectorXd diagonal_fock(const Eigen::MatrixXd& one_body,
                              const TwoBodyTensor& two_body, int n_alpha,
                              int n_beta);

}  // namespace qcc
