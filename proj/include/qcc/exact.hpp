// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qcc/pauli.hpp"

namespace qcc {

/**
 * Occupation-number basis of one (N_alpha, N_beta) sector under block
 * spin-orbital ordering: alpha modes are qubits [0, n_spatial), beta modes
 * are [n_spatial, 2 n_spatial). States are sorted ascending.
 */
struct SectorBasis {
  int n_spatial = 0;
  int n_alpha = 0;
  int n_beta = 0;
  std::vector<std::uint64_t> states;

  int n_qubits() const { return 2 * n_spatial; }
  std::size_t dimension() const { return states.size(); }

  /// Position of mask in states, or -1.
  std::ptrdiff_t index_of(std::uint64_t mask) const;
};

SectorBasis make_sector(int n_spatial, int n_alpha, int n_beta);

class SectorLeakageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactOptions {
  /// Sectors up to this dimension use a dense eigensolver, larger use Lanczos.
  std::size_t dense_limit = 4000;
  /// Eigenvalues this close to the ground energy count as degenerate.
  double degeneracy_tolerance = 1e-9;
  /// Out-of-sector amplitude that counts as leakage.
  double leakage_tolerance = 1e-10;
  int lanczos_max_iterations = 300;
  double lanczos_tolerance = 1e-10;
};

struct SectorGroundState {
  double energy = 0.0;
  /// Normalized, in the order of SectorBasis::states.
  Eigen::VectorXcd vector;
  /// Orthonormal basis of the degenerate ground space (first column is
  /// `vector`); a single column when non-degenerate.
  Eigen::MatrixXcd ground_space;
  bool degenerate = false;
  double residual = 0.0;
  bool used_lanczos = false;
};

/// Sector-projected Hamiltonian; throws SectorLeakageError if h leaves it.
Eigen::MatrixXcd sector_matrix(const PauliSum& h, const SectorBasis& sector,
                               double leakage_tolerance = 1e-10);

SectorGroundState sector_ground_state(const PauliSum& h,
                                      const SectorBasis& sector,
                                      const ExactOptions& opts = {});

struct OverlapResult {
  double probability = 0.0;
  bool degenerate = false;
};

/**
 * |<hf|ground>|^2. For a degenerate ground space this is the squared norm of
 * the projection of |hf> onto it, which is the largest overlap reachable by
 * any normalized ground state.
 */
OverlapResult hf_ground_overlap(const SectorGroundState& ground,
                                const SectorBasis& sector,
                                std::uint64_t hf_mask);

}  // namespace qcc
