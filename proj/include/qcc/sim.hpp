// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "qcc/pauli.hpp"

namespace qcc {

/// Dense register of 2^n amplitudes; qubit 0 is the least significant bit.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int n_qubits);
  StateVector(int n_qubits, std::vector<cplx> amplitudes);

  /// |mask> on n qubits.
  static StateVector basis(int n_qubits, std::uint64_t mask);

  int n_qubits() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }

  std::span<cplx> amplitudes() { return amps_; }
  std::span<const cplx> amplitudes() const { return amps_; }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

 private:
  int n_qubits_ = 0;
  std::vector<cplx> amps_;
};

StateVector prepare_basis_state(int n_qubits, std::uint64_t occupation);

enum class GateKind {
  ExchangeSingle,
  ExchangeDouble,
  Ry,
  PauliX,
  CNOT,
  PauliExponential,
};

/**
 * A gate placed on specific qubits.
 *
 * Multi-qubit local matrices read the first listed qubit as the most
 * significant local bit. Ry lists its controls first and the target last
 * (no controls is a plain rotation exp(-i angle Y / 2)). CNOT lists
 * (control, target). PauliExponential realizes exp(-i angle G) for the
 * Hermitian string G held in `generator` (real coefficient).
 */
struct Gate {
  GateKind kind = GateKind::PauliX;
  std::vector<int> qubits;
  double angle = 0.0;
  PauliTerm generator;

  static Gate exchange_single(int a, int b, double theta);
  static Gate exchange_double(int a, int b, int c, int d, double theta);
  static Gate ry(int target, double angle);
  static Gate controlled_ry(std::vector<int> controls, int target,
                            double angle);
  static Gate x(int q);
  static Gate cnot(int control, int target);
  static Gate pauli_exponential(const PauliTerm& generator, double angle);
};

/// Throws std::invalid_argument on out-of-range or duplicate indices.
void validate_gate(const Gate& g, int n_qubits);

/// Applies g in place.
void apply_gate(StateVector& psi, const Gate& g);

/// Applies gates left to right in place.
void run_circuit(StateVector& psi, std::span<const Gate> gates);

/// Column-by-column unitary of a circuit on n qubits (n small).
CMatrix circuit_unitary(std::span<const Gate> gates, int n_qubits,
                        int max_qubits = kDefaultDenseQubitLimit);

/// Probability mass per basis-index popcount.
std::map<int, double> hamming_weight_distribution(const StateVector& psi);

/// Probability mass per popcount of (index & block_mask).
std::map<int, double> block_weight_distribution(const StateVector& psi,
                                                std::uint64_t block_mask);

/// "index real imag" for every amplitude with |amp|^2 above threshold.
void write_state(std::ostream& os, const StateVector& psi,
                 double threshold = 1e-12);

}  // namespace qcc
