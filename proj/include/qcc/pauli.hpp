// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qcc {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Coefficients with magnitude below this are dropped from a PauliSum.
inline constexpr double kPauliDropTolerance = 1e-12;

/// Largest register realized as a dense matrix unless the caller raises it.
inline constexpr int kDefaultDenseQubitLimit = 12;

/// Maximum register width of the symplectic encoding.
inline constexpr int kMaxQubits = 64;

class StateVector;

/**
 * A weighted Pauli string in symplectic form.
 *
 * Qubit q carries X if only x bit q is set, Z if only z bit q is set, Y if
 * both are set. The operator is coefficient * P_{n-1} (x) ... (x) P_0 with
 * qubit 0 the least significant bit of a basis index.
 */
class PauliTerm {
 public:
  PauliTerm() = default;
  PauliTerm(int n_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
            cplx coefficient = 1.0);

  /// Identity on n qubits.
  static PauliTerm identity(int n_qubits, cplx coefficient = 1.0);

  /// Parses labels such as "X0 Z2 Y5" or "I".
  static PauliTerm from_label(int n_qubits, const std::string& label,
                              cplx coefficient = 1.0);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_bits() const { return x_bits_; }
  std::uint64_t z_bits() const { return z_bits_; }
  cplx coefficient() const { return coefficient_; }
  void set_coefficient(cplx c) { coefficient_ = c; }

  /// 'I', 'X', 'Y' or 'Z' on qubit q.
  char letter(int q) const;

  /// Number of Y factors.
  int y_count() const;

  /// Support mask (qubits carrying a non-identity factor).
  std::uint64_t support() const { return x_bits_ | z_bits_; }

  bool is_identity() const { return x_bits_ == 0 && z_bits_ == 0; }

  /// Label without coefficient, e.g. "X0 Z2"; identity is "I".
  std::string label() const;

  /// Does the string part commute with other's string part.
  bool commutes_with(const PauliTerm& other) const;

  /**
   * Action of the unit-coefficient string on basis state |b>.
   * P|b> = phase * |b ^ x_bits>.
   */
  cplx basis_phase(std::uint64_t b) const;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;

 private:
  int n_qubits_ = 0;
  std::uint64_t x_bits_ = 0;
  std::uint64_t z_bits_ = 0;
  cplx coefficient_ = 1.0;
};

/// Operator product a*b including the accumulated phase.
PauliTerm multiply(const PauliTerm& a, const PauliTerm& b);

/**
 * Sum of Pauli terms keyed by (x_bits, z_bits).
 *
 * Keys are unique and entries whose coefficient falls below the drop
 * tolerance are erased as they are merged. Iteration order is the key order,
 * which makes every downstream reduction deterministic.
 */
class PauliSum {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;

  PauliSum() = default;
  explicit PauliSum(int n_qubits, double drop_tolerance = kPauliDropTolerance);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  double drop_tolerance() const { return drop_tolerance_; }

  /// Coefficient of a key, zero if absent.
  cplx coefficient(std::uint64_t x_bits, std::uint64_t z_bits) const;

  /// Terms in key order.
  std::vector<PauliTerm> terms() const;

  const std::map<Key, cplx>& raw() const { return terms_; }

  PauliSum& operator+=(const PauliTerm& term);
  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator*=(cplx scale);

  /// Largest |imag| over all coefficients.
  double max_imag() const;

 private:
  int n_qubits_ = 0;
  double drop_tolerance_ = kPauliDropTolerance;
  std::map<Key, cplx> terms_;
};

/// Merges term into sum (copying); see PauliSum::operator+=.
PauliSum add_into(PauliSum sum, const PauliTerm& term);

PauliSum operator*(const PauliSum& a, const PauliSum& b);

/// Dense 2^n x 2^n realization, little-endian.
CMatrix to_dense_matrix(const PauliTerm& term,
                        int max_qubits = kDefaultDenseQubitLimit);
CMatrix to_dense_matrix(const PauliSum& op,
                        int max_qubits = kDefaultDenseQubitLimit);

/**
 * Terms grouped by their x mask. Every group shares one bit-flip pattern, so
 * applying the whole group to a basis state touches a single target index.
 */
struct FlipGroup {
  std::uint64_t x_bits = 0;
  /// (z_bits, coefficient * i^{#Y}) pairs.
  std::vector<std::pair<std::uint64_t, cplx>> diag_terms;

  /// Amplitude of <b ^ x_bits| G |b>.
  cplx amplitude(std::uint64_t b) const;
};

std::vector<FlipGroup> group_by_flip(const PauliSum& op);

/// Re<psi|op|psi> evaluated term by term.
double expectation(const PauliSum& op, const StateVector& psi);

/// Same as expectation() for a pre-grouped operator.
double expectation(std::span<const FlipGroup> groups, int n_qubits,
                   const StateVector& psi);

/// One line per term: "<re> <im> <label>".
void write_pauli_sum(std::ostream& os, const PauliSum& op);
PauliSum read_pauli_sum(std::istream& is, int n_qubits);

}  // namespace qcc
