// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qcc/fermion.hpp"
#include "qcc/pauli.hpp"
#include "qcc/sim.hpp"

namespace qcc {

enum class ExcitationKind {
  SingleAlpha,
  SingleBeta,
  DoubleMixed,
  DoubleAlpha,
  DoubleBeta,
};

std::string_view to_string(ExcitationKind kind);

/**
 * One spin-preserving excitation, with qubits in exchange-gate order:
 * singles are (occupied, virtual); doubles are (occupied, virtual,
 * occupied, virtual). On the reference state the gate's local pattern is
 * |10> or |1010>.
 */
struct Excitation {
  ExcitationKind kind = ExcitationKind::SingleAlpha;
  std::vector<int> qubits;

  bool is_single() const { return qubits.size() == 2; }

  /// Anti-Hermitian fermionic generator T - T^dag, T creating on the
  /// virtual modes and annihilating the occupied ones.
  FermionOperator generator(int n_modes) const;
};

/// Excitations in the order alpha singles, beta singles, mixed-spin doubles,
/// alpha-alpha doubles, beta-beta doubles.
struct ExcitationList {
  int n_spatial = 0;
  int n_alpha = 0;
  int n_beta = 0;
  std::vector<Excitation> excitations;

  int n_qubits() const { return 2 * n_spatial; }
  std::size_t size() const { return excitations.size(); }
  std::size_t n_singles() const;
  std::size_t n_doubles() const { return size() - n_singles(); }
};

/// Rotation angles (radians), one per excitation, each in [-pi, pi].
using ParameterVector = std::vector<double>;

ExcitationList build_excitation_list(int n_spatial, int n_alpha, int n_beta);

/// o_a v_a + o_b v_b + o_a v_a o_b v_b + C(o_a,2) C(v_a,2) + C(o_b,2) C(v_b,2)
std::size_t closed_form_excitation_count(int occ_alpha, int virt_alpha,
                                         int occ_beta, int virt_beta);

/// One exchange gate per excitation, in list order.
std::vector<Gate> qccsd_circuit(const ExcitationList& ex,
                                std::span<const double> params);

/**
 * Generators of the commuting factors of exp(theta (T - T^dag)) for one
 * excitation, parity strings included: each factor is exp(-i theta G) with G
 * a Pauli string carrying a real coefficient. Singles yield two factors ordered (Y_low X_high,
 * X_low Y_high). Doubles yield eight factors ordered by their X/Y pattern on
 * the ascending support: XXXY, XYXX, XYYY, YYXY, XXYX, YXXX, YXYY, YYYX.
 */
std::vector<PauliTerm> excitation_pauli_factors(const Excitation& exc,
                                                int n_qubits);

/// First-order Trotter product of the UCCSD exponentials, in list order.
std::vector<Gate> uccsd_trotter_circuit(const ExcitationList& ex,
                                        std::span<const double> params);

/// Sign s with decompose_exchange_single(theta) == ExchangeSingle(s theta).
inline constexpr int kExchangeSingleDecompositionSign = 1;
/// Sign s with decompose_exchange_double(theta) == ExchangeDouble(s theta).
inline constexpr int kExchangeDoubleDecompositionSign = 1;

/// CNOT, controlled-Ry(2 theta), CNOT on (a, b).
std::vector<Gate> decompose_exchange_single(double theta, int a, int b);

/// Six CNOTs, four X gates and one triply controlled Ry(2 theta).
std::vector<Gate> decompose_exchange_double(double theta, int a, int b, int c,
                                            int d);

/// Replaces every exchange gate by its elementary decomposition.
std::vector<Gate> decompose_circuit(std::span<const Gate> gates);

/**
 * Deviation between the parity-stripped Jordan-Wigner single-excitation
 * exponential on modes (occ j, virt i), i > j, and ExchangeSingle(-theta)
 * on (j, i). The register has n_qubits qubits (i + 1 when zero).
 */
double verify_parity_removal(int i, int j, double theta, int n_qubits = 0);

/**
 * Same for the double excitation exp(theta (a_i^+ a_j^+ a_k a_l - h.c.))
 * with j > k > i > l, against ExchangeDouble(-theta) on (l, i, k, j).
 */
double verify_parity_removal(int i, int j, int k, int l, double theta,
                             int n_qubits = 0);

}  // namespace qcc
