// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "qcc/molecular_integrals.hpp"
#include "qcc/pauli.hpp"

namespace qcc {

/// A creation (dagger) or annihilation operator on one mode.
struct Ladder {
  int mode = 0;
  bool dagger = false;

  friend auto operator<=>(const Ladder&, const Ladder&) = default;
};

inline Ladder create(int mode) { return {mode, true}; }
inline Ladder annihilate(int mode) { return {mode, false}; }

/**
 * Sum of products of ladder operators with complex coefficients.
 *
 * Terms are stored as written; normal_ordered() returns the canonical form
 * (creators left of annihilators, mode indices descending within each group)
 * with anticommutation signs and contraction terms applied.
 */
class FermionOperator {
 public:
  using Product = std::vector<Ladder>;

  FermionOperator() = default;
  explicit FermionOperator(int n_modes);

  static FermionOperator term(int n_modes, Product factors, cplx coefficient);

  int n_modes() const { return n_modes_; }
  const std::map<Product, cplx>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Adds coefficient * factors; throws on a mode outside the register.
  void add(const Product& factors, cplx coefficient);

  /// Coefficient of the identity product.
  cplx constant() const;

  FermionOperator& operator+=(const FermionOperator& other);
  FermionOperator& operator-=(const FermionOperator& other);
  FermionOperator& operator*=(cplx scale);
  friend FermionOperator operator*(const FermionOperator& a,
                                   const FermionOperator& b);

  FermionOperator adjoint() const;
  FermionOperator normal_ordered() const;

  /// True if every stored product is already in canonical order.
  bool is_normal_ordered() const;

 private:
  int n_modes_ = 0;
  std::map<Product, cplx> terms_;
};

/**
 * Jordan-Wigner image with the parity string on lower-indexed qubits:
 *   a_j^dag = (X_j - i Y_j)/2 Z_{j-1}...Z_0
 *   a_j     = (X_j + i Y_j)/2 Z_{j-1}...Z_0
 */
PauliSum jordan_wigner(const FermionOperator& op);

/// Spin-orbital index under the block ordering (all alpha, then all beta).
inline int spin_orbital(int spatial, int spin, int n_spatial) {
  return spatial + spin * n_spatial;
}

/**
 * Applies the active-space partition: folds frozen doubly occupied orbitals
 * into the one-body integrals and core energy and deletes removed virtuals.
 * Orbitals are ordered by ascending orbital energy first (stable).
 */
MolecularIntegrals freeze_core(const MolecularIntegrals& mi,
                               const ActiveSpace& as);

/**
 * Second-quantized electronic Hamiltonian over 2 * n_active spin orbitals
 * in block ordering, normal ordered, with the core energy as constant term.
 */
FermionOperator build_hamiltonian(const MolecularIntegrals& mi,
                                  const ActiveSpace& as = {});

/// Occupation mask of the lowest alpha and beta spin orbitals.
std::uint64_t hf_reference(int n_spatial, int n_alpha, int n_beta);
std::uint64_t hf_reference(const ActiveCounts& counts);

}  // namespace qcc
