// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcc/sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qcc {

StateVector::StateVector(int n_qubits)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {
  if (n_qubits < 0 || n_qubits > 30) {
    throw std::invalid_argument("state vector width out of range");
  }
}

StateVector::StateVector(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("state vector: amplitude count is not 2^n");
  }
}

StateVector StateVector::basis(int n_qubits, std::uint64_t mask) {
  StateVector psi(n_qubits);
  if (mask >= psi.dimension()) {
    throw std::invalid_argument("basis state mask out of range");
  }
  psi.amps_[mask] = 1.0;
  return psi;
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

StateVector prepare_basis_state(int n_qubits, std::uint64_t occupation) {
  return StateVector::basis(n_qubits, occupation);
}

Gate Gate::exchange_single(int a, int b, double theta) {
  return Gate{GateKind::ExchangeSingle, {a, b}, theta, {}};
}

Gate Gate::exchange_double(int a, int b, int c, int d, double theta) {
  return Gate{GateKind::ExchangeDouble, {a, b, c, d}, theta, {}};
}

Gate Gate::ry(int target, double angle) {
  return Gate{GateKind::Ry, {target}, angle, {}};
}

Gate Gate::controlled_ry(std::vector<int> controls, int target, double angle) {
  controls.push_back(target);
  return Gate{GateKind::Ry, std::move(controls), angle, {}};
}

Gate Gate::x(int q) { return Gate{GateKind::PauliX, {q}, 0.0, {}}; }

Gate Gate::cnot(int control, int target) {
  return Gate{GateKind::CNOT, {control, target}, 0.0, {}};
}

Gate Gate::pauli_exponential(const PauliTerm& generator, double angle) {
  std::vector<int> qubits;
  for (int q = 0; q < generator.n_qubits(); ++q) {
    if ((generator.support() >> q) & 1U) qubits.push_back(q);
  }
  return Gate{GateKind::PauliExponential, std::move(qubits), angle, generator};
}

void validate_gate(const Gate& g, int n_qubits) {
  std::size_t expected = 0;
  switch (g.kind) {
    case GateKind::ExchangeSingle: expected = 2; break;
    case GateKind::ExchangeDouble: expected = 4; break;
    case GateKind::PauliX: expected = 1; break;
    case GateKind::CNOT: expected = 2; break;
    case GateKind::Ry:
    case GateKind::PauliExponential: break;
  }
  if (expected != 0 && g.qubits.size() != expected) {
    throw std::invalid_argument("gate has wrong number of qubits");
  }
  if (g.kind == GateKind::Ry && g.qubits.empty()) {
    throw std::invalid_argument("Ry gate needs a target qubit");
  }
  std::uint64_t seen = 0;
  for (int q : g.qubits) {
    if (q < 0 || q >= n_qubits) {
      throw std::invalid_argument("gate qubit index out of range: " +
                                  std::to_string(q));
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (seen & bit) {
      throw std::invalid_argument("gate has duplicate qubit index " +
                                  std::to_string(q));
    }
    seen |= bit;
  }
  if (g.kind == GateKind::PauliExponential) {
    if (g.generator.n_qubits() > n_qubits) {
      throw std::invalid_argument("Pauli exponential wider than register");
    }
    if (std::abs(g.generator.coefficient().imag()) > 1e-14) {
      throw std::invalid_argument("Pauli exponential generator not Hermitian");
    }
  }
}

namespace {

using Index = std::uint64_t;

// Deposits the bits of `local` (first listed qubit most significant) onto
// the register positions in `qubits`.
Index scatter(Index local, const std::vector<int>& qubits) {
  Index out = 0;
  const std::size_t k = qubits.size();
  for (std::size_t p = 0; p < k; ++p) {
    if ((local >> (k - 1 - p)) & 1U) out |= Index{1} << qubits[p];
  }
  return out;
}

// Rotates the pair (lo, hi) of basis indices:
// new_lo = c*lo - s*hi, new_hi = s*lo + c*hi.
void rotate_pairs(StateVector& psi, Index mask, Index lo_bits, Index hi_bits,
                  double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const Index dim = psi.dimension();
  for (Index b = 0; b < dim; ++b) {
    if ((b & mask) != lo_bits) continue;
    const Index partner = (b & ~mask) | hi_bits;
    const cplx a0 = psi[b], a1 = psi[partner];
    psi[b] = c * a0 - s * a1;
    psi[partner] = s * a0 + c * a1;
  }
}

void apply_ry(StateVector& psi, const Gate& g) {
  const int target = g.qubits.back();
  Index controls = 0;
  for (std::size_t p = 0; p + 1 < g.qubits.size(); ++p) {
    controls |= Index{1} << g.qubits[p];
  }
  const Index tbit = Index{1} << target;
  // exp(-i a Y / 2) mixes |0> and |1> like an exchange with theta = a/2.
  rotate_pairs(psi, controls | tbit, controls, controls | tbit, g.angle / 2);
}

void apply_pauli_exponential(StateVector& psi, const Gate& g) {
  PauliTerm p = g.generator;
  const double weight = p.coefficient().real();
  const double c = std::cos(g.angle * weight), s = std::sin(g.angle * weight);
  const Index flip = p.x_bits();
  const Index dim = psi.dimension();
  const cplx minus_i{0.0, -1.0};
  if (flip == 0) {
    for (Index b = 0; b < dim; ++b) {
      psi[b] *= c + minus_i * s * p.basis_phase(b);
    }
    return;
  }
  // exp(-i a P) = cos(a) - i sin(a) P pairs b with b ^ flip.
  const Index pivot = Index{1} << (std::bit_width(flip) - 1);
  for (Index b = 0; b < dim; ++b) {
    if (b & pivot) continue;
    const Index partner = b ^ flip;
    const cplx a0 = psi[b], a1 = psi[partner];
    // <b|P|partner> = phase(partner), <partner|P|b> = phase(b)
    psi[b] = c * a0 + minus_i * s * p.basis_phase(partner) * a1;
    psi[partner] = c * a1 + minus_i * s * p.basis_phase(b) * a0;
  }
}

}  // namespace

void apply_gate(StateVector& psi, const Gate& g) {
  validate_gate(g, psi.n_qubits());
  switch (g.kind) {
    case GateKind::ExchangeSingle: {
      const Index mask = scatter(0b11, g.qubits);
      rotate_pairs(psi, mask, scatter(0b01, g.qubits), scatter(0b10, g.qubits),
                   g.angle);
      break;
    }
    case GateKind::ExchangeDouble: {
      const Index mask = scatter(0b1111, g.qubits);
      rotate_pairs(psi, mask, scatter(0b0101, g.qubits),
                   scatter(0b1010, g.qubits), g.angle);
      break;
    }
    case GateKind::Ry:
      apply_ry(psi, g);
      break;
    case GateKind::PauliX: {
      const Index bit = Index{1} << g.qubits[0];
      for (Index b = 0; b < psi.dimension(); ++b) {
        if (!(b & bit)) std::swap(psi[b], psi[b | bit]);
      }
      break;
    }
    case GateKind::CNOT: {
      const Index cbit = Index{1} << g.qubits[0];
      const Index tbit = Index{1} << g.qubits[1];
      for (Index b = 0; b < psi.dimension(); ++b) {
        if ((b & cbit) && !(b & tbit)) std::swap(psi[b], psi[b | tbit]);
      }
      break;
    }
    case GateKind::PauliExponential:
      apply_pauli_exponential(psi, g);
      break;
  }
}

void run_circuit(StateVector& psi, std::span<const Gate> gates) {
  for (const auto& g : gates) apply_gate(psi, g);
}

CMatrix circuit_unitary(std::span<const Gate> gates, int n_qubits,
                        int max_qubits) {
  if (n_qubits > max_qubits) {
    throw std::invalid_argument("register too large for dense realization");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  CMatrix u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector psi = StateVector::basis(n_qubits, col);
    run_circuit(psi, gates);
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = psi[row];
  }
  return u;
}

std::map<int, double> hamming_weight_distribution(const StateVector& psi) {
  return block_weight_distribution(psi, ~Index{0});
}

std::map<int, double> block_weight_distribution(const StateVector& psi,
                                                std::uint64_t block_mask) {
  std::map<int, double> out;
  for (Index b = 0; b < psi.dimension(); ++b) {
    const double p = std::norm(psi[b]);
    if (p == 0.0) continue;
    out[std::popcount(b & block_mask)] += p;
  }
  return out;
}

void write_state(std::ostream& os, const StateVector& psi, double threshold) {
  const auto old_prec = os.precision();
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (Index b = 0; b < psi.dimension(); ++b) {
    if (std::norm(psi[b]) > threshold) {
      os << b << ' ' << psi[b].real() << ' ' << psi[b].imag() << '\n';
    }
  }
  os.precision(old_prec);
}

}  // namespace qcc
