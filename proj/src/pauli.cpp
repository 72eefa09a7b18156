// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcc/pauli.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qcc/sim.hpp"

namespace qcc {
namespace {

// i^k for k mod 4.
cplx i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::uint64_t register_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_width(int n) {
  if (n < 0 || n > kMaxQubits) {
    throw std::invalid_argument("register width out of range: " +
                                std::to_string(n));
  }
}

}  // namespace

PauliTerm::PauliTerm(int n_qubits, std::uint64_t x_bits, std::uint64_t z_bits,
                     cplx coefficient)
    : n_qubits_(n_qubits),
      x_bits_(x_bits),
      z_bits_(z_bits),
      coefficient_(coefficient) {
  check_width(n_qubits);
  if (((x_bits | z_bits) & ~register_mask(n_qubits)) != 0) {
    throw std::invalid_argument("Pauli term acts outside its register");
  }
}

PauliTerm PauliTerm::identity(int n_qubits, cplx coefficient) {
  return PauliTerm(n_qubits, 0, 0, coefficient);
}

PauliTerm PauliTerm::from_label(int n_qubits, const std::string& label,
                                cplx coefficient) {
  std::istringstream in(label);
  std::string tok;
  std::uint64_t x = 0, z = 0;
  while (in >> tok) {
    if (tok == "I") continue;
    if (tok.size() < 2) throw std::invalid_argument("bad Pauli token: " + tok);
    int q = 0;
    try {
      std::size_t used = 0;
      q = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad Pauli token: " + tok);
    }
    if (q < 0 || q >= n_qubits) {
      throw std::invalid_argument("Pauli qubit out of range: " + tok);
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (((x | z) & bit) != 0) {
      throw std::invalid_argument("repeated qubit in Pauli label: " + label);
    }
    switch (tok[0]) {
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default: throw std::invalid_argument("bad Pauli letter: " + tok);
    }
  }
  return PauliTerm(n_qubits, x, z, coefficient);
}

char PauliTerm::letter(int q) const {
  const bool x = (x_bits_ >> q) & 1U;
  const bool z = (z_bits_ >> q) & 1U;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

int PauliTerm::y_count() const { return std::popcount(x_bits_ & z_bits_); }

std::string PauliTerm::label() const {
  std::string out;
  for (int q = 0; q < n_qubits_; ++q) {
    const char c = letter(q);
    if (c == 'I') continue;
    if (!out.empty()) out += ' ';
    out += c;
    out += std::to_string(q);
  }
  return out.empty() ? "I" : out;
}

bool PauliTerm::commutes_with(const PauliTerm& other) const {
  const int k = std::popcount(x_bits_ & other.z_bits_) +
                std::popcount(z_bits_ & other.x_bits_);
  return k % 2 == 0;
}

cplx PauliTerm::basis_phase(std::uint64_t b) const {
  // Y = i X Z, so P = i^{#Y} X^x Z^z and Z^z|b> = (-1)^{|z & b|}|b>.
  const int sign = std::popcount(z_bits_ & b) & 1;
  cplx ph = i_pow(y_count());
  return sign ? -ph : ph;
}

PauliTerm multiply(const PauliTerm& a, const PauliTerm& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("Pauli multiply: register size mismatch");
  }
  // X^x1 Z^z1 X^x2 Z^z2 = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}
  const std::uint64_t x = a.x_bits() ^ b.x_bits();
  const std::uint64_t z = a.z_bits() ^ b.z_bits();
  int k = a.y_count() + b.y_count() - std::popcount(x & z);
  k += 2 * (std::popcount(a.z_bits() & b.x_bits()) & 1);
  return PauliTerm(a.n_qubits(), x, z,
                   a.coefficient() * b.coefficient() * i_pow(k));
}

PauliSum::PauliSum(int n_qubits, double drop_tolerance)
    : n_qubits_(n_qubits), drop_tolerance_(drop_tolerance) {
  check_width(n_qubits);
}

cplx PauliSum::coefficient(std::uint64_t x_bits, std::uint64_t z_bits) const {
  auto it = terms_.find({x_bits, z_bits});
  return it == terms_.end() ? cplx{} : it->second;
}

std::vector<PauliTerm> PauliSum::terms() const {
  std::vector<PauliTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) {
    out.emplace_back(n_qubits_, key.first, key.second, c);
  }
  return out;
}

PauliSum& PauliSum::operator+=(const PauliTerm& term) {
  if (term.n_qubits() != n_qubits_) {
    throw std::invalid_argument("PauliSum add: register size mismatch");
  }
  const Key key{term.x_bits(), term.z_bits()};
  auto [it, inserted] = terms_.try_emplace(key, term.coefficient());
  if (!inserted) it->second += term.coefficient();
  if (std::abs(it->second) < drop_tolerance_) terms_.erase(it);
  return *this;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("PauliSum add: register size mismatch");
  }
  for (const auto& [key, c] : other.terms_) {
    *this += PauliTerm(n_qubits_, key.first, key.second, c);
  }
  return *this;
}

PauliSum& PauliSum::operator*=(cplx scale) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scale;
    if (std::abs(it->second) < drop_tolerance_) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

double PauliSum::max_imag() const {
  double m = 0.0;
  for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c.imag()));
  return m;
}

PauliSum add_into(PauliSum sum, const PauliTerm& term) {
  sum += term;
  return sum;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("PauliSum multiply: register size mismatch");
  }
  PauliSum out(a.n_qubits(), a.drop_tolerance());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) out += multiply(ta, tb);
  }
  return out;
}

CMatrix to_dense_matrix(const PauliTerm& term, int max_qubits) {
  const int n = term.n_qubits();
  if (n > max_qubits) {
    throw std::invalid_argument("register too large for dense realization: " +
                                std::to_string(n) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << n;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (std::uint64_t b = 0; b < dim; ++b) {
    m(b ^ term.x_bits(), b) += term.coefficient() * term.basis_phase(b);
  }
  return m;
}

CMatrix to_dense_matrix(const PauliSum& op, int max_qubits) {
  const int n = op.n_qubits();
  if (n > max_qubits) {
    throw std::invalid_argument("register too large for dense realization: " +
                                std::to_string(n) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << n;
  CMatrix m = CMatrix::Zero(dim, dim);
  for (const auto& t : op.terms()) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      m(b ^ t.x_bits(), b) += t.coefficient() * t.basis_phase(b);
    }
  }
  return m;
}

cplx FlipGroup::amplitude(std::uint64_t b) const {
  cplx acc{};
  for (const auto& [z, c] : diag_terms) {
    acc += (std::popcount(z & b) & 1) ? -c : c;
  }
  return acc;
}

std::vector<FlipGroup> group_by_flip(const PauliSum& op) {
  std::vector<FlipGroup> groups;
  for (const auto& [key, c] : op.raw()) {
    // Keys are sorted by x first, so equal x masks are contiguous.
    if (groups.empty() || groups.back().x_bits != key.first) {
      groups.push_back(FlipGroup{key.first, {}});
    }
    const PauliTerm t(op.n_qubits(), key.first, key.second, c);
    groups.back().diag_terms.emplace_back(key.second,
                                          c * t.basis_phase(0));
  }
  return groups;
}

namespace {

void check_state(int n_qubits, const StateVector& psi) {
  if (psi.n_qubits() != n_qubits) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  if (std::abs(psi.norm_squared() - 1.0) > 1e-10) {
    throw std::invalid_argument("expectation: state is not normalized");
  }
}

}  // namespace

double expectation(std::span<const FlipGroup> groups, int n_qubits,
                   const StateVector& psi) {
  check_state(n_qubits, psi);
  const auto amps = psi.amplitudes();
  // Only basis states with nonzero weight contribute; circuits that conserve
  // particle number leave most of the register exactly zero.
  std::vector<std::uint64_t> support;
  support.reserve(amps.size());
  for (std::uint64_t b = 0; b < amps.size(); ++b) {
    if (amps[b] != cplx{}) support.push_back(b);
  }
  double total = 0.0;
  for (const auto& g : groups) {
    cplx acc{};
    for (const std::uint64_t b : support) {
      const cplx target = amps[b ^ g.x_bits];
      if (target == cplx{}) continue;
      acc += std::conj(target) * g.amplitude(b) * amps[b];
    }
    total += acc.real();
  }
  return total;
}

double expectation(const PauliSum& op, const StateVector& psi) {
  const auto groups = group_by_flip(op);
  return expectation(groups, op.n_qubits(), psi);
}

void write_pauli_sum(std::ostream& os, const PauliSum& op) {
  const auto old_prec = os.precision();
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& t : op.terms()) {
    os << t.coefficient().real() << ' ' << t.coefficient().imag() << ' '
       << t.label() << '\n';
  }
  os.precision(old_prec);
}

PauliSum read_pauli_sum(std::istream& is, int n_qubits) {
  PauliSum out(n_qubits);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    double re = 0, im = 0;
    if (!(ls >> re >> im)) {
      throw std::runtime_error("Pauli sum line " + std::to_string(line_no) +
                               ": expected two coefficients");
    }
    std::string rest;
    std::getline(ls, rest);
    try {
      out += PauliTerm::from_label(n_qubits, rest, {re, im});
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("Pauli sum line " + std::to_string(line_no) +
                               ": " + e.what());
    }
  }
  return out;
}

}  // namespace qcc
