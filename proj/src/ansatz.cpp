// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcc/ansatz.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace qcc {
namespace {

std::size_t choose2(int n) { return n < 2 ? 0 : std::size_t(n) * (n - 1) / 2; }

void check_lengths(const ExcitationList& ex, std::span<const double> params) {
  if (params.size() != ex.size()) {
    throw std::invalid_argument("parameter count " +
                                std::to_string(params.size()) +
                                " does not match excitation count " +
                                std::to_string(ex.size()));
  }
}

// X/Y pattern of a term on its ascending support, e.g. "XXXY".
std::string xy_pattern(const PauliTerm& t) {
  std::string out;
  for (int q = 0; q < t.n_qubits(); ++q) {
    if ((t.x_bits() >> q) & 1U) out += t.letter(q);
  }
  return out;
}

constexpr std::array<const char*, 2> kSingleOrder{"YX", "XY"};
constexpr std::array<const char*, 8> kDoubleOrder{
    "XXXY", "XYXX", "XYYY", "YYXY", "XXYX", "YXXX", "YXYY", "YYYX"};

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

std::vector<Gate> stripped_exponentials(const Excitation& exc, int n_qubits,
                                        double theta) {
  std::vector<Gate> gates;
  for (const auto& g : excitation_pauli_factors(exc, n_qubits)) {
    // Drop every Z factor that sits outside the X/Y support.
    const PauliTerm stripped(g.n_qubits(), g.x_bits(),
                             g.z_bits() & g.x_bits(), g.coefficient());
    gates.push_back(Gate::pauli_exponential(stripped, theta));
  }
  return gates;
}

}  // namespace

std::string_view to_string(ExcitationKind kind) {
  switch (kind) {
    case ExcitationKind::SingleAlpha: return "single_alpha";
    case ExcitationKind::SingleBeta: return "single_beta";
    case ExcitationKind::DoubleMixed: return "double_mixed";
    case ExcitationKind::DoubleAlpha: return "double_alpha";
    case ExcitationKind::DoubleBeta: return "double_beta";
  }
  return "unknown";
}

FermionOperator Excitation::generator(int n_modes) const {
  FermionOperator t(n_modes);
  if (is_single()) {
    t.add({create(qubits[1]), annihilate(qubits[0])}, 1.0);
  } else if (qubits.size() == 4) {
    t.add({create(qubits[1]), create(qubits[3]), annihilate(qubits[2]),
           annihilate(qubits[0])},
          1.0);
  } else {
    throw std::invalid_argument("excitation must act on 2 or 4 modes");
  }
  FermionOperator g = t;
  g -= t.adjoint();
  return g;
}

std::size_t ExcitationList::n_singles() const {
  return static_cast<std::size_t>(
      std::count_if(excitations.begin(), excitations.end(),
                    [](const Excitation& e) { return e.is_single(); }));
}

ExcitationList build_excitation_list(int n_spatial, int n_alpha, int n_beta) {
  if (n_spatial <= 0 || n_alpha < 0 || n_beta < 0 || n_alpha > n_spatial ||
      n_beta > n_spatial) {
    throw std::invalid_argument("electron counts do not fit the orbitals");
  }
  ExcitationList ex{n_spatial, n_alpha, n_beta, {}};
  std::vector<int> occ_a, virt_a, occ_b, virt_b;
  for (int p = 0; p < n_spatial; ++p) {
    (p < n_alpha ? occ_a : virt_a).push_back(p);
    (p < n_beta ? occ_b : virt_b).push_back(p + n_spatial);
  }
  auto& out = ex.excitations;
  for (int i : occ_a)
    for (int j : virt_a) out.push_back({ExcitationKind::SingleAlpha, {i, j}});
  for (int k : occ_b)
    for (int l : virt_b) out.push_back({ExcitationKind::SingleBeta, {k, l}});
  for (int i : occ_a)
    for (int j : virt_a)
      for (int k : occ_b)
        for (int l : virt_b)
          out.push_back({ExcitationKind::DoubleMixed, {i, j, k, l}});
  auto same_spin = [&out](const std::vector<int>& occ,
                          const std::vector<int>& virt, ExcitationKind kind) {
    for (std::size_t a = 0; a < occ.size(); ++a)
      for (std::size_t b = 0; b < virt.size(); ++b)
        for (std::size_t c = a + 1; c < occ.size(); ++c)
          for (std::size_t d = b + 1; d < virt.size(); ++d)
            out.push_back({kind, {occ[a], virt[b], occ[c], virt[d]}});
  };
  same_spin(occ_a, virt_a, ExcitationKind::DoubleAlpha);
  same_spin(occ_b, virt_b, ExcitationKind::DoubleBeta);
  return ex;
}

std::size_t closed_form_excitation_count(int occ_alpha, int virt_alpha,
                                         int occ_beta, int virt_beta) {
  const std::size_t sa = std::size_t(occ_alpha) * virt_alpha;
  const std::size_t sb = std::size_t(occ_beta) * virt_beta;
  return sa + sb + sa * sb + choose2(occ_alpha) * choose2(virt_alpha) +
         choose2(occ_beta) * choose2(virt_beta);
}

std::vector<Gate> qccsd_circuit(const ExcitationList& ex,
                                std::span<const double> params) {
  check_lengths(ex, params);
  std::vector<Gate> gates;
  gates.reserve(ex.size());
  for (std::size_t k = 0; k < ex.size(); ++k) {
    const auto& q = ex.excitations[k].qubits;
    if (q.size() == 2) {
      gates.push_back(Gate::exchange_single(q[0], q[1], params[k]));
    } else {
      gates.push_back(
          Gate::exchange_double(q[0], q[1], q[2], q[3], params[k]));
    }
  }
  return gates;
}

std::vector<PauliTerm> excitation_pauli_factors(const Excitation& exc,
                                                int n_qubits) {
  // JW(T - T^dag) = sum_k c_k P_k with imaginary c_k = -i b_k, so
  // exp(theta (T - T^dag)) = prod_k exp(-i theta b_k P_k); the P_k commute.
  const PauliSum image = jordan_wigner(exc.generator(n_qubits));
  std::vector<PauliTerm> factors;
  for (auto t : image.terms()) {
    if (std::abs(t.coefficient().real()) > 1e-12) {
      throw std::logic_error("excitation generator is not anti-Hermitian");
    }
    t.set_coefficient(cplx{0.0, 1.0} * t.coefficient());
    factors.push_back(t);
  }
  auto rank = [&](const PauliTerm& t) -> std::size_t {
    const std::string pat = xy_pattern(t);
    if (exc.is_single()) {
      for (std::size_t r = 0; r < kSingleOrder.size(); ++r)
        if (pat == kSingleOrder[r]) return r;
    } else {
      for (std::size_t r = 0; r < kDoubleOrder.size(); ++r)
        if (pat == kDoubleOrder[r]) return r;
    }
    throw std::logic_error("unexpected Pauli pattern " + pat);
  };
  std::sort(factors.begin(), factors.end(),
            [&](const PauliTerm& a, const PauliTerm& b) {
              return rank(a) < rank(b);
            });
  const std::size_t expected = exc.is_single() ? 2 : 8;
  if (factors.size() != expected) {
    throw std::logic_error("excitation expanded to " +
                           std::to_string(factors.size()) + " Pauli terms");
  }
  return factors;
}

std::vector<Gate> uccsd_trotter_circuit(const ExcitationList& ex,
                                        std::span<const double> params) {
  check_lengths(ex, params);
  std::vector<Gate> gates;
  for (std::size_t k = 0; k < ex.size(); ++k) {
    for (const auto& g :
         excitation_pauli_factors(ex.excitations[k], ex.n_qubits())) {
      gates.push_back(Gate::pauli_exponential(g, params[k]));
    }
  }
  return gates;
}

std::vector<Gate> decompose_exchange_single(double theta, int a, int b) {
  if (a == b || a < 0 || b < 0) {
    throw std::invalid_argument("exchange decomposition needs 2 distinct qubits");
  }
  return {Gate::cnot(a, b), Gate::controlled_ry({b}, a, 2.0 * theta),
          Gate::cnot(a, b)};
}

std::vector<Gate> decompose_exchange_double(double theta, int a, int b, int c,
                                            int d) {
  const std::array<int, 4> q{a, b, c, d};
  for (std::size_t i = 0; i < 4; ++i) {
    if (q[i] < 0) throw std::invalid_argument("negative qubit index");
    for (std::size_t j = i + 1; j < 4; ++j)
      if (q[i] == q[j]) {
        throw std::invalid_argument(
            "exchange decomposition needs 4 distinct qubits");
      }
  }
  return {Gate::cnot(a, c),
          Gate::cnot(b, d),
          Gate::cnot(a, b),
          Gate::x(c),
          Gate::x(d),
          Gate::controlled_ry({b, c, d}, a, 2.0 * theta),
          Gate::x(c),
          Gate::x(d),
          Gate::cnot(a, b),
          Gate::cnot(b, d),
          Gate::cnot(a, c)};
}

std::vector<Gate> decompose_circuit(std::span<const Gate> gates) {
  std::vector<Gate> out;
  for (const auto& g : gates) {
    std::vector<Gate> part;
    switch (g.kind) {
      case GateKind::ExchangeSingle:
        part = decompose_exchange_single(g.angle, g.qubits[0], g.qubits[1]);
        break;
      case GateKind::ExchangeDouble:
        part = decompose_exchange_double(g.angle, g.qubits[0], g.qubits[1],
                                         g.qubits[2], g.qubits[3]);
        break;
      default:
        out.push_back(g);
        continue;
    }
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

double verify_parity_removal(int i, int j, double theta, int n_qubits) {
  if (!(i > j && j >= 0)) {
    throw std::invalid_argument("single excitation check needs i > j >= 0");
  }
  const int n = n_qubits > 0 ? n_qubits : i + 1;
  if (i >= n) throw std::invalid_argument("register too small");
  const Excitation exc{ExcitationKind::SingleAlpha, {j, i}};
  const auto lhs = stripped_exponentials(exc, n, theta);
  const std::vector<Gate> rhs{Gate::exchange_single(j, i, -theta)};
  return max_abs_diff(circuit_unitary(lhs, n), circuit_unitary(rhs, n));
}

double verify_parity_removal(int i, int j, int k, int l, double theta,
                             int n_qubits) {
  if (!(j > k && k > i && i > l && l >= 0)) {
    throw std::invalid_argument(
        "double excitation check needs j > k > i > l >= 0");
  }
  const int n = n_qubits > 0 ? n_qubits : j + 1;
  if (j >= n) throw std::invalid_argument("register too small");
  // Occupied l, k; virtual i, j; generator a_i^+ a_j^+ a_k a_l - h.c.
  const Excitation exc{ExcitationKind::DoubleMixed, {l, i, k, j}};
  const auto lhs = stripped_exponentials(exc, n, theta);
  const std::vector<Gate> rhs{Gate::exchange_double(l, i, k, j, -theta)};
  return max_abs_diff(circuit_unitary(lhs, n), circuit_unitary(rhs, n));
}

}  // namespace qcc
