// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <bit>
#include <numbers>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qcc/ansatz.hpp"
#include "qcc/fermion.hpp"
#include "qcc/sim.hpp"

using namespace qcc;
using oracle::MatrixXcd;

namespace {

double max_abs(const MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

MatrixXcd ladder_dense(const FermionOperator& op) {
  const int n = op.n_modes();
  const std::size_t dim = std::size_t{1} << n;
  MatrixXcd out = MatrixXcd::Zero(dim, dim);
  for (const auto& [product, c] : op.terms()) {
    MatrixXcd m = MatrixXcd::Identity(dim, dim);
    for (const auto& f : product) m = m * oracle::ladder(n, f.mode, f.dagger);
    out += c * m;
  }
  return out;
}

// Determinants one or two spin-preserving excitations away from the
// reference, by brute force over the whole register.
std::set<std::uint64_t> excited_determinants(int m, int na, int nb) {
  const std::uint64_t amask = (std::uint64_t{1} << m) - 1;
  const std::uint64_t ref = hf_reference(m, na, nb);
  std::set<std::uint64_t> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << (2 * m)); ++b) {
    if (std::popcount(b & amask) != na || std::popcount(b >> m) != nb) continue;
    const int level = std::popcount(b & ~ref);
    if (level == 1 || level == 2) out.insert(b);
  }
  return out;
}

std::vector<double> random_params(std::size_t k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::vector<double> p(k);
  for (auto& x : p) x = u(rng);
  return p;
}

MatrixXcd number_operator(int n, int from, int to, double weight = 1.0) {
  MatrixXcd out = MatrixXcd::Zero(std::size_t{1} << n, std::size_t{1} << n);
  for (int q = from; q < to; ++q) out += weight * oracle::number(n, q);
  return out;
}

std::size_t elementary_count(const ExcitationList& ex) {
  const std::vector<double> p(ex.size(), 0.1);
  const auto c = qccsd_circuit(ex, p);
  return decompose_circuit(c).size();
}

}  // namespace

TEST_CASE("excitation counts") {
  const auto h2 = build_excitation_list(2, 1, 1);
  CHECK(h2.size() == 3);
  CHECK(h2.n_singles() == 2);
  const auto h4 = build_excitation_list(4, 2, 2);
  CHECK(h4.size() == 26);
  CHECK(h4.n_singles() == 8);
  CHECK(build_excitation_list(6, 3, 3).size() == 117);

  const auto lone = build_excitation_list(2, 1, 0);
  CHECK(lone.size() == 1);
  CHECK(lone.n_doubles() == 0);
  CHECK(build_excitation_list(2, 2, 2).size() == 0);
  CHECK_THROWS_AS(build_excitation_list(2, 3, 1), std::invalid_argument);

  const auto n2 = build_excitation_list(8, 5, 5);
  CHECK(n2.n_qubits() == 16);
  CHECK(n2.size() == closed_form_excitation_count(5, 3, 5, 3));
  CHECK(qccsd_circuit(n2, std::vector<double>(n2.size(), 0.0)).size() == n2.size());
  CHECK(n2.size() == excited_determinants(8, 5, 5).size());
}

TEST_CASE("excitation list matches an exhaustive enumeration") {
  for (int oa = 0; oa <= 4; ++oa)
    for (int va = 0; va <= 4; ++va)
      for (int ob = 0; ob <= 4; ++ob)
        for (int vb = 0; vb <= 4; ++vb) {
          const int m = std::max(oa + va, ob + vb);
          if (m == 0 || oa + va != ob + vb) continue;
          const auto ex = build_excitation_list(m, oa, ob);
          CHECK(ex.size() == closed_form_excitation_count(oa, va, ob, vb));
          if (m > 5) continue;
          // Each excitation reaches a distinct determinant; together they
          // reach every singly and doubly excited one.
          const auto expect = excited_determinants(m, oa, ob);
          std::set<std::uint64_t> got;
          for (const auto& e : ex.excitations) {
            std::uint64_t b = hf_reference(m, oa, ob);
            for (int q : e.qubits) b ^= std::uint64_t{1} << q;
            got.insert(b);
          }
          CHECK(got.size() == ex.size());
          CHECK(got == expect);
        }
  // Unequal spatial extents per spin are covered by the formula alone.
  CHECK(closed_form_excitation_count(1, 1, 0, 0) == 1);
  CHECK(closed_form_excitation_count(2, 2, 2, 2) == 26);
  CHECK(closed_form_excitation_count(3, 3, 3, 3) == 117);
}

TEST_CASE("exchange-gate decompositions match the dense gates") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  const int s1 = kExchangeSingleDecompositionSign;
  const int s2 = kExchangeDoubleDecompositionSign;
  CHECK(max_abs(circuit_unitary(decompose_exchange_single(0.0, 1, 0), 2) -
                MatrixXcd::Identity(4, 4)) < 1e-15);
  CHECK(max_abs(circuit_unitary(decompose_exchange_double(0.0, 3, 2, 1, 0), 4) -
                MatrixXcd::Identity(16, 16)) < 1e-15);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double t = u(rng);
    const auto single = decompose_exchange_single(t, 1, 0);
    CHECK(single.size() == 3);
    worst = std::max(worst, max_abs(circuit_unitary(single, 2) -
                                    oracle::embed(oracle::exchange_single(s1 * t),
                                                  {1, 0}, 2)));
    const auto dbl = decompose_exchange_double(t, 3, 2, 1, 0);
    CHECK(dbl.size() == 11);
    worst = std::max(worst, max_abs(circuit_unitary(dbl, 4) -
                                    oracle::embed(oracle::exchange_double(s2 * t),
                                                  {3, 2, 1, 0}, 4)));
  }
  CHECK(worst < 1e-12);
  CHECK_THROWS_AS(decompose_exchange_single(0.1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(decompose_exchange_double(0.1, 0, 1, 1, 2), std::invalid_argument);
}

TEST_CASE("decompositions inside a larger register") {
  std::mt19937_64 rng(67);
  const int n = 5;
  for (int trial = 0; trial < 10; ++trial) {
    const auto v = oracle::random_state(n, rng);
    const double t = random_params(1, rng)[0];
    const std::vector<Gate> direct{Gate::exchange_single(3, 0, t),
                                   Gate::exchange_double(4, 1, 0, 2, -t)};
    StateVector a(n, {v.data(), v.data() + v.size()});
    StateVector b = a;
    run_circuit(a, direct);
    run_circuit(b, decompose_circuit(direct));
    double diff = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i)
      diff = std::max(diff, std::abs(a[i] - b[i]));
    CHECK(diff < 1e-12);
  }
}

TEST_CASE("parity removal reproduces the exchange gates") {
  for (auto [i, j] : {std::pair{1, 0}, {3, 0}, {5, 2}, {4, 3}}) {
    CHECK(verify_parity_removal(i, j, 0.3) < 1e-12);
    CHECK(verify_parity_removal(i, j, 0.0) == 0.0);
  }
  CHECK(verify_parity_removal(3, 1, -2.2, 6) < 1e-12);
  // j > k > i > l
  for (auto [i, j, k, l] : {std::array{1, 3, 2, 0}, {2, 5, 4, 0}, {3, 6, 5, 1}}) {
    CHECK(verify_parity_removal(i, j, k, l, 0.7) < 1e-12);
    CHECK(verify_parity_removal(i, j, k, l, 0.0) == 0.0);
  }
  CHECK_THROWS_AS(verify_parity_removal(0, 1, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(verify_parity_removal(2, 1, 3, 0, 0.3), std::invalid_argument);
}

TEST_CASE("Pauli factors reproduce the fermionic generators") {
  // Sum of the factor generators G_k must equal i (T - T^dag), so that the
  // product of exp(-i theta G_k) is exp(theta (T - T^dag)).
  for (auto [m, na, nb] : {std::array{2, 1, 1}, {3, 1, 2}, {3, 2, 1}}) {
    const auto ex = build_excitation_list(m, na, nb);
    const int n = ex.n_qubits();
    for (const auto& e : ex.excitations) {
      const auto factors = excitation_pauli_factors(e, n);
      CHECK(factors.size() == (e.is_single() ? 2u : 8u));
      MatrixXcd sum = MatrixXcd::Zero(std::size_t{1} << n, std::size_t{1} << n);
      for (const auto& f : factors) {
        CHECK(std::abs(f.coefficient().imag()) < 1e-15);
        sum += to_dense_matrix(f);
      }
      const MatrixXcd a = ladder_dense(e.generator(n));
      CHECK(max_abs(a + a.adjoint()) < 1e-15);
      CHECK(max_abs(sum - oracle::cplx{0, 1} * a) < 1e-12);
      for (std::size_t x = 0; x < factors.size(); ++x)
        for (std::size_t y = x + 1; y < factors.size(); ++y) {
          const MatrixXcd gx = to_dense_matrix(factors[x]);
          const MatrixXcd gy = to_dense_matrix(factors[y]);
          CHECK(max_abs(gx * gy - gy * gx) < 1e-12);
        }
    }
  }
}

TEST_CASE("UCCSD Trotter circuit equals the product of exact exponentials") {
  std::mt19937_64 rng(71);
  for (auto [m, na, nb] : {std::array{2, 1, 1}, {4, 2, 2}}) {
    const auto ex = build_excitation_list(m, na, nb);
    const int n = ex.n_qubits();
    const auto p = random_params(ex.size(), rng);
    MatrixXcd expect = MatrixXcd::Identity(std::size_t{1} << n, std::size_t{1} << n);
    for (std::size_t k = 0; k < ex.size(); ++k)
      expect = oracle::expm_antihermitian(p[k] * ladder_dense(ex.excitations[k].generator(n))) *
               expect;
    CHECK(max_abs(circuit_unitary(uccsd_trotter_circuit(ex, p), n) - expect) < 1e-11);
    const std::vector<double> zero(ex.size(), 0.0);
    CHECK(max_abs(circuit_unitary(uccsd_trotter_circuit(ex, zero), n) -
                  MatrixXcd::Identity(expect.rows(), expect.cols())) < 1e-15);
  }
  const auto ex = build_excitation_list(2, 1, 1);
  CHECK_THROWS_AS(uccsd_trotter_circuit(ex, std::vector<double>(2, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("single-excitation factors commute in either order") {
  const auto ex = build_excitation_list(3, 1, 1);
  const int n = ex.n_qubits();
  for (const auto& e : ex.excitations) {
    if (!e.is_single()) continue;
    const auto f = excitation_pauli_factors(e, n);
    const double t = 0.83;
    const std::vector<Gate> ab{Gate::pauli_exponential(f[0], t),
                               Gate::pauli_exponential(f[1], t)};
    const std::vector<Gate> ba{ab[1], ab[0]};
    CHECK(max_abs(circuit_unitary(ab, n) - circuit_unitary(ba, n)) < 1e-12);
  }
}

TEST_CASE("QCCSD circuit structure") {
  std::mt19937_64 rng(73);
  const auto ex = build_excitation_list(4, 2, 2);
  const auto p = random_params(ex.size(), rng);
  const auto gates = qccsd_circuit(ex, p);
  REQUIRE(gates.size() == ex.size());
  MatrixXcd expect = MatrixXcd::Identity(256, 256);
  for (std::size_t k = 0; k < ex.size(); ++k) {
    const auto& q = ex.excitations[k].qubits;
    CHECK(gates[k].qubits == q);
    const MatrixXcd local = ex.excitations[k].is_single()
                                ? oracle::exchange_single(p[k])
                                : oracle::exchange_double(p[k]);
    expect = oracle::embed(local, q, 8) * expect;
  }
  const MatrixXcd u = circuit_unitary(gates, 8);
  CHECK(max_abs(u - expect) < 1e-12);

  const MatrixXcd number = number_operator(8, 0, 8);
  const MatrixXcd sz = number_operator(8, 0, 4, 0.5) - number_operator(8, 4, 8, 0.5);
  CHECK(max_abs(u * number - number * u) < 1e-12);
  CHECK(max_abs(u * sz - sz * u) < 1e-12);

  const std::vector<double> zero(ex.size(), 0.0);
  CHECK(max_abs(circuit_unitary(qccsd_circuit(ex, zero), 8) - MatrixXcd::Identity(256, 256)) <
        1e-15);
  CHECK_THROWS_AS(qccsd_circuit(ex, std::vector<double>(3, 0.0)), std::invalid_argument);
}

TEST_CASE("H2 mixed double rotates the reference into the doubly excited state") {
  const auto ex = build_excitation_list(2, 1, 1);
  const double t = 0.4;
  std::vector<double> p(3, 0.0);
  p[2] = t;
  REQUIRE_FALSE(ex.excitations[2].is_single());
  auto psi = prepare_basis_state(4, hf_reference(2, 1, 1));
  run_circuit(psi, qccsd_circuit(ex, p));
  CHECK(std::abs(psi[0b0101] - std::cos(t)) < 1e-15);
  CHECK(std::abs(psi[0b1010] + std::sin(t)) < 1e-15);
}

TEST_CASE("QCCSD preserves particle sectors on 12 qubits") {
  std::mt19937_64 rng(79);
  const auto ex = build_excitation_list(6, 3, 3);
  auto psi = prepare_basis_state(12, hf_reference(6, 3, 3));
  run_circuit(psi, qccsd_circuit(ex, random_params(ex.size(), rng)));
  const auto w = hamming_weight_distribution(psi);
  CHECK(w.size() == 1);
  CHECK(w.at(6) == doctest::Approx(1.0).epsilon(1e-12));
  const auto a = block_weight_distribution(psi, 0b111111);
  CHECK(a.size() == 1);
  CHECK(a.at(3) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("elementary gate counts") {
  const auto h2 = build_excitation_list(2, 1, 1);
  const auto h4 = build_excitation_list(4, 2, 2);
  const auto h6 = build_excitation_list(6, 3, 3);
  const auto n2 = build_excitation_list(8, 5, 5);
  std::vector<std::pair<int, std::size_t>> sizes;
  for (const auto* ex : {&h2, &h4, &h6, &n2}) {
    const std::size_t c = elementary_count(*ex);
    CHECK(c == 3 * ex->n_singles() + 11 * ex->n_doubles());
    sizes.emplace_back(ex->n_qubits(), c);
  }
  CHECK(sizes[1].second == 222);
  CHECK(sizes[2].second == 1143);
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const double n4 = std::pow(sizes[k].first, 4);
    CHECK(static_cast<double>(sizes[k].second) <= n4);
    if (k > 0) CHECK(sizes[k].second > sizes[k - 1].second);
  }
}
