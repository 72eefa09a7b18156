// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <bit>
#include <random>

#include "oracles.hpp"
#include "qcc/fermion.hpp"
#include "qcc/integrals.hpp"
#include "qcc/sim.hpp"

using namespace qcc;
using oracle::MatrixXcd;

namespace {

// Dense image of a FermionOperator built from occupation-basis ladders.
MatrixXcd dense_fermion(const FermionOperator& op) {
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

MolecularIntegrals random_integrals(int n, int n_alpha, int n_beta,
                                    std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 0.3);
  MolecularIntegrals mi;
  mi.n_spatial = n;
  mi.n_alpha = n_alpha;
  mi.n_beta = n_beta;
  mi.core_energy = 0.7;
  mi.one_body = Eigen::MatrixXd::Zero(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q) mi.one_body(p, q) = mi.one_body(q, p) = g(rng);
  for (int p = 0; p < n; ++p) mi.one_body(p, p) += -2.0 + 0.8 * p;
  mi.two_body = TwoBodyTensor(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) mi.two_body.set_symmetric(p, q, r, s, 0.1 * g(rng));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      mi.two_body.set_symmetric(p, p, q, q, mi.two_body(p, p, q, q) + 0.5);
  mi.orbital_energies = diagonal_fock(mi.one_body, mi.two_body, n_alpha, n_beta);
  return mi;
}

// Electronic Hamiltonian assembled densely, straight from the integrals.
MatrixXcd dense_hamiltonian(const MolecularIntegrals& mi) {
  const int m = mi.n_spatial, n = 2 * m;
  const std::size_t dim = std::size_t{1} << n;
  std::vector<MatrixXcd> a, ad;
  for (int p = 0; p < n; ++p) {
    a.push_back(oracle::ladder(n, p, false));
    ad.push_back(oracle::ladder(n, p, true));
  }
  MatrixXcd h = mi.core_energy * MatrixXcd::Identity(dim, dim);
  for (int s = 0; s < 2; ++s)
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q)
        h += mi.one_body(p, q) * ad[p + s * m] * a[q + s * m];
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2)
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
          for (int r = 0; r < m; ++r)
            for (int t = 0; t < m; ++t)
              h += 0.5 * mi.two_body(p, q, r, t) * ad[p + s1 * m] *
                   ad[r + s2 * m] * a[t + s2 * m] * a[q + s1 * m];
  return h;
}

// Lowest eigenvalue over basis states accepted by keep().
template <class Keep>
double restricted_ground(const MatrixXcd& h, Keep keep) {
  std::vector<Eigen::Index> idx;
  for (Eigen::Index b = 0; b < h.rows(); ++b)
    if (keep(static_cast<std::uint64_t>(b))) idx.push_back(b);
  MatrixXcd sub(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = h(idx[i], idx[j]);
  return Eigen::SelfAdjointEigenSolver<MatrixXcd>(sub).eigenvalues()(0);
}

auto sector_filter(int m, int na, int nb) {
  const std::uint64_t amask = (std::uint64_t{1} << m) - 1;
  return [=](std::uint64_t b) {
    return std::popcount(b & amask) == na && std::popcount(b >> m) == nb;
  };
}

}  // namespace

TEST_CASE("number operator maps to (I - Z)/2") {
  FermionOperator n0(1);
  n0.add({create(0), annihilate(0)}, 1.0);
  const PauliSum p = jordan_wigner(n0);
  CHECK(p.size() == 2);
  CHECK(std::abs(p.coefficient(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(p.coefficient(0, 1) + 0.5) < 1e-15);
}

TEST_CASE("adjacent single excitation has no parity string") {
  FermionOperator t(2);
  t.add({create(1), annihilate(0)}, 1.0);
  t.add({create(0), annihilate(1)}, -1.0);
  const PauliSum p = jordan_wigner(t);
  CHECK(p.size() == 2);
  // Y0 X1 and X0 Y1.
  CHECK(std::abs(p.coefficient(0b11, 0b01) - cplx{0, 0.5}) < 1e-15);
  CHECK(std::abs(p.coefficient(0b11, 0b10) - cplx{0, -0.5}) < 1e-15);
}

TEST_CASE("JW images match occupation-basis ladders") {
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p < n; ++p)
      for (bool dag : {false, true}) {
        FermionOperator op(n);
        op.add({{p, dag}}, 1.0);
        CHECK((to_dense_matrix(jordan_wigner(op)) - oracle::ladder(n, p, dag))
                  .cwiseAbs()
                  .maxCoeff() < 1e-15);
      }
}

TEST_CASE("canonical anticommutation relations") {
  const int n = 4;
  const std::size_t dim = 16;
  std::vector<MatrixXcd> a, ad;
  for (int p = 0; p < n; ++p) {
    FermionOperator x(n), y(n);
    x.add({annihilate(p)}, 1.0);
    y.add({create(p)}, 1.0);
    a.push_back(to_dense_matrix(jordan_wigner(x)));
    ad.push_back(to_dense_matrix(jordan_wigner(y)));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const MatrixXcd mixed = a[i] * ad[j] + ad[j] * a[i];
      const MatrixXcd expect =
          (i == j ? 1.0 : 0.0) * MatrixXcd::Identity(dim, dim);
      CHECK((mixed - expect).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((a[i] * a[j] + a[j] * a[i]).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("normal ordering keeps the operator and canonicalizes terms") {
  FermionOperator op(3);
  op.add({annihilate(0), create(0)}, 1.0);
  op.add({annihilate(0), create(1)}, 2.0);
  op.add({create(0), create(2), annihilate(1), annihilate(2)}, cplx{0.5, 0.25});
  op.add({create(1), create(1)}, 3.0);
  const FermionOperator no = op.normal_ordered();
  CHECK(no.is_normal_ordered());
  CHECK_FALSE(op.is_normal_ordered());
  CHECK((dense_fermion(no) - dense_fermion(op)).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(std::abs(no.constant() - 1.0) < 1e-15);
  // a_0 a_1^+ = -a_1^+ a_0
  CHECK(std::abs(no.terms().at({create(1), annihilate(0)}) + 2.0) < 1e-15);
  CHECK_THROWS_AS(op.add({create(3)}, 1.0), std::invalid_argument);
}

TEST_CASE("Hermitian operators map to real, Hermitian Pauli sums") {
  std::mt19937_64 rng(41);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4;
    FermionOperator t(n);
    for (int k = 0; k < 6; ++k) {
      FermionOperator::Product prod;
      const int len = 2 + 2 * static_cast<int>(rng() % 2);
      for (int f = 0; f < len; ++f)
        prod.push_back({static_cast<int>(rng() % n), f < len / 2});
      t.add(prod, cplx{g(rng), g(rng)});
    }
    FermionOperator h = t;
    h += t.adjoint();
    const PauliSum p = jordan_wigner(h.normal_ordered());
    CHECK(p.max_imag() < 1e-12);
    const MatrixXcd d = to_dense_matrix(p);
    CHECK((d - d.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((d - dense_fermion(h)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("toy one-orbital Hamiltonian") {
  MolecularIntegrals mi;
  mi.n_spatial = 1;
  mi.n_alpha = 1;
  mi.n_beta = 0;
  mi.core_energy = 0.25;
  mi.one_body = Eigen::MatrixXd::Constant(1, 1, -1.0);
  mi.two_body = TwoBodyTensor(1);
  mi.orbital_energies = Eigen::VectorXd::Constant(1, -1.0);
  const FermionOperator h = build_hamiltonian(mi);
  CHECK(h.size() == 3);
  CHECK(std::abs(h.constant() - 0.25) < 1e-15);
  CHECK(std::abs(h.terms().at({create(0), annihilate(0)}) + 1.0) < 1e-15);
  CHECK(std::abs(h.terms().at({create(1), annihilate(1)}) + 1.0) < 1e-15);
}

TEST_CASE("qubit Hamiltonian equals the directly assembled fermionic one") {
  std::mt19937_64 rng(43);
  for (int m : {2, 3}) {
    const auto mi = random_integrals(m, 1, 1, rng);
    const PauliSum h = jordan_wigner(build_hamiltonian(mi));
    CHECK(h.n_qubits() == 2 * m);
    CHECK(h.max_imag() < 1e-12);
    CHECK((to_dense_matrix(h) - dense_hamiltonian(mi)).cwiseAbs().maxCoeff() <
          1e-12);
  }
}

TEST_CASE("molecular Hamiltonians conserve particle number and S_z") {
  for (int atoms : {2, 4}) {
    const auto rhf = hydrogen_rhf(hydrogen_chain(atoms, 0.9));
    const PauliSum h = jordan_wigner(build_hamiltonian(rhf.mo));
    const int n = h.n_qubits();
    const MatrixXcd d = to_dense_matrix(h);
    MatrixXcd number = MatrixXcd::Zero(d.rows(), d.cols());
    MatrixXcd sz = number;
    for (int q = 0; q < n; ++q) {
      number += oracle::number(n, q);
      sz += (q < n / 2 ? 0.5 : -0.5) * oracle::number(n, q);
    }
    CHECK((d * number - number * d).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((d * sz - sz * d).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("H2 Hamiltonian ground energy") {
  // Reference RHF and FCI energies from an independent SCF/FCI code.
  const auto rhf = hydrogen_rhf(hydrogen_chain(2, 0.735));
  const PauliSum h = jordan_wigner(build_hamiltonian(rhf.mo));
  CHECK(h.n_qubits() == 4);
  const MatrixXcd d = to_dense_matrix(h);
  const double sector = restricted_ground(d, sector_filter(2, 1, 1));
  const double full = Eigen::SelfAdjointEigenSolver<MatrixXcd>(d).eigenvalues()(0);
  CHECK(sector == doctest::Approx(-1.137306035753).epsilon(1e-10));
  CHECK(std::abs(sector - full) < 1e-12);
}

TEST_CASE("frozen core matches full-space FCI over frozen determinants") {
  std::mt19937_64 rng(47);
  const auto mi = random_integrals(3, 2, 2, rng);
  REQUIRE(mi.orbital_energies(0) < mi.orbital_energies(1));
  const ActiveSpace as{1, 0};
  const PauliSum active = jordan_wigner(build_hamiltonian(mi, as));
  CHECK(active.n_qubits() == 4);
  const double e_active =
      restricted_ground(to_dense_matrix(active), sector_filter(2, 1, 1));
  const auto in_sector = sector_filter(3, 2, 2);
  const double e_full = restricted_ground(dense_hamiltonian(mi), [&](std::uint64_t b) {
    return in_sector(b) && (b & 0b001001) == 0b001001;  // alpha 0 and beta 0
  });
  CHECK(std::abs(e_active - e_full) < 1e-10);
}

TEST_CASE("active-space bookkeeping") {
  std::mt19937_64 rng(53);
  const auto mi = random_integrals(4, 2, 2, rng);
  const auto same = freeze_core(mi, {});
  CHECK((same.one_body - mi.one_body).cwiseAbs().maxCoeff() == 0.0);
  CHECK(same.core_energy == mi.core_energy);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      CHECK(same.two_body(p, q, q, p) == mi.two_body(p, q, q, p));

  const auto reduced = freeze_core(mi, {1, 1});
  CHECK(reduced.n_spatial == 2);
  CHECK(reduced.n_alpha == 1);
  CHECK(reduced.n_beta == 1);
  CHECK_THROWS_AS(freeze_core(mi, {3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(freeze_core(mi, {2, 2}), std::invalid_argument);

  // Relabeling orbitals changes nothing once they are re-sorted.
  MolecularIntegrals perm = mi;
  const std::vector<int> pi{2, 0, 3, 1};
  for (int p = 0; p < 4; ++p) {
    perm.orbital_energies(pi[p]) = mi.orbital_energies(p);
    for (int q = 0; q < 4; ++q) {
      perm.one_body(pi[p], pi[q]) = mi.one_body(p, q);
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
          perm.two_body(pi[p], pi[q], pi[r], pi[s]) = mi.two_body(p, q, r, s);
    }
  }
  const auto a = to_dense_matrix(jordan_wigner(build_hamiltonian(mi, {1, 0})));
  const auto b = to_dense_matrix(jordan_wigner(build_hamiltonian(perm, {1, 0})));
  CHECK(restricted_ground(a, sector_filter(3, 1, 1)) ==
        doctest::Approx(restricted_ground(b, sector_filter(3, 1, 1))).epsilon(1e-12));
}

TEST_CASE("Hartree-Fock reference masks") {
  CHECK(hf_reference(2, 1, 1) == 0b0101);
  CHECK(hf_reference(4, 2, 2) == 0b00110011);
  CHECK(hf_reference(5, 2, 2) == 0b0001100011);
  CHECK(hf_reference(ActiveCounts{5, 2, 2}) == ((1u << 0) | (1u << 1) | (1u << 5) | (1u << 6)));
  CHECK_THROWS_AS(hf_reference(2, 3, 0), std::invalid_argument);
}

TEST_CASE("HF expectation equals the RHF energy") {
  for (int atoms : {2, 4, 6}) {
    for (double r : {0.74, 1.3}) {
      const auto rhf = hydrogen_rhf(hydrogen_chain(atoms, r));
      const auto counts = active_counts(rhf.mo, {});
      const PauliSum h = jordan_wigner(build_hamiltonian(rhf.mo));
      const double e = expectation(
          h, prepare_basis_state(h.n_qubits(), hf_reference(counts)));
      CHECK(std::abs(e - rhf.energy) < 1e-8);
    }
  }
}
