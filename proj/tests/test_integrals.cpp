// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "qcc/exact.hpp"
#include "qcc/fermion.hpp"
#include "qcc/integrals.hpp"

using namespace qcc;

namespace {

double ground_energy(const MolecularIntegrals& mi) {
  const PauliSum h = jordan_wigner(build_hamiltonian(mi));
  return sector_ground_state(h, make_sector(mi.n_spatial, mi.n_alpha, mi.n_beta))
      .energy;
}

Geometry h2_bohr(double r) { return hydrogen_chain(2, r * kBohrInAngstrom); }

}  // namespace

TEST_CASE("Boys function") {
  CHECK(boys_f0(0.0) == 1.0);
  for (double t : {1e-12, 1e-8, 1e-4, 0.01, 0.3, 1.0, 2.5, 7.0, 15.0, 30.0, 50.0}) {
    CHECK(std::abs(boys_f0(t) - oracle::boys_quadrature(t, 20000)) < 1e-12);
  }
  // Small-argument series 1 - t/3 + t^2/10.
  const double t = 1e-5;
  CHECK(std::abs(boys_f0(t) - (1.0 - t / 3.0 + t * t / 10.0)) < 1e-14);
  CHECK_THROWS_AS(boys_f0(-1.0), std::invalid_argument);
}

TEST_CASE("contracted hydrogen function is normalized") {
  const auto ao = sto3g_hydrogen_integrals(
      Geometry{{{"H", {0.0, 0.0, 0.0}}}, 0, 2});
  CHECK(ao.n_basis() == 1);
  CHECK(std::abs(ao.overlap(0, 0) - 1.0) < 1e-6);
  CHECK(ao.nuclear_repulsion == 0.0);
}

TEST_CASE("H2 AO integrals at 1.4 bohr") {
  const double r = 1.4;
  const auto ao = sto3g_hydrogen_integrals(h2_bohr(r));
  const oracle::SBasis b;
  CHECK(std::abs(ao.overlap(0, 1) - b.overlap(0, r)) < 1e-10);
  CHECK(std::abs(ao.overlap(0, 1) - 0.659318) < 1e-6);
  CHECK(std::abs(ao.kinetic(0, 0) - b.kinetic(0, 0)) < 1e-10);
  CHECK(std::abs(ao.kinetic(0, 1) - b.kinetic(0, r)) < 1e-10);
  CHECK(std::abs(ao.nuclear(0, 0) - b.nuclear(0, 0, 0) - b.nuclear(0, 0, r)) < 1e-10);
  CHECK(std::abs(ao.nuclear(0, 1) - b.nuclear(0, r, 0) - b.nuclear(0, r, r)) < 1e-10);
  CHECK(std::abs(ao.nuclear_repulsion - 1.0 / r) < 1e-12);

  // Reference values from an independent integral code.
  CHECK(ao.kinetic(0, 0) == doctest::Approx(0.76003188).epsilon(1e-7));
  CHECK(ao.kinetic(0, 1) == doctest::Approx(0.23645466).epsilon(1e-7));
  CHECK(ao.nuclear(0, 0) == doctest::Approx(-1.88044089).epsilon(1e-7));
  CHECK(ao.nuclear(0, 1) == doctest::Approx(-1.19483462).epsilon(1e-7));
  CHECK(ao.eri(0, 0, 0, 0) == doctest::Approx(0.77460594).epsilon(1e-7));
  CHECK(ao.eri(0, 0, 1, 1) == doctest::Approx(0.56967593).epsilon(1e-7));
  CHECK(ao.eri(0, 1, 0, 1) == doctest::Approx(0.29702854).epsilon(1e-7));
  CHECK(ao.eri(0, 0, 0, 1) == doctest::Approx(0.44410766).epsilon(1e-7));
}

TEST_CASE("H4 AO integrals against closed forms") {
  const double a = 1.7;
  const auto ao = sto3g_hydrogen_integrals(hydrogen_chain(4, a * kBohrInAngstrom));
  const oracle::SBasis b;
  const double z[4] = {0.0, a, 2 * a, 3 * a};
  double worst = 0.0;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      worst = std::max(worst, std::abs(ao.overlap(p, q) - b.overlap(z[p], z[q])));
      worst = std::max(worst, std::abs(ao.kinetic(p, q) - b.kinetic(z[p], z[q])));
      double v = 0.0;
      for (double c : z) v += b.nuclear(z[p], z[q], c);
      worst = std::max(worst, std::abs(ao.nuclear(p, q) - v));
    }
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s <= r; ++s)
          worst = std::max(worst, std::abs(ao.eri(p, q, r, s) -
                                           b.eri(z[p], z[q], z[r], z[s])));
  CHECK(worst < 1e-10);
  CHECK(ao.eri.max_symmetry_violation() < 1e-14);
}

TEST_CASE("off-axis geometry keeps the 8-fold ERI symmetry") {
  Geometry g{{{"H", {0.0, 0.0, 0.0}},
              {"H", {0.7, 0.1, 0.0}},
              {"H", {0.3, 0.9, 0.2}},
              {"H", {-0.4, 0.5, 1.1}}},
             0,
             1};
  const auto ao = sto3g_hydrogen_integrals(g);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
          const double v = ao.eri(p, q, r, s);
          CHECK(std::abs(v - ao.eri(q, p, r, s)) < 1e-14);
          CHECK(std::abs(v - ao.eri(p, q, s, r)) < 1e-14);
          CHECK(std::abs(v - ao.eri(r, s, p, q)) < 1e-14);
        }
}

TEST_CASE("geometry errors") {
  CHECK_THROWS_AS(sto3g_hydrogen_integrals(Geometry{{{"He", {0, 0, 0}}}, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      sto3g_hydrogen_integrals(Geometry{{{"H", {0, 0, 0}}, {"H", {0, 0, 0}}}, 0, 1}),
      std::invalid_argument);
  CHECK_THROWS_AS(hydrogen_chain(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(hydrogen_chain(2, -1.0), std::invalid_argument);
  CHECK_THROWS_AS((Geometry{{{"H", {0, 0, 0}}}, 0, 1}.validate()),
                  std::invalid_argument);
}

TEST_CASE("XYZ round trip") {
  const Geometry g = hydrogen_chain(3, 0.9);
  std::stringstream ss;
  write_xyz(ss, g, "three hydrogens");
  const Geometry back = read_xyz(ss);
  REQUIRE(back.atoms.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(back.atoms[i].element == "H");
    for (int k = 0; k < 3; ++k)
      CHECK(back.atoms[i].position[k] == doctest::Approx(g.atoms[i].position[k]));
  }
  std::istringstream bad("2\ncomment\nH 0 0 0\n");
  CHECK_THROWS_AS(read_xyz(bad), std::invalid_argument);
  std::istringstream junk("2\ncomment\nH 0 0 0\nH 0 x 0\n");
  CHECK_THROWS_AS(read_xyz(junk), std::invalid_argument);
}

TEST_CASE("RHF energies") {
  // Reference RHF energies from an independent SCF code.
  struct Ref {
    int atoms;
    double r, e;
  };
  for (const Ref& ref : {Ref{2, 0.735, -1.116998996754}, Ref{2, 1.5, -0.910873554594},
                         Ref{4, 1.0, -2.098545936998}, Ref{4, 2.0, -1.575616476702},
                         Ref{6, 1.0, -3.135532213966}, Ref{6, 1.5, -2.750150044184}}) {
    const auto rhf = hydrogen_rhf(hydrogen_chain(ref.atoms, ref.r));
    CHECK(std::abs(rhf.energy - ref.e) < 1e-8);
    REQUIRE(rhf.mo.scf_energy.has_value());
    CHECK(*rhf.mo.scf_energy == rhf.energy);
  }
  for (double r : {1.0, 1.4, 2.2}) {
    const auto rhf = hydrogen_rhf(h2_bohr(r));
    CHECK(std::abs(rhf.energy - oracle::h2_rhf_energy(r)) < 1e-9);
  }
}

TEST_CASE("RHF orbitals and MO integrals") {
  for (int atoms : {2, 4, 6}) {
    const Geometry g = hydrogen_chain(atoms, 1.1);
    const auto ao = sto3g_hydrogen_integrals(g);
    const auto rhf = rhf_solve(ao, g.n_electrons());
    const Eigen::MatrixXd& c = rhf.coefficients;
    const Eigen::MatrixXd ortho = c.transpose() * ao.overlap * c;
    CHECK((ortho - Eigen::MatrixXd::Identity(atoms, atoms)).cwiseAbs().maxCoeff() <
          1e-10);
    CHECK_NOTHROW(rhf.mo.validate());
    CHECK(rhf.mo.two_body.max_symmetry_violation() < 1e-12);
    for (int p = 1; p < atoms; ++p)
      CHECK(rhf.mo.orbital_energies(p) >= rhf.mo.orbital_energies(p - 1));
    // Orbital energies are the diagonal of the self-consistent Fock matrix.
    const Eigen::VectorXd f =
        diagonal_fock(rhf.mo.one_body, rhf.mo.two_body, atoms / 2, atoms / 2);
    CHECK((f - rhf.mo.orbital_energies).cwiseAbs().maxCoeff() < 1e-7);
    const auto& h = rhf.energy_history;
    REQUIRE(h.size() >= 2);
    for (std::size_t k = h.size() < 5 ? 1 : h.size() - 4; k < h.size(); ++k)
      CHECK(h[k] <= h[k - 1] + 1e-10);
    CHECK(ground_energy(rhf.mo) <= rhf.energy + 1e-12);
  }
}

TEST_CASE("SCF failure is reported") {
  RhfOptions opts;
  opts.max_cycles = 2;
  opts.diis_vectors = 0;
  CHECK_THROWS_AS(hydrogen_rhf(hydrogen_chain(6, 2.5), opts), ScfError);
}

TEST_CASE("FCIDUMP round trip preserves the integrals and FCI energy") {
  const auto rhf = hydrogen_rhf(hydrogen_chain(4, 1.2));
  std::stringstream ss;
  write_fcidump(rhf.mo, ss);
  const auto back = parse_fcidump(ss);
  CHECK(back.n_spatial == 4);
  CHECK(back.n_alpha == 2);
  CHECK(back.n_beta == 2);
  CHECK(std::abs(back.core_energy - rhf.mo.core_energy) < 1e-14);
  CHECK((back.one_body - rhf.mo.one_body).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((back.orbital_energies - rhf.mo.orbital_energies).cwiseAbs().maxCoeff() <
        1e-14);
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s)
          CHECK(std::abs(back.two_body(p, q, r, s) - rhf.mo.two_body(p, q, r, s)) <
                1e-14);

  const auto path = std::filesystem::temp_directory_path() / "qcc_test_h4.fcidump";
  write_fcidump_file(rhf.mo, path.string());
  const auto from_file = read_fcidump_file(path.string());
  std::filesystem::remove(path);
  CHECK(std::abs(ground_energy(from_file) - ground_energy(rhf.mo)) < 1e-10);
}

TEST_CASE("FCIDUMP parsing details") {
  std::istringstream minimal(
      "&FCI NORB=1,NELEC=2,MS2=0,\n&END\n"
      "  0.5 1 1 1 1\n -1.25 1 1 0 0\n  0.75 0 0 0 0\n");
  const auto mi = parse_fcidump(minimal);
  CHECK(mi.n_spatial == 1);
  CHECK(mi.core_energy == 0.75);
  CHECK(mi.one_body(0, 0) == -1.25);
  CHECK(mi.two_body(0, 0, 0, 0) == 0.5);
  // Orbital energy falls back to the diagonal Fock element h + J.
  CHECK(mi.orbital_energies(0) == doctest::Approx(-0.75));
  CHECK(ground_energy(mi) == doctest::Approx(0.75 - 2.5 + 0.5));

  std::istringstream fortran_style(
      "&FCI\n NORB=2,\n NELEC=2,\n/\n 1.0D-1 1 1 2 2\n 3.0d0 0 0 0 0\n");
  const auto f = parse_fcidump(fortran_style);
  CHECK(f.two_body(1, 1, 0, 0) == doctest::Approx(0.1));
  CHECK(f.core_energy == doctest::Approx(3.0));

  auto error_line = [](const std::string& text) {
    std::istringstream is(text);
    try {
      parse_fcidump(is);
    } catch (const FcidumpError& e) {
      return e.line;
    }
    return -1;
  };
  const std::string head = "&FCI NORB=2,NELEC=2,MS2=0,\n&END\n";
  CHECK(error_line(head + "0.1 1 1 1 1\n0.2 3 1 0 0\n") == 4);
  CHECK(error_line(head + "abc 1 1 1 1\n") == 3);
  CHECK(error_line(head + "0.1 1 1 1\n") == 3);
  CHECK(error_line(head + "0.1 1 1 1 1 9\n") == 3);
  CHECK(error_line(head + "0.1 1 0 1 0\n") == 3);
  CHECK(error_line("NORB=2\n") == 1);
  CHECK(error_line("&FCI NELEC=2,\n&END\n") == 2);
  CHECK(error_line("&FCI NORB=1,NELEC=3,\n&END\n") == 2);
  CHECK_THROWS(read_fcidump_file("/nonexistent/qcc.fcidump"));
}
