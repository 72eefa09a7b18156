// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qcc/integrals.hpp"

namespace qcc {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// G_{mu nu} = sum_{ls} D_{ls} [(mu nu|s l) - 1/2 (mu l|s nu)], D = 2 C_occ C_occ^T
MatrixXd two_electron_fock(const MatrixXd& density, const TwoBodyTensor& eri) {
  const int n = static_cast<int>(density.rows());
  MatrixXd g = MatrixXd::Zero(n, n);
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      double acc = 0.0;
      for (int l = 0; l < n; ++l)
        for (int s = 0; s < n; ++s) {
          acc += density(l, s) *
                 (eri(mu, nu, s, l) - 0.5 * eri(mu, l, s, nu));
        }
      g(mu, nu) = acc;
    }
  return g;
}

struct Orbitals {
  VectorXd energies;
  MatrixXd coefficients;
};

Orbitals diagonalize(const MatrixXd& fock, const MatrixXd& x) {
  const MatrixXd fp = x.transpose() * fock * x;
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(fp);
  const VectorXd& e = es.eigenvalues();
  const MatrixXd c = x * es.eigenvectors();
  // Ascending energy, ties kept in solver order.
  std::vector<int> order(e.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return e(a) < e(b); });
  Orbitals out{VectorXd(e.size()), MatrixXd(c.rows(), c.cols())};
  for (int k = 0; k < static_cast<int>(order.size()); ++k) {
    out.energies(k) = e(order[k]);
    out.coefficients.col(k) = c.col(order[k]);
  }
  return out;
}

MatrixXd density_from(const MatrixXd& c, int n_occ) {
  const MatrixXd occ = c.leftCols(n_occ);
  return 2.0 * occ * occ.transpose();
}

TwoBodyTensor transform_eri(const TwoBodyTensor& ao, const MatrixXd& c) {
  const int n = ao.size();
  TwoBodyTensor t1(n), t2(n);
  // Four quarter transformations.
  for (int i = 0; i < n; ++i)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int p = 0; p < n; ++p) acc += c(p, i) * ao(p, q, r, s);
          t1(i, q, r, s) = acc;
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int q = 0; q < n; ++q) acc += c(q, j) * t1(i, q, r, s);
          t2(i, j, r, s) = acc;
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int r = 0; r < n; ++r) acc += c(r, k) * t2(i, j, r, s);
          t1(i, j, k, s) = acc;
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double acc = 0.0;
          for (int s = 0; s < n; ++s) acc += c(s, l) * t1(i, j, k, s);
          t2(i, j, k, l) = acc;
        }
  // Symmetrize away round-off so downstream symmetry checks are exact.
  TwoBodyTensor out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = (t2(i, j, k, l) + t2(j, i, k, l) + t2(i, j, l, k) +
                            t2(j, i, l, k) + t2(k, l, i, j) + t2(l, k, i, j) +
                            t2(k, l, j, i) + t2(l, k, j, i)) /
                           8.0;
          out.set_symmetric(i, j, k, l, v);
        }
  return out;
}

// Pulay DIIS on orthogonal-basis commutator residuals.
class Diis {
 public:
  explicit Diis(int depth) : depth_(depth) {}

  MatrixXd extrapolate(const MatrixXd& fock, const MatrixXd& error) {
    focks_.push_back(fock);
    errors_.push_back(error);
    if (static_cast<int>(focks_.size()) > depth_) {
      focks_.erase(focks_.begin());
      errors_.erase(errors_.begin());
    }
    const int m = static_cast<int>(focks_.size());
    if (m < 2) return fock;
    MatrixXd b = MatrixXd::Zero(m + 1, m + 1);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= i; ++j)
        b(i, j) = b(j, i) = errors_[i].cwiseProduct(errors_[j]).sum();
    b.row(m).head(m).setConstant(-1.0);
    b.col(m).head(m).setConstant(-1.0);
    VectorXd rhs = VectorXd::Zero(m + 1);
    rhs(m) = -1.0;
    const VectorXd w = b.fullPivLu().solve(rhs);
    if (!w.allFinite()) return fock;
    MatrixXd out = MatrixXd::Zero(fock.rows(), fock.cols());
    for (int i = 0; i < m; ++i) out += w(i) * focks_[i];
    return out;
  }

 private:
  int depth_;
  std::vector<MatrixXd> focks_;
  std::vector<MatrixXd> errors_;
};

}  // namespace

RhfResult rhf_solve(const AoIntegrals& ao, int n_electrons,
                    const RhfOptions& opts) {
  if (n_electrons <= 0 || n_electrons % 2 != 0) {
    throw std::invalid_argument("closed-shell SCF needs an even electron count");
  }
  const int n = ao.n_basis();
  const int n_occ = n_electrons / 2;
  if (n_occ > n) throw std::invalid_argument("more electrons than orbitals");

  // Symmetric orthogonalization X = S^{-1/2}.
  Eigen::SelfAdjointEigenSolver<MatrixXd> s_es(ao.overlap);
  if (s_es.eigenvalues().minCoeff() < 1e-10) {
    throw std::invalid_argument("AO overlap matrix is singular");
  }
  const MatrixXd x = s_es.eigenvectors() *
                     s_es.eigenvalues().cwiseInverse().cwiseSqrt().asDiagonal() *
                     s_es.eigenvectors().transpose();

  const MatrixXd hcore = ao.core_hamiltonian();
  Orbitals orb = diagonalize(hcore, x);
  MatrixXd density = density_from(orb.coefficients, n_occ);

  RhfResult res;
  Diis diis(opts.diis_vectors);
  double change = 0.0;
  bool converged = false;
  for (int it = 1; it <= opts.max_cycles; ++it) {
    const MatrixXd fock = hcore + two_electron_fock(density, ao.eri);
    const double e_elec = 0.5 * (density.cwiseProduct(hcore + fock)).sum();
    res.energy_history.push_back(e_elec + ao.nuclear_repulsion);

    MatrixXd step_fock = fock;
    if (opts.diis_vectors > 0 && it > opts.damped_cycles) {
      const MatrixXd err = x.transpose() *
                           (fock * density * ao.overlap -
                            ao.overlap * density * fock) *
                           x;
      step_fock = diis.extrapolate(fock, err);
    }
    orb = diagonalize(step_fock, x);
    MatrixXd next = density_from(orb.coefficients, n_occ);
    change = (next - density).cwiseAbs().maxCoeff();
    res.iterations = it;
    if (change < opts.density_tolerance) {
      density = next;
      converged = true;
      break;
    }
    if (it <= opts.damped_cycles) {
      next = opts.damping * density + (1.0 - opts.damping) * next;
    }
    density = next;
  }
  res.last_density_change = change;
  if (!converged) {
    std::ostringstream msg;
    msg << "SCF did not converge in " << opts.max_cycles
        << " cycles (last density change " << change << ")";
    throw ScfError(msg.str(), change);
  }

  const MatrixXd fock = hcore + two_electron_fock(density, ao.eri);
  res.energy = 0.5 * (density.cwiseProduct(hcore + fock)).sum() +
               ao.nuclear_repulsion;
  res.energy_history.push_back(res.energy);

  // Final orbitals from the converged Fock matrix.
  orb = diagonalize(fock, x);
  res.coefficients = orb.coefficients;

  MolecularIntegrals& mo = res.mo;
  mo.n_spatial = n;
  mo.core_energy = ao.nuclear_repulsion;
  mo.one_body = orb.coefficients.transpose() * hcore * orb.coefficients;
  mo.one_body = 0.5 * (mo.one_body + mo.one_body.transpose()).eval();
  mo.two_body = transform_eri(ao.eri, orb.coefficients);
  mo.orbital_energies = orb.energies;
  mo.n_alpha = n_occ;
  mo.n_beta = n_occ;
  mo.scf_energy = res.energy;
  return res;
}

RhfResult hydrogen_rhf(const Geometry& geom, const RhfOptions& opts) {
  const AoIntegrals ao = sto3g_hydrogen_integrals(geom);
  return rhf_solve(ao, ao.n_electrons, opts);
}

}  // namespace qcc
