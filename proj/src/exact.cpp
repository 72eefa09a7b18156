// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcc/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace qcc {
namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

std::vector<std::uint64_t> masks_with_popcount(int width, int count) {
  std::vector<std::uint64_t> out;
  if (count < 0 || count > width) return out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << width); ++m) {
    if (std::popcount(m) == count) out.push_back(m);
  }
  return out;
}

// Coordinate-list sparse matrix for the iterative path; repeated (row, col)
// entries add up.
struct SparseSector {
  struct Entry {
    std::size_t row;
    std::size_t col;
    cplx value;
  };
  std::vector<Entry> entries;

  VectorXcd apply(const VectorXcd& v) const {
    VectorXcd out = VectorXcd::Zero(v.size());
    for (const auto& e : entries) out(e.row) += e.value * v(e.col);
    return out;
  }
};

template <typename Sink>
void for_each_element(const PauliSum& h, const SectorBasis& sector,
                      double leakage_tolerance, Sink&& sink) {
  if (h.n_qubits() != sector.n_qubits()) {
    throw std::invalid_argument("Hamiltonian and sector widths differ");
  }
  const auto groups = group_by_flip(h);
  for (std::size_t col = 0; col < sector.dimension(); ++col) {
    const std::uint64_t b = sector.states[col];
    for (const auto& g : groups) {
      const cplx amp = g.amplitude(b);
      if (std::abs(amp) == 0.0) continue;
      const std::uint64_t target = b ^ g.x_bits;
      const std::ptrdiff_t row = sector.index_of(target);
      if (row < 0) {
        if (std::abs(amp) > leakage_tolerance) {
          std::ostringstream msg;
          msg << "Hamiltonian leaks out of the (" << sector.n_alpha << ","
              << sector.n_beta << ") sector: state " << b << " -> " << target
              << " with amplitude " << std::abs(amp);
          throw SectorLeakageError(msg.str());
        }
        continue;
      }
      sink(static_cast<std::size_t>(row), col, amp);
    }
  }
}

// Full eigendecomposition, eigenvalues ascending. Molecular Hamiltonians
// are real in the occupation basis and the real solver is much cheaper.
void dense_eigh(const MatrixXcd& m, Eigen::VectorXd& vals, MatrixXcd& vecs) {
  if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.real());
    vals = es.eigenvalues();
    vecs = es.eigenvectors().cast<cplx>();
  } else {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m);
    vals = es.eigenvalues();
    vecs = es.eigenvectors();
  }
}

// Lanczos with full reorthogonalization; returns the lowest Ritz pair.
std::pair<double, VectorXcd> lanczos_ground(const SparseSector& op,
                                            std::size_t dim,
                                            const ExactOptions& opts,
                                            double& second_ritz) {
  // Deterministic start vector with weight on every basis state.
  VectorXcd v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v(i) = cplx(1.0 + 0.01 * static_cast<double>(i % 7), 0.0);
  }
  v.normalize();
  std::vector<VectorXcd> basis{v};
  std::vector<double> alpha, beta;
  const int max_it =
      std::min<int>(opts.lanczos_max_iterations, static_cast<int>(dim));
  Eigen::VectorXd ritz_vals;
  Eigen::MatrixXd ritz_vecs;
  for (int it = 0; it < max_it; ++it) {
    VectorXcd w = op.apply(basis.back());
    const double a = basis.back().dot(w).real();
    alpha.push_back(a);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) w -= q * q.dot(w);
    }
    const double b = w.norm();

    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    ritz_vals = es.eigenvalues();
    ritz_vecs = es.eigenvectors();
    const double resid = std::abs(b * ritz_vecs(m - 1, 0));
    if (resid < opts.lanczos_tolerance || b < 1e-14) break;
    if (it + 1 == max_it) {
      throw std::runtime_error("Lanczos did not converge (residual " +
                               std::to_string(resid) + ")");
    }
    beta.push_back(b);
    basis.push_back(w / b);
  }
  const int m = static_cast<int>(alpha.size());
  VectorXcd ground = VectorXcd::Zero(dim);
  for (int i = 0; i < m; ++i) ground += basis[i] * ritz_vecs(i, 0);
  ground.normalize();
  second_ritz = m > 1 ? ritz_vals(1) : ritz_vals(0) + 1.0;
  return {ritz_vals(0), ground};
}

}  // namespace

std::ptrdiff_t SectorBasis::index_of(std::uint64_t mask) const {
  auto it = std::lower_bound(states.begin(), states.end(), mask);
  if (it == states.end() || *it != mask) return -1;
  return it - states.begin();
}

SectorBasis make_sector(int n_spatial, int n_alpha, int n_beta) {
  if (n_spatial <= 0 || 2 * n_spatial > 62) {
    throw std::invalid_argument("sector width out of range");
  }
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n_spatial || n_beta > n_spatial) {
    throw std::invalid_argument("sector electron counts do not fit");
  }
  SectorBasis s{n_spatial, n_alpha, n_beta, {}};
  const auto alpha = masks_with_popcount(n_spatial, n_alpha);
  const auto beta = masks_with_popcount(n_spatial, n_beta);
  s.states.reserve(alpha.size() * beta.size());
  // Beta bits are more significant, so iterating beta outer keeps order.
  for (auto mb : beta)
    for (auto ma : alpha) s.states.push_back((mb << n_spatial) | ma);
  return s;
}

MatrixXcd sector_matrix(const PauliSum& h, const SectorBasis& sector,
                        double leakage_tolerance) {
  const std::size_t dim = sector.dimension();
  MatrixXcd m = MatrixXcd::Zero(dim, dim);
  for_each_element(h, sector, leakage_tolerance,
                   [&](std::size_t r, std::size_t c, cplx v) { m(r, c) += v; });
  return m;
}

SectorGroundState sector_ground_state(const PauliSum& h,
                                      const SectorBasis& sector,
                                      const ExactOptions& opts) {
  const std::size_t dim = sector.dimension();
  if (dim == 0) throw std::invalid_argument("empty sector");
  SectorGroundState out;
  if (dim <= opts.dense_limit) {
    const MatrixXcd m = sector_matrix(h, sector, opts.leakage_tolerance);
    Eigen::VectorXd vals;
    MatrixXcd vecs;
    dense_eigh(m, vals, vecs);
    out.energy = vals(0);
    int n_deg = 1;
    while (n_deg < static_cast<int>(dim) &&
           vals(n_deg) - vals(0) < opts.degeneracy_tolerance) {
      ++n_deg;
    }
    out.degenerate = n_deg > 1;
    out.ground_space = vecs.leftCols(n_deg);
    out.vector = out.ground_space.col(0);
    out.residual = (m * out.vector - out.energy * out.vector).norm();
    return out;
  }

  SparseSector op;
  for_each_element(h, sector, opts.leakage_tolerance,
                   [&](std::size_t r, std::size_t c, cplx v) {
                     op.entries.push_back({r, c, v});
                   });
  double second = 0.0;
  auto [e, v] = lanczos_ground(op, dim, opts, second);
  out.energy = e;
  out.vector = v;
  out.ground_space = v;
  out.degenerate = second - e < opts.degeneracy_tolerance;
  out.residual = (op.apply(v) - e * v).norm();
  out.used_lanczos = true;
  return out;
}

OverlapResult hf_ground_overlap(const SectorGroundState& ground,
                                const SectorBasis& sector,
                                std::uint64_t hf_mask) {
  const std::ptrdiff_t idx = sector.index_of(hf_mask);
  if (idx < 0) throw std::invalid_argument("HF state lies outside the sector");
  double p = 0.0;
  for (Eigen::Index k = 0; k < ground.ground_space.cols(); ++k) {
    p += std::norm(ground.ground_space(idx, k));
  }
  return {std::clamp(p, 0.0, 1.0), ground.degenerate};
}

}  // namespace qcc
