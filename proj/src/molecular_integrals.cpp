// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcc/molecular_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcc {

void TwoBodyTensor::set_symmetric(int p, int q, int r, int s, double v) {
  (*this)(p, q, r, s) = v;
  (*this)(q, p, r, s) = v;
  (*this)(p, q, s, r) = v;
  (*this)(q, p, s, r) = v;
  (*this)(r, s, p, q) = v;
  (*this)(s, r, p, q) = v;
  (*this)(r, s, q, p) = v;
  (*this)(s, r, q, p) = v;
}

double TwoBodyTensor::max_symmetry_violation() const {
  double worst = 0.0;
  for (int p = 0; p < n_; ++p)
    for (int q = 0; q < n_; ++q)
      for (int r = 0; r < n_; ++r)
        for (int s = 0; s < n_; ++s) {
          const double v = (*this)(p, q, r, s);
          worst = std::max({worst, std::abs(v - (*this)(q, p, r, s)),
                            std::abs(v - (*this)(p, q, s, r)),
                            std::abs(v - (*this)(r, s, p, q))});
        }
  return worst;
}

void MolecularIntegrals::validate(double tol) const {
  if (n_spatial <= 0) throw std::invalid_argument("no orbitals");
  if (one_body.rows() != n_spatial || one_body.cols() != n_spatial) {
    throw std::invalid_argument("one-body integrals have wrong shape");
  }
  if (two_body.size() != n_spatial) {
    throw std::invalid_argument("two-body integrals have wrong shape");
  }
  if (orbital_energies.size() != n_spatial) {
    throw std::invalid_argument("orbital energies have wrong length");
  }
  if ((one_body - one_body.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("one-body integrals are not symmetric");
  }
  if (two_body.max_symmetry_violation() > tol) {
    throw std::invalid_argument("two-body integrals break 8-fold symmetry");
  }
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n_spatial ||
      n_beta > n_spatial) {
    throw std::invalid_argument("electron counts do not fit the orbitals");
  }
}

ActiveCounts active_counts(const MolecularIntegrals& mi, const ActiveSpace& as) {
  if (as.n_frozen_spatial < 0 || as.n_removed_spatial < 0) {
    throw std::invalid_argument("active space counts must be non-negative");
  }
  if (as.n_frozen_spatial + as.n_removed_spatial >= mi.n_spatial) {
    throw std::invalid_argument("active space leaves no orbitals: frozen " +
                                std::to_string(as.n_frozen_spatial) +
                                " + removed " +
                                std::to_string(as.n_removed_spatial) +
                                " >= " + std::to_string(mi.n_spatial));
  }
  if (as.n_frozen_spatial > std::min(mi.n_alpha, mi.n_beta)) {
    throw std::invalid_argument(
        "frozen orbital count exceeds doubly occupied orbitals");
  }
  ActiveCounts c;
  c.n_spatial = mi.n_spatial - as.n_frozen_spatial - as.n_removed_spatial;
  c.n_alpha = mi.n_alpha - as.n_frozen_spatial;
  c.n_beta = mi.n_beta - as.n_frozen_spatial;
  if (c.n_alpha > c.n_spatial || c.n_beta > c.n_spatial) {
    throw std::invalid_argument("removed orbitals would hold electrons");
  }
  return c;
}

Eigen::VectorXd diagonal_fock(const Eigen::MatrixXd& one_body,
                              const TwoBodyTensor& two_body, int n_alpha,
                              int n_beta) {
  const int n = static_cast<int>(one_body.rows());
  Eigen::VectorXd f(n);
  for (int p = 0; p < n; ++p) {
    double coulomb = 0.0, exch_a = 0.0, exch_b = 0.0;
    for (int i = 0; i < n; ++i) {
      const double occ = (i < n_alpha) + (i < n_beta);
      coulomb += occ * two_body(p, p, i, i);
      if (i < n_alpha) exch_a += two_body(p, i, i, p);
      if (i < n_beta) exch_b += two_body(p, i, i, p);
    }
    f(p) = one_body(p, p) + coulomb - 0.5 * (exch_a + exch_b);
  }
  return f;
}

}  // namespace qcc
