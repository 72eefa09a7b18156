// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcc/fermion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcc {
namespace {

// Exact cancellations only; small but genuine integrals are kept.
constexpr double kFermionDropTolerance = 1e-15;

void normal_order_into(FermionOperator::Product term, cplx coefficient,
                       FermionOperator& out) {
  for (std::size_t i = 1; i < term.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      const Ladder right = term[j];
      const Ladder left = term[j - 1];
      if (right.dagger && !left.dagger) {
        term[j - 1] = right;
        term[j] = left;
        coefficient = -coefficient;
        if (right.mode == left.mode) {
          // a_p a_p^dag = 1 - a_p^dag a_p
          FermionOperator::Product contracted(term.begin(),
                                              term.begin() + (j - 1));
          contracted.insert(contracted.end(), term.begin() + (j + 1),
                            term.end());
          normal_order_into(std::move(contracted), -coefficient, out);
        }
      } else if (right.dagger == left.dagger) {
        if (right.mode == left.mode) return;  // a_p a_p = 0
        if (right.mode > left.mode) {
          term[j - 1] = right;
          term[j] = left;
          coefficient = -coefficient;
        }
      }
    }
  }
  out.add(term, coefficient);
}

}  // namespace

FermionOperator::FermionOperator(int n_modes) : n_modes_(n_modes) {
  if (n_modes < 0 || n_modes > kMaxQubits) {
    throw std::invalid_argument("fermion mode count out of range");
  }
}

FermionOperator FermionOperator::term(int n_modes, Product factors,
                                      cplx coefficient) {
  FermionOperator op(n_modes);
  op.add(factors, coefficient);
  return op;
}

void FermionOperator::add(const Product& factors, cplx coefficient) {
  for (const auto& f : factors) {
    if (f.mode < 0 || f.mode >= n_modes_) {
      throw std::invalid_argument("fermion mode index out of range: " +
                                  std::to_string(f.mode));
    }
  }
  auto [it, inserted] = terms_.try_emplace(factors, coefficient);
  if (!inserted) it->second += coefficient;
  if (std::abs(it->second) < kFermionDropTolerance) terms_.erase(it);
}

cplx FermionOperator::constant() const {
  auto it = terms_.find(Product{});
  return it == terms_.end() ? cplx{} : it->second;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  if (other.n_modes_ != n_modes_) {
    throw std::invalid_argument("fermion operator size mismatch");
  }
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

FermionOperator& FermionOperator::operator-=(const FermionOperator& other) {
  if (other.n_modes_ != n_modes_) {
    throw std::invalid_argument("fermion operator size mismatch");
  }
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

FermionOperator& FermionOperator::operator*=(cplx scale) {
  for (auto& [p, c] : terms_) c *= scale;
  std::erase_if(terms_, [](const auto& kv) {
    return std::abs(kv.second) < kFermionDropTolerance;
  });
  return *this;
}

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  if (a.n_modes_ != b.n_modes_) {
    throw std::invalid_argument("fermion operator size mismatch");
  }
  FermionOperator out(a.n_modes_);
  for (const auto& [pa, ca] : a.terms_) {
    for (const auto& [pb, cb] : b.terms_) {
      FermionOperator::Product p = pa;
      p.insert(p.end(), pb.begin(), pb.end());
      out.add(p, ca * cb);
    }
  }
  return out;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out(n_modes_);
  for (const auto& [p, c] : terms_) {
    Product q(p.rbegin(), p.rend());
    for (auto& f : q) f.dagger = !f.dagger;
    out.add(q, std::conj(c));
  }
  return out;
}

FermionOperator FermionOperator::normal_ordered() const {
  FermionOperator out(n_modes_);
  for (const auto& [p, c] : terms_) normal_order_into(p, c, out);
  return out;
}

bool FermionOperator::is_normal_ordered() const {
  for (const auto& [p, c] : terms_) {
    for (std::size_t j = 1; j < p.size(); ++j) {
      const Ladder& l = p[j - 1];
      const Ladder& r = p[j];
      if (!l.dagger && r.dagger) return false;
      if (l.dagger == r.dagger && l.mode <= r.mode) return false;
    }
  }
  return true;
}

PauliSum jordan_wigner(const FermionOperator& op) {
  const int n = op.n_modes();
  // a_j^dag -> 1/2 X_j Z_<j - i/2 Y_j Z_<j ; a_j -> 1/2 X_j Z_<j + i/2 Y_j Z_<j
  auto image = [n](const Ladder& f) {
    const std::uint64_t bit = std::uint64_t{1} << f.mode;
    const std::uint64_t lower = bit - 1;
    const cplx y_coeff = f.dagger ? cplx{0.0, -0.5} : cplx{0.0, 0.5};
    return std::array<PauliTerm, 2>{PauliTerm(n, bit, lower, 0.5),
                                    PauliTerm(n, bit, lower | bit, y_coeff)};
  };
  PauliSum out(n);
  std::vector<PauliTerm> partial;
  std::vector<PauliTerm> next;
  for (const auto& [product, coeff] : op.terms()) {
    partial.assign(1, PauliTerm::identity(n, coeff));
    for (const auto& f : product) {
      if (f.mode < 0 || f.mode >= n) {
        throw std::invalid_argument("mode index out of range in JW");
      }
      const auto img = image(f);
      next.clear();
      for (const auto& t : partial) {
        next.push_back(multiply(t, img[0]));
        next.push_back(multiply(t, img[1]));
      }
      partial.swap(next);
    }
    for (const auto& t : partial) out += t;
  }
  return out;
}

MolecularIntegrals freeze_core(const MolecularIntegrals& mi,
                               const ActiveSpace& as) {
  const ActiveCounts counts = active_counts(mi, as);
  const int n = mi.n_spatial;

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return mi.orbital_energies(a) < mi.orbital_energies(b);
  });

  const std::vector<int> frozen(order.begin(),
                                order.begin() + as.n_frozen_spatial);
  const std::vector<int> active(order.begin() + as.n_frozen_spatial,
                                order.begin() + as.n_frozen_spatial +
                                    counts.n_spatial);
  const auto& g = mi.two_body;

  double core = mi.core_energy;
  for (int i : frozen) {
    core += 2.0 * mi.one_body(i, i);
    for (int j : frozen) core += 2.0 * g(i, i, j, j) - g(i, j, j, i);
  }

  const int m = counts.n_spatial;
  MolecularIntegrals out;
  out.n_spatial = m;
  out.core_energy = core;
  out.n_alpha = counts.n_alpha;
  out.n_beta = counts.n_beta;
  out.scf_energy = mi.scf_energy;
  out.one_body = Eigen::MatrixXd::Zero(m, m);
  out.orbital_energies = Eigen::VectorXd(m);
  out.two_body = TwoBodyTensor(m);
  for (int a = 0; a < m; ++a) {
    const int p = active[a];
    out.orbital_energies(a) = mi.orbital_energies(p);
    for (int b = 0; b < m; ++b) {
      const int q = active[b];
      double h = mi.one_body(p, q);
      for (int i : frozen) h += 2.0 * g(p, q, i, i) - g(p, i, i, q);
      out.one_body(a, b) = h;
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          out.two_body(a, b, c, d) = g(p, q, active[c], active[d]);
    }
  }
  return out;
}

FermionOperator build_hamiltonian(const MolecularIntegrals& mi,
                                  const ActiveSpace& as) {
  const MolecularIntegrals act = freeze_core(mi, as);
  const int m = act.n_spatial;
  const int n_modes = 2 * m;
  FermionOperator h(n_modes);
  h.add({}, act.core_energy);
  for (int spin = 0; spin < 2; ++spin) {
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        const double v = act.one_body(p, q);
        if (v == 0.0) continue;
        h.add({create(spin_orbital(p, spin, m)),
               annihilate(spin_orbital(q, spin, m))},
              v);
      }
    }
  }
  // 1/2 sum (pq|rs) a+_{p s1} a+_{r s2} a_{s s2} a_{q s1}
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2)
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
          for (int r = 0; r < m; ++r)
            for (int s = 0; s < m; ++s) {
              const double v = act.two_body(p, q, r, s);
              if (v == 0.0) continue;
              const int ps = spin_orbital(p, s1, m);
              const int rs = spin_orbital(r, s2, m);
              if (ps == rs) continue;
              const int ss = spin_orbital(s, s2, m);
              const int qs = spin_orbital(q, s1, m);
              if (ss == qs) continue;
              h.add({create(ps), create(rs), annihilate(ss), annihilate(qs)},
                    0.5 * v);
            }
  return h.normal_ordered();
}

std::uint64_t hf_reference(int n_spatial, int n_alpha, int n_beta) {
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n_spatial ||
      n_beta > n_spatial) {
    throw std::invalid_argument("electron count exceeds mode count");
  }
  if (2 * n_spatial > kMaxQubits) {
    throw std::invalid_argument("too many spin orbitals");
  }
  std::uint64_t mask = 0;
  for (int i = 0; i < n_alpha; ++i) mask |= std::uint64_t{1} << i;
  for (int i = 0; i < n_beta; ++i) mask |= std::uint64_t{1} << (n_spatial + i);
  return mask;
}

std::uint64_t hf_reference(const ActiveCounts& counts) {
  return hf_reference(counts.n_spatial, counts.n_alpha, counts.n_beta);
}

}  // namespace qcc
