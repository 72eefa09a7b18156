// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qcc/integrals.hpp"
#include "sto3g_hydrogen.hpp"

namespace qcc {
namespace {

constexpr double kPi = std::numbers::pi;

int nuclear_charge(const std::string& element) {
  static const char* const kSymbols[] = {"H",  "He", "Li", "Be", "B",
                                         "C",  "N",  "O",  "F",  "Ne"};
  for (int z = 1; z <= 10; ++z) {
    if (element == kSymbols[z - 1]) return z;
  }
  throw std::invalid_argument("unknown element: " + element);
}

using Vec3 = std::array<double, 3>;

double dist2(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return dx * dx + dy * dy + dz * dz;
}

// Normalized primitive s Gaussian pieces of one contracted function.
struct Primitive {
  double exponent;
  double weight;  // contraction coefficient times primitive normalization
};

struct Shell {
  Vec3 center;  // bohr
  std::array<Primitive, 3> prims;
};

Shell make_shell(const Vec3& center_bohr) {
  Shell sh{center_bohr, {}};
  for (int k = 0; k < 3; ++k) {
    const double a = basis_data::kSto3gHydrogenExponents[k];
    sh.prims[k] = {a, basis_data::kSto3gHydrogenCoefficients[k] *
                          std::pow(2.0 * a / kPi, 0.75)};
  }
  // Renormalize the contraction so <phi|phi> = 1 to machine precision.
  double s = 0.0;
  for (const auto& p : sh.prims)
    for (const auto& q : sh.prims)
      s += p.weight * q.weight *
           std::pow(kPi / (p.exponent + q.exponent), 1.5);
  for (auto& p : sh.prims) p.weight /= std::sqrt(s);
  return sh;
}

Vec3 gaussian_center(double a, const Vec3& A, double b, const Vec3& B) {
  const double p = a + b;
  return {(a * A[0] + b * B[0]) / p, (a * A[1] + b * B[1]) / p,
          (a * A[2] + b * B[2]) / p};
}

}  // namespace

int Geometry::n_electrons() const {
  int z = 0;
  for (const auto& a : atoms) z += nuclear_charge(a.element);
  return z - charge;
}

void Geometry::validate() const {
  if (atoms.empty()) throw std::invalid_argument("geometry has no atoms");
  const int ne = n_electrons();
  if (ne < 0) throw std::invalid_argument("negative electron count");
  if (multiplicity < 1 || (ne + multiplicity - 1) % 2 != 0 ||
      multiplicity - 1 > ne) {
    throw std::invalid_argument("multiplicity " +
                                std::to_string(multiplicity) +
                                " inconsistent with " + std::to_string(ne) +
                                " electrons");
  }
}

Geometry read_xyz(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("XYZ: empty input");
  int count = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> count) || count <= 0) {
      throw std::invalid_argument("XYZ line 1: bad atom count");
    }
  }
  if (!std::getline(is, line)) {
    throw std::invalid_argument("XYZ line 2: missing comment line");
  }
  Geometry g;
  for (int i = 0; i < count; ++i) {
    if (!std::getline(is, line)) {
      throw std::invalid_argument("XYZ: expected " + std::to_string(count) +
                                  " atoms, found " + std::to_string(i));
    }
    std::istringstream ls(line);
    Atom a;
    if (!(ls >> a.element >> a.position[0] >> a.position[1] >>
          a.position[2])) {
      throw std::invalid_argument("XYZ line " + std::to_string(i + 3) +
                                  ": expected 'element x y z'");
    }
    nuclear_charge(a.element);
    g.atoms.push_back(a);
  }
  g.multiplicity = g.n_electrons() % 2 == 0 ? 1 : 2;
  return g;
}

void write_xyz(std::ostream& os, const Geometry& g, const std::string& comment) {
  os << g.atoms.size() << '\n' << comment << '\n';
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& a : g.atoms) {
    os << a.element << ' ' << a.position[0] << ' ' << a.position[1] << ' '
       << a.position[2] << '\n';
  }
}

Geometry hydrogen_chain(int n_atoms, double spacing_angstrom) {
  if (n_atoms < 1) throw std::invalid_argument("chain needs atoms");
  if (!(spacing_angstrom > 0.0)) {
    throw std::invalid_argument("chain spacing must be positive");
  }
  Geometry g;
  for (int i = 0; i < n_atoms; ++i) {
    g.atoms.push_back({"H", {0.0, 0.0, i * spacing_angstrom}});
  }
  g.multiplicity = n_atoms % 2 == 0 ? 1 : 2;
  return g;
}

double boys_f0(double x) {
  if (x < 0.0) throw std::invalid_argument("Boys function needs x >= 0");
  if (x < 1e-6) {
    // 1 - x/3 + x^2/10 - x^3/42
    return 1.0 - x / 3.0 + x * x / 10.0 - x * x * x / 42.0;
  }
  const double r = std::sqrt(x);
  return 0.5 * std::sqrt(kPi) * std::erf(r) / r;
}

AoIntegrals sto3g_hydrogen_integrals(const Geometry& geom) {
  geom.validate();
  const int n = static_cast<int>(geom.atoms.size());
  std::vector<Shell> shells;
  std::vector<Vec3> centers;
  for (const auto& a : geom.atoms) {
    if (a.element != "H") {
      throw std::invalid_argument(
          "built-in STO-3G engine supports hydrogen only, got " + a.element);
    }
    const Vec3 c{a.position[0] / kBohrInAngstrom,
                 a.position[1] / kBohrInAngstrom,
                 a.position[2] / kBohrInAngstrom};
    centers.push_back(c);
    shells.push_back(make_shell(c));
  }

  AoIntegrals ao;
  ao.n_electrons = geom.n_electrons();
  ao.nuclear_repulsion = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double r = std::sqrt(dist2(centers[i], centers[j]));
      if (r < 1e-8) throw std::invalid_argument("coincident nuclei");
      ao.nuclear_repulsion += 1.0 / r;  // Z = 1
    }
  }

  ao.overlap = Eigen::MatrixXd::Zero(n, n);
  ao.kinetic = Eigen::MatrixXd::Zero(n, n);
  ao.nuclear = Eigen::MatrixXd::Zero(n, n);
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      const Shell& A = shells[mu];
      const Shell& B = shells[nu];
      const double ab2 = dist2(A.center, B.center);
      double s = 0.0, t = 0.0, v = 0.0;
      for (const auto& pa : A.prims) {
        for (const auto& pb : B.prims) {
          const double a = pa.exponent, b = pb.exponent, p = a + b;
          const double mu_ab = a * b / p;
          const double k = std::exp(-mu_ab * ab2);
          const double w = pa.weight * pb.weight;
          const double sp = std::pow(kPi / p, 1.5) * k;
          s += w * sp;
          t += w * mu_ab * (3.0 - 2.0 * mu_ab * ab2) * sp;
          const Vec3 P = gaussian_center(a, A.center, b, B.center);
          for (const auto& C : centers) {
            v -= w * 2.0 * kPi / p * k * boys_f0(p * dist2(P, C));
          }
        }
      }
      ao.overlap(mu, nu) = s;
      ao.kinetic(mu, nu) = t;
      ao.nuclear(mu, nu) = v;
    }
  }

  ao.eri = TwoBodyTensor(n);
  const double pref = 2.0 * std::pow(kPi, 2.5);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          const Shell& A = shells[p];
          const Shell& B = shells[q];
          const Shell& C = shells[r];
          const Shell& D = shells[s];
          const double ab2 = dist2(A.center, B.center);
          const double cd2 = dist2(C.center, D.center);
          double val = 0.0;
          for (const auto& pa : A.prims)
            for (const auto& pb : B.prims) {
              const double a = pa.exponent, b = pb.exponent, e1 = a + b;
              const Vec3 P = gaussian_center(a, A.center, b, B.center);
              const double kab = std::exp(-a * b / e1 * ab2);
              for (const auto& pc : C.prims)
                for (const auto& pd : D.prims) {
                  const double c = pc.exponent, d = pd.exponent, e2 = c + d;
                  const Vec3 Q = gaussian_center(c, C.center, d, D.center);
                  const double kcd = std::exp(-c * d / e2 * cd2);
                  const double w =
                      pa.weight * pb.weight * pc.weight * pd.weight;
                  val += w * pref / (e1 * e2 * std::sqrt(e1 + e2)) * kab *
                         kcd * boys_f0(e1 * e2 / (e1 + e2) * dist2(P, Q));
                }
            }
          ao.eri.set_symmetric(p, q, r, s, val);
        }
  return ao;
}

}  // namespace qcc
