// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcc/vqe.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include <Eigen/Dense>

namespace qcc {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd to_eigen(std::span<const double> v) {
  return Eigen::Map<const VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<double> to_std(const VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

VectorXd project(const VectorXd& x, const Bounds& b) {
  return x.cwiseMax(b.lower).cwiseMin(b.upper);
}

// Gradient with components pinned at an active bound zeroed.
VectorXd projected_gradient(const VectorXd& x, const VectorXd& g,
                            const Bounds& b) {
  VectorXd pg = g;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if ((x(i) <= b.lower && g(i) > 0.0) || (x(i) >= b.upper && g(i) < 0.0)) {
      pg(i) = 0.0;
    }
  }
  return pg;
}

double checked(double e, std::span<const double> theta) {
  if (!std::isfinite(e)) {
    std::ostringstream msg;
    msg << "objective is not finite (" << e << ") at theta = [";
    for (std::size_t i = 0; i < theta.size(); ++i) {
      msg << (i ? ", " : "") << theta[i];
    }
    msg << "]";
    throw NonFiniteObjectiveError(msg.str());
  }
  return e;
}

}  // namespace

std::string_view to_string(AnsatzKind kind) {
  return kind == AnsatzKind::Qccsd ? "qccsd" : "uccsd";
}

void VqeProblem::validate() const {
  if (hamiltonian.n_qubits() != excitations.n_qubits()) {
    throw std::invalid_argument("Hamiltonian width " +
                                std::to_string(hamiltonian.n_qubits()) +
                                " differs from 2 * active orbitals " +
                                std::to_string(excitations.n_qubits()));
  }
  if (std::popcount(reference) != excitations.n_alpha + excitations.n_beta) {
    throw std::invalid_argument(
        "reference occupation does not match the electron count");
  }
  if (hamiltonian.n_qubits() < 64 &&
      (reference >> hamiltonian.n_qubits()) != 0) {
    throw std::invalid_argument("reference occupies qubits outside register");
  }
}

EnergyFunction::EnergyFunction(VqeProblem problem)
    : problem_(std::move(problem)) {
  problem_.validate();
  groups_ = group_by_flip(problem_.hamiltonian);
}

std::vector<Gate> EnergyFunction::circuit(std::span<const double> theta) const {
  return problem_.ansatz == AnsatzKind::Qccsd
             ? qccsd_circuit(problem_.excitations, theta)
             : uccsd_trotter_circuit(problem_.excitations, theta);
}

StateVector EnergyFunction::state(std::span<const double> theta) const {
  StateVector psi =
      prepare_basis_state(problem_.hamiltonian.n_qubits(), problem_.reference);
  const auto gates = circuit(theta);
  run_circuit(psi, gates);
  return psi;
}

double EnergyFunction::operator()(std::span<const double> theta) const {
  ++evaluations_;
  const StateVector psi = state(theta);
  return checked(expectation(groups_, problem_.hamiltonian.n_qubits(), psi),
                 theta);
}

double objective(const VqeProblem& p, std::span<const double> theta) {
  const EnergyFunction f(p);
  return f(theta);
}

std::vector<double> gradient(const EnergyFunction& f,
                             std::span<const double> theta, double step,
                             Bounds bounds) {
  std::vector<double> x(theta.begin(), theta.end());
  std::vector<double> g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double x0 = x[i];
    const bool room_up = x0 + step <= bounds.upper;
    const bool room_down = x0 - step >= bounds.lower;
    if (room_up && room_down) {
      x[i] = x0 + step;
      const double fp = f(x);
      x[i] = x0 - step;
      const double fm = f(x);
      g[i] = (fp - fm) / (2.0 * step);
    } else {
      const double f0 = f(x);
      if (room_up) {
        x[i] = x0 + step;
        g[i] = (f(x) - f0) / step;
      } else {
        x[i] = x0 - step;
        g[i] = (f0 - f(x)) / step;
      }
    }
    x[i] = x0;
  }
  return g;
}

std::vector<double> gradient(const VqeProblem& p,
                             std::span<const double> theta, double step,
                             Bounds bounds) {
  const EnergyFunction f(p);
  return gradient(f, theta, step, bounds);
}

VqeResult minimize(const VqeProblem& p, std::span<const double> theta0,
                   const MinimizeOptions& opts) {
  const EnergyFunction f(p);
  const std::size_t n = f.n_parameters();
  if (theta0.size() != n) {
    throw std::invalid_argument("initial parameter count mismatch");
  }
  const Bounds& bounds = opts.bounds;
  for (double t : theta0) {
    if (t < bounds.lower || t > bounds.upper) {
      throw std::invalid_argument("initial parameters outside the bounds");
    }
  }

  VqeResult res;
  VectorXd x = to_eigen(theta0);
  double fx = f(to_std(x));
  res.energy_history.push_back(fx);
  if (n == 0) {
    res.energy = fx;
    res.converged = true;
    res.evaluations = f.evaluations();
    res.trace.push_back({0, fx, 0.0, res.evaluations});
    return res;
  }

  VectorXd g = to_eigen(gradient(f, to_std(x), opts.fd_step, bounds));
  res.trace.push_back({0, fx, projected_gradient(x, g, bounds).norm(),
                       f.evaluations()});
  MatrixXd hinv = MatrixXd::Identity(n, n);
  bool scaled = false;

  for (int it = 1; it <= opts.max_iterations; ++it) {
    const VectorXd pg = projected_gradient(x, g, bounds);
    if (pg.lpNorm<Eigen::Infinity>() < 1e-12) {
      res.converged = true;
      break;
    }
    // Quasi-Newton direction on the free variables.
    VectorXd d = -(hinv * pg);
    for (Eigen::Index i = 0; i < d.size(); ++i) {
      if (pg(i) == 0.0 && g(i) != 0.0) d(i) = 0.0;
    }
    if (d.dot(pg) >= 0.0) {
      hinv.setIdentity();
      scaled = false;
      d = -pg;
    }
    // Before any curvature information, keep the first trial step modest.
    double alpha = scaled ? 1.0 : std::min(1.0, opts.first_step / d.lpNorm<Eigen::Infinity>());

    bool accepted = false;
    VectorXd x_new;
    double f_new = fx;
    for (int ls = 0; ls < opts.max_line_search_steps; ++ls) {
      x_new = project(x + alpha * d, bounds);
      f_new = f(to_std(x_new));
      if (f_new <= fx + opts.armijo * g.dot(x_new - x) && f_new <= fx) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      if (scaled) {
        // Stale curvature: restart from steepest descent once.
        hinv.setIdentity();
        scaled = false;
        continue;
      }
      // No descent along the projected gradient at any resolvable step.
      res.converged = true;
      break;
    }

    const VectorXd g_new =
        to_eigen(gradient(f, to_std(x_new), opts.fd_step, bounds));
    const VectorXd s = x_new - x;
    const VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm() && sy > 0.0) {
      if (!scaled) {
        hinv = MatrixXd::Identity(n, n) * (sy / y.squaredNorm());
        scaled = true;
      }
      const double rho = 1.0 / sy;
      const MatrixXd left = MatrixXd::Identity(n, n) - rho * s * y.transpose();
      hinv = left * hinv * left.transpose() + rho * s * s.transpose();
    }

    const double delta = fx - f_new;
    x = x_new;
    fx = f_new;
    g = g_new;
    res.iterations = it;
    res.energy_history.push_back(fx);
    res.trace.push_back({it, fx, projected_gradient(x, g, bounds).norm(),
                         f.evaluations()});
    if (std::abs(delta) < opts.energy_tolerance) {
      res.converged = true;
      break;
    }
  }

  res.energy = fx;
  res.parameters = to_std(x);
  res.evaluations = f.evaluations();
  return res;
}

VqeResult minimize(const VqeProblem& p, const MinimizeOptions& opts) {
  const std::vector<double> zero(p.excitations.size(), 0.0);
  return minimize(p, zero, opts);
}

void write_trace_csv(std::ostream& os, std::span<const TraceRow> trace) {
  const auto old_prec = os.precision();
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  os << "iteration,energy,grad_norm,evals\n";
  for (const auto& t : trace) {
    os << t.iteration << ',' << t.energy << ',' << t.grad_norm << ','
       << t.evaluations << '\n';
  }
  os.precision(old_prec);
}

}  // namespace qcc
