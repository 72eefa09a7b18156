// Copyright 2026 The qcc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "qcc/ansatz.hpp"
#include "qcc/pauli.hpp"
#include "qcc/sim.hpp"

namespace qcc {

enum class AnsatzKind { Qccsd, UccsdTrotter };

std::string_view to_string(AnsatzKind kind);

struct VqeProblem {
  PauliSum hamiltonian;
  std::uint64_t reference = 0;
  ExcitationList excitations;
  AnsatzKind ansatz = AnsatzKind::Qccsd;

  /// Throws std::invalid_argument when widths or electron counts disagree.
  void validate() const;
};

/**
 * Energy of the ansatz state for a parameter vector. Holds the Hamiltonian
 * grouped by bit-flip pattern so repeated evaluations skip the regrouping.
 * Evaluation is const and safe to call concurrently.
 */
class EnergyFunction {
 public:
  explicit EnergyFunction(VqeProblem problem);

  const VqeProblem& problem() const { return problem_; }
  std::size_t n_parameters() const { return problem_.excitations.size(); }

  double operator()(std::span<const double> theta) const;
  StateVector state(std::span<const double> theta) const;
  std::vector<Gate> circuit(std::span<const double> theta) const;

  std::size_t evaluations() const { return evaluations_; }

 private:
  VqeProblem problem_;
  std::vector<FlipGroup> groups_;
  mutable std::atomic<std::size_t> evaluations_{0};
};

struct Bounds {
  double lower = -std::numbers::pi;
  double upper = std::numbers::pi;
};

/// <phi(theta)|H|phi(theta)> in Hartree.
double objective(const VqeProblem& p, std::span<const double> theta);

/**
 * Central differences with step h; components closer than h to a bound use
 * the one-sided difference pointing into the box.
 */
std::vector<double> gradient(const EnergyFunction& f,
                             std::span<const double> theta, double step = 1e-4,
                             Bounds bounds = {});
std::vector<double> gradient(const VqeProblem& p,
                             std::span<const double> theta, double step = 1e-4,
                             Bounds bounds = {});

struct MinimizeOptions {
  /// Stop once accepted iterates differ by less than this (Hartree).
  double energy_tolerance = 1e-6;
  int max_iterations = 500;
  Bounds bounds;
  double fd_step = 1e-4;
  /// Armijo sufficient-decrease constant.
  double armijo = 1e-4;
  int max_line_search_steps = 40;
  /// Largest component of the trial step before curvature is known.
  double first_step = 0.1;
};

struct TraceRow {
  int iteration = 0;
  double energy = 0.0;
  double grad_norm = 0.0;
  std::size_t evaluations = 0;
};

struct VqeResult {
  double energy = 0.0;
  ParameterVector parameters;
  int iterations = 0;
  bool converged = false;
  /// Initial energy followed by every accepted iterate.
  std::vector<double> energy_history;
  std::size_t evaluations = 0;
  std::vector<TraceRow> trace;
};

class NonFiniteObjectiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Projected BFGS over the box: free variables follow the quasi-Newton
 * direction, variables pinned at a bound by the gradient are held fixed,
 * and a projected backtracking line search accepts Armijo steps.
 */
VqeResult minimize(const VqeProblem& p, std::span<const double> theta0,
                   const MinimizeOptions& opts = {});

/// minimize() from the all-zero (reference) point.
VqeResult minimize(const VqeProblem& p, const MinimizeOptions& opts = {});

/// "iteration,energy,grad_norm,evals" plus one line per trace row.
void write_trace_csv(std::ostream& os, std::span<const TraceRow> trace);
inline void write_trace_csv(std::ostream& os, const VqeResult& r) {
  write_trace_csv(os, r.trace);
}

}  // namespace qcc
