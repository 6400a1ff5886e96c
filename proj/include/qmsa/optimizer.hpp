#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qmsa {

using Objective = std::function<double(std::span<const double>)>;

struct MinimizeOptions {
  int max_evaluations = 500;
  double initial_step = 0.5; // trust radius / initial simplex edge
  double tolerance = 1e-6;   // convergence threshold on objective change
  double min_step = 1e-6;    // final resolution
};

struct MinimizeResult {
  std::vector<double> point;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false; // false = stopped on budget
};

/// Derivative-free local minimization by linear interpolation models over a
/// simplex with a trust-region step (the unconstrained core of Powell's
/// linear-approximation approach). Returns the best point ever evaluated;
/// running out of budget is not an error. Throws on NaN from the objective.
MinimizeResult minimize_linear_trust_region(const Objective& objective,
                                            std::vector<double> start,
                                            const MinimizeOptions& options);

/// Nelder-Mead simplex with dimension-adaptive coefficients. Same contract.
MinimizeResult minimize_nelder_mead(const Objective& objective,
                                    std::vector<double> start,
                                    const MinimizeOptions& options);

/// The default method: linear trust-region descent for the first ~30% of the
/// budget, then simplex refinement from its best point at half the step.
MinimizeResult minimize_cobyla(const Objective& objective,
                               std::vector<double> start,
                               const MinimizeOptions& options);

/// Dispatch by method name:
/// "cobyla" (default two-phase) | "linear-trust-region" | "nelder-mead".
MinimizeResult minimize(const std::string& method, const Objective& objective,
                        std::vector<double> start,
                        const MinimizeOptions& options);

} // namespace qmsa
