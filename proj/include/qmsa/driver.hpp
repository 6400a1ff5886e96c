#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qmsa/encoding.hpp"
#include "qmsa/hamiltonian.hpp"
#include "qmsa/optimizer.hpp"
#include "qmsa/sequence.hpp"
#include "qmsa/simulator.hpp"

namespace qmsa {

/// Configuration of the outer hybrid loop. The objective is the exact
/// statevector expectation unless shot_objective is set (a realism mode; the
/// default keeps runs reproducible). `starts` counts the seeded-random
/// initial points; a deterministic all-zero start is always added, and sweeps
/// add the padded best of the previous layer count.
struct OptimizerConfig {
  std::string method = "cobyla"; // "cobyla" | "nelder-mead"
  int max_evaluations = 500;     // per start
  int starts = 10;
  double beta_init_max = 3.14159265358979323846;      // betas start in [0, pi)
  double gamma_init_max = 2.0 * 3.14159265358979323846; // gammas in [0, 2 pi)
  double tolerance = 1e-6;
  std::uint64_t seed = 1;
  bool shot_objective = false;
  std::int64_t objective_shots = 5000; // used only when shot_objective

  void validate() const;
};

struct StartTrace {
  int start_index = 0;
  double final_expectation = 0.0;

  bool operator==(const StartTrace&) const = default;
};

struct OptimizeOutcome {
  QaoaParams params; // raw (unwrapped) angles
  double value = 0.0;
  std::vector<StartTrace> per_start;
  int total_evaluations = 0;
};

/// Best (params, value) over all starts: `cfg.starts` seeded-random points,
/// the all-zero start, and any extra_starts. Ties break toward the lowest
/// start index. The value is the objective re-evaluated at the winner.
OptimizeOutcome optimize(const Objective& objective, int layers,
                         const OptimizerConfig& cfg,
                         const std::vector<QaoaParams>& extra_starts = {});

struct DecodedOutcome {
  std::string bitstring;
  double probability = 0.0; // exact |amplitude|^2
  std::int64_t count = 0;   // sampled shots for this outcome
  bool feasible = false;
  double energy = 0.0;
  std::optional<AlignmentMatrix> alignment; // set iff feasible
  std::vector<Violation> violations;        // set iff infeasible
};

struct QaoaResult {
  int n_qubits = 0;
  int layers = 0;
  QaoaParams best_params;         // raw angles, as optimized
  QaoaParams best_params_wrapped; // reported modulo 2 pi
  double best_expectation = 0.0;
  std::vector<StartTrace> per_start;
  std::vector<double> probabilities; // |amplitude|^2 per basis index
  std::vector<double> energies;      // the energy diagonal, same indexing
  SampleHistogram histogram;
  std::vector<DecodedOutcome> top; // by probability desc, index asc
  std::string global_min_bitstring;
  double global_min_energy = 0.0;
  double global_min_probability = 0.0;
  std::uint64_t sample_seed = 0;

  double probability_of(const std::string& bitstring) const;
};

/// Full pipeline on one instance: weight tensor -> QUBO -> energy diagonal,
/// optimize the expectation, sample the optimal state, decode the top
/// outcomes (at most top_k) and flag feasibility.
QaoaResult run_qaoa(const SequenceSet& seqs, int layers,
                    const PenaltyConfig& pen, std::int64_t shots,
                    const OptimizerConfig& cfg,
                    const std::vector<QaoaParams>& extra_starts = {},
                    int top_k = 10, const ScoreFn& score = native_score());

/// Independent run per layer count, sharing the base seed through per-p
/// derived streams. Each run after the first adds the previous best padded
/// with an identity (beta = gamma = 0) layer as an extra start, which makes
/// the best expectation non-increasing in p.
std::vector<QaoaResult> p_sweep(const SequenceSet& seqs,
                                const std::vector<int>& p_values,
                                const PenaltyConfig& pen, std::int64_t shots,
                                const OptimizerConfig& cfg,
                                const ScoreFn& score = native_score());

} // namespace qmsa
