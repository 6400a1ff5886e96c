#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmsa/encoding.hpp"
#include "qmsa/hamiltonian.hpp"
#include "qmsa/scoring.hpp"
#include "qmsa/sequence.hpp"

namespace qmsa {

struct BruteForceResult {
  std::uint64_t index = 0;
  Bitstring bitstring;
  double energy = 0.0;
};

/// Exact argmin over the full diagonal; ties break toward the lowest index.
BruteForceResult brute_force_min(std::span<const double> diag);

struct BestFeasible {
  Bitstring bitstring;
  double sp = 0.0;
};

/// Argmin of the alignment score over the enumerated feasible set; ties break
/// toward the lowest bitstring value.
BestFeasible best_feasible(const SequenceSet& seqs,
                           const ScoreFn& score = native_score(),
                           std::int64_t cap = kDefaultEnumerationCap);

/// Term-by-term evaluation of the four-term cost, straight from the sums.
/// Deliberately ignorant of QuboModel; used to cross-check it.
double direct_cost(const SequenceSet& seqs, const WeightTensor& weights,
                   const PenaltyConfig& pen, const Bitstring& b);

/// Penalty part only (weights contribute nothing).
double direct_penalty(const SequenceSet& seqs, const PenaltyConfig& pen,
                      const Bitstring& b);

struct OracleReport {
  std::string global_min_bitstring;
  double global_min_energy = 0.0;
  std::string feasible_min_bitstring;
  double feasible_min_sp = 0.0;
  std::vector<std::pair<std::string, double>> lowest; // top_k by energy asc
  int top_k = 0;
};

OracleReport oracle_report(const SequenceSet& seqs, const PenaltyConfig& pen,
                           int top_k = 10,
                           const ScoreFn& score = native_score());

/// Consistency check between the penalized landscape and the feasible-only
/// optimum. Findings are reported as values, never thrown.
/// penalties_sufficient uses a sufficient (not necessary) margin rule:
/// min(p1,p2,p3) must exceed the spread of feasible scores.
struct CrossValidation {
  bool penalties_sufficient = false;
  double penalty_margin = 0.0; // min penalty - feasible score spread
  bool global_min_feasible = false;
  bool agrees_with_best_feasible = false;
  bool consistent = false; // both of the above
  std::string global_min_bitstring;
  double global_min_energy = 0.0;
  std::string best_feasible_bitstring;
  double best_feasible_sp = 0.0;
  std::vector<std::string> findings;
};

CrossValidation cross_validate(const SequenceSet& seqs,
                               const PenaltyConfig& pen,
                               const ScoreFn& score = native_score());

} // namespace qmsa
