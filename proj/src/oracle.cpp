#include "qmsa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qmsa/errors.hpp"

namespace qmsa {

BruteForceResult brute_force_min(std::span<const double> diag) {
  if (diag.empty()) throw InputError("diagonal is empty");
  std::size_t best = 0;
  for (std::size_t k = 1; k < diag.size(); ++k)
    if (diag[k] < diag[best]) best = k; // strict: lowest index wins ties
  int n = 0;
  while ((std::size_t{1} << n) < diag.size()) ++n;
  if ((std::size_t{1} << n) != diag.size())
    throw InputError("diagonal length is not a power of two");
  BruteForceResult r;
  r.index = best;
  r.bitstring = Bitstring::from_index(best, n);
  r.energy = diag[best];
  return r;
}

BestFeasible best_feasible(const SequenceSet& seqs, const ScoreFn& score,
                           std::int64_t cap) {
  const auto candidates = enumerate_feasible(seqs, cap);
  BestFeasible best;
  bool first = true;
  for (const auto& b : candidates) {
    const auto decoded = decode_bitstring(b, seqs);
    const double sp = sp_score(*decoded.alignment, score);
    // ties break toward the lowest bitstring value
    const bool better =
        first || sp < best.sp ||
        (sp == best.sp && b.str() < best.bitstring.str());
    if (better) {
      best.bitstring = b;
      best.sp = sp;
      first = false;
    }
  }
  return best;
}

double direct_cost(const SequenceSet& seqs, const WeightTensor& weights,
                   const PenaltyConfig& pen, const Bitstring& b) {
  const auto map = QubitIndexMap::build(seqs);
  if (b.size() != map.total_qubits())
    throw InputError("bitstring length does not match the instance");
  const int L = map.columns();
  auto x = [&](int s, int n, int i) { return b.bit(map.index(s, n, i)); };

  double cost = 0.0;
  for (int s = 0; s < seqs.count(); ++s)
    for (int s2 = s + 1; s2 < seqs.count(); ++s2)
      for (int n = 0; n < seqs.length(s); ++n)
        for (int n2 = 0; n2 < seqs.length(s2); ++n2)
          for (int i = 0; i < L; ++i)
            cost += weights.omega(s, n, s2, n2) * x(s, n, i) * x(s2, n2, i);
  return cost + direct_penalty(seqs, pen, b);
}

double direct_penalty(const SequenceSet& seqs, const PenaltyConfig& pen,
                      const Bitstring& b) {
  const auto map = QubitIndexMap::build(seqs);
  if (b.size() != map.total_qubits())
    throw InputError("bitstring length does not match the instance");
  const int L = map.columns();
  auto x = [&](int s, int n, int i) { return b.bit(map.index(s, n, i)); };

  double penalty = 0.0;
  for (int s = 0; s < seqs.count(); ++s)
    for (int n = 0; n < seqs.length(s); ++n) {
      int occupancy = 0;
      for (int i = 0; i < L; ++i) occupancy += x(s, n, i);
      penalty += pen.p1 * (occupancy - 1) * (occupancy - 1);
    }
  for (int s = 0; s < seqs.count(); ++s)
    for (int i = 0; i < L; ++i)
      for (int n = 0; n < seqs.length(s); ++n)
        for (int n2 = n + 1; n2 < seqs.length(s); ++n2)
          penalty += pen.p2 * x(s, n, i) * x(s, n2, i);
  for (int s = 0; s < seqs.count(); ++s)
    for (int n = 0; n < seqs.length(s); ++n)
      for (int n2 = n + 1; n2 < seqs.length(s); ++n2)
        for (int i = 0; i < L; ++i)
          for (int i2 = i + 1; i2 < L; ++i2)
            penalty += pen.p3 * x(s, n2, i) * x(s, n, i2);
  return penalty;
}

OracleReport oracle_report(const SequenceSet& seqs, const PenaltyConfig& pen,
                           int top_k, const ScoreFn& score) {
  const auto weights = WeightTensor::build(seqs, score);
  const auto qubo = build_cost_qubo(seqs, weights, pen);
  const auto diag = build_energy_diagonal(qubo);

  OracleReport rep;
  rep.top_k = top_k;
  const auto gm = brute_force_min(diag);
  rep.global_min_bitstring = gm.bitstring.str();
  rep.global_min_energy = gm.energy;

  const auto bf = best_feasible(seqs, score);
  rep.feasible_min_bitstring = bf.bitstring.str();
  rep.feasible_min_sp = bf.sp;

  std::vector<std::size_t> order(diag.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });
  const int n = gm.bitstring.size();
  for (int t = 0; t < top_k && t < static_cast<int>(order.size()); ++t)
    rep.lowest.emplace_back(Bitstring::from_index(order[t], n).str(),
                            diag[order[t]]);
  return rep;
}

CrossValidation cross_validate(const SequenceSet& seqs,
                               const PenaltyConfig& pen,
                               const ScoreFn& score) {
  const auto weights = WeightTensor::build(seqs, score);
  const auto qubo = build_cost_qubo(seqs, weights, pen);
  const auto diag = build_energy_diagonal(qubo);

  CrossValidation cv;
  const auto gm = brute_force_min(diag);
  cv.global_min_bitstring = gm.bitstring.str();
  cv.global_min_energy = gm.energy;

  const auto bf = best_feasible(seqs, score);
  cv.best_feasible_bitstring = bf.bitstring.str();
  cv.best_feasible_sp = bf.sp;

  // Sufficient margin rule: the smallest penalty must exceed the spread of
  // feasible scores, otherwise an infeasible state could undercut them.
  double sp_min = std::numeric_limits<double>::infinity();
  double sp_max = -std::numeric_limits<double>::infinity();
  for (const auto& b : enumerate_feasible(seqs)) {
    const auto decoded = decode_bitstring(b, seqs);
    const double sp = sp_score(*decoded.alignment, score);
    sp_min = std::min(sp_min, sp);
    sp_max = std::max(sp_max, sp);
  }
  const double spread = sp_max - sp_min;
  cv.penalty_margin = pen.min_penalty() - spread;
  cv.penalties_sufficient = pen.min_penalty() > spread;

  cv.global_min_feasible = is_feasible(gm.bitstring, seqs);
  cv.agrees_with_best_feasible =
      cv.global_min_feasible && gm.bitstring == bf.bitstring;
  cv.consistent = cv.global_min_feasible && cv.agrees_with_best_feasible;

  if (!cv.penalties_sufficient)
    cv.findings.push_back(
        "penalties may be too small: min(p1,p2,p3) = " +
        std::to_string(pen.min_penalty()) +
        " does not exceed the feasible score spread " + std::to_string(spread) +
        " (sufficient condition, not necessary)");
  if (!cv.global_min_feasible)
    cv.findings.push_back("the unrestricted global minimum " +
                          cv.global_min_bitstring + " is infeasible");
  else if (!cv.agrees_with_best_feasible)
    cv.findings.push_back("the global minimum " + cv.global_min_bitstring +
                          " differs from the best feasible alignment " +
                          cv.best_feasible_bitstring);
  return cv;
}

} // namespace qmsa
