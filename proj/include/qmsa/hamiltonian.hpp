#pragma once

#include <span>
#include <vector>

#include "qmsa/encoding.hpp"
#include "qmsa/scoring.hpp"
#include "qmsa/sequence.hpp"

namespace qmsa {

inline constexpr int kDefaultQubitCap = 24;

/// Weights for the three soft-constraint families: exactly-one column per
/// letter (p1), at most one letter per row-column (p2), order preservation
/// (p3). A zero weight disables that family.
struct PenaltyConfig {
  double p1 = 10.0;
  double p2 = 1.0;
  double p3 = 1.0;

  /// Throws InputError if any weight is negative or non-finite.
  void validate() const;

  bool any_disabled() const { return p1 == 0.0 || p2 == 0.0 || p3 == 0.0; }
  double min_penalty() const;
};

struct QuadraticTerm {
  int i = 0;
  int j = 0; // i < j
  double value = 0.0;

  bool operator==(const QuadraticTerm&) const = default;
};

/// Canonical quadratic binary model: C(x) = x^T Q x + h^T x + d over
/// x in {0,1}^n. Q is stored as sorted upper-triangular terms with zero
/// diagonal; any diagonal weight is folded into h since x^2 = x.
class QuboModel {
public:
  QuboModel() = default;
  QuboModel(int n, std::vector<QuadraticTerm> quadratic,
            std::vector<double> linear, double constant);

  int size() const { return n_; }
  const std::vector<QuadraticTerm>& quadratic() const { return quadratic_; }
  const std::vector<double>& linear() const { return linear_; }
  double constant() const { return constant_; }

  double evaluate(const Bitstring& x) const;

private:
  int n_ = 0;
  std::vector<QuadraticTerm> quadratic_;
  std::vector<double> linear_;
  double constant_ = 0.0;
};

/// Spin-variable form C(s) = s^T J s + b^T s + c over s in {-1,+1}^n,
/// obtained from a QuboModel through x = (1 - s) / 2.
class IsingModel {
public:
  IsingModel() = default;
  IsingModel(int n, std::vector<QuadraticTerm> couplings,
             std::vector<double> fields, double constant);

  int size() const { return n_; }
  const std::vector<QuadraticTerm>& couplings() const { return couplings_; }
  const std::vector<double>& fields() const { return fields_; }
  double constant() const { return constant_; }

  double evaluate(std::span<const int> spins) const;

private:
  int n_ = 0;
  std::vector<QuadraticTerm> couplings_;
  std::vector<double> fields_;
  double constant_ = 0.0;
};

/// Assemble the four-term soft-constrained cost as a QUBO: the weight-tensor
/// quadratic plus the three penalty families.
QuboModel build_cost_qubo(const SequenceSet& seqs, const WeightTensor& weights,
                          const PenaltyConfig& pen);

IsingModel qubo_to_ising(const QuboModel& m);

/// Spin vector s with s_j = 1 - 2 x_j.
std::vector<int> spins_from_bits(const Bitstring& x);

/// Energies of all 2^n basis states, indexed by the global bit order
/// (entry k is the energy of Bitstring::from_index(k, n)). This vector is the
/// diagonal of the problem Hamiltonian. Throws CapError for n > qubit_cap.
/// Chunked across threads; each entry is computed independently, so the
/// result does not depend on the thread count.
std::vector<double> build_energy_diagonal(const QuboModel& m,
                                          int qubit_cap = kDefaultQubitCap);

} // namespace qmsa
