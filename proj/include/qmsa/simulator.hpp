#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qmsa/hamiltonian.hpp"

namespace qmsa {

/// Exact statevector: 2^n complex amplitudes. Basis index k corresponds to
/// Bitstring::from_index(k, n) under the global bit order (qubit 0 is the
/// most significant binary digit of k).
struct StateVector {
  int qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  double norm() const;
};

/// The p mixer angles (beta) and cost angles (gamma), in radians.
struct QaoaParams {
  std::vector<double> betas;
  std::vector<double> gammas;

  int layers() const { return static_cast<int>(betas.size()); }

  /// Throws InputError unless |betas| = |gammas| = p >= 1.
  void validate() const;

  bool operator==(const QaoaParams&) const = default;
};

/// Every amplitude 2^{-n/2}. Throws CapError for n > qubit_cap, InputError
/// for n < 1.
StateVector init_uniform(int n_qubits, int qubit_cap = kDefaultQubitCap);

/// Diagonal cost-phase layer: amplitude_k *= exp(-i gamma diag_k).
StateVector apply_cost_phase(StateVector psi, std::span<const double> diag,
                             double gamma);

/// Transverse-field mixer layer: exp(-i beta X_j) on every qubit j, i.e. the
/// single-qubit matrix [[cos b, -i sin b], [-i sin b, cos b]].
StateVector apply_mixer(StateVector psi, double beta);

/// QAOA ansatz: uniform superposition, then per layer k = 1..p the cost phase
/// with gamma_k followed by the mixer with beta_k.
StateVector trial_state(int n_qubits, std::span<const double> diag,
                        const QaoaParams& params,
                        int qubit_cap = kDefaultQubitCap);

/// <psi| H |psi> for the diagonal Hamiltonian: sum |amplitude_k|^2 diag_k.
double expectation(const StateVector& psi, std::span<const double> diag);

struct SampleHistogram {
  std::int64_t shots = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::int64_t> counts; // bitstring -> count

  std::int64_t count_of(const std::string& bitstring) const;
};

/// Multinomial draw of `shots` outcomes from |amplitude|^2. Deterministic in
/// (psi, shots, seed). Keys use the global bit order.
SampleHistogram sample(const StateVector& psi, std::int64_t shots,
                       std::uint64_t seed);

} // namespace qmsa
