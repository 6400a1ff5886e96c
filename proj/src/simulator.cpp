#include "qmsa/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "qmsa/errors.hpp"
#include "qmsa/rng.hpp"

namespace qmsa {

double StateVector::norm() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return std::sqrt(total);
}

void QaoaParams::validate() const {
  if (betas.empty() || betas.size() != gammas.size())
    throw InputError("QAOA parameters need p >= 1 with as many betas as gammas");
}

StateVector init_uniform(int n_qubits, int qubit_cap) {
  if (n_qubits < 1) throw InputError("qubit count must be >= 1");
  if (n_qubits > qubit_cap)
    throw CapError("statevector for " + std::to_string(n_qubits) +
                   " qubits exceeds the cap of " + std::to_string(qubit_cap));
  const std::size_t dim = std::size_t{1} << n_qubits;
  const double a = 1.0 / std::sqrt(static_cast<double>(dim));
  StateVector psi;
  psi.qubits = n_qubits;
  psi.amplitudes.assign(dim, std::complex<double>(a, 0.0));
  return psi;
}

StateVector apply_cost_phase(StateVector psi, std::span<const double> diag,
                             double gamma) {
  if (diag.size() != psi.amplitudes.size())
    throw InputError("diagonal length does not match the state dimension");
  for (std::size_t k = 0; k < diag.size(); ++k)
    psi.amplitudes[k] *= std::polar(1.0, -gamma * diag[k]);
  return psi;
}

StateVector apply_mixer(StateVector psi, double beta) {
  const double c = std::cos(beta);
  const std::complex<double> ms(0.0, -std::sin(beta));
  const int n = psi.qubits;
  for (int q = 0; q < n; ++q) {
    const std::size_t stride = std::size_t{1} << (n - 1 - q);
    // walk index pairs (k, k | stride) where bit q is clear
    for (std::size_t base = 0; base < psi.amplitudes.size();
         base += 2 * stride) {
      for (std::size_t k = base; k < base + stride; ++k) {
        const auto a0 = psi.amplitudes[k];
        const auto a1 = psi.amplitudes[k + stride];
        psi.amplitudes[k] = c * a0 + ms * a1;
        psi.amplitudes[k + stride] = ms * a0 + c * a1;
      }
    }
  }
  return psi;
}

StateVector trial_state(int n_qubits, std::span<const double> diag,
                        const QaoaParams& params, int qubit_cap) {
  params.validate();
  StateVector psi = init_uniform(n_qubits, qubit_cap);
  for (int k = 0; k < params.layers(); ++k) {
    psi = apply_cost_phase(std::move(psi), diag, params.gammas[k]);
    psi = apply_mixer(std::move(psi), params.betas[k]);
  }
  return psi;
}

double expectation(const StateVector& psi, std::span<const double> diag) {
  if (diag.size() != psi.amplitudes.size())
    throw InputError("diagonal length does not match the state dimension");
  double e = 0.0;
  for (std::size_t k = 0; k < diag.size(); ++k)
    e += std::norm(psi.amplitudes[k]) * diag[k];
  return e;
}

std::int64_t SampleHistogram::count_of(const std::string& bitstring) const {
  const auto it = counts.find(bitstring);
  return it == counts.end() ? 0 : it->second;
}

SampleHistogram sample(const StateVector& psi, std::int64_t shots,
                       std::uint64_t seed) {
  if (shots < 1) throw InputError("shots must be >= 1");
  const std::size_t dim = psi.amplitudes.size();
  std::vector<double> cumulative(dim);
  double acc = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    acc += std::norm(psi.amplitudes[k]);
    cumulative[k] = acc;
  }
  // acc is 1 up to rounding; draw against the actual total.
  SampleHistogram hist;
  hist.shots = shots;
  hist.seed = seed;
  Rng rng(seed);
  std::vector<std::int64_t> raw(dim, 0);
  for (std::int64_t t = 0; t < shots; ++t) {
    const double u = rng.next_double() * acc;
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const std::size_t k =
        std::min(dim - 1, static_cast<std::size_t>(it - cumulative.begin()));
    ++raw[k];
  }
  for (std::size_t k = 0; k < dim; ++k)
    if (raw[k] > 0)
      hist.counts.emplace(
          Bitstring::from_index(k, psi.qubits).str(), raw[k]);
  return hist;
}

} // namespace qmsa
