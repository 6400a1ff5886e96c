#pragma once

#include "qmsa/hamiltonian.hpp"
#include "qmsa/rng.hpp"
#include "qmsa/sequence.hpp"

namespace qmsa::testing {

/// Random valid instance (unique longest string) with L * sum(l_i) <=
/// max_qubits. max_qubits must be >= 6.
SequenceSet random_instance(Rng& rng, int max_qubits);

/// Random canonical QUBO over n variables with dense-ish quadratic terms.
QuboModel random_qubo(Rng& rng, int n);

} // namespace qmsa::testing
