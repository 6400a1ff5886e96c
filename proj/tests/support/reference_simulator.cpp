#include "support/reference_simulator.hpp"

#include <cmath>
#include <stdexcept>

namespace qmsa::testing {
namespace {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t ra = a.size(), ca = a[0].size();
  const std::size_t rb = b.size(), cb = b[0].size();
  Matrix c(ra * rb, std::vector<Complex>(ca * cb));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l)
          c[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
  return c;
}

std::vector<Complex> mat_vec(const Matrix& m, const std::vector<Complex>& v) {
  std::vector<Complex> out(m.size(), Complex(0.0, 0.0));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

} // namespace

StateVector dense_reference_trial_state(int n_qubits,
                                        std::span<const double> diag,
                                        const QaoaParams& params) {
  if (n_qubits < 1 || n_qubits > 10)
    throw std::invalid_argument("dense reference is for small n only");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (diag.size() != dim) throw std::invalid_argument("diag size mismatch");

  std::vector<Complex> state(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));

  for (int layer = 0; layer < params.layers(); ++layer) {
    // cost phase: diagonal matrix exp(-i gamma E_k)
    Matrix phase(dim, std::vector<Complex>(dim, Complex(0.0, 0.0)));
    for (std::size_t k = 0; k < dim; ++k)
      phase[k][k] = std::polar(1.0, -params.gammas[layer] * diag[k]);
    state = mat_vec(phase, state);

    // mixer: kron of n copies of exp(-i beta X); the first factor acts on
    // the most significant bit, matching the global bit order
    const double b = params.betas[layer];
    const Matrix single = {{Complex(std::cos(b), 0.0), Complex(0.0, -std::sin(b))},
                           {Complex(0.0, -std::sin(b)), Complex(std::cos(b), 0.0)}};
    Matrix mixer = single;
    for (int q = 1; q < n_qubits; ++q) mixer = kron(mixer, single);
    state = mat_vec(mixer, state);
  }

  StateVector psi;
  psi.qubits = n_qubits;
  psi.amplitudes = std::move(state);
  return psi;
}

} // namespace qmsa::testing
