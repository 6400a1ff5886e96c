#include "support/random_instances.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qmsa::testing {

SequenceSet random_instance(Rng& rng, int max_qubits) {
  if (max_qubits < 6) throw std::invalid_argument("max_qubits too small");
  // length shapes with a unique maximum; first entry is the reference length
  static const std::vector<std::vector<int>> shapes = {
      {2, 1},       {2, 1, 1},       {2, 1, 1, 1}, {2, 1, 1, 1, 1},
      {3, 1},       {3, 2},          {3, 1, 1},    {3, 2, 1},
      {3, 1, 1, 1}, {4, 1},          {4, 2},       {4, 3},
      {4, 2, 1},    {2, 1, 1, 1, 1, 1},
  };
  std::vector<const std::vector<int>*> fitting;
  for (const auto& shape : shapes) {
    int total = 0;
    for (int l : shape) total += l;
    if (shape[0] * total <= max_qubits) fitting.push_back(&shape);
  }
  const auto& shape = *fitting[rng.next_below(fitting.size())];
  std::vector<std::string> strings;
  for (int l : shape) {
    std::string s;
    for (int k = 0; k < l; ++k)
      s.push_back(kAlphabet[rng.next_below(kAlphabet.size())]);
    strings.push_back(std::move(s));
  }
  return SequenceSet(std::move(strings));
}

QuboModel random_qubo(Rng& rng, int n) {
  std::vector<QuadraticTerm> quadratic;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_double() < 0.7)
        quadratic.push_back(QuadraticTerm{i, j, rng.next_double(-2.0, 2.0)});
  std::vector<double> linear(n);
  for (auto& h : linear) h = rng.next_double(-1.0, 1.0);
  return QuboModel(n, std::move(quadratic), std::move(linear),
                   rng.next_double(-1.0, 1.0));
}

} // namespace qmsa::testing
