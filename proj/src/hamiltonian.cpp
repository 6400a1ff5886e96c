#include "qmsa/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "qmsa/errors.hpp"

namespace qmsa {

void PenaltyConfig::validate() const {
  for (double p : {p1, p2, p3})
    if (!(p >= 0.0) || !std::isfinite(p))
      throw InputError("penalty weights must be finite and nonnegative");
}

double PenaltyConfig::min_penalty() const {
  return std::min({p1, p2, p3});
}

namespace {

/// Accumulates arbitrary terms and emits the canonical form: swaps indices to
/// the upper triangle, folds x_i^2 = x_i into the linear part, coalesces and
/// drops zeros.
class QuboBuilder {
public:
  explicit QuboBuilder(int n) : n_(n), dense_(static_cast<std::size_t>(n) * n, 0.0),
                                linear_(n, 0.0) {}

  void add_quadratic(int i, int j, double v) {
    if (i == j) {
      linear_[i] += v;
      return;
    }
    if (i > j) std::swap(i, j);
    dense_[static_cast<std::size_t>(i) * n_ + j] += v;
  }

  void add_linear(int i, double v) { linear_[i] += v; }
  void add_constant(double v) { constant_ += v; }

  QuboModel build() && {
    std::vector<QuadraticTerm> terms;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        const double v = dense_[static_cast<std::size_t>(i) * n_ + j];
        if (v != 0.0) terms.push_back(QuadraticTerm{i, j, v});
      }
    return QuboModel(n_, std::move(terms), std::move(linear_), constant_);
  }

private:
  int n_;
  std::vector<double> dense_;
  std::vector<double> linear_;
  double constant_ = 0.0;
};

} // namespace

QuboModel::QuboModel(int n, std::vector<QuadraticTerm> quadratic,
                     std::vector<double> linear, double constant)
    : n_(n), quadratic_(std::move(quadratic)), linear_(std::move(linear)),
      constant_(constant) {
  if (static_cast<int>(linear_.size()) != n_)
    throw InputError("linear vector length does not match n");
  for (const auto& t : quadratic_)
    if (t.i < 0 || t.j <= t.i || t.j >= n_)
      throw InputError("quadratic terms must be upper-triangular with i < j < n");
}

double QuboModel::evaluate(const Bitstring& x) const {
  if (x.size() != n_)
    throw InputError("bitstring length does not match the model size");
  double e = constant_;
  for (int i = 0; i < n_; ++i)
    if (x.bit(i)) e += linear_[i];
  for (const auto& t : quadratic_)
    if (x.bit(t.i) && x.bit(t.j)) e += t.value;
  return e;
}

IsingModel::IsingModel(int n, std::vector<QuadraticTerm> couplings,
                       std::vector<double> fields, double constant)
    : n_(n), couplings_(std::move(couplings)), fields_(std::move(fields)),
      constant_(constant) {
  if (static_cast<int>(fields_.size()) != n_)
    throw InputError("field vector length does not match n");
}

double IsingModel::evaluate(std::span<const int> spins) const {
  if (static_cast<int>(spins.size()) != n_)
    throw InputError("spin vector length does not match the model size");
  for (int v : spins)
    if (v != 1 && v != -1) throw InputError("spin entries must be +1 or -1");
  double e = constant_;
  for (int i = 0; i < n_; ++i) e += fields_[i] * spins[i];
  for (const auto& t : couplings_) e += t.value * spins[t.i] * spins[t.j];
  return e;
}

QuboModel build_cost_qubo(const SequenceSet& seqs, const WeightTensor& weights,
                          const PenaltyConfig& pen) {
  pen.validate();
  const auto map = QubitIndexMap::build(seqs);
  const int L = map.columns();
  QuboBuilder b(map.total_qubits());

  // scoring term: omega(s,n,s2,n2) x_{s,n,i} x_{s2,n2,i} over shared columns
  for (int s = 0; s < seqs.count(); ++s)
    for (int s2 = s + 1; s2 < seqs.count(); ++s2)
      for (int n = 0; n < seqs.length(s); ++n)
        for (int n2 = 0; n2 < seqs.length(s2); ++n2) {
          const double w = weights.omega(s, n, s2, n2);
          if (w == 0.0) continue;
          for (int i = 0; i < L; ++i)
            b.add_quadratic(map.index(s, n, i), map.index(s2, n2, i), w);
        }

  // p1: (sum_i x_{s,n,i} - 1)^2 per letter
  for (int s = 0; s < seqs.count(); ++s)
    for (int n = 0; n < seqs.length(s); ++n) {
      for (int i = 0; i < L; ++i) {
        b.add_linear(map.index(s, n, i), -pen.p1); // x^2 - 2x
        for (int i2 = i + 1; i2 < L; ++i2)
          b.add_quadratic(map.index(s, n, i), map.index(s, n, i2), 2.0 * pen.p1);
      }
      b.add_constant(pen.p1);
    }

  // p2: two letters of one string in the same column
  for (int s = 0; s < seqs.count(); ++s)
    for (int i = 0; i < L; ++i)
      for (int n = 0; n < seqs.length(s); ++n)
        for (int n2 = n + 1; n2 < seqs.length(s); ++n2)
          b.add_quadratic(map.index(s, n, i), map.index(s, n2, i), pen.p2);

  // p3: order violations, later letter n2 in an earlier column
  for (int s = 0; s < seqs.count(); ++s)
    for (int n = 0; n < seqs.length(s); ++n)
      for (int n2 = n + 1; n2 < seqs.length(s); ++n2)
        for (int i = 0; i < L; ++i)
          for (int i2 = i + 1; i2 < L; ++i2)
            b.add_quadratic(map.index(s, n2, i), map.index(s, n, i2), pen.p3);

  return std::move(b).build();
}

IsingModel qubo_to_ising(const QuboModel& m) {
  const int n = m.size();
  std::vector<QuadraticTerm> couplings;
  couplings.reserve(m.quadratic().size());
  std::vector<double> row_plus_col(n, 0.0); // (1^T Q^T + 1^T Q)_i
  double q_total = 0.0;
  for (const auto& t : m.quadratic()) {
    couplings.push_back(QuadraticTerm{t.i, t.j, t.value / 4.0});
    row_plus_col[t.i] += t.value;
    row_plus_col[t.j] += t.value;
    q_total += t.value;
  }
  std::vector<double> fields(n, 0.0);
  double h_total = 0.0;
  for (int i = 0; i < n; ++i) {
    fields[i] = -(row_plus_col[i] + 2.0 * m.linear()[i]) / 4.0;
    h_total += m.linear()[i];
  }
  const double constant = q_total / 4.0 + h_total / 2.0 + m.constant();
  return IsingModel(n, std::move(couplings), std::move(fields), constant);
}

std::vector<int> spins_from_bits(const Bitstring& x) {
  std::vector<int> s(x.size());
  for (int j = 0; j < x.size(); ++j) s[j] = 1 - 2 * x.bit(j);
  return s;
}

namespace {

int thread_count() {
  if (const char* env = std::getenv("QMSA_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

} // namespace

std::vector<double> build_energy_diagonal(const QuboModel& m, int qubit_cap) {
  const int n = m.size();
  if (n > qubit_cap)
    throw CapError("diagonal for " + std::to_string(n) +
                   " qubits exceeds the cap of " + std::to_string(qubit_cap));
  const std::size_t dim = std::size_t{1} << n;

  // Masks over basis indices; qubit j is binary digit (n-1-j).
  std::vector<std::uint64_t> pair_masks(m.quadratic().size());
  std::vector<double> pair_values(m.quadratic().size());
  for (std::size_t t = 0; t < m.quadratic().size(); ++t) {
    const auto& term = m.quadratic()[t];
    pair_masks[t] = (std::uint64_t{1} << (n - 1 - term.i)) |
                    (std::uint64_t{1} << (n - 1 - term.j));
    pair_values[t] = term.value;
  }

  std::vector<double> diag(dim);
  auto fill_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      double e = m.constant();
      for (int i = 0; i < n; ++i)
        if (k & (std::uint64_t{1} << (n - 1 - i))) e += m.linear()[i];
      for (std::size_t t = 0; t < pair_masks.size(); ++t)
        if ((k & pair_masks[t]) == pair_masks[t]) e += pair_values[t];
      diag[k] = e;
    }
  };

  const int workers = std::min<std::size_t>(thread_count(), dim);
  if (workers <= 1 || dim < 4096) {
    fill_range(0, dim);
    return diag;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (dim + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = static_cast<std::size_t>(w) * chunk;
    pool.emplace_back(fill_range, lo, std::min(dim, lo + chunk));
  }
  for (auto& t : pool) t.join();
  return diag;
}

} // namespace qmsa
