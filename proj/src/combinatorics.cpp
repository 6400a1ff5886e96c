#include "qmsa/combinatorics.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <stdexcept>

#include "qmsa/errors.hpp"

namespace qmsa {

BigInt binomial(int n, int k) {
  if (n < 0) throw InputError("binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int t = 1; t <= k; ++t) {
    result *= n - k + t;
    result /= t; // exact: the running product of t consecutive ratios
  }
  return result;
}

BigInt feasible_count(int max_length, const std::vector<int>& lengths) {
  if (lengths.empty()) throw InputError("lengths list is empty");
  BigInt total = 1;
  for (int l : lengths) {
    if (l < 1) throw InputError("string lengths must be >= 1");
    if (l > max_length)
      throw InputError("a string length exceeds the maximal length");
    total *= binomial(max_length, max_length - l);
  }
  return total;
}

BigInt feasible_count(const SequenceSet& seqs) {
  std::vector<int> lengths(seqs.count());
  for (int s = 0; s < seqs.count(); ++s) lengths[s] = seqs.length(s);
  return feasible_count(seqs.max_length(), lengths);
}

namespace {

template <typename Float>
Float bound_impl(int n_strings, int max_length) {
  if (n_strings < 2 || max_length < 2)
    throw InputError("the fraction bound requires N >= 2 and L >= 2");
  const Float N = n_strings;
  const Float L = max_length;
  const Float log_bound =
      -boost::math::lgamma(L + 1) - (log(Float(2)) * L - log(L)) * (L + N - 1);
  return exp(log_bound);
}

} // namespace

double fraction_upper_bound(int n_strings, int max_length) {
  if (n_strings < 2 || max_length < 2)
    throw InputError("the fraction bound requires N >= 2 and L >= 2");
  const double L = max_length;
  const double log_bound = -std::lgamma(L + 1) -
                           (std::log(2.0) * L - std::log(L)) *
                               (L + n_strings - 1);
  return std::exp(log_bound);
}

BigFloat fraction_upper_bound_hp(int n_strings, int max_length) {
  return bound_impl<BigFloat>(n_strings, max_length);
}

CountReport count_report(int max_length, const std::vector<int>& lengths) {
  CountReport r;
  r.n_strings = static_cast<int>(lengths.size());
  r.max_length = max_length;
  r.unique_max =
      std::count(lengths.begin(), lengths.end(), max_length) == 1;
  int total_length = 0;
  for (int l : lengths) total_length += l;
  r.n_qubits = max_length * total_length;
  r.feasible = feasible_count(max_length, lengths);
  r.hilbert = BigInt(1) << r.n_qubits;
  r.fraction = BigFloat(r.feasible) / BigFloat(r.hilbert);
  r.log10_feasible = log10(BigFloat(r.feasible)).convert_to<double>();
  r.log10_fraction = log10(r.fraction).convert_to<double>();
  if (r.n_strings >= 2 && max_length >= 2) {
    r.bound = fraction_upper_bound_hp(r.n_strings, max_length);
    r.log10_bound = log10(r.bound).convert_to<double>();
    if (r.unique_max && r.fraction > r.bound)
      throw std::logic_error("feasible fraction exceeds its decay bound");
  }
  return r;
}

CountReport count_report(const SequenceSet& seqs) {
  std::vector<int> lengths(seqs.count());
  for (int s = 0; s < seqs.count(); ++s) lengths[s] = seqs.length(s);
  return count_report(seqs.max_length(), lengths);
}

} // namespace qmsa
