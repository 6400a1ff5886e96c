#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "qmsa/sequence.hpp"

namespace qmsa {

using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// Exact binomial coefficient. Throws InputError for n < 0.
BigInt binomial(int n, int k);

/// Exact number of feasible alignments: prod_i C(L, L - l_i).
BigInt feasible_count(const SequenceSet& seqs);

/// Shape-only variant for synthetic instances (no sequence content).
/// Requires max_length >= every length. Lengths include the reference.
BigInt feasible_count(int max_length, const std::vector<int>& lengths);

/// Upper bound on |feasible| / 2^n for N strings of maximal length L:
/// (1/L!) * exp(-[ln(2) L - ln(L)] [L + N - 1]). Requires N, L >= 2.
/// Evaluated in log space; never overflows.
double fraction_upper_bound(int n_strings, int max_length);
BigFloat fraction_upper_bound_hp(int n_strings, int max_length);

struct CountReport {
  int n_strings = 0;
  int max_length = 0;
  int n_qubits = 0;
  bool unique_max = false; // exactly one string attains max_length
  BigInt feasible;
  BigInt hilbert; // 2^n_qubits
  BigFloat fraction;
  double log10_feasible = 0.0;
  double log10_fraction = 0.0;
  BigFloat bound; // meaningful for N, L >= 2
  double log10_bound = 0.0;
};

/// Assemble counts, the feasible fraction, and the decay bound. Checks
/// fraction <= bound whenever the bound applies (N, L >= 2 and unique max);
/// a violation is an internal error.
CountReport count_report(const SequenceSet& seqs);
CountReport count_report(int max_length, const std::vector<int>& lengths);

} // namespace qmsa
