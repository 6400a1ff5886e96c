#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qmsa/encoding.hpp"
#include "qmsa/sequence.hpp"

namespace qmsa {

/// A symbol-pair scoring scheme over the alphabet plus the gap symbol.
/// Must be symmetric; pairs involving a gap are ignored by sp_score and never
/// enter the weight tensor.
using ScoreFn = std::function<double(char, char)>;

/// Native sum-of-pairs similarity: -1 match, +1 mismatch, 0 if either is a
/// gap. Throws InputError for symbols outside the alphabet.
int sim_sp(char a, char b);

ScoreFn native_score();

/// Scheme override from a JSON object mapping two-letter pairs to scores,
/// e.g. {"AA": -2.0, "AG": 1.5}. Lookup tries "XY" then "YX"; a missing pair
/// is an InputError when first used.
ScoreFn score_from_json(const std::string& json_text);
ScoreFn score_from_json_file(const std::string& path);

/// Pairwise letter-alignment weights omega(s, n, s2, n2) for all string pairs
/// s < s2. Only letters are indexed; gaps have no entries.
class WeightTensor {
public:
  static WeightTensor build(const SequenceSet& seqs,
                            const ScoreFn& score = native_score());

  /// Requires s < s2; letters 0-based.
  double omega(int s, int n, int s2, int n2) const;

  int string_count() const { return static_cast<int>(lengths_.size()); }
  int length(int s) const { return lengths_[s]; }
  int entry_count() const;

private:
  int pair_index(int s, int s2) const;

  std::vector<int> lengths_;
  std::vector<std::vector<double>> blocks_; // row-major l_s x l_s2 per pair
};

/// Sum over columns of all distinct row-pair scores. Pairs with a gap on
/// either side contribute 0 under every scheme.
double sp_score(const AlignmentMatrix& a, const ScoreFn& score = native_score());

} // namespace qmsa
