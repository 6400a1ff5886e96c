#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qmsa {

inline constexpr char kGap = '_';
inline constexpr std::string_view kAlphabet = "ACGT";

bool is_base(char c);

/// The input instance: N strings over {A,C,T,G} with a unique longest one.
/// The longest string is the reference; it stays fixed and receives no gaps.
/// Strings are uppercase-normalized at construction.
class SequenceSet {
public:
  /// Throws InputError on empty input, characters outside the alphabet,
  /// empty strings, or when two strings share the maximal length.
  explicit SequenceSet(std::vector<std::string> strings);

  /// Parse the inline CLI form, e.g. "AG,G".
  static SequenceSet from_csv(std::string_view comma_separated);

  int count() const { return static_cast<int>(strings_.size()); } // N
  int max_length() const { return max_length_; }                  // L
  int length(int s) const { return static_cast<int>(strings_[s].size()); }
  int total_length() const { return total_length_; } // sum of lengths
  int reference() const { return reference_; }       // index of longest string
  char letter(int s, int pos) const { return strings_[s][pos]; } // 0-based
  const std::string& str(int s) const { return strings_[s]; }
  const std::vector<std::string>& strings() const { return strings_; }

private:
  std::vector<std::string> strings_;
  int max_length_ = 0;
  int total_length_ = 0;
  int reference_ = -1;
};

} // namespace qmsa
