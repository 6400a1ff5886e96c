#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmsa/sequence.hpp"

namespace qmsa {

inline constexpr std::int64_t kDefaultEnumerationCap = 1'000'000;

/// Bijection between (string s, letter n, column i) triples and flat qubit
/// indices. Layout is string-major, then letter, then column, so the leftmost
/// bit of a displayed bitstring is flat index 0. Total is L * sum(l_i).
class QubitIndexMap {
public:
  static QubitIndexMap build(const SequenceSet& seqs);

  int total_qubits() const { return n_; }
  int columns() const { return columns_; }
  int string_count() const { return static_cast<int>(offsets_.size()); }
  int string_length(int s) const { return lengths_[s]; }

  /// Flat index of (s, letter, col); all arguments 0-based.
  int index(int s, int letter, int col) const;

  struct Site {
    int s;
    int letter;
    int col;
  };
  Site site(int flat) const;

private:
  int n_ = 0;
  int columns_ = 0;
  std::vector<int> offsets_;
  std::vector<int> lengths_;
};

/// Fixed-length bit sequence in the global bit order. When converted to or
/// from a basis-state index, bit 0 (the leftmost printed bit) is the most
/// significant binary digit, so "100110" is basis index 38.
class Bitstring {
public:
  Bitstring() = default;
  explicit Bitstring(std::vector<std::uint8_t> bits);

  /// Parse from text such as "100110". Throws InputError on other characters.
  static Bitstring from_string(std::string_view text);

  /// Bits of k, big-endian over n positions. Requires n <= 63 and k < 2^n.
  static Bitstring from_index(std::uint64_t k, int n);

  int size() const { return static_cast<int>(bits_.size()); }
  int bit(int j) const { return bits_[j]; }
  void set(int j, int value) { bits_[j] = value ? 1 : 0; }

  /// Basis-state index of this bitstring. Requires size() <= 63.
  std::uint64_t to_index() const;

  std::string str() const;

  bool operator==(const Bitstring&) const = default;

private:
  std::vector<std::uint8_t> bits_;
};

/// An N x L grid of bases and gap cells: the decoded solution form.
class AlignmentMatrix {
public:
  /// Checks rectangular shape and the cell charset only.
  explicit AlignmentMatrix(std::vector<std::string> rows);

  /// Additionally checks that the non-gap cells of row s spell seqs.str(s).
  static AlignmentMatrix from_rows(std::vector<std::string> rows,
                                   const SequenceSet& seqs);

  int rows() const { return static_cast<int>(grid_.size()); }
  int cols() const { return grid_.empty() ? 0 : static_cast<int>(grid_[0].size()); }
  char cell(int r, int c) const { return grid_[r][c]; }
  const std::string& row(int r) const { return grid_[r]; }
  const std::vector<std::string>& grid() const { return grid_; }

  /// Rows joined with newlines, gaps shown as '_'.
  std::string pretty() const;

  bool operator==(const AlignmentMatrix&) const = default;

private:
  std::vector<std::string> grid_;
};

/// One violated hard-constraint instance (all indices 0-based; -1 = unused).
///   constraint 1: letter n of string s occupies sum != 1 columns.
///   constraint 2: letters n and n2 of string s share column i.
///   constraint 3: letter n2 (> n) of string s sits in column i while the
///                 earlier letter n sits in the later column i2 (i < i2).
struct Violation {
  int constraint = 0;
  int s = -1;
  int n = -1;
  int n2 = -1;
  int i = -1;
  int i2 = -1;

  bool operator==(const Violation&) const = default;
};

/// Every violated constraint instance of b, in deterministic order.
std::vector<Violation> check_constraints(const Bitstring& b,
                                         const SequenceSet& seqs);

bool is_feasible(const Bitstring& b, const SequenceSet& seqs);

/// Bit for (s, n, i) is 1 iff the n-th letter of string s occupies column i.
Bitstring encode_alignment(const AlignmentMatrix& a, const QubitIndexMap& map);

/// Infeasibility is a value, not an error: either the unique alignment with
/// encode_alignment(alignment) == b, or the full violation list.
struct DecodeResult {
  std::optional<AlignmentMatrix> alignment;
  std::vector<Violation> violations;

  bool feasible() const { return alignment.has_value(); }
};

DecodeResult decode_bitstring(const Bitstring& b, const SequenceSet& seqs);

/// Exactly the bitstrings passing is_feasible, generated by distributing the
/// L - l_s gaps of each string. Throws CapError when the feasible count
/// exceeds cap.
std::vector<Bitstring> enumerate_feasible(
    const SequenceSet& seqs, std::int64_t cap = kDefaultEnumerationCap);

} // namespace qmsa
