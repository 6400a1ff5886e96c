#include "qmsa/encoding.hpp"

#include <algorithm>
#include <array>

#include "qmsa/errors.hpp"

namespace qmsa {

QubitIndexMap QubitIndexMap::build(const SequenceSet& seqs) {
  QubitIndexMap map;
  map.columns_ = seqs.max_length();
  map.lengths_.reserve(seqs.count());
  map.offsets_.reserve(seqs.count());
  int offset = 0;
  for (int s = 0; s < seqs.count(); ++s) {
    map.offsets_.push_back(offset);
    map.lengths_.push_back(seqs.length(s));
    offset += seqs.length(s) * map.columns_;
  }
  map.n_ = offset; // L * sum(l_i)
  return map;
}

int QubitIndexMap::index(int s, int letter, int col) const {
  return offsets_[s] + letter * columns_ + col;
}

QubitIndexMap::Site QubitIndexMap::site(int flat) const {
  int s = static_cast<int>(offsets_.size()) - 1;
  while (flat < offsets_[s]) --s;
  const int within = flat - offsets_[s];
  return Site{s, within / columns_, within % columns_};
}

Bitstring::Bitstring(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw InputError("bitstring values must be 0 or 1");
}

Bitstring Bitstring::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw InputError(std::string("invalid bit character '") + c + "'");
    bits.push_back(c == '1' ? 1 : 0);
  }
  return Bitstring(std::move(bits));
}

Bitstring Bitstring::from_index(std::uint64_t k, int n) {
  if (n < 0 || n > 63) throw InputError("bit count out of range");
  if (n < 64 && k >> n != 0) throw InputError("index exceeds 2^n");
  std::vector<std::uint8_t> bits(n);
  for (int j = 0; j < n; ++j)
    bits[j] = static_cast<std::uint8_t>((k >> (n - 1 - j)) & 1u);
  return Bitstring(std::move(bits));
}

std::uint64_t Bitstring::to_index() const {
  if (size() > 63) throw CapError("bitstring too long for an integer index");
  std::uint64_t k = 0;
  for (auto b : bits_) k = (k << 1) | b;
  return k;
}

std::string Bitstring::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t j = 0; j < bits_.size(); ++j)
    if (bits_[j]) s[j] = '1';
  return s;
}

AlignmentMatrix::AlignmentMatrix(std::vector<std::string> rows)
    : grid_(std::move(rows)) {
  if (grid_.empty()) throw InputError("alignment matrix has no rows");
  const auto width = grid_[0].size();
  for (const auto& row : grid_) {
    if (row.size() != width)
      throw InputError("alignment matrix rows differ in width");
    for (char c : row)
      if (c != kGap && !is_base(c))
        throw InputError(std::string("invalid alignment cell '") + c + "'");
  }
}

AlignmentMatrix AlignmentMatrix::from_rows(std::vector<std::string> rows,
                                           const SequenceSet& seqs) {
  AlignmentMatrix a(std::move(rows));
  if (a.rows() != seqs.count())
    throw InputError("alignment row count does not match the sequence set");
  if (a.cols() != seqs.max_length())
    throw InputError("alignment width does not match the longest sequence");
  for (int s = 0; s < a.rows(); ++s) {
    std::string letters;
    for (int i = 0; i < a.cols(); ++i)
      if (a.cell(s, i) != kGap) letters.push_back(a.cell(s, i));
    if (letters != seqs.str(s))
      throw InputError("row " + std::to_string(s) +
                       " does not spell the original sequence");
  }
  return a;
}

std::string AlignmentMatrix::pretty() const {
  std::string out;
  for (std::size_t r = 0; r < grid_.size(); ++r) {
    if (r) out.push_back('\n');
    out += grid_[r];
  }
  return out;
}

namespace {

// Columns holding each letter, per (s, n): the shared shape of all three
// constraint checks.
std::vector<std::vector<std::vector<int>>> letter_columns(
    const Bitstring& b, const SequenceSet& seqs, const QubitIndexMap& map) {
  std::vector<std::vector<std::vector<int>>> cols(seqs.count());
  for (int s = 0; s < seqs.count(); ++s) {
    cols[s].resize(seqs.length(s));
    for (int n = 0; n < seqs.length(s); ++n)
      for (int i = 0; i < map.columns(); ++i)
        if (b.bit(map.index(s, n, i))) cols[s][n].push_back(i);
  }
  return cols;
}

} // namespace

std::vector<Violation> check_constraints(const Bitstring& b,
                                         const SequenceSet& seqs) {
  const auto map = QubitIndexMap::build(seqs);
  if (b.size() != map.total_qubits())
    throw InputError("bitstring length " + std::to_string(b.size()) +
                     " does not match qubit count " +
                     std::to_string(map.total_qubits()));
  const auto cols = letter_columns(b, seqs, map);
  std::vector<Violation> out;

  // (1) every letter in exactly one column
  for (int s = 0; s < seqs.count(); ++s)
    for (int n = 0; n < seqs.length(s); ++n)
      if (cols[s][n].size() != 1)
        out.push_back(Violation{.constraint = 1, .s = s, .n = n});

  // (2) at most one letter per (row, column)
  for (int s = 0; s < seqs.count(); ++s)
    for (int i = 0; i < map.columns(); ++i)
      for (int n = 0; n < seqs.length(s); ++n) {
        if (!b.bit(map.index(s, n, i))) continue;
        for (int n2 = n + 1; n2 < seqs.length(s); ++n2)
          if (b.bit(map.index(s, n2, i)))
            out.push_back(Violation{.constraint = 2, .s = s, .n = n, .n2 = n2, .i = i});
      }

  // (3) order: later letter n2 in column i, earlier letter n in column i2 > i
  for (int s = 0; s < seqs.count(); ++s)
    for (int n = 0; n < seqs.length(s); ++n)
      for (int n2 = n + 1; n2 < seqs.length(s); ++n2)
        for (int i : cols[s][n2])
          for (int i2 : cols[s][n])
            if (i < i2)
              out.push_back(
                  Violation{.constraint = 3, .s = s, .n = n, .n2 = n2, .i = i, .i2 = i2});

  return out;
}

bool is_feasible(const Bitstring& b, const SequenceSet& seqs) {
  return check_constraints(b, seqs).empty();
}

Bitstring encode_alignment(const AlignmentMatrix& a, const QubitIndexMap& map) {
  if (a.rows() != map.string_count() || a.cols() != map.columns())
    throw InputError("alignment dimensions do not match the index map");
  std::vector<std::uint8_t> bits(map.total_qubits(), 0);
  for (int s = 0; s < a.rows(); ++s) {
    int letter = 0;
    for (int i = 0; i < a.cols(); ++i) {
      if (a.cell(s, i) == kGap) continue;
      if (letter >= map.string_length(s))
        throw InputError("row " + std::to_string(s) + " has too many letters");
      bits[map.index(s, letter, i)] = 1;
      ++letter;
    }
    if (letter != map.string_length(s))
      throw InputError("row " + std::to_string(s) + " has too few letters");
  }
  return Bitstring(std::move(bits));
}

DecodeResult decode_bitstring(const Bitstring& b, const SequenceSet& seqs) {
  DecodeResult result;
  result.violations = check_constraints(b, seqs);
  if (!result.violations.empty()) return result;

  const auto map = QubitIndexMap::build(seqs);
  std::vector<std::string> rows(seqs.count(),
                                std::string(map.columns(), kGap));
  for (int s = 0; s < seqs.count(); ++s)
    for (int n = 0; n < seqs.length(s); ++n)
      for (int i = 0; i < map.columns(); ++i)
        if (b.bit(map.index(s, n, i))) rows[s][i] = seqs.letter(s, n);
  result.alignment = AlignmentMatrix(std::move(rows));
  return result;
}

namespace {

// Saturating feasible count, just enough to enforce the enumeration cap
// without big-integer arithmetic.
std::int64_t saturating_count(const SequenceSet& seqs, std::int64_t cap) {
  const std::int64_t limit = cap + 1;
  std::int64_t total = 1;
  for (int s = 0; s < seqs.count(); ++s) {
    const int gaps = seqs.max_length() - seqs.length(s);
    // C(L, g) computed incrementally, clamped at limit.
    double c = 1.0;
    for (int t = 1; t <= gaps; ++t)
      c = c * (seqs.max_length() - gaps + t) / t;
    if (c > static_cast<double>(limit)) return limit;
    total *= static_cast<std::int64_t>(c + 0.5);
    if (total > limit || total < 0) return limit;
  }
  return total;
}

} // namespace

std::vector<Bitstring> enumerate_feasible(const SequenceSet& seqs,
                                          std::int64_t cap) {
  if (saturating_count(seqs, cap) > cap)
    throw CapError("feasible count exceeds the enumeration cap of " +
                   std::to_string(cap));

  const auto map = QubitIndexMap::build(seqs);
  const int L = map.columns();

  // Per string: all increasing column choices for its letters.
  std::vector<std::vector<std::vector<int>>> choices(seqs.count());
  for (int s = 0; s < seqs.count(); ++s) {
    const int l = seqs.length(s);
    std::vector<int> combo(l);
    for (int t = 0; t < l; ++t) combo[t] = t;
    while (true) {
      choices[s].push_back(combo);
      // next lexicographic combination of l items out of L
      int t = l - 1;
      while (t >= 0 && combo[t] == L - l + t) --t;
      if (t < 0) break;
      ++combo[t];
      for (int u = t + 1; u < l; ++u) combo[u] = combo[u - 1] + 1;
    }
  }

  std::vector<Bitstring> out;
  std::vector<std::size_t> pick(seqs.count(), 0);
  while (true) {
    std::vector<std::uint8_t> bits(map.total_qubits(), 0);
    for (int s = 0; s < seqs.count(); ++s)
      for (int n = 0; n < seqs.length(s); ++n)
        bits[map.index(s, n, choices[s][pick[s]][n])] = 1;
    out.push_back(Bitstring(std::move(bits)));

    int s = seqs.count() - 1;
    while (s >= 0 && pick[s] + 1 == choices[s].size()) pick[s--] = 0;
    if (s < 0) break;
    ++pick[s];
  }
  return out;
}

} // namespace qmsa
