#include "qmsa/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qmsa/errors.hpp"

namespace qmsa {

bool is_base(char c) {
  return kAlphabet.find(c) != std::string_view::npos;
}

SequenceSet::SequenceSet(std::vector<std::string> strings)
    : strings_(std::move(strings)) {
  if (strings_.empty()) throw InputError("sequence set is empty");
  for (auto& s : strings_) {
    if (s.empty()) throw InputError("empty sequence");
    for (auto& c : s) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (!is_base(c))
        throw InputError(std::string("character '") + c +
                         "' is outside the alphabet {A,C,T,G}");
    }
  }
  for (int s = 0; s < count(); ++s) {
    total_length_ += length(s);
    if (length(s) > max_length_) {
      max_length_ = length(s);
      reference_ = s;
    }
  }
  const auto maximal = std::count_if(
      strings_.begin(), strings_.end(),
      [&](const std::string& s) { return static_cast<int>(s.size()) == max_length_; });
  if (maximal != 1)
    throw InputError("exactly one sequence must have maximal length (found " +
                     std::to_string(maximal) + " of length " +
                     std::to_string(max_length_) + ")");
}

SequenceSet SequenceSet::from_csv(std::string_view comma_separated) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : comma_separated) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return SequenceSet(std::move(parts));
}

} // namespace qmsa
