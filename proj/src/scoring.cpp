#include "qmsa/scoring.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include <json.hpp>

#include "qmsa/errors.hpp"

namespace qmsa {

int sim_sp(char a, char b) {
  if (a == kGap || b == kGap) {
    if (a != kGap && !is_base(a))
      throw InputError(std::string("symbol '") + a + "' is outside the alphabet");
    if (b != kGap && !is_base(b))
      throw InputError(std::string("symbol '") + b + "' is outside the alphabet");
    return 0;
  }
  if (!is_base(a) || !is_base(b))
    throw InputError("symbol outside the alphabet in sim_sp");
  return a == b ? -1 : +1;
}

ScoreFn native_score() {
  return [](char a, char b) { return static_cast<double>(sim_sp(a, b)); };
}

ScoreFn score_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid scoring JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("scoring JSON must be an object");
  auto table = std::make_shared<std::map<std::string, double>>();
  for (const auto& [key, value] : j.items()) {
    if (key.size() != 2 || !is_base(key[0]) || !is_base(key[1]))
      throw InputError("scoring key '" + key +
                       "' must be two alphabet letters");
    if (!value.is_number())
      throw InputError("scoring value for '" + key + "' must be a number");
    (*table)[key] = value.get<double>();
  }
  return [table](char a, char b) -> double {
    if (a == kGap || b == kGap) return 0.0;
    if (!is_base(a) || !is_base(b))
      throw InputError("symbol outside the alphabet in scoring scheme");
    std::string key{a, b};
    auto it = table->find(key);
    if (it == table->end()) it = table->find(std::string{b, a});
    if (it == table->end())
      throw InputError("scoring scheme has no entry for pair " + key);
    return it->second;
  };
}

ScoreFn score_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open scoring file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return score_from_json(buffer.str());
}

WeightTensor WeightTensor::build(const SequenceSet& seqs,
                                 const ScoreFn& score) {
  WeightTensor w;
  w.lengths_.reserve(seqs.count());
  for (int s = 0; s < seqs.count(); ++s) w.lengths_.push_back(seqs.length(s));
  for (int s = 0; s < seqs.count(); ++s)
    for (int s2 = s + 1; s2 < seqs.count(); ++s2) {
      std::vector<double> block;
      block.reserve(static_cast<std::size_t>(seqs.length(s)) * seqs.length(s2));
      for (int n = 0; n < seqs.length(s); ++n)
        for (int n2 = 0; n2 < seqs.length(s2); ++n2)
          block.push_back(score(seqs.letter(s, n), seqs.letter(s2, n2)));
      w.blocks_.push_back(std::move(block));
    }
  return w;
}

int WeightTensor::pair_index(int s, int s2) const {
  // pairs (s, s2), s < s2, in lexicographic order
  const int n = string_count();
  return s * n - s * (s + 1) / 2 + (s2 - s - 1);
}

double WeightTensor::omega(int s, int n, int s2, int n2) const {
  if (s >= s2) throw InputError("omega requires s < s2");
  return blocks_[pair_index(s, s2)][static_cast<std::size_t>(n) * lengths_[s2] + n2];
}

int WeightTensor::entry_count() const {
  int total = 0;
  for (const auto& b : blocks_) total += static_cast<int>(b.size());
  return total;
}

double sp_score(const AlignmentMatrix& a, const ScoreFn& score) {
  double total = 0.0;
  for (int i = 0; i < a.cols(); ++i)
    for (int r = 0; r < a.rows(); ++r)
      for (int r2 = r + 1; r2 < a.rows(); ++r2) {
        const char x = a.cell(r, i);
        const char y = a.cell(r2, i);
        if (x == kGap || y == kGap) continue;
        total += score(x, y);
      }
  return total;
}

} // namespace qmsa
