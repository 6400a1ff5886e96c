#include "qmsa/fasta.hpp"

#include <cctype>
#include <fstream>
#include <istream>

#include "qmsa/errors.hpp"

namespace qmsa {

SequenceSet read_fasta(std::istream& in) {
  std::vector<std::string> records;
  std::string line;
  bool in_record = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '>') {
      if (in_record && records.back().empty())
        throw InputError("FASTA record with no sequence data");
      records.emplace_back();
      in_record = true;
      continue;
    }
    if (!in_record)
      throw InputError("FASTA sequence data before the first '>' header");
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      records.back().push_back(
          static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  if (records.empty()) throw InputError("FASTA input has no records");
  return SequenceSet(std::move(records)); // charset checked there
}

SequenceSet read_fasta_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open FASTA file: " + path);
  return read_fasta(in);
}

} // namespace qmsa
