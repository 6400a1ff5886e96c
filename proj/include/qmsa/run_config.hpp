#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmsa/driver.hpp"
#include "qmsa/hamiltonian.hpp"
#include "qmsa/sequence.hpp"

namespace qmsa {

/// Everything a CLI run needs, fully serialized into every output for
/// provenance (the output directory itself is location, not content, and is
/// not embedded). A config JSON file may set any subset; flags override it.
struct RunConfig {
  std::vector<std::string> sequences; // resolved content
  std::string fasta_path;             // provenance when sequences came from a file
  PenaltyConfig penalties;
  int layers = 1;
  std::vector<int> p_list;
  std::int64_t shots = 5000;
  std::uint64_t seed = 1;
  OptimizerConfig optimizer;
  std::string score_matrix_path; // optional scoring-scheme override
  std::string format = "both"; // json | text | both
  int top_k = 10;
  bool emit_models = false;
  // synthetic counting (count subcommand without sequence content)
  int count_max_length = 0;
  std::vector<int> count_lengths;

  /// Build the SequenceSet from the resolved sequence content.
  SequenceSet make_sequences() const;

  /// Common validation; command-specific checks live with each command.
  void validate() const;
};

} // namespace qmsa
