#include "qmsa/run_config.hpp"

#include "qmsa/errors.hpp"

namespace qmsa {

SequenceSet RunConfig::make_sequences() const {
  if (sequences.empty())
    throw InputError("no sequences given (use --seqs or --fasta)");
  return SequenceSet(sequences);
}

void RunConfig::validate() const {
  penalties.validate();
  optimizer.validate();
  if (layers < 1) throw InputError("p must be >= 1");
  if (shots < 1) throw InputError("shots must be >= 1");
  for (int p : p_list)
    if (p < 1) throw InputError("every p in the sweep list must be >= 1");
  if (format != "json" && format != "text" && format != "both")
    throw InputError("format must be json, text, or both");
  if (top_k < 1) throw InputError("top-k must be >= 1");
}

} // namespace qmsa
