#pragma once

#include <iosfwd>
#include <string>

#include "qmsa/sequence.hpp"

namespace qmsa {

/// Standard FASTA: '>' header lines start a record, sequence lines are
/// concatenated and uppercase-normalized. Characters outside {A,C,T,G} are an
/// InputError, as are empty records or a missing leading header.
SequenceSet read_fasta(std::istream& in);
SequenceSet read_fasta_file(const std::string& path);

} // namespace qmsa
