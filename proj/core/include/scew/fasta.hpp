#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "scew/sequence.hpp"

namespace scew {

struct FastaRecord {
    std::string name;
    Sequence seq;
};

void write_fasta(std::ostream& os, const std::string& name, const Sequence& s);
void write_fasta_file(const std::string& path, const std::string& name, const Sequence& s);

std::vector<FastaRecord> read_fasta(std::istream& is);
std::vector<FastaRecord> read_fasta_file(const std::string& path);

// first record only; errors if the file holds none
FastaRecord read_fasta_single(const std::string& path);

} // namespace scew
