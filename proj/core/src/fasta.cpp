#include "scew/fasta.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace scew {

void write_fasta(std::ostream& os, const std::string& name, const Sequence& s) {
    os << '>' << name << '\n';
    std::string text = to_dna(s);
    for (size_t off = 0; off < text.size(); off += 60) {
        os << text.substr(off, 60) << '\n';
    }
    if (text.empty()) os << '\n';
}

void write_fasta_file(const std::string& path, const std::string& name, const Sequence& s) {
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open for writing: " + path);
    write_fasta(os, name, s);
}

std::vector<FastaRecord> read_fasta(std::istream& is) {
    std::vector<FastaRecord> out;
    std::string line, name, body;
    auto flush = [&]() {
        if (!name.empty() || !body.empty()) {
            out.push_back({name, from_dna(body)});
        }
        name.clear();
        body.clear();
    };
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            flush();
            // record id: header token before the first whitespace
            name = line.substr(1, line.find_first_of(" \t") - 1);
        } else {
            body += line;
        }
    }
    flush();
    return out;
}

std::vector<FastaRecord> read_fasta_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open FASTA file: " + path);
    return read_fasta(is);
}

FastaRecord read_fasta_single(const std::string& path) {
    auto records = read_fasta_file(path);
    if (records.empty()) throw std::invalid_argument("no FASTA records in " + path);
    return std::move(records.front());
}

} // namespace scew
