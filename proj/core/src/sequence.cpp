#include "scew/sequence.hpp"

#include <stdexcept>

namespace scew {

Sequence::Sequence(std::vector<Letter> data, int sigma) : data_(std::move(data)), sigma_(sigma) {
    if (sigma < 2) throw std::invalid_argument("alphabet size must be >= 2");
    for (Letter c : data_) {
        if (c >= sigma) throw std::invalid_argument("letter out of alphabet range");
    }
}

Sequence generate_reference(Index n, int sigma, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sequence length must be >= 1");
    if (sigma < 2) throw std::invalid_argument("alphabet size must be >= 2");
    std::vector<Letter> data(static_cast<size_t>(n));
    for (auto& c : data) c = static_cast<Letter>(rng.next_below(static_cast<uint64_t>(sigma)));
    return Sequence(std::move(data), sigma);
}

static const char kDna[] = "ACGT";

std::string to_dna(const Sequence& s) {
    if (s.sigma() != 4) throw std::invalid_argument("DNA text requires sigma = 4");
    std::string out;
    out.reserve(static_cast<size_t>(s.size()));
    for (Letter c : s.data()) out.push_back(kDna[c]);
    return out;
}

Sequence from_dna(const std::string& text) {
    std::vector<Letter> data;
    data.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case 'A': case 'a': data.push_back(0); break;
            case 'C': case 'c': data.push_back(1); break;
            case 'G': case 'g': data.push_back(2); break;
            case 'T': case 't': data.push_back(3); break;
            default:
                throw std::invalid_argument(std::string("invalid DNA letter '") + ch + "'");
        }
    }
    return Sequence(std::move(data), 4);
}

} // namespace scew
