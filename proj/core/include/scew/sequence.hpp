#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scew/rng.hpp"

namespace scew {

using Index = int64_t;
using Letter = uint8_t;

/**
 * Letter sequence over alphabet {0..sigma-1}.  Positions are 1-based in the
 * whole workbench, matching the alignment-literature convention; at1() does
 * the offset translation exactly once.
 */
class Sequence {
public:
    Sequence() = default;
    Sequence(std::vector<Letter> data, int sigma);

    Index size() const { return static_cast<Index>(data_.size()); }
    int sigma() const { return sigma_; }

    Letter at1(Index pos) const { return data_[static_cast<size_t>(pos - 1)]; }

    void push_back(Letter c) { data_.push_back(c); }
    const std::vector<Letter>& data() const { return data_; }

    bool operator==(const Sequence& other) const = default;

private:
    std::vector<Letter> data_;
    int sigma_ = 4;
};

// i.i.d. uniform letters; deterministic for a fixed seed
Sequence generate_reference(Index n, int sigma, Rng& rng);

// DNA text mapping A,C,G,T <-> 0..3 (sigma = 4 only)
std::string to_dna(const Sequence& s);
Sequence from_dna(const std::string& text);

} // namespace scew
