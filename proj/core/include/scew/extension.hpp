#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scew/chaining.hpp"
#include "scew/sequence.hpp"

namespace scew {

// closed integer rectangle between consecutive chain anchors:
// {i_l+k-1 .. i_{l+1}} x {j_l+k-1 .. j_{l+1}}
struct GapBox {
    Index x_lo = 1, x_hi = 0, y_lo = 1, y_hi = 0;

    bool empty() const { return x_lo > x_hi || y_lo > y_hi; }
    Index width() const { return empty() ? 0 : x_hi - x_lo + 1; }
    Index height() const { return empty() ? 0 : y_hi - y_lo + 1; }
    uint64_t cells() const {
        return empty() ? 0 : static_cast<uint64_t>(width()) * static_cast<uint64_t>(height());
    }
};

struct CigarOp {
    char op = '=';   // '=', 'X', 'I' (consumes S'), 'D' (consumes S)
    Index len = 0;
    bool operator==(const CigarOp&) const = default;
};
using Cigar = std::vector<CigarOp>;

void append_op(Cigar& cigar, char op, Index len);
std::string cigar_string(const Cigar& cigar);

struct GapAlignment {
    Cigar ops;
    int64_t cost = 0;
    uint64_t cells = 0;   // recurrence cells = width * height
};

struct RuntimeAccounting {
    uint64_t chain_ops = 0;   // optimizer inner-loop work
    uint64_t ext_cells = 0;   // gap-product model; end boxes charged as filled
    double wall_seed_s = 0.0;
    double wall_chain_s = 0.0;
    double wall_extend_s = 0.0;
};

struct Alignment {
    Cigar ops;
    int64_t cost = 0;
    std::vector<uint64_t> gap_cells;   // DP cells per connector, chain order
    uint64_t cells_touched = 0;        // sum of gap_cells
    RuntimeAccounting accounting;
    Index x_begin = 1, x_end = 0;      // closed covered span in S
    Index y_begin = 1, y_end = 0;      // closed covered span in S'
};

struct FullAlignOptions {
    bool include_ends = false;
    Index p = -1;         // required when include_ends
    Index m_prime = -1;   // required when include_ends
};

// the chain here is the materialized anchor subsequence
std::vector<GapBox> gap_boxes(const std::vector<Anchor>& chain, int k);

// global alignment of S[x_lo..x_hi] vs S'[y_lo..y_hi], unit costs
// (match 0, mismatch 1, indel 1)
GapAlignment extend_gap(const Sequence& S, const Sequence& S_prime, const GapBox& box);

// interior gap products: sum of max(i_{l+1}-i_l-k+1, 0) * max(j_{l+1}-j_l-k+1, 0)
uint64_t count_extension_cells(const std::vector<Anchor>& chain, int k);

// stitches anchors and gap alignments into one monotone alignment; with
// include_ends also aligns a prefix box down to (max(1, p+1-k), 1) and a
// suffix box up to (min(n, p+m'+k), m)
Alignment full_alignment(const Sequence& S, const Sequence& S_prime,
                         const std::vector<Anchor>& chain, int k,
                         const FullAlignOptions& opt = {});

bool is_valid_chain(const std::vector<Anchor>& chain);
std::vector<Anchor> materialize_chain(const std::vector<Anchor>& anchors,
                                      const std::vector<int>& indices);

void write_gap_cells_tsv(std::ostream& os, const Alignment& alignment);

} // namespace scew
