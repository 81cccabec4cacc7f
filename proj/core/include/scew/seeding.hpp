#pragma once

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <utility>
#include <vector>

#include "scew/homology.hpp"
#include "scew/rng.hpp"
#include "scew/sequence.hpp"

namespace scew {

enum class AnchorClass : uint8_t { Homologous, Clipping, Spurious, Unclassified };

const char* anchor_class_name(AnchorClass c);

struct Anchor {
    Index i = 0;   // start in S
    Index j = 0;   // start in S'
    AnchorClass cls = AnchorClass::Unclassified;

    auto operator<=>(const Anchor& o) const { return std::pair(i, j) <=> std::pair(o.i, o.j); }
    bool operator==(const Anchor& o) const { return i == o.i && j == o.j; }
};

/**
 * Exact, complete k-mer index of a sequence.  Windows are packed into a
 * 128-bit key (bits-per-letter * k must fit); occurrence lists end up
 * sorted because positions are inserted in scan order.
 */
class KmerIndex {
public:
    KmerIndex(const Sequence& S, int k);

    int k() const { return k_; }
    Index n() const { return n_; }

    // occurrences of the window starting at pos in the query sequence;
    // empty list when absent
    const std::vector<Index>& occurrences(const Sequence& query, Index pos) const;

    const std::vector<Index>& occurrences_of_key(unsigned __int128 key) const;
    unsigned __int128 pack(const Sequence& seq, Index pos) const;

    size_t distinct_windows() const { return table_.size(); }

private:
    struct KeyHash {
        size_t operator()(unsigned __int128 v) const {
            return static_cast<size_t>(splitmix64(static_cast<uint64_t>(v) ^
                                                  static_cast<uint64_t>(v >> 64) * 0x9e3779b97f4a7c15ULL));
        }
    };
    int k_ = 0;
    int bits_ = 2;
    Index n_ = 0;
    std::vector<Index> empty_;
    std::unordered_map<unsigned __int128, std::vector<Index>, KeyHash> table_;
};

KmerIndex index_reference(const Sequence& S, int k);

// all (i,j) with S[i..i+k-1] = S'[j..j+k-1], sorted by (i, j)
std::vector<Anchor> find_anchors(const KmerIndex& index, const Sequence& S_prime);

// role-swapping convenience: indexes the shorter sequence and scans the
// longer one; the produced set is identical to find_anchors(index(S,k), S')
std::vector<Anchor> find_anchors(const Sequence& S, const Sequence& S_prime, int k);

AnchorClass classify_anchor(const Anchor& a, const HomologousPath& path, int k);

struct ClassCounts {
    Index homologous = 0;
    Index clipping = 0;
    Index spurious = 0;
};

// classifies in place and tallies; counts partition the set
ClassCounts count_by_class(std::vector<Anchor>& anchors, const HomologousPath& path, int k);

void write_anchor_csv(std::ostream& os, const std::vector<Anchor>& anchors, int k);

} // namespace scew
