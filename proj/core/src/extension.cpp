#include "scew/extension.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "scew/errors.hpp"

namespace scew {

void append_op(Cigar& cigar, char op, Index len) {
    if (len <= 0) return;
    if (!cigar.empty() && cigar.back().op == op)
        cigar.back().len += len;
    else
        cigar.push_back({op, len});
}

std::string cigar_string(const Cigar& cigar) {
    std::string out;
    for (const auto& run : cigar) {
        out += std::to_string(run.len);
        out += run.op;
    }
    return out;
}

bool is_valid_chain(const std::vector<Anchor>& chain) {
    for (size_t t = 1; t < chain.size(); ++t)
        if (!(chain[t - 1].i < chain[t].i && chain[t - 1].j <= chain[t].j)) return false;
    return true;
}

std::vector<Anchor> materialize_chain(const std::vector<Anchor>& anchors,
                                      const std::vector<int>& indices) {
    std::vector<Anchor> chain;
    chain.reserve(indices.size());
    for (int idx : indices) chain.push_back(anchors.at(idx));
    return chain;
}

std::vector<GapBox> gap_boxes(const std::vector<Anchor>& chain, int k) {
    std::vector<GapBox> boxes;
    if (chain.size() < 2) return boxes;
    boxes.reserve(chain.size() - 1);
    for (size_t l = 0; l + 1 < chain.size(); ++l) {
        boxes.push_back({chain[l].i + k - 1, chain[l + 1].i,
                         chain[l].j + k - 1, chain[l + 1].j});
    }
    return boxes;
}

uint64_t count_extension_cells(const std::vector<Anchor>& chain, int k) {
    uint64_t total = 0;
    for (size_t l = 0; l + 1 < chain.size(); ++l) {
        const Index gi = chain[l + 1].i - chain[l].i - k + 1;
        const Index gj = chain[l + 1].j - chain[l].j - k + 1;
        if (gi > 0 && gj > 0)
            total += static_cast<uint64_t>(gi) * static_cast<uint64_t>(gj);
    }
    return total;
}

namespace {

constexpr uint64_t kMaxDpCells = 1000000000ULL;

// global unit-cost alignment of S[x_lo..x_hi] vs S'[y_lo..y_hi]; either
// range may be empty.  Appends ops to `out`, adds cost, returns the
// recurrence cell count a*b.
uint64_t align_region(const Sequence& S, const Sequence& Sp, Index x_lo, Index x_hi,
                      Index y_lo, Index y_hi, Cigar& out, int64_t& cost) {
    const Index a = std::max<Index>(0, x_hi - x_lo + 1);
    const Index b = std::max<Index>(0, y_hi - y_lo + 1);
    if (a == 0 && b == 0) return 0;
    if (a == 0) {
        append_op(out, 'I', b);
        cost += b;
        return 0;
    }
    if (b == 0) {
        append_op(out, 'D', a);
        cost += a;
        return 0;
    }
    const uint64_t cells = static_cast<uint64_t>(a) * static_cast<uint64_t>(b);
    if (cells > kMaxDpCells)
        throw DegenerateInput("gap box too large for full-matrix alignment");

    const size_t cols = static_cast<size_t>(b) + 1;
    std::vector<int32_t> D((static_cast<size_t>(a) + 1) * cols);
    for (Index c = 0; c <= b; ++c) D[c] = static_cast<int32_t>(c);
    for (Index r = 1; r <= a; ++r) {
        D[r * cols] = static_cast<int32_t>(r);
        const Letter sc = S.at1(x_lo + r - 1);
        for (Index c = 1; c <= b; ++c) {
            const int32_t sub = D[(r - 1) * cols + (c - 1)] + (sc == Sp.at1(y_lo + c - 1) ? 0 : 1);
            const int32_t del = D[(r - 1) * cols + c] + 1;
            const int32_t ins = D[r * cols + (c - 1)] + 1;
            D[r * cols + c] = std::min({sub, del, ins});
        }
    }
    cost += D[a * cols + b];

    // traceback, preferring diagonal, then deletion, then insertion
    std::vector<CigarOp> rev;
    Index r = a, c = b;
    while (r > 0 || c > 0) {
        if (r > 0 && c > 0) {
            const bool match = S.at1(x_lo + r - 1) == Sp.at1(y_lo + c - 1);
            if (D[r * cols + c] == D[(r - 1) * cols + (c - 1)] + (match ? 0 : 1)) {
                rev.push_back({match ? '=' : 'X', 1});
                --r, --c;
                continue;
            }
        }
        if (r > 0 && D[r * cols + c] == D[(r - 1) * cols + c] + 1) {
            rev.push_back({'D', 1});
            --r;
            continue;
        }
        rev.push_back({'I', 1});
        --c;
    }
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) append_op(out, it->op, it->len);
    return cells;
}

} // namespace

GapAlignment extend_gap(const Sequence& S, const Sequence& S_prime, const GapBox& box) {
    if (box.empty()) throw std::invalid_argument("extend_gap requires a non-empty box");
    if (box.x_lo < 1 || box.x_hi > S.size() || box.y_lo < 1 || box.y_hi > S_prime.size())
        throw std::invalid_argument("gap box out of sequence bounds");
    GapAlignment res;
    res.cells = align_region(S, S_prime, box.x_lo, box.x_hi, box.y_lo, box.y_hi,
                             res.ops, res.cost);
    return res;
}

Alignment full_alignment(const Sequence& S, const Sequence& S_prime,
                         const std::vector<Anchor>& chain, int k,
                         const FullAlignOptions& opt) {
    if (!is_valid_chain(chain)) throw std::invalid_argument("invalid chain");
    if (opt.include_ends && (opt.p < 0 || opt.m_prime < 0))
        throw std::invalid_argument("include_ends needs p and m_prime");

    Alignment out;
    const Index n = S.size();
    const Index m = S_prime.size();

    if (chain.empty()) {
        if (!opt.include_ends) return out;
        const Index x_lo = std::max<Index>(1, opt.p + 1 - k);
        const Index x_hi = std::min<Index>(n, opt.p + opt.m_prime + k);
        const uint64_t cells = align_region(S, S_prime, x_lo, x_hi, 1, m, out.ops, out.cost);
        out.gap_cells.push_back(cells);
        out.cells_touched = cells;
        out.accounting.ext_cells = cells;
        out.x_begin = x_lo, out.x_end = x_hi, out.y_begin = 1, out.y_end = m;
        return out;
    }

    Index cx, cy;   // frontier: last (x, y) already aligned
    size_t start = 0;
    uint64_t prefix_cells = 0, suffix_cells = 0;
    if (opt.include_ends) {
        cx = std::max<Index>(0, opt.p - k);
        cy = 0;
    } else {
        append_op(out.ops, '=', k);
        cx = chain[0].i + k - 1;
        cy = chain[0].j + k - 1;
        start = 1;
    }
    out.x_begin = opt.include_ends ? cx + 1 : chain[0].i;
    out.y_begin = opt.include_ends ? 1 : chain[0].j;

    for (size_t l = start; l < chain.size(); ++l) {
        const Index i = chain[l].i, j = chain[l].j;
        const Index t = std::max<Index>({0, cx + 1 - i, cy + 1 - j});
        if (t >= k) continue;   // diagonal entirely behind the frontier
        if (t > 0 && cx - cy == i - j) {
            // frontier already on this anchor's diagonal: pure match run
            append_op(out.ops, '=', k - t);
        } else {
            // connector DP whose final cell is the anchor match (i+t, j+t)
            const uint64_t cells =
                align_region(S, S_prime, cx + 1, i + t, cy + 1, j + t, out.ops, out.cost);
            out.gap_cells.push_back(cells);
            out.cells_touched += cells;
            if (opt.include_ends && l == start) prefix_cells = cells;
            append_op(out.ops, '=', k - 1 - t);
        }
        cx = i + k - 1;
        cy = j + k - 1;
    }

    if (opt.include_ends) {
        const Index x_hi = std::max(cx, std::min<Index>(n, opt.p + opt.m_prime + k));
        suffix_cells = align_region(S, S_prime, cx + 1, x_hi, cy + 1, m, out.ops, out.cost);
        out.gap_cells.push_back(suffix_cells);
        out.cells_touched += suffix_cells;
        out.x_end = x_hi;
        out.y_end = std::max(cy, m);
    } else {
        out.x_end = cx;
        out.y_end = cy;
    }
    // interior gaps follow the gap-product model; end connectors, when
    // enabled, are charged as actually filled
    out.accounting.ext_cells = count_extension_cells(chain, k) + prefix_cells + suffix_cells;
    return out;
}

void write_gap_cells_tsv(std::ostream& os, const Alignment& alignment) {
    os << "gap\tcells\n";
    for (size_t g = 0; g < alignment.gap_cells.size(); ++g)
        os << g + 1 << '\t' << alignment.gap_cells[g] << '\n';
}

} // namespace scew
