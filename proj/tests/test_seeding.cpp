#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "scew/homology.hpp"
#include "scew/mutation.hpp"
#include "scew/rng.hpp"
#include "scew/seeding.hpp"
#include "scew/sequence.hpp"

using namespace scew;

namespace {

// quadratic all-pairs oracle
std::vector<Anchor> brute_anchors(const Sequence& S, const Sequence& Sp, int k) {
    std::vector<Anchor> out;
    for (Index i = 1; i + k - 1 <= S.size(); ++i) {
        for (Index j = 1; j + k - 1 <= Sp.size(); ++j) {
            bool same = true;
            for (int t = 0; t < k && same; ++t) same = S.at1(i + t) == Sp.at1(j + t);
            if (same) out.push_back({i, j, AnchorClass::Unclassified});
        }
    }
    return out;
}

// set-algebra oracle for the three classes: A is the anchor diagonal, B the
// path points inside the anchor box
AnchorClass brute_class(const Anchor& a, const HomologousPath& path, int k) {
    std::set<Point> A, B;
    for (int t = 0; t < k; ++t) A.insert({a.i + t, a.j + t});
    for (const Point& pt : path.points) {
        if (pt.x >= a.i && pt.x <= a.i + k - 1 && pt.y >= a.j && pt.y <= a.j + k - 1)
            B.insert(pt);
    }
    if (A == B) return AnchorClass::Homologous;
    std::set<Point> inter;
    std::set_intersection(A.begin(), A.end(), B.begin(), B.end(),
                          std::inserter(inter, inter.begin()));
    if (inter.empty()) return AnchorClass::Spurious;
    return AnchorClass::Clipping;
}

EditScript worked_script() {
    EditScript script;
    script.p = 0;
    script.m_prime = 8;
    script.sigma = 4;
    script.records.resize(8);
    for (Index pos = 1; pos <= 8; ++pos) script.records[size_t(pos - 1)].pos = pos;
    script.records[3].ins = {3};
    script.records[4].del = true;
    script.records[5].sub = 3;
    script.records[6].sub = 0;
    return script;
}

} // namespace

TEST_CASE("kmer index finds every window") {
    Rng gen(31);
    const Sequence S = generate_reference(300, 4, gen);
    const KmerIndex index(S, 5);
    for (Index i = 1; i + 4 <= S.size(); ++i) {
        const auto& occ = index.occurrences(S, i);
        CHECK(std::find(occ.begin(), occ.end(), i) != occ.end());
        CHECK(std::is_sorted(occ.begin(), occ.end()));
    }
}

TEST_CASE("find_anchors equals the all-pairs oracle") {
    Rng gen(32);
    for (int rep = 0; rep < 30; ++rep) {
        const int k = int(gen.uniform_int(2, 6));
        const Sequence S = generate_reference(gen.uniform_int(10, 120), 4, gen);
        const Sequence Sp = generate_reference(gen.uniform_int(10, 120), 4, gen);
        const std::vector<Anchor> expect = brute_anchors(S, Sp, k);

        const KmerIndex index(S, k);
        const std::vector<Anchor> got = find_anchors(index, Sp);
        CHECK(got == expect);

        // role-swapping front door produces the same set
        CHECK(find_anchors(S, Sp, k) == expect);
    }
}

TEST_CASE("non-power-of-two alphabets pack correctly") {
    Rng gen(33);
    for (int rep = 0; rep < 10; ++rep) {
        const Sequence S = generate_reference(80, 6, gen);
        const Sequence Sp = generate_reference(90, 6, gen);
        const int k = 3;
        CHECK(find_anchors(S, Sp, k) == brute_anchors(S, Sp, k));
    }
}

TEST_CASE("anchor output is sorted by (i, j)") {
    Rng gen(34);
    const Sequence S = generate_reference(2000, 4, gen);
    const Sequence Sp = generate_reference(2000, 4, gen);
    const auto anchors = find_anchors(S, Sp, 4);
    CHECK(std::is_sorted(anchors.begin(), anchors.end()));
}

TEST_CASE("degenerate index inputs") {
    Rng gen(35);
    const Sequence S = generate_reference(10, 4, gen);
    CHECK_THROWS_AS(KmerIndex(S, 0), std::invalid_argument);
    CHECK_THROWS_AS(KmerIndex(S, 65), std::invalid_argument);   // 2 * 65 > 128
    CHECK_NOTHROW(KmerIndex(S, 64));

    const KmerIndex tiny(S, 11);   // k > n: empty index
    CHECK(tiny.distinct_windows() == 0);
    const Sequence Sp = generate_reference(30, 4, gen);
    CHECK(find_anchors(tiny, Sp).empty());
}

TEST_CASE("worked example classification") {
    const Sequence S = from_dna("TACTTCGC");
    const EditScript script = worked_script();
    const Sequence Sp = apply_script(S, script);
    const HomologousPath path = build_homologous_path(script);

    std::vector<Anchor> anchors = find_anchors(S, Sp, 3);
    const std::vector<Anchor> expect = {{1, 1}, {1, 6}, {2, 2}, {3, 3}};
    REQUIRE(anchors == expect);

    const ClassCounts counts = count_by_class(anchors, path, 3);
    CHECK(anchors[0].cls == AnchorClass::Homologous);   // (1,1)
    CHECK(anchors[1].cls == AnchorClass::Spurious);     // (1,6)
    CHECK(anchors[2].cls == AnchorClass::Clipping);     // (2,2)
    CHECK(anchors[3].cls == AnchorClass::Clipping);     // (3,3)
    CHECK(counts.homologous == 1);
    CHECK(counts.clipping == 2);
    CHECK(counts.spurious == 1);
}

TEST_CASE("classification equals the set-algebra oracle") {
    Rng gen(36);
    for (int rep = 0; rep < 40; ++rep) {
        const Index n = 150;
        const Sequence S = generate_reference(n, 4, gen);
        MutationParams p;
        p.theta_s = 0.08;
        p.theta_d = 0.08;
        p.theta_i = 0.08;
        p.gamma = 0.6;
        p.rho_i = 0.4;
        p.sigma = 4;
        const SequencePair pair = mutate(S, 0, n, p, gen, false);
        const HomologousPath path = build_homologous_path(pair.script);
        const int k = int(gen.uniform_int(3, 6));

        std::vector<Anchor> anchors = find_anchors(S, pair.S_prime, int(k));
        count_by_class(anchors, path, k);
        for (const Anchor& a : anchors) CHECK(a.cls == brute_class(a, path, k));
    }
}

TEST_CASE("anchor csv format") {
    std::vector<Anchor> anchors = {{1, 1, AnchorClass::Homologous},
                                   {1, 6, AnchorClass::Spurious}};
    std::ostringstream os;
    write_anchor_csv(os, anchors, 3);
    CHECK(os.str() == "i,j,k,class\n1,1,3,homologous\n1,6,3,spurious\n");
}
