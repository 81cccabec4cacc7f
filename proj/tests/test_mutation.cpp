#include <doctest.h>

#include <cmath>
#include <sstream>

#include "scew/mutation.hpp"
#include "scew/rng.hpp"
#include "scew/sequence.hpp"

using namespace scew;

namespace {

MutationParams even_params(double theta_T, double gamma = 0.5, int sigma = 4) {
    MutationParams p;
    p.theta_s = p.theta_d = p.theta_i = theta_T / 3.0;
    p.rho_i = gamma / 2.0;
    p.gamma = gamma;
    p.sigma = sigma;
    return p;
}

// the worked example: insert T left of 4, delete 5, substitute 6 and 7
EditScript worked_script() {
    EditScript script;
    script.p = 0;
    script.m_prime = 8;
    script.sigma = 4;
    script.records.resize(8);
    for (Index pos = 1; pos <= 8; ++pos) script.records[size_t(pos - 1)].pos = pos;
    script.records[3].ins = {3};   // T
    script.records[4].del = true;
    script.records[5].sub = 3;     // C -> T
    script.records[6].sub = 0;     // G -> A
    return script;
}

} // namespace

TEST_CASE("params validation") {
    MutationParams p = even_params(0.1);
    CHECK_NOTHROW(p.validate(true));

    SUBCASE("negative rate") {
        p.theta_s = -0.01;
        CHECK_THROWS_AS(p.validate(false), std::invalid_argument);
    }
    SUBCASE("total rate at one") {
        p.theta_s = p.theta_d = p.theta_i = 0.34;
        CHECK_THROWS_AS(p.validate(false), std::invalid_argument);
    }
    SUBCASE("strict theta ceiling") {
        p.theta_s = 0.159;
        p.theta_d = p.theta_i = 0.0;
        CHECK_THROWS_AS(p.validate(true), std::invalid_argument);
        CHECK_NOTHROW(p.validate(false));
    }
    SUBCASE("rho against gamma") {
        p.rho_i = p.gamma;
        CHECK_THROWS_AS(p.validate(true), std::invalid_argument);
        CHECK_NOTHROW(p.validate(false));
        p.rho_i = std::nextafter(p.gamma, 1.0);
        CHECK_THROWS_AS(p.validate(false), std::invalid_argument);
    }
    SUBCASE("gamma range") {
        p.gamma = 1.0;
        CHECK_THROWS_AS(p.validate(false), std::invalid_argument);
    }
    SUBCASE("alphabet size") {
        p.sigma = 1;
        CHECK_THROWS_AS(p.validate(false), std::invalid_argument);
    }
}

TEST_CASE("mutate is deterministic for a fixed seed") {
    Rng gen(5);
    const Sequence S = generate_reference(3000, 4, gen);
    const MutationParams p = even_params(0.12);
    Rng a(99), b(99);
    const SequencePair pa = mutate(S, 0, S.size(), p, a);
    const SequencePair pb = mutate(S, 0, S.size(), p, b);
    CHECK(pa.S_prime == pb.S_prime);
    CHECK(pa.script.records.size() == pb.script.records.size());
}

TEST_CASE("zero rates copy the generative region") {
    Rng gen(5);
    const Sequence S = generate_reference(200, 4, gen);
    MutationParams p;
    p.gamma = 0.5;
    p.rho_i = 0.25;
    p.sigma = 4;
    Rng rng(1);
    const SequencePair pair = mutate(S, 50, 100, p, rng);
    CHECK(pair.S_prime.size() == 100);
    for (Index j = 1; j <= 100; ++j) CHECK(pair.S_prime.at1(j) == S.at1(50 + j));
}

TEST_CASE("substitutions always change the letter") {
    Rng gen(6);
    const Sequence S = generate_reference(5000, 4, gen);
    MutationParams p;
    p.theta_s = 0.9;   // substitution-only channel
    p.gamma = 0.5;
    p.rho_i = 0.2;
    p.sigma = 4;
    Rng rng(2);
    const SequencePair pair = mutate(S, 0, S.size(), p, rng, false);
    REQUIRE(pair.S_prime.size() == S.size());
    Index changed = 0;
    for (const EditRecord& rec : pair.script.records) {
        if (rec.sub >= 0) {
            ++changed;
            CHECK(rec.sub != S.at1(rec.pos));
        }
    }
    // ~4500 expected; far from both 0 and n
    CHECK(changed > 4000);
    CHECK(changed < 5000);
}

TEST_CASE("substituted-to letters are uniform over the other three") {
    Rng gen(8);
    const Sequence S = generate_reference(60000, 4, gen);
    MutationParams p;
    p.theta_s = 0.9;
    p.gamma = 0.5;
    p.rho_i = 0.2;
    p.sigma = 4;
    Rng rng(3);
    const SequencePair pair = mutate(S, 0, S.size(), p, rng, false);
    // count substitutions of letter 0 by target letter
    Index counts[4] = {0, 0, 0, 0};
    Index total = 0;
    for (const EditRecord& rec : pair.script.records) {
        if (rec.sub >= 0 && S.at1(rec.pos) == 0) {
            ++counts[rec.sub];
            ++total;
        }
    }
    CHECK(counts[0] == 0);
    for (int c = 1; c < 4; ++c) {
        const double expected = double(total) / 3.0;
        CHECK(std::abs(double(counts[c]) - expected) < 5.0 * std::sqrt(expected));
    }
}

TEST_CASE("deletion wins over a drawn substitution") {
    Rng gen(9);
    const Sequence S = generate_reference(2000, 4, gen);
    MutationParams p;
    p.theta_s = 0.45;
    p.theta_d = 0.45;
    p.gamma = 0.5;
    p.rho_i = 0.2;
    p.sigma = 4;
    Rng rng(4);
    const SequencePair pair = mutate(S, 0, S.size(), p, rng, false);
    for (const EditRecord& rec : pair.script.records) {
        if (rec.del) CHECK(rec.sub == -1);
    }
}

TEST_CASE("insertions land left of their position") {
    // deterministic check through apply_script: one hand-built record
    const Sequence S = from_dna("AAAA");
    EditScript script;
    script.p = 0;
    script.m_prime = 4;
    script.sigma = 4;
    script.records.resize(4);
    for (Index pos = 1; pos <= 4; ++pos) script.records[size_t(pos - 1)].pos = pos;
    script.records[2].ins = {2, 2};   // GG inserted left of position 3
    CHECK(to_dna(apply_script(S, script)) == "AAGGAA");
}

TEST_CASE("insertion lengths are geometric from one") {
    Rng gen(10);
    const Sequence S = generate_reference(200000, 4, gen);
    MutationParams p;
    p.theta_i = 0.5;
    p.gamma = 0.6;
    p.rho_i = 0.5;
    p.sigma = 4;
    Rng rng(6);
    const SequencePair pair = mutate(S, 0, S.size(), p, rng, false);
    Index inserted_events = 0;
    double total_len = 0.0;
    for (const EditRecord& rec : pair.script.records) {
        if (!rec.ins.empty()) {
            ++inserted_events;
            total_len += double(rec.ins.size());
        }
    }
    const double event_rate = double(inserted_events) / double(S.size());
    CHECK(event_rate == doctest::Approx(0.5).epsilon(0.01));
    // mean length 1/(1-rho) = 2
    CHECK(total_len / double(inserted_events) == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("expected output length matches the channel") {
    // E[m] = m' * (1 - theta_d + theta_i/(1-rho))
    Rng gen(11);
    const Sequence S = generate_reference(300000, 4, gen);
    MutationParams p;
    p.theta_s = 0.05;
    p.theta_d = 0.06;
    p.theta_i = 0.04;
    p.gamma = 0.5;
    p.rho_i = 0.5;
    p.sigma = 4;
    Rng rng(7);
    const SequencePair pair = mutate(S, 0, S.size(), p, rng, false);
    const double expected = double(S.size()) * (1.0 - 0.06 + 0.04 / 0.5);
    CHECK(double(pair.S_prime.size()) == doctest::Approx(expected).epsilon(0.005));
}

TEST_CASE("worked example script replays to TACTTTAC") {
    const Sequence S = from_dna("TACTTCGC");
    const EditScript script = worked_script();
    CHECK(to_dna(apply_script(S, script)) == "TACTTTAC");
    CHECK(script.total_insertions() == 1);
    CHECK(script.total_deletions() == 1);
}

TEST_CASE("no-op insert plus delete leaves the string unchanged") {
    const Sequence S = from_dna("TAAG");
    EditScript script;
    script.p = 0;
    script.m_prime = 4;
    script.sigma = 4;
    script.records.resize(4);
    for (Index pos = 1; pos <= 4; ++pos) script.records[size_t(pos - 1)].pos = pos;
    script.records[1].ins = {0};   // A inserted left of position 2
    script.records[1].del = true;  // and position 2 (an A) deleted
    CHECK(to_dna(apply_script(S, script)) == "TAAG");
}

TEST_CASE("script text IO round trip") {
    Rng gen(12);
    const Sequence S = generate_reference(500, 4, gen);
    const MutationParams p = even_params(0.3);
    Rng rng(8);
    const SequencePair pair = mutate(S, 17, 400, p, rng, false);

    std::ostringstream os;
    write_script(os, pair.script);
    std::istringstream is(os.str());
    const EditScript back = read_script(is);

    CHECK(back.p == pair.script.p);
    CHECK(back.m_prime == pair.script.m_prime);
    CHECK(back.sigma == pair.script.sigma);
    REQUIRE(back.records.size() == pair.script.records.size());
    for (size_t idx = 0; idx < back.records.size(); ++idx) {
        CHECK(back.records[idx].pos == pair.script.records[idx].pos);
        CHECK(back.records[idx].ins == pair.script.records[idx].ins);
        CHECK(back.records[idx].del == pair.script.records[idx].del);
        CHECK(back.records[idx].sub == pair.script.records[idx].sub);
    }
    CHECK(apply_script(S, back) == pair.S_prime);
}

TEST_CASE("apply_script validates its inputs") {
    const Sequence S = from_dna("ACGT");
    EditScript script;
    script.p = 0;
    script.m_prime = 5;   // longer than S
    script.sigma = 4;
    script.records.resize(5);
    CHECK_THROWS_AS(apply_script(S, script), std::invalid_argument);

    script.m_prime = 4;
    script.records.resize(3);   // count mismatch
    CHECK_THROWS_AS(apply_script(S, script), std::invalid_argument);
}

TEST_CASE("mutate validates the region") {
    const Sequence S = from_dna("ACGTACGT");
    const MutationParams p = even_params(0.1);
    Rng rng(1);
    CHECK_THROWS_AS(mutate(S, -1, 4, p, rng), std::invalid_argument);
    CHECK_THROWS_AS(mutate(S, 0, 9, p, rng), std::invalid_argument);
    CHECK_THROWS_AS(mutate(S, 5, 4, p, rng), std::invalid_argument);
    CHECK_NOTHROW(mutate(S, 4, 4, p, rng));
}
