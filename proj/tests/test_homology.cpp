#include <doctest.h>

#include <algorithm>

#include "scew/homology.hpp"
#include "scew/mutation.hpp"
#include "scew/rng.hpp"
#include "scew/sequence.hpp"

using namespace scew;

namespace {

EditScript blank_script(Index p, Index m_prime) {
    EditScript script;
    script.p = p;
    script.m_prime = m_prime;
    script.sigma = 4;
    script.records.resize(size_t(m_prime));
    for (Index j = 1; j <= m_prime; ++j) script.records[size_t(j - 1)].pos = p + j;
    return script;
}

EditScript worked_script() {
    EditScript script = blank_script(0, 8);
    script.records[3].ins = {3};
    script.records[4].del = true;
    script.records[5].sub = 3;
    script.records[6].sub = 0;
    return script;
}

} // namespace

TEST_CASE("worked example path and correspondence") {
    const EditScript script = worked_script();
    const HomologousPath path = build_homologous_path(script);

    const std::vector<Point> expected = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {3, 4},
                                         {4, 5}, {5, 5}, {6, 6}, {7, 7}, {8, 8}};
    CHECK(path.points == expected);
    CHECK(path.p == 0);
    CHECK(path.m_prime == 8);
    CHECK(path.m == 8);

    const CorrespondenceMap f = correspondence(path, script, 8);
    CHECK(f.forward(1) == 1);
    CHECK(f.forward(2) == 2);
    CHECK(f.forward(3) == 4);
    CHECK(f.forward(4) == 5);
    CHECK(f.forward(5) == 0);   // deleted
    CHECK(f.forward(6) == 6);
    CHECK(f.forward(7) == 7);
    CHECK(f.forward(8) == 8);

    CHECK(f.inverse(4) == 3);
    CHECK(f.inverse(5) == 4);
    CHECK(f.inverse(3) == 0);   // only reachable through the insertion kink
    CHECK(f.inverse(1) == 1);
}

TEST_CASE("no-op insert plus delete gives the kinked path") {
    EditScript script = blank_script(0, 4);
    script.records[1].ins = {0};
    script.records[1].del = true;
    const HomologousPath path = build_homologous_path(script);
    const std::vector<Point> expected = {{0, 0}, {1, 1}, {1, 2}, {2, 2}, {3, 3}, {4, 4}};
    CHECK(path.points == expected);
}

TEST_CASE("identity script gives the main diagonal") {
    const EditScript script = blank_script(10, 6);
    const HomologousPath path = build_homologous_path(script);
    REQUIRE(path.points.size() == 7);
    for (Index t = 0; t <= 6; ++t) {
        CHECK(path.points[size_t(t)].x == 10 + t);
        CHECK(path.points[size_t(t)].y == t);
    }
}

TEST_CASE("four step cases") {
    SUBCASE("insertion only") {
        EditScript script = blank_script(0, 2);
        script.records[0].ins = {1, 2};   // two letters left of position 1
        const HomologousPath path = build_homologous_path(script);
        const std::vector<Point> expected = {{0, 0}, {0, 1}, {0, 2}, {1, 3}, {2, 4}};
        CHECK(path.points == expected);
    }
    SUBCASE("deletion only") {
        EditScript script = blank_script(0, 2);
        script.records[0].del = true;
        const HomologousPath path = build_homologous_path(script);
        const std::vector<Point> expected = {{0, 0}, {1, 0}, {2, 1}};
        CHECK(path.points == expected);
    }
    SUBCASE("insertion and deletion together") {
        EditScript script = blank_script(0, 2);
        script.records[0].ins = {1};
        script.records[0].del = true;
        const HomologousPath path = build_homologous_path(script);
        const std::vector<Point> expected = {{0, 0}, {0, 1}, {1, 1}, {2, 2}};
        CHECK(path.points == expected);
    }
}

TEST_CASE("path structure holds on random scripts") {
    Rng gen(21);
    for (int rep = 0; rep < 50; ++rep) {
        const Index n = 400;
        const Sequence S = generate_reference(n, 4, gen);
        MutationParams p;
        p.theta_s = 0.08;
        p.theta_d = 0.10;
        p.theta_i = 0.12;
        p.gamma = 0.7;
        p.rho_i = 0.5;
        p.sigma = 4;
        const Index m_prime = 300;
        const Index off = gen.uniform_int(0, n - m_prime);
        const SequencePair pair = mutate(S, off, m_prime, p, gen, false);
        const HomologousPath path = build_homologous_path(pair.script);

        REQUIRE(!path.points.empty());
        CHECK(path.points.front() == Point{off, 0});
        CHECK(path.points.back() == Point{off + m_prime, pair.S_prime.size()});
        CHECK(std::is_sorted(path.points.begin(), path.points.end()));

        for (size_t t = 1; t < path.points.size(); ++t) {
            const Index dx = path.points[t].x - path.points[t - 1].x;
            const Index dy = path.points[t].y - path.points[t - 1].y;
            const bool unit_step = (dx == 0 && dy == 1) || (dx == 1 && dy == 0) ||
                                   (dx == 1 && dy == 1);
            CHECK(unit_step);
        }

        // membership agrees with a linear scan
        for (int probe = 0; probe < 100; ++probe) {
            const Point q{gen.uniform_int(off, off + m_prime),
                          gen.uniform_int(0, pair.S_prime.size())};
            const bool linear =
                std::find(path.points.begin(), path.points.end(), q) != path.points.end();
            CHECK(path.contains(q) == linear);
        }
    }
}

TEST_CASE("correspondence letters survive a deletion-only channel") {
    // without insertions the top of every surviving column is its own
    // diagonal step, so the corresponding letters must agree
    Rng gen(22);
    for (int rep = 0; rep < 20; ++rep) {
        const Index n = 500;
        const Sequence S = generate_reference(n, 4, gen);
        MutationParams p;
        p.theta_d = 0.15;
        p.sigma = 4;
        const SequencePair pair = mutate(S, 0, n, p, gen, false);
        const HomologousPath path = build_homologous_path(pair.script);
        const CorrespondenceMap f = correspondence(path, pair.script, n);

        for (Index x = 1; x <= n; ++x) {
            const EditRecord& rec = pair.script.records[size_t(x - 1)];
            if (rec.del) {
                CHECK(f.forward(x) == 0);
            } else {
                const Index y = f.forward(x);
                REQUIRE(y >= 1);
                CHECK(pair.S_prime.at1(y) == S.at1(x));
                CHECK(f.inverse(y) == x);
            }
        }
    }
}

TEST_CASE("correspondence is the top of each surviving column") {
    // under insertions f(x) caps the column with the last inserted letter,
    // exactly as in the worked example where f(3) = 4
    Rng gen(23);
    for (int rep = 0; rep < 20; ++rep) {
        const Index n = 300;
        const Sequence S = generate_reference(n, 4, gen);
        MutationParams p;
        p.theta_d = 0.12;
        p.theta_i = 0.10;
        p.gamma = 0.6;
        p.rho_i = 0.4;
        p.sigma = 4;
        const SequencePair pair = mutate(S, 0, n, p, gen, false);
        const HomologousPath path = build_homologous_path(pair.script);
        const CorrespondenceMap f = correspondence(path, pair.script, n);

        for (Index x = 1; x <= n; ++x) {
            Index top = -1;
            for (const Point& q : path.points)
                if (q.x == x) top = std::max(top, q.y);
            REQUIRE(top >= 0);
            const EditRecord& rec = pair.script.records[size_t(x - 1)];
            if (rec.del) {
                CHECK(f.forward(x) == 0);
            } else {
                CHECK(f.forward(x) == top);
                CHECK(f.inverse(top) == x);
            }
        }
    }
}

TEST_CASE("index bounds on the lookup helpers") {
    const EditScript script = blank_script(0, 3);
    const HomologousPath path = build_homologous_path(script);
    const CorrespondenceMap f = correspondence(path, script, 3);
    CHECK(f.forward(0) == 0);
    CHECK(f.forward(4) == 0);
    CHECK(f.inverse(0) == 0);
    CHECK(f.inverse(4) == 0);

    CHECK(path.lower_bound_x(0) == 0);
    CHECK(path.upper_bound_x(3) == path.points.size());
    CHECK(path.lower_bound_y(10) == path.points.size());
}
