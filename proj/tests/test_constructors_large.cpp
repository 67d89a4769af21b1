#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "qpath/constructors.hpp"
#include "qpath/oracle.hpp"
#include "qpath/verify.hpp"

using namespace qpath;

namespace {

Vertex V(const std::string& s) {
    Vertex v((int)s.size(), 0);
    for (char c : s) v.bits = (v.bits << 1) | (c == '1');
    return v;
}

void check_cover(int n, std::vector<Vertex> fault, std::vector<VertexPair> pairs,
                 const Covering& c) {
    Instance inst(n, Fault(n, fault), PairSet(n, pairs));
    auto res = verify_covering(inst, c);
    std::string why = res.problems.empty() ? "" : res.problems.front();
    CHECK_MESSAGE(res.ok, why);
}

// Hamiltonian path of one plate minus `del`, with the given ends.
void check_plate_path(const PlateSplit& split, const Path& p, const Vertex& del,
                      const Vertex& a, const Vertex& b) {
    auto vs = path_vertices(p);
    REQUIRE(vs.front() == a);
    REQUIRE(vs.back() == b);
    std::set<Vertex> seen(vs.begin(), vs.end());
    REQUIRE((int)seen.size() == (int)vs.size());
    REQUIRE((int)vs.size() == (1 << (split.dim - 1)) - 1);
    for (auto& v : vs) {
        REQUIRE(split.side(v) == split.side(a));
        REQUIRE(v != del);
    }
}

int path_index(const std::vector<Vertex>& vs, const Vertex& v) {
    for (size_t i = 0; i < vs.size(); ++i)
        if (vs[i] == v) return (int)i;
    return -1;
}

std::vector<Vertex> random_distinct(int n, int count, Color col, std::mt19937& rng,
                                    const std::vector<Vertex>& avoid = {}) {
    std::vector<Vertex> out;
    std::uniform_int_distribution<uint32_t> d(0, (1u << n) - 1);
    while ((int)out.size() < count) {
        Vertex v(n, d(rng));
        if (v.color() != col) continue;
        if (std::find(out.begin(), out.end(), v) != out.end()) continue;
        if (std::find(avoid.begin(), avoid.end(), v) != avoid.end()) continue;
        out.push_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("oriented shared edge: both plate paths traverse the bridged edge pair "
          "the same way") {
    std::mt19937 rng(2024);
    for (int n : {4, 5, 6}) {
        for (int rep = 0; rep < (n == 4 ? 300 : 120); ++rep) {
            PlateSplit split(n, 1 + (int)(rng() % n));
            std::uniform_int_distribution<uint32_t> d(0, (1u << n) - 1);
            Vertex r1(n, d(rng));
            Plate P1 = split.side(r1), P2 = other(P1);
            auto pick = [&](Plate p, Color c, std::vector<Vertex> avoid) {
                Vertex v;
                do
                    v = Vertex(n, d(rng));
                while (split.side(v) != p || v.color() != c ||
                       std::find(avoid.begin(), avoid.end(), v) != avoid.end());
                return v;
            };
            Color gc = r1.color() == Color::Red ? Color::Green : Color::Red;
            Vertex g1 = pick(P1, gc, {});
            Vertex g2 = pick(P1, gc, {g1});
            Vertex r2 = pick(P2, r1.color(), {});
            Vertex g3 = pick(P2, gc, {});
            Vertex g4 = pick(P2, gc, {g3});
            auto sh = oriented_shared_edge(n, split, r1, g1, g2, r2, g3, g4);
            check_plate_path(split, sh.gamma1, r1, g1, g2);
            check_plate_path(split, sh.gamma2, r2, g3, g4);
            Vertex ax = sh.a.flip(sh.x);
            Vertex av = split.partner(sh.a), avx = split.partner(ax);
            auto v1 = path_vertices(sh.gamma1), v2 = path_vertices(sh.gamma2);
            int i = path_index(v1, sh.a), j = path_index(v2, av);
            REQUIRE(i >= 0);
            REQUIRE(j >= 0);
            REQUIRE(i + 1 < (int)v1.size());
            REQUIRE(j + 1 < (int)v2.size());
            CHECK(v1[i + 1] == ax);
            CHECK(v2[j + 1] == avx);
        }
    }
}

TEST_CASE("two green pairs with two deletions: exhaustive in dimension four") {
    int n = 4;
    for (uint32_t b1 = 0; b1 < 16; ++b1)
        for (uint32_t b2 = b1 + 1; b2 < 16; ++b2) {
            Vertex r1(n, b1), r2(n, b2);
            if (r1.color() != r2.color()) continue;
            std::vector<Vertex> greens;
            for (uint32_t b = 0; b < 16; ++b)
                if (Vertex(n, b).color() != r1.color()) greens.push_back(Vertex(n, b));
            // all 4-subsets, all three pairings
            int m = (int)greens.size();
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    for (int c = b + 1; c < m; ++c)
                        for (int d = c + 1; d < m; ++d) {
                            int pairing[3][4] = {{a, b, c, d}, {a, c, b, d}, {a, d, b, c}};
                            for (auto& pr : pairing) {
                                Vertex g1 = greens[pr[0]], g2 = greens[pr[1]];
                                Vertex g3 = greens[pr[2]], g4 = greens[pr[3]];
                                auto cov =
                                    two_green_pairs_fault22(n, r1, r2, g1, g2, g3, g4);
                                check_cover(n, {r1, r2},
                                            {VertexPair(g1, g2), VertexPair(g3, g4)},
                                            cov);
                            }
                        }
        }
}

TEST_CASE("two green pairs with two deletions: random higher dimensions") {
    std::mt19937 rng(77);
    for (int n : {5, 6}) {
        for (int rep = 0; rep < 200; ++rep) {
            auto rs = random_distinct(n, 2, Color::Red, rng);
            auto gs = random_distinct(n, 4, Color::Green, rng);
            auto cov = two_green_pairs_fault22(n, rs[0], rs[1], gs[0], gs[1], gs[2],
                                               gs[3]);
            check_cover(n, rs, {VertexPair(gs[0], gs[1]), VertexPair(gs[2], gs[3])},
                        cov);
        }
    }
    CHECK_THROWS_AS(two_green_pairs_fault22(3, V("000"), V("011"), V("001"), V("010"),
                                            V("100"), V("111")),
                    ThresholdError);
    CHECK_THROWS_AS(two_green_pairs_fault22(5, V("00000"), V("00001"), V("00010"),
                                            V("00100"), V("01000"), V("10000")),
                    HypothesisError);
}

TEST_CASE("separated path: marked vertices keep along-path distance four") {
    auto run = [](int n, std::vector<Vertex> l, Vertex r) {
        Path p = separated_path(n, l, r);
        auto vs = path_vertices(p);
        REQUIRE(vs.front() == l.front());
        REQUIRE(vs.back() == l.back());
        std::set<Vertex> seen(vs.begin(), vs.end());
        REQUIRE((int)seen.size() == (int)vs.size());
        REQUIRE((int)vs.size() == (1 << n) - 1);
        REQUIRE(!seen.count(r));
        std::vector<int> idx;
        for (auto& g : l) {
            int i = path_index(vs, g);
            REQUIRE(i >= 0);
            idx.push_back(i);
        }
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = i + 1; j < idx.size(); ++j)
                CHECK(std::abs(idx[i] - idx[j]) >= 4);
    };
    // small dimensions, exhaustive over sorted marked sets
    for (int n : {3, 4}) {
        for (uint32_t rb = 0; rb < (1u << n); ++rb) {
            Vertex r(n, rb);
            std::vector<Vertex> opp;
            for (uint32_t b = 0; b < (1u << n); ++b)
                if (Vertex(n, b).color() != r.color()) opp.push_back(Vertex(n, b));
            int m = (int)opp.size();
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b) {
                    run(n, {opp[a], opp[b]}, r);
                    if (n == 4)
                        for (int c = b + 1; c < m; ++c) {
                            run(n, {opp[a], opp[b], opp[c]}, r);
                            run(n, {opp[b], opp[a], opp[c]}, r); // unordered middle
                        }
                }
        }
    }
    std::mt19937 rng(5);
    for (int n : {5, 6})
        for (int k = 2; k <= n - 1; ++k)
            for (int rep = 0; rep < 60; ++rep) {
                auto r = random_distinct(n, 1, Color::Red, rng);
                auto l = random_distinct(n, k, Color::Green, rng);
                run(n, l, r[0]);
            }
    CHECK_THROWS_AS(separated_path(4, {V("0001"), V("0010"), V("0100"), V("0111")},
                                   V("0000")),
                    HypothesisError);
    CHECK_THROWS_AS(separated_path(4, {V("0001")}, V("0000")), HypothesisError);
}

TEST_CASE("cycle avoiding a neutral fault of mass six") {
    std::mt19937 rng(99);
    auto run = [](int n, std::vector<Vertex> fv) {
        Fault f(n, fv);
        Path cyc = cycle_with_neutral_fault(n, f);
        auto res = verify_cycle(n, f, cyc);
        std::string why = res.problems.empty() ? "" : res.problems.front();
        CHECK_MESSAGE(res.ok, why);
    };
    // fixed instances spreading the minority color across the split
    run(5, {V("00000"), V("00011"), V("01111"), V("00001"), V("00010"), V("00100")});
    run(5, {V("00000"), V("00011"), V("01111"), V("00001"), V("00010"), V("10000")});
    run(5, {V("00000"), V("00011"), V("01111"), V("00001"), V("11100"), V("10000")});
    run(5, {V("00000"), V("00101"), V("01111"), V("10000"), V("11100"), V("11111")});
    for (int n : {5, 6}) {
        for (int rep = 0; rep < (n == 5 ? 500 : 100); ++rep) {
            auto rs = random_distinct(n, 3, Color::Red, rng);
            auto gs = random_distinct(n, 3, Color::Green, rng);
            std::vector<Vertex> fv = rs;
            fv.insert(fv.end(), gs.begin(), gs.end());
            run(n, fv);
        }
    }
    CHECK_THROWS_AS(cycle_with_neutral_fault(
                        4, Fault(4, {V("0000"), V("0011"), V("0101"), V("0001"),
                                     V("0010"), V("0111")})),
                    ThresholdError);
}

TEST_CASE("neutral terminal pair around a mass-four fault") {
    std::mt19937 rng(404);
    for (int n : {5, 6}) {
        for (int rep = 0; rep < (n == 5 ? 400 : 100); ++rep) {
            auto rs = random_distinct(n, 3, Color::Red, rng);
            auto gs = random_distinct(n, 3, Color::Green, rng);
            Vertex r = rs[2], g = gs[2];
            Path p = neutral_path_fault4(n, rs[0], rs[1], gs[0], gs[1], r, g);
            check_cover(n, {rs[0], rs[1], gs[0], gs[1]}, {VertexPair(r, g)}, {p});
        }
    }
    // the four-dimensional obstruction stays below the bound
    CHECK_THROWS_AS(neutral_path_fault4(4, V("1000"), V("1110"), V("1001"), V("1111"),
                                        V("0100"), V("0011")),
                    ThresholdError);
    CHECK_THROWS_AS(neutral_path_fault4(5, V("00000"), V("00011"), V("00001"),
                                        V("00010"), V("00111"), V("01011")),
                    HypothesisError);
}

TEST_CASE("three neutral pairs covered at once") {
    std::mt19937 rng(31);
    for (int n : {5, 6}) {
        for (int rep = 0; rep < (n == 5 ? 400 : 100); ++rep) {
            auto rs = random_distinct(n, 3, Color::Red, rng);
            auto gs = random_distinct(n, 3, Color::Green, rng);
            std::vector<VertexPair> pairs{VertexPair(rs[0], gs[0]),
                                          VertexPair(rs[1], gs[1]),
                                          VertexPair(rs[2], gs[2])};
            auto cov = three_neutral_pairs(n, pairs);
            check_cover(n, {}, pairs, cov);
        }
    }
    CHECK_THROWS_AS(three_neutral_pairs(
                        4, {VertexPair(V("0000"), V("0111")),
                            VertexPair(V("0101"), V("0010")),
                            VertexPair(V("0110"), V("0001"))}),
                    ThresholdError);
    CHECK_THROWS_AS(three_neutral_pairs(
                        5, {VertexPair(V("00000"), V("00011")),
                            VertexPair(V("00101"), V("00110")),
                            VertexPair(V("01001"), V("01010"))}),
                    HypothesisError);
}

TEST_CASE("larger builders are deterministic") {
    auto f = Fault(5, {V("00000"), V("00011"), V("01111"), V("00001"), V("00010"),
                       V("00100")});
    TraceNode t1, t2;
    Path c1 = cycle_with_neutral_fault(5, f, &t1);
    Path c2 = cycle_with_neutral_fault(5, f, &t2);
    CHECK(c1 == c2);
    CHECK(t1 == t2);
    auto cov1 = two_green_pairs_fault22(5, V("00000"), V("00011"), V("00001"),
                                        V("00010"), V("00111"), V("01000"));
    auto cov2 = two_green_pairs_fault22(5, V("00000"), V("00011"), V("00001"),
                                        V("00010"), V("00111"), V("01000"));
    CHECK(cov1 == cov2);
    std::vector<VertexPair> pairs{VertexPair(V("00000"), V("00111")),
                                  VertexPair(V("00011"), V("01000")),
                                  VertexPair(V("00101"), V("11111"))};
    CHECK(three_neutral_pairs(5, pairs) == three_neutral_pairs(5, pairs));
}

TEST_CASE("two green pairs with four deletions: random dimensions five to seven") {
    std::mt19937 rng(4211);
    for (int n = 5; n <= 7; ++n) {
        int iters = n == 5 ? 250 : n == 6 ? 60 : 12;
        for (int it = 0; it < iters; ++it) {
            Color rc = it % 2 ? Color::Red : Color::Green;
            Color gc = it % 2 ? Color::Green : Color::Red;
            auto rs = random_distinct(n, 3, rc, rng);
            auto gs = random_distinct(n, 5, gc, rng);
            auto cov = two_green_pairs_fault42(n, rs[0], rs[1], rs[2], gs[0], gs[1],
                                               gs[2], gs[3], gs[4]);
            REQUIRE(cov.size() == 2);
            CHECK(path_vertices(cov[0]).front() == gs[1]);
            CHECK(path_vertices(cov[1]).front() == gs[3]);
            check_cover(n, {rs[0], rs[1], rs[2], gs[0]},
                        {VertexPair(gs[1], gs[2]), VertexPair(gs[3], gs[4])}, cov);
        }
    }
}

TEST_CASE("charged path with five deletions: random dimensions five to seven") {
    std::mt19937 rng(5151);
    for (int n = 5; n <= 7; ++n) {
        int iters = n == 5 ? 250 : n == 6 ? 60 : 12;
        for (int it = 0; it < iters; ++it) {
            Color rc = it % 2 ? Color::Red : Color::Green;
            Color gc = it % 2 ? Color::Green : Color::Red;
            auto rs = random_distinct(n, 3, rc, rng);
            auto gs = random_distinct(n, 4, gc, rng);
            Path p = charged_path_fault51(n, rs[0], rs[1], rs[2], gs[0], gs[1],
                                          gs[2], gs[3]);
            CHECK(path_vertices(p).front() == gs[2]);
            check_cover(n, {rs[0], rs[1], rs[2], gs[0], gs[1]},
                        {VertexPair(gs[2], gs[3])}, {p});
        }
    }
}

TEST_CASE("three green pairs with three deletions: random dimensions six and seven") {
    std::mt19937 rng(3333);
    for (int n = 6; n <= 7; ++n) {
        int iters = n == 6 ? 80 : 12;
        for (int it = 0; it < iters; ++it) {
            Color rc = it % 2 ? Color::Red : Color::Green;
            Color gc = it % 2 ? Color::Green : Color::Red;
            auto rs = random_distinct(n, 3, rc, rng);
            auto gs = random_distinct(n, 6, gc, rng);
            auto cov = three_green_pairs_fault33(n, rs[0], rs[1], rs[2], gs[0], gs[1],
                                                 gs[2], gs[3], gs[4], gs[5]);
            REQUIRE(cov.size() == 3);
            CHECK(path_vertices(cov[0]).front() == gs[0]);
            CHECK(path_vertices(cov[1]).front() == gs[2]);
            CHECK(path_vertices(cov[2]).front() == gs[4]);
            check_cover(n, rs,
                        {VertexPair(gs[0], gs[1]), VertexPair(gs[2], gs[3]),
                         VertexPair(gs[4], gs[5])},
                        cov);
        }
    }
}

TEST_CASE("cycle avoiding a neutral fault of mass eight") {
    std::mt19937 rng(8888);
    for (int n = 6; n <= 7; ++n) {
        int iters = n == 6 ? 60 : 12;
        for (int it = 0; it < iters; ++it) {
            auto rs = random_distinct(n, 4, Color::Red, rng);
            auto gs = random_distinct(n, 4, Color::Green, rng);
            std::vector<Vertex> all = rs;
            all.insert(all.end(), gs.begin(), gs.end());
            Fault f(n, all);
            Path cyc = cycle_with_neutral_fault(n, f);
            auto res = verify_cycle(n, f, cyc);
            std::string why = res.problems.empty() ? "" : res.problems.front();
            CHECK_MESSAGE(res.ok, why);
        }
    }
}

TEST_CASE("free terminal pairs in dimension four: fixed fault, every pair choice") {
    Fault f(4, {V("0000"), V("0001")});
    std::vector<Vertex> reds, greens;
    for (uint32_t b = 0; b < 16; ++b) {
        Vertex v(4, b);
        if (f.contains(v)) continue;
        (v.red() ? reds : greens).push_back(v);
    }
    for (auto& r1 : reds)
        for (auto& g1 : greens)
            for (auto& r2 : reds)
                for (auto& g2 : greens) {
                    if (r1 == r2 || g1 == g2) continue;
                    auto cov = q4_free_two_neutral_pairs(f, r1, g1, r2, g2);
                    REQUIRE(cov.size() == 2);
                    CHECK(path_vertices(cov[0]).front() == r1);
                    CHECK(path_vertices(cov[1]).front() == r2);
                    check_cover(4, {V("0000"), V("0001")},
                                {VertexPair(r1, g1), VertexPair(r2, g2)}, cov);
                }
}

TEST_CASE("free terminal pairs in dimension four: random faults") {
    std::mt19937 rng(1616);
    for (int it = 0; it < 400; ++it) {
        auto fr = random_distinct(4, 1, Color::Red, rng);
        auto fg = random_distinct(4, 1, Color::Green, rng);
        Fault f(4, {fr[0], fg[0]});
        auto rs = random_distinct(4, 2, Color::Red, rng, {fr[0]});
        auto gs = random_distinct(4, 2, Color::Green, rng, {fg[0]});
        auto cov = q4_free_two_neutral_pairs(f, rs[0], gs[0], rs[1], gs[1]);
        check_cover(4, {fr[0], fg[0]},
                    {VertexPair(rs[0], gs[0]), VertexPair(rs[1], gs[1])}, cov);
    }
}

TEST_CASE("high-mass builders reject bad hypotheses") {
    CHECK_THROWS_AS(two_green_pairs_fault42(3, V("001"), V("010"), V("100"), V("000"),
                                            V("011"), V("101"), V("110"), V("111")),
                    ThresholdError);
    CHECK_THROWS_AS(charged_path_fault51(4, V("0001"), V("0010"), V("0100"),
                                         V("0000"), V("0011"), V("0101"), V("0110")),
                    ThresholdError);
    CHECK_THROWS_AS(three_green_pairs_fault33(5, V("00001"), V("00010"), V("00100"),
                                              V("00000"), V("00011"), V("00101"),
                                              V("00110"), V("01001"), V("01010")),
                    ThresholdError);
    // mixed parities among the three main deletions
    CHECK_THROWS_AS(two_green_pairs_fault42(5, V("00001"), V("00010"), V("00011"),
                                            V("00000"), V("00101"), V("00110"),
                                            V("01001"), V("01010")),
                    HypothesisError);
    // an end that repeats
    CHECK_THROWS_AS(charged_path_fault51(5, V("00001"), V("00010"), V("00100"),
                                         V("00011"), V("00101"), V("00110"),
                                         V("00110")),
                    HypothesisError);
    // deleted end
    CHECK_THROWS_AS(q4_free_two_neutral_pairs(Fault(4, {V("0000"), V("0001")}),
                                              V("0010"), V("0001"), V("0100"),
                                              V("0111")),
                    HypothesisError);
}

TEST_CASE("high-mass builders are deterministic") {
    auto c1 = two_green_pairs_fault42(5, V("00001"), V("00010"), V("00100"),
                                      V("00000"), V("00011"), V("00101"), V("00110"),
                                      V("01001"));
    auto c2 = two_green_pairs_fault42(5, V("00001"), V("00010"), V("00100"),
                                      V("00000"), V("00011"), V("00101"), V("00110"),
                                      V("01001"));
    CHECK(c1 == c2);
    std::vector<Vertex> f8{V("000001"), V("000010"), V("000100"), V("001000"),
                           V("000000"), V("000011"), V("000101"), V("000110")};
    Fault f(6, f8);
    CHECK(cycle_with_neutral_fault(6, f) == cycle_with_neutral_fault(6, f));
}
