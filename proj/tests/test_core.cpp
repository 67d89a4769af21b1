#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpath/core.hpp"
#include "qpath/oracle.hpp"

using namespace qpath;

static Vertex V(const std::string& s) { return Vertex::parse(s); }

TEST_CASE("parity and color") {
    CHECK(V("000").color() == Color::Green);
    CHECK(V("111").color() == Color::Red);
    CHECK(V("1010").color() == Color::Green);
    CHECK(V("1").red());
}

TEST_CASE("serialization round trip and coordinate order") {
    Vertex v = V("0110");
    CHECK(v.str() == "0110");
    CHECK(v.coord(1) == 0);
    CHECK(v.coord(2) == 1);
    CHECK(v.coord(3) == 1);
    CHECK(v.coord(4) == 0);
    // coordinate 1 is the most significant bit
    CHECK(V("1000").bits == 8);
    CHECK(V("0001").bits == 1);
    CHECK_THROWS_AS(Vertex::parse("01012"), RangeError);
    CHECK_THROWS_AS(Vertex::parse(std::string(25, '0')), RangeError);
}

TEST_CASE("antipode and distance") {
    for (int n = 1; n <= 10; ++n)
        for (uint32_t b = 0; b < (1u << n); b += (n > 6 ? 13 : 1)) {
            Vertex v(n, b % (1u << n));
            CHECK(distance(v, v.antipode()) == n);
            bool flips = v.color() != v.antipode().color();
            CHECK(flips == (n % 2 == 1));
        }
    CHECK(adjacent(V("000"), V("001")));
    CHECK(!adjacent(V("000"), V("011")));
    CHECK(diff_letter(V("000"), V("100")) == 1);
    CHECK(diff_letter(V("0100"), V("0110")) == 3);
}

TEST_CASE("fault mass and charge") {
    Fault f0(3, {});
    CHECK(f0.mass() == 0);
    CHECK(f0.charge() == 0);
    Fault f1(3, {V("000"), V("111")});
    CHECK(f1.charge() == 0);
    CHECK(f1.neutral());
    Fault f2(3, {V("100"), V("010")});
    CHECK(f2.charge() == 2);
    CHECK_THROWS_AS(Fault(3, {V("000"), V("000")}), RangeError);
}

TEST_CASE("pair classification") {
    VertexPair p1(V("001"), V("011"));
    CHECK(p1.neutral());
    VertexPair p2(V("100"), V("010"));
    CHECK(p2.charged());
    CHECK(p2.charge_color() == Color::Red);
    VertexPair p3(V("000"), V("110"));
    CHECK(p3.charge_color() == Color::Green);
    PairSet ps(3, {p1, p2});
    CHECK(ps.neutral_count() == 1);
    CHECK(ps.red_pairs() == 1);
    CHECK(ps.green_pairs() == 0);
    CHECK_THROWS_AS(PairSet(3, {p1, VertexPair(V("001"), V("111"))}), RangeError);
}

TEST_CASE("balance") {
    // one red and one green deleted, one neutral pair: both sides zero
    Instance i1(3, Fault(3, {V("100"), V("011")}),
                PairSet(3, {VertexPair(V("010"), V("110"))}));
    CHECK(is_balanced(i1));
    // same fault, one green pair: 0 != 1
    Instance i2(3, Fault(3, {V("100"), V("011")}),
                PairSet(3, {VertexPair(V("000"), V("110"))}));
    CHECK(!is_balanced(i2));
    Instance i3(3, Fault(3, {V("100"), V("010")}),
                PairSet(3, {VertexPair(V("000"), V("110")), VertexPair(V("011"), V("101"))}));
    CHECK(is_balanced(i3)); // two reds deleted, two green pairs
    Instance i4(3, Fault(3, {V("100"), V("010")}),
                PairSet(3, {VertexPair(V("001"), V("111"))}));
    CHECK(!is_balanced(i4)); // red pair against red-heavy fault
    CHECK_THROWS_AS(is_balanced(Instance(
                        3, Fault(3, {V("100")}),
                        PairSet(3, {VertexPair(V("100"), V("110"))}))),
                    OverlapError);
}

TEST_CASE("capacity") {
    CHECK(capacity_ok(2, {2, 0, 1, 0}));
    CHECK(capacity_ok(1, {0, 0, 1, 0}));
    CHECK(!capacity_ok(2, {4, 0, 1, 0}));
}

TEST_CASE("b_set both shapes") {
    auto bs1 = b_set(V("100"), V("111"));
    REQUIRE(bs1.size() == 1);
    CHECK(bs1[0] == VertexPair(V("011"), V("000")));
    auto bs2 = b_set(V("100"), V("011"));
    REQUIRE(bs2.size() == 3);
    CHECK(in_b_set(V("100"), V("011"), V("000"), V("111")));
    CHECK(in_b_set(V("100"), V("011"), V("010"), V("101")));
    CHECK(in_b_set(V("100"), V("011"), V("001"), V("110")));
    CHECK(!in_b_set(V("100"), V("011"), V("100"), V("011")));
    auto bs3 = b_set(V("111"), V("000"));
    CHECK(bs3.size() == 3);
    for (auto& p : bs3) CHECK(p.b == p.a.antipode());
    CHECK_THROWS_AS(b_set(V("1000"), V("0111")), DimensionError);
}

TEST_CASE("b_set matches search infeasibility exhaustively") {
    for (uint32_t rb = 0; rb < 8; ++rb)
        for (uint32_t gb = 0; gb < 8; ++gb) {
            Vertex r(3, rb), g(3, gb);
            if (!r.red() || !g.green()) continue;
            for (uint32_t r1b = 0; r1b < 8; ++r1b)
                for (uint32_t g1b = 0; g1b < 8; ++g1b) {
                    Vertex r1(3, r1b), g1(3, g1b);
                    if (!r1.red() || !g1.green() || r1 == r || g1 == g) continue;
                    Instance inst(3, Fault(3, {r, g}),
                                  PairSet(3, {VertexPair(r1, g1)}));
                    auto res = oracle_solve(inst);
                    bool feas = res.verdict == Verdict::Feasible;
                    CHECK(feas == !in_b_set(r, g, r1, g1));
                }
        }
}

TEST_CASE("neighbor formulas") {
    CHECK(cluster_neighbor_count(3, 2) == 4);
    CHECK(cluster_neighbor_count(5, 1) == 5);
    CHECK(cluster_neighbor_count(4, 4) == 7);
    CHECK(isoperimetric_lower_bound(3, 2) == 4);
    CHECK(isoperimetric_lower_bound(6, 1) == 6);
    CHECK(isoperimetric_lower_bound(4, 3) == 7);
    CHECK_THROWS_AS(cluster_neighbor_count(3, 4), RangeError);
    CHECK(neighbor_set({V("00")}).size() == 2);
    CHECK(neighbor_set({}).empty());
    auto ns = neighbor_set({V("100"), V("010")});
    CHECK(ns.size() == 4);
    CHECK(ns.count(V("000")) == 1);
    CHECK(ns.count(V("110")) == 1);
}

TEST_CASE("cluster formula equals brute force for subsets of a neighborhood") {
    for (int n = 2; n <= 5; ++n) {
        Vertex r(n, 0);
        auto nb = neighbors(r);
        for (uint32_t s = 1; s < (1u << n); ++s) {
            std::vector<Vertex> a;
            for (int i = 0; i < n; ++i)
                if (s >> i & 1) a.push_back(nb[i]);
            CHECK((long long)neighbor_set(a).size() ==
                  cluster_neighbor_count(n, (int)a.size()));
        }
    }
}

TEST_CASE("color flip automorphism swaps colors") {
    for (uint32_t b = 0; b < 16; ++b) {
        Vertex v(4, b);
        CHECK(color_flip(v).color() == opposite(v.color()));
    }
}
