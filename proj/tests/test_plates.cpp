#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpath/plates.hpp"
#include "qpath/verify.hpp"

using namespace qpath;

static Vertex V(const std::string& s) { return Vertex::parse(s); }

TEST_CASE("choose_axis") {
    auto s1 = choose_axis(3, {{V("100"), V("000"), true}});
    CHECK(s1.axis == 1);
    auto s2 = choose_axis(4, {{V("0110"), V("0101"), true}});
    CHECK(s2.axis == 3);
    CHECK_THROWS_AS(choose_axis(3, {{V("000"), V("111"), false}}), NoAxisError);
    // co-location works when some coordinate agrees
    auto s3 = choose_axis(3, {{V("010"), V("011"), false}, {V("010"), V("100"), true}});
    CHECK(s3.axis == 1);
}

TEST_CASE("project embed round trip") {
    PlateSplit s(3, 2);
    auto [pl, u] = s.project(V("101"));
    CHECK(pl == Plate::Top);
    CHECK(u == V("11"));
    CHECK(s.embed(pl, u) == V("101"));
    PlateSplit s1(3, 1);
    auto [pl2, u2] = s1.project(V("110"));
    CHECK(pl2 == Plate::Bottom);
    CHECK(u2 == V("10"));
    for (int n = 2; n <= 8; ++n)
        for (int a = 1; a <= n; ++a) {
            PlateSplit sp(n, a);
            for (uint32_t b = 0; b < (1u << n); ++b) {
                Vertex v(n, b);
                auto [p, w] = sp.project(v);
                CHECK(sp.embed(p, w) == v);
            }
        }
}

TEST_CASE("lift path") {
    PlateSplit s(3, 2);
    Path q(V("00"), {1});
    Path f = s.lift_path(Plate::Top, q);
    CHECK(f.start == V("000"));
    CHECK(f.word == Word{1});
    CHECK(f.word.size() == q.word.size());
    // projecting each lifted vertex recovers the original sequence
    auto fv = path_vertices(f);
    auto qv = path_vertices(q);
    for (size_t i = 0; i < fv.size(); ++i)
        CHECK(s.project(fv[i]).second == qv[i]);
    Path g = s.lift_path(Plate::Bottom, Path(V("10"), {2}));
    CHECK(g.start == V("110"));
    CHECK(g.word == Word{3});
    CHECK(s.project_path(g) == Path(V("10"), {2}));
}

TEST_CASE("find_bridge deterministic and honest") {
    PlateSplit s(3, 3);
    Bridge b = find_bridge(s, Plate::Top, Color::Green, {V("000")});
    CHECK(b.top == V("110"));
    CHECK(b.bottom == V("111"));
    Bridge b2 = find_bridge(s, Plate::Top, Color::Green, {V("000")});
    CHECK(b2.top == b.top);
    CHECK_THROWS_AS(find_bridge(s, Plate::Top, Color::Green, {V("000"), V("110")}),
                    NoBridgeError);
    Bridge b3 = find_bridge(s, Plate::Bottom, Color::Red, {});
    CHECK(b3.bottom == V("001"));
    CHECK(b3.top == V("000"));
}

TEST_CASE("surgery splices a plate path through the other plate") {
    // 6-cycle on top of Q3 (axis 3): full top 4-cycle will do as donor
    PlateSplit s(3, 3);
    Path topcyc(V("000"), {1, 2, 1, 2});
    // cut at edge (000,100), route through bottom path 001 -> 101
    Path bottom(V("001"), {2, 1, 2});
    Path out = surgery(s, topcyc, V("000"), V("100"), bottom);
    CHECK(is_cycle(out));
    CHECK(verify_cycle(3, Fault(3, {}), out).ok);
    // reversed recipient is accepted too
    Path out2 = surgery(s, topcyc, V("000"), V("100"), reverse(bottom));
    CHECK(out2 == out);
    CHECK_THROWS_AS(surgery(s, topcyc, V("000"), V("110"), bottom), AssemblyError);
    CHECK_THROWS_AS(surgery(s, topcyc, V("000"), V("100"), Path(V("001"), {2})),
                    AssemblyError);
}
