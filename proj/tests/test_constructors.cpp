#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpath/constructors.hpp"
#include "qpath/oracle.hpp"
#include "qpath/verify.hpp"

using namespace qpath;

static Vertex V(const std::string& s) { return Vertex::parse(s); }

static void check_one(int n, std::vector<Vertex> fault, const Vertex& a, const Vertex& b,
                      const Path& p) {
    Instance inst(n, Fault(n, std::move(fault)), PairSet(n, {VertexPair(a, b)}));
    auto vr = verify_covering(inst, {p});
    CHECK_MESSAGE(vr.ok, vr.message());
}

static void check_two(int n, std::vector<Vertex> fault, const VertexPair& p1,
                      const VertexPair& p2, const Covering& c) {
    Instance inst(n, Fault(n, std::move(fault)), PairSet(n, {p1, p2}));
    auto vr = verify_covering(inst, c);
    CHECK_MESSAGE(vr.ok, vr.message());
}

static bool has_edge(const Path& p, const Vertex& u, const Vertex& w) {
    auto vs = path_vertices(p);
    for (size_t i = 0; i + 1 < vs.size(); ++i)
        if ((vs[i] == u && vs[i + 1] == w) || (vs[i] == w && vs[i + 1] == u)) return true;
    return false;
}

static int cycle_gap(const Path& cyc, const Vertex& a, const Vertex& b) {
    int i = find_vertex(cyc, a), j = find_vertex(cyc, b);
    REQUIRE(i >= 0);
    REQUIRE(j >= 0);
    int len = cyc.length();
    int d = std::abs(i - j);
    return std::min(d, len - d);
}

TEST_CASE("lemma metadata") {
    CHECK(threshold(LemmaId::HAVEL) == 1);
    CHECK(threshold(LemmaId::DVORAK) == 2);
    CHECK(threshold(LemmaId::L1101) == 2);
    CHECK(threshold(LemmaId::CYC2) == 3);
    CHECK(threshold(LemmaId::NPF2) == 4);
    CHECK(threshold(LemmaId::CHG2) == 4);
    CHECK(threshold(LemmaId::MIX) == 4);
    CHECK(threshold(LemmaId::CHG31) == 4);
    CHECK(threshold(LemmaId::GG22) == 4);
    CHECK(threshold(LemmaId::Q4FREE) == 4);
    CHECK(threshold(LemmaId::CYC4) == 4);
    CHECK(threshold(LemmaId::CYC6) == 5);
    CHECK(threshold(LemmaId::NPF4) == 5);
    CHECK(threshold(LemmaId::TRIPLE) == 5);
    CHECK(threshold(LemmaId::GG42) == 5);
    CHECK(threshold(LemmaId::CHG51) == 5);
    CHECK(threshold(LemmaId::GGG33) == 6);
    CHECK(threshold(LemmaId::CYC8) == 6);
    CHECK(lemma_signature(LemmaId::HAVEL) == Signature{0, 0, 1, 0});
    CHECK(lemma_signature(LemmaId::NPF2) == Signature{2, 0, 1, 0});
    CHECK(lemma_signature(LemmaId::GGG33) == Signature{3, 3, 0, 3});
    CHECK(!lemma_signature(LemmaId::CYC4).has_value());
    CHECK(std::string(lemma_name(LemmaId::DVORAK)) == "dvorak");
}

TEST_CASE("hamiltonian path between opposite parities") {
    for (int n = 1; n <= 5; ++n)
        for (uint32_t a = 0; a < (1u << n); ++a)
            for (uint32_t b = 0; b < (1u << n); ++b) {
                Vertex r(n, a), g(n, b);
                if (r.color() == g.color()) continue;
                Path p = havel_path(n, r, g);
                CHECK(p.start == r);
                CHECK(endpoint(p) == g);
                check_one(n, {}, r, g, p);
            }
    CHECK_THROWS_AS(havel_path(2, V("00"), V("11")), HypothesisError);
    CHECK_THROWS_AS(laceable_path(1, V("0"), V("1"), V("1")), ThresholdError);
}

TEST_CASE("one deleted vertex, path between its opposite parity class") {
    for (int n = 2; n <= 5; ++n)
        for (uint32_t d = 0; d < (1u << n); ++d)
            for (uint32_t a = 0; a < (1u << n); ++a)
                for (uint32_t b = a + 1; b < (1u << n); ++b) {
                    Vertex dv(n, d), av(n, a), bv(n, b);
                    if (av.color() != bv.color() || av.color() == dv.color()) continue;
                    Path p = laceable_path(n, dv, av, bv);
                    CHECK(p.start == av);
                    CHECK(endpoint(p) == bv);
                    check_one(n, {dv}, av, bv, p);
                }
    CHECK_THROWS_AS(laceable_path(3, V("000"), V("011"), V("011")), HypothesisError);
    CHECK_THROWS_AS(laceable_path(3, V("000"), V("011"), V("101")), HypothesisError);
}

TEST_CASE("two neutral pairs joined by a 2-path covering") {
    for (int n = 2; n <= 4; ++n) {
        Fault none(n, {});
        for_each_pairset(n, none, 2, 0, [&](const PairSet& ps) {
            auto& p1 = ps.pairs[0];
            auto& p2 = ps.pairs[1];
            auto c = dvorak_pair(n, p1.a, p1.b, p2.a, p2.b);
            REQUIRE(c.size() == 2);
            check_two(n, {}, p1, p2, c);
            return true;
        });
    }
    std::mt19937_64 rng(7);
    for (int t = 0; t < 150; ++t) {
        Instance inst = random_instance(5, Signature{0, 0, 2, 0}, rng);
        auto& p1 = inst.pairs.pairs[0];
        auto& p2 = inst.pairs.pairs[1];
        auto c = dvorak_pair(5, p1.a, p1.b, p2.a, p2.b);
        check_two(5, {}, p1, p2, c);
    }
    CHECK_THROWS_AS(dvorak_pair(3, V("000"), V("001"), V("001"), V("010")),
                    HypothesisError);
    CHECK_THROWS_AS(dvorak_pair(3, V("000"), V("011"), V("001"), V("010")),
                    HypothesisError);
}

TEST_CASE("hamiltonian path through a prescribed edge") {
    for (int n = 2; n <= 4; ++n)
        for (uint32_t a = 0; a < (1u << n); ++a)
            for (uint32_t b = 0; b < (1u << n); ++b) {
                Vertex r(n, a), g(n, b);
                if (r.color() == g.color()) continue;
                for (uint32_t e = 0; e < (1u << n); ++e)
                    for (int l = 1; l <= n; ++l) {
                        Vertex u(n, e), w = u.flip(l);
                        if (u > w) continue;
                        if ((u == r && w == g) || (u == g && w == r)) {
                            CHECK_THROWS_AS(havel_through_edge(n, r, g, {u, w}),
                                            HypothesisError);
                            continue;
                        }
                        Path p = havel_through_edge(n, r, g, {u, w});
                        CHECK(p.start == r);
                        CHECK(endpoint(p) == g);
                        CHECK(has_edge(p, u, w));
                        check_one(n, {}, r, g, p);
                    }
            }
}

TEST_CASE("fan of hamiltonian paths with distinct first edges") {
    for (int n = 2; n <= 5; ++n)
        for (uint32_t d = 0; d < (1u << n); ++d)
            for (uint32_t a = 0; a < (1u << n); ++a)
                for (uint32_t b = 0; b < (1u << n); ++b) {
                    Vertex r(n, d), g1(n, a), g2(n, b);
                    if (g1 == g2 || g1.color() != g2.color() ||
                        r.color() == g1.color())
                        continue;
                    auto fan = paths_distinct_first_edges(n, r, g1, g2);
                    REQUIRE((int)fan.size() == n - 1);
                    std::set<Letter> firsts;
                    for (auto& p : fan) {
                        CHECK(p.start == g1);
                        CHECK(endpoint(p) == g2);
                        CHECK(firsts.insert(first_letter(p.word)).second);
                        check_one(n, {r}, g1, g2, p);
                    }
                }
}

TEST_CASE("hamiltonian cycles around neutral faults of mass 0, 2, 4") {
    for (int n = 2; n <= 6; ++n) {
        Path c = cycle_with_neutral_fault(n, Fault(n, {}));
        auto vr = verify_cycle(n, Fault(n, {}), c);
        CHECK_MESSAGE(vr.ok, vr.message());
    }
    for (int n = 3; n <= 5; ++n)
        for_each_fault(n, 2, 0, [&](const Fault& f) {
            Path c = cycle_with_neutral_fault(n, f);
            auto vr = verify_cycle(n, f, c);
            CHECK_MESSAGE(vr.ok, vr.message());
            return true;
        });
    for (int n = 4; n <= 5; ++n)
        for_each_fault(n, 4, 0, [&](const Fault& f) {
            Path c = cycle_with_neutral_fault(n, f);
            auto vr = verify_cycle(n, f, c);
            CHECK_MESSAGE(vr.ok, vr.message());
            return true;
        });
    CHECK_THROWS_AS(cycle_with_neutral_fault(3, Fault(3, {V("000"), V("011")})),
                    HypothesisError); // charged
    CHECK_THROWS_AS(cycle_with_neutral_fault(2, Fault(2, {V("00"), V("01")})),
                    ThresholdError);
    CHECK_THROWS_AS(cycle_with_neutral_fault(3, Fault(3, {V("000"), V("011"), V("001"),
                                                          V("010")})),
                    ThresholdError);
}

TEST_CASE("q3 minus a neutral pair: path or structured fallback") {
    for (uint32_t a = 0; a < 8; ++a)
        for (uint32_t b = 0; b < 8; ++b) {
            Vertex r(3, a), g(3, b);
            if (r.color() == g.color()) continue;
            for (uint32_t c = 0; c < 8; ++c)
                for (uint32_t d = 0; d < 8; ++d) {
                    Vertex r1(3, c), g1(3, d);
                    if (r1.color() == g1.color()) continue;
                    if (r1 == r || r1 == g || g1 == r || g1 == g) continue;
                    auto res = q3_two_deleted(r, g, r1, g1);
                    Instance inst(3, Fault(3, {r, g}),
                                  PairSet(3, {VertexPair(r1, g1)}));
                    bool blocked = in_b_set(r, g, r1, g1);
                    CHECK(catalog_feasible(inst) == !blocked);
                    CHECK(res.ham.has_value() == !blocked);
                    if (res.ham) check_one(3, {r, g}, r1, g1, *res.ham);
                    if (blocked) {
                        REQUIRE(res.two_path.size() == 2);
                        CHECK(res.two_path[0] != res.two_path[1]);
                        for (auto& cov : res.two_path) {
                            REQUIRE(cov.size() == 2);
                            CHECK(cov[0].length() == 2);
                            CHECK(cov[1].length() == 2);
                            CHECK(cov[0].start == r1);
                            CHECK(cov[1].start == g1);
                            check_two(3, {r, g},
                                      VertexPair(cov[0].start, endpoint(cov[0])),
                                      VertexPair(cov[1].start, endpoint(cov[1])), cov);
                        }
                    }
                    REQUIRE(res.three_path.size() == 2);
                    CHECK(res.three_path[0] != res.three_path[1]);
                    for (auto& cov : res.three_path) {
                        REQUIRE(cov.size() == 3);
                        std::vector<VertexPair> ends;
                        for (auto& p : cov) {
                            CHECK(p.length() == 1);
                            ends.emplace_back(p.start, endpoint(p));
                        }
                        Instance mi(3, Fault(3, {r, g}), PairSet(3, ends));
                        auto vr = verify_covering(mi, cov);
                        CHECK_MESSAGE(vr.ok, vr.message());
                    }
                }
        }
}

TEST_CASE("path around a neutral mass-2 fault") {
    for (int n = 2; n <= 4; ++n)
        for_each_fault(n, 2, 0, [&](const Fault& f) {
            for_each_pairset(n, f, 1, 0, [&](const PairSet& ps) {
                Vertex a = ps.pairs[0].a, b = ps.pairs[0].b;
                if (n == 3 && in_b_set(f.vertices[0], f.vertices[1], a, b)) {
                    CHECK_THROWS_AS(neutral_path_two_faults(n, f.vertices[0],
                                                            f.vertices[1], a, b),
                                    HypothesisError);
                    return true;
                }
                Path p = neutral_path_two_faults(n, f.vertices[0], f.vertices[1], a, b);
                CHECK(p.start == a);
                CHECK(endpoint(p) == b);
                check_one(n, {f.vertices[0], f.vertices[1]}, a, b, p);
                return true;
            });
            return true;
        });
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        Instance inst = random_instance(5, Signature{2, 0, 1, 0}, rng);
        Vertex a = inst.pairs.pairs[0].a, b = inst.pairs.pairs[0].b;
        Path p = neutral_path_two_faults(5, inst.fault.vertices[0],
                                         inst.fault.vertices[1], a, b);
        check_one(5, inst.fault.vertices, a, b, p);
    }
}

TEST_CASE("cycle around a neutral mass-2 fault through a prescribed edge") {
    for_each_fault(4, 2, 0, [&](const Fault& f) {
        for (uint32_t e = 0; e < 16; ++e)
            for (int l = 1; l <= 4; ++l) {
                Vertex u(4, e), w = u.flip(l);
                if (u > w || f.contains(u) || f.contains(w)) continue;
                Path c = cycle_through_edge_two_faults(4, f, {u, w});
                auto vr = verify_cycle(4, f, c);
                CHECK_MESSAGE(vr.ok, vr.message());
                CHECK(has_edge(c, u, w));
            }
        return true;
    });
    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        Fault f = random_fault(5, 2, 0, rng);
        Vertex u(5, (uint32_t)(rng() & 31));
        Vertex w = u.flip(1 + (int)(rng() % 5));
        if (f.contains(u) || f.contains(w)) continue;
        Path c = cycle_through_edge_two_faults(5, f, {u, w});
        CHECK(verify_cycle(5, f, c).ok);
        CHECK(has_edge(c, u, w));
    }
}

TEST_CASE("two charged pairs of opposite colors") {
    for (int n = 3; n <= 4; ++n) {
        Fault none(n, {});
        for_each_pairset(n, none, 0, 2, [&](const PairSet& ps) {
            if (ps.pairs[0].charge_color() == ps.pairs[1].charge_color()) return true;
            auto& rp = ps.pairs[0].a.color() == Color::Red ? ps.pairs[0] : ps.pairs[1];
            auto& gp = ps.pairs[0].a.color() == Color::Red ? ps.pairs[1] : ps.pairs[0];
            for (bool lf : {false, true}) {
                Covering c;
                try {
                    c = two_charged_pairs(n, rp.a, rp.b, gp.a, gp.b, lf);
                } catch (const HypothesisError&) {
                    CHECK(n == 3); // only the base case restricts the inputs
                    continue;
                }
                REQUIRE(c.size() == 2);
                check_two(n, {}, rp, gp, c);
                CHECK(c[0].start == rp.a);
                CHECK(c[1].start == gp.a);
                if (lf) CHECK(c[0].length() >= (1 << (n - 1)));
            }
            return true;
        });
    }
    std::mt19937_64 rng(17);
    for (int t = 0; t < 120; ++t) {
        Instance inst = random_instance(5, Signature{0, 0, 0, 2}, rng);
        if (inst.pairs.pairs[0].charge_color() == inst.pairs.pairs[1].charge_color())
            continue;
        auto& p1 = inst.pairs.pairs[0];
        auto& p2 = inst.pairs.pairs[1];
        bool lf = t % 2 == 0;
        auto c = two_charged_pairs(5, p1.a, p1.b, p2.a, p2.b, lf);
        check_two(5, {}, p1, p2, c);
        if (lf) CHECK(c[0].length() >= 16);
    }
}

TEST_CASE("one deleted vertex, a neutral and a charged pair") {
    for (Vertex r : {V("0000"), V("0001")})
        for (uint32_t a = 0; a < 16; ++a) {
            Vertex r1(4, a);
            if (r1.color() != r.color() || r1 == r) continue;
            for (uint32_t b = 0; b < 16; ++b) {
                Vertex g(4, b);
                if (g.color() == r.color()) continue;
                for (uint32_t c = 0; c < 16; ++c)
                    for (uint32_t d = c + 1; d < 16; ++d) {
                        Vertex g1(4, c), g2(4, d);
                        if (g1.color() != g.color() || g2.color() != g.color()) continue;
                        if (g1 == g || g2 == g) continue;
                        auto cov = mixed_pair(4, r, r1, g, g1, g2);
                        REQUIRE(cov.size() == 2);
                        check_two(4, {r}, VertexPair(r1, g), VertexPair(g1, g2), cov);
                        CHECK(cov[0].start == r1);
                        CHECK(cov[1].start == g1);
                    }
            }
        }
    std::mt19937_64 rng(19);
    for (int t = 0; t < 200; ++t) {
        Instance inst = random_instance(5, Signature{1, 1, 1, 1}, rng);
        Vertex r = inst.fault.vertices[0];
        auto& np = inst.pairs.pairs[0].neutral() ? inst.pairs.pairs[0]
                                                 : inst.pairs.pairs[1];
        auto& cp = inst.pairs.pairs[0].neutral() ? inst.pairs.pairs[1]
                                                 : inst.pairs.pairs[0];
        Vertex r1 = np.a.color() == r.color() ? np.a : np.b;
        Vertex g = np.a.color() == r.color() ? np.b : np.a;
        auto cov = mixed_pair(5, r, r1, g, cp.a, cp.b);
        check_two(5, {r}, np, cp, cov);
    }
    CHECK_THROWS_AS(mixed_pair(3, V("000"), V("011"), V("001"), V("010"), V("100")),
                    ThresholdError);
}

TEST_CASE("one deleted vertex, path through a prescribed edge") {
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 250) {
        int n = 4 + (int)(rng() % 2);
        Vertex g(n, (uint32_t)(rng() & ((1u << n) - 1)));
        Vertex r1(n, (uint32_t)(rng() & ((1u << n) - 1)));
        Vertex r2(n, (uint32_t)(rng() & ((1u << n) - 1)));
        if (r1.color() == g.color() || r2.color() == g.color() || r1 == r2) continue;
        Vertex a(n, (uint32_t)(rng() & ((1u << n) - 1)));
        Vertex b = a.flip(1 + (int)(rng() % n));
        if (a == g || b == g) continue;
        bool a_end = a == r1 || a == r2, b_end = b == r1 || b == r2;
        if (a_end && b_end) {
            CHECK_THROWS_AS(
                charged_path_through_edge_one_fault(n, g, r1, r2, {a, b}, false),
                HypothesisError);
            ++done;
            continue;
        }
        bool oriented = rng() % 2 == 0;
        if (oriented && (a_end || b_end) && !(a == r1 || b == r2)) {
            CHECK_THROWS_AS(
                charged_path_through_edge_one_fault(n, g, r1, r2, {a, b}, true),
                HypothesisError);
            ++done;
            continue;
        }
        Path p = charged_path_through_edge_one_fault(n, g, r1, r2, {a, b}, oriented);
        CHECK(p.start == r1);
        CHECK(endpoint(p) == r2);
        CHECK(has_edge(p, a, b));
        if (oriented) CHECK(find_vertex(p, a) < find_vertex(p, b));
        check_one(n, {g}, r1, r2, p);
        ++done;
    }
}

TEST_CASE("three deleted, one charged pair across") {
    for (uint32_t gb = 0; gb < 16; gb += 3) { // thin the sweep, keep both colors
        Vertex g(4, gb);
        for (uint32_t a = 0; a < 16; ++a)
            for (uint32_t b = a + 1; b < 16; ++b) {
                Vertex r(4, a), r1(4, b);
                if (r.color() == g.color() || r1.color() != r.color()) continue;
                for (uint32_t c = 0; c < 16; ++c)
                    for (uint32_t d = c + 1; d < 16; ++d) {
                        Vertex g1(4, c), g2(4, d);
                        if (g1.color() != g.color() || g2.color() != g.color()) continue;
                        if (g1 == g || g2 == g) continue;
                        Path p = charged_path_fault31(4, g, r, r1, g1, g2);
                        CHECK(p.start == g1);
                        CHECK(endpoint(p) == g2);
                        check_one(4, {g, r, r1}, g1, g2, p);
                    }
            }
    }
    std::mt19937_64 rng(29);
    for (int t = 0; t < 150; ++t) {
        Instance inst = random_instance(5, Signature{3, 1, 0, 1}, rng);
        int reds = inst.fault.red_count();
        Color maj = reds == 2 ? Color::Red : Color::Green;
        Vertex g, r, r1;
        bool first = true;
        for (auto& v : inst.fault.vertices) {
            if (v.color() != maj)
                g = v;
            else if (first) {
                r = v;
                first = false;
            } else
                r1 = v;
        }
        auto& pr = inst.pairs.pairs[0];
        Path p = charged_path_fault31(5, g, r, r1, pr.a, pr.b);
        check_one(5, inst.fault.vertices, pr.a, pr.b, p);
    }
}

TEST_CASE("cycle keeping two marked vertices far apart") {
    for_each_fault(4, 2, 0, [&](const Fault& f) {
        for (uint32_t a = 0; a < 16; ++a)
            for (uint32_t b = a + 1; b < 16; ++b) {
                Vertex g1(4, a), g2(4, b);
                if (g1.color() != g2.color()) continue;
                if (f.contains(g1) || f.contains(g2)) continue;
                Path c = cycle_far_terminals(4, f.vertices[0], f.vertices[1], g1, g2);
                auto vr = verify_cycle(4, f, c);
                CHECK_MESSAGE(vr.ok, vr.message());
                CHECK(cycle_gap(c, g1, g2) >= 4);
            }
        return true;
    });
    std::mt19937_64 rng(31);
    for (int t = 0; t < 80; ++t) {
        Fault f = random_fault(5, 2, 0, rng);
        Vertex g1(5, (uint32_t)(rng() & 31)), g2(5, (uint32_t)(rng() & 31));
        if (g1 == g2 || g1.color() != g2.color()) continue;
        if (f.contains(g1) || f.contains(g2)) continue;
        Path c = cycle_far_terminals(5, f.vertices[0], f.vertices[1], g1, g2);
        CHECK(verify_cycle(5, f, c).ok);
        CHECK(cycle_gap(c, g1, g2) >= 4);
    }
}

TEST_CASE("builders are deterministic and reproducible, trace included") {
    TraceNode t1{"root"}, t2{"root"};
    Path a = havel_path(5, V("00000"), V("00001"), &t1);
    Path b = havel_path(5, V("00000"), V("00001"), &t2);
    CHECK(a == b);
    CHECK(t1 == t2);
    CHECK(!t1.children.empty());

    TraceNode u1{"root"}, u2{"root"};
    Fault f(5, {V("00000"), V("00011"), V("00111"), V("00001")});
    Path c1 = cycle_with_neutral_fault(5, f, &u1);
    Path c2 = cycle_with_neutral_fault(5, f, &u2);
    CHECK(c1 == c2);
    CHECK(u1 == u2);

    TraceNode w1{"root"}, w2{"root"};
    auto m1 = mixed_pair(5, V("00000"), V("01100"), V("00001"), V("00010"), V("11100"), &w1);
    auto m2 = mixed_pair(5, V("00000"), V("01100"), V("00001"), V("00010"), V("11100"), &w2);
    CHECK(m1 == m2);
    CHECK(w1 == w2);
}
