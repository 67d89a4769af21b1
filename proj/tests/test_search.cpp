#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpath/oracle.hpp"

using namespace qpath;

static Vertex V(const std::string& s) { return Vertex::parse(s); }

TEST_CASE("single pair tiny cases") {
    // Q2 Hamiltonian path between adjacent opposite-parity vertices
    auto r = search_cover(2, full_mask(2), {{V("00"), V("01")}});
    REQUIRE(r.verdict == Verdict::Feasible);
    CHECK(verify_covering(Instance(2, Fault(2, {}),
                                   PairSet(2, {VertexPair(V("00"), V("01"))})),
                          *r.covering)
              .ok);
    // same-parity single pair cannot cover an even number of vertices
    auto r2 = search_cover(2, full_mask(2), {{V("00"), V("11")}});
    CHECK(r2.verdict == Verdict::Infeasible);
}

TEST_CASE("every opposite-parity pair of Q3 and Q4 has a Hamiltonian path") {
    for (int n = 3; n <= 4; ++n)
        for (uint32_t a = 0; a < (1u << n); ++a)
            for (uint32_t b = a + 1; b < (1u << n); ++b) {
                Vertex va(n, a), vb(n, b);
                if (va.color() == vb.color()) continue;
                auto r = search_cover(n, full_mask(n), {{va, vb}});
                REQUIRE(r.verdict == Verdict::Feasible);
                Instance inst(n, Fault(n, {}), PairSet(n, {VertexPair(va, vb)}));
                CHECK(verify_covering(inst, *r.covering).ok);
            }
}

TEST_CASE("multi pair covering with fault") {
    Fault f(3, {V("000"), V("111")});
    Instance inst(3, f,
                  PairSet(3, {VertexPair(V("100"), V("010")),
                              VertexPair(V("001"), V("011"))}));
    // (100,010) red pair, (001,011) mixed: 001 red, 011 green -> neutral
    auto r = oracle_solve(inst);
    if (r.verdict == Verdict::Feasible) CHECK(verify_covering(inst, *r.covering).ok);
}

TEST_CASE("search agrees with naive reference on random Q3 instances") {
    // reference: enumerate permutations of free vertices split into paths
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        int mass = (int)(rng() % 3);
        std::vector<uint32_t> ids(8);
        std::iota(ids.begin(), ids.end(), 0);
        std::shuffle(ids.begin(), ids.end(), rng);
        std::vector<Vertex> fv;
        for (int i = 0; i < mass; ++i) fv.push_back(Vertex(3, ids[i]));
        int npairs = 1 + (int)(rng() % 2);
        std::vector<VertexPair> ps;
        for (int i = 0; i < npairs; ++i)
            ps.emplace_back(Vertex(3, ids[mass + 2 * i]), Vertex(3, ids[mass + 2 * i + 1]));
        Instance inst(3, Fault(3, fv), PairSet(3, ps));
        auto r = oracle_solve(inst);
        // reference search: all orderings of the free vertices as path concatenations
        std::vector<uint32_t> free;
        for (uint32_t b = 0; b < 8; ++b)
            if (!inst.fault.contains(Vertex(3, b))) free.push_back(b);
        std::sort(free.begin(), free.end());
        bool ref = false;
        do {
            // try to split the permutation into |ps| consecutive runs forming paths
            // with the prescribed endpoint pairs (as sets)
            std::function<bool(size_t, std::vector<VertexPair>)> go =
                [&](size_t at, std::vector<VertexPair> need) -> bool {
                if (at == free.size()) return need.empty();
                for (size_t len = 2; at + len <= free.size(); ++len) {
                    bool chain = true;
                    for (size_t i = at; i + 1 < at + len; ++i)
                        if (!adjacent(Vertex(3, free[i]), Vertex(3, free[i + 1]))) {
                            chain = false;
                            break;
                        }
                    if (!chain) break;
                    VertexPair got(Vertex(3, free[at]), Vertex(3, free[at + len - 1]));
                    for (size_t k = 0; k < need.size(); ++k)
                        if (need[k] == got) {
                            auto rest = need;
                            rest.erase(rest.begin() + k);
                            if (go(at + len, rest)) return true;
                        }
                }
                return false;
            };
            if (go(0, ps)) {
                ref = true;
                break;
            }
        } while (std::next_permutation(free.begin(), free.end()));
        CHECK((r.verdict == Verdict::Feasible) == ref);
        if (r.verdict == Verdict::Feasible)
            CHECK(verify_covering(inst, *r.covering).ok);
    }
}

TEST_CASE("cycle search") {
    auto r = search_cycle(3, full_mask(3));
    REQUIRE(r.verdict == Verdict::Feasible);
    CHECK(verify_cycle(3, Fault(3, {}), (*r.covering)[0]).ok);
    Fault f(3, {V("000"), V("111")});
    auto r2 = search_cycle(3, fault_free_mask(3, f));
    REQUIRE(r2.verdict == Verdict::Feasible);
    CHECK(verify_cycle(3, f, (*r2.covering)[0]).ok);
    // deleting two same-color vertices leaves unequal color classes: no cycle
    Fault f3(3, {V("100"), V("010")});
    CHECK(search_cycle(3, fault_free_mask(3, f3)).verdict == Verdict::Infeasible);
}

TEST_CASE("determinism") {
    Instance inst(4, Fault(4, {V("0000")}),
                  PairSet(4, {VertexPair(V("1000"), V("0010")),
                              VertexPair(V("1111"), V("0111"))}));
    auto a = oracle_solve(inst);
    auto b = oracle_solve(inst);
    REQUIRE(a.verdict == b.verdict);
    CHECK(a.nodes == b.nodes);
    if (a.verdict == Verdict::Feasible) CHECK(*a.covering == *b.covering);
}

TEST_CASE("budget exhaustion reports indeterminate") {
    auto r = search_cover(5, full_mask(5), {{V("00000"), V("00001")}}, SearchBudget{10});
    CHECK(r.verdict == Verdict::Indeterminate);
}
