#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qpath/dispatch.hpp"
#include "qpath/json.hpp"
#include "qpath/verify.hpp"

using namespace qpath;

namespace {

Vertex V(const std::string& s) { return Vertex::parse(s); }

void expect_solved(const Instance& inst) {
    CAPTURE(to_json(inst).dump());
    SolveOutcome o = solve(inst);
    REQUIRE(o.status == Status::Solved);
    REQUIRE(o.covering.has_value());
    auto res = verify_covering(inst, *o.covering);
    CAPTURE(res.ok ? "" : res.problems.front().c_str());
    CHECK(res.ok);
}

} // namespace

TEST_CASE("solve routes every bespoke signature at its threshold") {
    std::mt19937_64 rng(7);
    std::vector<std::pair<Signature, int>> sigs{
        {{0, 0, 1, 0}, 1}, {{0, 0, 2, 0}, 2}, {{1, 1, 0, 1}, 2}, {{2, 0, 1, 0}, 4},
        {{0, 0, 0, 2}, 4}, {{1, 1, 1, 1}, 4}, {{3, 1, 0, 1}, 4}, {{2, 2, 0, 2}, 4},
        {{2, 0, 2, 0}, 4}, {{4, 0, 1, 0}, 5}, {{0, 0, 3, 0}, 5}, {{4, 2, 0, 2}, 5},
        {{5, 1, 0, 1}, 5},
    };
    for (auto& [sig, thr] : sigs)
        for (int n = thr; n <= thr + 1; ++n)
            for (int it = 0; it < 25; ++it)
                expect_solved(random_instance(n, sig, rng));
}

TEST_CASE("solve runs the reduction chains") {
    std::mt19937_64 rng(11);
    std::vector<std::pair<Signature, int>> sigs{
        {{3, 1, 1, 1}, 5}, {{2, 0, 2, 0}, 5}, {{2, 0, 0, 2}, 5}, {{3, 3, 0, 3}, 6},
        {{1, 1, 2, 1}, 6}, {{2, 2, 1, 2}, 6}, {{0, 0, 1, 2}, 6}, {{1, 1, 0, 3}, 6},
    };
    for (auto& [sig, thr] : sigs)
        for (int it = 0; it < 20; ++it) expect_solved(random_instance(thr, sig, rng));
}

TEST_CASE("solve certifies infeasibility") {
    // unbalanced: one charged pair, no fault
    Instance bad(3, Fault(3, {}), PairSet(3, {VertexPair(V("110"), V("101"))}));
    SolveOutcome o = solve(bad);
    CHECK(o.status == Status::InfeasibleCertified);
    CHECK(o.evidence == "balance");

    // a cycle needs at least three surviving vertices
    SolveOutcome oc = solve_cycle(2, Fault(2, {V("00"), V("01")}));
    CHECK(oc.status == Status::InfeasibleCertified);
    CHECK(oc.evidence == "capacity");

    // oracle-certified catalog records at n = 3
    auto recs = counterexample_catalog();
    for (auto& r : recs) {
        if (r.instance.n > 3) continue;
        SolveOutcome ro = solve(r.instance);
        CHECK(ro.status == Status::InfeasibleCertified);
    }
}

TEST_CASE("solve reports bounds and unknowns away from the oracle range") {
    std::mt19937_64 rng(3);
    // (3,3,0,3) needs n >= 6: at n = 5 only the bound is known
    Instance i1 = random_instance(5, Signature{3, 3, 0, 3}, rng);
    SolveOutcome o1 = solve(i1);
    CHECK(o1.status == Status::BelowThreshold);

    // (5,1,1,1) has a lower bound only
    Instance i2 = random_instance(5, Signature{5, 1, 1, 1}, rng);
    SolveOutcome o2 = solve(i2);
    CHECK(o2.status == Status::Unknown);
}

TEST_CASE("solve agrees with the oracle below threshold") {
    std::mt19937_64 rng(19);
    for (int it = 0; it < 40; ++it) {
        Instance inst = random_instance(3, Signature{2, 0, 1, 0}, rng);
        SolveOutcome o = solve(inst);
        SearchResult r = oracle_solve(inst);
        if (r.verdict == Verdict::Feasible) {
            CHECK(o.status == Status::Solved);
        } else {
            CHECK(o.status == Status::InfeasibleCertified);
            CHECK(o.evidence == "oracle");
        }
    }
}

TEST_CASE("cycle requests route by mass") {
    std::mt19937_64 rng(23);
    for (int m : {0, 2, 4, 6, 8}) {
        int thr = m == 0 ? 2 : m / 2 + 2;
        Fault g = random_fault(thr, m, 0, rng);
        SolveOutcome o = solve_cycle(thr, g);
        REQUIRE(o.status == Status::Solved);
        auto res = verify_cycle(thr, g, (*o.covering)[0]);
        CHECK(res.ok);
    }
    // below threshold at n = 5: mass 8 is only proven from dimension 6
    Fault f8 = random_fault(5, 8, 0, rng);
    CHECK(solve_cycle(5, f8).status == Status::BelowThreshold);
    // odd or charged masses can never close a cycle
    Fault odd(4, {V("0000")});
    CHECK(solve_cycle(4, odd).status == Status::InfeasibleCertified);
    Fault charged(4, {V("0000"), V("0011")});
    CHECK(solve_cycle(4, charged).status == Status::InfeasibleCertified);
}

TEST_CASE("reduction gates follow the counting inequalities") {
    CHECK(gate_neutral_to_charged(5, Signature{3, 1, 1, 1}));
    CHECK_FALSE(gate_neutral_to_charged(4, Signature{3, 1, 1, 1}));
    CHECK(gate_neutral_to_charged(5, Signature{2, 0, 2, 0}));
    CHECK(gate_red_charged(5, Signature{2, 0, 0, 2}));
    CHECK_FALSE(gate_red_charged(5, Signature{2, 2, 0, 2})); // O = C
    CHECK(gate_green_charged(5, Signature{5, 1, 1, 1}));
    CHECK_FALSE(gate_green_charged(5, Signature{2, 0, 1, 0})); // C = 0

    std::mt19937_64 rng(5);
    Instance inst = random_instance(4, Signature{3, 1, 1, 1}, rng);
    auto inner = [](const Instance&, TraceNode*) -> Covering {
        throw InternalCaseError("must not be reached");
    };
    CHECK_THROWS_AS(reduce_neutral_to_charged(inst, inner), GateError);
}

TEST_CASE("reductions preserve the prescribed pairs") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 20; ++it) {
        Instance inst = random_instance(5, Signature{3, 1, 1, 1}, rng);
        TraceNode tr;
        Covering cov = reduce_neutral_to_charged(
            inst,
            [](const Instance& aug, TraceNode* t) {
                SolveOutcome o = solve(aug);
                REQUIRE(o.status == Status::Solved);
                (void)t;
                return *o.covering;
            },
            &tr);
        auto res = verify_covering(inst, cov);
        CHECK(res.ok);
        CHECK(!tr.children.empty());
    }
}

TEST_CASE("solve is deterministic") {
    std::mt19937_64 rng(31);
    Instance inst = random_instance(5, Signature{4, 2, 0, 2}, rng);
    SolveOutcome a = solve(inst, true), b = solve(inst, true);
    REQUIRE(a.covering.has_value());
    CHECK(*a.covering == *b.covering);
    CHECK(*a.trace == *b.trace);
}

TEST_CASE("outcome and instance serialization round-trips") {
    std::mt19937_64 rng(37);
    Instance inst = random_instance(4, Signature{2, 0, 1, 0}, rng);
    auto j = to_json(inst);
    Instance back = instance_from_json(j);
    CHECK(back.n == inst.n);
    CHECK(back.fault == inst.fault);
    CHECK(back.pairs == inst.pairs);

    SolveOutcome o = solve(inst, true);
    auto oj = to_json(o);
    CHECK(oj.at("status") == "solved");
    Covering cov = covering_from_json(oj.at("covering"));
    CHECK(cov == *o.covering);

    Path p(V("0110"), {1, 4, 2});
    CHECK(path_from_json(to_json(p)) == p);
}
