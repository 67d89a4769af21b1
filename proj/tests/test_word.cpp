#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpath/word.hpp"

using namespace qpath;

static Vertex V(const std::string& s) { return Vertex::parse(s); }

TEST_CASE("word helpers") {
    Word w{1, 2, 3};
    CHECK(drop_last(w) == Word{1, 2});
    CHECK(drop_last(Word{2}) == Word{});
    CHECK(drop_last(Word{1, 1}) == Word{1});
    CHECK(drop_first(w) == Word{2, 3});
    CHECK(drop_first(Word{3}) == Word{});
    CHECK(drop_first(drop_first(w)) == Word{3});
    CHECK(reverse(w) == Word{3, 2, 1});
    CHECK(reverse(Word{}) == Word{});
    CHECK(reverse(reverse(Word{2, 1})) == Word{2, 1});
    CHECK(first_letter(Word{2, 1}) == 2);
    CHECK(last_letter(Word{2, 1}) == 1);
    CHECK(first_letter(Word{3}) == 3);
    CHECK(last_letter(Word{3}) == 3);
    CHECK_THROWS_AS(drop_last(Word{}), EmptyWordError);
    CHECK_THROWS_AS(first_letter(Word{}), EmptyWordError);
}

TEST_CASE("endpoint") {
    CHECK(endpoint(Path(V("00"), {1, 2, 1})) == V("01"));
    CHECK(endpoint(Path(V("101"), {})) == V("101"));
    CHECK(endpoint(Path(V("000"), {1, 2, 3})) == V("111"));
}

TEST_CASE("simplicity") {
    CHECK(is_simple(Path(V("00"), {1, 2, 1})));
    CHECK(!is_simple(Path(V("00"), {1, 1})));
    CHECK(!is_simple(Path(V("000"), {1, 2, 1, 2})));
}

TEST_CASE("word-level and vertex-level simplicity agree") {
    // every word of length <= 6 over Q4
    for (int len = 0; len <= 6; ++len) {
        std::vector<int> idx(len, 0);
        while (true) {
            Word w;
            for (int i : idx) w.push_back(i + 1);
            Path p(Vertex(4, 0), w);
            auto vs = path_vertices(p);
            std::sort(vs.begin(), vs.end());
            bool distinct = std::adjacent_find(vs.begin(), vs.end()) == vs.end();
            CHECK(simple_word(w, 4) == distinct);
            int i = len - 1;
            while (i >= 0 && idx[i] == 3) idx[i--] = 0;
            if (i < 0) break;
            ++idx[i];
        }
    }
}

TEST_CASE("reverse involution and dual of drops, exhaustively short") {
    for (int len = 1; len <= 5; ++len) {
        std::vector<int> idx(len, 0);
        while (true) {
            Word w;
            for (int i : idx) w.push_back(i + 1);
            CHECK(reverse(reverse(w)) == w);
            CHECK(drop_last(reverse(w)) == reverse(drop_first(w)));
            int i = len - 1;
            while (i >= 0 && idx[i] == 4) idx[i--] = 0;
            if (i < 0) break;
            ++idx[i];
        }
    }
}

TEST_CASE("concat cut join") {
    Path p(V("00"), {1});
    CHECK(endpoint(concat(p, {2})) == V("11"));
    CHECK(concat(p, {}) == p);
    auto [a, b] = cut(Path(V("00"), {1, 2, 1}), 1);
    CHECK(a == Path(V("00"), {1}));
    CHECK(b == Path(V("10"), {2, 1}));
    CHECK(endpoint(join(a, b)) == V("01"));
    CHECK_THROWS_AS(join(Path(V("00"), {1}), Path(V("00"), {2})), AssemblyError);
    CHECK_THROWS_AS(concat(p, {5}), RangeError);
}

TEST_CASE("randomized endpoint homomorphism") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10000; ++t) {
        int n = 2 + (int)(rng() % 7);
        Path p(Vertex(n, (uint32_t)(rng() % (1u << n))), {});
        int l1 = (int)(rng() % 6), l2 = (int)(rng() % 6);
        for (int i = 0; i < l1; ++i) p.word.push_back(1 + (int)(rng() % n));
        Word w;
        for (int i = 0; i < l2; ++i) w.push_back(1 + (int)(rng() % n));
        CHECK(endpoint(concat(p, w)).bits == (endpoint(p).bits ^ content(w, n)));
    }
}

TEST_CASE("cycle predicate") {
    Path c(V("00"), {1, 2, 1, 2});
    CHECK(is_cycle(c));
    CHECK(!is_cycle(Path(V("00"), {1, 1})));
    CHECK(!is_cycle(Path(V("00"), {1, 2})));
    CHECK(!is_cycle(Path(V("000"), {1, 2, 1, 2, 3, 3}))); // revisits before closing
    auto r = rotate_cycle(c, V("10"));
    CHECK(r.start == V("10"));
    CHECK(is_cycle(r));
    CHECK(r.word.size() == c.word.size());
    Path c3(V("000"), {1, 2, 1, 2});
    CHECK_THROWS_AS(rotate_cycle(c3, V("001")), AssemblyError);
}
