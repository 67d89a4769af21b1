#include "qpath/search.hpp"

#include <algorithm>
#include <array>

namespace qpath {

uint64_t full_mask(int n) {
    if (n < 1 || n > 6) throw RangeError("mask search supports n <= 6");
    return n == 6 ? ~uint64_t(0) : ((uint64_t(1) << (1 << n)) - 1);
}

uint64_t fault_free_mask(int n, const Fault& f) {
    uint64_t m = full_mask(n);
    for (auto& v : f.vertices) m &= ~(uint64_t(1) << v.bits);
    return m;
}

namespace {

// ids with coordinate bit k set, k = bit position (little-endian)
constexpr std::array<uint64_t, 6> kBitMask = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

// odd-popcount ids (red) for n <= 6
uint64_t red_mask(int n) {
    uint64_t m = 0;
    for (int v = 0; v < (1 << n); ++v)
        if (std::popcount(unsigned(v)) & 1) m |= uint64_t(1) << v;
    return m;
}

struct Engine {
    int n;
    uint64_t nodes = 0, limit;
    bool out_of_budget = false;
    uint64_t reds;

    struct Seg {
        int a, b;
    };
    std::vector<Seg> segs;
    std::vector<std::vector<int>> routes; // found vertex sequences

    Engine(int n_, uint64_t lim) : n(n_), limit(lim), reds(red_mask(n_)) {}

    uint64_t nbmask(uint64_t m) const {
        uint64_t out = 0;
        for (int k = 0; k < n; ++k) {
            uint64_t b = kBitMask[k];
            int s = 1 << k;
            out |= ((m & ~b) << s) | ((m & b) >> s);
        }
        return out;
    }

    int sgn(int v) const { return (reds >> v) & 1 ? 1 : -1; }

    // rem: uncovered vertices (targets of open segments included);
    // si: current segment index; head: current path head (already covered).
    bool dfs(uint64_t rem, size_t si, int head) {
        if (++nodes > limit) {
            out_of_budget = true;
            return false;
        }
        if (si == segs.size()) return rem == 0;
        int target = segs[si].b;

        // balance
        int diff = 0;
        uint64_t m = rem;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            diff -= sgn(v);
        }
        int need = 0;
        {
            int c1 = -sgn(head), c2 = sgn(target);
            if (c1 == c2) need += c1;
        }
        for (size_t j = si + 1; j < segs.size(); ++j) {
            int c1 = sgn(segs[j].a), c2 = sgn(segs[j].b);
            if (c1 == c2) need += c1;
        }
        if (-diff != need) return false;

        uint64_t headbit = uint64_t(1) << head;
        uint64_t region = rem | headbit;
        uint64_t term = uint64_t(1) << target;
        for (size_t j = si + 1; j < segs.size(); ++j)
            term |= (uint64_t(1) << segs[j].a) | (uint64_t(1) << segs[j].b);

        // connectivity: flood components of region
        {
            uint64_t left = region;
            uint64_t headcomp = 0;
            while (left) {
                uint64_t seed = left & (~left + 1);
                uint64_t comp = seed, prev = 0;
                while (comp != prev) {
                    prev = comp;
                    comp |= nbmask(comp) & region;
                }
                left &= ~comp;
                if (comp & headbit) {
                    headcomp = comp;
                    if (!(comp & term) && (comp != headbit || rem != 0))
                        ; // head alone is fine only when nothing remains
                } else if (!(comp & term)) {
                    return false; // unreachable component
                }
                // open pairs must stay together
                for (size_t j = si + 1; j < segs.size(); ++j) {
                    uint64_t pa = uint64_t(1) << segs[j].a, pb = uint64_t(1) << segs[j].b;
                    if ((bool)(comp & pa) != (bool)(comp & pb)) return false;
                }
            }
            if (!(headcomp & (uint64_t(1) << target))) return false;
        }

        // degree: interior-to-be vertices need two live neighbors
        {
            uint64_t m2 = rem;
            while (m2) {
                int v = std::countr_zero(m2);
                m2 &= m2 - 1;
                uint64_t nb = 0;
                for (int k = 0; k < n; ++k) nb |= uint64_t(1) << (v ^ (1 << k));
                int d = std::popcount(nb & region);
                int want = (term >> v) & 1 ? 1 : 2;
                if (d < want) return false;
            }
        }

        // candidate moves in increasing id order
        std::array<int, 6> cand;
        int cn = 0;
        for (int k = 0; k < n; ++k) cand[cn++] = head ^ (1 << k);
        std::sort(cand.begin(), cand.begin() + cn);
        for (int i = 0; i < cn; ++i) {
            int w = cand[i];
            uint64_t wb = uint64_t(1) << w;
            if (!(rem & wb)) continue;
            if (w == target) {
                routes[si].push_back(w);
                uint64_t rem2 = rem & ~wb;
                bool done;
                if (si + 1 == segs.size()) {
                    done = rem2 == 0;
                    if (!done) ++nodes;
                } else {
                    int h2 = segs[si + 1].a;
                    routes[si + 1].assign(1, h2);
                    done = dfs(rem2 & ~(uint64_t(1) << h2), si + 1, h2);
                }
                if (done) return true;
                routes[si].pop_back();
                if (out_of_budget) return false;
            } else if (!(term & wb)) {
                routes[si].push_back(w);
                if (dfs(rem & ~wb, si, w)) return true;
                routes[si].pop_back();
                if (out_of_budget) return false;
            }
        }
        return false;
    }
};

Covering routes_to_covering(int n, const std::vector<std::vector<int>>& routes) {
    Covering c;
    for (auto& r : routes) {
        Path p(Vertex(n, r[0]), {});
        for (size_t i = 1; i < r.size(); ++i)
            p.word.push_back(diff_letter(Vertex(n, r[i - 1]), Vertex(n, r[i])));
        c.push_back(p);
    }
    return c;
}

} // namespace

SearchResult search_cover(int n, uint64_t allowed,
                          const std::vector<std::pair<Vertex, Vertex>>& ends,
                          const SearchBudget& budget) {
    if (n > 6) return {Verdict::Indeterminate, std::nullopt, 0};
    allowed &= full_mask(n);
    SearchResult res;
    if (ends.empty()) {
        res.verdict = allowed == 0 ? Verdict::Feasible : Verdict::Infeasible;
        if (allowed == 0) res.covering = Covering{};
        return res;
    }
    Engine eng(n, budget.max_nodes);
    for (auto& [a, b] : ends) {
        if (a.dim != n || b.dim != n) throw RangeError("endpoint dimension mismatch");
        if (a == b) throw RangeError("degenerate endpoint pair");
        if (!(allowed & bit_of(a)) || !(allowed & bit_of(b)))
            throw RangeError("endpoint outside the allowed set");
        eng.segs.push_back({(int)a.bits, (int)b.bits});
    }
    eng.routes.assign(eng.segs.size(), {});
    int h0 = eng.segs[0].a;
    eng.routes[0].assign(1, h0);
    bool found = eng.dfs(allowed & ~(uint64_t(1) << h0), 0, h0);
    res.nodes = eng.nodes;
    if (found) {
        res.verdict = Verdict::Feasible;
        res.covering = routes_to_covering(n, eng.routes);
    } else {
        res.verdict = eng.out_of_budget ? Verdict::Indeterminate : Verdict::Infeasible;
    }
    return res;
}

SearchResult search_cycle(int n, uint64_t allowed, const SearchBudget& budget) {
    if (n > 6) return {Verdict::Indeterminate, std::nullopt, 0};
    allowed &= full_mask(n);
    SearchResult res;
    if (std::popcount(allowed) < 4) {
        res.verdict = Verdict::Infeasible;
        return res;
    }
    int anchor = std::countr_zero(allowed);
    Vertex av(n, anchor);
    uint64_t rest = allowed & ~(uint64_t(1) << anchor);
    std::vector<int> nbs;
    for (int k = 0; k < n; ++k) {
        int w = anchor ^ (1 << k);
        if (rest & (uint64_t(1) << w)) nbs.push_back(w);
    }
    std::sort(nbs.begin(), nbs.end());
    bool budget_hit = false;
    for (size_t i = 0; i < nbs.size(); ++i)
        for (size_t j = i + 1; j < nbs.size(); ++j) {
            Vertex w1(n, nbs[i]), w2(n, nbs[j]);
            auto sub = search_cover(n, rest, {{w1, w2}}, budget);
            res.nodes += sub.nodes;
            if (sub.verdict == Verdict::Feasible) {
                Path cyc(av, {diff_letter(av, w1)});
                cyc.word.insert(cyc.word.end(), (*sub.covering)[0].word.begin(),
                                (*sub.covering)[0].word.end());
                cyc.word.push_back(diff_letter(w2, av));
                res.verdict = Verdict::Feasible;
                res.covering = Covering{cyc};
                return res;
            }
            if (sub.verdict == Verdict::Indeterminate) budget_hit = true;
        }
    res.verdict = budget_hit ? Verdict::Indeterminate : Verdict::Infeasible;
    return res;
}

} // namespace qpath
