#include "qpath/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace qpath {

SearchResult oracle_solve(const Instance& inst, const SearchBudget& budget) {
    for (auto& p : inst.pairs.pairs)
        if (inst.fault.contains(p.a) || inst.fault.contains(p.b))
            throw OverlapError("terminal vertex is deleted");
    if (inst.n > 6) return {Verdict::Indeterminate, std::nullopt, 0};
    uint64_t allowed = fault_free_mask(inst.n, inst.fault);
    std::vector<std::pair<Vertex, Vertex>> ends;
    for (auto& p : inst.pairs.pairs) ends.emplace_back(p.a, p.b);
    return search_cover(inst.n, allowed, ends, budget);
}

SearchResult oracle_cycle(int n, const Fault& fault, const SearchBudget& budget) {
    if (n > 6) return {Verdict::Indeterminate, std::nullopt, 0};
    return search_cycle(n, fault_free_mask(n, fault), budget);
}

Vertex Automorphism::apply(const Vertex& v) const {
    uint32_t out = 0;
    for (int i = 1; i <= n; ++i)
        if (v.coord(i)) out |= 1u << (n - perm[i - 1]);
    return Vertex(n, out ^ flips);
}

Path Automorphism::apply(const Path& p) const {
    Path q(apply(p.start), {});
    for (Letter x : p.word) q.word.push_back(perm[x - 1]);
    return q;
}

Automorphism Automorphism::inverse() const {
    Automorphism inv;
    inv.n = n;
    inv.perm.resize(n);
    for (int i = 1; i <= n; ++i) inv.perm[perm[i - 1] - 1] = i;
    // carry the flip pattern through the inverse permutation
    uint32_t f = 0;
    for (int i = 1; i <= n; ++i)
        if ((flips >> (n - i)) & 1) f |= 1u << (n - inv.perm[i - 1]);
    inv.flips = f;
    return inv;
}

namespace {

std::vector<uint32_t> encode_instance(const Instance& inst) {
    std::vector<uint32_t> out;
    out.push_back((uint32_t)inst.n);
    std::vector<uint32_t> fs;
    for (auto& v : inst.fault.vertices) fs.push_back(v.bits);
    std::sort(fs.begin(), fs.end());
    out.insert(out.end(), fs.begin(), fs.end());
    out.push_back(0xFFFFFFFFu);
    std::vector<std::pair<uint32_t, uint32_t>> ps;
    for (auto& p : inst.pairs.pairs)
        ps.emplace_back(std::min(p.a.bits, p.b.bits), std::max(p.a.bits, p.b.bits));
    std::sort(ps.begin(), ps.end());
    for (auto& [a, b] : ps) {
        out.push_back(a);
        out.push_back(b);
    }
    return out;
}

Instance apply_instance(const Automorphism& g, const Instance& inst) {
    std::vector<Vertex> fv;
    for (auto& v : inst.fault.vertices) fv.push_back(g.apply(v));
    std::vector<VertexPair> pv;
    for (auto& p : inst.pairs.pairs) pv.emplace_back(g.apply(p.a), g.apply(p.b));
    return Instance(inst.n, Fault(inst.n, fv), PairSet(inst.n, pv));
}

} // namespace

std::pair<std::vector<uint32_t>, Automorphism> canonicalize(const Instance& inst) {
    int n = inst.n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::optional<std::vector<uint32_t>> best;
    Automorphism best_g;
    do {
        for (uint32_t f = 0; f < (1u << n); ++f) {
            Automorphism g{n, perm, f};
            auto enc = encode_instance(apply_instance(g, inst));
            if (!best || enc < *best) {
                best = enc;
                best_g = g;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {*best, best_g};
}

namespace {
std::map<std::vector<uint32_t>, std::optional<Covering>> g_catalog;
std::mutex g_catalog_mu;
} // namespace

static std::optional<Covering> catalog_lookup(const Instance& inst) {
    auto [key, g] = canonicalize(inst);
    {
        std::lock_guard lk(g_catalog_mu);
        auto it = g_catalog.find(key);
        if (it != g_catalog.end()) {
            if (!it->second) return std::nullopt;
            Covering out;
            auto gi = g.inverse();
            for (auto& p : *it->second) out.push_back(gi.apply(p));
            return out;
        }
    }
    Instance canon = apply_instance(g, inst);
    auto res = oracle_solve(canon);
    if (res.verdict == Verdict::Indeterminate)
        throw Error("catalog search exhausted its budget");
    std::optional<Covering> stored;
    if (res.verdict == Verdict::Feasible) stored = *res.covering;
    {
        std::lock_guard lk(g_catalog_mu);
        g_catalog.emplace(key, stored);
    }
    if (!stored) return std::nullopt;
    Covering out;
    auto gi = g.inverse();
    for (auto& p : *stored) out.push_back(gi.apply(p));
    return out;
}

Covering catalog_cover(const Instance& inst) {
    auto c = catalog_lookup(inst);
    if (!c) throw InfeasibleError("no covering exists for this base instance");
    return *c;
}

bool catalog_feasible(const Instance& inst) { return catalog_lookup(inst).has_value(); }

void catalog_clear() {
    std::lock_guard lk(g_catalog_mu);
    g_catalog.clear();
}

size_t catalog_size() {
    std::lock_guard lk(g_catalog_mu);
    return g_catalog.size();
}

namespace {

std::vector<Vertex> vertices_of_color(int n, Color c, const Fault* avoid = nullptr) {
    std::vector<Vertex> out;
    for (uint32_t b = 0; b < (1u << n); ++b) {
        Vertex v(n, b);
        if (v.color() != c) continue;
        if (avoid && avoid->contains(v)) continue;
        out.push_back(v);
    }
    return out;
}

// k-subsets in lexicographic order; f returns false to stop
bool for_each_subset(const std::vector<Vertex>& pool, int k,
                     const std::function<bool(const std::vector<Vertex>&)>& f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > (int)pool.size()) return true;
    std::vector<Vertex> cur(k);
    while (true) {
        for (int i = 0; i < k; ++i) cur[i] = pool[idx[i]];
        if (!f(cur)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == (int)pool.size() - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

void for_each_fault(int n, int M, int C, const std::function<bool(const Fault&)>& f) {
    if ((M + C) % 2 != 0 || C > M) return;
    auto reds = vertices_of_color(n, Color::Red);
    auto greens = vertices_of_color(n, Color::Green);
    std::vector<std::pair<int, int>> splits; // (red count, green count)
    splits.emplace_back((M + C) / 2, (M - C) / 2);
    if (C > 0) splits.emplace_back((M - C) / 2, (M + C) / 2);
    for (auto [rc, gc] : splits) {
        bool go = for_each_subset(reds, rc, [&](const std::vector<Vertex>& rs) {
            return for_each_subset(greens, gc, [&](const std::vector<Vertex>& gs) {
                std::vector<Vertex> all = rs;
                all.insert(all.end(), gs.begin(), gs.end());
                return f(Fault(n, all));
            });
        });
        if (!go) return;
    }
}

void for_each_pairset(int n, const Fault& fault, int N, int O,
                      const std::function<bool(const PairSet&)>& f) {
    int c = fault.red_count() - fault.green_count();
    if ((O + c) % 2 != 0) return;
    int gE = (O + c) / 2, rE = O - gE;
    if (gE < 0 || rE < 0) return;
    std::vector<Vertex> free;
    for (uint32_t b = 0; b < (1u << n); ++b) {
        Vertex v(n, b);
        if (!fault.contains(v)) free.push_back(v);
    }
    std::vector<VertexPair> chosen;
    std::vector<bool> used(free.size(), false);
    // pairs picked in globally increasing order so each set appears once
    std::function<bool(long long, int, int, int, int)> rec = [&](long long minpair, int nn,
                                                                 int rr, int gg,
                                                                 int lo) -> bool {
        if (nn == 0 && rr == 0 && gg == 0) return f(PairSet(n, chosen));
        for (size_t i = lo; i < free.size(); ++i) {
            if (used[i]) continue;
            for (size_t j = i + 1; j < free.size(); ++j) {
                if (used[j]) continue;
                VertexPair p(free[i], free[j]);
                long long code = ((long long)p.a.bits << 24) | p.b.bits;
                if (code < minpair) continue;
                bool neutral = p.neutral();
                bool is_red = !neutral && p.charge_color() == Color::Red;
                bool is_green = !neutral && !is_red;
                if ((neutral && nn == 0) || (is_red && rr == 0) || (is_green && gg == 0))
                    continue;
                used[i] = used[j] = true;
                chosen.push_back(p);
                bool go = rec(code + 1, nn - neutral, rr - is_red, gg - is_green,
                              (int)i + 1);
                chosen.pop_back();
                used[i] = used[j] = false;
                if (!go) return false;
            }
        }
        return true;
    };
    rec(-1, N, rE, gE, 0);
}

Fault random_fault(int n, int M, int C, std::mt19937_64& rng) {
    if ((M + C) % 2 != 0 || C > M) throw RangeError("invalid fault shape");
    int rc = (M + C) / 2, gc = (M - C) / 2;
    auto reds = vertices_of_color(n, Color::Red);
    auto greens = vertices_of_color(n, Color::Green);
    std::vector<Vertex> out;
    auto pick = [&](std::vector<Vertex>& pool, int k) {
        for (int i = 0; i < k; ++i) {
            size_t j = i + rng() % (pool.size() - i);
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
    };
    pick(reds, rc);
    pick(greens, gc);
    return Fault(n, out);
}

PairSet random_pairset(int n, const Fault& fault, int N, int O, std::mt19937_64& rng) {
    int c = fault.red_count() - fault.green_count();
    if ((O + c) % 2 != 0) throw RangeError("no balanced pair set exists");
    int gE = (O + c) / 2, rE = O - gE;
    if (gE < 0 || rE < 0) throw RangeError("no balanced pair set exists");
    auto reds = vertices_of_color(n, Color::Red, &fault);
    auto greens = vertices_of_color(n, Color::Green, &fault);
    auto draw = [&](std::vector<Vertex>& pool) {
        size_t j = rng() % pool.size();
        Vertex v = pool[j];
        pool.erase(pool.begin() + j);
        return v;
    };
    std::vector<VertexPair> ps;
    for (int i = 0; i < N; ++i) ps.emplace_back(draw(reds), draw(greens));
    for (int i = 0; i < rE; ++i) ps.emplace_back(draw(reds), draw(reds));
    for (int i = 0; i < gE; ++i) ps.emplace_back(draw(greens), draw(greens));
    return PairSet(n, ps);
}

Instance random_instance(int n, const Signature& sig, std::mt19937_64& rng) {
    Fault f = random_fault(n, sig.M, sig.C, rng);
    PairSet p = random_pairset(n, f, sig.N, sig.O, rng);
    return Instance(n, f, p);
}

SweepReport oracle_exists_all(int n, const Signature& sig, const SearchBudget& budget,
                              long long sample_count, uint64_t seed, int jobs) {
    (void)jobs; // per-instance search is cheap at oracle scale
    SweepReport rep;
    auto check = [&](const Instance& inst) {
        ++rep.checked;
        Verdict v;
        if (n <= 4 && budget.max_nodes >= SearchBudget{}.max_nodes) {
            v = catalog_feasible(inst) ? Verdict::Feasible : Verdict::Infeasible;
        } else {
            v = oracle_solve(inst, budget).verdict;
        }
        if (v == Verdict::Feasible) ++rep.feasible;
        else if (v == Verdict::Indeterminate) ++rep.indeterminate;
        else {
            ++rep.infeasible;
            if (rep.witnesses.size() < 16) rep.witnesses.push_back(inst);
        }
    };
    if (sample_count > 0) {
        std::mt19937_64 rng(seed);
        for (long long i = 0; i < sample_count; ++i)
            check(random_instance(n, sig, rng));
    } else {
        for_each_fault(n, sig.M, sig.C, [&](const Fault& f) {
            for_each_pairset(n, f, sig.N, sig.O, [&](const PairSet& p) {
                check(Instance(n, f, p));
                return true;
            });
            return true;
        });
    }
    return rep;
}

std::vector<CounterexampleRecord> counterexample_catalog() {
    auto V = [](const char* s) { return Vertex::parse(s); };
    auto I = [](int n, std::vector<Vertex> f, std::vector<VertexPair> p) {
        return Instance(n, Fault(n, std::move(f)), PairSet(n, std::move(p)));
    };
    std::vector<CounterexampleRecord> out;
    // (a) Q3, one deleted vertex, one neutral + one charged pair; the same
    // five vertices with three of them deleted also witness the (3,1,0,1)
    // bound
    out.push_back({"q3-one-fault-mixed-pairs",
                   I(3, {V("101")},
                     {VertexPair(V("110"), V("111")), VertexPair(V("010"), V("001"))})});
    // (b) Q3, two deleted reds, two green pairs
    out.push_back({"q3-two-faults-two-green-pairs",
                   I(3, {V("110"), V("101")},
                     {VertexPair(V("010"), V("001")), VertexPair(V("100"), V("111"))})});
    // (c) Q3, antipodal neutral fault, two neutral pairs
    out.push_back({"q3-antipodal-fault-two-neutral-pairs",
                   I(3, {V("000"), V("111")},
                     {VertexPair(V("100"), V("011")), VertexPair(V("010"), V("101"))})});
    // (d) Q4, mass-3 charge-1 fault, one neutral + one charged pair
    out.push_back({"q4-three-faults-mixed-pairs",
                   I(4, {V("0000"), V("0101"), V("0111")},
                     {VertexPair(V("1100"), V("1000")), VertexPair(V("0010"), V("1110"))})});
    // (e) Q4, mass-4 neutral fault, single neutral pair
    out.push_back({"q4-four-faults-one-pair",
                   I(4, {V("1000"), V("1110"), V("1111"), V("0011")},
                     {VertexPair(V("0100"), V("1001"))})});
    // (f) Q4, no fault, three neutral pairs
    out.push_back({"q4-three-neutral-pairs",
                   I(4, {},
                     {VertexPair(V("0000"), V("0111")), VertexPair(V("0101"), V("0010")),
                      VertexPair(V("0110"), V("0001"))})});
    // (g) Q4, neutral mass-2 fault, two charged pairs
    out.push_back({"q4-two-faults-two-charged-pairs",
                   I(4, {V("0110"), V("1101")},
                     {VertexPair(V("0011"), V("0101")), VertexPair(V("1011"), V("1110"))})});
    // (h) Q4, one deleted vertex, three charged pairs
    out.push_back({"q4-one-fault-three-charged-pairs",
                   I(4, {V("0110")},
                     {VertexPair(V("0011"), V("0101")), VertexPair(V("1011"), V("1110")),
                      VertexPair(V("1101"), V("1000"))})});
    return out;
}

Instance conjecture_counterexample(int which, int k) {
    if (which < 2 || which > 4) throw RangeError("which must be 2, 3 or 4");
    if (which == 4 ? k < 0 : k < 1) throw RangeError("k below the family's range");
    int n = which == 4 ? k + 3 : k + 2;
    if (n > kMaxDim) throw RangeError("dimension cap exceeded");
    Vertex r(n, 1); // smallest red vertex
    std::vector<Vertex> fault;
    std::vector<VertexPair> pairs;
    if (which == 2) {
        // delete k+1 reds plus every green neighbor of r except two
        Vertex g1 = r.flip(1), g2 = r.flip(2);
        for (int i = 3; i <= n; ++i) fault.push_back(r.flip(i));
        int reds = 0;
        for (uint32_t b = 0; b < (1u << n) && reds < k + 1; ++b) {
            Vertex v(n, b);
            if (!v.red() || v == r) continue;
            if (std::find(fault.begin(), fault.end(), v) != fault.end()) continue;
            fault.push_back(v);
            ++reds;
        }
        pairs.emplace_back(g1, g2);
    } else if (which == 3) {
        Vertex rv = r.flip(n); // r x_{k+2}
        for (int i = 1; i <= k; ++i) {
            fault.push_back(r.flip(i));
            fault.push_back(rv.flip(i));
        }
        pairs.emplace_back(r.flip(k + 1), r.flip(k + 1).flip(n));
    } else {
        Vertex rv = r.flip(n); // r x_{k+3}
        for (int i = 1; i <= k; ++i) fault.push_back(r.flip(i));
        for (int i = 1; i <= k + 1; ++i) fault.push_back(rv.flip(i));
        Vertex t1 = r.flip(k + 1), t2 = r.flip(k + 2), t3 = r.flip(k + 2).flip(n);
        pairs.emplace_back(t1, t2);
        Fault f(n, fault);
        for (uint32_t b = 0;; ++b) {
            if (b >= (1u << n)) throw InternalCaseError("no free green vertex");
            Vertex g(n, b);
            if (!g.green() || f.contains(g)) continue;
            if (g == t1 || g == t2 || g == t3) continue;
            pairs.emplace_back(t3, g);
            break;
        }
    }
    return Instance(n, Fault(n, fault), PairSet(n, pairs));
}

} // namespace qpath
