#include <algorithm>
#include <functional>

#include "qpath/constructors.hpp"
#include "qpath/oracle.hpp"

// Builders that excise vertices from plate paths and reroute through the
// other plate; all assembly goes through weld(), which inserts the single
// bridge or plate step connecting consecutive pieces.

namespace qpath {

namespace {

void need(bool ok, const char* msg) {
    if (!ok) throw HypothesisError(msg);
}

void internal(bool ok, const char* msg) {
    if (!ok) throw InternalCaseError(msg);
}

// piece of p strictly before vertex index i .. strictly after j, etc.
Path prefix_to(const Path& p, int i) { return cut(p, i).first; }
Path suffix_from(const Path& p, int i) { return cut(p, i).second; }

// drop the final vertex
Path drop_end(const Path& p) { return cut(p, p.length() - 1).first; }

// Exhaustive Q3 search: first Hamiltonian path of Q3 - {del} from s to t
// that traverses the directed edge a -> b, neighbors tried in letter order.
std::optional<Path> q3_path_with_edge(const Vertex& del, const Vertex& s, const Vertex& t,
                                      const Vertex& a, const Vertex& b) {
    std::vector<Vertex> seq{s};
    uint32_t used = (1u << s.bits) | (1u << del.bits);
    Word word;
    std::optional<Path> found;
    std::function<void()> go = [&]() {
        if (found) return;
        Vertex cur = seq.back();
        if ((int)seq.size() == 7) {
            if (cur != t) return;
            for (size_t i = 0; i + 1 < seq.size(); ++i)
                if (seq[i] == a && seq[i + 1] == b) {
                    found = Path(s, word);
                    return;
                }
            return;
        }
        for (Letter l = 1; l <= 3; ++l) {
            Vertex nx = cur.flip(l);
            if (used & (1u << nx.bits)) continue;
            used |= 1u << nx.bits;
            seq.push_back(nx);
            word.push_back(l);
            go();
            word.pop_back();
            seq.pop_back();
            used &= ~(1u << nx.bits);
        }
    };
    go();
    return found;
}

} // namespace

OrientedSharedEdge oriented_shared_edge(int n, const PlateSplit& split, const Vertex& r1,
                                        const Vertex& g1, const Vertex& g2,
                                        const Vertex& r2, const Vertex& g3,
                                        const Vertex& g4, TraceNode* tr) {
    if (n < 4) throw ThresholdError("oriented-shared-edge: dimension below bound");
    need(split.dim == n, "split dimension mismatch");
    Plate P1 = split.side(r1), P2 = split.side(r2);
    need(P1 != P2, "the two deleted vertices must sit on opposite plates");
    need(r1.color() == r2.color(), "deleted vertices must share a parity");
    need(split.side(g1) == P1 && split.side(g2) == P1, "first pair must share r1's plate");
    need(split.side(g3) == P2 && split.side(g4) == P2, "second pair must share r2's plate");
    need(g1 != g2 && g3 != g4, "ends must be distinct");
    need(g1.color() == g2.color() && g1.color() != r1.color(), "first plate parity");
    need(g3.color() == g4.color() && g3.color() != r2.color(), "second plate parity");
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    TraceNode* me = trace_child(tr, "oriented-shared-edge", split.axis);
    if (n == 4) {
        for (uint32_t ab = 0; ab < 8; ++ab)
            for (Letter x = 1; x <= 3; ++x) {
                Vertex pa(3, ab), pb = pa.flip(x);
                if (pa == pj(r1) || pb == pj(r1)) continue;
                if (pa == pj(r2) || pb == pj(r2)) continue;
                auto c1 = q3_path_with_edge(pj(r1), pj(g1), pj(g2), pa, pb);
                if (!c1) continue;
                auto c2 = q3_path_with_edge(pj(r2), pj(g3), pj(g4), pa, pb);
                if (!c2) continue;
                return {split.lift_path(P1, *c1), split.lift_path(P2, *c2),
                        split.embed(P1, pa), split.lift_letter(x)};
            }
        throw InternalCaseError("no shared oriented edge in the base case");
    }
    for (uint32_t ab = 0; ab < (1u << (n - 1)); ++ab)
        for (Letter x = 1; x <= n - 1; ++x) {
            Vertex pa(n - 1, ab), pb = pa.flip(x);
            bool clash = false;
            for (auto& w : {r1, g1, g2, r2, g3, g4})
                if (pj(w) == pa || pj(w) == pb) clash = true;
            if (clash) continue;
            Path c1 = charged_path_through_edge_one_fault(n - 1, pj(r1), pj(g1), pj(g2),
                                                          {pa, pb}, true, me);
            Path c2 = charged_path_through_edge_one_fault(n - 1, pj(r2), pj(g3), pj(g4),
                                                          {pa, pb}, true, me);
            return {split.lift_path(P1, c1), split.lift_path(P2, c2),
                    split.embed(P1, pa), split.lift_letter(x)};
        }
    throw InternalCaseError("no free plate edge for the shared step");
}

Covering two_green_pairs_fault22(int n, const Vertex& r1, const Vertex& r2,
                                 const Vertex& g1, const Vertex& g2, const Vertex& g3,
                                 const Vertex& g4, TraceNode* tr) {
    if (n < threshold(LemmaId::GG22))
        throw ThresholdError("two-green-pairs-fault22: dimension below bound");
    need(r1 != r2 && r1.color() == r2.color(), "two distinct same-parity deletions");
    std::vector<Vertex> gs{g1, g2, g3, g4};
    std::sort(gs.begin(), gs.end());
    need(std::adjacent_find(gs.begin(), gs.end()) == gs.end(), "ends must be distinct");
    for (auto& g : {g1, g2, g3, g4})
        need(g.color() != r1.color(), "ends must oppose the deleted parity");
    PlateSplit split = choose_axis(n, {{r1, r2, true}});
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    Vertex rt = r1, rb = r2;
    Plate T = split.side(rt), B = other(T);
    int on_top = 0;
    for (auto& g : {g1, g2, g3, g4}) on_top += split.side(g) == T;
    if (on_top < 2) { // mirror: work from the fuller plate
        std::swap(rt, rb);
        std::swap(T, B);
        on_top = 4 - on_top;
    }
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::GG22), split.axis);
    auto finish = [&](Path pa, Path pb) {
        return Covering{orient(pa, g1), orient(pb, g3)};
    };
    if (on_top == 4) {
        if (me) me->label = "1";
        // one pair frames the walk, the other is its inner stretch
        for (auto [oa, ob, ia, ib] :
             {std::array<Vertex, 4>{g1, g2, g3, g4}, {g3, g4, g1, g2}}) {
            for (auto [p, q] : {std::pair<Vertex, Vertex>{oa, ob}, {ob, oa}}) {
                Path top = up(T, laceable_path(n - 1, pj(rt), pj(p), pj(q), me));
                int i = find_vertex(top, ia), j = find_vertex(top, ib);
                if (i > j) std::swap(i, j);
                auto vs = path_vertices(top);
                Vertex u1 = split.partner(vs[i - 1]), u2 = split.partner(vs[j + 1]);
                if (u1 == rb || u2 == rb) continue;
                Path bot = up(B, laceable_path(n - 1, pj(rb), pj(u1), pj(u2), me));
                Path outer = weld({prefix_to(top, i - 1), orient(bot, u1),
                                   suffix_from(top, j + 1)});
                Path inner = Path(vs[i], Word(top.word.begin() + i, top.word.begin() + j));
                return oa == g1 ? finish(outer, inner) : finish(inner, outer);
            }
        }
        throw InternalCaseError("no bridge placement for the framed pair");
    }
    if (on_top == 3) {
        if (me) me->label = "2";
        // whole pair (wa, wb) on T; split pair has s on T, t on B
        bool first_whole = split.side(g1) == T && split.side(g2) == T;
        Vertex wa = first_whole ? g1 : g3, wb = first_whole ? g2 : g4;
        Vertex s = first_whole ? (split.side(g3) == T ? g3 : g4)
                               : (split.side(g1) == T ? g1 : g2);
        Vertex t = first_whole ? (split.side(g3) == T ? g4 : g3)
                               : (split.side(g1) == T ? g2 : g1);
        for (auto [p, q] : {std::pair<Vertex, Vertex>{wa, wb}, {wb, wa}}) {
            Path top = up(T, laceable_path(n - 1, pj(rt), pj(p), pj(s), me));
            int iq = find_vertex(top, q);
            auto vs = path_vertices(top);
            Vertex succ_q = vs[iq + 1];
            Path xi = prefix_to(top, iq);             // p .. q
            Path eta_back = reverse(suffix_from(top, iq)); // s .. q
            Path whole, sp;
            if (split.partner(succ_q) != t) { // 2(a)
                if (me) me->label = "2a";
                Vertex c = split.partner(succ_q);
                Path bot = up(B, laceable_path(n - 1, pj(rb), pj(c), pj(t), me));
                whole = xi;
                sp = weld(drop_end(eta_back), orient(bot, c));
            } else { // 2(b): q dives straight onto t
                if (split.partner(p) == rb) continue; // need p off the bridge of rb
                if (me) me->label = "2b";
                Vertex pv = split.partner(p);
                Vertex p1 = vs[1], p1v = split.partner(p1);
                if (n >= 5 || !in_b_set(pj(rb), pj(t), pj(pv), pj(p1v))) {
                    Path bot = up(B, neutral_path_two_faults(n - 1, pj(rb), pj(t), pj(pv),
                                                             pj(p1v), me));
                    whole = weld({Path(p, {}), bot, suffix_from(xi, 1)});
                } else {
                    Vertex p2 = vs[2], p2v = split.partner(p2);
                    internal(!in_b_set(pj(rb), pj(t), pj(p1v), pj(p2v)),
                             "successive bridge pair must be unblocked");
                    Path bot = up(B, neutral_path_two_faults(n - 1, pj(rb), pj(t), pj(p1v),
                                                             pj(p2v), me));
                    whole = weld({prefix_to(xi, 1), bot, suffix_from(xi, 2)});
                }
                sp = weld(drop_end(eta_back), Path(t, {}));
            }
            return first_whole ? finish(whole, sp) : finish(sp, whole);
        }
        throw InternalCaseError("neither orientation fits the split pair");
    }
    // two greens per plate
    bool pair1_split = split.side(g1) != split.side(g2);
    if (!pair1_split) {
        if (me) me->label = "3";
        Vertex ta = split.side(g1) == T ? g1 : g3, tb = split.side(g1) == T ? g2 : g4;
        Vertex ba = split.side(g1) == T ? g3 : g1, bb = split.side(g1) == T ? g4 : g2;
        Path pt = up(T, laceable_path(n - 1, pj(rt), pj(ta), pj(tb), me));
        Path pb = up(B, laceable_path(n - 1, pj(rb), pj(ba), pj(bb), me));
        return split.side(g1) == T ? finish(pt, pb) : finish(pb, pt);
    }
    if (me) me->label = "4";
    Vertex a1 = split.side(g1) == T ? g1 : g2, a2 = split.side(g1) == T ? g2 : g1;
    Vertex b1 = split.side(g3) == T ? g3 : g4, b2 = split.side(g3) == T ? g4 : g3;
    auto sh = oriented_shared_edge(n, split, rt, a1, b1, rb, a2, b2, me);
    Vertex av = split.partner(sh.a);
    int i1 = find_vertex(sh.gamma1, sh.a);
    int j1 = find_vertex(sh.gamma2, av);
    Path p1 = weld(prefix_to(sh.gamma1, i1), reverse(prefix_to(sh.gamma2, j1)));
    Path p2 = weld(reverse(suffix_from(sh.gamma1, i1 + 1)),
                   suffix_from(sh.gamma2, j1 + 1));
    return finish(p1, p2);
}

Path separated_path(int n, const std::vector<Vertex>& l, const Vertex& r, TraceNode* tr) {
    if (n < 3) throw ThresholdError("separated-path: dimension below bound");
    int k = (int)l.size();
    need(k >= 2 && k <= n - 1, "marked set must have between 2 and n-1 vertices");
    for (auto& g : l) need(g.color() != r.color(), "marked vertices oppose the deleted one");
    {
        auto s = l;
        std::sort(s.begin(), s.end());
        need(std::adjacent_find(s.begin(), s.end()) == s.end(),
             "marked vertices must be distinct");
    }
    if (k == 2) {
        trace_child(tr, "separated-path", 0, "pair");
        return laceable_path(n, r, l[0], l[1], tr);
    }
    std::vector<Vertex> ll = l;
    PlateSplit split = choose_axis(n, {{ll.front(), ll.back(), true}});
    if (split.side(r) != split.side(ll.front()))
        std::reverse(ll.begin(), ll.end()); // keep the deleted vertex beside the start
    TraceNode* me = trace_child(tr, "separated-path", split.axis);
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    Plate T = split.side(ll.front()), B = other(T);
    std::vector<Vertex> lt, lb;
    for (auto& g : ll) (split.side(g) == T ? lt : lb).push_back(g);
    Path full;
    if (lt.size() == 1) {
        if (me) me->label = "lone-start";
        Vertex g2 = lb.front();
        Vertex u; // g2 x v, the top landing spot
        bool ok = false;
        for (Letter x = 1; x <= n && !ok; ++x) {
            if (x == split.axis) continue;
            u = split.partner(g2.flip(x));
            if (u != ll.front()) ok = true;
        }
        internal(ok, "no landing spot beside the next marked vertex");
        Path top = up(T, laceable_path(n - 1, pj(r), pj(ll.front()), pj(u), me));
        Vertex del = split.partner(u); // g2 x, consumed as connector
        std::vector<Vertex> sub;
        for (auto& g : lb) sub.push_back(pj(g));
        Path bot = up(B, separated_path(n - 1, sub, pj(del), me));
        full = weld({top, Path(del, {}), orient(bot, g2)});
    } else {
        if (me) me->label = "recurse-top";
        std::vector<Vertex> subt;
        for (auto& g : lt) subt.push_back(pj(g));
        Path top = up(T, separated_path(n - 1, subt, pj(r), me));
        Vertex gi = lt.back();
        Vertex del = split.partner(gi); // gi v, consumed by the bottom recursion
        Vertex start; // gi v x, first bottom marked spot
        bool ok = false;
        for (Letter x = 1; x <= n && !ok; ++x) {
            if (x == split.axis) continue;
            start = del.flip(x);
            if (std::find(ll.begin(), ll.end(), start) == ll.end()) ok = true;
        }
        internal(ok, "no unmarked neighbor below the plate exit");
        std::vector<Vertex> sub{pj(start)};
        for (auto& g : lb) sub.push_back(pj(g));
        Path bot = up(B, separated_path(n - 1, sub, pj(del), me));
        full = weld({top, Path(del, {}), orient(bot, start)});
    }
    return orient(full, l.front());
}

Path neutral_path_fault4(int n, const Vertex& fr1, const Vertex& fr2, const Vertex& fg1,
                         const Vertex& fg2, const Vertex& r, const Vertex& g,
                         TraceNode* tr) {
    if (n < threshold(LemmaId::NPF4))
        throw ThresholdError("neutral-path-fault4: dimension below bound");
    need(fr1.color() == fr2.color() && fg1.color() == fg2.color() &&
             fr1.color() != fg1.color(),
         "fault must hold two vertices of each parity");
    need(fr1 != fr2 && fg1 != fg2, "deleted vertices must be distinct");
    need(r.color() != g.color(), "terminal pair must be neutral");
    for (auto& v : {fr1, fr2, fg1, fg2})
        need(v != r && v != g, "terminals must survive");
    Vertex dr1 = fr1, dr2 = fr2, dg1 = fg1, dg2 = fg2;
    if (dr1.color() != r.color()) { // name the fault after the terminals
        std::swap(dr1, dg1);
        std::swap(dr2, dg2);
    }
    PlateSplit split = choose_axis(n, {{dr1, dr2, true}});
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::NPF4), split.axis);
    auto smallest_on = [&](Plate p, auto&& pred) {
        for (uint32_t b = 0; b < (1u << n); ++b) {
            Vertex v(n, b);
            if (split.side(v) == p && pred(v)) return v;
        }
        throw InternalCaseError("no vertex satisfies the selection rule");
    };
    if (split.side(dg1) == split.side(dg2)) {
        Plate T = split.side(dg1), B = other(T);
        Vertex drt = split.side(dr1) == T ? dr1 : dr2;
        Vertex drb = split.side(dr1) == T ? dr2 : dr1;
        bool r_top = split.side(r) == T, g_top = split.side(g) == T;
        if (r_top && g_top) {
            if (me) me->label = "A1";
            Path top = up(T, neutral_path_two_faults(n - 1, pj(drt), pj(dg1), pj(r),
                                                     pj(g), me));
            int i = find_vertex(top, dg2);
            internal(i > 0 && i < top.length(), "excised vertex must be interior");
            auto vs = path_vertices(top);
            Vertex u1 = split.partner(vs[i - 1]), u2 = split.partner(vs[i + 1]);
            Path bot = up(B, laceable_path(n - 1, pj(drb), pj(u1), pj(u2), me));
            return orient(weld({prefix_to(top, i - 1), orient(bot, u1),
                                suffix_from(top, i + 1)}),
                          r);
        }
        if (g_top && !r_top) {
            if (me) me->label = "A2";
            Vertex r3 = smallest_on(T, [&](const Vertex& v) {
                return v.color() == r.color() && v != drt && distance(v, dg2) >= 3;
            });
            Path top = up(T, neutral_path_two_faults(n - 1, pj(drt), pj(dg1), pj(g),
                                                     pj(r3), me));
            int i = find_vertex(top, dg2);
            internal(i > 0 && i < top.length(), "excised vertex must be interior");
            auto vs = path_vertices(top);
            Vertex u1 = split.partner(vs[i - 1]), u2 = split.partner(vs[i + 1]);
            Vertex r3v = split.partner(r3);
            auto cov = mixed_pair(n - 1, pj(drb), pj(r), pj(r3v), pj(u1), pj(u2), me);
            Path charged = up(B, covering_path(cov, pj(u1), pj(u2)));
            Path neutral = up(B, covering_path(cov, pj(r3v), pj(r)));
            return orient(weld({prefix_to(top, i - 1), charged, suffix_from(top, i + 1),
                                neutral}),
                          r);
        }
        if (r_top && !g_top) {
            if (me) me->label = "A3";
            Vertex r3 = smallest_on(T, [&](const Vertex& v) {
                return v.color() == r.color() && v != drt && v != r &&
                       split.partner(v) != g;
            });
            Path top = up(T, charged_path_fault31(n - 1, pj(drt), pj(dg1), pj(dg2),
                                                  pj(r), pj(r3), me));
            Path bot = up(B, laceable_path(n - 1, pj(drb), pj(split.partner(r3)), pj(g),
                                           me));
            return orient(weld(top, bot), r);
        }
        if (me) me->label = "A4";
        Vertex r3 = smallest_on(T, [&](const Vertex& v) {
            return v.color() == r.color() && v != drt && split.partner(v) != g;
        });
        Vertex r4 = smallest_on(T, [&](const Vertex& v) {
            return v.color() == r.color() && v != drt && v != r3 &&
                   split.partner(v) != g;
        });
        Path top = up(T, charged_path_fault31(n - 1, pj(drt), pj(dg1), pj(dg2), pj(r3),
                                              pj(r4), me));
        Vertex r3v = split.partner(r3), r4v = split.partner(r4);
        auto cov = mixed_pair(n - 1, pj(drb), pj(r), pj(r3v), pj(r4v), pj(g), me);
        Path neutral = up(B, covering_path(cov, pj(r), pj(r3v)));
        Path charged = up(B, covering_path(cov, pj(r4v), pj(g)));
        return weld({neutral, top, charged});
    }
    // one deleted green per plate
    Plate T;
    if (split.side(r) == split.side(g))
        T = split.side(r);
    else
        T = split.side(g);
    Plate B = other(T);
    Vertex drt = split.side(dr1) == T ? dr1 : dr2;
    Vertex drb = split.side(dr1) == T ? dr2 : dr1;
    Vertex dgt = split.side(dg1) == T ? dg1 : dg2;
    Vertex dgb = split.side(dg1) == T ? dg2 : dg1;
    if (split.side(r) == split.side(g)) {
        if (me) me->label = "B1";
        Path top = up(T, neutral_path_two_faults(n - 1, pj(drt), pj(dgt), pj(r), pj(g),
                                                 me));
        auto vs = path_vertices(top);
        for (size_t i = 0; i + 1 < vs.size(); ++i) {
            Vertex c = split.partner(vs[i]), d = split.partner(vs[i + 1]);
            if (c == drb || c == dgb || d == drb || d == dgb) continue;
            Path bot = up(B, neutral_path_two_faults(n - 1, pj(drb), pj(dgb), pj(c),
                                                     pj(d), me));
            return orient(weld({prefix_to(top, (int)i), bot, suffix_from(top, (int)i + 1)}),
                          r);
        }
        throw InternalCaseError("no free edge to dive through");
    }
    if (me) me->label = "B2";
    Vertex r3 = smallest_on(T, [&](const Vertex& v) {
        return v.color() == r.color() && v != drt && v != r &&
               split.partner(v) != dgb;
    });
    Path top = up(T, neutral_path_two_faults(n - 1, pj(drt), pj(dgt), pj(g), pj(r3), me));
    Path bot = up(B, neutral_path_two_faults(n - 1, pj(drb), pj(dgb),
                                             pj(split.partner(r3)), pj(r), me));
    return orient(weld(top, orient(bot, split.partner(r3))), r);
}

Covering three_neutral_pairs(int n, const std::vector<VertexPair>& pairs, TraceNode* tr) {
    if (n < threshold(LemmaId::TRIPLE))
        throw ThresholdError("three-neutral-pairs: dimension below bound");
    need(pairs.size() == 3, "exactly three pairs expected");
    std::vector<Vertex> all;
    for (auto& p : pairs) {
        need(p.neutral(), "pairs must be neutral");
        all.push_back(p.a);
        all.push_back(p.b);
    }
    std::sort(all.begin(), all.end());
    need(std::adjacent_find(all.begin(), all.end()) == all.end(),
         "ends must be distinct");
    Vertex rr[3], gg[3];
    for (int i = 0; i < 3; ++i) {
        rr[i] = pairs[i].a.red() ? pairs[i].a : pairs[i].b;
        gg[i] = pairs[i].a.red() ? pairs[i].b : pairs[i].a;
    }
    Letter ax = 0;
    for (Letter l = 1; l <= n && !ax; ++l) {
        int c = rr[0].coord(l) + rr[1].coord(l) + rr[2].coord(l);
        if (c == 1 || c == 2) ax = l;
    }
    internal(ax != 0, "three distinct vertices always split");
    PlateSplit split(n, ax);
    // renumber so pairs 0,1 carry the two reds of one plate
    int order[3] = {0, 1, 2};
    {
        Plate s0 = split.side(rr[0]), s1 = split.side(rr[1]), s2 = split.side(rr[2]);
        if (s0 == s1)
            ; // already 2-1
        else if (s0 == s2)
            std::swap(order[1], order[2]);
        else
            std::swap(order[0], order[2]);
    }
    Vertex r1 = rr[order[0]], r2 = rr[order[1]], r3 = rr[order[2]];
    Vertex g1 = gg[order[0]], g2 = gg[order[1]], g3 = gg[order[2]];
    Plate T = split.side(r1), B = other(T);
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::TRIPLE), split.axis);
    Path out1, out2, out3; // connect (r1,g1), (r2,g2), (r3,g3)
    int greens_top = (split.side(g1) == T) + (split.side(g2) == T) + (split.side(g3) == T);
    if (greens_top == 3) {
        if (me) me->label = "1";
        auto cov = dvorak_pair(n - 1, pj(r1), pj(g1), pj(r2), pj(g2), me);
        Path pa = up(T, covering_path(cov, pj(r1), pj(g1)));
        Path pb = up(T, covering_path(cov, pj(r2), pj(g2)));
        bool on_b = find_vertex(pb, g3) >= 0;
        Path& host = on_b ? pb : pa;
        Path& plain = on_b ? pa : pb;
        int i = find_vertex(host, g3);
        internal(i > 0 && i < host.length(), "third end must be interior");
        auto vs = path_vertices(host);
        Vertex u1 = split.partner(vs[i - 1]), u2 = split.partner(vs[i + 1]);
        Vertex g3v = split.partner(g3);
        Path mid, third;
        if (g3v != r3) {
            auto bcov = two_charged_pairs(n - 1, pj(g3v), pj(r3), pj(u1), pj(u2), false,
                                          me);
            mid = up(B, covering_path(bcov, pj(u1), pj(u2)));
            third = weld(up(B, covering_path(bcov, pj(r3), pj(g3v))), Path(g3, {}));
        } else {
            mid = up(B, laceable_path(n - 1, pj(r3), pj(u1), pj(u2), me));
            third = Path(r3, {split.axis});
        }
        Path hosted = weld({prefix_to(host, i - 1), orient(mid, u1),
                            suffix_from(host, i + 1)});
        out3 = orient(third, r3);
        if (on_b) {
            out1 = plain;
            out2 = hosted;
        } else {
            out1 = hosted;
            out2 = plain;
        }
    } else if (greens_top == 2) {
        if (split.side(g3) == B) {
            if (me) me->label = "2-matched";
            auto cov = dvorak_pair(n - 1, pj(r1), pj(g1), pj(r2), pj(g2), me);
            out1 = up(T, covering_path(cov, pj(r1), pj(g1)));
            out2 = up(T, covering_path(cov, pj(r2), pj(g2)));
            out3 = up(B, havel_path(n - 1, pj(r3), pj(g3), me));
        } else {
            if (me) me->label = "2-crossed";
            // the top pair whose green went below dives; g3 stays on top
            bool one_crossed = split.side(g1) == B;
            Vertex ra = one_crossed ? r2 : r1, ga = one_crossed ? g2 : g1;
            Vertex rc = one_crossed ? r1 : r2, gc = one_crossed ? g1 : g2;
            Vertex rcv = split.partner(rc), g3v = split.partner(g3);
            Path pa, pc, p3;
            if (rcv != gc && g3v != r3) {
                pa = up(T, neutral_path_two_faults(n - 1, pj(rc), pj(g3), pj(ra), pj(ga),
                                                   me));
                auto bcov = two_charged_pairs(n - 1, pj(r3), pj(g3v), pj(rcv), pj(gc),
                                              false, me);
                pc = weld(Path(rc, {}), up(B, covering_path(bcov, pj(rcv), pj(gc))));
                p3 = weld(up(B, covering_path(bcov, pj(r3), pj(g3v))), Path(g3, {}));
            } else if (rcv != gc && g3v == r3) {
                pa = up(T, neutral_path_two_faults(n - 1, pj(rc), pj(g3), pj(ra), pj(ga),
                                                   me));
                pc = weld(Path(rc, {}),
                          up(B, laceable_path(n - 1, pj(r3), pj(rcv), pj(gc), me)));
                p3 = Path(r3, {split.axis});
            } else if (rcv == gc && g3v != r3) {
                pa = up(T, neutral_path_two_faults(n - 1, pj(rc), pj(g3), pj(ra), pj(ga),
                                                   me));
                pc = Path(rc, {split.axis});
                p3 = weld(up(B, laceable_path(n - 1, pj(gc), pj(r3), pj(g3v), me)),
                          Path(g3, {}));
            } else {
                pa = up(T, neutral_path_two_faults(n - 1, pj(rc), pj(g3), pj(ra), pj(ga),
                                                   me));
                auto vs = path_vertices(pa);
                bool done = false;
                for (size_t i = 0; i + 1 < vs.size() && !done; ++i) {
                    Vertex c = split.partner(vs[i]), d = split.partner(vs[i + 1]);
                    if (c == r3 || c == gc || d == r3 || d == gc) continue;
                    Path bot = up(B, neutral_path_two_faults(n - 1, pj(r3), pj(gc),
                                                             pj(c), pj(d), me));
                    pa = weld({prefix_to(pa, (int)i), bot, suffix_from(pa, (int)i + 1)});
                    done = true;
                }
                internal(done, "no free edge to dive through");
                pc = Path(rc, {split.axis});
                p3 = Path(r3, {split.axis});
            }
            out3 = orient(p3, r3);
            if (one_crossed) {
                out1 = orient(pc, r1);
                out2 = orient(pa, r2);
            } else {
                out1 = orient(pa, r1);
                out2 = orient(pc, r2);
            }
        }
    } else if (greens_top == 1 && split.side(g3) == T) {
        Vertex r3v = split.partner(r3);
        Path host; // covers the top around the marked edge
        Path third;
        if (r3v == g3) {
            if (me) me->label = "3-bridged";
            host = up(T, laceable_path(n - 1, pj(g3), pj(r1), pj(r2), me));
            third = Path(r3, {split.axis});
        } else {
            if (me) me->label = "3-long";
            auto tcov = two_charged_pairs(n - 1, pj(r1), pj(r2), pj(g3), pj(r3v), true,
                                          me);
            host = up(T, covering_path(tcov, pj(r1), pj(r2)));
            third = weld(Path(r3, {}),
                         reverse(up(T, covering_path(tcov, pj(g3), pj(r3v)))));
        }
        auto vs = path_vertices(host);
        bool done = false;
        for (size_t i = 0; i + 1 < vs.size() && !done; ++i) {
            Vertex c = split.partner(vs[i]), d = split.partner(vs[i + 1]);
            bool clash = false;
            for (auto& w : {r3, g1, g2})
                if (c == w || d == w) clash = true;
            if (clash) continue;
            // prefix lands at c and continues to g1, suffix at d continues to g2;
            // exactly one of those pairs is neutral
            bool c_neutral = c.color() == r3.color();
            Vertex nmem = c_neutral ? c : d, npart = c_neutral ? g1 : g2;
            Vertex cmem = c_neutral ? d : c, cpart = c_neutral ? g2 : g1;
            auto bcov = mixed_pair(n - 1, pj(r3), pj(nmem), pj(npart), pj(cmem),
                                   pj(cpart), me);
            Path leg1 = up(B, covering_path(bcov, pj(c), pj(g1)));
            Path leg2 = up(B, covering_path(bcov, pj(d), pj(g2)));
            out1 = weld(prefix_to(host, (int)i), leg1);
            out2 = weld(reverse(suffix_from(host, (int)i + 1)), leg2);
            done = true;
        }
        internal(done, "no free edge to dive through");
        out1 = orient(out1, r1);
        out2 = orient(out2, r2);
        out3 = orient(third, r3);
    } else if (greens_top == 1) {
        if (me) me->label = "4";
        bool first_top = split.side(g1) == T;
        Vertex ra = first_top ? r1 : r2, ga = first_top ? g1 : g2;
        Vertex rc = first_top ? r2 : r1, gc = first_top ? g2 : g1;
        Vertex g4 = Vertex();
        bool ok = false;
        for (uint32_t b = 0; b < (1u << n) && !ok; ++b) {
            Vertex v(n, b);
            if (split.side(v) != T || v.color() != ga.color() || v == ga) continue;
            Vertex pv = split.partner(v);
            bool term = false;
            for (auto& w : {r3, g3, gc, rc, r1, r2, g1, g2})
                if (pv == w) term = true;
            if (term) continue;
            g4 = v;
            ok = true;
        }
        internal(ok, "no spare green with a free bridge");
        auto tcov = dvorak_pair(n - 1, pj(ra), pj(ga), pj(rc), pj(g4), me);
        auto bcov = dvorak_pair(n - 1, pj(r3), pj(g3), pj(split.partner(g4)), pj(gc),
                                me);
        Path pa = up(T, covering_path(tcov, pj(ra), pj(ga)));
        Path pc = weld(up(T, covering_path(tcov, pj(rc), pj(g4))),
                       up(B, covering_path(bcov, pj(split.partner(g4)), pj(gc))));
        out3 = up(B, covering_path(bcov, pj(r3), pj(g3)));
        if (first_top) {
            out1 = pa;
            out2 = pc;
        } else {
            out1 = pc;
            out2 = pa;
        }
    } else {
        if (me) me->label = "5";
        Vertex r4 = Vertex();
        bool ok = false;
        for (Letter x = 1; x <= n && !ok; ++x) {
            if (x == split.axis) continue;
            Vertex v = g1.flip(x);
            if (v == r3) continue;
            r4 = v;
            ok = true;
        }
        internal(ok, "no free neighbor of the first end");
        Path bot = up(B, neutral_path_two_faults(n - 1, pj(g1), pj(r4), pj(g2), pj(r3),
                                                 me));
        int i = find_vertex(bot, g3);
        internal(i > 0 && i < bot.length(), "third end must be interior");
        auto vs = path_vertices(bot);
        Vertex u = split.partner(vs[i - 1]);
        Vertex r4v = split.partner(r4);
        auto tcov = dvorak_pair(n - 1, pj(r1), pj(r4v), pj(r2), pj(u), me);
        out1 = weld({Path(g1, {}), Path(r4, {}),
                     reverse(up(T, covering_path(tcov, pj(r1), pj(r4v))))});
        out2 = weld(prefix_to(bot, i - 1),
                    reverse(up(T, covering_path(tcov, pj(r2), pj(u)))));
        out3 = suffix_from(bot, i);
        out1 = orient(out1, r1);
        out2 = orient(out2, r2);
        out3 = orient(out3, r3);
    }
    Covering result(3);
    for (int i = 0; i < 3; ++i) {
        Path p = i == 0 ? out1 : i == 1 ? out2 : out3;
        result[order[i]] = orient(p, pairs[order[i]].a);
    }
    return result;
}

namespace detail {

Path cycle_fault6(int n, const Fault& f, TraceNode* tr) {
    // dispatcher already validated mass/charge/threshold
    Color ca = f.vertices[0].color();
    std::vector<Vertex> rs, gs;
    for (auto& v : f.vertices) (v.color() == ca ? rs : gs).push_back(v);
    internal(rs.size() == 3 && gs.size() == 3, "neutral mass-6 fault splits three-three");
    Letter ax = 0;
    for (Letter l = 1; l <= n && !ax; ++l) {
        int c = rs[0].coord(l) + rs[1].coord(l) + rs[2].coord(l);
        if (c == 1 || c == 2) ax = l;
    }
    internal(ax != 0, "three distinct vertices always split");
    PlateSplit split(n, ax);
    Plate T, B;
    Vertex rt1, rt2, rb;
    {
        std::vector<Vertex> a, b;
        for (auto& v : rs)
            (split.side(v) == Plate::Top ? a : b).push_back(v);
        if (a.size() == 2) {
            T = Plate::Top;
            rt1 = a[0];
            rt2 = a[1];
            rb = b[0];
        } else {
            T = Plate::Bottom;
            rt1 = b[0];
            rt2 = b[1];
            rb = a[0];
        }
        B = other(T);
    }
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::CYC6), split.axis);
    int greens_top = 0;
    for (auto& g : gs) greens_top += split.side(g) == T;
    if (greens_top == 3) {
        if (me) me->label = "1";
        // keep two greens in the plate fault, excise the third from the cycle
        Vertex gex = gs[2];
        Path cyc = up(T, cycle_with_neutral_fault(
                             n - 1, Fault(n - 1, {pj(rt1), pj(rt2), pj(gs[0]), pj(gs[1])}),
                             me));
        Path rot = rotate_cycle(cyc, gex);
        auto vs = path_vertices(rot);
        Vertex s = vs[1], p = vs[vs.size() - 2];
        Path mid(s, Word(rot.word.begin() + 1, rot.word.end() - 1)); // s .. p
        Path bot = up(B, laceable_path(n - 1, pj(rb), pj(split.partner(s)),
                                       pj(split.partner(p)), me));
        return close_cycle(weld(mid, orient(bot, split.partner(p))));
    }
    if (greens_top == 2) {
        if (me) me->label = "2";
        std::vector<Vertex> gt, gb;
        for (auto& g : gs) (split.side(g) == T ? gt : gb).push_back(g);
        Path cyc = up(T, cycle_with_neutral_fault(
                             n - 1, Fault(n - 1, {pj(rt1), pj(rt2), pj(gt[0]), pj(gt[1])}),
                             me));
        auto vs = path_vertices(cyc);
        for (size_t i = 0; i + 1 < vs.size(); ++i) {
            Vertex c = split.partner(vs[i]), d = split.partner(vs[i + 1]);
            if (c == rb || c == gb[0] || d == rb || d == gb[0]) continue;
            Path bot = up(B, neutral_path_two_faults(n - 1, pj(rb), pj(gb[0]), pj(c),
                                                     pj(d), me));
            Path opened = cycle_minus_edge(cyc, vs[i], vs[i + 1]);
            return close_cycle(weld(reverse(opened), orient(bot, c)));
        }
        throw InternalCaseError("no free cycle edge");
    }
    if (greens_top == 1) {
        if (me) me->label = "3";
        Vertex gtop;
        std::vector<Vertex> gbot;
        for (auto& g : gs) (split.side(g) == T ? (void)(gtop = g) : gbot.push_back(g));
        Vertex g4, g5;
        bool ok = false;
        for (uint32_t b1 = 0; b1 < (1u << n) && !ok; ++b1) {
            Vertex u(n, b1);
            if (split.side(u) != T || u.color() == ca || u == gtop) continue;
            if (f.contains(split.partner(u))) continue;
            for (uint32_t b2 = b1 + 1; b2 < (1u << n) && !ok; ++b2) {
                Vertex w(n, b2);
                if (split.side(w) != T || w.color() == ca || w == gtop) continue;
                if (f.contains(split.partner(w))) continue;
                g4 = u;
                g5 = w;
                ok = true;
            }
        }
        internal(ok, "no spare bridge pair");
        Path top = up(T, charged_path_fault31(n - 1, pj(gtop), pj(rt1), pj(rt2), pj(g4),
                                              pj(g5), me));
        Path bot = up(B, charged_path_fault31(n - 1, pj(rb), pj(gbot[0]), pj(gbot[1]),
                                              pj(split.partner(g4)),
                                              pj(split.partner(g5)), me));
        return close_cycle(weld(top, orient(bot, split.partner(g5))));
    }
    if (me) me->label = "4";
    std::vector<Vertex> gl = gs; // all three below; sorted already by Fault
    std::vector<Vertex> sub{pj(gl[0]), pj(gl[1]), pj(gl[2])};
    Path bot = up(B, separated_path(n - 1, sub, pj(rb), me));
    int j = find_vertex(bot, gl[1]);
    internal(j >= 4 && bot.length() - j >= 4, "separation bound violated");
    auto vs = path_vertices(bot);
    Vertex s1 = split.partner(vs[1]);                  // after g1
    Vertex p2 = split.partner(vs[j - 1]);              // before g2
    Vertex s2 = split.partner(vs[j + 1]);              // after g2
    Vertex p3 = split.partner(vs[vs.size() - 2]);      // before g3
    auto cov = two_green_pairs_fault22(n - 1, pj(rt1), pj(rt2), pj(s1), pj(s2), pj(p2),
                                       pj(p3), me);
    Path mu = up(T, covering_path(cov, pj(s1), pj(s2)));
    Path nu = up(T, covering_path(cov, pj(p2), pj(p3)));
    // walk: s1 .. top .. s2, down past g2's gap, up and back, around g1's gap
    Path seg1(vs[1], Word(bot.word.begin() + 1, bot.word.begin() + (j - 1))); // after g1 .. before g2
    Path seg2(vs[j + 1], Word(bot.word.begin() + j + 1, bot.word.end() - 1)); // after g2 .. before g3
    Path walk = weld({mu, seg2, reverse(nu), reverse(seg1)});
    return close_cycle(walk);
}

} // namespace detail

} // namespace qpath
