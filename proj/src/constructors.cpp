#include "qpath/constructors.hpp"

#include <algorithm>
#include <functional>

#include "qpath/oracle.hpp"

namespace qpath {

int threshold(LemmaId id) {
    switch (id) {
        case LemmaId::HAVEL: return 1;
        case LemmaId::DVORAK: return 2;
        case LemmaId::L1101: return 2;
        case LemmaId::CYC2: return 3;
        case LemmaId::NPF2: return 4;
        case LemmaId::CHG2: return 4;
        case LemmaId::MIX: return 4;
        case LemmaId::CHG31: return 4;
        case LemmaId::GG22: return 4;
        case LemmaId::Q4FREE: return 4;
        case LemmaId::CYC4: return 4;
        case LemmaId::CYC6: return 5;
        case LemmaId::NPF4: return 5;
        case LemmaId::TRIPLE: return 5;
        case LemmaId::GG42: return 5;
        case LemmaId::CHG51: return 5;
        case LemmaId::GGG33: return 6;
        case LemmaId::CYC8: return 6;
    }
    throw RangeError("unknown lemma id");
}

const char* lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::HAVEL: return "havel";
        case LemmaId::DVORAK: return "dvorak";
        case LemmaId::L1101: return "laceable";
        case LemmaId::CYC2: return "cycle-fault2";
        case LemmaId::NPF2: return "neutral-path-fault2";
        case LemmaId::CHG2: return "two-charged-pairs";
        case LemmaId::MIX: return "mixed-pair";
        case LemmaId::CHG31: return "charged-path-fault31";
        case LemmaId::GG22: return "two-green-pairs-fault22";
        case LemmaId::Q4FREE: return "q4-free-two-neutral-pairs";
        case LemmaId::CYC4: return "cycle-fault4";
        case LemmaId::CYC6: return "cycle-fault6";
        case LemmaId::NPF4: return "neutral-path-fault4";
        case LemmaId::TRIPLE: return "three-neutral-pairs";
        case LemmaId::GG42: return "two-green-pairs-fault42";
        case LemmaId::CHG51: return "charged-path-fault51";
        case LemmaId::GGG33: return "three-green-pairs-fault33";
        case LemmaId::CYC8: return "cycle-fault8";
    }
    throw RangeError("unknown lemma id");
}

std::optional<Signature> lemma_signature(LemmaId id) {
    switch (id) {
        case LemmaId::HAVEL: return Signature{0, 0, 1, 0};
        case LemmaId::DVORAK: return Signature{0, 0, 2, 0};
        case LemmaId::L1101: return Signature{1, 1, 0, 1};
        case LemmaId::NPF2: return Signature{2, 0, 1, 0};
        case LemmaId::CHG2: return Signature{0, 0, 0, 2};
        case LemmaId::MIX: return Signature{1, 1, 1, 1};
        case LemmaId::CHG31: return Signature{3, 1, 0, 1};
        case LemmaId::GG22: return Signature{2, 2, 0, 2};
        case LemmaId::NPF4: return Signature{4, 0, 1, 0};
        case LemmaId::TRIPLE: return Signature{0, 0, 3, 0};
        case LemmaId::GG42: return Signature{4, 2, 0, 2};
        case LemmaId::CHG51: return Signature{5, 1, 0, 1};
        case LemmaId::GGG33: return Signature{3, 3, 0, 3};
        default: return std::nullopt; // cycles and Q4FREE have no pair signature
    }
}

TraceNode* trace_child(TraceNode* t, std::string lemma, int axis, std::string label) {
    if (!t) return nullptr;
    t->children.push_back(TraceNode{std::move(lemma), axis, std::move(label), {}});
    return &t->children.back();
}

namespace {

void need(bool ok, const char* msg) {
    if (!ok) throw HypothesisError(msg);
}

void internal(bool ok, const char* msg) {
    if (!ok) throw InternalCaseError(msg);
}

void floor_at(int n, LemmaId id) {
    if (n < threshold(id))
        throw ThresholdError(std::string(lemma_name(id)) + ": dimension below bound");
}

void dims(int n, std::initializer_list<Vertex> vs) {
    for (auto& v : vs)
        if (v.dim != n) throw DimensionError("vertex dimension mismatch");
}

template <class F>
Vertex smallest(int n, F&& pred) {
    for (uint32_t b = 0; b < (1u << n); ++b) {
        Vertex v(n, b);
        if (pred(v)) return v;
    }
    throw InternalCaseError("no vertex satisfies the selection rule");
}

void set_case(TraceNode* t, int axis, const char* label) {
    if (t) {
        t->axis = axis;
        t->label = label;
    }
}

// Exactly one of g, g1 lies in the 2-dimensional subcube spanned by the
// distance-2 pair r, r1 (all in Q3).
bool q3_alpha_ok(const Vertex& r, const Vertex& r1, const Vertex& g, const Vertex& g1) {
    uint32_t d = r.bits ^ r1.bits;
    if (std::popcount(d) != 2) throw InternalCaseError("expected a distance-2 pair");
    uint32_t fix = 7u & ~d;
    int cnt = ((g.bits & fix) == (r.bits & fix)) + ((g1.bits & fix) == (r.bits & fix));
    return cnt == 1;
}

} // namespace

Path havel_path(int n, const Vertex& r, const Vertex& g, TraceNode* tr) {
    floor_at(n, LemmaId::HAVEL);
    dims(n, {r, g});
    need(r.color() != g.color(), "ends must have opposite parity");
    if (n == 1) return Path(r, {1});
    PlateSplit split = choose_axis(n, {{r, g, true}});
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::HAVEL), split.axis);
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    Plate A = split.side(r), B = split.side(g);
    Vertex u = smallest(n, [&](const Vertex& v) {
        return split.side(v) == A && v.color() == g.color();
    });
    Path p1 = havel_path(n - 1, pj(r), pj(u), me);
    Path p2 = havel_path(n - 1, pj(split.partner(u)), pj(g), me);
    return weld(split.lift_path(A, p1), split.lift_path(B, p2));
}

Path laceable_path(int n, const Vertex& d, const Vertex& a, const Vertex& b, TraceNode* tr) {
    floor_at(n, LemmaId::L1101);
    dims(n, {d, a, b});
    need(a != b, "ends must be distinct");
    need(a.color() == b.color() && a.color() != d.color(),
         "ends must share the parity opposite to the deleted vertex");
    if (n == 2) {
        Vertex m = smallest(2, [&](const Vertex& v) { return v != d && v != a && v != b; });
        internal(adjacent(a, m) && adjacent(m, b), "forced middle vertex");
        return Path(a, {diff_letter(a, m), diff_letter(m, b)});
    }
    PlateSplit split = choose_axis(n, {{a, b, true}});
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::L1101), split.axis);
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    Vertex x = a, y = b;
    if (split.side(d) != split.side(x)) std::swap(x, y);
    Plate X = split.side(x), Y = split.side(y);
    Vertex w = smallest(n, [&](const Vertex& v) {
        return split.side(v) == X && v.color() == x.color() && v != x;
    });
    Path px = laceable_path(n - 1, pj(d), pj(x), pj(w), me);
    Path py = havel_path(n - 1, pj(split.partner(w)), pj(y), me);
    Path full = weld(split.lift_path(X, px), split.lift_path(Y, py));
    return orient(full, a);
}

Covering dvorak_pair(int n, const Vertex& r1, const Vertex& g1, const Vertex& r2,
                     const Vertex& g2, TraceNode* tr) {
    floor_at(n, LemmaId::DVORAK);
    dims(n, {r1, g1, r2, g2});
    need(r1.color() != g1.color() && r2.color() != g2.color(), "pairs must be neutral");
    std::vector<Vertex> all{r1, g1, r2, g2};
    std::sort(all.begin(), all.end());
    need(std::adjacent_find(all.begin(), all.end()) == all.end(), "ends must be distinct");
    if (n == 2)
        return {Path(r1, {diff_letter(r1, g1)}), Path(r2, {diff_letter(r2, g2)})};
    if (n == 3) {
        auto cov = catalog_cover(Instance(
            3, Fault(3, {}), PairSet(3, {VertexPair(r1, g1), VertexPair(r2, g2)})));
        return {covering_path(cov, r1, g1), covering_path(cov, r2, g2)};
    }
    PlateSplit split(n, 1);
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::DVORAK), split.axis);
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    bool split1 = split.side(r1) != split.side(g1);
    bool split2 = split.side(r2) != split.side(g2);
    if (!split1 && !split2) {
        if (split.side(r1) == split.side(r2)) {
            set_case(me, split.axis, "both-one-plate");
            Plate X = split.side(r1), Y = other(X);
            auto cov = dvorak_pair(n - 1, pj(r1), pj(g1), pj(r2), pj(g2), me);
            Path donor = up(X, covering_path(cov, pj(r1), pj(g1)));
            auto vs = path_vertices(donor);
            Path recipient = up(Y, havel_path(n - 1, pj(split.partner(vs[0])),
                                              pj(split.partner(vs[1])), me));
            Path p1 = surgery(split, donor, vs[0], vs[1], recipient);
            Path p2 = up(X, covering_path(cov, pj(r2), pj(g2)));
            return {orient(p1, r1), p2};
        }
        set_case(me, split.axis, "one-pair-per-plate");
        Path p1 = up(split.side(r1), havel_path(n - 1, pj(r1), pj(g1), me));
        Path p2 = up(split.side(r2), havel_path(n - 1, pj(r2), pj(g2), me));
        return {p1, p2};
    }
    if (split1 != split2) {
        set_case(me, split.axis, "one-pair-split");
        Vertex wa = split1 ? r2 : r1, wb = split1 ? g2 : g1; // the whole pair
        Vertex sa = split1 ? r1 : r2, sb = split1 ? g1 : g2; // the split pair
        Plate X = split.side(wa);
        Vertex s = split.side(sa) == X ? sa : sb;
        Vertex t = split.side(sa) == X ? sb : sa;
        Vertex w = smallest(n, [&](const Vertex& v) {
            return split.side(v) == X && v.color() != s.color() && v != wa && v != wb &&
                   split.partner(v) != t;
        });
        auto cov = dvorak_pair(n - 1, pj(wa), pj(wb), pj(s), pj(w), me);
        Path whole = up(X, covering_path(cov, pj(wa), pj(wb)));
        Path splitp = weld(up(X, covering_path(cov, pj(s), pj(w))),
                           up(other(X), havel_path(n - 1, pj(split.partner(w)), pj(t), me)));
        splitp = orient(splitp, sa);
        if (split1) return {splitp, whole};
        return {whole, splitp};
    }
    set_case(me, split.axis, "both-pairs-split");
    Plate X = split.side(r1);
    Vertex s1 = r1, t1 = g1;
    Vertex s2 = split.side(r2) == X ? r2 : g2;
    Vertex t2 = split.side(r2) == X ? g2 : r2;
    Vertex w1 = smallest(n, [&](const Vertex& v) {
        return split.side(v) == X && v.color() != s1.color() && v != s1 && v != s2 &&
               split.partner(v) != t1 && split.partner(v) != t2;
    });
    Vertex w2 = smallest(n, [&](const Vertex& v) {
        return split.side(v) == X && v.color() != s2.color() && v != s1 && v != s2 &&
               v != w1 && split.partner(v) != t1 && split.partner(v) != t2;
    });
    auto cx = dvorak_pair(n - 1, pj(s1), pj(w1), pj(s2), pj(w2), me);
    auto cy = dvorak_pair(n - 1, pj(split.partner(w1)), pj(t1), pj(split.partner(w2)),
                          pj(t2), me);
    Path p1 = weld(up(X, covering_path(cx, pj(s1), pj(w1))),
                   up(other(X), covering_path(cy, pj(split.partner(w1)), pj(t1))));
    Path p2 = weld(up(X, covering_path(cx, pj(s2), pj(w2))),
                   up(other(X), covering_path(cy, pj(split.partner(w2)), pj(t2))));
    return {orient(p1, r1), orient(p2, r2)};
}

Path havel_through_edge(int n, const Vertex& r, const Vertex& g, const Edge& e,
                        TraceNode* tr) {
    floor_at(n, LemmaId::L1101);
    dims(n, {r, g, e.first, e.second});
    need(r.color() != g.color(), "ends must have opposite parity");
    need(adjacent(e.first, e.second), "e must be an edge");
    bool hit_r = e.first == r || e.second == r;
    bool hit_g = e.first == g || e.second == g;
    need(!(hit_r && hit_g), "e must differ from the end pair");
    TraceNode* me = trace_child(tr, "havel-through-edge");
    if (hit_r) {
        set_case(me, 0, "incident-start");
        Vertex x = e.first == r ? e.second : e.first;
        return weld(Path(r, {}), laceable_path(n, r, x, g, me));
    }
    if (hit_g) {
        set_case(me, 0, "incident-end");
        Vertex y = e.first == g ? e.second : e.first;
        return weld(laceable_path(n, g, r, y, me), Path(g, {}));
    }
    set_case(me, 0, "disjoint");
    Vertex u = e.first.color() == g.color() ? e.first : e.second;
    Vertex w = e.first.color() == g.color() ? e.second : e.first;
    auto cov = dvorak_pair(n, r, u, w, g, me);
    return weld(covering_path(cov, r, u), covering_path(cov, w, g));
}

std::vector<Path> paths_distinct_first_edges(int n, const Vertex& r, const Vertex& g1,
                                             const Vertex& g2, TraceNode* tr) {
    if (n < 2) throw ThresholdError("distinct-first-edges: dimension below bound");
    dims(n, {r, g1, g2});
    need(g1 != g2 && g1.color() == g2.color() && r.color() != g1.color(),
         "two same-parity ends and an opposite-parity deleted vertex");
    std::vector<Path> out;
    if (n == 2) {
        Vertex m = smallest(2, [&](const Vertex& v) { return v != r && v != g1 && v != g2; });
        out.push_back(Path(g1, {diff_letter(g1, m), diff_letter(m, g2)}));
        return out;
    }
    if (n == 3) {
        trace_child(tr, "distinct-first-edges", 0, "base");
        for (Letter l = 1; l <= 3 && (int)out.size() < 2; ++l) {
            Vertex x = g1.flip(l);
            if (x == r) continue;
            Instance inst(3, Fault(3, {r, g1}), PairSet(3, {VertexPair(x, g2)}));
            if (!catalog_feasible(inst)) continue;
            out.push_back(weld(Path(g1, {}), covering_path(catalog_cover(inst), x, g2)));
        }
        internal(out.size() == 2, "base case must yield two paths");
        return out;
    }
    PlateSplit split;
    bool with_start = true;
    try {
        split = choose_axis(n, {{g1, g2, true}, {r, g1, false}});
    } catch (const NoAxisError&) {
        with_start = false;
        split = choose_axis(n, {{g1, g2, true}});
    }
    TraceNode* me = trace_child(tr, "distinct-first-edges", split.axis,
                                with_start ? "start-side" : "far-side");
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    Plate T = split.side(g1), B = other(T);
    if (with_start) {
        Vertex g = smallest(n, [&](const Vertex& v) {
            return split.side(v) == T && v.color() == g1.color() && v != g1;
        });
        auto subs = paths_distinct_first_edges(n - 1, pj(r), pj(g1), pj(g), me);
        Path bot = up(B, havel_path(n - 1, pj(split.partner(g)), pj(g2), me));
        for (auto& pi : subs) out.push_back(weld(up(T, pi), bot));
        // the extra path leaves the plate immediately
        Vertex r2 = split.partner(g1);
        Path cyc = up(T, cycle_with_neutral_fault(n - 1, Fault(n - 1, {pj(g1), pj(r)}), me));
        auto cv = path_vertices(cyc);
        bool done = false;
        for (size_t i = 0; i + 1 < cv.size() && !done; ++i) {
            Vertex u = cv[i], w = cv[i + 1];
            Vertex pu = split.partner(u), pw = split.partner(w);
            Vertex g3 = pu.color() == g1.color() ? pu : pw;
            Vertex r3 = pu.color() == g1.color() ? pw : pu;
            Vertex cu = pu.color() == g1.color() ? u : w;
            Vertex cw = pu.color() == g1.color() ? w : u;
            if (g3 == g2 || r3 == r2) continue;
            auto bcov = dvorak_pair(n - 1, pj(r2), pj(g3), pj(r3), pj(g2), me);
            Path top = cycle_minus_edge(cyc, cu, cw);
            out.push_back(weld({Path(g1, {}),
                                up(B, covering_path(bcov, pj(r2), pj(g3))), top,
                                up(B, covering_path(bcov, pj(r3), pj(g2)))}));
            done = true;
        }
        internal(done, "no usable cycle edge");
    } else {
        internal(split.side(r) == split.side(g2) && !adjacent(r, g1),
                 "far-side case expects the deleted vertex across from g1");
        Plate Pg = T, Pr = B; // g1 alone on Pg; r and g2 across on Pr
        Vertex r1v = split.partner(g1);
        Vertex g3 = smallest(n, [&](const Vertex& v) {
            return split.side(v) == Pr && v.color() == g1.color() && v != g2;
        });
        Vertex r2 = split.partner(g3);
        Vertex g4 = smallest(n, [&](const Vertex& v) {
            return split.side(v) == Pg && adjacent(v, r2) && v != g1;
        });
        auto subs = paths_distinct_first_edges(n - 1, pj(r2), pj(g1), pj(g4), me);
        Path tail = orient(up(Pr, laceable_path(n - 1, pj(r), pj(g2), pj(g3), me)), g3);
        for (auto& beta : subs)
            out.push_back(weld({up(Pg, beta), Path(r2, {}), tail}));
        // the extra path starts with the bridge at g1
        Path top = up(Pr, havel_path(n - 1, pj(r1v), pj(g2), me));
        int i = find_vertex(top, r);
        internal(i > 0 && i < top.length(), "deleted vertex must be interior");
        Path piece1 = cut(top, i - 1).first;
        Path piece2 = cut(top, i + 1).second;
        auto tv = path_vertices(top);
        Vertex r3 = split.partner(tv[i - 1]), r4 = split.partner(tv[i + 1]);
        Path bot = up(Pg, laceable_path(n - 1, pj(g1), pj(r3), pj(r4), me));
        out.push_back(weld({Path(g1, {}), piece1, bot, piece2}));
    }
    internal((int)out.size() == n - 1, "wrong path count");
    std::vector<Letter> firsts;
    for (auto& p : out) {
        internal(p.start == g1 && endpoint(p) == g2, "bad ends");
        firsts.push_back(first_letter(p.word));
    }
    std::sort(firsts.begin(), firsts.end());
    internal(std::adjacent_find(firsts.begin(), firsts.end()) == firsts.end(),
             "first edges must be distinct");
    return out;
}

Path cycle_with_neutral_fault(int n, const Fault& f, TraceNode* tr) {
    if (f.dim != n) throw DimensionError("fault dimension mismatch");
    need(f.charge() == 0, "fault must be neutral");
    int m = f.mass();
    need(m <= 8 && m % 2 == 0, "mass must be 0, 2, 4, 6 or 8");
    LemmaId id = m == 0   ? LemmaId::CYC2 // placeholder, re-set below
                 : m == 2 ? LemmaId::CYC2
                 : m == 4 ? LemmaId::CYC4
                 : m == 6 ? LemmaId::CYC6
                          : LemmaId::CYC8;
    if (m == 0) {
        if (n < 2) throw ThresholdError("cycle: dimension below bound");
        Word w;
        for (uint32_t i = 1; i < (1u << n); ++i)
            w.push_back(n - std::countr_zero(i));
        Path p(Vertex(n, 0), w);
        return close_cycle(p);
    }
    floor_at(n, id);
    auto pj_of = [](const PlateSplit& s) {
        return [&s](const Vertex& v) { return s.project_vertex(v); };
    };
    if (m == 2) {
        Vertex fr = f.vertices[0], fg = f.vertices[1];
        PlateSplit split = choose_axis(n, {{fr, fg, true}});
        TraceNode* me = trace_child(tr, lemma_name(LemmaId::CYC2), split.axis);
        auto pj = pj_of(split);
        Plate T = split.side(fr), B = other(T);
        Color tc = opposite(fr.color());
        Bridge b1 = find_bridge(split, T, tc, {fr, fg});
        Vertex t1 = T == Plate::Top ? b1.top : b1.bottom;
        Vertex u1 = T == Plate::Top ? b1.bottom : b1.top;
        Bridge b2 = find_bridge(split, T, tc, {fr, fg, t1, u1});
        Vertex t2 = T == Plate::Top ? b2.top : b2.bottom;
        Vertex u2 = T == Plate::Top ? b2.bottom : b2.top;
        Path top = split.lift_path(T, laceable_path(n - 1, pj(fr), pj(t1), pj(t2), me));
        Path bot = split.lift_path(B, laceable_path(n - 1, pj(fg), pj(u1), pj(u2), me));
        return close_cycle(weld(top, orient(bot, u2)));
    }
    if (m == 4) {
        int reds = 0;
        for (auto& v : f.vertices) reds += v.color() == f.vertices[0].color();
        internal(reds == 2, "mass-4 neutral fault splits two and two");
        Color ca = f.vertices[0].color();
        std::vector<Vertex> rs, gs;
        for (auto& v : f.vertices) (v.color() == ca ? rs : gs).push_back(v);
        Vertex fr1 = rs[0], fr2 = rs[1];
        PlateSplit split = choose_axis(n, {{fr1, fr2, true}});
        auto pj = pj_of(split);
        auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
        if (split.side(gs[0]) == split.side(gs[1])) {
            TraceNode* me = trace_child(tr, lemma_name(LemmaId::CYC4), split.axis,
                                        "greens-together");
            Plate P = split.side(gs[0]), Q = other(P);
            Vertex rp = split.side(fr1) == P ? fr1 : fr2;
            Vertex rq = split.side(fr1) == P ? fr2 : fr1;
            Path pp = up(P, laceable_path(n - 1, pj(rp), pj(gs[0]), pj(gs[1]), me));
            auto vs = path_vertices(pp);
            Vertex x = vs[1], y = vs[vs.size() - 2];
            Path inner(x, Word(pp.word.begin() + 1, pp.word.end() - 1));
            Path qq = up(Q, laceable_path(n - 1, pj(rq), pj(split.partner(x)),
                                          pj(split.partner(y)), me));
            return close_cycle(weld(inner, orient(qq, split.partner(y))));
        }
        TraceNode* me = trace_child(tr, lemma_name(LemmaId::CYC4), split.axis,
                                    "greens-split");
        Plate T = split.side(fr1), B = other(T);
        Vertex gt = split.side(gs[0]) == T ? gs[0] : gs[1];
        Vertex gb = split.side(gs[0]) == T ? gs[1] : gs[0];
        Path cyc = up(T, cycle_with_neutral_fault(n - 1, Fault(n - 1, {pj(fr1), pj(gt)}), me));
        for (uint32_t bits = 0; bits < (1u << n); ++bits) {
            Vertex g4(n, bits);
            if (split.side(g4) != B || !adjacent(g4, fr2) || g4 == gb ||
                g4 == split.partner(fr1))
                continue;
            Vertex r3 = split.partner(g4);
            Path rot = rotate_cycle(cyc, r3);
            auto rv = path_vertices(rot);
            for (Vertex g3 : {rv[1], rv[rv.size() - 2]}) {
                if (g3 == split.partner(fr2)) continue;
                Vertex r4 = split.partner(g3);
                if (n == 4 && in_b_set(pj(fr2), pj(gb), pj(r4), pj(g4))) continue;
                Path bot = up(B, neutral_path_two_faults(n - 1, pj(fr2), pj(gb), pj(r4),
                                                         pj(g4), me));
                Path top = cycle_minus_edge(cyc, g3, r3);
                return close_cycle(weld(top, orient(bot, g4)));
            }
        }
        throw InternalCaseError("no usable bridge into the cycle");
    }
    TraceNode* me = trace_child(tr, lemma_name(id));
    return m == 6 ? detail::cycle_fault6(n, f, me) : detail::cycle_fault8(n, f, me);
}

Q3TwoDeletedResult q3_two_deleted(const Vertex& r, const Vertex& g, const Vertex& r1,
                                  const Vertex& g1, TraceNode* tr) {
    dims(3, {r, g, r1, g1});
    need(r.color() != g.color(), "deleted pair must be neutral");
    need(r1.color() != g1.color(), "terminal pair must be neutral");
    need(r1 != r && r1 != g && g1 != r && g1 != g, "terminals must survive");
    trace_child(tr, "q3-two-deleted");
    Q3TwoDeletedResult out;
    bool blocked = in_b_set(r, g, r1, g1);
    if (!blocked) {
        auto cov = catalog_cover(
            Instance(3, Fault(3, {r, g}), PairSet(3, {VertexPair(r1, g1)})));
        out.ham = covering_path(cov, r1, g1);
    } else {
        // two coverings by paths of length two with four distinct ends
        std::vector<Vertex> free;
        for (uint32_t b = 0; b < 8; ++b) {
            Vertex v(3, b);
            if (v != r && v != g) free.push_back(v);
        }
        for (auto& m1 : free)
            for (auto& e1 : free)
                for (auto& m2 : free)
                    for (auto& e2 : free) {
                        if ((int)out.two_path.size() == 2) break;
                        std::vector<Vertex> six{r1, m1, e1, g1, m2, e2};
                        std::sort(six.begin(), six.end());
                        if (std::adjacent_find(six.begin(), six.end()) != six.end())
                            continue;
                        if (!adjacent(r1, m1) || !adjacent(m1, e1)) continue;
                        if (!adjacent(g1, m2) || !adjacent(m2, e2)) continue;
                        out.two_path.push_back(
                            {Path(r1, {diff_letter(r1, m1), diff_letter(m1, e1)}),
                             Path(g1, {diff_letter(g1, m2), diff_letter(m2, e2)})});
                    }
        internal(out.two_path.size() == 2, "blocked pair admits two short coverings");
    }
    // two perfect matchings of the six remaining vertices
    std::vector<Vertex> free;
    for (uint32_t b = 0; b < 8; ++b) {
        Vertex v(3, b);
        if (v != r && v != g) free.push_back(v);
    }
    std::vector<Covering> matchings;
    std::function<void(std::vector<Vertex>, Covering&)> go = [&](std::vector<Vertex> rest,
                                                                 Covering& acc) {
        if ((int)matchings.size() == 2) return;
        if (rest.empty()) {
            matchings.push_back(acc);
            return;
        }
        Vertex a = rest[0];
        for (size_t i = 1; i < rest.size(); ++i) {
            if (!adjacent(a, rest[i])) continue;
            std::vector<Vertex> next;
            for (size_t j = 1; j < rest.size(); ++j)
                if (j != i) next.push_back(rest[j]);
            acc.push_back(Path(a, {diff_letter(a, rest[i])}));
            go(next, acc);
            acc.pop_back();
        }
    };
    Covering acc;
    go(free, acc);
    internal(matchings.size() == 2, "two perfect matchings expected");
    out.three_path = matchings;
    return out;
}

Path neutral_path_two_faults(int n, const Vertex& fr1, const Vertex& fg1, const Vertex& r,
                             const Vertex& g, TraceNode* tr) {
    dims(n, {fr1, fg1, r, g});
    need(fr1.color() != fg1.color(), "fault must be neutral");
    need(r.color() != g.color(), "terminal pair must be neutral");
    need(r != fr1 && r != fg1 && g != fr1 && g != fg1, "terminals must survive");
    if (n < 2) throw ThresholdError("neutral-path-fault2: dimension below bound");
    Vertex dr = fr1, dg = fg1;
    if (dr.color() != r.color()) std::swap(dr, dg);
    if (n == 2) {
        internal(adjacent(r, g), "forced edge");
        return Path(r, {diff_letter(r, g)});
    }
    if (n == 3) {
        need(!in_b_set(dr, dg, r, g), "blocked terminal pair in Q3");
        trace_child(tr, lemma_name(LemmaId::NPF2), 0, "base");
        auto cov = catalog_cover(
            Instance(3, Fault(3, {dr, dg}), PairSet(3, {VertexPair(r, g)})));
        return covering_path(cov, r, g);
    }
    PlateSplit split = choose_axis(n, {{r, dr, true}});
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    Plate T = split.side(dr), B = other(T);
    bool g_top = split.side(g) == T, dg_top = split.side(dg) == T;
    if (g_top && dg_top) {
        TraceNode* me = trace_child(tr, lemma_name(LemmaId::NPF2), split.axis, "1");
        Path top = up(T, laceable_path(n - 1, pj(dr), pj(g), pj(dg), me));
        auto vs = path_vertices(top);
        Vertex x = vs[vs.size() - 2];
        Path piece = cut(top, (int)vs.size() - 2).first;
        Path bot = up(B, havel_path(n - 1, pj(split.partner(x)), pj(r), me));
        return orient(weld(piece, bot), r);
    }
    if (g_top && !dg_top) {
        TraceNode* me = trace_child(tr, lemma_name(LemmaId::NPF2), split.axis, "2");
        Bridge br = find_bridge(split, T, g.color(), {dr, dg, r, g});
        Vertex tt = T == Plate::Top ? br.top : br.bottom;
        Vertex bb = T == Plate::Top ? br.bottom : br.top;
        Path top = up(T, laceable_path(n - 1, pj(dr), pj(g), pj(tt), me));
        Path bot = up(B, laceable_path(n - 1, pj(dg), pj(bb), pj(r), me));
        return orient(weld(top, bot), r);
    }
    if (!g_top && dg_top) {
        TraceNode* me = trace_child(tr, lemma_name(LemmaId::NPF2), split.axis, "3");
        Bridge br = find_bridge(split, T, g.color(), {dr, dg, r, g});
        Vertex tt = T == Plate::Top ? br.top : br.bottom;
        Vertex bb = T == Plate::Top ? br.bottom : br.top;
        auto cands = paths_distinct_first_edges(n - 1, pj(dr), pj(dg), pj(tt), me);
        Vertex bad = pj(split.partner(g));
        const Path* pick = nullptr;
        for (auto& c : cands)
            if (path_vertices(c)[1] != bad) {
                pick = &c;
                break;
            }
        internal(pick != nullptr, "a first edge avoiding the terminal exists");
        Path pf = up(T, *pick);
        Vertex u = path_vertices(pf)[1];
        Path piece = cut(pf, 1).second;
        Vertex uq = split.partner(u);
        auto bcov = dvorak_pair(n - 1, pj(uq), pj(r), pj(bb), pj(g), me);
        return weld({up(B, covering_path(bcov, pj(r), pj(uq))), piece,
                     up(B, covering_path(bcov, pj(bb), pj(g)))});
    }
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::NPF2), split.axis, "4");
    Bridge br = find_bridge(split, B, r.color(), {dr, dg, r, g});
    Vertex rb = B == Plate::Top ? br.top : br.bottom;
    Vertex tb = B == Plate::Top ? br.bottom : br.top;
    Path bot = up(B, laceable_path(n - 1, pj(dg), pj(r), pj(rb), me));
    int i = find_vertex(bot, g);
    internal(i > 0 && i < bot.length(), "terminal must be interior");
    auto vs = path_vertices(bot);
    Path piece1 = cut(bot, i - 1).first;
    Path piece2 = cut(bot, i).second;
    Vertex wq = split.partner(vs[i - 1]);
    Path top = up(T, laceable_path(n - 1, pj(dr), pj(wq), pj(tb), me));
    return weld({piece1, top, reverse(piece2)});
}

Path cycle_through_edge_two_faults(int n, const Fault& f, const Edge& e, TraceNode* tr) {
    if (f.dim != n) throw DimensionError("fault dimension mismatch");
    need(f.mass() == 2 && f.charge() == 0, "fault must be neutral of mass 2");
    need(adjacent(e.first, e.second), "e must be an edge");
    need(!f.contains(e.first) && !f.contains(e.second), "e must avoid the fault");
    if (n < 4) throw ThresholdError("cycle-through-edge: dimension below bound");
    TraceNode* me = trace_child(tr, "cycle-through-edge");
    Path p = neutral_path_two_faults(n, f.vertices[0], f.vertices[1], e.first, e.second, me);
    return close_cycle(orient(p, e.first));
}

Covering two_charged_pairs(int n, const Vertex& r, const Vertex& r1, const Vertex& g,
                           const Vertex& g1, bool long_first, TraceNode* tr) {
    dims(n, {r, r1, g, g1});
    need(r.color() == r1.color() && g.color() == g1.color() && r.color() != g.color(),
         "two charged pairs of opposite colors");
    need(r != r1 && g != g1, "ends must be distinct");
    if (n < 3) throw ThresholdError("two-charged-pairs: dimension below bound");
    if (n == 3) {
        need(q3_alpha_ok(r, r1, g, g1),
             "Q3 needs exactly one same-color end inside the spanned square");
        TraceNode* me = trace_child(tr, lemma_name(LemmaId::CHG2), 0,
                                    long_first ? "base-long" : "base");
        (void)me;
        if (!long_first) {
            auto cov = catalog_cover(Instance(
                3, Fault(3, {}), PairSet(3, {VertexPair(r, r1), VertexPair(g, g1)})));
            return {covering_path(cov, r, r1), covering_path(cov, g, g1)};
        }
        for (uint32_t b = 0; b < 8; ++b) {
            Vertex m(3, b);
            if (!adjacent(m, g) || !adjacent(m, g1) || m == r || m == r1) continue;
            Instance inst(3, Fault(3, {g, m, g1}), PairSet(3, {VertexPair(r, r1)}));
            if (!catalog_feasible(inst)) continue;
            Path p1 = covering_path(catalog_cover(inst), r, r1);
            Path p2 = Path(g, {diff_letter(g, m), diff_letter(m, g1)});
            return {p1, p2};
        }
        throw InternalCaseError("no long covering in the base case");
    }
    PlateSplit split = choose_axis(n, {{r, r1, true}});
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    Plate T = split.side(r), B = other(T);
    Path pr, pg;
    if (split.side(g) == split.side(g1)) {
        TraceNode* me = trace_child(tr, lemma_name(LemmaId::CHG2), split.axis, "1");
        Plate P = split.side(g), Q = other(P);
        Vertex rp = split.side(r) == P ? r : r1;
        Vertex rq = split.side(r) == P ? r1 : r;
        pg = up(P, laceable_path(n - 1, pj(rp), pj(g), pj(g1), me));
        Vertex s = split.partner(rp);
        pr = weld(Path(rp, {}), up(Q, havel_path(n - 1, pj(s), pj(rq), me)));
    } else {
        Vertex gt = split.side(g) == T ? g : g1;
        Vertex gb = split.side(g) == T ? g1 : g;
        if (!long_first) {
            TraceNode* me = trace_child(tr, lemma_name(LemmaId::CHG2), split.axis, "2");
            Path top = up(T, havel_path(n - 1, pj(r), pj(gt), me));
            Path rev = reverse(top); // walk from the green end
            auto vs = path_vertices(rev);
            size_t at = 0;
            bool found = false;
            for (size_t i = 0; i + 1 < vs.size(); ++i) {
                if (vs[i].color() != gb.color()) continue;
                if (split.partner(vs[i]) == r1 || split.partner(vs[i + 1]) == gb) continue;
                at = i;
                found = true;
                break;
            }
            internal(found, "a cut edge avoiding the bottom terminals exists");
            Vertex u = vs[at], w = vs[at + 1];
            Path piece1 = cut(rev, (int)at).first;
            Path piece2 = cut(rev, (int)at + 1).second;
            Vertex uq = split.partner(u), wq = split.partner(w);
            auto bcov = dvorak_pair(n - 1, pj(uq), pj(gb), pj(wq), pj(r1), me);
            pg = weld(piece1, up(B, covering_path(bcov, pj(uq), pj(gb))));
            pr = weld(orient(piece2, r), up(B, covering_path(bcov, pj(wq), pj(r1))));
        } else if (split.partner(gt) != r1) {
            TraceNode* me = trace_child(tr, lemma_name(LemmaId::CHG2), split.axis, "2a");
            Vertex r2 = smallest(n, [&](const Vertex& v) {
                return split.side(v) == T && v.color() == r.color() && v != r &&
                       split.partner(v) != gb;
            });
            Vertex g2 = split.partner(r2);
            Path top = up(T, laceable_path(n - 1, pj(gt), pj(r), pj(r2), me));
            Vertex r3 = split.partner(gt);
            auto bcov = dvorak_pair(n - 1, pj(r3), pj(gb), pj(g2), pj(r1), me);
            pr = weld(top, up(B, covering_path(bcov, pj(g2), pj(r1))));
            pg = weld(Path(gt, {}), up(B, covering_path(bcov, pj(r3), pj(gb))));
        } else if (split.partner(r) != gb) {
            TraceNode* me = trace_child(tr, lemma_name(LemmaId::CHG2), split.axis, "2b");
            Vertex r2 = split.partner(gb);
            Vertex g2 = smallest(n, [&](const Vertex& v) {
                return split.side(v) == T && v.color() == g.color() && v != gt &&
                       split.partner(v) != r1;
            });
            Vertex r3 = split.partner(g2);
            auto tcov = dvorak_pair(n - 1, pj(r2), pj(gt), pj(r), pj(g2), me);
            Path bot = up(B, laceable_path(n - 1, pj(gb), pj(r3), pj(r1), me));
            pr = weld(up(T, covering_path(tcov, pj(r), pj(g2))), orient(bot, r3));
            pg = weld(orient(up(T, covering_path(tcov, pj(r2), pj(gt))), gt), Path(gb, {}));
        } else {
            TraceNode* me = trace_child(tr, lemma_name(LemmaId::CHG2), split.axis, "2c");
            bool done = false;
            for (uint32_t rb = 0; rb < (1u << n) && !done; ++rb) {
                Vertex r2(n, rb);
                if (split.side(r2) != B || !adjacent(r2, gb) || r2 == r1) continue;
                Vertex g2 = split.partner(r2);
                for (uint32_t gbits = 0; gbits < (1u << n) && !done; ++gbits) {
                    Vertex g3(n, gbits);
                    if (split.side(g3) != B || !adjacent(g3, r2) || g3 == gb) continue;
                    Vertex r3 = split.partner(g3);
                    if (n == 4) {
                        if (!q3_alpha_ok(pj(r), pj(r3), pj(gt), pj(g2))) continue;
                        if (in_b_set(pj(r2), pj(gb), pj(r1), pj(g3))) continue;
                    }
                    auto tcov = two_charged_pairs(n - 1, pj(r), pj(r3), pj(gt), pj(g2),
                                                  false, me);
                    Path bot = up(B, neutral_path_two_faults(n - 1, pj(r2), pj(gb),
                                                             pj(r1), pj(g3), me));
                    pr = weld(up(T, covering_path(tcov, pj(r), pj(r3))), orient(bot, g3));
                    pg = weld({up(T, covering_path(tcov, pj(gt), pj(g2))), Path(r2, {}),
                               Path(gb, {})});
                    done = true;
                }
            }
            internal(done, "no vertex choice satisfies the subcase");
        }
        if (long_first)
            internal(orient(pr, r).length() >= (1 << (n - 1)), "first path too short");
    }
    return {orient(pr, r), orient(pg, g)};
}

Covering mixed_pair(int n, const Vertex& r, const Vertex& r1, const Vertex& g,
                    const Vertex& g1, const Vertex& g2, TraceNode* tr) {
    floor_at(n, LemmaId::MIX);
    dims(n, {r, r1, g, g1, g2});
    need(r1.color() == r.color() && g.color() != r.color(), "neutral pair colors");
    need(g1.color() == g.color() && g2.color() == g.color(), "charged pair colors");
    std::vector<Vertex> all{r, r1, g, g1, g2};
    std::sort(all.begin(), all.end());
    need(std::adjacent_find(all.begin(), all.end()) == all.end(),
         "all five vertices must be distinct");
    PlateSplit split;
    Vertex ga = g1, gb = g2;
    try {
        split = choose_axis(n, {{g1, g2, true}, {r, g1, false}});
    } catch (const NoAxisError&) {
        split = choose_axis(n, {{g1, g2, true}, {r, g2, false}});
        std::swap(ga, gb);
    }
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    Plate T = split.side(r), B = other(T);
    bool r1_top = split.side(r1) == T, g_top = split.side(g) == T;
    Path pn, pc;
    if (r1_top && g_top) {
        TraceNode* me = trace_child(tr, lemma_name(LemmaId::MIX), split.axis, "1");
        auto cov = dvorak_pair(n - 1, pj(r1), pj(g), pj(ga), pj(r), me);
        pn = up(T, covering_path(cov, pj(r1), pj(g)));
        Path pc0 = up(T, covering_path(cov, pj(ga), pj(r)));
        auto vs = path_vertices(pc0);
        Vertex x = vs[vs.size() - 2];
        Path piece = cut(pc0, (int)vs.size() - 2).first;
        Path bot = up(B, havel_path(n - 1, pj(split.partner(x)), pj(gb), me));
        pc = weld(piece, bot);
    } else if (r1_top && !g_top) {
        TraceNode* me = trace_child(tr, lemma_name(LemmaId::MIX), split.axis, "2");
        Bridge br = find_bridge(split, T, g.color(), {r, r1, g, g1, g2});
        Vertex tt = T == Plate::Top ? br.top : br.bottom;
        Vertex bb = T == Plate::Top ? br.bottom : br.top;
        auto cov = dvorak_pair(n - 1, pj(r1), pj(tt), pj(ga), pj(r), me);
        Path head = up(T, covering_path(cov, pj(r1), pj(tt)));
        Path pc0 = up(T, covering_path(cov, pj(ga), pj(r)));
        auto vs = path_vertices(pc0);
        Vertex x = vs[vs.size() - 2];
        Path piece = cut(pc0, (int)vs.size() - 2).first;
        Vertex xq = split.partner(x);
        auto bcov = dvorak_pair(n - 1, pj(bb), pj(g), pj(xq), pj(gb), me);
        pn = weld(head, up(B, covering_path(bcov, pj(bb), pj(g))));
        pc = weld(piece, up(B, covering_path(bcov, pj(xq), pj(gb))));
    } else if (!r1_top && g_top) {
        TraceNode* me = trace_child(tr, lemma_name(LemmaId::MIX), split.axis, "3");
        Path top = up(T, laceable_path(n - 1, pj(r), pj(g), pj(ga), me));
        auto vs = path_vertices(top);
        size_t at = 0;
        bool found = false;
        for (size_t i = 0; i + 1 < vs.size(); ++i) {
            if (vs[i].color() != r.color()) continue;
            if (split.partner(vs[i]) == gb || split.partner(vs[i + 1]) == r1) continue;
            at = i;
            found = true;
            break;
        }
        internal(found, "a cut edge avoiding the bottom terminals exists");
        Vertex u = vs[at], w = vs[at + 1];
        Path piece1 = cut(top, (int)at).first;
        Path piece2 = cut(top, (int)at + 1).second;
        Vertex uq = split.partner(u), wq = split.partner(w);
        auto bcov = dvorak_pair(n - 1, pj(uq), pj(r1), pj(wq), pj(gb), me);
        pn = weld(up(B, covering_path(bcov, pj(r1), pj(uq))), reverse(piece1));
        pc = weld(orient(piece2, ga), up(B, covering_path(bcov, pj(wq), pj(gb))));
    } else {
        TraceNode* me = trace_child(tr, lemma_name(LemmaId::MIX), split.axis, "4");
        Bridge br = find_bridge(split, T, g.color(), {r, r1, g, g1, g2});
        Vertex tt = T == Plate::Top ? br.top : br.bottom;
        Vertex bb = T == Plate::Top ? br.bottom : br.top;
        Path top = up(T, laceable_path(n - 1, pj(r), pj(ga), pj(tt), me));
        auto bcov = dvorak_pair(n - 1, pj(bb), pj(gb), pj(r1), pj(g), me);
        pc = weld(top, up(B, covering_path(bcov, pj(bb), pj(gb))));
        pn = up(B, covering_path(bcov, pj(r1), pj(g)));
    }
    return {orient(pn, r1), orient(pc, g1)};
}

Path charged_path_through_edge_one_fault(int n, const Vertex& g, const Vertex& r1,
                                         const Vertex& r2, const Edge& e, bool oriented,
                                         TraceNode* tr) {
    if (n < 4) throw ThresholdError("charged-path-through-edge: dimension below bound");
    dims(n, {g, r1, r2, e.first, e.second});
    need(r1.color() == r2.color() && r1.color() != g.color() && r1 != r2,
         "two same-parity ends opposite the deleted vertex");
    need(adjacent(e.first, e.second), "e must be an edge");
    need(e.first != g && e.second != g, "e must avoid the deleted vertex");
    Vertex a = e.first, b = e.second;
    bool a_end = a == r1 || a == r2, b_end = b == r1 || b == r2;
    TraceNode* me = trace_child(tr, "charged-path-through-edge");
    if (!a_end && !b_end) {
        set_case(me, 0, "disjoint");
        if (a.color() == g.color()) {
            auto cov = mixed_pair(n, g, a, r1, r2, b, me);
            return weld(orient(covering_path(cov, a, r1), r1),
                        orient(covering_path(cov, r2, b), b));
        }
        auto cov = mixed_pair(n, g, b, r2, r1, a, me);
        return weld(orient(covering_path(cov, r1, a), r1),
                    orient(covering_path(cov, b, r2), b));
    }
    need(!(a_end && b_end), "e cannot join the two ends");
    if (oriented)
        need(a == r1 || b == r2, "requested orientation clashes with the ends");
    set_case(me, 0, "incident");
    if (a == r1 || b == r1) {
        Vertex x = a == r1 ? b : a;
        Path rest = neutral_path_two_faults(n, r1, g, r2, x, me);
        return weld(Path(r1, {}), orient(rest, x));
    }
    Vertex x = a == r2 ? b : a;
    Path rest = neutral_path_two_faults(n, r2, g, r1, x, me);
    return weld(orient(rest, r1), Path(r2, {}));
}

Path charged_path_fault31(int n, const Vertex& g, const Vertex& r, const Vertex& r1,
                          const Vertex& g1, const Vertex& g2, TraceNode* tr) {
    floor_at(n, LemmaId::CHG31);
    dims(n, {g, r, r1, g1, g2});
    need(r.color() == r1.color() && r != r1, "two distinct same-parity deletions");
    need(g.color() != r.color(), "third deletion has the opposite parity");
    need(g1.color() == g.color() && g2.color() == g.color() && g1 != g2,
         "terminals share the deleted green's parity");
    need(g1 != g && g2 != g, "terminals must survive");
    PlateSplit split = choose_axis(n, {{r, r1, true}});
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    Plate T = split.side(g), B = other(T);
    Vertex rt = split.side(r) == T ? r : r1;
    Vertex rb = split.side(r) == T ? r1 : r;
    bool t1 = split.side(g1) == T, t2 = split.side(g2) == T;
    if (t1 && t2) {
        TraceNode* me = trace_child(tr, lemma_name(LemmaId::CHG31), split.axis, "1");
        Path top = up(T, laceable_path(n - 1, pj(rt), pj(g1), pj(g), me));
        int i = find_vertex(top, g2);
        internal(i > 0 && i < top.length(), "second terminal must be interior");
        auto vs = path_vertices(top);
        Path piece1 = cut(top, i - 1).first;
        Path rest = cut(top, i).second;
        Path piece2 = cut(rest, rest.length() - 1).first;
        Vertex p = vs[i - 1], q = vs[vs.size() - 2];
        Path bot = up(B, laceable_path(n - 1, pj(rb), pj(split.partner(p)),
                                       pj(split.partner(q)), me));
        return weld({piece1, bot, reverse(piece2)});
    }
    if (t1 != t2) {
        TraceNode* me = trace_child(tr, lemma_name(LemmaId::CHG31), split.axis, "2");
        Vertex gt = t1 ? g1 : g2, gb = t1 ? g2 : g1;
        auto cands = paths_distinct_first_edges(n - 1, pj(rt), pj(g), pj(gt), me);
        Vertex bad = pj(split.partner(gb));
        const Path* pick = nullptr;
        for (auto& c : cands)
            if (path_vertices(c)[1] != bad) {
                pick = &c;
                break;
            }
        internal(pick != nullptr, "a first edge avoiding the terminal exists");
        Path pf = up(T, *pick);
        Vertex u = path_vertices(pf)[1];
        Path piece = cut(pf, 1).second;
        Path bot = up(B, laceable_path(n - 1, pj(rb), pj(split.partner(u)), pj(gb), me));
        return orient(weld(reverse(piece), bot), g1);
    }
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::CHG31), split.axis, "3");
    Path cyc = up(T, cycle_with_neutral_fault(n - 1, Fault(n - 1, {pj(rt), pj(g)}), me));
    if (n == 4) {
        Path bot = up(B, laceable_path(n - 1, pj(rb), pj(g1), pj(g2), me));
        auto vs = path_vertices(bot);
        for (size_t i = 0; i + 1 < vs.size(); ++i) {
            Vertex px = split.partner(vs[i]), py = split.partner(vs[i + 1]);
            if (px == rt || px == g || py == rt || py == g) continue;
            Path rot = rotate_cycle(cyc, px);
            auto rv = path_vertices(rot);
            if (rv[1] != py && rv[rv.size() - 2] != py) continue;
            Path rec = cycle_minus_edge(cyc, px, py);
            return orient(surgery(split, bot, vs[i], vs[i + 1], rec), g1);
        }
        throw InternalCaseError("no parallel bridge pair found");
    }
    auto cv = path_vertices(cyc);
    for (size_t i = 0; i + 1 < cv.size(); ++i) {
        Vertex c1 = cv[i], c2 = cv[i + 1];
        Vertex p1 = split.partner(c1), p2 = split.partner(c2);
        if (p1 == rb || p1 == g1 || p1 == g2 || p2 == rb || p2 == g1 || p2 == g2) continue;
        Path bot = up(B, charged_path_through_edge_one_fault(
                             n - 1, pj(rb), pj(g1), pj(g2), {pj(p1), pj(p2)}, false, me));
        Path rec = cycle_minus_edge(cyc, c1, c2);
        // the unoriented bottom path may traverse the edge either way
        auto bv = path_vertices(bot);
        int at = find_vertex(bot, p1);
        Vertex ea = p1, eb = p2;
        if (at + 1 >= (int)bv.size() || bv[at + 1] != p2) std::swap(ea, eb);
        return orient(surgery(split, bot, ea, eb, rec), g1);
    }
    throw InternalCaseError("no free cycle edge found");
}

Path cycle_far_terminals(int n, const Vertex& g, const Vertex& r, const Vertex& g1,
                         const Vertex& g2, TraceNode* tr) {
    if (n < 4) throw ThresholdError("cycle-far-terminals: dimension below bound");
    dims(n, {g, r, g1, g2});
    need(g.color() != r.color(), "deleted pair must be neutral");
    need(g1.color() == g2.color() && g1 != g2, "marked pair must share a parity");
    need(g1 != g && g1 != r && g2 != g && g2 != r, "marked vertices must survive");
    Vertex dg = g, dr = r;
    if (dg.color() != g1.color()) std::swap(dg, dr);
    PlateSplit split = choose_axis(n, {{g1, g2, true}});
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    Vertex ga = g1, gb = g2;
    if (split.side(dr) == split.side(dg)) {
        if (split.side(ga) != split.side(dr)) std::swap(ga, gb);
        TraceNode* me = trace_child(tr, "cycle-far-terminals", split.axis, "together");
        Plate T = split.side(dr), B = other(T);
        Path cyc = up(T, cycle_with_neutral_fault(n - 1, Fault(n - 1, {pj(dr), pj(dg)}), me));
        auto cv = path_vertices(cyc);
        for (size_t i = 0; i + 1 < cv.size(); ++i) {
            Vertex u = cv[i], w = cv[i + 1];
            Vertex g3 = u.color() == ga.color() ? u : w;
            Vertex r3 = u.color() == ga.color() ? w : u;
            if (g3 == ga || split.partner(r3) == gb) continue;
            Path bot = up(B, havel_path(n - 1, pj(split.partner(g3)),
                                        pj(split.partner(r3)), me));
            Path top = cycle_minus_edge(cyc, g3, r3);
            return close_cycle(weld(top, orient(bot, split.partner(r3))));
        }
        throw InternalCaseError("no usable cycle edge");
    }
    if (split.side(ga) != split.side(dr)) std::swap(ga, gb);
    internal(split.side(ga) == split.side(dr), "marked vertex must share the red's plate");
    TraceNode* me = trace_child(tr, "cycle-far-terminals", split.axis, "split");
    Plate T = split.side(dr), B = other(T);
    Bridge b1 = find_bridge(split, T, ga.color(), {dr, dg, ga, gb});
    Vertex t1 = T == Plate::Top ? b1.top : b1.bottom;
    Vertex u1 = T == Plate::Top ? b1.bottom : b1.top;
    Bridge b2 = find_bridge(split, T, ga.color(), {dr, dg, ga, gb, t1, u1});
    Vertex t2 = T == Plate::Top ? b2.top : b2.bottom;
    Vertex u2 = T == Plate::Top ? b2.bottom : b2.top;
    Path top = up(T, laceable_path(n - 1, pj(dr), pj(t1), pj(t2), me));
    Path bot = up(B, laceable_path(n - 1, pj(dg), pj(u1), pj(u2), me));
    return close_cycle(weld(top, orient(bot, u2)));
}

} // namespace qpath
