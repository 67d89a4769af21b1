#include <algorithm>
#include <bit>
#include <functional>

#include "qpath/constructors.hpp"

// Two freely prescribed neutral terminal pairs around a mass-two neutral
// fault in Q4.  Split so both deleted vertices share the top plate and
// branch on how the four terminals are distributed.

namespace qpath {

namespace {

void need(bool ok, const char* msg) {
    if (!ok) throw HypothesisError(msg);
}

void internal(bool ok, const char* msg) {
    if (!ok) throw InternalCaseError(msg);
}

Path prefix_to(const Path& p, int i) { return cut(p, i).first; }
Path suffix_from(const Path& p, int i) { return cut(p, i).second; }

Path segment(const Path& p, int i, int j) {
    return Path(path_vertices(p)[i],
                Word(p.word.begin() + i, p.word.begin() + j));
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

// Exhaustive fallback for the handful of degenerate corners the case
// analysis glosses over: find the 2-path covering directly.
Covering q4_exhaustive(const Fault& f, const Vertex& s1, const Vertex& t1,
                       const Vertex& s2, const Vertex& t2) {
    uint32_t full = 0xffffu;
    for (auto& v : f.vertices) full &= ~(1u << v.bits);
    auto word_of = [](const std::vector<Vertex>& vs) {
        Word w;
        for (size_t i = 0; i + 1 < vs.size(); ++i)
            w.push_back(diff_letter(vs[i], vs[i + 1]));
        return w;
    };
    std::vector<Vertex> acc1{s1}, acc2{s2};
    std::function<bool(uint32_t)> ham2 = [&](uint32_t mask) {
        Vertex cur = acc2.back();
        if (cur == t2) return mask == 0;
        for (Letter l = 1; l <= 4; ++l) {
            Vertex nx = cur.flip(l);
            uint32_t bit = 1u << nx.bits;
            if (!(mask & bit)) continue;
            acc2.push_back(nx);
            if (ham2(mask & ~bit)) return true;
            acc2.pop_back();
        }
        return false;
    };
    std::function<bool(uint32_t)> grow = [&](uint32_t mask) {
        Vertex cur = acc1.back();
        if (cur == t1) {
            uint32_t sbit = 1u << s2.bits;
            if (!(mask & sbit) || !(mask & (1u << t2.bits))) return false;
            acc2 = {s2};
            return ham2(mask & ~sbit);
        }
        for (Letter l = 1; l <= 4; ++l) {
            Vertex nx = cur.flip(l);
            uint32_t bit = 1u << nx.bits;
            if (!(mask & bit)) continue;
            if (nx == s2 || nx == t2) continue;
            acc1.push_back(nx);
            if (grow(mask & ~bit)) return true;
            acc1.pop_back();
        }
        return false;
    };
    internal(grow(full & ~(1u << s1.bits)), "covering must exist by exhaustion");
    return {Path(s1, word_of(acc1)), Path(s2, word_of(acc2))};
}

} // namespace

Covering q4_free_two_neutral_pairs(const Fault& f, const Vertex& ar1, const Vertex& ag1,
                                   const Vertex& ar2, const Vertex& ag2,
                                   TraceNode* tr) {
    need(f.dim == 4, "fault lives in dimension four");
    need(f.mass() == 2 && f.neutral(), "fault must be a neutral pair");
    for (auto& v : {ar1, ag1, ar2, ag2}) {
        if (v.dim != 4) throw DimensionError("vertex dimension mismatch");
        need(!f.contains(v), "ends must survive");
    }
    need(ar1.color() != ag1.color() && ar2.color() != ag2.color(),
         "both end pairs must be neutral");
    {
        std::vector<Vertex> all{ar1, ag1, ar2, ag2};
        std::sort(all.begin(), all.end());
        need(std::adjacent_find(all.begin(), all.end()) == all.end(),
             "ends must be distinct");
    }
    Vertex fr = f.vertices[0], fg = f.vertices[1];
    Vertex p1r = ar1.color() == fr.color() ? ar1 : ag1;
    Vertex p1g = ar1.color() == fr.color() ? ag1 : ar1;
    Vertex p2r = ar2.color() == fr.color() ? ar2 : ag2;
    Vertex p2g = ar2.color() == fr.color() ? ag2 : ar2;
    PlateSplit split = choose_axis(4, {{fr, fg, false}});
    Plate T = split.side(fr), B = other(T);
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    auto pt = [&](const Vertex& v) { return split.partner(v); };
    auto top = [&](const Vertex& v) { return split.side(v) == T; };
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::Q4FREE), split.axis);
    bool pswap = false;
    auto swap_pairs = [&] {
        std::swap(p1r, p2r);
        std::swap(p1g, p2g);
        pswap = !pswap;
    };
    auto swap_colors = [&] {
        std::swap(fr, fg);
        std::swap(p1r, p1g);
        std::swap(p2r, p2g);
    };
    int tot = top(p1r) + top(p1g) + top(p2r) + top(p2g);
    Path res1, res2;
    if (tot == 4) {
        bool b1 = in_b_set(pj(fr), pj(fg), pj(p1r), pj(p1g));
        bool b2 = in_b_set(pj(fr), pj(fg), pj(p2r), pj(p2g));
        if (b1 && !b2) swap_pairs();
        if (!b1 || !b2) {
            if (me) me->label = "1b";
            Path walk = orient(
                up(T, *q3_two_deleted(pj(fr), pj(fg), pj(p1r), pj(p1g), me).ham),
                p1r);
            int i = find_vertex(walk, p2r), j = find_vertex(walk, p2g);
            if (i > j) std::swap(i, j);
            internal(i > 0 && j < walk.length(), "inner pair must be interior");
            auto vs = path_vertices(walk);
            Path bot = up(B, havel_path(3, pj(pt(vs[i - 1])), pj(pt(vs[j + 1])), me));
            res1 = weld({prefix_to(walk, i - 1), orient(bot, pt(vs[i - 1])),
                         suffix_from(walk, j + 1)});
            res2 = segment(walk, i, j);
        } else {
            if (me) me->label = "1a";
            bool done = false;
            for (Letter x = 1; x <= 4 && !done; ++x) {
                if (x == split.axis) continue;
                Vertex a = p1r.flip(x), b = p1g.flip(x);
                std::vector<Vertex> all{a, b, fr, fg, p1r, p1g, p2r, p2g};
                std::sort(all.begin(), all.end());
                if (std::adjacent_find(all.begin(), all.end()) != all.end())
                    continue;
                auto bc = dvorak_pair(3, pj(pt(a)), pj(pt(b)), pj(pt(p2r)),
                                      pj(pt(p2g)), me);
                Path mu = up(B, covering_path(bc, pj(pt(a)), pj(pt(b))));
                Path nu = up(B, covering_path(bc, pj(pt(p2r)), pj(pt(p2g))));
                res1 = weld({Path(p1r, {}), Path(a, {}), orient(mu, pt(a)),
                             Path(b, {}), Path(p1g, {})});
                res2 = weld({Path(p2r, {}), orient(nu, pt(p2r)), Path(p2g, {})});
                done = true;
            }
            internal(done, "blocked pairs always leave a parallel rung");
        }
    } else if (tot == 3) {
        if (!top(p1r) || !top(p2r)) swap_colors();
        if (!top(p1g)) swap_pairs();
        // now p1r, p1g, p2r above and p2g below
        if (!in_b_set(pj(fr), pj(fg), pj(p2r), pj(p1g))) {
            if (me) me->label = "2a";
            Path walk = orient(
                up(T, *q3_two_deleted(pj(fr), pj(fg), pj(p2r), pj(p1g), me).ham),
                p1g);
            int i = find_vertex(walk, p1r);
            auto vs = path_vertices(walk);
            Path bot = up(B, havel_path(3, pj(pt(vs[i + 1])), pj(p2g), me));
            res1 = prefix_to(walk, i);
            res2 = weld(orient(bot, p2g), suffix_from(walk, i + 1));
        } else {
            if (me) me->label = "2b";
            Path walk = orient(
                up(T, *q3_two_deleted(pj(fr), pj(fg), pj(p1r), pj(p1g), me).ham),
                p1g);
            auto vs = path_vertices(walk);
            int i = find_vertex(walk, p2r);
            internal(i == 1 || i == 3, "blocked mate splits the walk 1-4 or 3-2");
            Vertex pv = pt(p2g);
            int j = find_vertex(walk, pv);
            if ((i == 3 && j == 1) || (i == 1 && j == 3)) {
                // the lone shadow sits on the short side: detour around it
                Path mu = up(B, laceable_path(3, pj(p2g), pj(pt(vs[0])),
                                              pj(pt(vs[4])), me));
                res1 = weld({Path(vs[0], {}), orient(mu, pt(vs[0])),
                             suffix_from(walk, 4)});
                Path mid = segment(walk, 1, 3);
                res2 = weld(i == 3 ? reverse(mid) : mid, Path(p2g, {}));
            } else if (i == 3) {
                auto bc = dvorak_pair(3, pj(pt(vs[2])), pj(p2g), pj(pt(vs[1])),
                                      pj(pt(vs[4])), me);
                Path mu = up(B, covering_path(bc, pj(pt(vs[2])), pj(p2g)));
                Path nu = up(B, covering_path(bc, pj(pt(vs[1])), pj(pt(vs[4]))));
                res1 = weld({prefix_to(walk, 1), orient(nu, pt(vs[1])),
                             suffix_from(walk, 4)});
                res2 = weld(orient(mu, p2g), segment(walk, 2, 3));
            } else {
                auto bc = dvorak_pair(3, pj(pt(vs[0])), pj(pt(vs[3])), pj(pt(vs[2])),
                                      pj(p2g), me);
                Path mu = up(B, covering_path(bc, pj(pt(vs[0])), pj(pt(vs[3]))));
                Path nu = up(B, covering_path(bc, pj(pt(vs[2])), pj(p2g)));
                res1 = weld({Path(vs[0], {}), orient(mu, pt(vs[0])),
                             suffix_from(walk, 3)});
                res2 = weld(segment(walk, 1, 2), orient(nu, pt(vs[2])));
            }
        }
    } else if (tot == 2 && top(p1r) == top(p2r) && top(p1g) == top(p2g)) {
        if (me) me->label = "3";
        if (top(p1g)) swap_colors();
        // p1r, p2r above, p1g, p2g below
        Path walk = up(T, laceable_path(3, pj(fg), pj(p1r), pj(p2r), me));
        int i = find_vertex(walk, fr);
        internal(i > 0 && i < walk.length(), "deleted vertex lies inside");
        auto vs = path_vertices(walk);
        auto bc = dvorak_pair(3, pj(pt(vs[i - 1])), pj(p1g), pj(pt(vs[i + 1])),
                              pj(p2g), me);
        Path mu = up(B, covering_path(bc, pj(pt(vs[i - 1])), pj(p1g)));
        Path nu = up(B, covering_path(bc, pj(pt(vs[i + 1])), pj(p2g)));
        res1 = weld(prefix_to(walk, i - 1), orient(mu, pt(vs[i - 1])));
        res2 = weld(reverse(suffix_from(walk, i + 1)), orient(nu, pt(vs[i + 1])));
    } else if (tot == 2 && top(p1r) == top(p1g)) {
        if (me) me->label = "4";
        if (!top(p1r)) swap_pairs();
        // pair one above, pair two below
        if (!in_b_set(pj(fr), pj(fg), pj(p1r), pj(p1g))) {
            res1 = up(T, *q3_two_deleted(pj(fr), pj(fg), pj(p1r), pj(p1g), me).ham);
            res2 = up(B, havel_path(3, pj(p2r), pj(p2g), me));
        } else {
            // length-3 path plus one uncovered parallel edge
            std::vector<Vertex> free;
            for (uint32_t bs = 0; bs < 16; ++bs) {
                Vertex v(4, bs);
                if (split.side(v) != T || v == fr || v == fg) continue;
                if (v == p1r || v == p1g) continue;
                free.push_back(v);
            }
            bool done = false;
            for (auto& m1 : free)
                for (auto& m2 : free) {
                    if (done || m1 == m2) continue;
                    if (!adjacent(p1r, m1) || !adjacent(m1, m2) || !adjacent(m2, p1g))
                        continue;
                    std::vector<Vertex> rest;
                    for (auto& v : free)
                        if (v != m1 && v != m2) rest.push_back(v);
                    internal(rest.size() == 2, "two vertices remain");
                    if (!adjacent(rest[0], rest[1])) continue;
                    Vertex u = rest[0], w = rest[1];
                    Vertex a = pt(u), b = pt(w);
                    bool ca = a == p2r || a == p2g, cb = b == p2r || b == p2g;
                    if (ca && cb) continue;
                    if (cb) {
                        std::swap(u, w);
                        std::swap(a, b);
                        std::swap(ca, cb);
                    }
                    res1 = Path(p1r, {diff_letter(p1r, m1), diff_letter(m1, m2),
                                      diff_letter(m2, p1g)});
                    if (!ca) {
                        Path bot = up(B, havel_through_edge(3, pj(p2r), pj(p2g),
                                                            {pj(a), pj(b)}, me));
                        // match the edge in the order the bottom path walks it
                        auto bvv = path_vertices(bot);
                        int at = find_vertex(bot, a);
                        Vertex ea = a, eb = b;
                        if (at + 1 >= (int)bvv.size() || bvv[at + 1] != b)
                            std::swap(ea, eb);
                        res2 = surgery(split, bot, ea, eb,
                                       Path(u, {diff_letter(u, w)}));
                    } else if (a == p2r) {
                        // edge partner hits an end: route straight through it
                        Path mu = up(B, laceable_path(3, pj(a), pj(b), pj(p2g), me));
                        res2 = weld({Path(p2r, {}), Path(u, {}), Path(w, {}),
                                     orient(mu, b)});
                    } else {
                        Path mu = up(B, laceable_path(3, pj(a), pj(b), pj(p2r), me));
                        res2 = weld({orient(mu, p2r), Path(w, {}), Path(u, {}),
                                     Path(p2g, {})});
                    }
                    done = true;
                }
            if (!done) {
                auto cov = q4_exhaustive(f, p1r, p1g, p2r, p2g);
                res1 = cov[0];
                res2 = cov[1];
            }
        }
    } else if (tot == 2) {
        if (top(p2r)) swap_pairs();
        // p1r, p2g above and p2r, p1g below
        if (!in_b_set(pj(fr), pj(fg), pj(p1r), pj(p2g))) {
            if (me) me->label = "5a";
            Path walk = orient(
                up(T, *q3_two_deleted(pj(fr), pj(fg), pj(p1r), pj(p2g), me).ham),
                p1r);
            auto vs = path_vertices(walk);
            Vertex pg = pt(p1g), pr = pt(p2r);
            int kg = find_vertex(walk, pg), kr = find_vertex(walk, pr);
            if (kg >= 0 && kr != kg + 1) {
                Path mu = up(B, laceable_path(3, pj(p1g), pj(pt(vs[kg + 1])),
                                              pj(p2r), me));
                res1 = weld(prefix_to(walk, kg), Path(p1g, {}));
                res2 = weld(reverse(orient(mu, pt(vs[kg + 1]))),
                            suffix_from(walk, kg + 1));
            } else if (kr >= 0 && kg != kr - 1) {
                Path mu = up(B, laceable_path(3, pj(p2r), pj(pt(vs[kr - 1])),
                                              pj(p1g), me));
                res1 = weld(prefix_to(walk, kr - 1), orient(mu, pt(vs[kr - 1])));
                res2 = weld(Path(p2r, {}), segment(walk, kr, walk.length()));
            } else if (kg < 0 && kr < 0) {
                auto bc = dvorak_pair(3, pj(pt(vs[1])), pj(p1g), pj(pt(vs[2])),
                                      pj(p2r), me);
                Path mu = up(B, covering_path(bc, pj(pt(vs[1])), pj(p1g)));
                Path nu = up(B, covering_path(bc, pj(pt(vs[2])), pj(p2r)));
                res1 = weld(prefix_to(walk, 1), orient(mu, pt(vs[1])));
                res2 = weld(reverse(orient(nu, pt(vs[2]))), suffix_from(walk, 2));
            } else {
                // both shadows consecutive on the walk; no splice point exists
                auto cov = q4_exhaustive(f, p1r, p1g, p2r, p2g);
                res1 = cov[0];
                res2 = cov[1];
            }
        } else {
            if (me) me->label = "5b";
            auto alt = q3_two_deleted(pj(fr), pj(fg), pj(p1r), pj(p2g), me);
            bool done = false;
            for (auto& cov : alt.two_path) {
                if (done) continue;
                Path pa = up(T, orient(cov[0], pj(p1r)));
                Path pb = up(T, orient(cov[1], pj(p2g)));
                Vertex e1 = pt(endpoint(pa)), e2 = pt(endpoint(pb));
                if (e1 == p1g && e2 == p2r) continue;
                if (e1 != p1g && e2 != p2r) {
                    if (!q3_alpha_ok(pj(e1), pj(p1g), pj(e2), pj(p2r))) continue;
                    auto bc = two_charged_pairs(3, pj(e1), pj(p1g), pj(e2), pj(p2r),
                                                false, me);
                    Path mu = up(B, covering_path(bc, pj(e1), pj(p1g)));
                    Path nu = up(B, covering_path(bc, pj(e2), pj(p2r)));
                    res1 = weld(pa, orient(mu, e1));
                    res2 = weld(pb, orient(nu, e2));
                } else if (e2 == p2r) {
                    Path mu = up(B, laceable_path(3, pj(p2r), pj(e1), pj(p1g), me));
                    res1 = weld(pa, orient(mu, e1));
                    res2 = weld(pb, Path(p2r, {}));
                } else {
                    Path mu = up(B, laceable_path(3, pj(p1g), pj(e2), pj(p2r), me));
                    res1 = weld(pa, Path(p1g, {}));
                    res2 = weld(pb, orient(mu, e2));
                }
                done = true;
            }
            if (!done) {
                auto cov = q4_exhaustive(f, p1r, p1g, p2r, p2g);
                res1 = cov[0];
                res2 = cov[1];
            }
        }
    } else if (tot == 1) {
        if (me) me->label = "6";
        if (top(p1g) || top(p2g)) swap_colors();
        if (top(p2r)) swap_pairs();
        // p1r alone above
        auto cands = paths_distinct_first_edges(3, pj(fg), pj(fr), pj(p1r), me);
        bool done = false;
        for (auto& cand : cands) {
            if (done) continue;
            Path walk = up(T, orient(cand, pj(fr)));
            auto vs = path_vertices(walk);
            Vertex r3 = pt(vs[1]);
            if (r3 == p2r) continue;
            auto bc = dvorak_pair(3, pj(r3), pj(p1g), pj(p2r), pj(p2g), me);
            Path mu = up(B, covering_path(bc, pj(r3), pj(p1g)));
            Path nu = up(B, covering_path(bc, pj(p2r), pj(p2g)));
            res1 = weld(reverse(suffix_from(walk, 1)), orient(mu, r3));
            res2 = orient(nu, p2r);
            done = true;
        }
        internal(done, "some first edge dodges the lower end");
    } else {
        if (me) me->label = "7";
        auto bc = dvorak_pair(3, pj(p1r), pj(p1g), pj(p2r), pj(p2g), me);
        Path pa = up(B, covering_path(bc, pj(p1r), pj(p1g)));
        Path pb = up(B, covering_path(bc, pj(p2r), pj(p2g)));
        bool done = false;
        for (Path* h : {&pa, &pb}) {
            if (done) continue;
            auto vs = path_vertices(*h);
            for (int k = 0; k + 1 <= h->length() && !done; ++k) {
                Vertex u = pt(vs[k]), w = pt(vs[k + 1]);
                if (u == fr || u == fg || w == fr || w == fg) continue;
                if (in_b_set(pj(fr), pj(fg), pj(u), pj(w))) continue;
                Path ham = orient(
                    up(T, *q3_two_deleted(pj(fr), pj(fg), pj(u), pj(w), me).ham), u);
                *h = weld({prefix_to(*h, k), ham, suffix_from(*h, k + 1)});
                done = true;
            }
        }
        internal(done, "some covered edge lifts cleanly");
        res1 = pa;
        res2 = pb;
    }
    if (pswap) std::swap(res1, res2);
    return {orient(res1, ar1), orient(res2, ar2)};
}

} // namespace qpath
