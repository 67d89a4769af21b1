#include <algorithm>
#include <array>

#include "qpath/constructors.hpp"

// The high-mass builders share one skeleton: split along an axis that
// separates the three same-parity deletions two against one, solve the
// plates recursively, and stitch the pieces with weld().

namespace qpath {

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

Path prefix_to(const Path& p, int i) { return cut(p, i).first; }
Path suffix_from(const Path& p, int i) { return cut(p, i).second; }

// vertices i..j of p as a path
Path segment(const Path& p, int i, int j) {
    return Path(path_vertices(p)[i],
                Word(p.word.begin() + i, p.word.begin() + j));
}

void check_distinct(std::vector<Vertex> vs, const char* msg) {
    std::sort(vs.begin(), vs.end());
    need(std::adjacent_find(vs.begin(), vs.end()) == vs.end(), msg);
}

// Axis along which exactly one of the three same-parity deletions sits
// alone; rt1, rt2 share plate T and rb sits on B.
struct TrioSplit {
    PlateSplit split;
    Plate T = Plate::Top, B = Plate::Bottom;
    Vertex rt1, rt2, rb;
};

TrioSplit split_trio(int n, const Vertex& r1, const Vertex& r2, const Vertex& r3) {
    Letter ax = 0;
    for (Letter l = 1; l <= n && !ax; ++l) {
        int c = r1.coord(l) + r2.coord(l) + r3.coord(l);
        if (c == 1 || c == 2) ax = l;
    }
    internal(ax != 0, "three distinct vertices always split");
    TrioSplit ts;
    ts.split = PlateSplit(n, ax);
    std::vector<Vertex> a, b;
    for (auto& v : {r1, r2, r3})
        (ts.split.side(v) == Plate::Top ? a : b).push_back(v);
    if (a.size() == 2) {
        ts.T = Plate::Top;
        ts.rt1 = a[0];
        ts.rt2 = a[1];
        ts.rb = b[0];
    } else {
        ts.T = Plate::Bottom;
        ts.rt1 = b[0];
        ts.rt2 = b[1];
        ts.rb = a[0];
    }
    ts.B = other(ts.T);
    return ts;
}

// (3,1,1,1): mass-three unit-charge fault, one neutral and one charged
// terminal pair.  Delete the neutral pair's majority-parity end, solve the
// heavier instance, and step back to the deleted end over a fresh letter.
Covering cover_3111(int n, const Vertex& f1, const Vertex& f2, const Vertex& f3,
                    const Vertex& na, const Vertex& nb, const Vertex& ca,
                    const Vertex& cb, TraceNode* tr) {
    std::vector<Vertex> fs{f1, f2, f3};
    std::vector<Vertex> majv, minv;
    Color c0 = f1.color();
    int same = 0;
    for (auto& v : fs) same += v.color() == c0;
    Color maj = same >= 2 ? c0 : opposite(c0);
    for (auto& v : fs) (v.color() == maj ? majv : minv).push_back(v);
    internal(majv.size() == 2 && minv.size() == 1, "unit charge expected");
    need(na.color() != nb.color(), "first pair must be neutral");
    need(ca.color() == cb.color() && ca.color() != maj,
         "charged pair must oppose the fault majority");
    Vertex u = na, w = nb;
    if (u.color() != maj) std::swap(u, w);
    TraceNode* me = trace_child(tr, "neutral-to-charged");
    for (Letter z = 1; z <= n; ++z) {
        Vertex gp = u.flip(z);
        if (gp == minv[0] || gp == w || gp == ca || gp == cb) continue;
        auto cov = two_green_pairs_fault42(n, majv[0], majv[1], u, minv[0], gp, w,
                                           ca, cb, me);
        Path neut = weld(orient(covering_path(cov, gp, w), w), Path(u, {}));
        return {orient(neut, na), orient(covering_path(cov, ca, cb), ca)};
    }
    throw InternalCaseError("no free neighbour for the charge flip");
}

// Two neutral pairs around a mass-two neutral fault.  Dimension four is
// the catalogued base; above it the same charge flip applies twice.
Covering cover_2020(int n, const Vertex& fr, const Vertex& fg, const Vertex& a1,
                    const Vertex& b1, const Vertex& a2, const Vertex& b2,
                    TraceNode* tr) {
    need(fr.color() != fg.color(), "fault must be neutral");
    if (n == 4)
        return q4_free_two_neutral_pairs(Fault(4, {fr, fg}), a1, b1, a2, b2, tr);
    Vertex u = a1, w = b1;
    if (u.color() != fr.color()) std::swap(u, w);
    TraceNode* me = trace_child(tr, "neutral-to-charged");
    for (Letter z = 1; z <= n; ++z) {
        Vertex gp = u.flip(z);
        if (gp == fr || gp == fg || gp == w || gp == a2 || gp == b2) continue;
        auto cov = cover_3111(n, fr, fg, u, a2, b2, gp, w, me);
        Path p1 = weld(orient(cov[1], w), Path(u, {}));
        return {orient(p1, a1), orient(cov[0], a2)};
    }
    throw InternalCaseError("no free neighbour for the charge flip");
}

} // namespace

Covering two_green_pairs_fault42(int n, const Vertex& r1, const Vertex& r2,
                                 const Vertex& r3, const Vertex& g, const Vertex& g1,
                                 const Vertex& g2, const Vertex& g3, const Vertex& g4,
                                 TraceNode* tr) {
    floor_at(n, LemmaId::GG42);
    dims(n, {r1, r2, r3, g, g1, g2, g3, g4});
    need(r1.color() == r2.color() && r2.color() == r3.color(),
         "three deletions share a parity");
    check_distinct({r1, r2, r3}, "deletions must be distinct");
    need(g.color() != r1.color(), "fourth deletion has the opposite parity");
    for (auto& e : {g1, g2, g3, g4}) {
        need(e.color() == g.color(), "ends share the minority deleted parity");
        need(e != g, "ends must survive");
    }
    check_distinct({g1, g2, g3, g4}, "ends must be distinct");
    TrioSplit ts = split_trio(n, r1, r2, r3);
    PlateSplit& split = ts.split;
    Plate T = ts.T, B = ts.B;
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    auto pt = [&](const Vertex& v) { return split.partner(v); };
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::GG42), split.axis);
    std::array<std::pair<Vertex, Vertex>, 2> prs{{{g1, g2}, {g3, g4}}};
    auto top_count = [&](const std::pair<Vertex, Vertex>& p) {
        return int(split.side(p.first) == T) + int(split.side(p.second) == T);
    };
    int c1 = top_count(prs[0]), c2 = top_count(prs[1]);
    Path res1, res2; // for (g1,g2) and (g3,g4)
    if (split.side(g) == T) {
        if (c1 == 2 && c2 == 2) {
            if (me) me->label = "a1";
            Path top = up(T, charged_path_fault31(n - 1, pj(g), pj(ts.rt1), pj(ts.rt2),
                                                  pj(g1), pj(g2), me));
            int i = find_vertex(top, g3), j = find_vertex(top, g4);
            if (i > j) std::swap(i, j);
            internal(i > 0 && j < top.length(), "inner pair must be interior");
            auto vs = path_vertices(top);
            Path bot = up(B, laceable_path(n - 1, pj(ts.rb), pj(pt(vs[i - 1])),
                                           pj(pt(vs[j + 1])), me));
            res1 = weld({prefix_to(top, i - 1), orient(bot, pt(vs[i - 1])),
                         suffix_from(top, j + 1)});
            res2 = segment(top, i, j);
        } else if (c1 + c2 == 3) {
            if (me) me->label = "a2";
            bool p1whole = c1 == 2;
            auto& wp = p1whole ? prs[0] : prs[1];
            auto& sp = p1whole ? prs[1] : prs[0];
            Vertex st = split.side(sp.first) == T ? sp.first : sp.second;
            Vertex sb = split.side(sp.first) == T ? sp.second : sp.first;
            Path wres, sres;
            bool done = false;
            for (int o = 0; o < 2 && !done; ++o) {
                Vertex a = o ? wp.second : wp.first;
                Vertex b = o ? wp.first : wp.second;
                Path top = up(T, charged_path_fault31(n - 1, pj(g), pj(ts.rt1),
                                                      pj(ts.rt2), pj(a), pj(st), me));
                int ib = find_vertex(top, b);
                internal(ib > 0 && ib < top.length(), "mate must be interior");
                auto vs = path_vertices(top);
                Vertex sq = vs[ib + 1];
                if (pt(sq) != sb) {
                    Path bot = up(B, laceable_path(n - 1, pj(ts.rb), pj(pt(sq)),
                                                   pj(sb), me));
                    wres = prefix_to(top, ib);
                    sres = weld(reverse(suffix_from(top, ib + 1)), orient(bot, pt(sq)));
                    done = true;
                } else {
                    Vertex bad = pt(ts.rb);
                    for (int m = top.length(); m >= ib + 3 && !done; --m) {
                        if (vs[m] == bad || vs[m - 1] == bad) continue;
                        Vertex ta = pt(vs[m]), tb = pt(vs[m - 1]);
                        if (ta.color() != ts.rb.color()) std::swap(ta, tb);
                        Path bot = up(B, neutral_path_two_faults(
                                             n - 1, pj(ts.rb), pj(sb), pj(ta), pj(tb),
                                             me));
                        wres = prefix_to(top, ib);
                        sres = weld({reverse(suffix_from(top, m)),
                                     orient(bot, pt(vs[m])),
                                     reverse(segment(top, ib + 1, m - 1)),
                                     Path(sb, {})});
                        done = true;
                    }
                }
            }
            internal(done, "no usable descent beside the split pair");
            res1 = p1whole ? wres : sres;
            res2 = p1whole ? sres : wres;
        } else if (c1 + c2 == 2 && (c1 == 2 || c2 == 2)) {
            if (me) me->label = "a3";
            auto& tp = c1 == 2 ? prs[0] : prs[1];
            auto& bp = c1 == 2 ? prs[1] : prs[0];
            Path top = up(T, charged_path_fault31(n - 1, pj(g), pj(ts.rt1), pj(ts.rt2),
                                                  pj(tp.first), pj(tp.second), me));
            Path bot = up(B, laceable_path(n - 1, pj(ts.rb), pj(bp.first),
                                           pj(bp.second), me));
            res1 = c1 == 2 ? top : bot;
            res2 = c1 == 2 ? bot : top;
        } else if (c1 == 1 && c2 == 1) {
            if (me) me->label = "a4";
            Vertex a = split.side(g1) == T ? g1 : g2;
            Vertex ab = split.side(g1) == T ? g2 : g1;
            Vertex c = split.side(g3) == T ? g3 : g4;
            Vertex cb = split.side(g3) == T ? g4 : g3;
            Path top = up(T, charged_path_fault31(n - 1, pj(g), pj(ts.rt1), pj(ts.rt2),
                                                  pj(a), pj(c), me));
            auto vs = path_vertices(top);
            bool done = false;
            for (int k = 0; k + 1 <= top.length() && !done; ++k) {
                Vertex u = pt(vs[k]), w = pt(vs[k + 1]);
                bool clash = false;
                for (auto& q : {ts.rb, ab, cb})
                    if (u == q || w == q) clash = true;
                if (clash) continue;
                Covering bc =
                    u.color() == ts.rb.color()
                        ? mixed_pair(n - 1, pj(ts.rb), pj(u), pj(ab), pj(w), pj(cb), me)
                        : mixed_pair(n - 1, pj(ts.rb), pj(w), pj(cb), pj(u), pj(ab),
                                     me);
                Path leg1 = up(B, covering_path(bc, pj(u), pj(ab)));
                Path leg2 = up(B, covering_path(bc, pj(w), pj(cb)));
                res1 = weld(prefix_to(top, k), leg1);
                res2 = weld(reverse(suffix_from(top, k + 1)), leg2);
                if (split.side(g3) != T && split.side(g4) != T) {
                    // never happens here; both pairs are split
                }
                done = true;
            }
            internal(done, "no free edge beside the split pairs");
            // res1 serves the pair containing a
            if (!(a == g1 || a == g2)) std::swap(res1, res2);
        } else if (c1 + c2 == 1) {
            if (me) me->label = "a5";
            auto& sp = c1 == 1 ? prs[0] : prs[1];
            auto& bp = c1 == 1 ? prs[1] : prs[0];
            Vertex st = split.side(sp.first) == T ? sp.first : sp.second;
            Vertex sb = split.side(sp.first) == T ? sp.second : sp.first;
            Vertex r = Vertex();
            bool ok = false;
            for (uint32_t bts = 0; bts < (1u << n) && !ok; ++bts) {
                Vertex v(n, bts);
                if (split.side(v) != B || v.color() != ts.rb.color()) continue;
                if (v == ts.rb || pt(v) == st || pt(v) == g) continue;
                r = v;
                ok = true;
            }
            internal(ok, "no spare bridge base below");
            Covering bc = mixed_pair(n - 1, pj(ts.rb), pj(r), pj(sb), pj(bp.first),
                                     pj(bp.second), me);
            Path top = up(T, charged_path_fault31(n - 1, pj(g), pj(ts.rt1), pj(ts.rt2),
                                                  pj(st), pj(pt(r)), me));
            Path sres = weld(top, up(B, covering_path(bc, pj(r), pj(sb))));
            Path bres = up(B, covering_path(bc, pj(bp.first), pj(bp.second)));
            res1 = c1 == 1 ? sres : bres;
            res2 = c1 == 1 ? bres : sres;
        } else {
            if (me) me->label = "a6";
            Vertex gv = pt(g);
            bool gv_deleted = gv == ts.rb;
            Path chosen, others;
            int chosen_pair = -1;
            bool done = false;
            for (int pi = 0; pi < 2 && !done; ++pi)
                for (int po = 0; po < 2 && !done; ++po) {
                    Vertex s3 = po ? prs[pi].second : prs[pi].first;
                    Vertex s4 = po ? prs[pi].first : prs[pi].second;
                    if (!gv_deleted && distance(s3, gv) < 3) continue;
                    for (int oo = 0; oo < 2 && !done; ++oo) {
                        Vertex o1 = oo ? prs[1 - pi].second : prs[1 - pi].first;
                        Vertex o2 = oo ? prs[1 - pi].first : prs[1 - pi].second;
                        for (Letter x = 1; x <= n && !done; ++x) {
                            if (x == split.axis) continue;
                            Vertex o2x = o2.flip(x);
                            if (o2x == ts.rb || pt(o2x) == g) continue;
                            Path bot = up(B, charged_path_fault31(
                                                 n - 1, pj(o2), pj(ts.rb), pj(o2x),
                                                 pj(o1), pj(s4), me));
                            int i = find_vertex(bot, s3);
                            internal(i > 0 && i < bot.length(),
                                     "factored end must be interior");
                            auto vs = path_vertices(bot);
                            if (pt(vs[i - 1]) == g) continue;
                            Path topp = up(T, charged_path_fault31(
                                                  n - 1, pj(g), pj(ts.rt1), pj(ts.rt2),
                                                  pj(pt(vs[i - 1])), pj(pt(o2x)), me));
                            others = weld({prefix_to(bot, i - 1),
                                           orient(topp, pt(vs[i - 1])), Path(o2x, {}),
                                           Path(o2, {})});
                            chosen = suffix_from(bot, i);
                            chosen_pair = pi;
                            done = true;
                        }
                    }
                }
            if (!done) {
                // every end hugs g's shadow: run the second pair through it
                internal(!gv_deleted, "adjacent ends with a deleted shadow");
                Fault cf(n - 1, {pj(ts.rb), pj(gv), pj(g3), pj(g4)});
                Path cyc = up(B, cycle_with_neutral_fault(n - 1, cf, me));
                Path rot = rotate_cycle(cyc, g1);
                auto vs = path_vertices(rot);
                int len = rot.length();
                int i = find_vertex(rot, g2);
                Path topp = up(T, charged_path_fault31(n - 1, pj(g), pj(ts.rt1),
                                                       pj(ts.rt2), pj(pt(vs[i - 1])),
                                                       pj(pt(vs[len - 1])), me));
                others = weld({prefix_to(rot, i - 1), orient(topp, pt(vs[i - 1])),
                               reverse(segment(rot, i, len - 1))});
                chosen = Path(g3, {diff_letter(g3, gv), diff_letter(gv, g4)});
                chosen_pair = 1;
                done = true;
            }
            res1 = chosen_pair == 0 ? chosen : others;
            res2 = chosen_pair == 0 ? others : chosen;
        }
    } else { // the minority deletion sits beside the lone majority one
        if (c1 == 2 && c2 == 2) {
            if (me) me->label = "b1";
            auto tc = two_green_pairs_fault22(n - 1, pj(ts.rt1), pj(ts.rt2), pj(g1),
                                              pj(g2), pj(g3), pj(g4), me);
            Path p1 = up(T, covering_path(tc, pj(g1), pj(g2)));
            Path p2 = up(T, covering_path(tc, pj(g3), pj(g4)));
            bool host_first = p1.length() >= p2.length();
            bool done = false;
            for (int h = 0; h < 2 && !done; ++h) {
                Path& host = (h == 0) == host_first ? p1 : p2;
                auto vs = path_vertices(host);
                for (int k = 0; k + 1 <= host.length() && !done; ++k) {
                    Vertex u = pt(vs[k]), w = pt(vs[k + 1]);
                    if (u == ts.rb || u == g || w == ts.rb || w == g) continue;
                    Vertex ra = u, gb = w;
                    if (ra.color() != ts.rb.color()) std::swap(ra, gb);
                    Path bot = up(B, neutral_path_two_faults(n - 1, pj(ts.rb), pj(g),
                                                             pj(ra), pj(gb), me));
                    host = weld({prefix_to(host, k), orient(bot, u),
                                 suffix_from(host, k + 1)});
                    done = true;
                }
            }
            internal(done, "no free edge above the fault shadows");
            res1 = p1;
            res2 = p2;
        } else if (c1 + c2 == 3) {
            if (me) me->label = "b2";
            bool p1whole = c1 == 2;
            auto& wp = p1whole ? prs[0] : prs[1];
            auto& sp = p1whole ? prs[1] : prs[0];
            Vertex st = split.side(sp.first) == T ? sp.first : sp.second;
            Vertex sb = split.side(sp.first) == T ? sp.second : sp.first;
            Vertex g5 = Vertex();
            bool ok = false;
            for (uint32_t bts = 0; bts < (1u << n) && !ok; ++bts) {
                Vertex v(n, bts);
                if (split.side(v) != T || v.color() != g1.color()) continue;
                if (v == wp.first || v == wp.second || v == st) continue;
                if (pt(v) == ts.rb) continue;
                g5 = v;
                ok = true;
            }
            internal(ok, "no spare bridge above");
            auto tc = two_green_pairs_fault22(n - 1, pj(ts.rt1), pj(ts.rt2),
                                              pj(wp.first), pj(wp.second), pj(st),
                                              pj(g5), me);
            Vertex ra = pt(g5), gb = sb;
            if (ra.color() != ts.rb.color()) std::swap(ra, gb);
            Path bot = up(B, neutral_path_two_faults(n - 1, pj(ts.rb), pj(g), pj(ra),
                                                     pj(gb), me));
            Path wres = up(T, covering_path(tc, pj(wp.first), pj(wp.second)));
            Path sres = weld(up(T, covering_path(tc, pj(st), pj(g5))),
                             orient(bot, pt(g5)));
            res1 = p1whole ? wres : sres;
            res2 = p1whole ? sres : wres;
        } else if (c1 + c2 == 2 && (c1 == 2 || c2 == 2)) {
            if (me) me->label = "b3";
            auto& tp = c1 == 2 ? prs[0] : prs[1];
            auto& bp = c1 == 2 ? prs[1] : prs[0];
            Vertex t1 = tp.first, t2 = tp.second;
            Vertex b1 = bp.first, b2 = bp.second;
            Path base = up(B, cycle_far_terminals(n - 1, pj(g), pj(ts.rb), pj(b1),
                                                  pj(b2), me));
            Path topres, botres;
            bool done = false;
            for (int o = 0; o < 2 && !done; ++o) {
                Path rot = rotate_cycle(o ? reverse(base) : base, b1);
                auto vs = path_vertices(rot);
                int len = rot.length();
                int i = find_vertex(rot, b2);
                Vertex pa = pt(vs[1]), pb = pt(vs[i - 1]), pc = pt(vs[i + 1]);
                auto free_of = [&](const Vertex& v) { return v != t1 && v != t2; };
                if (free_of(pa) && free_of(pb)) {
                    auto tc = two_green_pairs_fault22(n - 1, pj(ts.rt1), pj(ts.rt2),
                                                      pj(t1), pj(pa), pj(t2), pj(pb),
                                                      me);
                    Path mu = up(T, covering_path(tc, pj(t1), pj(pa)));
                    Path nu = up(T, covering_path(tc, pj(t2), pj(pb)));
                    topres = weld({mu, segment(rot, 1, i - 1), reverse(nu)});
                    botres = reverse(segment(rot, i, len));
                    done = true;
                } else if (free_of(pa) && free_of(pc)) {
                    auto tc = two_green_pairs_fault22(n - 1, pj(ts.rt1), pj(ts.rt2),
                                                      pj(t1), pj(t2), pj(pc), pj(pa),
                                                      me);
                    topres = up(T, covering_path(tc, pj(t1), pj(t2)));
                    Path nu = up(T, covering_path(tc, pj(pc), pj(pa)));
                    botres = weld({reverse(segment(rot, i + 1, len)), nu,
                                   segment(rot, 1, i)});
                    done = true;
                }
            }
            if (!done) {
                // both shadows hug one marked end; thread the top between them
                for (int bo = 0; bo < 2 && !done; ++bo)
                    for (int o = 0; o < 2 && !done; ++o)
                        for (int to = 0; to < 2 && !done; ++to) {
                            Vertex s = bo ? b2 : b1, t = bo ? b1 : b2;
                            Vertex ta = to ? t2 : t1, tb = to ? t1 : t2;
                            Path rot = rotate_cycle(o ? reverse(base) : base, s);
                            auto vs = path_vertices(rot);
                            int len = rot.length();
                            if (vs[1] != pt(ta)) continue;
                            int i = find_vertex(rot, t);
                            if (pt(vs[i - 1]) == ta || pt(vs[i - 1]) == tb) continue;
                            Path topp = up(T, charged_path_fault31(
                                                  n - 1, pj(ta), pj(ts.rt1),
                                                  pj(ts.rt2), pj(pt(vs[i - 1])),
                                                  pj(tb), me));
                            topres = weld({Path(ta, {}), segment(rot, 1, i - 1),
                                           orient(topp, pt(vs[i - 1]))});
                            botres = reverse(segment(rot, i, len));
                            done = true;
                        }
            }
            internal(done, "marked cycle leaves no entry");
            res1 = c1 == 2 ? topres : botres;
            res2 = c1 == 2 ? botres : topres;
        } else if (c1 == 1 && c2 == 1) {
            if (me) me->label = "b4";
            Path ares, cres;
            bool done = false;
            for (int role = 0; role < 2 && !done; ++role) {
                auto& ap = prs[role];          // pair leaving over a fresh letter
                auto& cp = prs[1 - role];      // pair anchoring the cycle
                Vertex a1 = split.side(ap.first) == T ? ap.first : ap.second;
                Vertex a2 = split.side(ap.first) == T ? ap.second : ap.first;
                Vertex cc1 = split.side(cp.first) == T ? cp.first : cp.second;
                Vertex cc2 = split.side(cp.first) == T ? cp.second : cp.first;
                for (Letter x = 1; x <= n && !done; ++x) {
                    if (x == split.axis) continue;
                    Vertex a2x = a2.flip(x);
                    if (a2x == ts.rb || pt(a2x) == a1 || pt(a2x) == cc1) continue;
                    Fault cf(n - 1, {pj(ts.rb), pj(g), pj(a2), pj(a2x)});
                    Path cyc = up(B, cycle_with_neutral_fault(n - 1, cf, me));
                    Path rot = rotate_cycle(cyc, cc2);
                    auto vs = path_vertices(rot);
                    int len = rot.length();
                    if (pt(vs[len - 1]) == a1) {
                        rot = rotate_cycle(reverse(cyc), cc2);
                        vs = path_vertices(rot);
                    }
                    Vertex e = pt(vs[len - 1]);
                    if (e == cc1) {
                        Path topp = up(T, charged_path_fault31(
                                              n - 1, pj(cc1), pj(ts.rt1), pj(ts.rt2),
                                              pj(a1), pj(pt(a2x)), me));
                        ares = weld({orient(topp, a1), Path(a2x, {}), Path(a2, {})});
                        cres = weld(prefix_to(rot, len - 1), Path(cc1, {}));
                    } else {
                        auto tc = two_green_pairs_fault22(n - 1, pj(ts.rt1),
                                                          pj(ts.rt2), pj(a1),
                                                          pj(pt(a2x)), pj(cc1), pj(e),
                                                          me);
                        ares = weld({up(T, covering_path(tc, pj(a1), pj(pt(a2x)))),
                                     Path(a2x, {}), Path(a2, {})});
                        cres = weld(up(T, covering_path(tc, pj(cc1), pj(e))),
                                    reverse(prefix_to(rot, len - 1)));
                    }
                    res1 = role == 0 ? ares : cres;
                    res2 = role == 0 ? cres : ares;
                    done = true;
                }
            }
            internal(done, "no fresh letter beside the split pairs");
        } else if (c1 + c2 == 1) {
            if (me) me->label = "b5";
            auto& sp = c1 == 1 ? prs[0] : prs[1];
            auto& bp = c1 == 1 ? prs[1] : prs[0];
            Vertex s1 = split.side(sp.first) == T ? sp.first : sp.second;
            Vertex s2 = split.side(sp.first) == T ? sp.second : sp.first;
            Path sres, bres;
            bool done = false;
            for (Letter x = 1; x <= n && !done; ++x) {
                if (x == split.axis) continue;
                Vertex s2x = s2.flip(x);
                if (s2x == ts.rb || pt(s2x) == s1) continue;
                Fault cf(n - 1, {pj(ts.rb), pj(g), pj(s2), pj(s2x)});
                Path cyc = up(B, cycle_with_neutral_fault(n - 1, cf, me));
                for (int bo = 0; bo < 2 && !done; ++bo)
                    for (int o = 0; o < 2 && !done; ++o) {
                        Vertex s = bo ? bp.second : bp.first;
                        Vertex t = bo ? bp.first : bp.second;
                        Path rot = rotate_cycle(o ? reverse(cyc) : cyc, s);
                        auto vs = path_vertices(rot);
                        int len = rot.length();
                        int i = find_vertex(rot, t);
                        if (i <= 2) continue;
                        if (vs[i - 1] == pt(s1)) continue;
                        if (vs[1] != pt(s1)) {
                            auto tc = two_green_pairs_fault22(
                                n - 1, pj(ts.rt1), pj(ts.rt2), pj(s1), pj(pt(vs[1])),
                                pj(pt(vs[i - 1])), pj(pt(s2x)), me);
                            sres = weld({up(T, covering_path(tc, pj(s1),
                                                             pj(pt(vs[1])))),
                                         segment(rot, 1, i - 1),
                                         orient(up(T, covering_path(tc,
                                                                    pj(pt(vs[i - 1])),
                                                                    pj(pt(s2x)))),
                                                pt(vs[i - 1])),
                                         Path(s2x, {}), Path(s2, {})});
                        } else {
                            Path topp = up(T, charged_path_fault31(
                                                  n - 1, pj(s1), pj(ts.rt1),
                                                  pj(ts.rt2), pj(pt(vs[i - 1])),
                                                  pj(pt(s2x)), me));
                            sres = weld({Path(s1, {}), segment(rot, 1, i - 1),
                                         orient(topp, pt(vs[i - 1])), Path(s2x, {}),
                                         Path(s2, {})});
                        }
                        bres = reverse(segment(rot, i, len));
                        done = true;
                    }
            }
            internal(done, "no arc admits the detour");
            res1 = c1 == 1 ? sres : bres;
            res2 = c1 == 1 ? bres : sres;
        } else {
            if (me) me->label = "b6";
            Path base = up(B, cycle_far_terminals(n - 1, pj(g), pj(ts.rb), pj(g1),
                                                  pj(g2), me));
            Path rot = rotate_cycle(base, g1);
            auto vs = path_vertices(rot);
            int len = rot.length();
            int i2 = find_vertex(rot, g2);
            int i3 = find_vertex(rot, g3);
            int i4 = find_vertex(rot, g4);
            if (i3 < i2 && i4 < i2) {
                rot = rotate_cycle(reverse(base), g1);
                vs = path_vertices(rot);
                i2 = find_vertex(rot, g2);
                i3 = find_vertex(rot, g3);
                i4 = find_vertex(rot, g4);
            }
            bool crossed = (i3 < i2) != (i4 < i2);
            if (!crossed) {
                int fi = std::min(i3, i4), se = std::max(i3, i4);
                auto tc = two_green_pairs_fault22(
                    n - 1, pj(ts.rt1), pj(ts.rt2), pj(pt(vs[1])), pj(pt(vs[se + 1])),
                    pj(pt(vs[i2 - 1])), pj(pt(vs[fi - 1])), me);
                Path mu = up(T, covering_path(tc, pj(pt(vs[1])), pj(pt(vs[se + 1]))));
                Path nu = up(T, covering_path(tc, pj(pt(vs[i2 - 1])),
                                              pj(pt(vs[fi - 1]))));
                res1 = weld({reverse(segment(rot, se + 1, len)),
                             reverse(orient(mu, pt(vs[1]))), segment(rot, 1, i2 - 1),
                             orient(nu, pt(vs[i2 - 1])),
                             reverse(segment(rot, i2, fi - 1))});
                res2 = segment(rot, fi, se);
            } else {
                int il = std::min(i3, i4), ir = std::max(i3, i4);
                auto tc = two_green_pairs_fault22(
                    n - 1, pj(ts.rt1), pj(ts.rt2), pj(pt(vs[il - 1])),
                    pj(pt(vs[ir - 1])), pj(pt(vs[i2 - 1])), pj(pt(vs[len - 1])), me);
                Path mu = up(T, covering_path(tc, pj(pt(vs[il - 1])),
                                              pj(pt(vs[ir - 1]))));
                Path nu = up(T, covering_path(tc, pj(pt(vs[i2 - 1])),
                                              pj(pt(vs[len - 1]))));
                res1 = weld({prefix_to(rot, il - 1), orient(mu, pt(vs[il - 1])),
                             reverse(segment(rot, i2, ir - 1))});
                res2 = weld({segment(rot, il, i2 - 1), orient(nu, pt(vs[i2 - 1])),
                             reverse(segment(rot, ir, len - 1))});
            }
        }
    }
    return {orient(res1, g1), orient(res2, g3)};
}

Path charged_path_fault51(int n, const Vertex& r1, const Vertex& r2, const Vertex& r3,
                          const Vertex& g1, const Vertex& g2, const Vertex& g3,
                          const Vertex& g4, TraceNode* tr) {
    floor_at(n, LemmaId::CHG51);
    dims(n, {r1, r2, r3, g1, g2, g3, g4});
    need(r1.color() == r2.color() && r2.color() == r3.color(),
         "three deletions share a parity");
    check_distinct({r1, r2, r3}, "deletions must be distinct");
    need(g1.color() == g2.color() && g1.color() != r1.color() && g1 != g2,
         "two distinct opposite-parity deletions");
    need(g3.color() == g1.color() && g4.color() == g1.color() && g3 != g4,
         "ends share the minority deleted parity");
    for (auto& e : {g3, g4}) need(e != g1 && e != g2, "ends must survive");
    TrioSplit ts = split_trio(n, r1, r2, r3);
    PlateSplit& split = ts.split;
    Plate T = ts.T, B = ts.B;
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    auto pt = [&](const Vertex& v) { return split.partner(v); };
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::CHG51), split.axis);
    int gup = int(split.side(g1) == T) + int(split.side(g2) == T);
    int tup = int(split.side(g3) == T) + int(split.side(g4) == T);
    Path res;
    if (gup == 2) {
        Fault cf(n - 1, {pj(ts.rt1), pj(ts.rt2), pj(g1), pj(g2)});
        if (tup == 2) {
            if (me) me->label = "a1";
            Path cyc = up(T, cycle_with_neutral_fault(n - 1, cf, me));
            Path rot = rotate_cycle(cyc, g3);
            auto vs = path_vertices(rot);
            int len = rot.length();
            int i = find_vertex(rot, g4);
            Path bot = up(B, laceable_path(n - 1, pj(ts.rb), pj(pt(vs[i - 1])),
                                           pj(pt(vs[len - 1])), me));
            res = weld({prefix_to(rot, i - 1), orient(bot, pt(vs[i - 1])),
                        reverse(segment(rot, i, len - 1))});
        } else if (tup == 1) {
            if (me) me->label = "a2";
            Vertex ta = split.side(g3) == T ? g3 : g4;
            Vertex bb = split.side(g3) == T ? g4 : g3;
            Path cyc = up(T, cycle_with_neutral_fault(n - 1, cf, me));
            Path rot = rotate_cycle(cyc, ta);
            auto vs = path_vertices(rot);
            int len = rot.length();
            if (pt(vs[len - 1]) == bb) {
                rot = rotate_cycle(reverse(cyc), ta);
                vs = path_vertices(rot);
            }
            Path bot = up(B, laceable_path(n - 1, pj(ts.rb), pj(pt(vs[len - 1])),
                                           pj(bb), me));
            res = weld(prefix_to(rot, len - 1), orient(bot, pt(vs[len - 1])));
        } else {
            if (me) me->label = "a3";
            Path cyc = up(T, cycle_with_neutral_fault(n - 1, cf, me));
            auto vs = path_vertices(cyc);
            bool done = false;
            for (int k = 0; k + 1 <= cyc.length() && !done; ++k) {
                Vertex a = vs[k + 1], b = vs[k];
                Vertex ea = pt(a), eb = pt(b);
                bool clash = false;
                for (auto& q : {ts.rb, g3, g4})
                    if (ea == q || eb == q) clash = true;
                if (clash) continue;
                Path rot = rotate_cycle(cyc, a);
                Path walk = prefix_to(rot, cyc.length() - 1); // a .. b
                Covering bc =
                    ea.color() == ts.rb.color()
                        ? mixed_pair(n - 1, pj(ts.rb), pj(ea), pj(g3), pj(eb), pj(g4),
                                     me)
                        : mixed_pair(n - 1, pj(ts.rb), pj(eb), pj(g4), pj(ea), pj(g3),
                                     me);
                Path la = up(B, covering_path(bc, pj(ea), pj(g3)));
                Path lb = up(B, covering_path(bc, pj(eb), pj(g4)));
                res = weld({reverse(la), walk, lb});
                done = true;
            }
            internal(done, "no free edge on the charged cycle");
        }
    } else if (gup == 1) {
        Vertex gt = split.side(g1) == T ? g1 : g2;
        Vertex gb = split.side(g1) == T ? g2 : g1;
        if (tup == 2) {
            if (me) me->label = "b1";
            Path top = up(T, charged_path_fault31(n - 1, pj(gt), pj(ts.rt1),
                                                  pj(ts.rt2), pj(g3), pj(g4), me));
            auto vs = path_vertices(top);
            bool done = false;
            for (int k = 0; k + 1 <= top.length() && !done; ++k) {
                Vertex u = pt(vs[k]), w = pt(vs[k + 1]);
                if (u == ts.rb || u == gb || w == ts.rb || w == gb) continue;
                Vertex ra = u, gg = w;
                if (ra.color() != ts.rb.color()) std::swap(ra, gg);
                Path bot = up(B, neutral_path_two_faults(n - 1, pj(ts.rb), pj(gb),
                                                         pj(ra), pj(gg), me));
                res = weld({prefix_to(top, k), orient(bot, u),
                            suffix_from(top, k + 1)});
                done = true;
            }
            internal(done, "no free edge above the fault shadows");
        } else if (tup == 1) {
            if (me) me->label = "b2";
            Vertex ta = split.side(g3) == T ? g3 : g4;
            Vertex bb = split.side(g3) == T ? g4 : g3;
            Vertex g5 = Vertex();
            bool ok = false;
            for (uint32_t bts = 0; bts < (1u << n) && !ok; ++bts) {
                Vertex v(n, bts);
                if (split.side(v) != T || v.color() != g1.color()) continue;
                if (v == gt || v == ta || pt(v) == ts.rb) continue;
                g5 = v;
                ok = true;
            }
            internal(ok, "no spare bridge above");
            Path top = up(T, charged_path_fault31(n - 1, pj(gt), pj(ts.rt1),
                                                  pj(ts.rt2), pj(ta), pj(g5), me));
            Vertex ra = pt(g5), gg = bb;
            if (ra.color() != ts.rb.color()) std::swap(ra, gg);
            Path bot = up(B, neutral_path_two_faults(n - 1, pj(ts.rb), pj(gb), pj(ra),
                                                     pj(gg), me));
            res = weld(top, orient(bot, pt(g5)));
        } else {
            if (me) me->label = "b3";
            Vertex g5 = Vertex(), g6 = Vertex();
            bool ok = false;
            for (uint32_t b1s = 0; b1s < (1u << n) && !ok; ++b1s) {
                Vertex v(n, b1s);
                if (split.side(v) != T || v.color() != g1.color()) continue;
                if (v == gt || pt(v) == ts.rb) continue;
                for (uint32_t b2s = b1s + 1; b2s < (1u << n) && !ok; ++b2s) {
                    Vertex w(n, b2s);
                    if (split.side(w) != T || w.color() != g1.color()) continue;
                    if (w == gt || pt(w) == ts.rb) continue;
                    g5 = v;
                    g6 = w;
                    ok = true;
                }
            }
            internal(ok, "no spare bridge pair above");
            Path top = up(T, charged_path_fault31(n - 1, pj(gt), pj(ts.rt1),
                                                  pj(ts.rt2), pj(g5), pj(g6), me));
            auto bc = cover_2020(n - 1, pj(ts.rb), pj(gb), pj(g3), pj(pt(g5)), pj(g4),
                                 pj(pt(g6)), me);
            Path l1 = up(B, covering_path(bc, pj(g3), pj(pt(g5))));
            Path l2 = up(B, covering_path(bc, pj(g4), pj(pt(g6))));
            res = weld({orient(l1, g3), top, reverse(orient(l2, g4))});
        }
    } else {
        if (tup == 2) {
            if (me) me->label = "c1";
            Vertex g5 = Vertex(), g6 = Vertex();
            bool ok = false;
            for (uint32_t b1s = 0; b1s < (1u << n) && !ok; ++b1s) {
                Vertex v(n, b1s);
                if (split.side(v) != T || v.color() != g1.color()) continue;
                if (v == g3 || v == g4 || pt(v) == ts.rb) continue;
                for (uint32_t b2s = b1s + 1; b2s < (1u << n) && !ok; ++b2s) {
                    Vertex w(n, b2s);
                    if (split.side(w) != T || w.color() != g1.color()) continue;
                    if (w == g3 || w == g4 || pt(w) == ts.rb) continue;
                    g5 = v;
                    g6 = w;
                    ok = true;
                }
            }
            internal(ok, "no spare bridge pair above");
            auto tc = two_green_pairs_fault22(n - 1, pj(ts.rt1), pj(ts.rt2), pj(g3),
                                              pj(g5), pj(g4), pj(g6), me);
            Path bot = up(B, charged_path_fault31(n - 1, pj(ts.rb), pj(g1), pj(g2),
                                                  pj(pt(g5)), pj(pt(g6)), me));
            res = weld({up(T, covering_path(tc, pj(g3), pj(g5))),
                        orient(bot, pt(g5)),
                        reverse(up(T, covering_path(tc, pj(g4), pj(g6))))});
        } else if (tup == 1) {
            if (me) me->label = "c2";
            Vertex ta = split.side(g3) == T ? g3 : g4;
            Vertex bb = split.side(g3) == T ? g4 : g3;
            Vertex r4 = Vertex();
            bool ok = false;
            for (uint32_t bts = 0; bts < (1u << n) && !ok; ++bts) {
                Vertex v(n, bts);
                if (split.side(v) != B || v.color() != ts.rb.color()) continue;
                if (v == ts.rb || pt(v) == ta) continue;
                r4 = v;
                ok = true;
            }
            internal(ok, "no spare deletion below");
            Fault cf(n - 1, {pj(ts.rb), pj(r4), pj(g1), pj(g2)});
            Path cyc = up(B, cycle_with_neutral_fault(n - 1, cf, me));
            Path rot = rotate_cycle(cyc, bb);
            auto vs = path_vertices(rot);
            int len = rot.length();
            if (pt(vs[len - 1]) == ta) {
                rot = rotate_cycle(reverse(cyc), bb);
                vs = path_vertices(rot);
            }
            Vertex pw = pt(vs[len - 1]);
            bool done = false;
            for (Letter y = 1; y <= n && !done; ++y) {
                if (y == split.axis) continue;
                Vertex g5 = r4.flip(y);
                if (g5 == g1 || g5 == g2 || g5 == bb) continue;
                int i = find_vertex(rot, g5);
                internal(i > 0 && i < len, "ladder foot must be interior");
                for (int side = 0; side < 2 && !done; ++side) {
                    int cand = side == 0 ? i - 1 : i + 1;
                    if (cand < 1 || cand > len - 1) continue;
                    Vertex g6 = pt(vs[cand]);
                    if (g6 == ta || g6 == pw) continue;
                    auto tc = two_green_pairs_fault22(n - 1, pj(ts.rt1), pj(ts.rt2),
                                                      pj(ta), pj(pw), pj(g6),
                                                      pj(pt(r4)), me);
                    Path mu = up(T, covering_path(tc, pj(ta), pj(pw)));
                    Path nu = up(T, covering_path(tc, pj(g6), pj(pt(r4))));
                    if (side == 0) {
                        res = weld({prefix_to(rot, i - 1), orient(nu, g6),
                                    Path(r4, {}), segment(rot, i, len - 1),
                                    reverse(orient(mu, ta))});
                    } else {
                        res = weld({prefix_to(rot, i), Path(r4, {}),
                                    reverse(orient(nu, g6)),
                                    segment(rot, i + 1, len - 1),
                                    reverse(orient(mu, ta))});
                    }
                    done = true;
                }
            }
            internal(done, "no ladder beside the spare deletion");
        } else {
            if (me) me->label = "c3";
            Vertex r4 = Vertex(), r5 = Vertex();
            bool ok = false;
            for (uint32_t b1s = 0; b1s < (1u << n) && !ok; ++b1s) {
                Vertex v(n, b1s);
                if (split.side(v) != B || v.color() != ts.rb.color() || v == ts.rb)
                    continue;
                for (uint32_t b2s = b1s + 1; b2s < (1u << n) && !ok; ++b2s) {
                    Vertex w(n, b2s);
                    if (split.side(w) != B || w.color() != ts.rb.color() ||
                        w == ts.rb)
                        continue;
                    r4 = v;
                    r5 = w;
                    ok = true;
                }
            }
            internal(ok, "no spare end pair below");
            Path bot = up(B, charged_path_fault31(n - 1, pj(ts.rb), pj(g1), pj(g2),
                                                  pj(r4), pj(r5), me));
            auto place = [&](const Path& p) {
                int a = find_vertex(p, g3), b = find_vertex(p, g4);
                return std::pair<int, int>{std::min(a, b), std::max(a, b)};
            };
            auto [i, j] = place(bot);
            int len = bot.length();
            if (i < 3 && len - j < 3) {
                internal(i == 1 && len - j == 1, "ends alternate along the path");
            } else if (i < 3) {
                bot = reverse(bot);
                std::swap(r4, r5);
                std::tie(i, j) = place(bot);
            }
            auto vs = path_vertices(bot);
            if (i >= 3) {
                auto tc = two_green_pairs_fault22(
                    n - 1, pj(ts.rt1), pj(ts.rt2), pj(pt(vs[i - 1])), pj(pt(r5)),
                    pj(pt(vs[j - 1])), pj(pt(r4)), me);
                Path nu = up(T, covering_path(tc, pj(pt(vs[i - 1])), pj(pt(r5))));
                Path ze = up(T, covering_path(tc, pj(pt(vs[j - 1])), pj(pt(r4))));
                res = weld({segment(bot, i, j - 1), orient(ze, pt(vs[j - 1])),
                            prefix_to(bot, i - 1), orient(nu, pt(vs[i - 1])),
                            reverse(segment(bot, j, len))});
            } else {
                auto tc = two_green_pairs_fault22(
                    n - 1, pj(ts.rt1), pj(ts.rt2), pj(pt(r4)), pj(pt(vs[j - 1])),
                    pj(pt(vs[i + 1])), pj(pt(r5)), me);
                Path nu = up(T, covering_path(tc, pj(pt(r4)), pj(pt(vs[j - 1]))));
                Path ze = up(T, covering_path(tc, pj(pt(vs[i + 1])), pj(pt(r5))));
                res = weld({reverse(prefix_to(bot, 1)), orient(nu, pt(r4)),
                            reverse(segment(bot, i + 1, j - 1)),
                            orient(ze, pt(vs[i + 1])), reverse(segment(bot, j, len))});
            }
        }
    }
    return orient(res, g3);
}

Covering three_green_pairs_fault33(int n, const Vertex& r1, const Vertex& r2,
                                   const Vertex& r3, const Vertex& g1, const Vertex& g2,
                                   const Vertex& g3, const Vertex& g4, const Vertex& g5,
                                   const Vertex& g6, TraceNode* tr) {
    floor_at(n, LemmaId::GGG33);
    dims(n, {r1, r2, r3, g1, g2, g3, g4, g5, g6});
    need(r1.color() == r2.color() && r2.color() == r3.color(),
         "three deletions share a parity");
    check_distinct({r1, r2, r3}, "deletions must be distinct");
    for (auto& e : {g1, g2, g3, g4, g5, g6})
        need(e.color() != r1.color(), "ends oppose the deleted parity");
    check_distinct({g1, g2, g3, g4, g5, g6}, "ends must be distinct");
    TrioSplit ts = split_trio(n, r1, r2, r3);
    PlateSplit& split = ts.split;
    Plate T = ts.T, B = ts.B;
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    auto pt = [&](const Vertex& v) { return split.partner(v); };
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::GGG33), split.axis);
    std::array<std::pair<Vertex, Vertex>, 3> prs{{{g1, g2}, {g3, g4}, {g5, g6}}};
    std::vector<int> tt, tb, bb;
    for (int i = 0; i < 3; ++i) {
        int c = int(split.side(prs[i].first) == T) + int(split.side(prs[i].second) == T);
        (c == 2 ? tt : c == 1 ? tb : bb).push_back(i);
    }
    // top member first within split pairs
    for (int i : tb)
        if (split.side(prs[i].first) != T) std::swap(prs[i].first, prs[i].second);
    Color gcol = g1.color();
    auto smallest_top_green = [&](const std::vector<Vertex>& avoid) {
        for (uint32_t bts = 0; bts < (1u << n); ++bts) {
            Vertex v(n, bts);
            if (split.side(v) != T || v.color() != gcol) continue;
            if (pt(v) == ts.rb) continue;
            bool bad = false;
            for (auto& w : avoid)
                if (v == w || pt(v) == w) bad = true;
            if (!bad) return v;
        }
        throw InternalCaseError("no spare bridge above");
    };
    std::array<Path, 3> out;
    if (tt.size() == 3) {
        if (me) me->label = "1";
        bool done = false;
        for (int pi = 0; pi < 3 && !done; ++pi)
            for (int po = 0; po < 2 && !done; ++po) {
                Vertex p5 = po ? prs[pi].second : prs[pi].first;
                Vertex p6 = po ? prs[pi].first : prs[pi].second;
                if (pt(p6) == ts.rb) continue;
                int ai = (pi + 1) % 3, bi = (pi + 2) % 3;
                if (ai > bi) std::swap(ai, bi);
                for (Letter x = 1; x <= n && !done; ++x) {
                    if (x == split.axis) continue;
                    Vertex p5x = p5.flip(x);
                    if (p5x == ts.rt1 || p5x == ts.rt2) continue;
                    auto tc = two_green_pairs_fault42(
                        n - 1, pj(ts.rt1), pj(ts.rt2), pj(p5x), pj(p5),
                        pj(prs[ai].first), pj(prs[ai].second), pj(prs[bi].first),
                        pj(prs[bi].second), me);
                    Path pa = up(T, covering_path(tc, pj(prs[ai].first),
                                                  pj(prs[ai].second)));
                    Path pb = up(T, covering_path(tc, pj(prs[bi].first),
                                                  pj(prs[bi].second)));
                    bool in_a = find_vertex(pa, p6) >= 0;
                    Path& host = in_a ? pa : pb;
                    int i = find_vertex(host, p6);
                    internal(i > 0 && i < host.length(),
                             "excised end must be interior");
                    auto vsh = path_vertices(host);
                    Covering bc = mixed_pair(n - 1, pj(ts.rb), pj(pt(p6)), pj(pt(p5x)),
                                             pj(pt(vsh[i - 1])), pj(pt(vsh[i + 1])),
                                             me);
                    Path legn = up(B, covering_path(bc, pj(pt(p6)), pj(pt(p5x))));
                    Path legc = up(B, covering_path(bc, pj(pt(vsh[i - 1])),
                                                    pj(pt(vsh[i + 1]))));
                    Path patched = weld({prefix_to(host, i - 1),
                                         orient(legc, pt(vsh[i - 1])),
                                         suffix_from(host, i + 1)});
                    out[pi] = weld({Path(p5, {}), Path(p5x, {}),
                                    orient(legn, pt(p5x)), Path(p6, {})});
                    out[ai] = in_a ? patched : pa;
                    out[bi] = in_a ? pb : patched;
                    done = true;
                }
            }
        internal(done, "no excisable pair above");
    } else if (tt.size() == 2 && tb.size() == 1) {
        if (me) me->label = "2";
        int si = tb[0];
        Vertex p5 = prs[si].first, p6 = prs[si].second;
        bool done = false;
        for (Letter x = 1; x <= n && !done; ++x) {
            if (x == split.axis) continue;
            Vertex p5x = p5.flip(x);
            if (p5x == ts.rt1 || p5x == ts.rt2 || pt(p5x) == p6) continue;
            auto tc = two_green_pairs_fault42(
                n - 1, pj(ts.rt1), pj(ts.rt2), pj(p5x), pj(p5), pj(prs[tt[0]].first),
                pj(prs[tt[0]].second), pj(prs[tt[1]].first), pj(prs[tt[1]].second),
                me);
            Path bot = up(B, laceable_path(n - 1, pj(ts.rb), pj(pt(p5x)), pj(p6), me));
            out[tt[0]] = up(T, covering_path(tc, pj(prs[tt[0]].first),
                                             pj(prs[tt[0]].second)));
            out[tt[1]] = up(T, covering_path(tc, pj(prs[tt[1]].first),
                                             pj(prs[tt[1]].second)));
            out[si] = weld({Path(p5, {}), Path(p5x, {}), orient(bot, pt(p5x))});
            done = true;
        }
        internal(done, "no fresh letter beside the split pair");
    } else if (tt.size() == 2) {
        if (me) me->label = "3";
        auto tc = two_green_pairs_fault22(
            n - 1, pj(ts.rt1), pj(ts.rt2), pj(prs[tt[0]].first), pj(prs[tt[0]].second),
            pj(prs[tt[1]].first), pj(prs[tt[1]].second), me);
        out[tt[0]] = up(T, covering_path(tc, pj(prs[tt[0]].first),
                                         pj(prs[tt[0]].second)));
        out[tt[1]] = up(T, covering_path(tc, pj(prs[tt[1]].first),
                                         pj(prs[tt[1]].second)));
        out[bb[0]] = up(B, laceable_path(n - 1, pj(ts.rb), pj(prs[bb[0]].first),
                                         pj(prs[bb[0]].second), me));
    } else if (tt.size() == 1 && tb.size() == 2) {
        if (me) me->label = "4";
        auto& wp = prs[tt[0]];
        bool done = false;
        for (int role = 0; role < 2 && !done; ++role) {
            int si = tb[role], oi = tb[1 - role];
            Vertex p3 = prs[si].first, p4 = prs[si].second;   // bridged pair
            Vertex q3 = prs[oi].first, q4 = prs[oi].second;   // bridged via a spare
            for (Letter x = 1; x <= n && !done; ++x) {
                if (x == split.axis) continue;
                Vertex p3x = p3.flip(x);
                if (p3x == ts.rt1 || p3x == ts.rt2) continue;
                if (pt(p3x) == p4 || pt(p3x) == q4) continue;
                Vertex gf = smallest_top_green({wp.first, wp.second, p3, q3, p3x});
                auto tc = two_green_pairs_fault42(
                    n - 1, pj(ts.rt1), pj(ts.rt2), pj(p3x), pj(p3), pj(wp.first),
                    pj(wp.second), pj(q3), pj(gf), me);
                Covering bc = mixed_pair(n - 1, pj(ts.rb), pj(pt(gf)), pj(q4),
                                         pj(pt(p3x)), pj(p4), me);
                out[tt[0]] = up(T, covering_path(tc, pj(wp.first), pj(wp.second)));
                out[si] = weld({Path(p3, {}), Path(p3x, {}),
                                orient(up(B, covering_path(bc, pj(pt(p3x)), pj(p4))),
                                       pt(p3x))});
                out[oi] = weld({orient(up(T, covering_path(tc, pj(q3), pj(gf))), q3),
                                orient(up(B, covering_path(bc, pj(pt(gf)), pj(q4))),
                                       pt(gf))});
                done = true;
            }
        }
        internal(done, "no fresh letter beside the split pairs");
    } else if (tt.size() == 1 && tb.size() == 1) {
        if (me) me->label = "5";
        auto& wp = prs[tt[0]];
        Vertex p3 = prs[tb[0]].first, p4 = prs[tb[0]].second;
        Vertex gf = smallest_top_green({wp.first, wp.second, p3});
        auto tc = two_green_pairs_fault22(n - 1, pj(ts.rt1), pj(ts.rt2), pj(wp.first),
                                          pj(wp.second), pj(p3), pj(gf), me);
        Covering bc = mixed_pair(n - 1, pj(ts.rb), pj(pt(gf)), pj(p4),
                                 pj(prs[bb[0]].first), pj(prs[bb[0]].second), me);
        out[tt[0]] = up(T, covering_path(tc, pj(wp.first), pj(wp.second)));
        out[tb[0]] = weld({orient(up(T, covering_path(tc, pj(p3), pj(gf))), p3),
                           orient(up(B, covering_path(bc, pj(pt(gf)), pj(p4))),
                                  pt(gf))});
        out[bb[0]] = up(B, covering_path(bc, pj(prs[bb[0]].first),
                                         pj(prs[bb[0]].second)));
    } else if (tb.size() == 3) {
        if (me) me->label = "6";
        bool done = false;
        for (int p5i = 0; p5i < 3 && !done; ++p5i) {
            Vertex p5 = prs[p5i].first, p6 = prs[p5i].second;
            if (pt(p5) == ts.rb) continue;
            int ra = (p5i + 1) % 3, rb2 = (p5i + 2) % 3;
            for (int sw = 0; sw < 2 && !done; ++sw) {
                int i1 = sw ? rb2 : ra, i3 = sw ? ra : rb2;
                Vertex q1 = prs[i1].first, q2 = prs[i1].second;
                Vertex q3 = prs[i3].first, q4 = prs[i3].second;
                for (Letter x = 1; x <= n && !done; ++x) {
                    if (x == split.axis) continue;
                    Vertex q3x = q3.flip(x);
                    if (q3x == ts.rt1 || q3x == ts.rt2) continue;
                    if (pt(q3x) == q2 || pt(q3x) == q4 || pt(q3x) == p6) continue;
                    for (Letter y = 1; y <= n && !done; ++y) {
                        if (y == split.axis) continue;
                        Vertex q2y = q2.flip(y);
                        if (q2y == ts.rb || q2y == pt(p5)) continue;
                        if (pt(q2y) == q1 || pt(q2y) == q3 || pt(q2y) == p5) continue;
                        Path top = up(T, charged_path_fault51(
                                             n - 1, pj(ts.rt1), pj(ts.rt2), pj(q3x),
                                             pj(q3), pj(p5), pj(q1), pj(pt(q2y)), me));
                        Covering bc = cover_3111(n - 1, pj(ts.rb), pj(q2), pj(q2y),
                                                 pj(pt(p5)), pj(p6), pj(pt(q3x)),
                                                 pj(q4), me);
                        Path legn = up(B, covering_path(bc, pj(pt(p5)), pj(p6)));
                        Path legc = up(B, covering_path(bc, pj(pt(q3x)), pj(q4)));
                        out[i1] = weld({orient(top, q1), Path(q2y, {}), Path(q2, {})});
                        out[i3] = weld({Path(q3, {}), Path(q3x, {}),
                                        orient(legc, pt(q3x))});
                        out[p5i] = weld({Path(p5, {}), orient(legn, pt(p5))});
                        done = true;
                    }
                }
            }
        }
        internal(done, "no fresh letters beside the split pairs");
    } else if (tt.size() == 1 && bb.size() == 2) {
        if (me) me->label = "7";
        auto& wp = prs[tt[0]];
        bool done = false;
        for (int role = 0; role < 2 && !done; ++role) {
            int bi = bb[role], oi = bb[1 - role];
            Vertex p5 = prs[bi].first, p6 = prs[bi].second;
            for (Letter x = 1; x <= n && !done; ++x) {
                if (x == split.axis) continue;
                Vertex p5x = p5.flip(x);
                if (p5x == ts.rb || pt(p5x) == wp.first || pt(p5x) == wp.second)
                    continue;
                for (Letter y = 1; y <= n && !done; ++y) {
                    if (y == split.axis) continue;
                    Vertex p6y = p6.flip(y);
                    if (p6y == ts.rb || p6y == p5x) continue;
                    if (pt(p6y) == wp.first || pt(p6y) == wp.second) continue;
                    auto tc = two_green_pairs_fault22(
                        n - 1, pj(ts.rt1), pj(ts.rt2), pj(wp.first), pj(wp.second),
                        pj(pt(p5x)), pj(pt(p6y)), me);
                    Path bot = up(B, charged_path_fault51(
                                         n - 1, pj(ts.rb), pj(p5x), pj(p6y), pj(p5),
                                         pj(p6), pj(prs[oi].first), pj(prs[oi].second),
                                         me));
                    out[tt[0]] = up(T, covering_path(tc, pj(wp.first),
                                                     pj(wp.second)));
                    out[oi] = bot;
                    out[bi] = weld({Path(p5, {}), Path(p5x, {}),
                                    orient(up(T, covering_path(tc, pj(pt(p5x)),
                                                               pj(pt(p6y)))),
                                           pt(p5x)),
                                    Path(p6y, {}), Path(p6, {})});
                    done = true;
                }
            }
        }
        internal(done, "no fresh letters below");
    } else if (tb.size() == 2 && bb.size() == 1) {
        if (me) me->label = "8";
        bool done = false;
        for (int role = 0; role < 2 && !done; ++role) {
            int i1 = tb[role], i3 = tb[1 - role];
            Vertex q1 = prs[i1].first, q2 = prs[i1].second;
            Vertex q3 = prs[i3].first, q4 = prs[i3].second;
            for (Letter x = 1; x <= n && !done; ++x) {
                if (x == split.axis) continue;
                Vertex q4x = q4.flip(x);
                if (q4x == ts.rb) continue;
                if (pt(q4x) == q1 || pt(q4x) == q3) continue;
                Vertex gf = smallest_top_green({q1, q3, q4x, pt(q4x)});
                if (pt(gf) == q4x) continue;
                auto tc = two_green_pairs_fault22(n - 1, pj(ts.rt1), pj(ts.rt2),
                                                  pj(q1), pj(gf), pj(q3), pj(pt(q4x)),
                                                  me);
                Covering bc = cover_3111(n - 1, pj(ts.rb), pj(q4), pj(q4x), pj(pt(gf)),
                                         pj(q2), pj(prs[bb[0]].first),
                                         pj(prs[bb[0]].second), me);
                out[i1] = weld({orient(up(T, covering_path(tc, pj(q1), pj(gf))), q1),
                                orient(up(B, covering_path(bc, pj(pt(gf)), pj(q2))),
                                       pt(gf))});
                out[i3] = weld({orient(up(T, covering_path(tc, pj(q3), pj(pt(q4x)))),
                                       q3),
                                Path(q4x, {}), Path(q4, {})});
                out[bb[0]] = up(B, covering_path(bc, pj(prs[bb[0]].first),
                                                 pj(prs[bb[0]].second)));
                done = true;
            }
        }
        internal(done, "no fresh letter beside the split pairs");
    } else if (tb.size() == 1 && bb.size() == 2) {
        if (me) me->label = "9";
        Vertex p1 = prs[tb[0]].first, p2 = prs[tb[0]].second;
        int bi0 = bb[0], bi1 = bb[1];
        if (adjacent(p2, pt(p1)) && pt(p1) != ts.rb) {
            auto bc = two_green_pairs_fault22(
                n - 1, pj(ts.rb), pj(pt(p1)), pj(prs[bi0].first), pj(prs[bi0].second),
                pj(prs[bi1].first), pj(prs[bi1].second), me);
            Path pa = up(B, covering_path(bc, pj(prs[bi0].first),
                                          pj(prs[bi0].second)));
            Path pb = up(B, covering_path(bc, pj(prs[bi1].first),
                                          pj(prs[bi1].second)));
            bool in_a = find_vertex(pa, p2) >= 0;
            Path& host = in_a ? pa : pb;
            int i = find_vertex(host, p2);
            internal(i > 0 && i < host.length(), "split end must be interior");
            auto vsh = path_vertices(host);
            Path top = up(T, charged_path_fault31(n - 1, pj(p1), pj(ts.rt1),
                                                  pj(ts.rt2), pj(pt(vsh[i - 1])),
                                                  pj(pt(vsh[i + 1])), me));
            host = weld({prefix_to(host, i - 1), orient(top, pt(vsh[i - 1])),
                         suffix_from(host, i + 1)});
            out[tb[0]] = weld({Path(p1, {}), Path(pt(p1), {}), Path(p2, {})});
            out[bi0] = pa;
            out[bi1] = pb;
        } else {
            bool done = false;
            for (Letter x = 1; x <= n && !done; ++x) {
                if (x == split.axis) continue;
                Vertex p2x = p2.flip(x);
                if (p2x == ts.rb || p2x == pt(p1)) continue;
                auto bc = two_green_pairs_fault22(
                    n - 1, pj(ts.rb), pj(p2x), pj(prs[bi0].first),
                    pj(prs[bi0].second), pj(prs[bi1].first), pj(prs[bi1].second), me);
                Path pa = up(B, covering_path(bc, pj(prs[bi0].first),
                                              pj(prs[bi0].second)));
                Path pb = up(B, covering_path(bc, pj(prs[bi1].first),
                                              pj(prs[bi1].second)));
                bool in_a = find_vertex(pa, p2) >= 0;
                Path& host = in_a ? pa : pb;
                int i = find_vertex(host, p2);
                internal(i > 0 && i < host.length(), "split end must be interior");
                auto vsh = path_vertices(host);
                if (pt(vsh[i - 1]) == p1 || pt(vsh[i + 1]) == p1) continue;
                auto tc = two_green_pairs_fault22(
                    n - 1, pj(ts.rt1), pj(ts.rt2), pj(p1), pj(pt(p2x)),
                    pj(pt(vsh[i - 1])), pj(pt(vsh[i + 1])), me);
                host = weld({prefix_to(host, i - 1),
                             orient(up(T, covering_path(tc, pj(pt(vsh[i - 1])),
                                                        pj(pt(vsh[i + 1])))),
                                    pt(vsh[i - 1])),
                             suffix_from(host, i + 1)});
                out[tb[0]] = weld({orient(up(T, covering_path(tc, pj(p1), pj(pt(p2x)))),
                                          p1),
                                   Path(p2x, {}), Path(p2, {})});
                out[bi0] = pa;
                out[bi1] = pb;
                done = true;
            }
            internal(done, "no fresh letter beside the split pair");
        }
    } else {
        if (me) me->label = "10";
        Vertex p1 = prs[0].first, p2 = prs[0].second;
        Vertex p5 = prs[2].first, p6 = prs[2].second;
        bool done = false;
        for (Letter x = 1; x <= n && !done; ++x) {
            if (x == split.axis) continue;
            Vertex p5x = p5.flip(x);
            if (p5x == ts.rb) continue;
            for (Letter y = 1; y <= n && !done; ++y) {
                if (y == split.axis) continue;
                Vertex p6y = p6.flip(y);
                if (p6y == ts.rb || p6y == p5x) continue;
                Path bot = up(B, charged_path_fault51(n - 1, pj(ts.rb), pj(p5x),
                                                      pj(p6y), pj(p5), pj(p6), pj(p1),
                                                      pj(p2), me));
                int i = find_vertex(bot, prs[1].first);
                int j = find_vertex(bot, prs[1].second);
                if (i > j) std::swap(i, j);
                internal(i > 0 && j < bot.length(), "middle pair must be interior");
                auto vs = path_vertices(bot);
                auto tc = two_green_pairs_fault22(
                    n - 1, pj(ts.rt1), pj(ts.rt2), pj(pt(p5x)), pj(pt(p6y)),
                    pj(pt(vs[i - 1])), pj(pt(vs[j + 1])), me);
                out[0] = weld({prefix_to(bot, i - 1),
                               orient(up(T, covering_path(tc, pj(pt(vs[i - 1])),
                                                          pj(pt(vs[j + 1])))),
                                      pt(vs[i - 1])),
                               suffix_from(bot, j + 1)});
                out[1] = segment(bot, i, j);
                out[2] = weld({Path(p5, {}), Path(p5x, {}),
                               orient(up(T, covering_path(tc, pj(pt(p5x)),
                                                          pj(pt(p6y)))),
                                      pt(p5x)),
                               Path(p6y, {}), Path(p6, {})});
                done = true;
            }
        }
        internal(done, "no fresh letters below");
    }
    return {orient(out[0], g1), orient(out[1], g3), orient(out[2], g5)};
}

namespace detail {

Path cycle_fault8(int n, const Fault& f, TraceNode* tr) {
    // dispatcher already validated mass/charge/threshold
    Color c0 = f.vertices[0].color();
    std::vector<Vertex> xs, ys;
    for (auto& v : f.vertices) (v.color() == c0 ? xs : ys).push_back(v);
    internal(xs.size() == 4 && ys.size() == 4, "neutral mass-8 fault splits four-four");
    // prefer an axis splitting one parity class two against two; otherwise
    // three against one with the lone member not holding all four others
    Letter ax = 0;
    bool caseA = false, swapped = false;
    auto tops = [&](const std::vector<Vertex>& vs, Letter l) {
        int c = 0;
        for (auto& v : vs) c += v.coord(l) == 0;
        return c;
    };
    for (Letter l = 1; l <= n && !ax; ++l) {
        if (tops(xs, l) == 2) {
            ax = l;
            caseA = true;
        } else if (tops(ys, l) == 2) {
            ax = l;
            caseA = true;
            swapped = true;
        }
    }
    for (Letter l = 1; l <= n && !ax; ++l)
        for (int s = 0; s < 2 && !ax; ++s) {
            const auto& rs = s ? ys : xs;
            const auto& gs = s ? xs : ys;
            int rt = tops(rs, l);
            if (rt != 1 && rt != 3) continue;
            int lone_top = rt == 1; // plate index of the lone member
            int g_on_lone = lone_top ? tops(gs, l) : 4 - tops(gs, l);
            if (g_on_lone != 4) {
                ax = l;
                swapped = s;
            }
        }
    if (!ax && n >= 7)
        for (Letter l = 1; l <= n && !ax; ++l)
            for (int s = 0; s < 2 && !ax; ++s) {
                int rt = tops(s ? ys : xs, l);
                if (rt == 1 || rt == 3) {
                    ax = l;
                    swapped = s;
                }
            }
    internal(ax != 0, "mass-8 fault admits no usable split");
    std::vector<Vertex> rs = swapped ? ys : xs, gs = swapped ? xs : ys;
    PlateSplit split(n, ax);
    auto pj = [&](const Vertex& v) { return split.project_vertex(v); };
    auto up = [&](Plate p, const Path& q) { return split.lift_path(p, q); };
    auto pt = [&](const Vertex& v) { return split.partner(v); };
    TraceNode* me = trace_child(tr, lemma_name(LemmaId::CYC8), ax);
    Color rcol = rs[0].color(), gcol = gs[0].color();
    if (caseA) {
        Plate T = Plate::Top;
        {
            int gt = 0;
            for (auto& g : gs) gt += split.side(g) == Plate::Top;
            if (gt < 2) T = Plate::Bottom;
        }
        Plate B = other(T);
        std::vector<Vertex> rt, rbv, gt, gb;
        for (auto& r : rs) (split.side(r) == T ? rt : rbv).push_back(r);
        for (auto& g : gs) (split.side(g) == T ? gt : gb).push_back(g);
        if (gt.size() == 4) {
            if (me) me->label = "a1";
            std::array<std::array<int, 4>, 3> pairings{
                {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
            for (int pass = 0; pass < 2; ++pass)
                for (auto& pr : pairings) {
                    auto tc = two_green_pairs_fault22(
                        n - 1, pj(rt[0]), pj(rt[1]), pj(gt[pr[0]]), pj(gt[pr[1]]),
                        pj(gt[pr[2]]), pj(gt[pr[3]]), me);
                    Path p1 = up(T, covering_path(tc, pj(gt[pr[0]]), pj(gt[pr[1]])));
                    Path p2 = up(T, covering_path(tc, pj(gt[pr[2]]), pj(gt[pr[3]])));
                    int l1 = p1.length(), l2 = p2.length();
                    if (pass == 0) {
                        if (l1 < 4 || l2 < 4) continue;
                        auto v1 = path_vertices(p1), v2 = path_vertices(p2);
                        Vertex s1 = v1[1], e1 = v1[l1 - 1], s2 = v2[1],
                               e2 = v2[l2 - 1];
                        auto bc = two_green_pairs_fault22(
                            n - 1, pj(rbv[0]), pj(rbv[1]), pj(pt(e1)), pj(pt(e2)),
                            pj(pt(s1)), pj(pt(s2)), me);
                        Path mu = up(B, covering_path(bc, pj(pt(e1)), pj(pt(e2))));
                        Path nu = up(B, covering_path(bc, pj(pt(s1)), pj(pt(s2))));
                        Path walk = weld({segment(p1, 1, l1 - 1), orient(mu, pt(e1)),
                                          reverse(segment(p2, 1, l2 - 1)),
                                          reverse(orient(nu, pt(s1)))});
                        return close_cycle(walk);
                    }
                    // a covering path may collapse to a single interior vertex;
                    // hang it off the long path and dip to the bottom around it
                    if (l1 != 2 && l2 != 2) continue;
                    if (l2 == 2) std::swap(p1, p2);
                    if (p2.length() < 4) continue;
                    Vertex m = path_vertices(p1)[1];
                    Path mid = segment(p2, 1, p2.length() - 1);
                    auto iv = path_vertices(mid);
                    int il = mid.length();
                    for (int ky = 1; ky < il; ++ky) {
                        if (!adjacent(iv[ky], m)) continue;
                        if (ky + 1 <= il - 1) {
                            auto bc = two_green_pairs_fault22(
                                n - 1, pj(rbv[0]), pj(rbv[1]), pj(pt(m)),
                                pj(pt(iv[ky + 1])), pj(pt(iv[il])), pj(pt(iv[0])),
                                me);
                            Path nu = up(B, covering_path(bc, pj(pt(m)),
                                                          pj(pt(iv[ky + 1]))));
                            Path mu = up(B, covering_path(bc, pj(pt(iv[il])),
                                                          pj(pt(iv[0]))));
                            Path walk =
                                weld({prefix_to(mid, ky), Path(m, {}),
                                      orient(nu, pt(m)), suffix_from(mid, ky + 1),
                                      orient(mu, pt(iv[il]))});
                            return close_cycle(walk);
                        }
                        auto bc = two_green_pairs_fault22(
                            n - 1, pj(rbv[0]), pj(rbv[1]), pj(pt(iv[ky - 1])),
                            pj(pt(m)), pj(pt(iv[il])), pj(pt(iv[0])), me);
                        Path nu = up(B, covering_path(bc, pj(pt(iv[ky - 1])),
                                                      pj(pt(m))));
                        Path mu = up(B, covering_path(bc, pj(pt(iv[il])),
                                                      pj(pt(iv[0]))));
                        Path walk =
                            weld({prefix_to(mid, ky - 1),
                                  orient(nu, pt(iv[ky - 1])), Path(m, {}),
                                  suffix_from(mid, ky), orient(mu, pt(iv[il]))});
                        return close_cycle(walk);
                    }
                }
            throw InternalCaseError("all pairings collapse to short paths");
        }
        if (gt.size() == 3) {
            if (me) me->label = "a2";
            Vertex r5 = Vertex(), r6 = Vertex();
            bool ok = false;
            for (uint32_t b1s = 0; b1s < (1u << n) && !ok; ++b1s) {
                Vertex v(n, b1s);
                if (split.side(v) != T || v.color() != rcol) continue;
                if (v == rt[0] || v == rt[1] || pt(v) == gb[0]) continue;
                for (uint32_t b2s = b1s + 1; b2s < (1u << n) && !ok; ++b2s) {
                    Vertex w(n, b2s);
                    if (split.side(w) != T || w.color() != rcol) continue;
                    if (w == rt[0] || w == rt[1] || pt(w) == gb[0]) continue;
                    r5 = v;
                    r6 = w;
                    ok = true;
                }
            }
            internal(ok, "no spare end pair above");
            Path top = up(T, charged_path_fault51(n - 1, pj(gt[0]), pj(gt[1]),
                                                  pj(gt[2]), pj(rt[0]), pj(rt[1]),
                                                  pj(r5), pj(r6), me));
            Path bot = up(B, charged_path_fault31(n - 1, pj(gb[0]), pj(rbv[0]),
                                                  pj(rbv[1]), pj(pt(r6)), pj(pt(r5)),
                                                  me));
            return close_cycle(weld(orient(top, r5), orient(bot, pt(r6))));
        }
        if (me) me->label = "a3";
        Vertex r = Vertex(), gx = Vertex();
        bool ok = false;
        for (uint32_t bts = 0; bts < (1u << n) && !ok; ++bts) {
            Vertex v(n, bts);
            if (split.side(v) != T || v.color() != rcol) continue;
            if (v == rt[0] || v == rt[1]) continue;
            if (pt(v) == gb[0] || pt(v) == gb[1]) continue;
            r = v;
            ok = true;
        }
        internal(ok, "no spare start above");
        ok = false;
        for (uint32_t bts = 0; bts < (1u << n) && !ok; ++bts) {
            Vertex v(n, bts);
            if (split.side(v) != T || v.color() != gcol) continue;
            if (v == gt[0] || v == gt[1]) continue;
            if (pt(v) == rbv[0] || pt(v) == rbv[1]) continue;
            gx = v;
            ok = true;
        }
        internal(ok, "no spare finish above");
        Path top = up(T, neutral_path_fault4(n - 1, pj(rt[0]), pj(rt[1]), pj(gt[0]),
                                             pj(gt[1]), pj(r), pj(gx), me));
        Path bot = up(B, neutral_path_fault4(n - 1, pj(rbv[0]), pj(rbv[1]), pj(gb[0]),
                                             pj(gb[1]), pj(pt(gx)), pj(pt(r)), me));
        return close_cycle(weld(orient(top, r), orient(bot, pt(gx))));
    }
    // three of the split class on one plate, its last member alone below
    Plate T = Plate::Top;
    {
        int rtc = 0;
        for (auto& r : rs) rtc += split.side(r) == Plate::Top;
        if (rtc == 1) T = Plate::Bottom;
    }
    Plate B = other(T);
    std::vector<Vertex> rt, gt, gb;
    Vertex rb = Vertex();
    for (auto& r : rs)
        if (split.side(r) == T)
            rt.push_back(r);
        else
            rb = r;
    for (auto& g : gs) (split.side(g) == T ? gt : gb).push_back(g);
    if (gt.size() == 4) {
        if (me) me->label = "b1";
        Path top = up(T, charged_path_fault51(n - 1, pj(rt[0]), pj(rt[1]), pj(rt[2]),
                                              pj(gt[2]), pj(gt[3]), pj(gt[0]),
                                              pj(gt[1]), me));
        int len = top.length();
        auto vs = path_vertices(top);
        Path bot = up(B, laceable_path(n - 1, pj(rb), pj(pt(vs[len - 1])),
                                       pj(pt(vs[1])), me));
        return close_cycle(weld(segment(top, 1, len - 1), orient(bot, pt(vs[len - 1]))));
    }
    if (gt.size() == 3) {
        if (me) me->label = "b2";
        Fault tf(n - 1, {pj(rt[0]), pj(rt[1]), pj(rt[2]), pj(gt[0]), pj(gt[1]),
                         pj(gt[2])});
        Path cyc = up(T, cycle_with_neutral_fault(n - 1, tf, me));
        auto vs = path_vertices(cyc);
        for (int i = 0; i + 1 <= cyc.length(); ++i) {
            Vertex c = pt(vs[i]), d = pt(vs[i + 1]);
            if (c == rb || c == gb[0] || d == rb || d == gb[0]) continue;
            Vertex ra = c, gg = d;
            if (ra.color() != rb.color()) std::swap(ra, gg);
            Path bot = up(B, neutral_path_two_faults(n - 1, pj(rb), pj(gb[0]), pj(ra),
                                                     pj(gg), me));
            Path opened = cycle_minus_edge(cyc, vs[i], vs[i + 1]);
            return close_cycle(weld(reverse(opened), orient(bot, c)));
        }
        throw InternalCaseError("no free cycle edge");
    }
    if (gt.size() == 1) {
        if (me) me->label = "b3";
        std::vector<Vertex> h;
        for (uint32_t bts = 0; bts < (1u << n) && h.size() < 4; ++bts) {
            Vertex v(n, bts);
            if (split.side(v) != T || v.color() != gcol || v == gt[0]) continue;
            if (pt(v) == rb) continue;
            h.push_back(v);
        }
        internal(h.size() == 4, "no spare bridge quadruple above");
        auto tc = two_green_pairs_fault42(n - 1, pj(rt[0]), pj(rt[1]), pj(rt[2]),
                                          pj(gt[0]), pj(h[0]), pj(h[1]), pj(h[2]),
                                          pj(h[3]), me);
        auto bc = two_green_pairs_fault42(n - 1, pj(gb[0]), pj(gb[1]), pj(gb[2]),
                                          pj(rb), pj(pt(h[1])), pj(pt(h[2])),
                                          pj(pt(h[3])), pj(pt(h[0])), me);
        Path walk = weld({orient(up(T, covering_path(tc, pj(h[0]), pj(h[1]))), h[0]),
                          orient(up(B, covering_path(bc, pj(pt(h[1])), pj(pt(h[2])))),
                                 pt(h[1])),
                          orient(up(T, covering_path(tc, pj(h[2]), pj(h[3]))), h[2]),
                          orient(up(B, covering_path(bc, pj(pt(h[3])), pj(pt(h[0])))),
                                 pt(h[3]))});
        return close_cycle(walk);
    }
    if (gt.size() == 2) {
        if (me) me->label = "b4";
        Vertex g5 = Vertex(), g6 = Vertex();
        bool ok = false;
        for (uint32_t b1s = 0; b1s < (1u << n) && !ok; ++b1s) {
            Vertex v(n, b1s);
            if (split.side(v) != T || v.color() != gcol) continue;
            if (v == gt[0] || v == gt[1] || pt(v) == rb) continue;
            for (uint32_t b2s = b1s + 1; b2s < (1u << n) && !ok; ++b2s) {
                Vertex w(n, b2s);
                if (split.side(w) != T || w.color() != gcol) continue;
                if (w == gt[0] || w == gt[1] || pt(w) == rb) continue;
                g5 = v;
                g6 = w;
                ok = true;
            }
        }
        internal(ok, "no spare end pair above");
        Path top = up(T, charged_path_fault51(n - 1, pj(rt[0]), pj(rt[1]), pj(rt[2]),
                                              pj(gt[0]), pj(gt[1]), pj(g5), pj(g6),
                                              me));
        Path bot = up(B, charged_path_fault31(n - 1, pj(rb), pj(gb[0]), pj(gb[1]),
                                              pj(pt(g6)), pj(pt(g5)), me));
        return close_cycle(weld(orient(top, g5), orient(bot, pt(g6))));
    }
    if (me) me->label = "b5";
    internal(n >= 7, "lone-plate case needs another dimension");
    std::vector<Vertex> sub;
    for (auto& g : gb) sub.push_back(pj(g));
    std::sort(sub.begin(), sub.end());
    Path bot = up(B, separated_path(n - 1, sub, pj(rb), me));
    int len = bot.length();
    auto vs = path_vertices(bot);
    std::vector<int> marks;
    for (int k = 1; k < len; ++k)
        for (auto& g : gb)
            if (vs[k] == g) marks.push_back(k);
    internal(marks.size() == 2, "two interior marks expected");
    int i = marks[0], j = marks[1];
    auto tc = three_green_pairs_fault33(
        n - 1, pj(rt[0]), pj(rt[1]), pj(rt[2]), pj(pt(vs[1])), pj(pt(vs[len - 1])),
        pj(pt(vs[j + 1])), pj(pt(vs[j - 1])), pj(pt(vs[i + 1])), pj(pt(vs[i - 1])),
        me);
    Path ka = up(T, covering_path(tc, pj(pt(vs[1])), pj(pt(vs[len - 1]))));
    Path mu = up(T, covering_path(tc, pj(pt(vs[j + 1])), pj(pt(vs[j - 1]))));
    Path nu = up(T, covering_path(tc, pj(pt(vs[i + 1])), pj(pt(vs[i - 1]))));
    Path walk = weld({orient(ka, pt(vs[1])), reverse(segment(bot, j + 1, len - 1)),
                      orient(mu, pt(vs[j + 1])), reverse(segment(bot, i + 1, j - 1)),
                      orient(nu, pt(vs[i + 1])), reverse(segment(bot, 1, i - 1))});
    return close_cycle(walk);
}

} // namespace detail

} // namespace qpath
