#include <algorithm>

#include "qpath/dispatch.hpp"

// Terminal-into-fault reductions: delete one end of a prescribed pair,
// re-prescribe from a free neighbor, solve the smaller-signature
// instance and put the dropped edge back.  Each is gated by the counting
// inequality that guarantees a usable neighbor exists at dimension k.

namespace qpath {

namespace {

void need(bool ok, const char* msg) {
    if (!ok) throw HypothesisError(msg);
}

long long twice_lhs(int k, int t) {
    // 2 * (k*t + 1 - binom(t+1, 2))
    return 2 * ((long long)k * t + 1) - (long long)t * (t + 1);
}

long long twice_rhs_plus(const Signature& s) { return s.M + s.C + 2LL * (s.N + s.O); }

// Majority deleted color; Red when tied, mirroring the canonical
// red-heavy orientation.
Color majority_color(const Fault& f) {
    return f.green_count() > f.red_count() ? Color::Green : Color::Red;
}

bool is_end(const PairSet& ps, const Vertex& v) {
    for (auto& p : ps.pairs)
        if (p.a == v || p.b == v) return true;
    return false;
}

// Delete `del` (an end of pairs[pi]), re-prescribe from its free
// neighbor along the smallest admissible letter, solve, extend back.
Covering reduce_at(const Instance& inst, size_t pi, const Vertex& del,
                   const InnerSolver& inner, const char* label, TraceNode* tr) {
    const VertexPair& pr = inst.pairs.pairs[pi];
    Vertex other = pr.a == del ? pr.b : pr.a;
    int letter = 0;
    Vertex gp;
    for (int x = 1; x <= inst.n; ++x) {
        Vertex c = del.flip(x);
        if (inst.fault.contains(c) || is_end(inst.pairs, c)) continue;
        letter = x;
        gp = c;
        break;
    }
    if (letter == 0)
        throw InternalCaseError("gate counting must leave a free neighbor");
    TraceNode* me = trace_child(tr, label, letter);
    auto fv = inst.fault.vertices;
    fv.push_back(del);
    std::vector<VertexPair> pv;
    for (size_t i = 0; i < inst.pairs.pairs.size(); ++i)
        pv.push_back(i == pi ? VertexPair(gp, other) : inst.pairs.pairs[i]);
    Instance aug(inst.n, Fault(inst.n, std::move(fv)), PairSet(inst.n, std::move(pv)));
    Covering sub = inner(aug, me);
    Covering out;
    for (auto& p : inst.pairs.pairs) {
        if (p == pr) {
            Path q = covering_path(sub, gp, other);
            Word w{letter};
            w.insert(w.end(), q.word.begin(), q.word.end());
            out.emplace_back(del, std::move(w));
        } else {
            out.push_back(covering_path(sub, p.a, p.b));
        }
    }
    return out;
}

} // namespace

bool gate_neutral_to_charged(int k, const Signature& s) {
    return twice_lhs(k, s.N) > twice_rhs_plus(s);
}

bool gate_red_charged(int k, const Signature& s) {
    return s.O > s.C && twice_lhs(k, s.O - s.C) > twice_rhs_plus(s);
}

bool gate_green_charged(int k, const Signature& s) {
    return s.C >= 1 &&
           twice_lhs(k, s.O + s.C) > s.M - s.C + 2LL * (s.N + s.O);
}

Covering reduce_neutral_to_charged(const Instance& inst, const InnerSolver& inner,
                                   TraceNode* tr) {
    Signature s = inst.signature();
    need(s.N >= 1, "a neutral pair is required");
    if (!gate_neutral_to_charged(inst.n, s))
        throw GateError("neutral-to-charged gate fails at this dimension");
    Color maj = majority_color(inst.fault);
    for (size_t i = 0; i < inst.pairs.pairs.size(); ++i) {
        const VertexPair& p = inst.pairs.pairs[i];
        if (!p.neutral()) continue;
        Vertex del = p.a.color() == maj ? p.a : p.b;
        return reduce_at(inst, i, del, inner, "reduce-neutral", tr);
    }
    throw InternalCaseError("neutral pair not found despite N >= 1");
}

Covering reduce_red_charged_to_neutral(const Instance& inst, const InnerSolver& inner,
                                       TraceNode* tr) {
    Signature s = inst.signature();
    if (!gate_red_charged(inst.n, s))
        throw GateError("red-charged gate fails at this dimension");
    Color maj = majority_color(inst.fault);
    for (size_t i = 0; i < inst.pairs.pairs.size(); ++i) {
        const VertexPair& p = inst.pairs.pairs[i];
        if (!p.charged() || p.charge_color() != maj) continue;
        return reduce_at(inst, i, p.a, inner, "reduce-red-charged", tr);
    }
    throw HypothesisError("no charged pair of the majority color");
}

Covering reduce_green_charged_to_neutral(const Instance& inst, const InnerSolver& inner,
                                         TraceNode* tr) {
    Signature s = inst.signature();
    if (!gate_green_charged(inst.n, s))
        throw GateError("green-charged gate fails at this dimension");
    Color maj = majority_color(inst.fault);
    for (size_t i = 0; i < inst.pairs.pairs.size(); ++i) {
        const VertexPair& p = inst.pairs.pairs[i];
        if (!p.charged() || p.charge_color() != opposite(maj)) continue;
        return reduce_at(inst, i, p.a, inner, "reduce-green-charged", tr);
    }
    throw HypothesisError("no charged pair of the minority color");
}

} // namespace qpath
