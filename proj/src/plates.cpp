#include "qpath/plates.hpp"

#include <algorithm>

namespace qpath {

PlateSplit::PlateSplit(int n, Letter a) : dim(n), axis(a) {
    if (n < 2 || n > kMaxDim) throw RangeError("plate split needs 2 <= n <= cap");
    if (a < 1 || a > n) throw RangeError("axis out of range");
}

Plate PlateSplit::side(const Vertex& v) const {
    if (v.dim != dim) throw RangeError("dimension mismatch");
    return v.coord(axis) ? Plate::Bottom : Plate::Top;
}

std::pair<Plate, Vertex> PlateSplit::project(const Vertex& v) const {
    if (v.dim != dim) throw RangeError("dimension mismatch");
    int p = dim - axis; // bit position of the axis coordinate
    uint32_t low = v.bits & ((1u << p) - 1);
    uint32_t high = v.bits >> (p + 1);
    return {side(v), Vertex(dim - 1, (high << p) | low)};
}

Vertex PlateSplit::embed(Plate pl, const Vertex& u) const {
    if (u.dim != dim - 1) throw RangeError("embed wants plate dimension");
    int p = dim - axis;
    uint32_t low = u.bits & ((1u << p) - 1);
    uint32_t high = u.bits >> p;
    uint32_t tag = (pl == Plate::Bottom) ? 1u : 0u;
    return Vertex(dim, (high << (p + 1)) | (tag << p) | low);
}

Letter PlateSplit::lift_letter(Letter x) const {
    if (x < 1 || x > dim - 1) throw RangeError("plate letter out of range");
    return x < axis ? x : x + 1;
}

Letter PlateSplit::lower_letter(Letter x) const {
    if (x < 1 || x > dim || x == axis) throw RangeError("cannot lower the axis letter");
    return x < axis ? x : x - 1;
}

Path PlateSplit::lift_path(Plate pl, const Path& q) const {
    Path out(embed(pl, q.start), {});
    out.word.reserve(q.word.size());
    for (Letter x : q.word) out.word.push_back(lift_letter(x));
    return out;
}

Path PlateSplit::project_path(const Path& q) const {
    auto [pl, s] = project(q.start);
    Path out(s, {});
    for (Letter x : q.word) {
        if (x == axis) throw RangeError("path crosses the split");
        out.word.push_back(lower_letter(x));
    }
    return out;
}

PlateSplit choose_axis(int n, const std::vector<AxisConstraint>& cs) {
    for (int a = 1; a <= n; ++a) {
        bool ok = true;
        for (auto& c : cs) {
            bool differ = c.a.coord(a) != c.b.coord(a);
            if (differ != c.separate) { ok = false; break; }
        }
        if (ok) return PlateSplit(n, a);
    }
    throw NoAxisError("no axis satisfies the constraints");
}

Bridge find_bridge(const PlateSplit& split, Plate side, Color color,
                   const std::vector<Vertex>& avoid) {
    int n = split.dim;
    for (uint32_t b = 0; b < (1u << n); ++b) {
        Vertex v(n, b);
        if (split.side(v) != side || v.color() != color) continue;
        Vertex w = split.partner(v);
        if (std::find(avoid.begin(), avoid.end(), v) != avoid.end()) continue;
        if (std::find(avoid.begin(), avoid.end(), w) != avoid.end()) continue;
        return side == Plate::Top ? Bridge{v, w} : Bridge{w, v};
    }
    throw NoBridgeError("no bridge candidate survives the avoid set");
}

Path surgery(const PlateSplit& split, const Path& donor, const Vertex& u,
             const Vertex& w, const Path& recipient) {
    auto vs = path_vertices(donor);
    int i = -1;
    for (int k = 0; k + 1 < (int)vs.size(); ++k)
        if (vs[k] == u && vs[k + 1] == w) { i = k; break; }
    if (i < 0) throw AssemblyError("surgery: edge not on donor");
    Path rec = recipient;
    if (rec.start == split.partner(w) && endpoint(rec) == split.partner(u))
        rec = reverse(rec);
    if (rec.start != split.partner(u) || endpoint(rec) != split.partner(w))
        throw AssemblyError("surgery: recipient endpoints mismatch");
    Path out(donor.start, Word(donor.word.begin(), donor.word.begin() + i));
    out.word.push_back(split.axis);
    out.word.insert(out.word.end(), rec.word.begin(), rec.word.end());
    out.word.push_back(split.axis);
    out.word.insert(out.word.end(), donor.word.begin() + i + 1, donor.word.end());
    return out;
}

} // namespace qpath
