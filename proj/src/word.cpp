#include "qpath/word.hpp"

#include <algorithm>
#include <unordered_set>

namespace qpath {

uint32_t content(const Word& w, int dim) {
    uint32_t c = 0;
    for (Letter x : w) {
        if (x < 1 || x > dim) throw RangeError("letter out of range");
        c ^= 1u << (dim - x);
    }
    return c;
}

Word drop_last(const Word& w) {
    if (w.empty()) throw EmptyWordError("drop_last of empty word");
    return Word(w.begin(), w.end() - 1);
}

Word drop_first(const Word& w) {
    if (w.empty()) throw EmptyWordError("drop_first of empty word");
    return Word(w.begin() + 1, w.end());
}

Word reverse(const Word& w) {
    Word r(w.rbegin(), w.rend());
    return r;
}

Letter first_letter(const Word& w) {
    if (w.empty()) throw EmptyWordError("first_letter of empty word");
    return w.front();
}

Letter last_letter(const Word& w) {
    if (w.empty()) throw EmptyWordError("last_letter of empty word");
    return w.back();
}

bool simple_word(const Word& w, int dim) {
    // no nonempty contiguous subword with identity content: all prefix
    // contents must be distinct
    std::unordered_set<uint32_t> seen;
    uint32_t c = 0;
    seen.insert(0);
    for (Letter x : w) {
        if (x < 1 || x > dim) throw RangeError("letter out of range");
        c ^= 1u << (dim - x);
        if (!seen.insert(c).second) return false;
    }
    return true;
}

Vertex endpoint(const Path& p) {
    return Vertex(p.start.dim, p.start.bits ^ content(p.word, p.start.dim));
}

std::vector<Vertex> path_vertices(const Path& p) {
    std::vector<Vertex> out;
    out.reserve(p.word.size() + 1);
    Vertex v = p.start;
    out.push_back(v);
    for (Letter x : p.word) {
        v = v.flip(x);
        out.push_back(v);
    }
    return out;
}

bool is_simple(const Path& p) { return simple_word(p.word, p.start.dim); }

bool is_cycle(const Path& p) {
    if (p.word.size() < 4) return false; // shortest cycle in a hypercube
    if (content(p.word, p.start.dim) != 0) return false;
    return simple_word(drop_last(p.word), p.start.dim);
}

Path reverse(const Path& p) { return Path(endpoint(p), reverse(p.word)); }

Path concat(const Path& p, const Word& w) {
    Path q = p;
    for (Letter x : w) {
        if (x < 1 || x > p.start.dim) throw RangeError("letter out of range");
        q.word.push_back(x);
    }
    return q;
}

Path join(const Path& p, const Path& q) {
    if (endpoint(p) != q.start) throw AssemblyError("join: endpoint mismatch");
    return concat(p, q.word);
}

std::pair<Path, Path> cut(const Path& p, int k) {
    if (k < 0 || k > (int)p.word.size()) throw RangeError("cut index out of range");
    Path a(p.start, Word(p.word.begin(), p.word.begin() + k));
    Path b(endpoint(a), Word(p.word.begin() + k, p.word.end()));
    return {a, b};
}

int find_vertex(const Path& p, const Vertex& v) {
    Vertex u = p.start;
    if (u == v) return 0;
    int i = 0;
    for (Letter x : p.word) {
        u = u.flip(x);
        ++i;
        if (u == v) return i;
    }
    return -1;
}

Path rotate_cycle(const Path& c, const Vertex& v) {
    if (!is_cycle(c)) throw AssemblyError("rotate_cycle: not a cycle");
    int i = find_vertex(c, v);
    if (i < 0) throw AssemblyError("rotate_cycle: vertex not on cycle");
    Word w(c.word.begin() + i, c.word.end());
    w.insert(w.end(), c.word.begin(), c.word.begin() + i);
    return Path(v, w);
}

Path orient(const Path& p, const Vertex& from) {
    if (p.start == from) return p;
    if (endpoint(p) == from) return reverse(p);
    throw AssemblyError("orient: vertex is not an end of the path");
}

Path weld(const Path& a, const Path& b) {
    if (endpoint(a) == b.start) return join(a, b);
    if (adjacent(endpoint(a), b.start))
        return join(concat(a, {diff_letter(endpoint(a), b.start)}), b);
    throw AssemblyError("weld: segment ends neither meet nor touch");
}

Path weld(std::initializer_list<Path> segs) {
    if (segs.size() == 0) throw AssemblyError("weld: no segments");
    auto it = segs.begin();
    Path out = *it++;
    for (; it != segs.end(); ++it) out = weld(out, *it);
    return out;
}

Path close_cycle(const Path& p) {
    if (!adjacent(endpoint(p), p.start))
        throw AssemblyError("close_cycle: ends are not adjacent");
    return concat(p, {diff_letter(endpoint(p), p.start)});
}

Path cycle_minus_edge(const Path& cyc, const Vertex& u, const Vertex& w) {
    Path rot = rotate_cycle(cyc, u);
    auto vs = path_vertices(rot);
    if (vs[1] == w) // cycle runs u,w,...: drop that edge, walk backwards
        return reverse(Path(w, drop_first(rot.word)));
    if (vs[vs.size() - 2] == w) return Path(u, drop_last(rot.word));
    throw AssemblyError("cycle_minus_edge: vertices not consecutive");
}

Path covering_path(const Covering& c, const Vertex& u, const Vertex& w) {
    for (auto& p : c) {
        Vertex s = p.start, e = endpoint(p);
        if ((s == u && e == w) || (s == w && e == u)) return orient(p, u);
    }
    throw AssemblyError("covering_path: no path with those ends");
}

} // namespace qpath
