#include "qpath/core.hpp"

#include <algorithm>

namespace qpath {

Vertex::Vertex(int n, uint32_t b) : dim(n), bits(b) {
    if (n < 1 || n > kMaxDim)
        throw RangeError("vertex dimension out of range: " + std::to_string(n));
    if (b >> n)
        throw RangeError("vertex bits exceed dimension");
}

int Vertex::coord(int i) const {
    if (i < 1 || i > dim) throw RangeError("coordinate index out of range");
    return (bits >> (dim - i)) & 1;
}

Vertex Vertex::flip(int letter) const {
    if (letter < 1 || letter > dim) throw RangeError("letter out of range");
    return Vertex(dim, bits ^ (1u << (dim - letter)));
}

std::string Vertex::str() const {
    std::string s(dim, '0');
    for (int i = 1; i <= dim; ++i)
        if (coord(i)) s[i - 1] = '1';
    return s;
}

Vertex Vertex::parse(const std::string& s) {
    int n = (int)s.size();
    if (n < 1 || n > kMaxDim) throw RangeError("bad vertex string length");
    uint32_t b = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw RangeError("bad vertex character");
        b = (b << 1) | (c == '1' ? 1u : 0u);
    }
    return Vertex(n, b);
}

int distance(const Vertex& a, const Vertex& b) {
    if (a.dim != b.dim) throw RangeError("dimension mismatch");
    return std::popcount(a.bits ^ b.bits);
}

bool adjacent(const Vertex& a, const Vertex& b) { return distance(a, b) == 1; }

int diff_letter(const Vertex& a, const Vertex& b) {
    if (!adjacent(a, b)) throw RangeError("vertices not adjacent");
    return a.dim - std::countr_zero(a.bits ^ b.bits);
}

std::vector<Vertex> neighbors(const Vertex& v) {
    std::vector<Vertex> out;
    out.reserve(v.dim);
    for (int i = 1; i <= v.dim; ++i) out.push_back(v.flip(i));
    return out;
}

Fault::Fault(int n, std::vector<Vertex> vs) : dim(n), vertices(std::move(vs)) {
    for (auto& v : vertices)
        if (v.dim != n) throw RangeError("fault vertex dimension mismatch");
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw RangeError("duplicate fault vertex");
}

int Fault::red_count() const {
    int r = 0;
    for (auto& v : vertices) r += v.red();
    return r;
}

int Fault::charge() const { return std::abs(red_count() - green_count()); }

bool Fault::contains(const Vertex& v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

int charge(const Fault& f) { return f.charge(); }

VertexPair::VertexPair(Vertex x, Vertex y) : a(x), b(y) {
    if (x.dim != y.dim) throw RangeError("pair dimension mismatch");
    if (x == y) throw RangeError("pair endpoints must be distinct");
    if (b < a) std::swap(a, b);
}

Color VertexPair::charge_color() const {
    if (!charged()) throw RangeError("pair is neutral");
    return a.color();
}

PairSet::PairSet(int n, std::vector<VertexPair> ps) : dim(n), pairs(std::move(ps)) {
    std::vector<Vertex> ends;
    for (auto& p : pairs) {
        if (p.a.dim != n) throw RangeError("pair dimension mismatch");
        ends.push_back(p.a);
        ends.push_back(p.b);
    }
    std::sort(ends.begin(), ends.end());
    if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
        throw RangeError("pair endpoints not distinct");
    std::sort(pairs.begin(), pairs.end());
}

int PairSet::neutral_count() const {
    int k = 0;
    for (auto& p : pairs) k += p.neutral();
    return k;
}

int PairSet::red_pairs() const {
    int k = 0;
    for (auto& p : pairs) k += p.charged() && p.charge_color() == Color::Red;
    return k;
}

int PairSet::green_pairs() const {
    int k = 0;
    for (auto& p : pairs) k += p.charged() && p.charge_color() == Color::Green;
    return k;
}

Instance::Instance(int n_, Fault f, PairSet p) : n(n_), fault(std::move(f)), pairs(std::move(p)) {
    if (fault.dim != n || pairs.dim != n) throw RangeError("instance dimension mismatch");
}

Signature Instance::signature() const {
    return Signature{fault.mass(), fault.charge(), pairs.neutral_count(), pairs.charged_count()};
}

bool is_balanced(const Instance& inst) {
    for (auto& p : inst.pairs.pairs) {
        if (inst.fault.contains(p.a) || inst.fault.contains(p.b))
            throw OverlapError("terminal vertex is deleted");
    }
    int lhs = inst.fault.red_count() - inst.fault.green_count();
    int rhs = inst.pairs.green_pairs() - inst.pairs.red_pairs();
    return lhs == rhs;
}

bool capacity_ok(int n, const Signature& s) {
    return (1LL << n) >= (long long)s.M + s.C + 2LL * s.N + 2LL * s.O;
}

std::vector<VertexPair> b_set(const Vertex& r, const Vertex& g) {
    if (r.dim != 3 || g.dim != 3) throw DimensionError("B-set is defined in Q3 only");
    if (r == g) throw RangeError("b_set wants two distinct vertices");
    std::vector<VertexPair> out;
    if (r == g.antipode()) {
        for (uint32_t b = 0; b < 8; ++b) {
            Vertex v(3, b), w = v.antipode();
            if (v < w && v != r && v != g) out.emplace_back(v, w);
        }
    } else {
        out.emplace_back(r.antipode(), g.antipode());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_b_set(const Vertex& r, const Vertex& g, const Vertex& r1, const Vertex& g1) {
    auto bs = b_set(r, g);
    VertexPair p(r1, g1);
    return std::binary_search(bs.begin(), bs.end(), p);
}

long long cluster_neighbor_count(int n, int k) {
    if (n < 1 || n > kMaxDim || k < 1 || k > n) throw RangeError("cluster_neighbor_count range");
    return 1LL + (long long)n * k - (long long)k * (k + 1) / 2;
}

long long isoperimetric_lower_bound(int n, int k) {
    if (n < 1 || n > kMaxDim || k < 1 || k > n) throw RangeError("isoperimetric range");
    return 1LL + (long long)k * n - (long long)k * (k + 1) / 2;
}

std::set<Vertex> neighbor_set(const std::vector<Vertex>& a) {
    std::set<Vertex> out;
    for (auto& v : a)
        for (auto& w : neighbors(v)) out.insert(w);
    return out;
}

Vertex color_flip(const Vertex& v) { return v.flip(1); }

} // namespace qpath
