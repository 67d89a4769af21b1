#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qpath/errors.hpp"

namespace qpath {

inline constexpr int kMaxDim = 24;

enum class Color { Red, Green };

inline Color opposite(Color c) { return c == Color::Red ? Color::Green : Color::Red; }

// A vertex of Q_n.  Coordinate 1 is the most significant bit of `bits`,
// so the integer encoding of a vertex reads the same as its bitstring.
struct Vertex {
    int dim = 0;
    uint32_t bits = 0;

    Vertex() = default;
    Vertex(int n, uint32_t b);

    auto operator<=>(const Vertex&) const = default;

    int coord(int i) const; // i in 1..dim
    Color color() const { return (std::popcount(bits) & 1) ? Color::Red : Color::Green; }
    bool red() const { return color() == Color::Red; }
    bool green() const { return color() == Color::Green; }
    Vertex flip(int letter) const; // apply generator e_letter
    Vertex antipode() const { return Vertex(dim, ~bits & ((1u << dim) - 1)); }

    std::string str() const;
    static Vertex parse(const std::string& s);
};

inline Color parity(const Vertex& v) { return v.color(); }

int distance(const Vertex& a, const Vertex& b);
bool adjacent(const Vertex& a, const Vertex& b);
// The letter whose generator maps a to b; requires adjacency.
int diff_letter(const Vertex& a, const Vertex& b);
std::vector<Vertex> neighbors(const Vertex& v);

struct Fault {
    int dim = 0;
    std::vector<Vertex> vertices; // kept sorted, distinct

    Fault() = default;
    Fault(int n, std::vector<Vertex> vs);

    int mass() const { return (int)vertices.size(); }
    int red_count() const;
    int green_count() const { return mass() - red_count(); }
    int charge() const;
    bool neutral() const { return charge() == 0; }
    bool contains(const Vertex& v) const;

    auto operator<=>(const Fault&) const = default;
};

int charge(const Fault& f);

struct VertexPair {
    Vertex a, b; // normalized a < b

    VertexPair() = default;
    VertexPair(Vertex x, Vertex y);

    bool neutral() const { return a.color() != b.color(); }
    bool charged() const { return !neutral(); }
    Color charge_color() const; // requires charged()

    auto operator<=>(const VertexPair&) const = default;
};

struct PairSet {
    int dim = 0;
    std::vector<VertexPair> pairs; // sorted; all endpoints distinct

    PairSet() = default;
    PairSet(int n, std::vector<VertexPair> ps);

    int neutral_count() const;
    int charged_count() const { return (int)pairs.size() - neutral_count(); }
    int red_pairs() const;   // r(E)
    int green_pairs() const; // g(E)

    auto operator<=>(const PairSet&) const = default;
};

struct Signature {
    int M = 0, C = 0, N = 0, O = 0;
    auto operator<=>(const Signature&) const = default;
};

struct Instance {
    int n = 0;
    Fault fault;
    PairSet pairs;

    Instance() = default;
    Instance(int n_, Fault f, PairSet p);

    Signature signature() const;
};

bool is_balanced(const Instance& inst);
bool capacity_ok(int n, const Signature& sig);

// Q3 obstruction set: terminal pairs {r1,g1} admitting no Hamiltonian
// path of Q3 - {r,g}.
std::vector<VertexPair> b_set(const Vertex& r, const Vertex& g);
bool in_b_set(const Vertex& r, const Vertex& g, const Vertex& r1, const Vertex& g1);

// |N(A)| when A is a k-subset of the neighborhood of a single vertex.
long long cluster_neighbor_count(int n, int k);
// Lower bound on |N(A)| for any monochromatic k-set.
long long isoperimetric_lower_bound(int n, int k);
std::set<Vertex> neighbor_set(const std::vector<Vertex>& a);

// Coordinate-1 flip: the color-swapping automorphism used to bring an
// instance into the canonical "at least as many red deleted" orientation.
Vertex color_flip(const Vertex& v);

} // namespace qpath
