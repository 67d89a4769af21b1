#pragma once

#include "qpath/word.hpp"

namespace qpath {

enum class Plate { Top, Bottom }; // top = axis coordinate 0

inline Plate other(Plate p) { return p == Plate::Top ? Plate::Bottom : Plate::Top; }

struct PlateSplit {
    int dim = 0;
    Letter axis = 0;

    PlateSplit() = default;
    PlateSplit(int n, Letter a);

    Plate side(const Vertex& v) const;
    Vertex partner(const Vertex& v) const { return v.flip(axis); } // across the bridge
    std::pair<Plate, Vertex> project(const Vertex& v) const;
    Vertex project_vertex(const Vertex& v) const { return project(v).second; }
    Vertex embed(Plate p, const Vertex& u) const;
    Letter lift_letter(Letter x) const;  // plate letter -> full-cube letter
    Letter lower_letter(Letter x) const; // full-cube letter (!= axis) -> plate letter
    Path lift_path(Plate p, const Path& q) const;
    Path project_path(const Path& q) const; // q must stay on one plate
};

struct AxisConstraint {
    Vertex a, b;
    bool separate = true; // false: require same plate
};

// Smallest coordinate satisfying all constraints.
PlateSplit choose_axis(int n, const std::vector<AxisConstraint>& cs);

struct Bridge {
    Vertex top, bottom;
};

// Smallest-encoding vertex on `side` with the given color whose bridge
// avoids `avoid` entirely.
Bridge find_bridge(const PlateSplit& split, Plate side, Color color,
                   const std::vector<Vertex>& avoid);

// Replace the donor edge (u,w) with bridge + recipient + bridge.  The
// recipient must run between the bridge partners of u and w (either
// direction); donor may be a path or a cycle word.
Path surgery(const PlateSplit& split, const Path& donor, const Vertex& u,
             const Vertex& w, const Path& recipient);

} // namespace qpath
