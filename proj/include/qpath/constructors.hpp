#pragma once

#include <deque>
#include <optional>
#include <string>

#include "qpath/plates.hpp"

namespace qpath {

enum class LemmaId {
    HAVEL,   // (0,0,1,0), n >= 1
    DVORAK,  // (0,0,2,0), n >= 2
    L1101,   // (1,1,0,1), n >= 2
    CYC2,    // cycle, mass-2 neutral fault, n >= 3
    NPF2,    // (2,0,1,0), n >= 4 unconditional
    CHG2,    // (0,0,0,2), n >= 4 unconditional
    MIX,     // (1,1,1,1), n >= 4
    CHG31,   // (3,1,0,1), n >= 4
    GG22,    // (2,2,0,2), n >= 4
    Q4FREE,  // two neutral pairs around a mass-2 fault in Q4
    CYC4,    // cycle, mass-4 neutral fault, n >= 4
    CYC6,    // cycle, mass-6 neutral fault, n >= 5
    NPF4,    // (4,0,1,0), n >= 5
    TRIPLE,  // (0,0,3,0), n >= 5
    GG42,    // (4,2,0,2), n >= 5
    CHG51,   // (5,1,0,1), n >= 5
    GGG33,   // (3,3,0,3), n >= 6
    CYC8,    // cycle, mass-8 neutral fault, n >= 6
};

int threshold(LemmaId id);
const char* lemma_name(LemmaId id);
std::optional<Signature> lemma_signature(LemmaId id);

// Tree of (lemma, axis, case label) records; builders append on the way
// down so a trace replays the construction.
struct TraceNode {
    std::string lemma;
    int axis = 0;
    std::string label;
    std::deque<TraceNode> children;

    bool operator==(const TraceNode&) const = default;
};

TraceNode* trace_child(TraceNode* t, std::string lemma, int axis = 0,
                       std::string label = "");

using Edge = std::pair<Vertex, Vertex>;

// All builders are parity-relative: any hypothesis the source statements
// phrase with concrete colors is enforced as a relation between parities,
// so each builder also serves its color-swapped twin.

// (0,0,1,0): Hamiltonian path from r to g, opposite parities.
Path havel_path(int n, const Vertex& r, const Vertex& g, TraceNode* tr = nullptr);

// (0,0,2,0): 2-path covering joining two disjoint neutral pairs.
Covering dvorak_pair(int n, const Vertex& r1, const Vertex& g1, const Vertex& r2,
                     const Vertex& g2, TraceNode* tr = nullptr);

// (1,1,0,1): Hamiltonian path of Q_n - {d} from a to b, where a,b share a
// parity opposite to d's.
Path laceable_path(int n, const Vertex& d, const Vertex& a, const Vertex& b,
                   TraceNode* tr = nullptr);

// Hamiltonian path from r to g through the edge e (e != {r,g}).
Path havel_through_edge(int n, const Vertex& r, const Vertex& g, const Edge& e,
                        TraceNode* tr = nullptr);

// Hamiltonian cycle of Q_n - F for a neutral fault of mass 0, 2, 4, 6 or 8.
Path cycle_with_neutral_fault(int n, const Fault& f, TraceNode* tr = nullptr);

// n-1 Hamiltonian paths of Q_n - {r} from g1 to g2 with pairwise distinct
// first edges at g1.
std::vector<Path> paths_distinct_first_edges(int n, const Vertex& r, const Vertex& g1,
                                             const Vertex& g2, TraceNode* tr = nullptr);

// Q3 minus two opposite-parity vertices: the Hamiltonian path when the
// terminal pair is not blocked, plus the structured alternatives.
struct Q3TwoDeletedResult {
    std::optional<Path> ham;        // absent exactly when the pair is blocked
    std::vector<Covering> two_path; // two 2-path coverings, both paths length 2
    std::vector<Covering> three_path; // two 3-path coverings, all paths length 1
};
Q3TwoDeletedResult q3_two_deleted(const Vertex& r, const Vertex& g, const Vertex& r1,
                                  const Vertex& g1, TraceNode* tr = nullptr);

// (2,0,1,0): Hamiltonian path of Q_n - {r1,g1} from r to g; n = 2 or
// n >= 4 unconditional, n = 3 subject to the Q3 blocking set.
Path neutral_path_two_faults(int n, const Vertex& r1, const Vertex& g1, const Vertex& r,
                             const Vertex& g, TraceNode* tr = nullptr);

// Hamiltonian cycle of Q_n - F through the edge e, mass-2 neutral F, n >= 4.
Path cycle_through_edge_two_faults(int n, const Fault& f, const Edge& e,
                                   TraceNode* tr = nullptr);

// (0,0,0,2): 2-path covering joining two charged pairs of opposite colors;
// with long_first the r-r1 path has length >= 2^(n-1).
Covering two_charged_pairs(int n, const Vertex& r, const Vertex& r1, const Vertex& g,
                           const Vertex& g1, bool long_first = false,
                           TraceNode* tr = nullptr);

// (1,1,1,1): one vertex r deleted; 2-path covering joining the neutral
// pair (r1,g) and the charged pair (g1,g2), n >= 4.
Covering mixed_pair(int n, const Vertex& r, const Vertex& r1, const Vertex& g,
                    const Vertex& g1, const Vertex& g2, TraceNode* tr = nullptr);

// Hamiltonian path of Q_n - {g} from r1 to r2 through e; with `oriented`
// (e disjoint from the ends) the path visits e.first before e.second.
Path charged_path_through_edge_one_fault(int n, const Vertex& g, const Vertex& r1,
                                         const Vertex& r2, const Edge& e,
                                         bool oriented = false, TraceNode* tr = nullptr);

// (3,1,0,1): Hamiltonian path of Q_n - {g,r,r1} from g1 to g2, n >= 4.
Path charged_path_fault31(int n, const Vertex& g, const Vertex& r, const Vertex& r1,
                          const Vertex& g1, const Vertex& g2, TraceNode* tr = nullptr);

// Hamiltonian cycle of Q_n - {g,r} keeping g1 and g2 at cycle distance >= 4.
Path cycle_far_terminals(int n, const Vertex& g, const Vertex& r, const Vertex& g1,
                         const Vertex& g2, TraceNode* tr = nullptr);

// Two oriented plate-Hamiltonian paths sharing a parallel edge pair
// traversed in the same direction: (a, a x) on gamma1's plate and the
// bridged copy on gamma2's plate.
struct OrientedSharedEdge {
    Path gamma1, gamma2; // full-cube coordinates, on opposite plates
    Vertex a;            // shared edge start on gamma1's plate
    Letter x;            // shared edge letter
};
OrientedSharedEdge oriented_shared_edge(int n, const PlateSplit& split, const Vertex& r1,
                                        const Vertex& g1, const Vertex& g2,
                                        const Vertex& r2, const Vertex& g3,
                                        const Vertex& g4, TraceNode* tr = nullptr);

// (2,2,0,2): 2-path covering of Q_n - {r1,r2} joining (g1,g2) and (g3,g4).
Covering two_green_pairs_fault22(int n, const Vertex& r1, const Vertex& r2,
                                 const Vertex& g1, const Vertex& g2, const Vertex& g3,
                                 const Vertex& g4, TraceNode* tr = nullptr);

// Hamiltonian path of Q_n - {r} whose ends lie in L and whose L-vertices
// sit pairwise at along-path distance >= 4; 2 <= |L| <= n-1, all opposite
// in parity to r.
Path separated_path(int n, const std::vector<Vertex>& l, const Vertex& r,
                    TraceNode* tr = nullptr);

// (4,0,1,0): Hamiltonian path of Q_n - {r1,r2,g1,g2} from r to g, n >= 5.
Path neutral_path_fault4(int n, const Vertex& r1, const Vertex& r2, const Vertex& g1,
                         const Vertex& g2, const Vertex& r, const Vertex& g,
                         TraceNode* tr = nullptr);

// (0,0,3,0): 3-path covering joining three disjoint neutral pairs, n >= 5.
Covering three_neutral_pairs(int n, const std::vector<VertexPair>& pairs,
                             TraceNode* tr = nullptr);

// (4,2,0,2): 2-path covering of Q_n - {r1,r2,r3,g} joining (g1,g2),(g3,g4).
Covering two_green_pairs_fault42(int n, const Vertex& r1, const Vertex& r2,
                                 const Vertex& r3, const Vertex& g, const Vertex& g1,
                                 const Vertex& g2, const Vertex& g3, const Vertex& g4,
                                 TraceNode* tr = nullptr);

// (5,1,0,1): Hamiltonian path of Q_n - {r1,r2,r3,g1,g2} from g3 to g4.
Path charged_path_fault51(int n, const Vertex& r1, const Vertex& r2, const Vertex& r3,
                          const Vertex& g1, const Vertex& g2, const Vertex& g3,
                          const Vertex& g4, TraceNode* tr = nullptr);

// (3,3,0,3): 3-path covering of Q_n - {r1,r2,r3} joining three same-color
// pairs, n >= 6.
Covering three_green_pairs_fault33(int n, const Vertex& r1, const Vertex& r2,
                                   const Vertex& r3, const Vertex& g1, const Vertex& g2,
                                   const Vertex& g3, const Vertex& g4, const Vertex& g5,
                                   const Vertex& g6, TraceNode* tr = nullptr);

// Q4 with a mass-2 neutral fault: 2-path covering joining two neutral
// pairs (r1,g1), (r2,g2).
Covering q4_free_two_neutral_pairs(const Fault& f, const Vertex& r1, const Vertex& g1,
                                   const Vertex& r2, const Vertex& g2,
                                   TraceNode* tr = nullptr);

namespace detail {
// Larger cycle cases live in their own translation units.
Path cycle_fault6(int n, const Fault& f, TraceNode* tr);
Path cycle_fault8(int n, const Fault& f, TraceNode* tr);
} // namespace detail

} // namespace qpath
