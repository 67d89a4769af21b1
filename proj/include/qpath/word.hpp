#pragma once

#include <vector>

#include "qpath/core.hpp"

namespace qpath {

// A letter names the generator e_i, 1-based.
using Letter = int;
using Word = std::vector<Letter>;

uint32_t content(const Word& w, int dim); // coordinatewise XOR of the letters

Word drop_last(const Word& w);  // the paper's omega'
Word drop_first(const Word& w); // omega*
Word reverse(const Word& w);    // omega^R
Letter first_letter(const Word& w);
Letter last_letter(const Word& w);
bool simple_word(const Word& w, int dim);

// A path (a, omega): the vertex sequence a, a x1, a x1 x2, ...
struct Path {
    Vertex start;
    Word word;

    Path() = default;
    Path(Vertex s, Word w) : start(s), word(std::move(w)) {}

    int length() const { return (int)word.size(); }
    auto operator<=>(const Path&) const = default;
};

Vertex endpoint(const Path& p);
std::vector<Vertex> path_vertices(const Path& p);
bool is_simple(const Path& p);
bool is_cycle(const Path& p); // identity content, proper prefixes non-identity
Path reverse(const Path& p);
Path concat(const Path& p, const Word& w);
// Joins q onto p; requires endpoint(p) == q.start.
Path join(const Path& p, const Path& q);
// Splits at the k-th visited vertex (0-based); both halves share it.
std::pair<Path, Path> cut(const Path& p, int k);
// Index of v in the vertex sequence, or -1.
int find_vertex(const Path& p, const Vertex& v);
// Rotates a cycle so it starts (and ends) at v.
Path rotate_cycle(const Path& c, const Vertex& v);

using Covering = std::vector<Path>;

// Orients p to start at `from`, reversing when needed.
Path orient(const Path& p, const Vertex& from);
// Concatenation that inserts the single connecting letter when endpoint(a)
// and b.start are adjacent rather than equal.
Path weld(const Path& a, const Path& b);
Path weld(std::initializer_list<Path> segs);
// Appends the closing letter; endpoint must be adjacent to the start.
Path close_cycle(const Path& p);
// Removes edge {u,w} from a cycle and returns the path from u to w the
// long way round.
Path cycle_minus_edge(const Path& cyc, const Vertex& u, const Vertex& w);
// The path of a covering whose endpoints are {u,w}, oriented to start at u.
Path covering_path(const Covering& c, const Vertex& u, const Vertex& w);

} // namespace qpath
