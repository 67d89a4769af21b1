#pragma once

#include <optional>

#include "qpath/verify.hpp"

namespace qpath {

// Exhaustive backtracking over bitmask state; exact up to n = 6.

struct SearchBudget {
    uint64_t max_nodes = 500'000'000;
};

enum class Verdict { Feasible, Infeasible, Indeterminate };

struct SearchResult {
    Verdict verdict = Verdict::Indeterminate;
    std::optional<Covering> covering; // set when Feasible
    uint64_t nodes = 0;
};

// Disjoint paths with the given endpoint pairs covering exactly the
// vertices of `allowed` (which must contain all endpoints).
SearchResult search_cover(int n, uint64_t allowed,
                          const std::vector<std::pair<Vertex, Vertex>>& ends,
                          const SearchBudget& budget = {});

// A cycle through every vertex of `allowed`.
SearchResult search_cycle(int n, uint64_t allowed, const SearchBudget& budget = {});

uint64_t full_mask(int n);
uint64_t fault_free_mask(int n, const Fault& f);
inline uint64_t bit_of(const Vertex& v) { return uint64_t(1) << v.bits; }

} // namespace qpath
