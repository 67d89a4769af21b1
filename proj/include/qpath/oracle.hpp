#pragma once

#include <functional>
#include <random>

#include "qpath/search.hpp"

namespace qpath {

SearchResult oracle_solve(const Instance& inst, const SearchBudget& budget = {});
SearchResult oracle_cycle(int n, const Fault& fault, const SearchBudget& budget = {});

// Automorphism of Q_n: permute coordinates, then flip a subset.
struct Automorphism {
    int n = 0;
    std::vector<int> perm; // coordinate i (1-based) moves to perm[i-1]
    uint32_t flips = 0;    // bits in vertex encoding to XOR afterwards

    Vertex apply(const Vertex& v) const;
    Path apply(const Path& p) const;
    Automorphism inverse() const;
};

// Lexicographically minimal image over all automorphisms; also returns
// the minimizing map.
std::pair<std::vector<uint32_t>, Automorphism> canonicalize(const Instance& inst);

// Memoized exhaustive solution for small base cases (n <= 4).
// Throws InfeasibleError when none exists.
Covering catalog_cover(const Instance& inst);
bool catalog_feasible(const Instance& inst);
void catalog_clear();
size_t catalog_size();

// Enumeration of all faults with given mass and charge, and of all
// balanced pair sets on top of a fault.
void for_each_fault(int n, int M, int C, const std::function<bool(const Fault&)>& f);
void for_each_pairset(int n, const Fault& fault, int N, int O,
                      const std::function<bool(const PairSet&)>& f);

Fault random_fault(int n, int M, int C, std::mt19937_64& rng);
PairSet random_pairset(int n, const Fault& fault, int N, int O, std::mt19937_64& rng);
Instance random_instance(int n, const Signature& sig, std::mt19937_64& rng);

struct SweepReport {
    long long checked = 0;
    long long feasible = 0;
    long long infeasible = 0;
    long long indeterminate = 0;
    std::vector<Instance> witnesses; // first few infeasible instances
};

SweepReport oracle_exists_all(int n, const Signature& sig, const SearchBudget& budget = {},
                              long long sample_count = 0, uint64_t seed = 0,
                              int jobs = 1);

struct CounterexampleRecord {
    std::string name;
    Instance instance;
};

std::vector<CounterexampleRecord> counterexample_catalog();
Instance conjecture_counterexample(int which, int k);

} // namespace qpath
