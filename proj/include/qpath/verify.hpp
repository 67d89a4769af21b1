#pragma once

#include <string>

#include "qpath/word.hpp"

namespace qpath {

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> problems;

    explicit operator bool() const { return ok; }
    void fail(std::string msg) {
        ok = false;
        problems.push_back(std::move(msg));
    }
    std::string message() const;
};

// Paths simple, pairwise disjoint, fault-avoiding, jointly covering all
// surviving vertices, with endpoint pairs exactly the prescribed ones.
VerifyResult verify_covering(const Instance& inst, const Covering& c);

// A Hamiltonian cycle of Q_n minus the fault.
VerifyResult verify_cycle(int n, const Fault& fault, const Path& cycle);

} // namespace qpath
