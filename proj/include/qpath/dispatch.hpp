#pragma once

#include <functional>

#include "qpath/constructors.hpp"
#include "qpath/oracle.hpp"
#include "qpath/table.hpp"

namespace qpath {

enum class Status { Solved, InfeasibleCertified, BelowThreshold, Unknown };

struct SolveOutcome {
    Status status = Status::Unknown;
    std::optional<Covering> covering; // set when Solved; a cycle is one closed path
    std::string evidence;             // cause of infeasibility or bound note
    std::optional<TraceNode> trace;
};

// Route a covering request by signature: bespoke builder or reduction
// chain from the constructive threshold up, exhaustive oracle below it
// for n <= 4, BelowThreshold otherwise; verified on every solve.
SolveOutcome solve(const Instance& inst, bool with_trace = false);

// Hamiltonian-cycle request around a neutral fault of even mass.
SolveOutcome solve_cycle(int n, const Fault& fault, bool with_trace = false);

// Reduction combinators.  Each moves one path terminal into the fault,
// solves the transformed instance via `inner` and extends the affected
// path back by the dropped edge.  GateError when the counting inequality
// for the working dimension fails.
using InnerSolver = std::function<Covering(const Instance&, TraceNode*)>;

Covering reduce_neutral_to_charged(const Instance& inst, const InnerSolver& inner,
                                   TraceNode* tr = nullptr);
Covering reduce_red_charged_to_neutral(const Instance& inst, const InnerSolver& inner,
                                       TraceNode* tr = nullptr);
Covering reduce_green_charged_to_neutral(const Instance& inst, const InnerSolver& inner,
                                         TraceNode* tr = nullptr);

// Gate arithmetic, exposed for tests; k is the working dimension.
bool gate_neutral_to_charged(int k, const Signature& s);
bool gate_red_charged(int k, const Signature& s);
bool gate_green_charged(int k, const Signature& s);

} // namespace qpath
