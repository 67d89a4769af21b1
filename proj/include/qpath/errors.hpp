#pragma once

#include <stdexcept>
#include <string>

namespace qpath {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input outside the engine's representable range (dimension cap, bad letter, ...).
struct RangeError : Error {
    using Error::Error;
};

// Operation restricted to a specific dimension (e.g. the Q3 B-set).
struct DimensionError : Error {
    using Error::Error;
};

struct EmptyWordError : Error {
    using Error::Error;
};

// A terminal vertex coincides with a deleted vertex.
struct OverlapError : Error {
    using Error::Error;
};

// No splitting coordinate satisfies the separation/co-location constraints.
struct NoAxisError : Error {
    using Error::Error;
};

// No bridge candidate survives the avoid set.  Signals a broken case
// analysis in the caller, not a user error.
struct NoBridgeError : Error {
    using Error::Error;
};

// Surgery endpoints do not line up.
struct AssemblyError : Error {
    using Error::Error;
};

// Dimension below the lemma's proven bound.
struct ThresholdError : Error {
    using Error::Error;
};

// A side condition of the lemma fails.
struct HypothesisError : Error {
    using Error::Error;
};

// The requested object provably does not exist (B-set cases and friends).
struct InfeasibleError : Error {
    using Error::Error;
};

// No proof case applies.  Always an engine bug.
struct InternalCaseError : Error {
    using Error::Error;
};

// A reduction was attempted although its counting inequality fails.
struct GateError : Error {
    using Error::Error;
};

} // namespace qpath
