#pragma once

#include <stdexcept>
#include <string>

namespace lustab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// State is not invariant under qubit permutations within tolerance.
struct NotSymmetricError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

/// State/partition file could not be parsed.
struct ParseError : Error {
    using Error::Error;
};

/// Residual qubits could not be partitioned into su(2) blocks; usually a
/// numerical rank misjudgment, retry with adjusted tolerance.
struct MalformedAlgebraError : Error {
    using Error::Error;
};

struct ClassificationError : Error {
    using Error::Error;
};

/// Majorana configuration has continuous rotational symmetry (all points
/// equal, or all on one axis); the state belongs to a continuous-stabilizer
/// class and must be routed through the classifier instead.
struct DegenerateConfigurationError : Error {
    using Error::Error;
};

struct UnrecognizedGroupError : Error {
    using Error::Error;
};

}  // namespace lustab
