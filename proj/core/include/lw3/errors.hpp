#pragma once

#include <stdexcept>
#include <string>

namespace lw3 {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition of an operation was violated by the caller.
struct ContractViolation : Error {
    using Error::Error;
};

/// Binary operation on scalars carrying different eps tags.
struct EpsMismatch : ContractViolation {
    using ContractViolation::ContractViolation;
};

/// Division by a scalar on (or numerically near) the null cone.
struct NullDivisor : Error {
    using Error::Error;
};

/// Moebius denominator b̄z + ā landed on the null cone.
struct DenominatorOnNullCone : NullDivisor {
    using NullDivisor::NullDivisor;
};

/// Stereographic projection evaluated at (or near) its pole.
struct PoleError : Error {
    using Error::Error;
};

/// Stereographic unprojection where the defining denominator vanishes.
struct LightConeError : Error {
    using Error::Error;
};

/// A validated algebraic constraint failed (carries the residual in the message).
struct ConstraintViolation : Error {
    using Error::Error;
};

/// Chart evaluated at a node excluded as singular.
struct SingularNode : Error {
    using Error::Error;
};

/// Axis-aligned integration path crosses a singular node.
struct PathBlocked : Error {
    using Error::Error;
};

/// Loop integral of phi has a nonzero real period; domain is effectively
/// not simply connected.
struct PeriodDetected : Error {
    using Error::Error;
};

/// First fundamental form degenerate everywhere on the requested grid.
struct DegenerateMetric : Error {
    using Error::Error;
};

struct UnknownExample : Error {
    using Error::Error;
};

struct ParamConstraintViolation : Error {
    using Error::Error;
};

/// Mesh export found no valid node.
struct EmptyMesh : Error {
    using Error::Error;
};

}  // namespace lw3
