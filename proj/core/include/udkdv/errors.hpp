#pragma once

#include <stdexcept>
#include <string>

namespace udkdv {

/// Malformed input text (state lines, rationals, expression files, JSON).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Eigenfunction construction requested with omega below the maximal
/// soliton mass of the state.
struct MassTooSmallError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// Undressing requested on a state without solitons (omega_max = 0).
struct NoSolitonError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// Background T-function requested for a state that does not translate
/// at speed 1.
struct NotBackgroundError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// Operation applied to an eigenfunction of the wrong kind.
struct KindMismatchError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// A relation that is a theorem of the evolution failed numerically.
/// Signals a bug, never bad user input.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace udkdv
