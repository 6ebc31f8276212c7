#pragma once

#include <stdexcept>
#include <string>

namespace charval {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Breadth-first closure passed the configured element cap.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// A group spec string or catalog line that does not describe a buildable group.
struct InvalidSpec : Error {
    using Error::Error;
};

/// Embedding requested into a conductor that the source conductor does not divide.
struct ConductorMismatch : Error {
    using Error::Error;
};

/// Common eigenspace refinement did not terminate in one-dimensional spaces.
struct SplitFailure : Error {
    using Error::Error;
};

/// A lifted Fourier coefficient fell outside [0, degree].
struct LiftOutOfRange : Error {
    using Error::Error;
};

/// An exact character-table identity (orthogonality, degree sum, ...) failed.
struct VerificationFailure : Error {
    using Error::Error;
};

struct NotNormal : Error {
    using Error::Error;
};

struct NotSubgroup : Error {
    using Error::Error;
};

} // namespace charval
