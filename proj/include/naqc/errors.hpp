#pragma once

#include <stdexcept>
#include <string>

namespace naqc {

/// Bloch vector lies outside the unit ball (no valid density matrix).
struct BlochOutOfBall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Matrix fails the Hermiticity / unit-trace / positivity checks of a state.
struct NotAState : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Matrix is not Hermitian within tolerance.
struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Eigenvalue below the rounding floor where a PSD matrix was required.
struct NegativeEigenvalue : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Scalar argument outside its documented domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Filter angle makes a diagonal entry of F(theta) infinite.
struct SingularFilter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Filtered state has (numerically) vanished trace.
struct ZeroTrace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bisection target is never crossed on the search interval.
struct NoCrossing : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// State commutes with the generator; no speed-limit bound exists.
struct StationaryState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace naqc
