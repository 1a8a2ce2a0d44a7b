#pragma once

/**
 * @file errors.hpp
 * @brief Exception hierarchy shared by every part of the library.
 *
 * The CLI maps each category onto a distinct exit code, so callers that want
 * scriptable behaviour should catch the most specific type they care about.
 */

#include <stdexcept>
#include <string>

namespace tilt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input (algebra files, module or complex files).
struct InputError : Error {
    using Error::Error;
};

/// An enumeration stopped at its bound before it could certify completeness.
struct InconclusiveError : Error {
    using Error::Error;
};

/// A configurable resource guard was exceeded.
struct LimitError : Error {
    using Error::Error;
};

/// A well-formed request that cannot be answered (bad θ, unknown summand, ...).
struct QueryError : Error {
    using Error::Error;
};

}  // namespace tilt
