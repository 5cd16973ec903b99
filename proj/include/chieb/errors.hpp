#pragma once

#include <stdexcept>
#include <string>

namespace chieb {

/// Thrown when a response function is evaluated at (or numerically too
/// close to) an undamped resonance. Distinct from std::domain_error so
/// callers can map it to a dedicated exit status.
struct pole_error : std::runtime_error {
    double omega; ///< offending frequency, rad/s (SI convention of the caller)

    pole_error(double omega_, const std::string& what_)
        : std::runtime_error(what_), omega(omega_) {}
};

} // namespace chieb
