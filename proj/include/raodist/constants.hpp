#pragma once

#include <cmath>
#include <limits>

namespace raodist {

/// Shared numeric constants. euler_gamma is the double nearest to the
/// Euler-Mascheroni constant and is the single source used by every
/// formula that needs it; nothing recomputes it.
struct Constants {
    static constexpr double euler_gamma = 0.5772156649015329;
    static constexpr double pi = 3.141592653589793;
    /// Boundary clamp for inverse hyperbolic/trigonometric arguments.
    static constexpr double clamp_eps = 1e-12;
};

/// acosh with the argument clamped up to 1. Rounding routinely produces
/// arguments like 1 - 2e-16 for coincident points; those mean 0.
inline double clamped_acosh(double x) {
    return std::acosh(x < 1.0 ? 1.0 : x);
}

/// acos with the argument clamped into [-1, 1].
inline double clamped_acos(double x) {
    if (x > 1.0) x = 1.0;
    if (x < -1.0) x = -1.0;
    return std::acos(x);
}

/// atanh on [0, 1 - clamp_eps]. Negative arguments clamp to 0; arguments
/// beyond 1 - clamp_eps indicate a manifold-boundary coordinate and map
/// to +infinity instead of an error.
inline double clamped_atanh(double x) {
    if (x < 0.0) x = 0.0;
    if (x > 1.0 - Constants::clamp_eps)
        return std::numeric_limits<double>::infinity();
    return std::atanh(x);
}

} // namespace raodist
