#pragma once

#include "raodist/types.hpp"

#include <functional>
#include <vector>

namespace raodist {

/// Tolerances of the numeric oracle's integration schemes.
struct QuadratureScheme {
    double abs_tol = 1e-10;      ///< adaptive-interval absolute tolerance
    int max_subdivisions = 16384;///< interval budget per integral
    double tail_mass = 1e-12;    ///< discrete-sum truncation bound
    double noise_rel = 3e-7;     ///< integrand roundoff floor, relative to its peak
};

/// Adaptive Simpson integration of a vector-valued integrand over [lo, hi],
/// refining wherever any component's local error estimate exceeds its
/// share of abs_tol. Throws QuadratureError when the subdivision budget is
/// exhausted with the error still above tolerance.
///
/// noise_rel declares the integrand's roundoff floor, relative to each
/// component's own peak magnitude. Integrands built from finite differences
/// cannot be evaluated more accurately than that floor, so a component whose
/// error estimate has stalled below noise_rel * peak_k * width is accepted;
/// the extra error this admits in component k is bounded by
/// noise_rel * peak_k * total width. The floor is tracked per component so
/// that one large component cannot loosen the criterion for small ones, and
/// the peaks are primed by a coarse scan of the whole domain so the floor
/// is meaningful even in pieces refined before the bulk of the mass.
/// Zero keeps the strict width-proportional criterion only.
Vec integrate_adaptive(const std::function<Vec(double)>& f,
                       double lo, double hi,
                       double abs_tol, int max_subdivisions,
                       double noise_rel = 0.0);

/// Same, seeded with interior breakpoints (integrand kinks, mass bumps).
Vec integrate_adaptive(const std::function<Vec(double)>& f,
                       const std::vector<double>& points,
                       double abs_tol, int max_subdivisions,
                       double noise_rel = 0.0);

} // namespace raodist
