#pragma once

#include "raodist/family.hpp"
#include "raodist/quadrature.hpp"

namespace raodist {

/// Fisher matrix from the defining expectation E[ds_i ds_j] of score
/// products, with scores taken by finite differences of the log-density
/// (relative step 1e-6; one-sided where the support depends on the
/// parameter). Continuous families integrate through the family's
/// quadrature map; discrete families sum over support_points.
Mat numeric_fisher_expectation(const ParamPoint& p,
                               const QuadratureScheme& scheme = {});

/// Fisher matrix as -E[d^2 l], the negated expected Hessian of the
/// log-density. Valid only for parameter-independent support; throws
/// UnsupportedError for Pareto and the power function, whose Hessian form
/// would produce a fake metric.
Mat numeric_fisher_hessian(const ParamPoint& p,
                           const QuadratureScheme& scheme = {});

/// Length of a polyline under the Fisher metric: composite quadrature of
/// sqrt(dxi^T G(xi) dxi) with the analytic Fisher matrix evaluated at
/// segment midpoints.
double path_length(const FamilyPtr& family, const std::vector<Vec>& knots);

/// Christoffel symbols of the second kind at an interior point, from
/// central finite differences of the analytic metric:
/// Gamma^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij).
/// entries[k](i, j), symmetric in (i, j). step <= 0 selects the default
/// max(1e-5, 1e-5 |coord|) per coordinate.
std::vector<Mat> christoffel_fd(const ParamPoint& p, double step = 0.0);

/// Distance by discrete-energy minimisation over an interior-knot
/// polyline: gradient descent with backtracking on sum |dxi|^2_G,
/// initialised on the straight segment and refined coarse-to-fine up to
/// `knots` segments. Returns the path_length of the optimised polyline,
/// an upper bound converging to the distance. Throws NonConvergenceError
/// if the energy decrease stalls above tolerance within `iters`.
double geodesic_bvp_distance(const ParamPoint& p, const ParamPoint& q,
                             int knots = 64, int iters = 5000);

/// Cross-check mode: shooting with RK4 on the geodesic equation and a
/// damped Newton iteration on the initial velocity. Not the acceptance
/// path; energy minimisation is the robust method near boundaries.
double geodesic_shooting_distance(const ParamPoint& p, const ParamPoint& q);

/// D_KL(p || q) / (d(p,q)^2 / 2) for the families with closed-form KL
/// (gaussian, exponential, poisson, categorical). The ratio tends to 1 as
/// q -> p. Throws UnsupportedError for other families and DegenerateError
/// at p = q.
double kl_local_ratio(const ParamPoint& p, const ParamPoint& q);

} // namespace raodist
