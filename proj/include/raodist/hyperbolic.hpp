#pragma once

#include "raodist/types.hpp"

namespace raodist {

/// The three equivalent closed forms of the Poincare half-plane distance,
/// returned together so tests can assert their mutual agreement.
struct HalfPlaneForms {
    double log_form;    ///< ln((A + B)/(A - B)), A^2 = dx^2 + (y1+y2)^2, B = |p-q|
    double acosh_form;  ///< acosh(1 + (dx^2 + dy^2)/(2 y1 y2))
    double atanh_form;  ///< 2 atanh sqrt((dx^2 + dy^2)/(dx^2 + (y1+y2)^2))
};

HalfPlaneForms halfplane_distance_forms(double x1, double y1, double x2, double y2);

/// Hyperbolic distance in the upper half-plane {(x, y) : y > 0}, metric
/// (dx^2 + dy^2)/y^2. Evaluates the acosh form.
double halfplane_distance(double x1, double y1, double x2, double y2);

/// Hyperbolic distance in the half-space H^n (last coordinate > 0):
/// acosh(1 + sum (x_i - y_i)^2 / (2 x_n y_n)). Invariant under dilation.
/// Throws DimensionError on size mismatch.
double halfspace_distance(const Vec& p, const Vec& q);

/// Hyperbolic distance between points of the radius-r half-sphere
/// {sum x_i^2 = r^2, last coordinate > 0} in R^(n+1):
/// acosh((1 - sum_{i<=n} x_i y_i / r^2) / (x_{n+1} y_{n+1} / r^2)).
/// Throws NotOnSphereError if either point misses the sphere by more
/// than 1e-9 in sum x^2 - r^2.
double hemisphere_distance(const Vec& p, const Vec& q, double r);

/// Central projection of a half-sphere point onto the half-space model:
/// normalise to the unit sphere, then (x_1,...,x_{n+1}) maps to
/// (2 x_2/(x_1 + 1), ..., 2 x_{n+1}/(x_1 + 1)).
Vec hemisphere_to_halfspace(const Vec& p, double r);

/// Distance under the scaled metric (a dx^2 + b dy^2)/y^2, evaluated via
/// the 2 sqrt(b) atanh form; equals sqrt(b) times the half-plane distance
/// of the points scaled by (sqrt(a), sqrt(b)). Returns +infinity when the
/// atanh argument clamps at the boundary.
double scaled_halfplane_distance(const ScaledMetricSpec& spec,
                                 double x1, double y1, double x2, double y2);

/// Point at parameter t in [0, 1] on the minimising geodesic of the scaled
/// metric. Geodesics are vertical segments (x1 == x2, log-linear in y) or
/// half-ellipses; the ellipse is traversed by linear interpolation of the
/// angle between the endpoint angles. Endpoints are reproduced exactly at
/// t = 0 and t = 1.
std::pair<double, double> scaled_geodesic_point(const ScaledMetricSpec& spec,
                                                double x1, double y1,
                                                double x2, double y2, double t);

} // namespace raodist
