#include "raodist/hyperbolic.hpp"

#include "raodist/constants.hpp"
#include "raodist/errors.hpp"

#include <cassert>
#include <cmath>

namespace raodist {

HalfPlaneForms halfplane_distance_forms(double x1, double y1, double x2, double y2) {
    const double dx = x1 - x2;
    const double dy = y1 - y2;
    const double chord2 = dx * dx + dy * dy;          // |p - q|^2
    const double conj2 = dx * dx + (y1 + y2) * (y1 + y2); // |p - conj(q)|^2

    HalfPlaneForms f;
    const double A = std::sqrt(conj2);
    const double B = std::sqrt(chord2);
    // A > B always (y1, y2 > 0), so the ratio is finite for p != q.
    f.log_form = std::log((A + B) / (A - B));
    f.acosh_form = clamped_acosh(1.0 + chord2 / (2.0 * y1 * y2));
    f.atanh_form = 2.0 * clamped_atanh(std::sqrt(chord2 / conj2));
    return f;
}

double halfplane_distance(double x1, double y1, double x2, double y2) {
    const double dx = x1 - x2;
    const double dy = y1 - y2;
    const double d = clamped_acosh(1.0 + (dx * dx + dy * dy) / (2.0 * y1 * y2));
#ifndef NDEBUG
    HalfPlaneForms f = halfplane_distance_forms(x1, y1, x2, y2);
    const double scale = std::fmax(d, 1e-30);
    assert(std::fabs(f.log_form - d) <= 1e-12 * scale + 1e-15);
    assert(std::fabs(f.atanh_form - d) <= 1e-12 * scale + 1e-15);
#endif
    return d;
}

double halfspace_distance(const Vec& p, const Vec& q) {
    if (p.size() != q.size())
        throw DimensionError("half-space points must have equal dimension");
    const int n = static_cast<int>(p.size());
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double d = p[i] - q[i];
        ss += d * d;
    }
    return clamped_acosh(1.0 + ss / (2.0 * p[n - 1] * q[n - 1]));
}

double hemisphere_distance(const Vec& p, const Vec& q, double r) {
    if (p.size() != q.size())
        throw DimensionError("hemisphere points must have equal dimension");
    const double r2 = r * r;
    if (std::fabs(p.squaredNorm() - r2) > 1e-9 || std::fabs(q.squaredNorm() - r2) > 1e-9)
        throw NotOnSphereError("point is not on the radius-r half-sphere");
    const int n = static_cast<int>(p.size()) - 1;
    double dot = 0.0;
    for (int i = 0; i < n; ++i) dot += p[i] * q[i];
    return clamped_acosh((1.0 - dot / r2) / (p[n] * q[n] / r2));
}

Vec hemisphere_to_halfspace(const Vec& p, double r) {
    const int n = static_cast<int>(p.size()) - 1;
    Vec out(n);
    const double w = p[0] / r + 1.0;
    for (int i = 0; i < n; ++i) out[i] = 2.0 * (p[i + 1] / r) / w;
    return out;
}

double scaled_halfplane_distance(const ScaledMetricSpec& spec,
                                 double x1, double y1, double x2, double y2) {
    const double dx2 = (x1 - x2) * (x1 - x2);
    const double dy2 = (y1 - y2) * (y1 - y2);
    const double num = spec.a * dx2 + spec.b * dy2;
    const double den = spec.a * dx2 + spec.b * (y1 + y2) * (y1 + y2);
    return 2.0 * std::sqrt(spec.b) * clamped_atanh(std::sqrt(num / den));
}

std::pair<double, double> scaled_geodesic_point(const ScaledMetricSpec& spec,
                                                double x1, double y1,
                                                double x2, double y2, double t) {
    if (t == 0.0) return {x1, y1};
    if (t == 1.0) return {x2, y2};
    const double sa = std::sqrt(spec.a);
    const double sb = std::sqrt(spec.b);
    // Work in the rescaled plane (X, Y) = (sqrt(a) x, sqrt(b) y), where the
    // metric is hyperbolic and geodesics are vertical lines or semicircles.
    const double X1 = sa * x1, Y1 = sb * y1;
    const double X2 = sa * x2, Y2 = sb * y2;
    const double span = std::fmax(std::fmax(std::fabs(X1), std::fabs(X2)),
                                  std::fmax(Y1, Y2));
    if (std::fabs(X1 - X2) <= 1e-12 * std::fmax(span, 1.0)) {
        // Vertical segment: log-linear in y.
        return {x1, y1 * std::pow(y2 / y1, t)};
    }
    // Semicircle centre on the X axis; the radius follows from either
    // endpoint, which sidesteps cancellation in the centre formula.
    const double C = (X1 * X1 + Y1 * Y1 - X2 * X2 - Y2 * Y2) / (2.0 * (X1 - X2));
    const double R = std::hypot(X1 - C, Y1);
    const double phi1 = std::atan2(Y1, X1 - C);
    const double phi2 = std::atan2(Y2, X2 - C);
    const double phi = (1.0 - t) * phi1 + t * phi2;
    return {(C + R * std::cos(phi)) / sa, R * std::sin(phi) / sb};
}

} // namespace raodist
