#pragma once

#include <Eigen/Dense>
#include <functional>

namespace raodist {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Constants (a, b) of a scaled Poincare half-plane metric
/// ds^2 = (a dx^2 + b dy^2) / y^2.
struct ScaledMetricSpec {
    double a = 1.0;
    double b = 1.0;
};

/// Isometric chart of a two-parameter family into a scaled half-plane:
/// coordinates (u, v) with v > 0 plus the metric constants. The pullback
/// of diag(a, b)/v^2 through to_chart reproduces the family's Fisher
/// matrix; from_chart inverts to_chart on the family's domain.
struct ChartMap {
    std::function<std::pair<double, double>(const Vec&)> to_chart;
    std::function<Vec(double, double)> from_chart;
    ScaledMetricSpec spec;
};

} // namespace raodist
