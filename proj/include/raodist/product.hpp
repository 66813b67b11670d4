#pragma once

#include "raodist/family.hpp"

namespace raodist {

/// A point on a product manifold: an ordered list of component points,
/// possibly from different families.
struct ProductPoint {
    std::vector<ParamPoint> components;
};

/// Pythagorean product distance sqrt(sum_i d_i(p_i, q_i)^2). Throws
/// MismatchError naming the offending index when component counts or
/// component families differ.
double product_distance(const ProductPoint& p, const ProductPoint& q);

} // namespace raodist
