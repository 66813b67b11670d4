#include "raodist/product.hpp"

#include <cmath>

namespace raodist {

double product_distance(const ProductPoint& p, const ProductPoint& q) {
    if (p.components.size() != q.components.size())
        throw MismatchError("component counts differ: " +
                            std::to_string(p.components.size()) + " vs " +
                            std::to_string(q.components.size()));
    double sq = 0.0;
    for (std::size_t i = 0; i < p.components.size(); ++i) {
        const auto& a = p.components[i];
        const auto& b = q.components[i];
        if (a.family->id() != b.family->id())
            throw MismatchError("component " + std::to_string(i) +
                                ": family mismatch: " + a.family->id() + " vs " +
                                b.family->id());
        const double d = distance(a, b);
        sq += d * d;
    }
    return std::sqrt(sq);
}

} // namespace raodist
