#include "doctest.h"

#include <cmath>
#include <initializer_list>
#include <string>

#include "raodist/errors.hpp"
#include "raodist/families_elliptical.hpp"
#include "raodist/product.hpp"

using namespace raodist;

namespace {

Vec vec(std::initializer_list<double> xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

} // namespace

TEST_CASE("product distance is the Pythagorean combination") {
    auto gauss = make_gaussian();
    auto pois = make_family("poisson");
    auto cat = make_family("categorical", {{"n", 3.0}});

    ProductPoint p{{validate_params(gauss, vec({2, 0.5})),
                    validate_params(pois, vec({1.0})),
                    validate_params(cat, vec({0.7, 0.2, 0.1}))}};
    ProductPoint q{{validate_params(gauss, vec({5, 1})),
                    validate_params(pois, vec({4.0})),
                    validate_params(cat, vec({0.1, 0.3, 0.6}))}};

    const double d1 = distance(p.components[0], q.components[0]);
    const double d2 = distance(p.components[1], q.components[1]);
    const double d3 = distance(p.components[2], q.components[2]);
    const double expect = std::sqrt(d1 * d1 + d2 * d2 + d3 * d3);
    CHECK(std::abs(product_distance(p, q) - expect) <= 1e-15 * expect);

    // Empty products are a single point.
    CHECK(product_distance(ProductPoint{}, ProductPoint{}) == 0.0);
}

TEST_CASE("independent normal pairs with equal component displacement") {
    auto gauss = make_gaussian();
    ProductPoint p{{validate_params(gauss, vec({2, 0.5})),
                    validate_params(gauss, vec({2, 0.5}))}};
    ProductPoint q{{validate_params(gauss, vec({5, 1})),
                    validate_params(gauss, vec({5, 1}))}};
    CHECK(std::abs(product_distance(p, q) - 4.8693967307517068) < 1e-13);
}

TEST_CASE("diagonal-normal product in closed form") {
    // Each axis contributes 2 sqrt(2) atanh r_i; the product collapses to
    // 2 sqrt(2) sqrt(sum atanh^2 r_i).
    auto gauss = make_gaussian();
    const double mu1[] = {0.0, 1.0, -2.0}, s1[] = {1.0, 0.5, 2.0};
    const double mu2[] = {0.5, -1.0, 0.0}, s2[] = {2.0, 0.8, 1.5};
    ProductPoint p, q;
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
        p.components.push_back(validate_params(gauss, vec({mu1[i], s1[i]})));
        q.components.push_back(validate_params(gauss, vec({mu2[i], s2[i]})));
        const double dm = mu1[i] - mu2[i], ds = s1[i] - s2[i],
                     ss = s1[i] + s2[i];
        const double r =
            std::sqrt((dm * dm + 2 * ds * ds) / (dm * dm + 2 * ss * ss));
        acc += std::atanh(r) * std::atanh(r);
    }
    const double expect = 2.0 * std::sqrt(2.0) * std::sqrt(acc);
    const double got = product_distance(p, q);
    CHECK(std::abs(got - expect) <= 1e-12 * expect);
}

TEST_CASE("mismatched products name the offending component") {
    auto gauss = make_gaussian();
    auto laplace = make_laplace();

    ProductPoint p{{validate_params(gauss, vec({0, 1}))}};
    ProductPoint q{{validate_params(gauss, vec({0, 1})),
                    validate_params(gauss, vec({1, 1}))}};
    CHECK_THROWS_AS(product_distance(p, q), MismatchError);

    ProductPoint r{{validate_params(gauss, vec({0, 1})),
                    validate_params(laplace, vec({1, 1}))}};
    try {
        product_distance(q, r);
        CHECK(false);
    } catch (const MismatchError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("component 1") != std::string::npos);
        CHECK(msg.find("laplace") != std::string::npos);
    }
}
