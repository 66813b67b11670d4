#include "doctest.h"

#include <cmath>
#include <initializer_list>
#include <map>
#include <string>

#include "raodist/errors.hpp"
#include "raodist/family.hpp"

using namespace raodist;

namespace {

Vec vec(std::initializer_list<double> xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

// One representative instance per registered base name.
FamilyPtr instance(const std::string& name) {
    std::map<std::string, double> h;
    if (name == "generalized_gaussian") h["beta"] = 1.5;
    if (name == "student_t") h["nu"] = 3;
    if (name == "erlang") h["k"] = 3;
    if (name == "binomial") h["n"] = 8;
    if (name == "negative_binomial") h["r"] = 4;
    if (name == "multinomial") h["trials"] = 5;
    if (name == "negative_multinomial") h["x_n"] = 2;
    if (name == "wishart" || name == "inverse_wishart") h["n"] = 4;
    return make_family(name, h);
}

} // namespace

TEST_CASE("every registered family instantiates and samples") {
    const auto names = registered_families();
    CHECK(names.size() == 26);
    std::mt19937_64 rng(12345);
    for (const auto& name : names) {
        CAPTURE(name);
        FamilyPtr f = instance(name);
        CHECK(f->name() == name);
        CHECK(f->id().substr(0, name.size()) == name);
        CHECK(f->dim() >= 1);
        for (int i = 0; i < 5; ++i) {
            const Vec p = f->sample_point(rng);
            CHECK(p.size() == f->dim());
            CHECK(f->in_domain(p));
            const Mat g = f->fisher(p);
            CHECK(g.rows() == f->dim());
            CHECK((g - g.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * g.norm());
            CHECK(g.allFinite());
        }
    }
}

TEST_CASE("family ids carry the hyperparameters") {
    CHECK(instance("binomial")->id() == "binomial(n=8)");
    CHECK(instance("erlang")->id() == "erlang(k=3)");
    CHECK(instance("negative_binomial")->id() == "negative_binomial(r=4)");
    CHECK(instance("multinomial")->id() == "multinomial(n=3,trials=5)");
    CHECK(instance("negative_multinomial")->id() ==
          "negative_multinomial(n=3,x_n=2)");
    CHECK(instance("wishart")->id() == "wishart(m=2,n=4)");
    CHECK(instance("generalized_gaussian")->id() ==
          "generalized_gaussian(beta=1.5)");
    CHECK(instance("student_t")->id() == "student_t(nu=3)");
    CHECK(instance("gaussian")->id() == "gaussian");
}

TEST_CASE("make_family rejects bad requests") {
    CHECK_THROWS_AS(make_family("triangular"), DomainError);
    CHECK_THROWS_AS(make_family("binomial"), DomainError);           // n missing
    CHECK_THROWS_AS(make_family("multinomial"), DomainError);        // trials missing
    CHECK_THROWS_AS(make_family("binomial", {{"n", 4.5}}), DomainError);
    CHECK_THROWS_AS(make_family("erlang", {{"k", 0.0}}), DomainError);
    CHECK_THROWS_AS(make_family("generalized_gaussian", {{"beta", 0.5}}),
                    DomainError);
    CHECK_THROWS_AS(make_family("wishart", {{"m", 2.0}, {"n", 0.5}}),
                    DomainError);  // dof must exceed m - 1
    CHECK_NOTHROW(make_family("wishart", {{"m", 2.0}, {"n", 1.5}}));
}

TEST_CASE("validate_params names the violated constraint") {
    auto gaussian = make_family("gaussian");
    CHECK_THROWS_AS(validate_params(gaussian, vec({0.0, -1.0})), DomainError);
    CHECK_THROWS_AS(validate_params(gaussian, vec({0.0})), DomainError);
    try {
        validate_params(gaussian, vec({0.0, 0.0}));
        CHECK(false);
    } catch (const DomainError& e) {
        // The message names the offending parameter.
        CHECK(std::string(e.what()).find("sigma") != std::string::npos);
    }

    auto cat = make_family("categorical", {{"n", 3.0}});
    // Full probability vectors are accepted and reduced to free coordinates.
    auto p = validate_params(cat, vec({0.7, 0.2, 0.1}));
    CHECK(p.coords.size() == 2);
    CHECK(std::abs(p.coords[0] - 0.7) < 1e-15);
    CHECK(std::abs(p.coords[1] - 0.2) < 1e-15);
    // Free coordinates pass through unchanged.
    auto q = validate_params(cat, vec({0.7, 0.2}));
    CHECK(q.coords == vec({0.7, 0.2}));
    // A full vector that misses the simplex by more than the tolerance.
    CHECK_THROWS_AS(validate_params(cat, vec({0.7, 0.2, 0.2})), DomainError);
    CHECK_THROWS_AS(validate_params(cat, vec({0.7, 0.3, 0.0})), DomainError);
    CHECK_THROWS_AS(validate_params(cat, vec({0.9, 0.2})), DomainError);

    auto wishart = make_family("wishart", {{"m", 2.0}, {"n", 4.0}});
    // Row-major full matrices are accepted when symmetric.
    auto w = validate_params(wishart, vec({2.0, 0.5, 0.5, 1.0}));
    CHECK(w.coords == vec({2.0, 0.5, 1.0}));
    CHECK_THROWS_AS(validate_params(wishart, vec({2.0, 0.5, 0.4, 1.0})),
                    DomainError);
    CHECK_THROWS_AS(validate_params(wishart, vec({1.0, 2.0, 1.0})),
                    DomainError);  // not positive definite
}

TEST_CASE("distance: identity, mismatch, symmetry of the bound API") {
    auto gaussian = make_family("gaussian");
    auto p = validate_params(gaussian, vec({2.0, 0.5}));
    auto q = validate_params(gaussian, vec({5.0, 1.0}));
    CHECK(distance(p, p) == 0.0);
    CHECK(distance(p, q) == distance(q, p));
    CHECK(distance(p, q) > 0.0);

    auto laplace = make_family("laplace");
    auto r = validate_params(laplace, vec({2.0, 0.5}));
    CHECK_THROWS_AS(distance(p, r), MismatchError);

    auto b4 = validate_params(make_family("binomial", {{"n", 4.0}}), vec({0.3}));
    auto b5 = validate_params(make_family("binomial", {{"n", 5.0}}), vec({0.3}));
    CHECK_THROWS_AS(distance(b4, b5), MismatchError);
    try {
        distance(b4, b5);
    } catch (const MismatchError& e) {
        CHECK(std::string(e.what()).find("binomial(n=4)") != std::string::npos);
        CHECK(std::string(e.what()).find("binomial(n=5)") != std::string::npos);
    }
}

TEST_CASE("geodesic_path contract") {
    auto gaussian = make_family("gaussian");
    auto p = validate_params(gaussian, vec({2.0, 0.5}));
    auto q = validate_params(gaussian, vec({5.0, 1.0}));

    auto path = geodesic_path(p, q, 10);
    CHECK(path.size() == 11);
    CHECK(path.front() == p.coords);
    CHECK(path.back() == q.coords);
    for (const auto& pt : path) CHECK(gaussian->in_domain(pt));

    auto two = geodesic_path(p, q, 1);
    CHECK(two.size() == 2);
    CHECK_THROWS_AS(geodesic_path(p, q, 0), DomainError);
}

TEST_CASE("log_density throws SupportError off the support") {
    auto expo = validate_params(make_family("exponential"), vec({2.0}));
    CHECK_THROWS_AS(log_density(expo, vec({-1.0})), SupportError);
    CHECK(std::abs(log_density(expo, vec({0.5})) -
                   (std::log(2.0) - 2.0 * 0.5)) < 1e-15);

    auto binom = validate_params(make_family("binomial", {{"n", 4.0}}),
                                 vec({0.3}));
    CHECK_THROWS_AS(log_density(binom, vec({5.0})), SupportError);
    CHECK_THROWS_AS(log_density(binom, vec({-1.0})), SupportError);
}
