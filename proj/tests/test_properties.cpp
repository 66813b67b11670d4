#include "doctest.h"

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "raodist/family.hpp"

using namespace raodist;

namespace {

std::vector<FamilyPtr> all_instances() {
    return {
        make_family("gaussian"),
        make_family("laplace"),
        make_family("generalized_gaussian", {{"beta", 1.5}}),
        make_family("logistic"),
        make_family("cauchy"),
        make_family("student_t", {{"nu", 3.0}}),
        make_family("exponential"),
        make_family("rayleigh"),
        make_family("erlang", {{"k", 3.0}}),
        make_family("log_gaussian"),
        make_family("inverse_gaussian"),
        make_family("gumbel"),
        make_family("frechet"),
        make_family("weibull"),
        make_family("reversed_weibull"),
        make_family("pareto"),
        make_family("power_function"),
        make_family("binomial", {{"n", 8.0}}),
        make_family("poisson"),
        make_family("geometric"),
        make_family("negative_binomial", {{"r", 4.0}}),
        make_family("categorical", {{"n", 3.0}}),
        make_family("multinomial", {{"n", 3.0}, {"trials", 5.0}}),
        make_family("negative_multinomial", {{"n", 3.0}, {"x_n", 2.0}}),
        make_family("wishart", {{"m", 2.0}, {"n", 4.0}}),
        make_family("inverse_wishart", {{"m", 3.0}, {"n", 5.0}}),
    };
}

} // namespace

TEST_CASE("metric axioms over seeded parameter triples") {
    // Per family: exact symmetry, exact identity at coordinate equality,
    // nonnegativity, and the triangle inequality with 1e-9 slack.
    for (const auto& f : all_instances()) {
        CAPTURE(f->id());
        std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(f->id().size()) +
                            static_cast<unsigned>(f->id()[0]));
        int worst_hits = 0;
        double worst_violation = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            ParamPoint p{f, f->sample_point(rng)};
            ParamPoint q{f, f->sample_point(rng)};
            ParamPoint r{f, f->sample_point(rng)};

            const double dpq = distance(p, q);
            const double dqp = distance(q, p);
            const double dqr = distance(q, r);
            const double dpr = distance(p, r);

            if (!(dpq == dqp)) ++worst_hits;
            if (!(dpq >= 0.0) || !std::isfinite(dpq)) ++worst_hits;
            if (!(distance(p, p) == 0.0)) ++worst_hits;

            const double violation = dpr - (dpq + dqr);
            worst_violation = std::max(worst_violation, violation);
        }
        CHECK(worst_hits == 0);
        CHECK(worst_violation <= 1e-9);
    }
}

TEST_CASE("distance is positive for distinct sampled points") {
    for (const auto& f : all_instances()) {
        CAPTURE(f->id());
        std::mt19937_64 rng(777);
        for (int trial = 0; trial < 20; ++trial) {
            const Vec a = f->sample_point(rng);
            const Vec b = f->sample_point(rng);
            if (a == b) continue;
            CHECK(distance({f, a}, {f, b}) > 0.0);
        }
    }
}
