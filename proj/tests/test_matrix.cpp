#include "doctest.h"

#include <cmath>
#include <initializer_list>
#include <random>

#include "raodist/errors.hpp"
#include "raodist/families_matrix.hpp"
#include "raodist/oracle.hpp"

using namespace raodist;

namespace {

Vec vec(std::initializer_list<double> xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

Mat mat2(double a, double b, double c, double d) {
    Mat m(2, 2);
    m << a, b, c, d;
    return m;
}

// Random SPD matrix with spectrum in [0.3, 4].
Mat random_spd(int m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = u(rng);
    Mat q = Eigen::HouseholderQR<Mat>(g).householderQ();
    Vec ev(m);
    for (int i = 0; i < m; ++i) ev[i] = 0.3 + 3.7 * (0.5 + 0.5 * u(rng));
    return q * ev.asDiagonal() * q.transpose();
}

} // namespace

TEST_CASE("vech, unvech and the duplication matrix") {
    Mat a(3, 3);
    a << 1, 2, 3, 2, 4, 5, 3, 5, 6;
    const Vec v = vech(a);
    CHECK(v.size() == 6);
    CHECK(v == vec({1, 2, 3, 4, 5, 6}));
    CHECK(unvech(v, 3) == a);

    const Mat d2 = duplication_matrix(2);
    CHECK(d2.rows() == 4);
    CHECK(d2.cols() == 3);
    Mat expect(4, 3);
    expect << 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1;
    CHECK(d2 == expect);

    // Defining property D vech(A) = vec(A) for symmetric A.
    const Mat d3 = duplication_matrix(3);
    Vec veca(9);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) veca[j * 3 + i] = a(i, j);
    CHECK((d3 * vech(a) - veca).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Wishart Fisher matrix in vech coordinates") {
    const Mat f = wishart_fisher_matrix(mat2(2, 0.5, 0.5, 1), 4.0);
    Mat expect(3, 3);
    expect << 0.6530612244897959, -0.6530612244897959, 0.16326530612244897,
        -0.6530612244897959, 2.9387755102040813, -1.3061224489795917,
        0.16326530612244897, -1.3061224489795917, 2.6122448979591835;
    CHECK((f - expect).cwiseAbs().maxCoeff() < 1e-13);

    // At Sigma = I the metric is (n/2) D^T D = (n/2) diag(1, 2, 1).
    const Mat fi = wishart_fisher_matrix(Mat::Identity(2, 2), 3.0);
    CHECK(std::abs(fi(0, 0) - 1.5) < 1e-14);
    CHECK(std::abs(fi(1, 1) - 3.0) < 1e-14);
    CHECK(std::abs(fi(2, 2) - 1.5) < 1e-14);
    CHECK(std::abs(fi(0, 1)) < 1e-14);
}

TEST_CASE("whitened eigenvalues agree with the characteristic polynomial") {
    const Mat s1 = mat2(2, 0.5, 0.5, 1), s2 = mat2(1, 0.2, 0.2, 3);
    const Vec ev = spd_geodesic_eigenvalues(s1, s2);
    CHECK(std::abs(ev[0] - 0.4995050353925612) < 1e-13);
    CHECK(std::abs(ev[1] - 3.3862092503217247) < 1e-13);

    const Vec cp = generalized_eigenvalues_charpoly(s1, s2);
    CHECK(std::abs(cp[0] - ev[0]) <= 1e-10);
    CHECK(std::abs(cp[1] - ev[1]) <= 1e-10);

    CHECK(std::abs(wishart_distance_matrix(s1, s2, 3.0) -
                   1.7188028367233699) < 1e-13);

    // m = 3: whitening versus the explicit cubic.
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        const Mat a = random_spd(3, rng), b = random_spd(3, rng);
        const Vec e1 = spd_geodesic_eigenvalues(a, b);
        const Vec e2 = generalized_eigenvalues_charpoly(a, b);
        REQUIRE(e1.size() == 3);
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(e1[i] - e2[i]) <= 1e-9 * std::max(1.0, e1[i]));
    }

    CHECK_THROWS_AS(spd_geodesic_eigenvalues(s1, random_spd(3, rng)),
                    DimensionError);
}

TEST_CASE("scatter-matrix distance properties") {
    auto w = make_wishart(2, 3.0);

    // Identity vs diag(2, 1/2): sqrt(3/2) * sqrt(2 log^2 2) = sqrt(3) log 2.
    const double d = distance(validate_params(w, vec({1, 0, 1})),
                              validate_params(w, vec({2, 0, 0.5})));
    CHECK(std::abs(d - 1.2005661338529437) < 1e-13);

    // Congruence invariance d(A S1 A^T, A S2 A^T) = d(S1, S2).
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Mat s1 = random_spd(2, rng), s2 = random_spd(2, rng);
    Mat a(2, 2);
    do {
        a << u(rng), u(rng), u(rng), u(rng);
    } while (std::abs(a.determinant()) < 0.1);
    const double base = wishart_distance_matrix(s1, s2, 3.0);
    const double cong =
        wishart_distance_matrix(a * s1 * a.transpose(), a * s2 * a.transpose(), 3.0);
    CHECK(std::abs(cong - base) <= 1e-9 * std::max(1.0, base));

    // Exact symmetry through the canonical argument ordering.
    const double fwd = wishart_distance_matrix(s1, s2, 3.0);
    const double rev = wishart_distance_matrix(s2, s1, 3.0);
    CHECK(fwd == rev);

    // One-dimensional reduction: scalar Wishart is a scale family.
    auto w1 = make_wishart(1, 5.0);
    const double d1 = distance(validate_params(w1, vec({1.0})),
                               validate_params(w1, vec({4.0})));
    CHECK(std::abs(d1 - std::sqrt(2.5) * std::log(4.0)) <= 1e-15 * d1);
}

TEST_CASE("inverse Wishart shares the Wishart geometry") {
    auto w = make_wishart(2, 4.0);
    auto iw = make_inverse_wishart(2, 4.0);
    const Vec a = vec({2, 0.5, 1}), b = vec({1, 0.2, 3});
    CHECK(distance(validate_params(w, a), validate_params(w, b)) ==
          distance(validate_params(iw, a), validate_params(iw, b)));
    CHECK((w->fisher(a) - iw->fisher(a)).cwiseAbs().maxCoeff() == 0.0);

    // The densities differ: same metric, different models.
    Mat x = mat2(1.5, 0.3, 0.3, 2.0);
    const double lw = w->log_density(a, vech(x));
    const double liw = iw->log_density(a, vech(x));
    CHECK(std::isfinite(lw));
    CHECK(std::isfinite(liw));
    CHECK(lw != liw);
}

TEST_CASE("scatter geodesics interpolate the eigen-flow") {
    auto w = make_wishart(2, 3.0);
    auto p = validate_params(w, vec({2, 0.5, 1}));
    auto q = validate_params(w, vec({1, 0.2, 3}));
    const double d = distance(p, q);

    auto path = geodesic_path(p, q, 128);
    CHECK(path.size() == 129);
    CHECK(path.front() == p.coords);
    CHECK(path.back() == q.coords);
    for (const auto& pt : path) CHECK(w->in_domain(pt));
    CHECK(std::abs(path_length(w, path) - d) <= 2e-5 * d);

    // Midpoint of I -> D is D^(1/2) for commuting endpoints.
    auto mid = geodesic_path(validate_params(w, vec({1, 0, 1})),
                             validate_params(w, vec({4, 0, 9})), 2)[1];
    CHECK(std::abs(mid[0] - 2.0) < 1e-12);
    CHECK(std::abs(mid[1]) < 1e-12);
    CHECK(std::abs(mid[2] - 3.0) < 1e-12);
}

TEST_CASE("scatter-matrix validation") {
    auto w = make_wishart(2, 4.0);
    CHECK_THROWS_AS(validate_params(w, vec({1.0, 2.0, 1.0})), DomainError);
    CHECK_THROWS_AS(validate_params(w, vec({-1.0, 0.0, 1.0})), DomainError);
    CHECK_THROWS_AS(validate_params(w, vec({1.0, 0.0})), DomainError);
    CHECK_THROWS_AS(make_wishart(2, 1.0), DomainError);
    CHECK_THROWS_AS(make_wishart(0, 4.0), DomainError);
    CHECK_NOTHROW(make_wishart(2, 1.0001));}
