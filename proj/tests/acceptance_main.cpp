// Acceptance gate: one check per headline guarantee, each printed as a
// single [PASS]/[FAIL] line with the measured values. Exits nonzero if
// any check fails.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "raodist/constants.hpp"
#include "raodist/families_continuous.hpp"
#include "raodist/families_discrete.hpp"
#include "raodist/families_elliptical.hpp"
#include "raodist/families_matrix.hpp"
#include "raodist/family.hpp"
#include "raodist/hyperbolic.hpp"
#include "raodist/oracle.hpp"
#include "raodist/verify.hpp"

using namespace raodist;

namespace {

int g_failures = 0;

void report(int index, bool pass, const std::string& text) {
    std::printf("[%s] %d %s\n", pass ? "PASS" : "FAIL", index, text.c_str());
    if (!pass) ++g_failures;
}

Vec vec(std::initializer_list<double> xs) {
    Vec v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

double dist(const FamilyPtr& f, const Vec& a, const Vec& b) {
    return distance(validate_params(f, a), validate_params(f, b));
}

std::string fmt(const char* pattern, ...) {
    char buf[1024];
    va_list ap;
    va_start(ap, pattern);
    std::vsnprintf(buf, sizeof buf, pattern, ap);
    va_end(ap);
    return buf;
}

Mat random_spd(int m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = u(rng);
    Mat q = Eigen::HouseholderQR<Mat>(g).householderQ();
    Vec ev(m);
    std::uniform_real_distribution<double> le(std::log(0.1), std::log(10.0));
    for (int i = 0; i < m; ++i) ev[i] = std::exp(le(rng));
    return q * ev.asDiagonal() * q.transpose();
}

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

// 1. Simplex-geometry distances hit the published figures.
void criterion_simplex() {
    const Vec p = vec({0.7, 0.2, 0.1}), q = vec({0.1, 0.3, 0.6});
    const double dc = dist(make_categorical(3), p, q);
    bool pass = std::abs(dc - 1.432) <= 1e-3;

    double coeff[2];
    int idx = 0;
    for (int xn : {1, 4}) {
        const double d = dist(make_negative_multinomial(3, xn), p, q);
        coeff[idx] = d / std::sqrt(static_cast<double>(xn));
        pass = pass && std::abs(coeff[idx] - 2.637) <= 5e-3;
        ++idx;
    }
    report(1, pass,
           fmt("simplex distances: categorical %.10g (1.432 +- 1e-3); "
               "negative-multinomial coefficient %.10g / %.10g for one/four "
               "required failures (2.637 +- 5e-3)",
               dc, coeff[0], coeff[1]));
}

// 2. Location-scale showcase: closed form, discretised path length, and
// the energy minimiser agree.
void criterion_location_scale() {
    auto gauss = make_gaussian();
    auto pg = validate_params(gauss, vec({2.0, 0.5}));
    auto qg = validate_params(gauss, vec({5.0, 1.0}));
    const double dg = distance(pg, qg);
    const double lg = path_length(gauss, geodesic_path(pg, qg, 1000));
    bool pass = std::abs(dg - 3.443) <= 1e-3 && std::abs(lg - dg) <= 1e-3;

    auto cauchy = make_cauchy();
    auto pc = validate_params(cauchy, vec({2.0, 0.5}));
    auto qc = validate_params(cauchy, vec({5.0, 1.0}));
    const double dc = distance(pc, qc);
    const double bc = geodesic_bvp_distance(pc, qc);
    pass = pass && std::abs(dc - 2.1345) <= 1e-3 &&
           std::abs(bc - dc) <= 3e-3 * dc;

    report(2, pass,
           fmt("normal (2,0.5)-(5,1): closed form %.10g, 1000-knot path "
               "length %.10g; heavy-tailed counterpart %.10g with "
               "energy-minimised value %.10g (rel dev %.2e)",
               dg, lg, dc, bc, std::abs(bc - dc) / dc));
}

// 3. The numeric oracle sweep at its default effort.
void criterion_oracle_sweep() {
    const VerifyReport rep = run_verification();
    double worst_fisher = 0.0, worst_bvp = 0.0, worst_hessian = 0.0;
    for (const auto& fr : rep.families) {
        worst_fisher = std::max(worst_fisher, fr.max_fisher_rel_err);
        if (fr.bvp_checked) worst_bvp = std::max(worst_bvp, fr.max_bvp_rel_err);
        if (fr.hessian_checked)
            worst_hessian = std::max(worst_hessian, fr.max_hessian_rel_err);
    }
    report(3, rep.pass,
           fmt("numeric oracle, %zu families: worst Fisher deviation %.2e "
               "(tol 1e-4), worst minimised-path deviation %.2e (tol 3e-3), "
               "worst Hessian-form deviation %.2e (tol 1e-5)",
               rep.families.size(), worst_fisher, worst_bvp, worst_hessian));
}

// 4. Power-exponential metric constants, analytic and recovered.
void criterion_metric_constants() {
    bool pass = true;
    double worst = 0.0;
    for (double beta : {0.75, 1.0, 1.5, 2.0, 3.0}) {
        const double a_formula =
            beta * std::tgamma(2.0 - 1.0 / beta) / std::tgamma(1.0 + 1.0 / beta);
        auto g = elliptical_generator("generalized_gaussian", beta);
        auto [na, nb] = elliptical_constants_numeric(g.h);
        worst = std::max({worst, std::abs(na - a_formula), std::abs(nb - beta)});
        pass = pass && std::abs(na - a_formula) <= 1e-6 &&
               std::abs(nb - beta) <= 1e-6 &&
               std::abs(g.a - a_formula) <= 1e-12;
    }
    // At beta = 1 the family must coincide with Laplace.
    const Vec a = vec({-1.0, 1.0}), b = vec({2.0, 0.7});
    const double d1 = dist(make_generalized_gaussian(1.0), a, b);
    const double dl = dist(make_laplace(), a, b);
    pass = pass && std::abs(d1 - dl) <= 1e-12 * dl;
    report(4, pass,
           fmt("power-exponential constants over beta in {0.75,1,1.5,2,3}: "
               "worst numeric recovery error %.2e (tol 1e-6); unit-shape "
               "distance matches Laplace to %.1e",
               worst, std::abs(d1 - dl)));
}

// 5. Cross-family reductions hold to near round-off.
void criterion_identities() {
    double worst = 0.0;
    auto rel = [&worst](double x, double y) {
        const double r = std::abs(x - y) / std::max(1e-300, std::abs(y));
        worst = std::max(worst, r);
        return r;
    };
    bool pass = true;

    const Vec p3 = vec({0.7, 0.2, 0.1}), q3 = vec({0.1, 0.3, 0.6});

    // Categorical distance = great-circle arc of the sphere embedding.
    const double dc = dist(make_categorical(3), p3, q3);
    const double arc = 2.0 * clamped_acos(
        simplex_sphere_embedding(p3).dot(simplex_sphere_embedding(q3)) / 4.0);
    pass &= rel(dc, arc) <= 1e-12;

    // Multinomial = sqrt(trials) x categorical.
    pass &= rel(dist(make_multinomial(3, 5), p3, q3),
                std::sqrt(5.0) * dc) <= 1e-12;

    // Negative binomial = sqrt(r) x geometric.
    const Vec t1 = vec({0.17}), t2 = vec({0.52});
    pass &= rel(dist(make_negative_binomial(4), t1, t2),
                2.0 * dist(make_geometric(), t1, t2)) <= 1e-12;

    // Log-normal = normal in (mu, sigma).
    const Vec g1 = vec({2.0, 0.5}), g2 = vec({5.0, 1.0});
    pass &= rel(dist(make_log_gaussian(), g1, g2),
                dist(make_gaussian(), g1, g2)) <= 1e-12;

    // Frechet and Weibull = Gumbel through (+-log beta, 1/lambda).
    auto gum = make_gumbel();
    const double b1 = 0.8, l1 = 2.2, b2 = 3.1, l2 = 0.9;
    pass &= rel(dist(make_frechet(), vec({b1, l1}), vec({b2, l2})),
                dist(gum, vec({std::log(b1), 1 / l1}),
                     vec({std::log(b2), 1 / l2}))) <= 1e-12;
    pass &= rel(dist(make_weibull(), vec({b1, l1}), vec({b2, l2})),
                dist(gum, vec({-std::log(b1), 1 / l1}),
                     vec({-std::log(b2), 1 / l2}))) <= 1e-12;

    // Power function(theta, beta) = Pareto(theta, 1/beta).
    pass &= rel(dist(make_power_function(), vec({2.0, 3.0}), vec({1.0, 5.0})),
                dist(make_pareto(), vec({2.0, 1.0 / 3.0}),
                     vec({1.0, 1.0 / 5.0}))) <= 1e-12;

    // Inverse Wishart = Wishart.
    const Vec w1 = vec({2.0, 0.5, 1.0}), w2 = vec({1.0, 0.2, 3.0});
    pass &= rel(dist(make_inverse_wishart(2, 4.0), w1, w2),
                dist(make_wishart(2, 4.0), w1, w2)) <= 1e-12;

    // Cauchy = Student-t with one degree of freedom.
    pass &= rel(dist(make_cauchy(), g1, g2),
                dist(make_student_t(1.0), g1, g2)) <= 1e-12;

    report(5, pass,
           fmt("nine cross-family reductions: worst relative deviation %.2e "
               "(tol 1e-12)",
               worst));
}

// 6. Metric axioms on sampled triples.
void criterion_axioms() {
    int violations = 0;
    double worst_triangle = 0.0;
    for (const auto& f : all_instances()) {
        std::mt19937_64 rng(0xace0 + static_cast<unsigned>(f->id().size()));
        for (int trial = 0; trial < 200; ++trial) {
            ParamPoint p{f, f->sample_point(rng)};
            ParamPoint q{f, f->sample_point(rng)};
            ParamPoint r{f, f->sample_point(rng)};
            const double dpq = distance(p, q), dqp = distance(q, p);
            const double dqr = distance(q, r), dpr = distance(p, r);
            if (dpq != dqp) ++violations;
            if (distance(p, p) != 0.0) ++violations;
            if (!(dpq >= 0.0) || !std::isfinite(dpq)) ++violations;
            worst_triangle = std::max(worst_triangle, dpr - (dpq + dqr));
        }
    }
    const bool pass = violations == 0 && worst_triangle <= 1e-9;
    report(6, pass,
           fmt("metric axioms, 26 families x 200 triples: %d symmetry/identity "
               "violations, worst triangle defect %.2e (tol 1e-9)",
               violations, worst_triangle));
}

// 7. The hyperbolic backbone: equivalent forms and models agree.
void criterion_hyperbolic() {
    const double pts[][4] = {
        {2, 1, 4, 1},     {0, 1, 0, 4},      {-2, 0.3, 5, 7},
        {0, 1, 1e-3, 1},  {10, 0.01, -3, 2}, {1, 5, 1.2, 4.8},
    };
    double worst_forms = 0.0;
    for (const auto& c : pts) {
        const auto f = halfplane_distance_forms(c[0], c[1], c[2], c[3]);
        const double scale = std::max(1.0, f.acosh_form);
        worst_forms = std::max(worst_forms,
                               std::abs(f.log_form - f.acosh_form) / scale);
        worst_forms = std::max(worst_forms,
                               std::abs(f.atanh_form - f.acosh_form) / scale);
    }

    double worst_dilation = 0.0;
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int n : {2, 3, 4, 5}) {
        Vec a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a[i] = u(rng);
            b[i] = u(rng);
        }
        a[n - 1] = std::abs(a[n - 1]) + 0.1;
        b[n - 1] = std::abs(b[n - 1]) + 0.1;
        const double d = halfspace_distance(a, b);
        worst_dilation = std::max(
            worst_dilation, std::abs(halfspace_distance(3.0 * a, 3.0 * b) - d) / d);
    }

    double worst_proj = 0.0;
    std::uniform_real_distribution<double> ang(0.15, 1.4);
    for (double r : {1.0, 2.5}) {
        for (int dim : {3, 4}) {
            Vec a(dim), b(dim);
            for (Vec* v : {&a, &b}) {
                // Spherical angles keep every trailing coordinate positive.
                double shell = r;
                for (int i = 0; i + 1 < dim; ++i) {
                    const double th = ang(rng);
                    (*v)[i] = shell * std::cos(th);
                    shell *= std::sin(th);
                }
                (*v)[dim - 1] = shell;
            }
            const double dh = hemisphere_distance(a, b, r);
            const double dp = halfspace_distance(hemisphere_to_halfspace(a, r),
                                                 hemisphere_to_halfspace(b, r));
            worst_proj =
                std::max(worst_proj, std::abs(dh - dp) / std::max(1.0, dh));
        }
    }

    const bool pass =
        worst_forms <= 1e-12 && worst_dilation <= 1e-12 && worst_proj <= 1e-10;
    report(7, pass,
           fmt("hyperbolic models: half-plane forms within %.2e (tol 1e-12), "
               "dilation invariance within %.2e (tol 1e-12), hemisphere vs "
               "projected half-space within %.2e (tol 1e-10)",
               worst_forms, worst_dilation, worst_proj));
}

// 8. KL divergence approximates d^2/2 at distance 1e-2.
void criterion_kl_local() {
    const double d = 1e-2;
    double worst = 0.0;
    bool pass = true;
    auto take = [&](double ratio) {
        worst = std::max(worst, std::abs(ratio - 1.0));
        pass = pass && std::abs(ratio - 1.0) <= 0.02;
        return ratio;
    };

    auto gauss = make_gaussian();
    const double t = std::tanh(d / (2.0 * std::sqrt(2.0)));
    const double dmu = std::sqrt(8.0 * t * t / (1.0 - t * t));
    const double rg = take(kl_local_ratio(validate_params(gauss, vec({0, 1})),
                                          validate_params(gauss, vec({dmu, 1}))));

    auto pois = make_poisson();
    const double rp = take(kl_local_ratio(
        validate_params(pois, vec({2.0})),
        validate_params(pois, vec({std::pow(std::sqrt(2.0) + d / 2.0, 2.0)}))));

    auto expo = make_exponential();
    const double re = take(kl_local_ratio(
        validate_params(expo, vec({2.0})),
        validate_params(expo, vec({2.0 * std::exp(d)}))));

    auto cat = make_categorical(3);
    const double e = 0.0038728784535926154;
    const double rc = take(kl_local_ratio(
        validate_params(cat, vec({0.3, 0.3})),
        validate_params(cat, vec({0.3 + e, 0.3 - e}))));

    report(8, pass,
           fmt("KL vs d^2/2 at d = 1e-2: ratios %.8f (normal), %.8f (Poisson), "
               "%.8f (exponential), %.8f (categorical); worst |ratio-1| %.2e "
               "(tol 0.02)",
               rg, rp, re, rc, worst));
}

// 9. Scatter-matrix geometry: invariance, reduction, and a fixed value.
void criterion_scatter() {
    std::mt19937_64 rng(0xd1ce);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst_cong = 0.0;
    for (int m : {2, 3}) {
        for (int trial = 0; trial < 10; ++trial) {
            const Mat s1 = random_spd(m, rng), s2 = random_spd(m, rng);
            Mat a(m, m);
            do {
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) a(i, j) = u(rng);
            } while (std::abs(a.determinant()) < 0.05);
            const double base = wishart_distance_matrix(s1, s2, 4.0);
            const double cong = wishart_distance_matrix(
                a * s1 * a.transpose(), a * s2 * a.transpose(), 4.0);
            worst_cong =
                std::max(worst_cong, std::abs(cong - base) / std::max(1.0, base));
        }
    }

    auto w1 = make_wishart(1, 5.0);
    const double d1 = dist(w1, vec({1.0}), vec({4.0}));
    const double exact1 = std::sqrt(2.5) * std::log(4.0);
    const double reduction_err = std::abs(d1 - exact1) / exact1;

    const double d23 = dist(make_wishart(2, 3.0), vec({1, 0, 1}), vec({2, 0, 0.5}));
    const double fixed_err = std::abs(d23 - 1.2005661338529437);

    const bool pass =
        worst_cong <= 1e-9 && reduction_err <= 1e-14 && fixed_err <= 1e-6;
    report(9, pass,
           fmt("scatter matrices: congruence invariance within %.2e (tol 1e-9), "
               "1-d reduction error %.1e, identity-vs-diag(2,1/2) value %.10g "
               "(target 1.2005661339 +- 1e-6)",
               worst_cong, reduction_err, d23));
}

} // namespace

int main() {
    struct Entry {
        int index;
        void (*fn)();
    };
    const Entry entries[] = {
        {1, criterion_simplex},    {2, criterion_location_scale},
        {3, criterion_oracle_sweep}, {4, criterion_metric_constants},
        {5, criterion_identities}, {6, criterion_axioms},
        {7, criterion_hyperbolic}, {8, criterion_kl_local},
        {9, criterion_scatter},
    };
    for (const Entry& e : entries) {
        try {
            e.fn();
        } catch (const std::exception& ex) {
            report(e.index, false, fmt("aborted: %s", ex.what()));
        }
    }

    std::printf("acceptance: %d/9 criteria passed\n", 9 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
