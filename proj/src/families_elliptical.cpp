#include "raodist/families_elliptical.hpp"

#include "raodist/constants.hpp"
#include "raodist/hyperbolic.hpp"
#include "raodist/quadrature.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

namespace raodist {

namespace {

std::string format_hyper(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

/// Normalisation check: integral of h(z^2) dz over R must be 1. z = sinh(t)
/// compresses both tails; tail_t covers slow power-law decay.
void check_normalised(const EllipticalGenerator& g, double tail_t) {
    auto f = [&](double t) {
        Vec out(1);
        const double z = std::sinh(t);
        out[0] = g.h(z * z) * std::cosh(t);
        return out;
    };
    const Vec total = integrate_adaptive(f, {-tail_t, -3.0, 0.0, 3.0, tail_t}, 1e-10, 16384);
    if (std::fabs(total[0] - 1.0) > 1e-8)
        throw DomainError("elliptical generator '" + g.name + "' is not normalised");
}

} // namespace

EllipticalGenerator elliptical_generator(const std::string& name, double hyper) {
    EllipticalGenerator g;
    g.name = name;
    double tail_t = 15.0;
    if (name == "gaussian") {
        g.h = [](double u) { return std::exp(-0.5 * u) / std::sqrt(2.0 * Constants::pi); };
        g.log_h = [](double u) { return -0.5 * std::log(2.0 * Constants::pi) - 0.5 * u; };
        g.a = 1.0;
        g.b = 2.0;
    } else if (name == "laplace") {
        g.h = [](double u) { return 0.5 * std::exp(-std::sqrt(u)); };
        g.log_h = [](double u) { return -std::log(2.0) - std::sqrt(u); };
        g.a = 1.0;
        g.b = 1.0;
    } else if (name == "generalized_gaussian") {
        const double beta = hyper;
        if (!(beta > 0.5))
            throw DomainError("beta must exceed 1/2");
        const double logc = std::log(beta) - std::log(2.0) - std::lgamma(1.0 / beta);
        g.h = [beta, logc](double u) {
            return std::exp(logc - std::pow(u, beta / 2.0));
        };
        g.log_h = [beta, logc](double u) { return logc - std::pow(u, beta / 2.0); };
        g.a = beta * std::tgamma(2.0 - 1.0 / beta) / std::tgamma(1.0 + 1.0 / beta);
        g.b = beta;
    } else if (name == "logistic") {
        g.h = [](double u) {
            const double e = std::exp(-std::sqrt(u));
            return e / ((1.0 + e) * (1.0 + e));
        };
        g.log_h = [](double u) {
            const double s = std::sqrt(u);
            return -s - 2.0 * std::log1p(std::exp(-s));
        };
        g.a = 1.0 / 3.0;
        g.b = (Constants::pi * Constants::pi + 3.0) / 9.0;
    } else if (name == "cauchy" || name == "student_t") {
        const double nu = (name == "cauchy") ? 1.0 : hyper;
        if (!(nu > 0.0))
            throw DomainError("nu must be positive");
        const double logc = std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
                            0.5 * std::log(nu * Constants::pi);
        g.h = [nu, logc](double u) {
            return std::exp(logc - 0.5 * (nu + 1.0) * std::log1p(u / nu));
        };
        g.log_h = [nu, logc](double u) {
            return logc - 0.5 * (nu + 1.0) * std::log1p(u / nu);
        };
        g.a = (nu + 1.0) / (nu + 3.0);
        g.b = 2.0 * nu / (nu + 3.0);
        tail_t = std::fmax(15.0, 45.0 / std::fmin(1.0, nu));
    } else {
        throw UnknownGeneratorError("unknown elliptical generator '" + name + "'");
    }
    check_normalised(g, tail_t);
    return g;
}

std::pair<double, double> elliptical_constants(const std::string& name, double hyper) {
    EllipticalGenerator g = elliptical_generator(name, hyper);
    return {g.a, g.b};
}

std::pair<double, double>
elliptical_constants_numeric(const std::function<double(double)>& h) {
    // h' by central differences with a relative step; relative stepping
    // keeps the finite-difference error scale-free even where h' blows up
    // as u -> 0. The step is generous because generators with h' ~ u^(s-1),
    // s < 1, amplify subtractive rounding by u^(-s); the O(step^2)
    // truncation stays orders below the 1e-6 recovery target. Differences
    // below a few ulp of h carry no signal and the quotient would amplify
    // rounding noise by 1/u, so they count as 0.
    auto hprime = [&](double u) {
        const double eps = 1e-4;
        const double hi = h(u * (1.0 + eps));
        const double lo = h(u * (1.0 - eps));
        const double diff = hi - lo;
        if (std::fabs(diff) <= 8e-16 * (std::fabs(hi) + std::fabs(lo))) return 0.0;
        return diff / (2.0 * u * eps);
    };
    // Integrals over R are twice the (0, inf) part; z = e^t maps the
    // singular endpoint z = 0 to t = -inf where the integrand decays
    // exponentially for every admissible generator.
    auto f = [&](double t) {
        Vec out(2);
        const double z = std::exp(t);
        const double u = z * z;
        const double hu = h(u);
        const double hp = hprime(u);
        out.setZero();
        if (!(hu > 0.0) || !std::isfinite(hp)) return out;
        const double core = 4.0 * z * z * hp * hp / hu * z; // jacobian dz = z dt
        out[0] = core;
        out[1] = core * z * z;
        return out;
    };
    const Vec I = integrate_adaptive(f, {-120.0, -40.0, -10.0, -3.0, 0.0, 3.0, 60.0},
                                     1e-8, 16384, 1e-8);
    return {2.0 * I[0], 2.0 * I[1] - 1.0};
}

Mat elliptical_fisher(const EllipticalGenerator& g, double /*mu*/, double sigma) {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = g.a / (sigma * sigma);
    m(1, 1) = g.b / (sigma * sigma);
    return m;
}

double elliptical_distance(const EllipticalGenerator& g,
                           double mu1, double sigma1, double mu2, double sigma2) {
    return scaled_halfplane_distance({g.a, g.b}, mu1, sigma1, mu2, sigma2);
}

namespace {

/// Location-scale manifold of one elliptical generator: coords (mu, sigma),
/// Fisher diag(a, b)/sigma^2, distances and geodesics from the scaled
/// half-plane with the identity chart.
class EllipticalFamily final : public Family {
public:
    EllipticalFamily(std::string name, std::string id, EllipticalGenerator gen,
                     double tail_t)
        : Family(std::move(name), std::move(id)),
          gen_(std::move(gen)),
          tail_t_(tail_t) {}

    int dim() const override { return 2; }

    void validate(const Vec& c) const override {
        if (c.size() != 2) throw DomainError("expected 2 coordinates (mu, sigma)");
        if (!std::isfinite(c[0]) || !std::isfinite(c[1]))
            throw DomainError("coordinates must be finite");
        if (!(c[1] > 0.0)) throw DomainError("sigma must be positive");
    }

    double log_density(const Vec& c, const Vec& x) const override {
        const double z = (x[0] - c[0]) / c[1];
        return gen_.log_h(z * z) - std::log(c[1]);
    }

    Mat fisher(const Vec& c) const override {
        return elliptical_fisher(gen_, c[0], c[1]);
    }

    double distance(const Vec& p, const Vec& q) const override {
        return elliptical_distance(gen_, p[0], p[1], q[0], q[1]);
    }

    std::vector<Vec> geodesic_path(const Vec& p, const Vec& q, int steps) const override {
        std::vector<Vec> out;
        out.reserve(steps + 1);
        const ScaledMetricSpec spec{gen_.a, gen_.b};
        for (int i = 0; i <= steps; ++i) {
            const double t = static_cast<double>(i) / steps;
            auto [x, y] = scaled_geodesic_point(spec, p[0], p[1], q[0], q[1], t);
            Vec c(2);
            c << x, y;
            out.push_back(std::move(c));
        }
        return out;
    }

    std::optional<QuadratureMap> quadrature_map(const Vec& c) const override {
        QuadratureMap m;
        m.t_lo = -tail_t_;
        m.t_hi = tail_t_;
        m.breaks = {-3.0, -1.0, 0.0, 1.0, 3.0}; // 0 sits on the |x-mu| kink
        const double mu = c[0], sigma = c[1];
        m.x = [mu, sigma](double t) { return mu + sigma * std::sinh(t); };
        m.dx_dt = [sigma](double t) { return sigma * std::cosh(t); };
        return m;
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        std::uniform_real_distribution<double> mu_box(-5.0, 5.0);
        std::uniform_real_distribution<double> log_sigma(std::log(0.1), std::log(10.0));
        Vec c(2);
        c << mu_box(rng), std::exp(log_sigma(rng));
        return c;
    }

    const EllipticalGenerator& generator() const { return gen_; }

private:
    EllipticalGenerator gen_;
    double tail_t_;
};

FamilyPtr make_elliptical(const std::string& family_name, const std::string& id,
                          const std::string& generator_name, double hyper) {
    double tail_t = 15.0;
    if (generator_name == "cauchy") tail_t = 45.0;
    if (generator_name == "student_t")
        tail_t = std::fmax(15.0, 45.0 / std::fmin(1.0, hyper));
    return std::make_shared<EllipticalFamily>(
        family_name, id, elliptical_generator(generator_name, hyper), tail_t);
}

} // namespace

FamilyPtr make_gaussian() {
    static FamilyPtr f = make_elliptical("gaussian", "gaussian", "gaussian", 0.0);
    return f;
}

FamilyPtr make_laplace() {
    static FamilyPtr f = make_elliptical("laplace", "laplace", "laplace", 0.0);
    return f;
}

FamilyPtr make_generalized_gaussian(double beta) {
    return make_elliptical("generalized_gaussian",
                           "generalized_gaussian(beta=" + format_hyper(beta) + ")",
                           "generalized_gaussian", beta);
}

FamilyPtr make_logistic() {
    static FamilyPtr f = make_elliptical("logistic", "logistic", "logistic", 0.0);
    return f;
}

FamilyPtr make_cauchy() {
    static FamilyPtr f = make_elliptical("cauchy", "cauchy", "cauchy", 0.0);
    return f;
}

FamilyPtr make_student_t(double nu) {
    return make_elliptical("student_t", "student_t(nu=" + format_hyper(nu) + ")",
                           "student_t", nu);
}

} // namespace raodist
