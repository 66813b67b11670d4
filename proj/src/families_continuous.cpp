#include "raodist/families_continuous.hpp"

#include "raodist/constants.hpp"
#include "raodist/hyperbolic.hpp"

#include <cmath>

namespace raodist {

namespace {

constexpr double kGamma = Constants::euler_gamma;

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
    return std::exp(d(rng));
}

/// One-parameter family whose Fisher metric g(xi) has an explicit
/// arc-length coordinate s(xi): distance |s(p) - s(q)|, geodesics by
/// linear interpolation of s.
class OneParamFamily : public Family {
public:
    using Family::Family;

    int dim() const override { return 1; }

    double distance(const Vec& p, const Vec& q) const override {
        return std::fabs(arc_coord(p[0]) - arc_coord(q[0]));
    }

    std::vector<Vec> geodesic_path(const Vec& p, const Vec& q, int steps) const override {
        const double s1 = arc_coord(p[0]);
        const double s2 = arc_coord(q[0]);
        std::vector<Vec> out;
        out.reserve(steps + 1);
        for (int i = 0; i <= steps; ++i) {
            const double t = static_cast<double>(i) / steps;
            Vec c(1);
            c[0] = arc_coord_inv((1.0 - t) * s1 + t * s2);
            out.push_back(std::move(c));
        }
        return out;
    }

    virtual double arc_coord(double xi) const = 0;
    virtual double arc_coord_inv(double s) const = 0;
};

// ---------------------------------------------------------------------------
// exponential: p(x) = lambda e^(-lambda x), x >= 0; g = 1/lambda^2.

class Exponential final : public OneParamFamily {
public:
    Exponential() : OneParamFamily("exponential", "exponential") {}

    void validate(const Vec& c) const override {
        if (c.size() != 1) throw DomainError("expected 1 coordinate (lambda)");
        if (!std::isfinite(c[0]) || !(c[0] > 0.0))
            throw DomainError("lambda must be positive");
    }

    double log_density(const Vec& c, const Vec& x) const override {
        if (x[0] < 0.0) throw SupportError("sample must be nonnegative");
        return std::log(c[0]) - c[0] * x[0];
    }

    Mat fisher(const Vec& c) const override {
        Mat g(1, 1);
        g(0, 0) = 1.0 / (c[0] * c[0]);
        return g;
    }

    double arc_coord(double lam) const override { return std::log(lam); }
    double arc_coord_inv(double s) const override { return std::exp(s); }

    std::optional<QuadratureMap> quadrature_map(const Vec& c) const override {
        QuadratureMap m;
        const double center = -std::log(c[0]); // log of the mean
        m.t_lo = center - 40.0;
        m.t_hi = center + 45.0;
        m.breaks = {center - 3.0, center, center + 2.0, center + 5.0};
        m.x = [](double t) { return std::exp(t); };
        m.dx_dt = [](double t) { return std::exp(t); };
        return m;
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        Vec c(1);
        c[0] = log_uniform(rng, 0.1, 10.0);
        return c;
    }
};

// ---------------------------------------------------------------------------
// rayleigh: p(x) = (x/sigma^2) e^(-x^2/(2 sigma^2)), x >= 0; g = 4/sigma^2.

class Rayleigh final : public OneParamFamily {
public:
    Rayleigh() : OneParamFamily("rayleigh", "rayleigh") {}

    void validate(const Vec& c) const override {
        if (c.size() != 1) throw DomainError("expected 1 coordinate (sigma)");
        if (!std::isfinite(c[0]) || !(c[0] > 0.0))
            throw DomainError("sigma must be positive");
    }

    double log_density(const Vec& c, const Vec& x) const override {
        if (x[0] < 0.0) throw SupportError("sample must be nonnegative");
        const double s2 = c[0] * c[0];
        return std::log(x[0]) - std::log(s2) - x[0] * x[0] / (2.0 * s2);
    }

    Mat fisher(const Vec& c) const override {
        Mat g(1, 1);
        g(0, 0) = 4.0 / (c[0] * c[0]);
        return g;
    }

    double arc_coord(double sigma) const override { return 2.0 * std::log(sigma); }
    double arc_coord_inv(double s) const override { return std::exp(0.5 * s); }

    std::optional<QuadratureMap> quadrature_map(const Vec& c) const override {
        QuadratureMap m;
        const double center = std::log(c[0]);
        m.t_lo = center - 25.0;
        m.t_hi = center + 8.0;
        m.breaks = {center - 3.0, center - 1.0, center, center + 1.0};
        m.x = [](double t) { return std::exp(t); };
        m.dx_dt = [](double t) { return std::exp(t); };
        return m;
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        Vec c(1);
        c[0] = log_uniform(rng, 0.1, 10.0);
        return c;
    }
};

// ---------------------------------------------------------------------------
// erlang(k): p(x) = lambda^k x^(k-1) e^(-lambda x)/(k-1)!, x >= 0;
// g = k/lambda^2.

class Erlang final : public OneParamFamily {
public:
    explicit Erlang(int k)
        : OneParamFamily("erlang", "erlang(k=" + std::to_string(k) + ")"), k_(k) {}

    void validate(const Vec& c) const override {
        if (c.size() != 1) throw DomainError("expected 1 coordinate (lambda)");
        if (!std::isfinite(c[0]) || !(c[0] > 0.0))
            throw DomainError("lambda must be positive");
    }

    double log_density(const Vec& c, const Vec& x) const override {
        if (x[0] < 0.0) throw SupportError("sample must be nonnegative");
        const double shape_term = (k_ > 1) ? (k_ - 1) * std::log(x[0]) : 0.0;
        return k_ * std::log(c[0]) + shape_term - c[0] * x[0] -
               std::lgamma(static_cast<double>(k_));
    }

    Mat fisher(const Vec& c) const override {
        Mat g(1, 1);
        g(0, 0) = k_ / (c[0] * c[0]);
        return g;
    }

    double arc_coord(double lam) const override {
        return std::sqrt(static_cast<double>(k_)) * std::log(lam);
    }
    double arc_coord_inv(double s) const override {
        return std::exp(s / std::sqrt(static_cast<double>(k_)));
    }

    std::optional<QuadratureMap> quadrature_map(const Vec& c) const override {
        QuadratureMap m;
        const double center = std::log(k_ / c[0]);
        m.t_lo = center - 45.0;
        m.t_hi = center + 45.0;
        m.breaks = {center - 3.0, center, center + 2.0, center + 5.0};
        m.x = [](double t) { return std::exp(t); };
        m.dx_dt = [](double t) { return std::exp(t); };
        return m;
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        Vec c(1);
        c[0] = log_uniform(rng, 0.1, 10.0);
        return c;
    }

private:
    int k_;
};

// ---------------------------------------------------------------------------
// Two-parameter family isometric to a scaled half-plane through an
// explicit chart. The Fisher matrix stays analytic per family; distance
// and geodesics go through the chart.

class ChartedFamily : public Family {
public:
    using Family::Family;

    int dim() const override { return 2; }

    double distance(const Vec& p, const Vec& q) const override {
        const ChartMap& c = chart_map();
        auto [u1, v1] = c.to_chart(p);
        auto [u2, v2] = c.to_chart(q);
        return scaled_halfplane_distance(c.spec, u1, v1, u2, v2);
    }

    std::vector<Vec> geodesic_path(const Vec& p, const Vec& q, int steps) const override {
        const ChartMap& c = chart_map();
        auto [u1, v1] = c.to_chart(p);
        auto [u2, v2] = c.to_chart(q);
        std::vector<Vec> out;
        out.reserve(steps + 1);
        for (int i = 0; i <= steps; ++i) {
            const double t = static_cast<double>(i) / steps;
            auto [u, v] = scaled_geodesic_point(c.spec, u1, v1, u2, v2, t);
            out.push_back(c.from_chart(u, v));
        }
        return out;
    }

    std::optional<ChartMap> chart() const override { return chart_map(); }

    virtual const ChartMap& chart_map() const = 0;
};

// ---------------------------------------------------------------------------
// log-Gaussian: log X is Gaussian(mu, sigma). Identity chart with the
// Gaussian constants a=1, b=2; distances coincide with the Gaussian ones.

class LogGaussian final : public ChartedFamily {
public:
    LogGaussian() : ChartedFamily("log_gaussian", "log_gaussian") {
        chart_.spec = {1.0, 2.0};
        chart_.to_chart = [](const Vec& c) { return std::make_pair(c[0], c[1]); };
        chart_.from_chart = [](double u, double v) {
            Vec c(2);
            c << u, v;
            return c;
        };
    }

    void validate(const Vec& c) const override {
        if (c.size() != 2) throw DomainError("expected 2 coordinates (mu, sigma)");
        if (!std::isfinite(c[0]) || !std::isfinite(c[1]))
            throw DomainError("coordinates must be finite");
        if (!(c[1] > 0.0)) throw DomainError("sigma must be positive");
    }

    double log_density(const Vec& c, const Vec& x) const override {
        if (!(x[0] > 0.0)) throw SupportError("sample must be positive");
        const double z = (std::log(x[0]) - c[0]) / c[1];
        return -std::log(x[0]) - std::log(c[1]) -
               0.5 * std::log(2.0 * Constants::pi) - 0.5 * z * z;
    }

    Mat fisher(const Vec& c) const override {
        Mat g = Mat::Zero(2, 2);
        g(0, 0) = 1.0 / (c[1] * c[1]);
        g(1, 1) = 2.0 / (c[1] * c[1]);
        return g;
    }

    std::optional<QuadratureMap> quadrature_map(const Vec& c) const override {
        QuadratureMap m;
        m.t_lo = -6.0;
        m.t_hi = 6.0;
        m.breaks = {-2.0, -1.0, 0.0, 1.0, 2.0};
        const double mu = c[0], sigma = c[1];
        m.x = [mu, sigma](double t) { return std::exp(mu + sigma * std::sinh(t)); };
        m.dx_dt = [mu, sigma](double t) {
            return std::exp(mu + sigma * std::sinh(t)) * sigma * std::cosh(t);
        };
        return m;
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        std::uniform_real_distribution<double> mu_box(-5.0, 5.0);
        Vec c(2);
        c << mu_box(rng), log_uniform(rng, 0.1, 10.0);
        return c;
    }

    const ChartMap& chart_map() const override { return chart_; }

private:
    ChartMap chart_;
};

// ---------------------------------------------------------------------------
// inverse Gaussian: p(x) = sqrt(lambda/(2 pi x^3)) exp(-lambda (x-mu)^2 /
// (2 mu^2 x)), coords (lambda, mu). Fisher diag(1/(2 lambda^2),
// lambda/mu^3). Chart (u, v) = (sqrt(2/mu), 1/sqrt(lambda)) with a=b=2;
// the v coordinate must carry the lambda direction for the pullback to
// reproduce the Fisher matrix.

class InverseGaussian final : public ChartedFamily {
public:
    InverseGaussian() : ChartedFamily("inverse_gaussian", "inverse_gaussian") {
        chart_.spec = {2.0, 2.0};
        chart_.to_chart = [](const Vec& c) {
            return std::make_pair(std::sqrt(2.0 / c[1]), 1.0 / std::sqrt(c[0]));
        };
        chart_.from_chart = [](double u, double v) {
            Vec c(2);
            c << 1.0 / (v * v), 2.0 / (u * u);
            return c;
        };
    }

    void validate(const Vec& c) const override {
        if (c.size() != 2) throw DomainError("expected 2 coordinates (lambda, mu)");
        if (!std::isfinite(c[0]) || !(c[0] > 0.0))
            throw DomainError("lambda must be positive");
        if (!std::isfinite(c[1]) || !(c[1] > 0.0))
            throw DomainError("mu must be positive");
    }

    double log_density(const Vec& c, const Vec& x) const override {
        if (!(x[0] > 0.0)) throw SupportError("sample must be positive");
        const double lam = c[0], mu = c[1];
        const double d = x[0] - mu;
        return 0.5 * (std::log(lam) - std::log(2.0 * Constants::pi) -
                      3.0 * std::log(x[0])) -
               lam * d * d / (2.0 * mu * mu * x[0]);
    }

    Mat fisher(const Vec& c) const override {
        Mat g = Mat::Zero(2, 2);
        g(0, 0) = 1.0 / (2.0 * c[0] * c[0]);
        g(1, 1) = c[0] / (c[1] * c[1] * c[1]);
        return g;
    }

    std::optional<QuadratureMap> quadrature_map(const Vec& c) const override {
        QuadratureMap m;
        const double lam = c[0], mu = c[1];
        m.t_lo = std::log(std::fmin(lam, mu)) - 10.0;
        m.t_hi = std::log(mu + 120.0 * mu * mu / lam) + 3.0;
        const double center = std::log(mu);
        m.breaks = {center - 2.0, center, center + 1.0, center + 3.0};
        m.x = [](double t) { return std::exp(t); };
        m.dx_dt = [](double t) { return std::exp(t); };
        return m;
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        Vec c(2);
        c << log_uniform(rng, 0.1, 10.0), log_uniform(rng, 0.1, 10.0);
        return c;
    }

    const ChartMap& chart_map() const override { return chart_; }

private:
    ChartMap chart_;
};

// ---------------------------------------------------------------------------
// Gumbel: p(x) = (1/sigma) e^(-z - e^(-z)), z = (x - mu)/sigma.
// Fisher [[1, g-1], [g-1, (g-1)^2 + pi^2/6]]/sigma^2 with g the Euler
// constant. Chart u = mu - (1-g) sigma, v = pi sigma/sqrt(6), a=b=pi^2/6.

constexpr double kGumbelAB = Constants::pi * Constants::pi / 6.0;
const double kPiOverSqrt6 = Constants::pi / std::sqrt(6.0);

class Gumbel final : public ChartedFamily {
public:
    Gumbel() : ChartedFamily("gumbel", "gumbel") {
        chart_.spec = {kGumbelAB, kGumbelAB};
        chart_.to_chart = [](const Vec& c) {
            return std::make_pair(c[0] - (1.0 - kGamma) * c[1], kPiOverSqrt6 * c[1]);
        };
        chart_.from_chart = [](double u, double v) {
            const double sigma = v / kPiOverSqrt6;
            Vec c(2);
            c << u + (1.0 - kGamma) * sigma, sigma;
            return c;
        };
    }

    void validate(const Vec& c) const override {
        if (c.size() != 2) throw DomainError("expected 2 coordinates (mu, sigma)");
        if (!std::isfinite(c[0]) || !std::isfinite(c[1]))
            throw DomainError("coordinates must be finite");
        if (!(c[1] > 0.0)) throw DomainError("sigma must be positive");
    }

    double log_density(const Vec& c, const Vec& x) const override {
        const double z = (x[0] - c[0]) / c[1];
        return -std::log(c[1]) - z - std::exp(-z);
    }

    Mat fisher(const Vec& c) const override {
        const double s2 = c[1] * c[1];
        Mat g(2, 2);
        g(0, 0) = 1.0 / s2;
        g(0, 1) = g(1, 0) = (kGamma - 1.0) / s2;
        g(1, 1) = ((kGamma - 1.0) * (kGamma - 1.0) + kGumbelAB) / s2;
        return g;
    }

    std::optional<QuadratureMap> quadrature_map(const Vec& c) const override {
        QuadratureMap m;
        m.t_lo = -10.0;
        m.t_hi = 10.0;
        m.breaks = {-2.0, 0.0, 2.0, 4.0};
        const double mu = c[0], sigma = c[1];
        m.x = [mu, sigma](double t) { return mu + sigma * std::sinh(t); };
        m.dx_dt = [sigma](double t) { return sigma * std::cosh(t); };
        return m;
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        std::uniform_real_distribution<double> mu_box(-5.0, 5.0);
        Vec c(2);
        c << mu_box(rng), log_uniform(rng, 0.1, 10.0);
        return c;
    }

    const ChartMap& chart_map() const override { return chart_; }

private:
    ChartMap chart_;
};

// ---------------------------------------------------------------------------
// Frechet (beta = scale, lambda = shape): p(x) = (lambda/beta)
// (x/beta)^(-1-lambda) e^(-(x/beta)^(-lambda)), x > 0. log X is
// Gumbel(log beta, 1/lambda), which fixes the chart
// u = log beta - (1-g)/lambda, v = pi/(lambda sqrt(6)).

class Frechet final : public ChartedFamily {
public:
    Frechet() : ChartedFamily("frechet", "frechet") {
        chart_.spec = {kGumbelAB, kGumbelAB};
        chart_.to_chart = [](const Vec& c) {
            return std::make_pair(std::log(c[0]) - (1.0 - kGamma) / c[1],
                                  kPiOverSqrt6 / c[1]);
        };
        chart_.from_chart = [](double u, double v) {
            const double lambda = kPiOverSqrt6 / v;
            Vec c(2);
            c << std::exp(u + (1.0 - kGamma) / lambda), lambda;
            return c;
        };
    }

    void validate(const Vec& c) const override {
        if (c.size() != 2) throw DomainError("expected 2 coordinates (beta, lambda)");
        if (!std::isfinite(c[0]) || !(c[0] > 0.0))
            throw DomainError("beta must be positive");
        if (!std::isfinite(c[1]) || !(c[1] > 0.0))
            throw DomainError("lambda must be positive");
    }

    double log_density(const Vec& c, const Vec& x) const override {
        if (!(x[0] > 0.0)) throw SupportError("sample must be positive");
        const double beta = c[0], lambda = c[1];
        const double s = std::log(x[0]) - std::log(beta);
        return std::log(lambda) - std::log(beta) - (1.0 + lambda) * s -
               std::exp(-lambda * s);
    }

    Mat fisher(const Vec& c) const override {
        const double beta = c[0], lambda = c[1];
        Mat g(2, 2);
        g(0, 0) = lambda * lambda / (beta * beta);
        g(0, 1) = g(1, 0) = (1.0 - kGamma) / beta;
        g(1, 1) = ((1.0 - kGamma) * (1.0 - kGamma) + kGumbelAB) / (lambda * lambda);
        return g;
    }

    std::optional<QuadratureMap> quadrature_map(const Vec& c) const override {
        QuadratureMap m;
        const double lb = std::log(c[0]);
        const double w = 1.0 / std::fmin(1.0, c[1]);
        m.t_lo = lb - 9.0 * w;
        m.t_hi = lb + 46.0 * w;
        m.breaks = {lb - 2.0 * w, lb, lb + 3.0 * w, lb + 10.0 * w};
        m.x = [](double t) { return std::exp(t); };
        m.dx_dt = [](double t) { return std::exp(t); };
        return m;
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        Vec c(2);
        c << log_uniform(rng, 0.1, 10.0), log_uniform(rng, 0.5, 5.0);
        return c;
    }

    const ChartMap& chart_map() const override { return chart_; }

private:
    ChartMap chart_;
};

// ---------------------------------------------------------------------------
// Weibull (beta = scale, lambda = shape): p(x) = (lambda/beta)
// (x/beta)^(lambda-1) e^(-(x/beta)^lambda). -log X is
// Gumbel(-log beta, 1/lambda).

class Weibull : public ChartedFamily {
public:
    Weibull() : Weibull("weibull", "weibull") {}

    void validate(const Vec& c) const override {
        if (c.size() != 2) throw DomainError("expected 2 coordinates (beta, lambda)");
        if (!std::isfinite(c[0]) || !(c[0] > 0.0))
            throw DomainError("beta must be positive");
        if (!std::isfinite(c[1]) || !(c[1] > 0.0))
            throw DomainError("lambda must be positive");
    }

    double log_density(const Vec& c, const Vec& x) const override {
        if (!(x[0] > 0.0)) throw SupportError("sample must be positive");
        return log_density_positive(c, x[0]);
    }

    Mat fisher(const Vec& c) const override {
        const double beta = c[0], lambda = c[1];
        Mat g(2, 2);
        g(0, 0) = lambda * lambda / (beta * beta);
        g(0, 1) = g(1, 0) = (kGamma - 1.0) / beta;
        g(1, 1) = ((kGamma - 1.0) * (kGamma - 1.0) + kGumbelAB) / (lambda * lambda);
        return g;
    }

    std::optional<QuadratureMap> quadrature_map(const Vec& c) const override {
        QuadratureMap m;
        const double lb = std::log(c[0]);
        const double w = 1.0 / std::fmin(1.0, c[1]);
        m.t_lo = lb - 46.0 * w;
        m.t_hi = lb + 9.0 * w;
        m.breaks = {lb - 10.0 * w, lb - 3.0 * w, lb, lb + 2.0 * w};
        m.x = [](double t) { return std::exp(t); };
        m.dx_dt = [](double t) { return std::exp(t); };
        return m;
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        Vec c(2);
        c << log_uniform(rng, 0.1, 10.0), log_uniform(rng, 0.5, 5.0);
        return c;
    }

    const ChartMap& chart_map() const override { return chart_; }

protected:
    Weibull(std::string name, std::string id) : ChartedFamily(std::move(name), std::move(id)) {
        chart_.spec = {kGumbelAB, kGumbelAB};
        chart_.to_chart = [](const Vec& c) {
            return std::make_pair(-std::log(c[0]) - (1.0 - kGamma) / c[1],
                                  kPiOverSqrt6 / c[1]);
        };
        chart_.from_chart = [](double u, double v) {
            const double lambda = kPiOverSqrt6 / v;
            Vec c(2);
            c << std::exp(-u - (1.0 - kGamma) / lambda), lambda;
            return c;
        };
    }

    double log_density_positive(const Vec& c, double x) const {
        const double beta = c[0], lambda = c[1];
        const double s = std::log(x) - std::log(beta);
        return std::log(lambda) - std::log(beta) + (lambda - 1.0) * s -
               std::exp(lambda * s);
    }

private:
    ChartMap chart_;
};

// Reversed Weibull: the same manifold with the sample negated (support
// x < 0); metric, chart and distances are the Weibull ones.
class ReversedWeibull final : public Weibull {
public:
    ReversedWeibull() : Weibull("reversed_weibull", "reversed_weibull") {}

    double log_density(const Vec& c, const Vec& x) const override {
        if (!(x[0] < 0.0)) throw SupportError("sample must be negative");
        return log_density_positive(c, -x[0]);
    }

    std::optional<QuadratureMap> quadrature_map(const Vec& c) const override {
        QuadratureMap m = *Weibull::quadrature_map(c);
        auto pos_x = m.x;
        m.x = [pos_x](double t) { return -pos_x(t); };
        return m;
    }
};

// ---------------------------------------------------------------------------
// Pareto (theta = exponent, alpha = support edge): p(x) = theta
// alpha^theta x^(-theta-1), x >= alpha. Fisher diag(1/theta^2,
// theta^2/alpha^2); chart u = log alpha, v = 1/theta, a=b=1.

class Pareto final : public ChartedFamily {
public:
    Pareto() : ChartedFamily("pareto", "pareto") {
        chart_.spec = {1.0, 1.0};
        chart_.to_chart = [](const Vec& c) {
            return std::make_pair(std::log(c[1]), 1.0 / c[0]);
        };
        chart_.from_chart = [](double u, double v) {
            Vec c(2);
            c << 1.0 / v, std::exp(u);
            return c;
        };
    }

    void validate(const Vec& c) const override {
        if (c.size() != 2) throw DomainError("expected 2 coordinates (theta, alpha)");
        if (!std::isfinite(c[0]) || !(c[0] > 0.0))
            throw DomainError("theta must be positive");
        if (!std::isfinite(c[1]) || !(c[1] > 0.0))
            throw DomainError("alpha must be positive");
    }

    double log_density(const Vec& c, const Vec& x) const override {
        if (x[0] < c[1]) throw SupportError("sample must be at least alpha");
        return std::log(c[0]) + c[0] * std::log(c[1]) - (c[0] + 1.0) * std::log(x[0]);
    }

    Mat fisher(const Vec& c) const override {
        Mat g = Mat::Zero(2, 2);
        g(0, 0) = 1.0 / (c[0] * c[0]);
        g(1, 1) = c[0] * c[0] / (c[1] * c[1]);
        return g;
    }

    bool fixed_support() const override { return false; }

    // Decreasing alpha keeps every sample x >= alpha in-support, so the
    // alpha-score must step backward only.
    ScoreStep score_step(int i) const override {
        return i == 1 ? ScoreStep::BackwardOnly : ScoreStep::Central;
    }

    std::optional<QuadratureMap> quadrature_map(const Vec& c) const override {
        QuadratureMap m;
        const double alpha = c[1];
        const double S = 46.0 / std::fmin(1.0, c[0]);
        m.t_lo = 0.0;
        m.t_hi = S;
        m.breaks = {S / 16.0, S / 4.0};
        m.x = [alpha](double t) { return alpha * std::exp(t); };
        m.dx_dt = [alpha](double t) { return alpha * std::exp(t); };
        return m;
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        Vec c(2);
        c << log_uniform(rng, 0.5, 5.0), log_uniform(rng, 0.1, 10.0);
        return c;
    }

    const ChartMap& chart_map() const override { return chart_; }

private:
    ChartMap chart_;
};

// ---------------------------------------------------------------------------
// Power function (theta = exponent, beta = support edge): p(x) = theta
// x^(theta-1)/beta^theta, 0 < x <= beta. The reciprocal of a Pareto
// variable; identical geometry with u = log beta, v = 1/theta.

class PowerFunction final : public ChartedFamily {
public:
    PowerFunction() : ChartedFamily("power_function", "power_function") {
        chart_.spec = {1.0, 1.0};
        chart_.to_chart = [](const Vec& c) {
            return std::make_pair(std::log(c[1]), 1.0 / c[0]);
        };
        chart_.from_chart = [](double u, double v) {
            Vec c(2);
            c << 1.0 / v, std::exp(u);
            return c;
        };
    }

    void validate(const Vec& c) const override {
        if (c.size() != 2) throw DomainError("expected 2 coordinates (theta, beta)");
        if (!std::isfinite(c[0]) || !(c[0] > 0.0))
            throw DomainError("theta must be positive");
        if (!std::isfinite(c[1]) || !(c[1] > 0.0))
            throw DomainError("beta must be positive");
    }

    double log_density(const Vec& c, const Vec& x) const override {
        if (!(x[0] > 0.0) || x[0] > c[1])
            throw SupportError("sample must lie in (0, beta]");
        return std::log(c[0]) + (c[0] - 1.0) * std::log(x[0]) - c[0] * std::log(c[1]);
    }

    Mat fisher(const Vec& c) const override {
        Mat g = Mat::Zero(2, 2);
        g(0, 0) = 1.0 / (c[0] * c[0]);
        g(1, 1) = c[0] * c[0] / (c[1] * c[1]);
        return g;
    }

    bool fixed_support() const override { return false; }

    // Increasing beta keeps every sample x <= beta in-support.
    ScoreStep score_step(int i) const override {
        return i == 1 ? ScoreStep::ForwardOnly : ScoreStep::Central;
    }

    std::optional<QuadratureMap> quadrature_map(const Vec& c) const override {
        QuadratureMap m;
        const double beta = c[1];
        const double S = 46.0 / std::fmin(1.0, c[0]);
        m.t_lo = 0.0;
        m.t_hi = S;
        m.breaks = {S / 16.0, S / 4.0};
        m.x = [beta](double t) { return beta * std::exp(-t); };
        m.dx_dt = [beta](double t) { return beta * std::exp(-t); };
        return m;
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        Vec c(2);
        c << log_uniform(rng, 0.5, 5.0), log_uniform(rng, 0.1, 10.0);
        return c;
    }

    const ChartMap& chart_map() const override { return chart_; }

private:
    ChartMap chart_;
};

} // namespace

FamilyPtr make_exponential() {
    static FamilyPtr f = std::make_shared<Exponential>();
    return f;
}

FamilyPtr make_rayleigh() {
    static FamilyPtr f = std::make_shared<Rayleigh>();
    return f;
}

FamilyPtr make_erlang(int k) {
    if (k < 1) throw DomainError("k must be a positive integer");
    return std::make_shared<Erlang>(k);
}

FamilyPtr make_log_gaussian() {
    static FamilyPtr f = std::make_shared<LogGaussian>();
    return f;
}

FamilyPtr make_inverse_gaussian() {
    static FamilyPtr f = std::make_shared<InverseGaussian>();
    return f;
}

FamilyPtr make_gumbel() {
    static FamilyPtr f = std::make_shared<Gumbel>();
    return f;
}

FamilyPtr make_frechet() {
    static FamilyPtr f = std::make_shared<Frechet>();
    return f;
}

FamilyPtr make_weibull() {
    static FamilyPtr f = std::make_shared<Weibull>();
    return f;
}

FamilyPtr make_reversed_weibull() {
    static FamilyPtr f = std::make_shared<ReversedWeibull>();
    return f;
}

FamilyPtr make_pareto() {
    static FamilyPtr f = std::make_shared<Pareto>();
    return f;
}

FamilyPtr make_power_function() {
    static FamilyPtr f = std::make_shared<PowerFunction>();
    return f;
}

} // namespace raodist
