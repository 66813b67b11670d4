#include "raodist/families_discrete.hpp"

#include "raodist/constants.hpp"
#include "raodist/hyperbolic.hpp"

#include <cmath>

namespace raodist {

Vec simplex_sphere_embedding(const Vec& probs) {
    Vec w(probs.size());
    for (int i = 0; i < probs.size(); ++i) {
        if (!(probs[i] >= 0.0)) throw DomainError("probabilities must be nonnegative");
        w[i] = 2.0 * std::sqrt(probs[i]);
    }
    return w;
}

double hellinger_distance(const Vec& p_probs, const Vec& q_probs) {
    if (p_probs.size() != q_probs.size())
        throw DimensionError("probability vectors must have equal length");
    double s = 0.0;
    for (int i = 0; i < p_probs.size(); ++i) {
        const double d = std::sqrt(p_probs[i]) - std::sqrt(q_probs[i]);
        s += d * d;
    }
    return std::sqrt(s);
}

Vec simplex_full(const Vec& free_coords) {
    Vec full(free_coords.size() + 1);
    full.head(free_coords.size()) = free_coords;
    full[free_coords.size()] = 1.0 - free_coords.sum();
    return full;
}

namespace {

/// One-parameter discrete family with an explicit arc-length coordinate.
class DiscreteOneParam : public Family {
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

void validate_theta(const Vec& c) {
    if (c.size() != 1) throw DomainError("expected 1 coordinate (theta)");
    if (!std::isfinite(c[0]) || !(c[0] > 0.0) || !(c[0] < 1.0))
        throw DomainError("theta must lie in (0, 1)");
}

Vec theta_box(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(0.05, 0.95);
    Vec c(1);
    c[0] = d(rng);
    return c;
}

Vec scalar_point(double x) {
    Vec v(1);
    v[0] = x;
    return v;
}

// ---------------------------------------------------------------------------
// binomial(n): pmf C(n,x) theta^x (1-theta)^(n-x), x in {0..n};
// g = n/(theta (1-theta)), arc length 2 sqrt(n) asin(sqrt(theta)).

class Binomial final : public DiscreteOneParam {
public:
    explicit Binomial(int n)
        : DiscreteOneParam("binomial", "binomial(n=" + std::to_string(n) + ")"), n_(n) {}

    void validate(const Vec& c) const override { validate_theta(c); }

    double log_density(const Vec& c, const Vec& x) const override {
        const int xi = static_cast<int>(std::llround(x[0]));
        if (xi < 0 || xi > n_) throw SupportError("count must lie in {0..n}");
        const double th = c[0];
        return std::lgamma(n_ + 1.0) - std::lgamma(xi + 1.0) -
               std::lgamma(n_ - xi + 1.0) + xi * std::log(th) +
               (n_ - xi) * std::log1p(-th);
    }

    Mat fisher(const Vec& c) const override {
        Mat g(1, 1);
        g(0, 0) = n_ / (c[0] * (1.0 - c[0]));
        return g;
    }

    double arc_coord(double th) const override {
        return 2.0 * std::sqrt(static_cast<double>(n_)) * std::asin(std::sqrt(th));
    }
    double arc_coord_inv(double s) const override {
        const double v = std::sin(s / (2.0 * std::sqrt(static_cast<double>(n_))));
        return v * v;
    }

    std::vector<Vec> support_points(const Vec&, double) const override {
        std::vector<Vec> pts;
        pts.reserve(n_ + 1);
        for (int x = 0; x <= n_; ++x) pts.push_back(scalar_point(x));
        return pts;
    }

    Vec sample_point(std::mt19937_64& rng) const override { return theta_box(rng); }

private:
    int n_;
};

// ---------------------------------------------------------------------------
// poisson: pmf e^(-lambda) lambda^x / x!; g = 1/lambda, arc 2 sqrt(lambda).

class Poisson final : public DiscreteOneParam {
public:
    Poisson() : DiscreteOneParam("poisson", "poisson") {}

    void validate(const Vec& c) const override {
        if (c.size() != 1) throw DomainError("expected 1 coordinate (lambda)");
        if (!std::isfinite(c[0]) || !(c[0] > 0.0))
            throw DomainError("lambda must be positive");
    }

    double log_density(const Vec& c, const Vec& x) const override {
        const int xi = static_cast<int>(std::llround(x[0]));
        if (xi < 0) throw SupportError("count must be nonnegative");
        return -c[0] + xi * std::log(c[0]) - std::lgamma(xi + 1.0);
    }

    Mat fisher(const Vec& c) const override {
        Mat g(1, 1);
        g(0, 0) = 1.0 / c[0];
        return g;
    }

    double arc_coord(double lam) const override { return 2.0 * std::sqrt(lam); }
    double arc_coord_inv(double s) const override { return 0.25 * s * s; }

    std::vector<Vec> support_points(const Vec& c, double tail_mass) const override {
        const double lam = c[0];
        std::vector<Vec> pts;
        double pmf = std::exp(-lam);
        for (int x = 0; x < 100000; ++x) {
            pts.push_back(scalar_point(x));
            const double rho = lam / (x + 1.0);
            if (x >= lam && rho < 1.0 && pmf * rho / (1.0 - rho) < tail_mass) break;
            pmf *= rho;
        }
        return pts;
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        std::uniform_real_distribution<double> d(std::log(0.1), std::log(10.0));
        Vec c(1);
        c[0] = std::exp(d(rng));
        return c;
    }
};

// ---------------------------------------------------------------------------
// geometric: pmf theta (1-theta)^(x-1), x in {1, 2, ...};
// g = 1/(theta^2 (1-theta)), arc 2 atanh(sqrt(1-theta)).

class Geometric final : public DiscreteOneParam {
public:
    Geometric() : DiscreteOneParam("geometric", "geometric") {}

    void validate(const Vec& c) const override { validate_theta(c); }

    double log_density(const Vec& c, const Vec& x) const override {
        const int xi = static_cast<int>(std::llround(x[0]));
        if (xi < 1) throw SupportError("trial count must be at least 1");
        return std::log(c[0]) + (xi - 1) * std::log1p(-c[0]);
    }

    Mat fisher(const Vec& c) const override {
        Mat g(1, 1);
        g(0, 0) = 1.0 / (c[0] * c[0] * (1.0 - c[0]));
        return g;
    }

    double arc_coord(double th) const override {
        return 2.0 * std::atanh(std::sqrt(1.0 - th));
    }
    double arc_coord_inv(double s) const override {
        const double t = std::tanh(0.5 * s);
        return 1.0 - t * t;
    }

    std::vector<Vec> support_points(const Vec& c, double tail_mass) const override {
        const double th = c[0];
        std::vector<Vec> pts;
        double pmf = th;
        for (int x = 1; x < 1000000; ++x) {
            pts.push_back(scalar_point(x));
            if (pmf * (1.0 - th) / th < tail_mass) break;
            pmf *= 1.0 - th;
        }
        return pts;
    }

    Vec sample_point(std::mt19937_64& rng) const override { return theta_box(rng); }
};

// ---------------------------------------------------------------------------
// negative binomial(r): pmf C(x+r-1, x) theta^r (1-theta)^x, x in {0, 1, ...};
// g = r/(theta^2 (1-theta)), arc 2 sqrt(r) atanh(sqrt(1-theta)).

class NegativeBinomial final : public DiscreteOneParam {
public:
    explicit NegativeBinomial(int r)
        : DiscreteOneParam("negative_binomial",
                           "negative_binomial(r=" + std::to_string(r) + ")"),
          r_(r) {}

    void validate(const Vec& c) const override { validate_theta(c); }

    double log_density(const Vec& c, const Vec& x) const override {
        const int xi = static_cast<int>(std::llround(x[0]));
        if (xi < 0) throw SupportError("count must be nonnegative");
        const double th = c[0];
        return std::lgamma(xi + static_cast<double>(r_)) - std::lgamma(static_cast<double>(r_)) -
               std::lgamma(xi + 1.0) + r_ * std::log(th) + xi * std::log1p(-th);
    }

    Mat fisher(const Vec& c) const override {
        Mat g(1, 1);
        g(0, 0) = r_ / (c[0] * c[0] * (1.0 - c[0]));
        return g;
    }

    double arc_coord(double th) const override {
        return 2.0 * std::sqrt(static_cast<double>(r_)) * std::atanh(std::sqrt(1.0 - th));
    }
    double arc_coord_inv(double s) const override {
        const double t = std::tanh(0.5 * s / std::sqrt(static_cast<double>(r_)));
        return 1.0 - t * t;
    }

    std::vector<Vec> support_points(const Vec& c, double tail_mass) const override {
        const double th = c[0];
        std::vector<Vec> pts;
        double pmf = std::pow(th, r_);
        for (int x = 0; x < 1000000; ++x) {
            pts.push_back(scalar_point(x));
            const double rho = (x + static_cast<double>(r_)) / (x + 1.0) * (1.0 - th);
            if (rho < 1.0 && pmf * rho / (1.0 - rho) < tail_mass) break;
            pmf *= rho;
        }
        return pts;
    }

    Vec sample_point(std::mt19937_64& rng) const override { return theta_box(rng); }

private:
    int r_;
};

// ---------------------------------------------------------------------------
// Simplex-parametrised families. Canonical coordinates are the n-1 free
// probabilities (p_1, ..., p_{n-1}); p_n = 1 - sum is implied. A full
// n-vector summing to 1 within 1e-9 is accepted and renormalised.

class SimplexFamily : public Family {
public:
    SimplexFamily(std::string name, std::string id, int n)
        : Family(std::move(name), std::move(id)), n_(n) {}

    int dim() const override { return n_ - 1; }

    Vec normalize_coords(const Vec& coords) const override {
        if (coords.size() == n_ - 1) return coords;
        if (coords.size() != n_)
            throw DomainError("expected " + std::to_string(n_ - 1) + " free or " +
                              std::to_string(n_) + " full probability coordinates");
        const double s = coords.sum();
        if (!std::isfinite(s) || std::fabs(s - 1.0) > 1e-9)
            throw DomainError("probabilities must sum to 1 within 1e-9");
        return (coords / s).head(n_ - 1);
    }

    void validate(const Vec& c) const override {
        if (c.size() != n_ - 1)
            throw DomainError("expected " + std::to_string(n_ - 1) + " free coordinates");
        double s = 0.0;
        for (int i = 0; i < c.size(); ++i) {
            if (!std::isfinite(c[i]) || !(c[i] > 0.0))
                throw DomainError("probabilities must be positive");
            s += c[i];
        }
        if (!(s < 1.0)) throw DomainError("free probabilities must sum below 1");
    }

    Vec sample_point(std::mt19937_64& rng) const override {
        const double floor = std::fmin(0.02, 0.5 / n_);
        std::uniform_real_distribution<double> d(0.0, 1.0);
        Vec u(n_);
        for (int i = 0; i < n_; ++i) u[i] = d(rng);
        u /= u.sum();
        Vec p = ((u * (1.0 - floor * n_)).array() + floor).matrix();
        return p.head(n_ - 1);
    }

protected:
    int n_;

    /// Unit-sphere great-circle interpolation of sqrt(p); exact for the
    /// categorical metric and, up to the constant factor, multinomial.
    std::vector<Vec> slerp_path(const Vec& p, const Vec& q, int steps) const {
        const Vec wp = simplex_full(p).cwiseSqrt();
        const Vec wq = simplex_full(q).cwiseSqrt();
        const double omega = clamped_acos(wp.dot(wq));
        std::vector<Vec> out;
        out.reserve(steps + 1);
        for (int i = 0; i <= steps; ++i) {
            const double t = static_cast<double>(i) / steps;
            Vec w;
            if (omega < 1e-12) {
                w = (1.0 - t) * wp + t * wq;
            } else {
                w = (std::sin((1.0 - t) * omega) * wp + std::sin(t * omega) * wq) /
                    std::sin(omega);
            }
            Vec full = w.cwiseProduct(w);
            out.push_back(full.head(n_ - 1));
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// categorical(n): g_ij = delta_ij/p_i + 1/p_n on the free coordinates;
// distance 2 acos(sum sqrt(p_i q_i)), the great-circle arc on the
// radius-2 sphere under f(p) = 2 sqrt(p).

class Categorical final : public SimplexFamily {
public:
    explicit Categorical(int n)
        : SimplexFamily("categorical", "categorical(n=" + std::to_string(n) + ")", n) {}

    double log_density(const Vec& c, const Vec& x) const override {
        const int xi = static_cast<int>(std::llround(x[0]));
        if (xi < 1 || xi > n_) throw SupportError("category must lie in {1..n}");
        const Vec full = simplex_full(c);
        return std::log(full[xi - 1]);
    }

    Mat fisher(const Vec& c) const override {
        const double pn = 1.0 - c.sum();
        Mat g(n_ - 1, n_ - 1);
        for (int i = 0; i < n_ - 1; ++i)
            for (int j = 0; j < n_ - 1; ++j)
                g(i, j) = (i == j ? 1.0 / c[i] : 0.0) + 1.0 / pn;
        return g;
    }

    double distance(const Vec& p, const Vec& q) const override {
        const Vec fp = simplex_full(p);
        const Vec fq = simplex_full(q);
        double dot = 0.0;
        for (int i = 0; i < n_; ++i) dot += std::sqrt(fp[i] * fq[i]);
        return 2.0 * clamped_acos(dot);
    }

    std::vector<Vec> geodesic_path(const Vec& p, const Vec& q, int steps) const override {
        return slerp_path(p, q, steps);
    }

    std::vector<Vec> support_points(const Vec&, double) const override {
        std::vector<Vec> pts;
        pts.reserve(n_);
        for (int x = 1; x <= n_; ++x) pts.push_back(scalar_point(x));
        return pts;
    }
};

// ---------------------------------------------------------------------------
// multinomial(n, trials): the categorical geometry scaled by the trial
// count; samples are count vectors over the n categories.

class Multinomial final : public SimplexFamily {
public:
    Multinomial(int n, int trials)
        : SimplexFamily("multinomial",
                        "multinomial(n=" + std::to_string(n) +
                            ",trials=" + std::to_string(trials) + ")",
                        n),
          trials_(trials) {}

    double log_density(const Vec& c, const Vec& x) const override {
        if (x.size() != n_) throw SupportError("expected one count per category");
        const Vec full = simplex_full(c);
        double lp = std::lgamma(trials_ + 1.0);
        long total = 0;
        for (int i = 0; i < n_; ++i) {
            const long xi = std::llround(x[i]);
            if (xi < 0) throw SupportError("counts must be nonnegative");
            total += xi;
            lp += xi * std::log(full[i]) - std::lgamma(xi + 1.0);
        }
        if (total != trials_) throw SupportError("counts must sum to the trial count");
        return lp;
    }

    Mat fisher(const Vec& c) const override {
        const double pn = 1.0 - c.sum();
        Mat g(n_ - 1, n_ - 1);
        for (int i = 0; i < n_ - 1; ++i)
            for (int j = 0; j < n_ - 1; ++j)
                g(i, j) = trials_ * ((i == j ? 1.0 / c[i] : 0.0) + 1.0 / pn);
        return g;
    }

    double distance(const Vec& p, const Vec& q) const override {
        const Vec fp = simplex_full(p);
        const Vec fq = simplex_full(q);
        double dot = 0.0;
        for (int i = 0; i < n_; ++i) dot += std::sqrt(fp[i] * fq[i]);
        return 2.0 * std::sqrt(static_cast<double>(trials_)) * clamped_acos(dot);
    }

    std::vector<Vec> geodesic_path(const Vec& p, const Vec& q, int steps) const override {
        return slerp_path(p, q, steps);
    }

    std::vector<Vec> support_points(const Vec&, double) const override {
        std::vector<Vec> pts;
        Vec counts = Vec::Zero(n_);
        enumerate(counts, 0, trials_, pts);
        return pts;
    }

private:
    void enumerate(Vec& counts, int idx, int remaining, std::vector<Vec>& out) const {
        if (idx == n_ - 1) {
            counts[idx] = remaining;
            out.push_back(counts);
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            counts[idx] = v;
            enumerate(counts, idx + 1, remaining - v, out);
        }
    }

    int trials_;
};

// ---------------------------------------------------------------------------
// negative multinomial(n, x_n): counts over the first n-1 categories
// until the n-th outcome has occurred x_n times. Fisher
// g_ij = (x_n/p_n)(delta_ij/p_i + 1/p_n); the geometry is hyperbolic:
// sqrt(p) lies on the unit upper hemisphere carrying the hemisphere model
// metric, scaled by 2 sqrt(x_n).

class NegativeMultinomial final : public SimplexFamily {
public:
    NegativeMultinomial(int n, int x_n)
        : SimplexFamily("negative_multinomial",
                        "negative_multinomial(n=" + std::to_string(n) +
                            ",x_n=" + std::to_string(x_n) + ")",
                        n),
          xn_(x_n) {}

    double log_density(const Vec& c, const Vec& x) const override {
        if (x.size() != n_ - 1) throw SupportError("expected n-1 category counts");
        const Vec full = simplex_full(c);
        long total = 0;
        double lp = xn_ * std::log(full[n_ - 1]) - std::lgamma(static_cast<double>(xn_));
        for (int i = 0; i < n_ - 1; ++i) {
            const long xi = std::llround(x[i]);
            if (xi < 0) throw SupportError("counts must be nonnegative");
            total += xi;
            lp += xi * std::log(full[i]) - std::lgamma(xi + 1.0);
        }
        lp += std::lgamma(total + static_cast<double>(xn_));
        return lp;
    }

    Mat fisher(const Vec& c) const override {
        const double pn = 1.0 - c.sum();
        Mat g(n_ - 1, n_ - 1);
        for (int i = 0; i < n_ - 1; ++i)
            for (int j = 0; j < n_ - 1; ++j)
                g(i, j) = xn_ / pn * ((i == j ? 1.0 / c[i] : 0.0) + 1.0 / pn);
        return g;
    }

    double distance(const Vec& p, const Vec& q) const override {
        const Vec fp = simplex_full(p);
        const Vec fq = simplex_full(q);
        double dot = 0.0;
        for (int i = 0; i < n_ - 1; ++i) dot += std::sqrt(fp[i] * fq[i]);
        const double arg = (1.0 - dot) / std::sqrt(fp[n_ - 1] * fq[n_ - 1]);
        return 2.0 * std::sqrt(static_cast<double>(xn_)) * clamped_acosh(arg);
    }

    // Geodesics through the hemisphere model: sqrt(p) on the unit upper
    // hemisphere (height sqrt(p_n)), centrally projected to the Poincare
    // half-space, where geodesics are vertical lines or circles. The
    // parameter region is an intersection of totally geodesic walls
    // (u_j > 0 and |u| < 2), so paths between interior points stay inside.
    std::vector<Vec> geodesic_path(const Vec& p, const Vec& q, int steps) const override {
        const Vec up = to_halfspace(p);
        const Vec uq = to_halfspace(q);
        const int h = n_ - 2; // horizontal components
        const Vec dh = uq.head(h) - up.head(h);
        const double span = dh.norm();
        const Vec ehat = span > 0.0 ? Vec(dh / span) : Vec(Vec::Zero(h));
        std::vector<Vec> out;
        out.reserve(steps + 1);
        for (int i = 0; i <= steps; ++i) {
            const double t = static_cast<double>(i) / steps;
            auto [xt, yt] = scaled_geodesic_point({1.0, 1.0}, 0.0, up[h], span, uq[h], t);
            Vec u(n_ - 1);
            u.head(h) = up.head(h) + xt * ehat;
            u[h] = yt;
            out.push_back(from_halfspace(u));
        }
        return out;
    }

    std::vector<Vec> support_points(const Vec& c, double tail_mass) const override {
        const double pn = 1.0 - c.sum();
        // Shell s holds all count vectors with sum s; its total mass is the
        // negative binomial pmf of s, bounded onward by a geometric tail.
        // A first pass sizes the enumeration so an oversized request is
        // refused before anything is allocated.
        long shells = 0;
        double total = 0.0;
        for (long s = 0;; ++s) {
            // Compositions of s into n-1 parts: C(s + n - 2, n - 2).
            total += std::exp(std::lgamma(s + static_cast<double>(n_) - 1.0) -
                              std::lgamma(static_cast<double>(n_) - 1.0) -
                              std::lgamma(s + 1.0));
            if (total > 30000000.0)
                throw QuadratureError("discrete support enumeration exceeds budget");
            const double shell_mass =
                std::exp(std::lgamma(s + static_cast<double>(xn_)) -
                         std::lgamma(static_cast<double>(xn_)) - std::lgamma(s + 1.0) +
                         xn_ * std::log(pn) + s * std::log1p(-pn));
            const double rho = (s + static_cast<double>(xn_)) / (s + 1.0) * (1.0 - pn);
            if (rho < 1.0 && shell_mass * rho / (1.0 - rho) < tail_mass) {
                shells = s;
                break;
            }
        }
        std::vector<Vec> pts;
        pts.reserve(static_cast<size_t>(total) + 1);
        Vec counts = Vec::Zero(n_ - 1);
        for (long s = 0; s <= shells; ++s) enumerate_shell(counts, 0, s, pts);
        return pts;
    }

private:
    void enumerate_shell(Vec& counts, int idx, long remaining,
                         std::vector<Vec>& out) const {
        if (idx == n_ - 2) {
            counts[idx] = remaining;
            out.push_back(counts);
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            counts[idx] = v;
            enumerate_shell(counts, idx + 1, remaining - v, out);
        }
    }

    /// sqrt(p) -> central projection from (-1, 0, ..., 0), height last.
    Vec to_halfspace(const Vec& free) const {
        const Vec w = simplex_full(free).cwiseSqrt();
        Vec u(n_ - 1);
        for (int j = 0; j < n_ - 1; ++j) u[j] = 2.0 * w[j + 1] / (w[0] + 1.0);
        return u;
    }

    Vec from_halfspace(const Vec& u) const {
        const double s = 4.0 + u.squaredNorm();
        Vec w(n_);
        w[0] = (4.0 - u.squaredNorm()) / s;
        for (int j = 0; j < n_ - 1; ++j) w[j + 1] = 4.0 * u[j] / s;
        Vec full = w.cwiseProduct(w);
        return full.head(n_ - 1);
    }

    int xn_;
};

} // namespace

FamilyPtr make_binomial(int n) {
    if (n < 1) throw DomainError("n must be a positive integer");
    return std::make_shared<Binomial>(n);
}

FamilyPtr make_poisson() {
    static FamilyPtr f = std::make_shared<Poisson>();
    return f;
}

FamilyPtr make_geometric() {
    static FamilyPtr f = std::make_shared<Geometric>();
    return f;
}

FamilyPtr make_negative_binomial(int r) {
    if (r < 1) throw DomainError("r must be a positive integer");
    return std::make_shared<NegativeBinomial>(r);
}

FamilyPtr make_categorical(int n) {
    if (n < 2) throw DomainError("n must be at least 2");
    return std::make_shared<Categorical>(n);
}

FamilyPtr make_multinomial(int n, int trials) {
    if (n < 2) throw DomainError("n must be at least 2");
    if (trials < 1) throw DomainError("trials must be a positive integer");
    return std::make_shared<Multinomial>(n, trials);
}

FamilyPtr make_negative_multinomial(int n, int x_n) {
    if (n < 2) throw DomainError("n must be at least 2");
    if (x_n < 1) throw DomainError("x_n must be a positive integer");
    return std::make_shared<NegativeMultinomial>(n, x_n);
}

} // namespace raodist
