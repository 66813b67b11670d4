#include "raodist/oracle.hpp"

#include "raodist/families_discrete.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include <cmath>
#include <limits>

namespace raodist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double score_step_size(double coord) { return 1e-6 * std::fmax(std::fabs(coord), 0.01); }

/// Finite-difference score vector d/dxi log p(x; xi). One-sided
/// second-order stencils where the support depends on the parameter.
/// Returns false when the log-density is not finite at the base point.
bool fd_scores(const Family& fam, const Vec& coords, const Vec& x, Vec& out) {
    const double base = fam.log_density(coords, x);
    if (!std::isfinite(base)) return false;
    const int d = static_cast<int>(coords.size());
    out.resize(d);
    Vec shifted = coords;
    for (int i = 0; i < d; ++i) {
        const double h = score_step_size(coords[i]);
        double s = 0.0;
        switch (fam.score_step(i)) {
        case ScoreStep::Central: {
            shifted[i] = coords[i] + h;
            const double up = fam.log_density(shifted, x);
            shifted[i] = coords[i] - h;
            const double dn = fam.log_density(shifted, x);
            s = (up - dn) / (2.0 * h);
            break;
        }
        case ScoreStep::BackwardOnly: {
            shifted[i] = coords[i] - h;
            const double m1 = fam.log_density(shifted, x);
            shifted[i] = coords[i] - 2.0 * h;
            const double m2 = fam.log_density(shifted, x);
            s = (3.0 * base - 4.0 * m1 + m2) / (2.0 * h);
            break;
        }
        case ScoreStep::ForwardOnly: {
            shifted[i] = coords[i] + h;
            const double p1 = fam.log_density(shifted, x);
            shifted[i] = coords[i] + 2.0 * h;
            const double p2 = fam.log_density(shifted, x);
            s = (-3.0 * base + 4.0 * p1 - p2) / (2.0 * h);
            break;
        }
        }
        shifted[i] = coords[i];
        if (!std::isfinite(s)) return false;
        out[i] = s;
    }
    return true;
}

Mat unpack_symmetric(const Vec& packed, int d) {
    Mat g(d, d);
    int k = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) g(i, j) = g(j, i) = packed[k++];
    return g;
}

Mat discrete_fisher_sum(const ParamPoint& p, const QuadratureScheme& scheme,
                        const std::vector<Vec>& pts) {
    const int d = static_cast<int>(p.coords.size());
    Mat acc = Mat::Zero(d, d);
    Vec s;
    for (const Vec& x : pts) {
        const double w = std::exp(p.family->log_density(p.coords, x));
        if (!(w > 0.0)) continue;
        if (!fd_scores(*p.family, p.coords, x, s)) continue;
        acc.noalias() += w * (s * s.transpose());
    }
    (void)scheme;
    return acc;
}

Mat continuous_fisher_quadrature(const ParamPoint& p, const QuadratureScheme& scheme,
                                 const QuadratureMap& map) {
    const int d = static_cast<int>(p.coords.size());
    const int packed = d * (d + 1) / 2;
    auto integrand = [&](double t) -> Vec {
        Vec out = Vec::Zero(packed);
        const double xv = map.x(t);
        if (!std::isfinite(xv)) return out;
        Vec x(1);
        x[0] = xv;
        try {
            const double lp = p.family->log_density(p.coords, x);
            if (!std::isfinite(lp)) return out;
            const double w = std::exp(lp) * std::fabs(map.dx_dt(t));
            if (!(w > 0.0) || !std::isfinite(w)) return out;
            Vec s;
            if (!fd_scores(*p.family, p.coords, x, s)) return out;
            int k = 0;
            for (int i = 0; i < d; ++i)
                for (int j = i; j < d; ++j) out[k++] = w * s[i] * s[j];
        } catch (const SupportError&) {
            // Maps can underflow onto the support boundary in far tails;
            // such points carry no mass.
            out.setZero();
        }
        return out;
    };
    std::vector<double> nodes;
    nodes.push_back(map.t_lo);
    for (double b : map.breaks)
        if (b > map.t_lo && b < map.t_hi) nodes.push_back(b);
    nodes.push_back(map.t_hi);
    const Vec total =
        integrate_adaptive(integrand, nodes, scheme.abs_tol, scheme.max_subdivisions,
                           scheme.noise_rel);
    return unpack_symmetric(total, d);
}

} // namespace

Mat numeric_fisher_expectation(const ParamPoint& p, const QuadratureScheme& scheme) {
    const auto pts = p.family->support_points(p.coords, scheme.tail_mass);
    if (!pts.empty()) return discrete_fisher_sum(p, scheme, pts);
    const auto map = p.family->quadrature_map(p.coords);
    if (!map)
        throw UnsupportedError("family " + p.family->id() +
                               " has no quadrature map or support enumeration");
    return continuous_fisher_quadrature(p, scheme, *map);
}

Mat numeric_fisher_hessian(const ParamPoint& p, const QuadratureScheme& scheme) {
    if (!p.family->fixed_support())
        throw UnsupportedError(
            "Hessian-form Fisher is invalid for " + p.family->id() +
            ": the support depends on the parameters and the boundary terms "
            "do not vanish");
    const int d = static_cast<int>(p.coords.size());
    const int packed = d * (d + 1) / 2;
    // Steps are taken in the metric's own natural units, h_i = c/sqrt(g_ii):
    // the log-density varies by O(1) over that scale in every coordinate,
    // which equalises O(h^2) truncation across parametrisations and keeps
    // the roundoff of second differences (~eps/h^2 relative) at a level the
    // integrator's noise floor absorbs. The closed form enters only the
    // step choice, never the estimate, so an incorrect metric can only
    // degrade precision and make the agreement check fail louder.
    const Mat natural = p.family->fisher(p.coords);
    Vec h(d);
    for (int i = 0; i < d; ++i)
        h[i] = 3e-4 / std::sqrt(natural(i, i));

    // Packed vector of second differences of log p in the parameters.
    auto hess_packed = [&](const Vec& x) -> Vec {
        Vec out(packed);
        Vec c = p.coords;
        const double base = p.family->log_density(c, x);
        int k = 0;
        for (int i = 0; i < d; ++i) {
            for (int j = i; j < d; ++j) {
                double v;
                if (i == j) {
                    c[i] = p.coords[i] + h[i];
                    const double up = p.family->log_density(c, x);
                    c[i] = p.coords[i] - h[i];
                    const double dn = p.family->log_density(c, x);
                    c[i] = p.coords[i];
                    v = (up - 2.0 * base + dn) / (h[i] * h[i]);
                } else {
                    double quad[4];
                    const double si[4] = {1.0, 1.0, -1.0, -1.0};
                    const double sj[4] = {1.0, -1.0, 1.0, -1.0};
                    for (int q = 0; q < 4; ++q) {
                        c[i] = p.coords[i] + si[q] * h[i];
                        c[j] = p.coords[j] + sj[q] * h[j];
                        quad[q] = p.family->log_density(c, x);
                    }
                    c[i] = p.coords[i];
                    c[j] = p.coords[j];
                    v = (quad[0] - quad[1] - quad[2] + quad[3]) / (4.0 * h[i] * h[j]);
                }
                out[k++] = v;
            }
        }
        return out;
    };

    const auto pts = p.family->support_points(p.coords, scheme.tail_mass);
    if (!pts.empty()) {
        Vec acc = Vec::Zero(packed);
        for (const Vec& x : pts) {
            const double w = std::exp(p.family->log_density(p.coords, x));
            if (!(w > 0.0)) continue;
            acc += w * hess_packed(x);
        }
        return -unpack_symmetric(acc, d);
    }
    const auto map = p.family->quadrature_map(p.coords);
    if (!map)
        throw UnsupportedError("family " + p.family->id() +
                               " has no quadrature map or support enumeration");
    auto integrand = [&](double t) -> Vec {
        Vec out = Vec::Zero(packed);
        const double xv = map->x(t);
        if (!std::isfinite(xv)) return out;
        Vec x(1);
        x[0] = xv;
        try {
            const double lp = p.family->log_density(p.coords, x);
            if (!std::isfinite(lp)) return out;
            const double w = std::exp(lp) * std::fabs(map->dx_dt(t));
            if (!(w > 0.0) || !std::isfinite(w)) return out;
            const Vec hp = hess_packed(x);
            for (int k = 0; k < packed; ++k)
                out[k] = std::isfinite(hp[k]) ? w * hp[k] : 0.0;
        } catch (const SupportError&) {
            out.setZero();
        }
        return out;
    };
    std::vector<double> nodes;
    nodes.push_back(map->t_lo);
    for (double b : map->breaks)
        if (b > map->t_lo && b < map->t_hi) nodes.push_back(b);
    nodes.push_back(map->t_hi);
    const Vec total =
        integrate_adaptive(integrand, nodes, scheme.abs_tol, scheme.max_subdivisions,
                           scheme.noise_rel);
    return -unpack_symmetric(total, d);
}

double path_length(const FamilyPtr& family, const std::vector<Vec>& knots) {
    if (knots.size() < 2) throw DomainError("a path needs at least two knots");
    double len = 0.0;
    for (std::size_t j = 0; j + 1 < knots.size(); ++j) {
        const Vec mid = 0.5 * (knots[j] + knots[j + 1]);
        const Vec d = knots[j + 1] - knots[j];
        const Mat g = family->fisher(mid);
        len += std::sqrt(std::fmax(d.dot(g * d), 0.0));
    }
    return len;
}

std::vector<Mat> christoffel_fd(const ParamPoint& p, double step) {
    const int d = static_cast<int>(p.coords.size());
    // dG[l] = central difference of the metric along coordinate l.
    std::vector<Mat> dG(d);
    Vec c = p.coords;
    for (int l = 0; l < d; ++l) {
        const double h = step > 0.0 ? step : std::fmax(1e-5, 1e-5 * std::fabs(p.coords[l]));
        c[l] = p.coords[l] + h;
        const Mat up = p.family->fisher(c);
        c[l] = p.coords[l] - h;
        const Mat dn = p.family->fisher(c);
        c[l] = p.coords[l];
        dG[l] = (up - dn) / (2.0 * h);
    }
    const Mat g = p.family->fisher(p.coords);
    const Mat ginv = g.llt().solve(Mat::Identity(d, d));
    std::vector<Mat> gamma(d, Mat::Zero(d, d));
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j) {
                double s = 0.0;
                for (int l = 0; l < d; ++l)
                    s += ginv(k, l) * (dG[i](j, l) + dG[j](i, l) - dG[l](i, j));
                gamma[k](i, j) = gamma[k](j, i) = 0.5 * s;
            }
    return gamma;
}

namespace {

/// Discrete path energy sum |x_{j+1} - x_j|^2 in the Simpson-averaged
/// segment metric (G(a) + 4 G(mid) + G(b))/6; +inf when any midpoint
/// leaves the parameter domain. Weighting the knots as well as the
/// midpoint matters: a pure midpoint rule lets the minimiser park a
/// segment across a steep metric valley and pay only the cheap centre
/// value, which converges to a spurious short "distance".
double path_energy(const Family& fam, const std::vector<Vec>& xs) {
    double e = 0.0;
    Mat right = fam.fisher(xs.front());
    for (std::size_t j = 0; j + 1 < xs.size(); ++j) {
        const Vec mid = 0.5 * (xs[j] + xs[j + 1]);
        if (!fam.in_domain(mid)) return kInf;
        const Vec d = xs[j + 1] - xs[j];
        const Mat left = right;
        right = fam.fisher(xs[j + 1]);
        const double seg =
            (d.dot(left * d) + 4.0 * d.dot(fam.fisher(mid) * d) + d.dot(right * d)) /
            6.0;
        if (!std::isfinite(seg)) return kInf;
        e += seg;
    }
    return e;
}

std::vector<Vec> straight_chord(const Vec& p, const Vec& q, int segments) {
    std::vector<Vec> xs;
    xs.reserve(segments + 1);
    for (int j = 0; j <= segments; ++j) {
        const double t = static_cast<double>(j) / segments;
        xs.push_back((1.0 - t) * p + t * q);
    }
    return xs;
}

std::vector<Vec> resample_polyline(const std::vector<Vec>& xs, int segments) {
    const int old_segments = static_cast<int>(xs.size()) - 1;
    std::vector<Vec> out;
    out.reserve(segments + 1);
    for (int j = 0; j <= segments; ++j) {
        const double u = static_cast<double>(j) * old_segments / segments;
        const int base = std::min(static_cast<int>(u), old_segments - 1);
        const double frac = u - base;
        out.push_back((1.0 - frac) * xs[base] + frac * xs[base + 1]);
    }
    return out;
}

/// One Gauss-Newton pass with backtracking. The energy gradient is exact
/// for the Simpson-averaged segment metric; the Hessian keeps only the
/// metric terms, which makes it the SPD block tridiagonal matrix
/// [-2Ghat_{k-1} | 2(Ghat_{k-1}+Ghat_k) | -2Ghat_k] solved by block
/// elimination. Returns the relative energy decrease, or -1 when no
/// improving step exists.
double bvp_iteration(const Family& fam, std::vector<Vec>& xs, double& energy) {
    const int L = static_cast<int>(xs.size()) - 1;
    const int d = static_cast<int>(xs.front().size());
    const int m = L - 1; // interior knots
    if (m < 1) return -1.0;

    // Central-difference derivative of the metric along every coordinate.
    auto metric_grad = [&](const Vec& at) {
        std::vector<Mat> dg(d);
        Vec v = at;
        for (int l = 0; l < d; ++l) {
            const double h = std::fmax(1e-5, 1e-5 * std::fabs(at[l]));
            v[l] = at[l] + h;
            const Mat up = fam.fisher(v);
            v[l] = at[l] - h;
            const Mat dn = fam.fisher(v);
            v[l] = at[l];
            dg[l] = (up - dn) / (2.0 * h);
        }
        return dg;
    };

    // Segment quantities: Simpson-averaged metric Ghat and the
    // d^T dG d contraction at each segment midpoint.
    std::vector<Mat> Ghat(L);
    std::vector<Vec> diff(L), mcontr(L);
    Mat right = fam.fisher(xs.front());
    for (int j = 0; j < L; ++j) {
        const Vec mid = 0.5 * (xs[j] + xs[j + 1]);
        diff[j] = xs[j + 1] - xs[j];
        const Mat gm = fam.fisher(mid);
        const Mat left = right;
        right = fam.fisher(xs[j + 1]);
        Ghat[j] = (left + 4.0 * gm + right) / 6.0;
        const auto dgm = metric_grad(mid);
        mcontr[j].resize(d);
        for (int l = 0; l < d; ++l) mcontr[j][l] = diff[j].dot(dgm[l] * diff[j]);
    }

    std::vector<Vec> grad(m);
    for (int k = 1; k <= m; ++k) {
        const auto dgk = metric_grad(xs[k]);
        Vec kc(d);
        for (int l = 0; l < d; ++l)
            kc[l] = diff[k - 1].dot(dgk[l] * diff[k - 1]) +
                    diff[k].dot(dgk[l] * diff[k]);
        grad[k - 1] = 2.0 * (Ghat[k - 1] * diff[k - 1] - Ghat[k] * diff[k]) +
                      (2.0 * (mcontr[k - 1] + mcontr[k]) + kc) / 6.0;
    }

    // Block Thomas elimination: S_k are the Schur complements down the
    // diagonal, y the forward-substituted right-hand side.
    std::vector<Eigen::LLT<Mat>> S(m);
    std::vector<Vec> y(m);
    std::vector<Vec> step(m);
    S[0].compute(2.0 * (Ghat[0] + Ghat[1]));
    y[0] = grad[0];
    for (int k = 1; k < m; ++k) {
        const Mat C = -2.0 * Ghat[k]; // coupling between interior knots k and k+1
        S[k].compute(2.0 * (Ghat[k] + Ghat[k + 1]) -
                     C * S[k - 1].solve(Mat(C.transpose())));
        y[k] = grad[k] - C * S[k - 1].solve(y[k - 1]);
    }
    step[m - 1] = S[m - 1].solve(y[m - 1]);
    for (int k = m - 2; k >= 0; --k) {
        const Mat C = -2.0 * Ghat[k + 1];
        step[k] = S[k].solve(Vec(y[k] - C.transpose() * step[k + 1]));
    }

    double eta = 1.0;
    std::vector<Vec> trial = xs;
    for (int half = 0; half < 42; ++half) {
        bool inside = true;
        for (int k = 1; k < L; ++k) {
            trial[k] = xs[k] - eta * step[k - 1];
            if (!fam.in_domain(trial[k])) {
                inside = false;
                break;
            }
        }
        if (inside) {
            const double e = path_energy(fam, trial);
            if (e < energy) {
                const double rel = (energy - e) / energy;
                xs.swap(trial);
                energy = e;
                return rel;
            }
        }
        eta *= 0.5;
    }
    return -1.0;
}

} // namespace

double geodesic_bvp_distance(const ParamPoint& p, const ParamPoint& q, int knots,
                             int iters) {
    if (p.family->id() != q.family->id())
        throw MismatchError("family mismatch: " + p.family->id() + " vs " +
                            q.family->id());
    if (knots < 1) throw DomainError("knots must be positive");
    const Family& fam = *p.family;

    std::vector<int> levels;
    for (int L = std::min(8, knots); L < knots; L *= 2) levels.push_back(L);
    levels.push_back(knots);

    std::vector<Vec> xs = straight_chord(p.coords, q.coords, levels.front());
    int used = 0;
    bool level_converged = false;
    for (std::size_t li = 0; li < levels.size(); ++li) {
        if (li > 0) xs = resample_polyline(xs, levels[li]);
        double energy = path_energy(fam, xs);
        if (!std::isfinite(energy))
            throw NonConvergenceError("initial path leaves the parameter domain");
        level_converged = false;
        while (used < iters) {
            ++used;
            // A negative return means backtracking found no improving step,
            // i.e. the polyline sits at a numerical minimum. Otherwise stop
            // once the relative decrease stalls below 1e-9: even at the
            // slowest observed linear rates the remaining energy tail is
            // then orders of magnitude under the distance tolerance, while
            // steep-metric paths can dawdle near 1e-10 for thousands of
            // iterations without moving the length.
            if (bvp_iteration(fam, xs, energy) < 1e-9) {
                level_converged = true;
                break;
            }
        }
    }
    if (!level_converged)
        throw NonConvergenceError(
            "geodesic energy minimisation exhausted its iteration budget");
    return path_length(p.family, xs);
}

double geodesic_shooting_distance(const ParamPoint& p, const ParamPoint& q) {
    if (p.family->id() != q.family->id())
        throw MismatchError("family mismatch: " + p.family->id() + " vs " +
                            q.family->id());
    const Family& fam = *p.family;
    const int d = static_cast<int>(p.coords.size());
    const int steps = 200;

    auto accel = [&](const Vec& x, const Vec& v) -> Vec {
        const auto gamma = christoffel_fd(ParamPoint{p.family, x});
        Vec a(d);
        for (int k = 0; k < d; ++k) a[k] = -v.dot(gamma[k] * v);
        return a;
    };

    // RK4 on the first-order system (x, v) over t in [0, 1].
    auto shoot = [&](const Vec& v0) -> Vec {
        Vec x = p.coords, v = v0;
        const double dt = 1.0 / steps;
        for (int s = 0; s < steps; ++s) {
            const Vec k1x = v, k1v = accel(x, v);
            const Vec k2x = v + 0.5 * dt * k1v, k2v = accel(x + 0.5 * dt * k1x, k2x);
            const Vec k3x = v + 0.5 * dt * k2v, k3v = accel(x + 0.5 * dt * k2x, k3x);
            const Vec k4x = v + dt * k3v, k4v = accel(x + dt * k3x, k4x);
            x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
            v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        }
        return x;
    };

    const double scale = std::fmax(1.0, q.coords.norm());
    Vec v = q.coords - p.coords;
    Vec r = shoot(v) - q.coords;
    for (int it = 0; it < 60 && r.norm() > 1e-10 * scale; ++it) {
        Mat J(d, d);
        for (int i = 0; i < d; ++i) {
            Vec vh = v;
            const double h = 1e-6 * std::fmax(1.0, std::fabs(v[i]));
            vh[i] += h;
            J.col(i) = (shoot(vh) - q.coords - r) / h;
        }
        const Vec dv = J.fullPivLu().solve(r);
        double damp = 1.0;
        for (int half = 0; half < 12; ++half) {
            const Vec vn = v - damp * dv;
            const Vec rn = shoot(vn) - q.coords;
            if (rn.norm() < r.norm()) {
                v = vn;
                r = rn;
                break;
            }
            damp *= 0.5;
        }
    }
    if (r.norm() > 1e-6 * scale)
        throw NonConvergenceError("geodesic shooting failed to hit the endpoint");
    return std::sqrt(std::fmax(v.dot(fam.fisher(p.coords) * v), 0.0));
}

double kl_local_ratio(const ParamPoint& p, const ParamPoint& q) {
    if (p.family->id() != q.family->id())
        throw MismatchError("family mismatch: " + p.family->id() + " vs " +
                            q.family->id());
    const double d = distance(p, q);
    if (d == 0.0) throw DegenerateError("KL ratio is undefined at coincident points");
    const std::string& name = p.family->name();
    double kl;
    if (name == "gaussian") {
        const double mu1 = p.coords[0], s1 = p.coords[1];
        const double mu2 = q.coords[0], s2 = q.coords[1];
        kl = std::log(s2 / s1) +
             (s1 * s1 + (mu1 - mu2) * (mu1 - mu2)) / (2.0 * s2 * s2) - 0.5;
    } else if (name == "exponential") {
        const double l1 = p.coords[0], l2 = q.coords[0];
        kl = std::log(l1 / l2) + l2 / l1 - 1.0;
    } else if (name == "poisson") {
        const double l1 = p.coords[0], l2 = q.coords[0];
        kl = l2 - l1 + l1 * std::log(l1 / l2);
    } else if (name == "categorical") {
        const Vec fp = simplex_full(p.coords);
        const Vec fq = simplex_full(q.coords);
        kl = 0.0;
        for (int i = 0; i < fp.size(); ++i) kl += fp[i] * std::log(fp[i] / fq[i]);
    } else {
        throw UnsupportedError("no closed-form KL divergence for " + p.family->id());
    }
    return kl / (0.5 * d * d);
}

} // namespace raodist
