#include "raodist/quadrature.hpp"

#include "raodist/errors.hpp"

#include <algorithm>
#include <cmath>

namespace raodist {

namespace {

struct AdaptiveState {
    const std::function<Vec(double)>& f;
    double abs_tol;
    int budget;
    double total_width;
    double noise_rel;
    int used = 0;
    Vec peak; // running per-component max of |f| over all evaluations
};

Vec eval(AdaptiveState& st, double t) {
    Vec v = st.f(t);
    if (st.peak.size() == 0) st.peak = Vec::Zero(v.size());
    for (int k = 0; k < v.size(); ++k) {
        const double m = std::fabs(v[k]);
        if (std::isfinite(m) && m > st.peak[k]) st.peak[k] = m;
    }
    return v;
}

Vec simpson(const Vec& fa, const Vec& fm, const Vec& fb, double h) {
    return (h / 6.0) * (fa + 4.0 * fm + fb);
}

// Classic adaptive Simpson with Richardson correction; an interval is
// accepted when every component's |S_fine - S_coarse| passes its
// width-proportional share of the absolute tolerance, or has stalled at
// that component's declared roundoff floor. The floor is per component:
// finite-difference noise scales with each component's own magnitude, and
// a shared floor would let the largest component loosen the criterion for
// the small ones.
Vec refine(AdaptiveState& st, double a, double b, const Vec& fa, const Vec& fm,
           const Vec& fb, const Vec& coarse) {
    const double m = 0.5 * (a + b);
    const Vec flm = eval(st, 0.5 * (a + m));
    const Vec frm = eval(st, 0.5 * (m + b));
    const Vec left = simpson(fa, flm, fm, m - a);
    const Vec right = simpson(fm, frm, fb, b - m);
    const Vec err = left + right - coarse;
    const double share = st.abs_tol * (b - a) / st.total_width;
    bool settled = true;
    for (int k = 0; k < err.size() && settled; ++k)
        settled = std::fabs(err[k]) <= 15.0 * share ||
                  std::fabs(err[k]) <= st.noise_rel * st.peak[k] * (b - a);
    if (settled || (b - a) <= 1e-13 * st.total_width)
        return left + right + err / 15.0;
    if (++st.used > st.budget)
        throw QuadratureError("adaptive quadrature exhausted its subdivision budget");
    return refine(st, a, m, fa, flm, fm, left) + refine(st, m, b, fm, frm, fb, right);
}

Vec integrate_piece(AdaptiveState& st, double a, double b) {
    const Vec fa = eval(st, a);
    const Vec fm = eval(st, 0.5 * (a + b));
    const Vec fb = eval(st, b);
    return refine(st, a, b, fa, fm, fb, simpson(fa, fm, fb, b - a));
}

} // namespace

Vec integrate_adaptive(const std::function<Vec(double)>& f, double lo, double hi,
                       double abs_tol, int max_subdivisions, double noise_rel) {
    return integrate_adaptive(f, std::vector<double>{lo, hi}, abs_tol,
                              max_subdivisions, noise_rel);
}

Vec integrate_adaptive(const std::function<Vec(double)>& f,
                       const std::vector<double>& points, double abs_tol,
                       int max_subdivisions, double noise_rel) {
    if (points.size() < 2)
        throw QuadratureError("quadrature needs at least two nodes");
    std::vector<double> nodes(points);
    std::sort(nodes.begin(), nodes.end());
    AdaptiveState st{f, abs_tol, max_subdivisions,
                     nodes.back() - nodes.front(), noise_rel};
    if (!(st.total_width > 0.0))
        throw QuadratureError("quadrature interval is empty");
    // Prime the per-component peaks with a coarse scan of the whole domain
    // before refining anything. Pieces are refined in order, and a tail
    // piece processed before the bulk of the mass would otherwise see only
    // noise-scale peaks, making its roundoff floor meaningless and the
    // refinement of finite-difference jitter endless.
    if (st.noise_rel > 0.0)
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            for (int k = 1; k < 16; ++k)
                (void)eval(st, nodes[i] + (nodes[i + 1] - nodes[i]) * k / 16.0);
    Vec total;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (!(nodes[i + 1] > nodes[i])) continue;
        const Vec piece = integrate_piece(st, nodes[i], nodes[i + 1]);
        total = (total.size() == 0) ? piece : Vec(total + piece);
    }
    return total;
}

} // namespace raodist
