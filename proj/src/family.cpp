#include "raodist/family.hpp"

#include "raodist/families_continuous.hpp"
#include "raodist/families_discrete.hpp"
#include "raodist/families_elliptical.hpp"
#include "raodist/families_matrix.hpp"

#include <cmath>

namespace raodist {

std::vector<Vec> Family::geodesic_path(const Vec&, const Vec&, int) const {
    throw UnsupportedError(id() + " has no closed-form geodesic");
}

bool Family::in_domain(const Vec& coords) const {
    try {
        validate(coords);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

ParamPoint validate_params(const FamilyPtr& family, const Vec& coords) {
    Vec canonical = family->normalize_coords(coords);
    family->validate(canonical);
    return ParamPoint{family, std::move(canonical)};
}

double log_density(const ParamPoint& p, const Vec& x) {
    return p.family->log_density(p.coords, x);
}

static void check_same_family(const ParamPoint& p, const ParamPoint& q) {
    if (p.family->id() != q.family->id())
        throw MismatchError("family mismatch: " + p.family->id() +
                            " vs " + q.family->id());
}

double distance(const ParamPoint& p, const ParamPoint& q) {
    check_same_family(p, q);
    // Identity of indiscernibles holds exactly at coordinate equality.
    if (p.coords == q.coords) return 0.0;
    return p.family->distance(p.coords, q.coords);
}

Mat fisher(const ParamPoint& p) {
    return p.family->fisher(p.coords);
}

std::vector<Vec> geodesic_path(const ParamPoint& p, const ParamPoint& q, int steps) {
    check_same_family(p, q);
    if (steps < 1) throw DomainError("steps must be a positive integer");
    if (steps == 1) return {p.coords, q.coords};
    std::vector<Vec> path = p.family->geodesic_path(p.coords, q.coords, steps);
    path.front() = p.coords;
    path.back() = q.coords;
    return path;
}

namespace {

double hyper_get(const std::map<std::string, double>& hyper,
                 const std::string& key, double fallback,
                 bool required = false) {
    auto it = hyper.find(key);
    if (it == hyper.end()) {
        if (required)
            throw DomainError("family requires hyperparameter '" + key + "'");
        return fallback;
    }
    return it->second;
}

int hyper_int(const std::map<std::string, double>& hyper,
              const std::string& key, double fallback, bool required = false) {
    const double v = hyper_get(hyper, key, fallback, required);
    const double r = std::round(v);
    if (std::fabs(v - r) > 1e-9)
        throw DomainError("hyperparameter '" + key + "' must be an integer");
    return static_cast<int>(r);
}

} // namespace

FamilyPtr make_family(const std::string& name,
                      const std::map<std::string, double>& hyper) {
    if (name == "gaussian") return make_gaussian();
    if (name == "laplace") return make_laplace();
    if (name == "generalized_gaussian")
        return make_generalized_gaussian(hyper_get(hyper, "beta", 0.0, true));
    if (name == "logistic") return make_logistic();
    if (name == "cauchy") return make_cauchy();
    if (name == "student_t")
        return make_student_t(hyper_get(hyper, "nu", 0.0, true));
    if (name == "exponential") return make_exponential();
    if (name == "rayleigh") return make_rayleigh();
    if (name == "erlang") return make_erlang(hyper_int(hyper, "k", 0, true));
    if (name == "log_gaussian") return make_log_gaussian();
    if (name == "inverse_gaussian") return make_inverse_gaussian();
    if (name == "gumbel") return make_gumbel();
    if (name == "frechet") return make_frechet();
    if (name == "weibull") return make_weibull();
    if (name == "reversed_weibull") return make_reversed_weibull();
    if (name == "pareto") return make_pareto();
    if (name == "power_function") return make_power_function();
    if (name == "binomial") return make_binomial(hyper_int(hyper, "n", 0, true));
    if (name == "poisson") return make_poisson();
    if (name == "geometric") return make_geometric();
    if (name == "negative_binomial")
        return make_negative_binomial(hyper_int(hyper, "r", 0, true));
    if (name == "categorical") return make_categorical(hyper_int(hyper, "n", 3));
    if (name == "multinomial")
        return make_multinomial(hyper_int(hyper, "n", 3),
                                hyper_int(hyper, "trials", 0, true));
    if (name == "negative_multinomial")
        return make_negative_multinomial(hyper_int(hyper, "n", 3),
                                         hyper_int(hyper, "x_n", 0, true));
    if (name == "wishart")
        return make_wishart(hyper_int(hyper, "m", 2),
                            hyper_get(hyper, "n", 0.0, true));
    if (name == "inverse_wishart")
        return make_inverse_wishart(hyper_int(hyper, "m", 2),
                                    hyper_get(hyper, "n", 0.0, true));
    throw DomainError("unknown family '" + name + "'");
}

std::vector<std::string> registered_families() {
    return {
        "gaussian", "laplace", "generalized_gaussian", "logistic", "cauchy",
        "student_t", "exponential", "rayleigh", "erlang", "log_gaussian",
        "inverse_gaussian", "gumbel", "frechet", "weibull", "reversed_weibull",
        "pareto", "power_function", "binomial", "poisson", "geometric",
        "negative_binomial", "categorical", "multinomial",
        "negative_multinomial", "wishart", "inverse_wishart",
    };
}

} // namespace raodist
