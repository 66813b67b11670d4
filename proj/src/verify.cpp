#include "raodist/verify.hpp"

#include "raodist/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace raodist {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Worst entrywise deviation, normalised by sqrt(g_ii g_jj) so the
/// comparison is invariant under per-coordinate rescaling.
double matrix_rel_err(const Mat& numeric, const Mat& analytic) {
    double worst = 0.0;
    for (int i = 0; i < analytic.rows(); ++i)
        for (int j = 0; j < analytic.cols(); ++j) {
            const double scale = std::sqrt(analytic(i, i) * analytic(j, j));
            worst = std::fmax(worst,
                              std::fabs(numeric(i, j) - analytic(i, j)) / scale);
        }
    return worst;
}

struct Instance {
    FamilyPtr family;
    bool check_bvp;
    bool check_hessian;
};

// The second-difference Hessian estimator is first-order accurate at
// density kinks, so the Laplace and generalized Gaussian instances skip
// that cross-check; Pareto and the power function are refused by design.
std::vector<Instance> default_instances() {
    std::vector<Instance> v;
    auto add = [&](const std::string& name, std::map<std::string, double> hyper,
                   bool hessian) {
        v.push_back({make_family(name, hyper), true, hessian});
    };
    add("gaussian", {}, true);
    add("laplace", {}, false);
    add("generalized_gaussian", {{"beta", 1.5}}, false);
    add("logistic", {}, true);
    add("cauchy", {}, true);
    add("student_t", {{"nu", 3}}, true);
    add("log_gaussian", {}, true);
    add("inverse_gaussian", {}, true);
    add("gumbel", {}, true);
    add("frechet", {}, true);
    add("weibull", {}, true);
    add("reversed_weibull", {}, true);
    add("pareto", {}, false);
    add("power_function", {}, false);
    add("exponential", {}, true);
    add("rayleigh", {}, true);
    add("erlang", {{"k", 3}}, true);
    add("binomial", {{"n", 8}}, true);
    add("poisson", {}, true);
    add("geometric", {}, true);
    add("negative_binomial", {{"r", 4}}, true);
    add("categorical", {{"n", 3}}, true);
    add("multinomial", {{"n", 3}, {"trials", 5}}, true);
    add("negative_multinomial", {{"n", 3}, {"x_n", 2}}, true);
    return v;
}

} // namespace

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    report.options = options;
    report.pass = true;
    std::mt19937_64 rng(options.seed);

    for (const Instance& inst : default_instances()) {
        const FamilyPtr& fam = inst.family;
        FamilyReport fr;
        fr.family = fam->id();
        fr.max_fisher_rel_err = 0.0;
        fr.max_bvp_rel_err = 0.0;
        fr.max_hessian_rel_err = 0.0;
        fr.bvp_checked = inst.check_bvp;
        fr.hessian_checked = inst.check_hessian;

        for (int k = 0; k < options.fisher_points; ++k) {
            const ParamPoint p = validate_params(fam, fam->sample_point(rng));
            const Mat numeric = numeric_fisher_expectation(p);
            const Mat analytic = fisher(p);
            fr.max_fisher_rel_err =
                std::fmax(fr.max_fisher_rel_err, matrix_rel_err(numeric, analytic));
        }

        if (inst.check_hessian) {
            for (int k = 0; k < options.hessian_points; ++k) {
                const ParamPoint p = validate_params(fam, fam->sample_point(rng));
                const Mat numeric = numeric_fisher_hessian(p);
                const Mat analytic = fisher(p);
                fr.max_hessian_rel_err = std::fmax(fr.max_hessian_rel_err,
                                                   matrix_rel_err(numeric, analytic));
            }
        }

        if (inst.check_bvp) {
            for (int k = 0; k < options.bvp_pairs; ++k) {
                ParamPoint p = validate_params(fam, fam->sample_point(rng));
                ParamPoint q = validate_params(fam, fam->sample_point(rng));
                double d0 = distance(p, q);
                for (int tries = 0; d0 < 1e-3 && tries < 100; ++tries) {
                    q = validate_params(fam, fam->sample_point(rng));
                    d0 = distance(p, q);
                }
                const double db = geodesic_bvp_distance(p, q);
                fr.max_bvp_rel_err =
                    std::fmax(fr.max_bvp_rel_err, std::fabs(db - d0) / d0);
            }
        }

        fr.pass = fr.max_fisher_rel_err <= options.fisher_rel_tol &&
                  (!fr.bvp_checked || fr.max_bvp_rel_err <= options.bvp_rel_tol) &&
                  (!fr.hessian_checked ||
                   fr.max_hessian_rel_err <= options.hessian_rel_tol);
        report.pass = report.pass && fr.pass;
        report.families.push_back(std::move(fr));
    }
    return report;
}

std::string verify_report_json(const VerifyReport& report) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"seed\": " << report.options.seed << ",\n";
    os << "  \"fisher_points\": " << report.options.fisher_points << ",\n";
    os << "  \"bvp_pairs\": " << report.options.bvp_pairs << ",\n";
    os << "  \"hessian_points\": " << report.options.hessian_points << ",\n";
    os << "  \"tolerances\": {\"fisher_rel\": " << g17(report.options.fisher_rel_tol)
       << ", \"bvp_rel\": " << g17(report.options.bvp_rel_tol)
       << ", \"hessian_rel\": " << g17(report.options.hessian_rel_tol) << "},\n";
    os << "  \"families\": [\n";
    for (std::size_t i = 0; i < report.families.size(); ++i) {
        const FamilyReport& fr = report.families[i];
        os << "    {\"family\": \"" << fr.family << "\", \"max_fisher_rel_err\": "
           << g17(fr.max_fisher_rel_err);
        if (fr.bvp_checked)
            os << ", \"max_bvp_rel_err\": " << g17(fr.max_bvp_rel_err);
        else
            os << ", \"max_bvp_rel_err\": null";
        if (fr.hessian_checked)
            os << ", \"max_hessian_rel_err\": " << g17(fr.max_hessian_rel_err);
        else
            os << ", \"max_hessian_rel_err\": null";
        os << ", \"pass\": " << (fr.pass ? "true" : "false") << "}";
        os << (i + 1 < report.families.size() ? ",\n" : "\n");
    }
    os << "  ],\n";
    os << "  \"pass\": " << (report.pass ? "true" : "false") << "\n";
    os << "}\n";
    return os.str();
}

} // namespace raodist
