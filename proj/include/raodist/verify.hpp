#pragma once

#include "raodist/family.hpp"

#include <string>
#include <vector>

namespace raodist {

/// Verification thresholds and sampling effort.
struct VerifyOptions {
    std::uint64_t seed = 12345;
    int fisher_points = 10;   ///< sampled points per family, numeric Fisher
    int bvp_pairs = 20;       ///< sampled pairs per family, geodesic BVP
    int hessian_points = 2;   ///< sampled points, Hessian-form agreement
    double fisher_rel_tol = 1e-4;
    double bvp_rel_tol = 3e-3;
    double hessian_rel_tol = 1e-5;
};

/// Per-family outcome of the verification run.
struct FamilyReport {
    std::string family;
    double max_fisher_rel_err = 0.0;
    double max_bvp_rel_err = 0.0;
    double max_hessian_rel_err = 0.0;
    bool hessian_checked = false;
    bool bvp_checked = false;
    bool pass = true;
};

struct VerifyReport {
    std::vector<FamilyReport> families;
    VerifyOptions options;
    bool pass = true;
};

/// Runs the numeric-oracle verification across every family with a
/// quadrature/summation oracle (all except Wishart and inverse Wishart):
/// expectation-form Fisher vs analytic, Hessian-form agreement where the
/// support is parameter-independent, and geodesic BVP vs closed-form
/// distance for 1-D/2-D families.
VerifyReport run_verification(const VerifyOptions& options = {});

/// JSON rendering of the report (per-family max relative errors and
/// pass/fail against the thresholds).
std::string verify_report_json(const VerifyReport& report);

} // namespace raodist
