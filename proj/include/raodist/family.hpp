#pragma once

#include "raodist/errors.hpp"
#include "raodist/types.hpp"

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace raodist {

/// How the numeric oracle differentiates the log-density with respect to
/// one parameter. Parameters that bound the support from one side must be
/// stepped only into the direction that keeps the sample in-support.
enum class ScoreStep { Central, BackwardOnly, ForwardOnly };

/// Change of variables mapping t in [t_lo, t_hi] onto a continuous
/// family's support, with interior breakpoints seeding the adaptive
/// subdivision (integrand kinks, density mass location).
struct QuadratureMap {
    double t_lo = 0.0;
    double t_hi = 0.0;
    std::vector<double> breaks;
    std::function<double(double)> x;
    std::function<double(double)> dx_dt;
};

/// A parametric family: a statistical manifold with fixed hyperparameters.
/// Instances are immutable and safe to share across threads; every
/// operation is a pure function of its arguments.
class Family {
public:
    virtual ~Family() = default;

    /// Canonical identifier including hyperparameters,
    /// e.g. "binomial(n=4)". Two points are comparable iff ids match.
    const std::string& id() const { return id_; }

    /// Base family name without hyperparameters, e.g. "binomial".
    const std::string& name() const { return name_; }

    /// Manifold dimension (number of free coordinates).
    virtual int dim() const = 0;

    /// Throws DomainError naming the violated constraint if coords is
    /// outside the family's parameter domain.
    virtual void validate(const Vec& coords) const = 0;

    /// Accepts alternative coordinate encodings (e.g. a full probability
    /// vector for simplex families) and returns the canonical free
    /// coordinates. Default: identity.
    virtual Vec normalize_coords(const Vec& coords) const { return coords; }

    /// log p(x; coords). Throws SupportError if x is outside the support.
    virtual double log_density(const Vec& coords, const Vec& x) const = 0;

    /// Analytic Fisher information matrix at coords.
    virtual Mat fisher(const Vec& coords) const = 0;

    /// Closed-form Fisher-Rao distance. Implementations are exactly
    /// symmetric in (a, b) and return +infinity when a boundary clamp
    /// fires.
    virtual double distance(const Vec& a, const Vec& b) const = 0;

    /// steps+1 points of the minimising geodesic from a to b, endpoints
    /// included verbatim. Throws UnsupportedError if the family has no
    /// closed-form geodesic.
    virtual std::vector<Vec> geodesic_path(const Vec& a, const Vec& b, int steps) const;

    /// Half-plane chart (u, v, a, b), present for the charted families.
    virtual std::optional<ChartMap> chart() const { return std::nullopt; }

    /// True when the support does not depend on the parameters. The
    /// Hessian-form Fisher oracle refuses families where this is false.
    virtual bool fixed_support() const { return true; }

    /// Continuous families: transform for the expectation-form quadrature.
    virtual std::optional<QuadratureMap> quadrature_map(const Vec& coords) const {
        return std::nullopt;
    }

    /// Discrete families: sample points covering all but at most tail_mass
    /// of the probability, for the summation oracle.
    virtual std::vector<Vec> support_points(const Vec& coords, double tail_mass) const {
        return {};
    }

    /// Finite-difference direction for parameter i in the numeric oracle.
    virtual ScoreStep score_step(int i) const { return ScoreStep::Central; }

    /// Draw an interior parameter point from the documented sampling box.
    virtual Vec sample_point(std::mt19937_64& rng) const = 0;

    /// Non-throwing domain check (used by the energy minimiser).
    bool in_domain(const Vec& coords) const;

protected:
    Family(std::string name, std::string id)
        : name_(std::move(name)), id_(std::move(id)) {}

private:
    std::string name_;
    std::string id_;
};

using FamilyPtr = std::shared_ptr<const Family>;

/// A validated coordinate vector bound to its family.
struct ParamPoint {
    FamilyPtr family;
    Vec coords;
};

/// Validates coords against the family domain (after coordinate
/// normalisation) and returns the bound point. Throws DomainError.
ParamPoint validate_params(const FamilyPtr& family, const Vec& coords);

/// log p(x) at a validated point. Throws SupportError.
double log_density(const ParamPoint& p, const Vec& x);

/// Closed-form Fisher-Rao distance between points of one family.
/// Exactly 0 at coordinate equality; throws MismatchError when the
/// family ids differ.
double distance(const ParamPoint& p, const ParamPoint& q);

/// Analytic Fisher matrix at a validated point.
Mat fisher(const ParamPoint& p);

/// steps+1 geodesic samples between validated points.
std::vector<Vec> geodesic_path(const ParamPoint& p, const ParamPoint& q, int steps);

/// Instantiate a family by name with hyperparameters
/// (keys: n, r, k, beta, nu, x_n, trials, m). Throws DomainError for an
/// unknown name or invalid hyperparameters.
FamilyPtr make_family(const std::string& name,
                      const std::map<std::string, double>& hyper = {});

/// All registered base family names.
std::vector<std::string> registered_families();

} // namespace raodist
