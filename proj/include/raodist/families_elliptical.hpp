#pragma once

#include "raodist/family.hpp"

namespace raodist {

/// A univariate elliptical location-scale family is defined by its
/// density generator h: densities are p(x) = (1/sigma) h(((x - mu)/sigma)^2)
/// and the Fisher matrix is diag(a, b)/sigma^2 with
///   a = 4 integral z^2 [h'(z^2)]^2 / h(z^2) dz,
///   b = 4 integral z^4 [h'(z^2)]^2 / h(z^2) dz - 1   (integrals over R).
struct EllipticalGenerator {
    std::string name;
    std::function<double(double)> h;      ///< density generator on [0, inf)
    std::function<double(double)> log_h;  ///< log h, evaluated stably
    double a = 0.0;
    double b = 0.0;
};

/// Named generator with its analytic metric constants. Student-t and the
/// generalised Gaussian carry their hyperparameter. Throws
/// UnknownGeneratorError for unknown names and DomainError for invalid
/// hyperparameters (generalised Gaussian requires beta > 1/2).
/// The generator's normalisation (integral of h(z^2) dz = 1) is verified
/// numerically at construction.
EllipticalGenerator elliptical_generator(const std::string& name, double hyper = 0.0);

/// Analytic metric constants (a, b) of a named generator.
std::pair<double, double> elliptical_constants(const std::string& name, double hyper = 0.0);

/// Metric constants recovered from the generator function alone: h' by
/// central differences with relative step 1e-6, then adaptive quadrature
/// on a transformed infinite domain to absolute tolerance 1e-8.
std::pair<double, double> elliptical_constants_numeric(const std::function<double(double)>& h);

/// Fisher matrix diag(a, b)/sigma^2 of a generator at (mu, sigma).
Mat elliptical_fisher(const EllipticalGenerator& g, double mu, double sigma);

/// Closed-form distance
///   2 sqrt(b) atanh sqrt((a dmu^2 + b dsigma^2)/(a dmu^2 + b (s1+s2)^2));
/// reduces to sqrt(b) |log s1 - log s2| at equal means.
double elliptical_distance(const EllipticalGenerator& g,
                           double mu1, double sigma1, double mu2, double sigma2);

FamilyPtr make_gaussian();
FamilyPtr make_laplace();
FamilyPtr make_generalized_gaussian(double beta);
FamilyPtr make_logistic();
FamilyPtr make_cauchy();
FamilyPtr make_student_t(double nu);

} // namespace raodist
