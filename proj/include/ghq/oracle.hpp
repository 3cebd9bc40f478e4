#pragma once

#include <functional>
#include <limits>

#include "ghq/params.hpp"

namespace ghq {

struct IntegrationResult {
    double value;
    double error;  // estimated absolute error
    int intervals;
    int evaluations;
};

struct IntegrationOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_intervals = 4000;
    // Length scale of the x = a + scale * t / (1 - t) map used for infinite limits.
    double scale = 1.0;
    // Split point when both limits are infinite.
    double center = 0.0;
};

// Globally adaptive 21-point Gauss-Kronrod integration. Infinite limits are
// mapped onto finite ones. Stops once the error estimate is at most
// max(abs_tol, rel_tol |value|); otherwise throws ConvergenceError carrying
// the partial estimate.
IntegrationResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                     const IntegrationOptions& options);

// Convenience form with abs_tol = rel_tol = tol.
IntegrationResult adaptive_integrate(const std::function<double(double)>& f, double a, double b, double tol);

// Reference GH CDF by integrating gh_density. The tail on the side of y is
// integrated directly, relative to tol.
double cdf_by_integration(const GHParams& params, double y, double tol = 1e-14);
double sf_by_integration(const GHParams& params, double y, double tol = 1e-14);

// Reference GH CDF through the mixture representation,
// integral of N((y - mu - beta x)/sqrt(x)) f_GIG(x) dx. Independent of gh_density.
double mixture_cdf_bruteforce(const GHParams& params, double y, double tol = 1e-14);
double mixture_sf_bruteforce(const GHParams& params, double y, double tol = 1e-14);

}  // namespace ghq
