#pragma once

#include "ghq/params.hpp"

namespace ghq {

double ig_density(const IGParams& params, double x);

// Standard GIG kernel x^{p-1} exp(-(gamma^2 x + delta^2 / x) / 2), normalised.
double gig_density(const GIGParams& params, double x);

double gh_density(const GHParams& params, double y);

// Densities with the parameter-only Bessel normalisation evaluated once,
// for callers that evaluate many points.
class GIGDensity {
public:
    explicit GIGDensity(const GIGParams& params);
    double operator()(double x) const;

private:
    double gamma_;
    double delta_;
    double p_;
    double log_norm_;
};

class GHDensity {
public:
    explicit GHDensity(const GHParams& params);
    double operator()(double y) const;

private:
    GHParams params_;
    double alpha_;
    double log_norm_;
};

// E(X^r) = (delta/gamma)^r K_{r+p}(gamma delta) / K_p(gamma delta).
double gig_moment(const GIGParams& params, double r);

// E(e^{tX}); requires t < gamma^2 / 2 (t = gamma^2 / 2 is admitted when p < 0),
// otherwise DivergenceError.
double gig_mgf(const GIGParams& params, double t);

// E(e^{tY}) = e^{mu t} M_X(beta t + t^2 / 2).
double gh_mgf(const GHParams& params, double t);

struct SummaryStats {
    double mean;
    double variance;
    double skewness;     // mu3 / mu2^{3/2}
    double ex_kurtosis;  // mu4 / mu2^2 - 3
};

// Moments of Y assembled from the mixing moments E(X^r), r <= 4, and the
// normal moments of Z.
SummaryStats gh_summary_stats(const GHParams& params);

}  // namespace ghq
