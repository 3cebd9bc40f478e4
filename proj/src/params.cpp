#include "ghq/params.hpp"

#include <cmath>

#include "ghq/errors.hpp"

namespace ghq {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw ParameterError(message);
}

}  // namespace

IGParams::IGParams(double gamma, double delta) : gamma_(gamma), delta_(delta) {
    require(std::isfinite(gamma) && gamma >= 0.0, "IG: gamma must be finite and non-negative");
    require(std::isfinite(delta) && delta > 0.0, "IG: delta must be finite and positive");
}

GIGParams::GIGParams(double gamma, double delta, double p) : gamma_(gamma), delta_(delta), p_(p) {
    require(std::isfinite(gamma) && gamma > 0.0, "GIG: gamma must be finite and positive");
    require(std::isfinite(delta) && delta > 0.0, "GIG: delta must be finite and positive");
    require(std::isfinite(p), "GIG: p must be finite");
}

double GIGParams::sigma() const noexcept { return std::sqrt(gamma_ * delta_); }

GHParams::GHParams(double mu, double beta, double gamma, double delta, double p)
    : mu_(mu), beta_(beta), gamma_(gamma), delta_(delta), p_(p) {
    require(std::isfinite(mu), "GH: mu must be finite");
    require(std::isfinite(beta), "GH: beta must be finite");
    require(std::isfinite(gamma) && gamma > 0.0, "GH: gamma must be finite and positive");
    require(std::isfinite(delta) && delta > 0.0, "GH: delta must be finite and positive");
    require(std::isfinite(p), "GH: p must be finite");
}

double GHParams::alpha() const noexcept { return std::hypot(beta_, gamma_); }
double GHParams::sigma() const noexcept { return std::sqrt(gamma_ * delta_); }

GHParamsAlpha::GHParamsAlpha(double mu, double alpha, double beta, double delta, double p)
    : mu_(mu), alpha_(alpha), beta_(beta), delta_(delta), p_(p) {
    require(std::isfinite(mu), "GH: mu must be finite");
    require(std::isfinite(alpha) && std::isfinite(beta), "GH: alpha and beta must be finite");
    require(std::abs(beta) < alpha, "GH: |beta| < alpha is required");
    require(std::isfinite(delta) && delta > 0.0, "GH: delta must be finite and positive");
    require(std::isfinite(p), "GH: p must be finite");
}

GHParams from_alpha_parameterization(const GHParamsAlpha& q) {
    // (alpha - beta)(alpha + beta) avoids cancellation when |beta| is close to alpha.
    const double gamma = std::sqrt((q.alpha() - q.beta()) * (q.alpha() + q.beta()));
    return GHParams(q.mu(), q.beta(), gamma, q.delta(), q.p());
}

GHParamsAlpha to_alpha_parameterization(const GHParams& params) {
    return GHParamsAlpha(params.mu(), params.alpha(), params.beta(), params.delta(), params.p());
}

}  // namespace ghq
