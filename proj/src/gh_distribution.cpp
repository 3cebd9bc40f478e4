#include "ghq/gh_distribution.hpp"

#include <cmath>
#include <numbers>

#include "ghq/errors.hpp"
#include "ghq/special_functions.hpp"

namespace ghq {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;

// K_{p+r}(z) / K_p(z) without the common exponential factor.
double bessel_ratio(double p, double r, double z) {
    return bessel_k_scaled(p + r, z) / bessel_k_scaled(p, z);
}

}  // namespace

double ig_density(const IGParams& params, double x) {
    if (!(x > 0.0)) throw DomainError("ig_density: x must be positive");
    const double g = params.gamma();
    const double d = params.delta();
    const double e = g * std::sqrt(x) - d / std::sqrt(x);
    return d / std::sqrt(2.0 * std::numbers::pi * x * x * x) * std::exp(-0.5 * e * e);
}

GIGDensity::GIGDensity(const GIGParams& params)
    : gamma_(params.gamma()), delta_(params.delta()), p_(params.p()) {
    log_norm_ = p_ * std::log(gamma_ / delta_) - std::log(2.0) - std::log(bessel_k_scaled(p_, gamma_ * delta_));
}

double GIGDensity::operator()(double x) const {
    if (!(x > 0.0)) throw DomainError("gig_density: x must be positive");
    // -(g^2 x + d^2 / x)/2 + g d = -(g sqrt(x) - d / sqrt(x))^2 / 2 pairs with e^{gd} K_p(gd).
    const double e = gamma_ * std::sqrt(x) - delta_ / std::sqrt(x);
    return std::exp(log_norm_ + (p_ - 1.0) * std::log(x) - 0.5 * e * e);
}

double gig_density(const GIGParams& params, double x) { return GIGDensity(params)(x); }

GHDensity::GHDensity(const GHParams& params) : params_(params), alpha_(params.alpha()) {
    const double gd = params.gamma() * params.delta();
    log_norm_ = 0.5 * std::log(alpha_) + params.p() * std::log(params.gamma() / (alpha_ * params.delta())) -
                kLogSqrt2Pi - std::log(bessel_k_scaled(params.p(), gd)) + gd;
}

double GHDensity::operator()(double y) const {
    const double p = params_.p();
    const double dy = y - params_.mu();
    const double r = std::hypot(params_.delta(), dy);
    const double ar = alpha_ * r;
    // Scaled Bessel values leave e^{beta dy - alpha r}, which is always <= 1.
    return std::exp(log_norm_ + std::log(bessel_k_scaled(p - 0.5, ar)) - (0.5 - p) * std::log(r) +
                    (params_.beta() * dy - ar));
}

double gh_density(const GHParams& params, double y) { return GHDensity(params)(y); }

double gig_moment(const GIGParams& params, double r) {
    if (!std::isfinite(r)) throw DomainError("gig_moment: order must be finite");
    if (r == 0.0) return 1.0;
    return std::pow(params.scale(), r) * bessel_ratio(params.p(), r, params.gamma() * params.delta());
}

double gig_mgf(const GIGParams& params, double t) {
    const double g2 = params.gamma() * params.gamma();
    const double p = params.p();
    const double delta = params.delta();
    if (t == 0.5 * g2 && p < 0.0) {
        // Boundary of the domain, finite for p < 0: (gamma delta / 2)^p Gamma(-p) / (2 K_p(gamma delta)).
        const double z0 = delta * params.gamma();
        const double log_value =
            p * std::log(0.5 * z0) + std::lgamma(-p) - std::log(2.0) - std::log(bessel_k_scaled(p, z0)) + z0;
        const double value = std::exp(log_value);
        if (!std::isfinite(value)) throw RangeError("gig_mgf: value overflows");
        return value;
    }
    if (!(t < 0.5 * g2)) throw DivergenceError("gig_mgf: t must be below gamma^2 / 2 (or equal to it when p < 0)");
    if (t == 0.0) return 1.0;
    const double g = std::sqrt(g2 - 2.0 * t);
    const double z0 = delta * params.gamma();
    const double z1 = delta * g;
    const double log_value = 0.5 * p * std::log(g2 / (g * g)) + std::log(bessel_k_scaled(p, z1)) -
                             std::log(bessel_k_scaled(p, z0)) + (z0 - z1);
    const double value = std::exp(log_value);
    if (!std::isfinite(value)) throw RangeError("gig_mgf: value overflows");
    return value;
}

double gh_mgf(const GHParams& params, double t) {
    const double s = params.beta() * t + 0.5 * t * t;
    const double g2 = params.gamma() * params.gamma();
    if (!(s < 0.5 * g2 || (s == 0.5 * g2 && params.p() < 0.0))) {
        throw DivergenceError("gh_mgf: beta t + t^2/2 must be below gamma^2 / 2 (or equal to it when p < 0)");
    }
    return std::exp(params.mu() * t) * gig_mgf(params.mixing(), s);
}

SummaryStats gh_summary_stats(const GHParams& params) {
    // Work with the standardised mixing variable xi = X / s, xi ~ GIG(sigma, sigma, p).
    const double s = params.delta() / params.gamma();
    const double z = params.gamma() * params.delta();
    const double p = params.p();
    const double k0 = bessel_k_scaled(p, z);
    double m[5];
    m[0] = 1.0;
    for (int r = 1; r <= 4; ++r) m[r] = bessel_k_scaled(p + r, z) / k0;

    const double m1 = m[1];
    const double v = m[2] - m1 * m1;                                         // E D^2, D = xi - m1
    const double k3 = m[3] - 3.0 * m1 * m[2] + 2.0 * m1 * m1 * m1;           // E D^3
    const double k4 = m[4] - 4.0 * m1 * m[3] + 6.0 * m1 * m1 * m[2] - 3.0 * m1 * m1 * m1 * m1;  // E D^4
    const double d2x = m[3] - 2.0 * m1 * m[2] + m1 * m1 * m1;               // E D^2 xi

    // Y - EY = b D + sqrt(s xi) Z with b = beta s; odd powers of Z drop out.
    const double b = params.beta() * s;
    const double mu2 = b * b * v + s * m1;
    const double mu3 = b * b * b * k3 + 3.0 * b * s * v;
    const double mu4 = b * b * b * b * k4 + 6.0 * b * b * s * d2x + 3.0 * s * s * m[2];

    SummaryStats out{};
    out.mean = params.mu() + params.beta() * s * m1;
    out.variance = mu2;
    out.skewness = mu3 / std::pow(mu2, 1.5);
    out.ex_kurtosis = mu4 / (mu2 * mu2) - 3.0;
    return out;
}

}  // namespace ghq
