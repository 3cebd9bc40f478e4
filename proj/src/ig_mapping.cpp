#include "ghq/ig_mapping.hpp"

#include <cmath>

#include "ghq/errors.hpp"

namespace ghq {

Sigma::Sigma(double value) : value_(value) {
    if (!(value > 0.0) || !std::isfinite(value)) throw ParameterError("sigma must be positive and finite");
}

double phi(Sigma sigma, double x) {
    if (!(x > 0.0)) throw DomainError("phi: x must be positive");
    const double r = std::sqrt(x);
    // (x - 1)/sqrt(x) overflows for huge x; r - 1/r does not.
    return sigma.value() * (r - 1.0 / r);
}

double phi_inv(Sigma sigma, double z) {
    const double u = std::abs(z) / sigma.value();
    // 1 + u^2/2 + u sqrt(1 + u^2/4) = (u/2 + sqrt(1 + u^2/4))^2, all terms positive.
    const double h = 0.5 * u;
    const double root = h + std::hypot(1.0, h);
    const double x = root * root;
    return z < 0.0 ? 1.0 / x : x;
}

double jacobian_weight(Sigma sigma, double x) {
    if (!(x > 0.0)) throw DomainError("jacobian_weight: x must be positive");
    return sigma.value() * (1.0 + x) / (2.0 * x * std::sqrt(x));
}

}  // namespace ghq
