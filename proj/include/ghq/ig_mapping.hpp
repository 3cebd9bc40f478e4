#pragma once

namespace ghq {

// sigma = sqrt(gamma * delta), the single shape parameter of IG(sigma, sigma).
class Sigma {
public:
    explicit Sigma(double value);
    double value() const noexcept { return value_; }

private:
    double value_;
};

// z = sigma (sqrt(x) - 1/sqrt(x)), a strictly increasing bijection (0, inf) -> R.
double phi(Sigma sigma, double x);

// Inverse of phi. Computed for |z| and reciprocated for z < 0, which keeps the
// relative error uniform and makes phi_inv(s, -z) * phi_inv(s, z) == 1.
double phi_inv(Sigma sigma, double z);

// dz/dx = sigma (1 + x) / (2 x^{3/2}).
double jacobian_weight(Sigma sigma, double x);

}  // namespace ghq
