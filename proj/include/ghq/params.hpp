#pragma once

namespace ghq {

// Inverse Gaussian IG(gamma, delta): first passage time of gamma t + B_t to delta.
// gamma = 0 is admitted for density evaluation only.
class IGParams {
public:
    IGParams(double gamma, double delta);

    double gamma() const noexcept { return gamma_; }
    double delta() const noexcept { return delta_; }

private:
    double gamma_;
    double delta_;
};

// Generalized inverse Gaussian GIG(gamma, delta, p).
class GIGParams {
public:
    GIGParams(double gamma, double delta, double p);

    double gamma() const noexcept { return gamma_; }
    double delta() const noexcept { return delta_; }
    double p() const noexcept { return p_; }

    // sqrt(gamma * delta)
    double sigma() const noexcept;
    // delta / gamma, the factor of the scaling property X ~ (delta/gamma) GIG(sigma, sigma, p).
    double scale() const noexcept { return delta_ / gamma_; }

    friend bool operator==(const GIGParams&, const GIGParams&) = default;

private:
    double gamma_;
    double delta_;
    double p_;
};

// Generalized hyperbolic GH(mu, beta, gamma, delta, p), the law of
// Y = mu + beta X + sqrt(X) Z with X ~ GIG(gamma, delta, p).
class GHParams {
public:
    GHParams(double mu, double beta, double gamma, double delta, double p);

    double mu() const noexcept { return mu_; }
    double beta() const noexcept { return beta_; }
    double gamma() const noexcept { return gamma_; }
    double delta() const noexcept { return delta_; }
    double p() const noexcept { return p_; }

    // sqrt(beta^2 + gamma^2)
    double alpha() const noexcept;
    double sigma() const noexcept;
    GIGParams mixing() const { return GIGParams(gamma_, delta_, p_); }

    friend bool operator==(const GHParams&, const GHParams&) = default;

private:
    double mu_;
    double beta_;
    double gamma_;
    double delta_;
    double p_;
};

// The (mu, alpha, beta, delta, p) parameterisation common in the literature.
class GHParamsAlpha {
public:
    GHParamsAlpha(double mu, double alpha, double beta, double delta, double p);

    double mu() const noexcept { return mu_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double delta() const noexcept { return delta_; }
    double p() const noexcept { return p_; }

    friend bool operator==(const GHParamsAlpha&, const GHParamsAlpha&) = default;

private:
    double mu_;
    double alpha_;
    double beta_;
    double delta_;
    double p_;
};

GHParams from_alpha_parameterization(const GHParamsAlpha& q);
GHParamsAlpha to_alpha_parameterization(const GHParams& params);

}  // namespace ghq
