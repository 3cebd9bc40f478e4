#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ghq/params.hpp"

namespace ghq {

// One normal component (weight, mu + beta x_k, x_k) of the finite mixture.
struct MixtureComponent {
    double weight;
    double mean;
    double variance;
};

// Finite normal variance-mean mixture approximating GH(mu, beta, gamma, delta, p).
// Components come from the GIG quadrature, ordered by ascending variance.
class NormalMixture {
public:
    NormalMixture(const GHParams& params, int n, bool renormalize = true);

    std::span<const MixtureComponent> components() const noexcept { return components_; }
    std::size_t size() const noexcept { return components_.size(); }
    const GHParams& params() const noexcept { return params_; }

    double mean() const noexcept { return mean_; }
    double stddev() const noexcept { return stddev_; }

    // P(Y < y) = sum_k w_k N((y - mu)/sqrt(x_k) - beta sqrt(x_k)).
    double cdf(double y) const;
    // P(Y > y), summed from upper-tail normal probabilities.
    double sf(double y) const;
    // Inverse of cdf by bracketing and bisection. DomainError unless 0 < q < 1.
    double quantile(double q) const;

    // Undiscounted E max(e^Y - K, 0) as a weighted sum of Black-Scholes prices.
    double call_price(double strike) const;
    // Undiscounted E max(K - e^Y, 0) from the same components.
    double put_price(double strike) const;
    // sum_k w_k F_k, the mixture value of E e^Y.
    double forward() const;

    // sum_k sum_l w_k h_l g(mu + beta x_k + sqrt(x_k) z_l) on the n x m compound grid.
    double expectation(const std::function<double(double)>& g, int m) const;

private:
    void require_forward() const;

    GHParams params_;
    std::vector<MixtureComponent> components_;
    std::vector<double> sd_;  // sqrt(variance), cached
    // N((y - mu)/sd - beta sd) = erfc(shift - (y - mu) scale) / 2 with
    // scale = 1/(sqrt2 sd), shift = beta sd / sqrt2; half_weight = weight / 2.
    std::vector<double> scale_;
    std::vector<double> shift_;
    std::vector<double> half_weight_;
    double mean_;
    double stddev_;
};

std::vector<MixtureComponent> build_mixture(const GHParams& params, int n, bool renormalize = true);

double gh_cdf(const GHParams& params, double y, int n);
double gh_sf(const GHParams& params, double y, int n);
double gh_quantile(const GHParams& params, double q, int n);
double call_price(const GHParams& params, double strike, int n);
double put_price(const GHParams& params, double strike, int n);

// Compound-quadrature expectation; m defaults to n.
double gh_expectation(const std::function<double(double)>& g, const GHParams& params, int n, int m = 0);

// sum_k w_k exp(t x_k) over the GIG rule, the quadrature estimate of E e^{tX}.
double gig_mgf_quad(const GIGParams& params, double t, int n, bool renormalize = true);

}  // namespace ghq
