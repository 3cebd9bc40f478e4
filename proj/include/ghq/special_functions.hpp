#pragma once

namespace ghq {

// Modified Bessel function of the second kind K_p(z) for real order p and z > 0.
// Throws DomainError for z <= 0 and RangeError if the value overflows.
double bessel_k(double p, double z);

// Exponentially scaled e^z K_p(z). Finite for every z > 0 where K_p(z) is
// finite before scaling, so it is the form to use when z can be large.
double bessel_k_scaled(double p, double z);

// Standard normal density e^{-z^2/2} / sqrt(2 pi).
double normal_pdf(double z);

// Standard normal CDF. The smaller tail is always computed directly so that
// normal_cdf(-z) == 1 - normal_cdf(z) to working precision.
double normal_cdf(double z);

// Complement 1 - normal_cdf(z), accurate in the upper tail.
double normal_ccdf(double z);

// Inverse of normal_cdf on (0, 1). Exactly odd around 1/2:
// normal_quantile(1 - u) == -normal_quantile(u) whenever 1 - u is exact.
double normal_quantile(double u);

}  // namespace ghq
