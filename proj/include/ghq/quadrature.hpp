#pragma once

#include <memory>

#include "ghq/gauss_hermite.hpp"
#include "ghq/params.hpp"

namespace ghq {

// Inverse Gaussian quadrature: x_k = (delta/gamma) phi_sigma^{-1}(z_k),
// w_k = 2 h_k / (1 + phi_sigma^{-1}(z_k)) with sigma = sqrt(gamma delta) and
// (z_k, h_k) the n-point Gauss-Hermite rule. Integrates x^r exactly for
// integer r in [1 - n, n].
QuadratureRule ig_rule(const IGParams& params, int n);

// GIG quadrature on the IG nodes with weights c(gamma, delta, p) x_k^{p+1/2} w_k,
// optionally divided by their sum. Exact for x^r, r in {1-n-a, ..., n-a},
// a = p + 1/2, before renormalisation.
QuadratureRule gig_rule(const GIGParams& params, int n, bool renormalize = true);

// gig_rule memoised on (gamma, delta, p, n, renormalize). Thread-safe.
std::shared_ptr<const QuadratureRule> cached_gig_rule(const GIGParams& params, int n, bool renormalize = true);

}  // namespace ghq
