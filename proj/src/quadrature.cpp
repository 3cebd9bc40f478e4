#include "ghq/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>
#include <vector>

#include "ghq/errors.hpp"
#include "ghq/ig_mapping.hpp"
#include "ghq/special_functions.hpp"

namespace ghq {

namespace {

// Weights below this are treated as underflowed and their nodes dropped.
constexpr double kWeightFloor = 1e-300;

void check_size(int n) {
    if (n < 1 || n > kMaxQuadratureSize) {
        throw SizeError("quadrature size must be in [1, " + std::to_string(kMaxQuadratureSize) + "]");
    }
}

// Transformed rule for IG(sigma, sigma) in standardised units, before scaling.
struct StandardNodes {
    std::vector<double> xi;
    std::vector<double> w;
};

StandardNodes standard_ig_nodes(double sigma, int n) {
    const auto hermite = cached_hermite_rule(n);
    const Sigma s(sigma);
    StandardNodes out;
    out.xi.reserve(n);
    out.w.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double xi = phi_inv(s, hermite->node(k));
        out.xi.push_back(xi);
        out.w.push_back(2.0 * hermite->weight(k) / (1.0 + xi));
    }
    return out;
}

// Drops underflowed weights. Returns true if anything was dropped, in which
// case the surviving weights are renormalised.
QuadratureRule assemble(const std::vector<double>& xi, const std::vector<double>& w, double scale,
                        bool renormalize) {
    std::vector<double> nodes;
    std::vector<double> weights;
    nodes.reserve(xi.size());
    weights.reserve(xi.size());
    for (std::size_t k = 0; k < xi.size(); ++k) {
        if (!std::isfinite(w[k])) throw RangeError("quadrature weight is not finite");
        if (w[k] < kWeightFloor) continue;
        nodes.push_back(scale * xi[k]);
        weights.push_back(w[k]);
    }
    if (nodes.empty()) throw RangeError("all quadrature weights underflowed");
    const bool degraded = nodes.size() != xi.size();
    if (renormalize || degraded) {
        const double total = compensated_sum(weights);
        for (double& v : weights) v /= total;
    }
    return QuadratureRule(std::move(nodes), std::move(weights), degraded);
}

}  // namespace

QuadratureRule ig_rule(const IGParams& params, int n) {
    check_size(n);
    if (!(params.gamma() > 0.0)) throw ParameterError("ig_rule: gamma must be positive");
    const double sigma = std::sqrt(params.gamma() * params.delta());
    const auto std_nodes = standard_ig_nodes(sigma, n);
    return assemble(std_nodes.xi, std_nodes.w, params.delta() / params.gamma(), false);
}

QuadratureRule gig_rule(const GIGParams& params, int n, bool renormalize) {
    check_size(n);
    const double sigma = params.sigma();
    auto std_nodes = standard_ig_nodes(sigma, n);

    // In standardised units c(gamma, delta, p) x^{p+1/2} collapses to
    // sqrt(pi/2) / (sigma e^{sigma^2} K_p(sigma^2)) xi^{p+1/2}.
    const double p = params.p();
    const double alpha = p + 0.5;
    const double z = sigma * sigma;
    // p = -1/2 is the IG itself and c is exactly one.
    const double c = p == -0.5 ? 1.0 : std::sqrt(std::numbers::pi / 2.0) / (sigma * bessel_k_scaled(p, z));
    for (std::size_t k = 0; k < std_nodes.xi.size(); ++k) {
        std_nodes.w[k] *= c * std::pow(std_nodes.xi[k], alpha);
    }
    return assemble(std_nodes.xi, std_nodes.w, params.scale(), renormalize);
}

std::shared_ptr<const QuadratureRule> cached_gig_rule(const GIGParams& params, int n, bool renormalize) {
    using Key = std::tuple<double, double, double, int, bool>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const QuadratureRule>> cache;
    const Key key{params.gamma(), params.delta(), params.p(), n, renormalize};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto rule = std::make_shared<const QuadratureRule>(gig_rule(params, n, renormalize));
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(rule)).first->second;
}

}  // namespace ghq
