#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "ghq/summation.hpp"

namespace ghq {

// Nodes and weights of a discrete measure. Nodes strictly ascending,
// weights strictly positive.
class QuadratureRule {
public:
    QuadratureRule(std::vector<double> nodes, std::vector<double> weights, bool degraded = false);

    std::size_t size() const noexcept { return nodes_.size(); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    std::span<const double> weights() const noexcept { return weights_; }
    double node(std::size_t k) const { return nodes_[k]; }
    double weight(std::size_t k) const { return weights_[k]; }

    // Set when nodes were dropped because their weights underflowed.
    bool degraded() const noexcept { return degraded_; }

    // Compensated sum of the weights.
    double weight_sum() const;

    // sum_k w_k g(x_k)
    template <typename F>
    double integrate(F&& g) const {
        CompensatedSum acc;
        for (std::size_t k = 0; k < nodes_.size(); ++k) acc.add(weights_[k] * g(nodes_[k]));
        return acc.value();
    }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
    bool degraded_;
};

inline constexpr int kMaxQuadratureSize = 300;

// Probabilists' Gauss-Hermite rule: nodes are the roots of He_n, weights are
// normalised to the standard normal density so that they sum to one.
// Throws SizeError unless 1 <= n <= kMaxQuadratureSize.
QuadratureRule hermite_rule(int n);

// Same rule, memoised per n in a process-wide thread-safe cache.
std::shared_ptr<const QuadratureRule> cached_hermite_rule(int n);

// He_n(z) by the three-term recurrence.
double hermite_he(int n, double z);

}  // namespace ghq
