#include "ghq/gauss_hermite.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "ghq/errors.hpp"
#include "ghq/summation.hpp"

namespace ghq {

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights, bool degraded)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), degraded_(degraded) {
    if (nodes_.empty() || nodes_.size() != weights_.size()) {
        throw ParameterError("QuadratureRule: nodes and weights must be non-empty and of equal length");
    }
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        if (!(weights_[k] > 0.0)) throw ParameterError("QuadratureRule: weights must be positive");
        if (k > 0 && !(nodes_[k] > nodes_[k - 1])) {
            throw ParameterError("QuadratureRule: nodes must be strictly ascending");
        }
    }
}

double QuadratureRule::weight_sum() const { return compensated_sum(weights_); }

double hermite_he(int n, double z) {
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = z;
    for (int k = 1; k < n; ++k) {
        const double next = z * cur - k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

// Orthonormal Hermite values psi_{n-1}(z), psi_n(z) with psi_k = He_k / sqrt(k!).
std::pair<double, double> orthonormal_pair(int n, double z) {
    double prev = 0.0;
    double cur = 1.0;
    for (int k = 0; k < n; ++k) {
        const double next = (z * cur - std::sqrt(static_cast<double>(k)) * prev) / std::sqrt(k + 1.0);
        prev = cur;
        cur = next;
    }
    return {prev, cur};
}

}  // namespace

QuadratureRule hermite_rule(int n) {
    if (n < 1 || n > kMaxQuadratureSize) {
        throw SizeError("hermite_rule: size must be in [1, " + std::to_string(kMaxQuadratureSize) + "]");
    }
    if (n == 1) return QuadratureRule({0.0}, {1.0});

    // Golub-Welsch: eigenvalues of the Jacobi matrix of the probabilists'
    // recurrence He_{k+1} = z He_k - k He_{k-1} give the nodes.
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (int k = 0; k < n - 1; ++k) sub[k] = std::sqrt(k + 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& eig = solver.eigenvalues();

    // Only the non-negative half is computed; the rule is mirrored so that
    // the symmetry is exact. Newton polishing on psi_n, whose derivative is
    // sqrt(n) psi_{n-1}, and the Christoffel weight 1 / (n psi_{n-1}^2) keep
    // tiny tail weights accurate in the relative sense.
    const int half = n / 2;
    std::vector<double> pos_nodes(half);
    std::vector<double> pos_weights(half);
    for (int i = 0; i < half; ++i) {
        double z = std::abs(eig[n - 1 - i]);
        for (int iter = 0; iter < 8; ++iter) {
            const auto [pm1, pn] = orthonormal_pair(n, z);
            const double step = pn / (std::sqrt(static_cast<double>(n)) * pm1);
            z -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
        }
        const auto [pm1, pn] = orthonormal_pair(n, z);
        (void)pn;
        pos_nodes[i] = z;
        pos_weights[i] = 1.0 / (n * pm1 * pm1);
    }

    std::vector<double> nodes;
    std::vector<double> weights;
    nodes.reserve(n);
    weights.reserve(n);
    for (int i = 0; i < half; ++i) {
        nodes.push_back(-pos_nodes[i]);
        weights.push_back(pos_weights[i]);
    }
    if (n % 2 == 1) {
        const auto [pm1, pn] = orthonormal_pair(n, 0.0);
        (void)pn;
        nodes.push_back(0.0);
        weights.push_back(1.0 / (n * pm1 * pm1));
    }
    for (int i = half - 1; i >= 0; --i) {
        nodes.push_back(pos_nodes[i]);
        weights.push_back(pos_weights[i]);
    }

    const double total = compensated_sum(weights);
    for (double& w : weights) w /= total;
    return QuadratureRule(std::move(nodes), std::move(weights));
}

std::shared_ptr<const QuadratureRule> cached_hermite_rule(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const QuadratureRule>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto rule = std::make_shared<const QuadratureRule>(hermite_rule(n));
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(rule)).first->second;
}

}  // namespace ghq
