#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ghq/params.hpp"

namespace ghq {

// Counter-based uniform source: the i-th output is a bijective 64-bit mix of
// key + i * golden-gamma (the SplitMix64 output function), so a stream is
// fully described by (key, counter) and can be split without overlap.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    std::uint64_t next_u64() noexcept;
    // Uniform on (0, 1), a multiple of 2^-53 such that 1 - u is exact.
    double uniform() noexcept;
    // Standard normal by inverse CDF, so that normal(1 - u) == -normal(u).
    double normal() noexcept;

    // Independent stream number `index`, derived from this stream's key only.
    RngStream substream(std::uint64_t index) const noexcept;

    std::uint64_t seed() const noexcept { return seed_; }

private:
    RngStream(std::uint64_t seed, std::uint64_t key) : seed_(seed), key_(key) {}

    std::uint64_t seed_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Cumulative-weight table for drawing k(U) = inf{k : U <= w_1 + ... + w_k}.
class ComponentSelector {
public:
    // Weights must be positive and sum to one within 1e-12 (ParameterError).
    explicit ComponentSelector(std::span<const double> weights);

    // 0-based index of the smallest k with cumulative weight >= u.
    std::size_t operator()(double u) const;

    std::size_t size() const noexcept { return cumulative_.size(); }

private:
    std::vector<double> cumulative_;
};

std::size_t select_component(std::span<const double> weights, double u);

class QuadratureRule;

// One draw mu + beta x_{k(u)} + sqrt(x_{k(u)}) z from given variates.
double gh_variate(const GHParams& params, const QuadratureRule& rule, const ComponentSelector& select, double u,
                  double z);

// One exact IG draw from a normal variate z and a uniform u.
double ig_exact_variate(const IGParams& params, double z, double u);

// Y = mu + beta x_{k(U)} + sqrt(x_{k(U)}) Z with the GIG rule of size n_quad.
// With antithetic set, consecutive draws pair (U, Z) with (1 - U, -Z).
std::vector<double> sample_gh(const GHParams& params, int n_quad, std::size_t count, RngStream& rng,
                              bool antithetic = false);

// Same draws partitioned into fixed blocks, block b using rng.substream(b).
// Output depends only on the seed, never on `threads`.
std::vector<double> sample_gh_parallel(const GHParams& params, int n_quad, std::size_t count,
                                       const RngStream& rng, bool antithetic = false, unsigned threads = 0);

// Exact IG sampler: X = phi^{-1}(+-|Z|) scaled by delta/gamma, the + branch
// taken with probability 1 / (1 + X+).
std::vector<double> sample_ig_exact(const IGParams& params, std::size_t count, RngStream& rng);

// Draws x_{k(U)} from the GIG rule. The support is the n_quad nodes only.
std::vector<double> sample_gig_discrete(const GIGParams& params, int n_quad, std::size_t count, RngStream& rng);

}  // namespace ghq
