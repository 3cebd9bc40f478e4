#include "ghq/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "ghq/errors.hpp"
#include "ghq/ig_mapping.hpp"
#include "ghq/quadrature.hpp"
#include "ghq/special_functions.hpp"

namespace ghq {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr std::size_t kBlockSize = 1 << 16;

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : seed_(seed), key_(mix64(seed)) {}

std::uint64_t RngStream::next_u64() noexcept { return mix64(key_ + (++counter_) * kGolden); }

double RngStream::uniform() noexcept {
    // (m + 1/2) 2^-52 with m < 2^52: strictly inside (0, 1) and 1 - u representable.
    const std::uint64_t m = next_u64() >> 12;
    return (static_cast<double>(m) + 0.5) * 0x1p-52;
}

double RngStream::normal() noexcept { return normal_quantile(uniform()); }

RngStream RngStream::substream(std::uint64_t index) const noexcept {
    return RngStream(seed_, mix64(key_ ^ mix64(index + kGolden)));
}

ComponentSelector::ComponentSelector(std::span<const double> weights) {
    if (weights.empty()) throw ParameterError("select_component: no weights");
    cumulative_.reserve(weights.size());
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw ParameterError("select_component: weights must be positive");
        total += w;
        cumulative_.push_back(total);
    }
    if (std::abs(total - 1.0) > 1e-12) throw ParameterError("select_component: weights must sum to one");
}

std::size_t ComponentSelector::operator()(double u) const {
    // lower_bound finds the first cumulative >= u, the inclusive boundary of k(U).
    const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) return cumulative_.size() - 1;
    return static_cast<std::size_t>(it - cumulative_.begin());
}

std::size_t select_component(std::span<const double> weights, double u) {
    if (!(u > 0.0 && u < 1.0)) throw DomainError("select_component: u must lie in (0, 1)");
    return ComponentSelector(weights)(u);
}

double gh_variate(const GHParams& params, const QuadratureRule& rule, const ComponentSelector& select, double u,
                  double z) {
    const double x = rule.node(select(u));
    return params.mu() + params.beta() * x + std::sqrt(x) * z;
}

double ig_exact_variate(const IGParams& params, double z, double u) {
    if (!(params.gamma() > 0.0)) throw ParameterError("ig_exact_variate: gamma must be positive");
    const Sigma sigma(std::sqrt(params.gamma() * params.delta()));
    const double x_plus = phi_inv(sigma, std::abs(z));
    const double x = u * (1.0 + x_plus) <= 1.0 ? x_plus : 1.0 / x_plus;
    return params.delta() / params.gamma() * x;
}

namespace {

void fill_gh(const GHParams& params, const QuadratureRule& rule, const ComponentSelector& select,
             std::span<double> out, RngStream& rng, bool antithetic) {
    auto draw = [&](double u, double z) { return gh_variate(params, rule, select, u, z); };
    std::size_t i = 0;
    while (i < out.size()) {
        const double u = rng.uniform();
        const double z = rng.normal();
        out[i++] = draw(u, z);
        if (antithetic && i < out.size()) out[i++] = draw(1.0 - u, -z);
    }
}

}  // namespace

std::vector<double> sample_gh(const GHParams& params, int n_quad, std::size_t count, RngStream& rng,
                              bool antithetic) {
    const auto rule = cached_gig_rule(params.mixing(), n_quad);
    const ComponentSelector select(rule->weights());
    std::vector<double> out(count);
    fill_gh(params, *rule, select, out, rng, antithetic);
    return out;
}

std::vector<double> sample_gh_parallel(const GHParams& params, int n_quad, std::size_t count,
                                       const RngStream& rng, bool antithetic, unsigned threads) {
    const auto rule = cached_gig_rule(params.mixing(), n_quad);
    const ComponentSelector select(rule->weights());
    std::vector<double> out(count);
    const std::size_t blocks = (count + kBlockSize - 1) / kBlockSize;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(blocks, 1)));

    auto work = [&](unsigned t) {
        for (std::size_t b = t; b < blocks; b += threads) {
            RngStream sub = rng.substream(b);
            const std::size_t begin = b * kBlockSize;
            const std::size_t len = std::min(kBlockSize, count - begin);
            fill_gh(params, *rule, select, std::span<double>(out).subspan(begin, len), sub, antithetic);
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    return out;
}

std::vector<double> sample_ig_exact(const IGParams& params, std::size_t count, RngStream& rng) {
    if (!(params.gamma() > 0.0)) throw ParameterError("sample_ig_exact: gamma must be positive");
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double z = rng.normal();
        const double u = rng.uniform();
        out.push_back(ig_exact_variate(params, z, u));
    }
    return out;
}

std::vector<double> sample_gig_discrete(const GIGParams& params, int n_quad, std::size_t count, RngStream& rng) {
    const auto rule = cached_gig_rule(params, n_quad);
    const ComponentSelector select(rule->weights());
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(rule->node(select(rng.uniform())));
    return out;
}

}  // namespace ghq
