#include "ghq/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ghq/errors.hpp"
#include "ghq/gauss_hermite.hpp"
#include "ghq/quadrature.hpp"
#include "ghq/special_functions.hpp"
#include "ghq/summation.hpp"

namespace ghq {

namespace {

// erfc rounds to exactly 2 below -6 and to 0 above 27.3.
inline double erfc_saturating(double x) {
    if (x <= -6.0) return 2.0;
    if (x >= 27.3) return 0.0;
    return std::erfc(x);
}

}  // namespace

std::vector<MixtureComponent> build_mixture(const GHParams& params, int n, bool renormalize) {
    const auto rule = cached_gig_rule(params.mixing(), n, renormalize);
    std::vector<MixtureComponent> out;
    out.reserve(rule->size());
    for (std::size_t k = 0; k < rule->size(); ++k) {
        const double x = rule->node(k);
        out.push_back({rule->weight(k), params.mu() + params.beta() * x, x});
    }
    return out;
}

NormalMixture::NormalMixture(const GHParams& params, int n, bool renormalize)
    : params_(params), components_(build_mixture(params, n, renormalize)) {
    sd_.reserve(components_.size());
    CompensatedSum m1;
    CompensatedSum m2;
    for (const auto& c : components_) {
        const double sd = std::sqrt(c.variance);
        sd_.push_back(sd);
        scale_.push_back(1.0 / (std::numbers::sqrt2 * sd));
        shift_.push_back(params_.beta() * sd / std::numbers::sqrt2);
        half_weight_.push_back(0.5 * c.weight);
        m1.add(c.weight * c.mean);
        m2.add(c.weight * (c.variance + c.mean * c.mean));
    }
    mean_ = m1.value();
    stddev_ = std::sqrt(std::max(m2.value() - mean_ * mean_, 0.0));
    if (!(stddev_ > 0.0)) {
        // Rounding can swallow the variance for a one-point rule with a huge mean.
        stddev_ = sd_.front();
    }
}

double NormalMixture::cdf(double y) const {
    const double dy = y - params_.mu();
    CompensatedSum acc;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        acc.add(half_weight_[k] * erfc_saturating(shift_[k] - dy * scale_[k]));
    }
    return acc.value();
}

double NormalMixture::sf(double y) const {
    const double dy = y - params_.mu();
    CompensatedSum acc;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        acc.add(half_weight_[k] * erfc_saturating(dy * scale_[k] - shift_[k]));
    }
    return acc.value();
}

double NormalMixture::quantile(double q) const {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("quantile: probability must lie in (0, 1)");

    // below(y) is true while y lies left of the q-quantile. The upper half uses
    // the survival function so that 1 - q keeps its digits.
    const bool upper = q > 0.5;
    const double tail = upper ? 1.0 - q : q;
    auto below = [&](double y) { return upper ? sf(y) > tail : cdf(y) < tail; };

    double lo = mean_;
    double hi = mean_;
    double step = stddev_;
    int expansions = 0;
    while (below(hi)) {
        lo = hi;
        hi = mean_ + step;
        step *= 2.0;
        if (++expansions > 80) throw ConvergenceError("quantile: bracket expansion failed", hi, step);
    }
    step = stddev_;
    expansions = 0;
    while (!below(lo)) {
        hi = lo;
        lo = mean_ - step;
        step *= 2.0;
        if (++expansions > 80) throw ConvergenceError("quantile: bracket expansion failed", lo, step);
    }

    for (int iter = 0; iter < 400; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (hi - lo <= 1e-14 * std::max({std::abs(lo), std::abs(hi), stddev_})) break;
        (below(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

void NormalMixture::require_forward() const {
    const double g = params_.gamma();
    const double s = params_.beta() + 0.5;
    if (!(s < 0.5 * g * g || (s == 0.5 * g * g && params_.p() < 0.0))) {
        throw DivergenceError("option price: E e^Y is infinite (needs beta + 1/2 < gamma^2 / 2, or equality with p < 0)");
    }
}

double NormalMixture::call_price(double strike) const {
    if (!(strike > 0.0)) throw DomainError("call_price: strike must be positive");
    require_forward();
    const double log_k = std::log(strike);
    CompensatedSum acc;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        const double x = components_[k].variance;
        const double sd = sd_[k];
        const double log_f = params_.mu() + (params_.beta() + 0.5) * x;
        const double d = (log_f - log_k) / sd - 0.5 * sd;
        const double bs = std::exp(log_f) * normal_cdf(d + sd) - strike * normal_cdf(d);
        acc.add(components_[k].weight * bs);
    }
    return std::max(acc.value(), 0.0);
}

double NormalMixture::put_price(double strike) const {
    if (!(strike > 0.0)) throw DomainError("put_price: strike must be positive");
    require_forward();
    const double log_k = std::log(strike);
    CompensatedSum acc;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        const double x = components_[k].variance;
        const double sd = sd_[k];
        const double log_f = params_.mu() + (params_.beta() + 0.5) * x;
        const double d = (log_f - log_k) / sd - 0.5 * sd;
        const double bs = strike * normal_ccdf(d) - std::exp(log_f) * normal_ccdf(d + sd);
        acc.add(components_[k].weight * bs);
    }
    return std::max(acc.value(), 0.0);
}

double NormalMixture::forward() const {
    require_forward();
    CompensatedSum acc;
    for (const auto& c : components_) {
        acc.add(c.weight * std::exp(params_.mu() + (params_.beta() + 0.5) * c.variance));
    }
    return acc.value();
}

double NormalMixture::expectation(const std::function<double(double)>& g, int m) const {
    const auto hermite = cached_hermite_rule(m);
    CompensatedSum acc;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        CompensatedSum inner;
        for (std::size_t l = 0; l < hermite->size(); ++l) {
            inner.add(hermite->weight(l) * g(components_[k].mean + sd_[k] * hermite->node(l)));
        }
        acc.add(components_[k].weight * inner.value());
    }
    return acc.value();
}

double gh_cdf(const GHParams& params, double y, int n) { return NormalMixture(params, n).cdf(y); }
double gh_sf(const GHParams& params, double y, int n) { return NormalMixture(params, n).sf(y); }
double gh_quantile(const GHParams& params, double q, int n) { return NormalMixture(params, n).quantile(q); }
double call_price(const GHParams& params, double strike, int n) { return NormalMixture(params, n).call_price(strike); }
double put_price(const GHParams& params, double strike, int n) { return NormalMixture(params, n).put_price(strike); }

double gh_expectation(const std::function<double(double)>& g, const GHParams& params, int n, int m) {
    return NormalMixture(params, n).expectation(g, m > 0 ? m : n);
}

double gig_mgf_quad(const GIGParams& params, double t, int n, bool renormalize) {
    const auto rule = cached_gig_rule(params, n, renormalize);
    return rule->integrate([t](double x) { return std::exp(t * x); });
}

}  // namespace ghq
