// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "ghq/errors.hpp"
#include "ghq/gh_distribution.hpp"
#include "ghq/ig_mapping.hpp"
#include "ghq/mixture.hpp"
#include "ghq/oracle.hpp"
#include "ghq/presets.hpp"
#include "ghq/quadrature.hpp"
#include "ghq/sampling.hpp"
#include "ghq/special_functions.hpp"
#include "test_support.hpp"

using namespace ghq;
using testing::preset;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int failures = 0;

void report(int id, bool pass, const std::string& title, const std::string& detail) {
    std::printf("%s  criterion %2d: %s  [%s]\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// E X^k for X ~ IG with mean 1 and shape 1, k a positive integer:
// sum_{j<k} (k-1+j)! / (j! (k-1-j)!) 2^{-j}. Negative orders by E X^r = E X^{1-r}.
double ig_unit_moment(int r) {
    if (r <= 0) r = 1 - r;
    double term = 1.0, sum = 0.0;
    for (int j = 0; j < r; ++j) {
        sum += term;
        term *= static_cast<double>(r + j) * (r - 1 - j) / (j + 1) * 0.5;
    }
    return sum;
}

// E e^{tX} for GIG(s, s, p) by integrating the unnormalised kernel twice.
double gig_mgf_by_integration(double s, double p, double t) {
    IntegrationOptions opt;
    opt.abs_tol = std::numeric_limits<double>::min();
    opt.rel_tol = 1e-14;
    const auto kernel = [=](double x, double tt) {
        return std::exp((p - 1.0) * std::log(x) + tt * x - 0.5 * s * s * (x + 1.0 / x));
    };
    const auto integral = [&](double tt) {
        const auto f = [&](double x) { return kernel(x, tt); };
        return adaptive_integrate(f, 0.0, 1.0, opt).value + adaptive_integrate(f, 1.0, kInf, opt).value;
    };
    return integral(t) / integral(0.0);
}

struct Percentiles {
    std::vector<double> q, y, cdf, sf;
};

// Percentile points located on a large mixture; exact tail probabilities from the density oracle.
Percentiles percentiles(const GHParams& params, const std::vector<double>& levels) {
    const NormalMixture reference(params, 200);
    Percentiles out;
    for (double q : levels) {
        const double y = reference.quantile(q);
        out.q.push_back(q);
        out.y.push_back(y);
        out.cdf.push_back(cdf_by_integration(params, y));
        out.sf.push_back(sf_by_integration(params, y));
    }
    return out;
}

// Max absolute CDF error; the upper half is compared through survival functions.
double max_cdf_error(const NormalMixture& mix, const Percentiles& pts) {
    double worst = 0.0;
    for (std::size_t j = 0; j < pts.y.size(); ++j) {
        const double e = pts.q[j] <= 0.5 ? mix.cdf(pts.y[j]) - pts.cdf[j] : pts.sf[j] - mix.sf(pts.y[j]);
        worst = std::max(worst, std::abs(e));
    }
    return worst;
}

std::vector<double> hundredths() {
    std::vector<double> q;
    for (int j = 1; j <= 99; ++j) q.push_back(j / 100.0);
    return q;
}

void criterion1() {
    const IGParams ig(1.0, 1.0);
    double worst_exact = 0.0, least_beyond = kInf;
    for (int n : {10, 20}) {
        const auto rule = ig_rule(ig, n);
        for (int r = 1 - n; r <= n + 1; ++r) {
            const double quad = rule.integrate([r](double x) { return std::pow(x, r); });
            const double err = std::abs(quad / ig_unit_moment(r) - 1.0);
            if (r <= n) worst_exact = std::max(worst_exact, err);
            else least_beyond = std::min(least_beyond, err);
        }
    }
    report(1, worst_exact <= 1e-11 && least_beyond > 1e-6, "integer-moment exactness of the IG rule",
           fmt("max rel err in [1-n,n] %.2e", worst_exact) + fmt(", min at r=n+1 %.2e", least_beyond));
}

void criterion2() {
    double worst_ig = 0.0, worst_gig = 0.0;
    std::string per_sigma;
    const double sigmas[] = {0.3716, 0.5, 0.6866, 0.9466, 1.0, 2.0};
    for (double s : sigmas) {
        for (int n : {1, 10, 50, 150}) worst_ig = std::max(worst_ig, std::abs(ig_rule(IGParams(s, s), n).weight_sum() - 1.0));
        double at_sigma = 0.0;
        for (int n : {20, 50, 150}) {
            for (double p = -2.0; p <= 2.0; p += 0.25) {
                at_sigma = std::max(at_sigma, std::abs(gig_rule(GIGParams(s, s, p), n, false).weight_sum() - 1.0));
            }
        }
        worst_gig = std::max(worst_gig, at_sigma);
        per_sigma += fmt(" %g:", s) + fmt("%.1e", at_sigma);
    }
    report(2, worst_ig <= 1e-13 && worst_gig <= 1e-4, "weight normalisation",
           fmt("IG max |sum-1| %.2e", worst_ig) + fmt(", raw GIG max |sum-1| %.2e", worst_gig) + " by sigma" + per_sigma);
}

void criterion3() {
    bool monotone = true;
    double worst_final = 0.0;
    for (double s : {0.5, 1.0, 2.0}) {
        const double t = 0.4 * s * s;
        // IG closed form: exp(sigma^2 (1 - sqrt(1 - 2t/sigma^2))).
        const double exact = std::exp(s * s * (1.0 - std::sqrt(1.0 - 2.0 * t / (s * s))));
        double previous = kInf;
        for (int n : {5, 10, 20, 40}) {
            const double err = std::abs(gig_mgf_quad(GIGParams(s, s, -0.5), t, n) / exact - 1.0);
            if (err > std::max(previous, 1e-14)) monotone = false;
            previous = err;
        }
        worst_final = std::max(worst_final, previous);
    }
    const double s = 0.5, t = 0.4 * s * s;
    const double exact_ig = std::exp(s * s * (1.0 - std::sqrt(1.0 - 2.0 * t / (s * s))));
    const double err_ig = std::abs(gig_mgf_quad(GIGParams(s, s, -0.5), t, 40) / exact_ig - 1.0);
    const double err_hyp = std::abs(gig_mgf_quad(GIGParams(s, s, 1.0), t, 40) / gig_mgf_by_integration(s, 1.0, t) - 1.0);
    report(3, monotone && worst_final <= 1e-10 && err_hyp > err_ig, "MGF convergence of the GIG rule",
           std::string(monotone ? "monotone" : "NOT monotone") + fmt(", max err at n=40 %.2e", worst_final) +
               fmt(", sigma=0.5 n=40: p=1 %.2e", err_hyp) + fmt(" vs p=-0.5 %.2e", err_ig));
}

std::vector<Percentiles> percentile_cache;

void criterion4() {
    const double bound[] = {8e-10, 5e-9, 8e-7, 1.3e-5};
    bool pass = true;
    std::string detail;
    for (int i = 0; i < 4; ++i) {
        const double err = max_cdf_error(NormalMixture(preset(i), 50), percentile_cache[i]);
        pass &= err <= bound[i];
        detail += std::string(i ? ", set" : "set") + std::to_string(i + 1) + fmt(" %.3e", err);
    }
    report(4, pass, "CDF accuracy at n=50 over 99 percentiles", detail);
}

void criterion5() {
    const double tails[] = {1e-9, 1e-6, 1e-3};
    // Printed magnitudes, rows q = 1e-9, 1e-6, 1e-3, 1-1e-3, 1-1e-6, 1-1e-9.
    const double printed[6][4] = {
        {2.1e-17, 1.4e-16, 5.7e-17, 4.6e-13}, {3.8e-13, 8.8e-14, 1.9e-13, 1.5e-10},
        {1.7e-10, 1.5e-10, 1.0e-9, 6.3e-7},   {1.7e-10, 4.8e-10, 2.9e-9, 6.4e-6},
        {3.8e-13, 6.8e-13, 4.2e-13, 1.5e-9},  {2.1e-17, 2.0e-16, 1.1e-16, 3.1e-14},
    };
    bool pass = true;
    double worst_ratio = 0.0;
    std::string worst_cell;
    for (int s = 0; s < 4; ++s) {
        const auto params = preset(s);
        const NormalMixture mix(params, 50);
        const NormalMixture reference(params, 200);
        for (int i = 0; i < 3; ++i) {
            const double y = reference.quantile(tails[i]);
            const double lower = std::abs(mix.cdf(y) - cdf_by_integration(params, y));
            const double z = reference.quantile(1.0 - tails[i]);
            const double upper = std::abs(sf_by_integration(params, z) - mix.sf(z));
            const double r_lo = lower / printed[i][s], r_hi = upper / printed[5 - i][s];
            pass &= r_lo <= 10.0 && r_hi <= 10.0;
            if (r_lo > worst_ratio) {
                worst_ratio = r_lo;
                worst_cell = "set" + std::to_string(s + 1) + fmt(" q=%.0e", tails[i]);
            }
            if (r_hi > worst_ratio) {
                worst_ratio = r_hi;
                worst_cell = "set" + std::to_string(s + 1) + fmt(" q=1-%.0e", tails[i]);
            }
        }
    }
    report(5, pass, "tail CDF accuracy at n=50 within 10x printed",
           fmt("worst error/printed %.2f", worst_ratio) + " at " + worst_cell);
}

void criterion6() {
    bool pass = true;
    std::string detail;
    for (int i = 0; i < 4; ++i) {
        const double e25 = max_cdf_error(NormalMixture(preset(i), 25), percentile_cache[i]);
        const double e150 = max_cdf_error(NormalMixture(preset(i), 150), percentile_cache[i]);
        pass &= e150 <= 1e-7 && e150 <= e25;
        detail += std::string(i ? ", set" : "set") + std::to_string(i + 1) + fmt(" n=25 %.2e", e25) + fmt(" n=150 %.2e", e150);
    }
    report(6, pass, "CDF convergence in n", detail);
}

// |value - printed| within half a unit of the last printed digit.
bool matches_printed(double value, const std::string& printed) {
    const auto mantissa = printed.substr(0, printed.find_first_of("eE"));
    const auto dot = mantissa.find('.');
    const int decimals = dot == std::string::npos ? 0 : static_cast<int>(mantissa.size() - dot - 1);
    const int exponent = printed.size() > mantissa.size() ? std::stoi(printed.substr(mantissa.size() + 1)) : 0;
    const double half_unit = 0.5 * std::pow(10.0, exponent - decimals);
    return std::abs(value - std::stod(printed)) <= half_unit * (1.0 + 1e-9);
}

void criterion7() {
    // Convention first: exact IG draws, Y = sqrt(X) Z, set 1. Sample mu4/mu2^2 - 3 near 3 fixes
    // the excess convention (raw kurtosis would read 6).
    RngStream rng(20240101);
    const std::size_t count = 10'000'000;
    const auto x = sample_ig_exact(IGParams(1.0, 1.0), count, rng);
    double m2 = 0.0, m4 = 0.0;
    for (double xi : x) {
        const double y2 = xi * std::pow(rng.normal(), 2);
        m2 += y2;
        m4 += y2 * y2;
    }
    m2 /= count;
    m4 /= count;
    const double sample_excess = m4 / (m2 * m2) - 3.0;
    const bool convention = std::abs(sample_excess - 3.0) < 0.5;

    // Independent route: central moments by integrating the density.
    const std::string printed[4][4] = {
        {"0", "1", "0", "3"},
        {"6.16e-5", "4.66e-5", "-0.112", "3.365"},
        {"4.00e-4", "4.33e-5", "-0.110", "2.731"},
        {"5.47e-4", "1.84e-4", "0.655", "20.698"},
    };
    bool digits = true, agree = true;
    double worst_route = 0.0;
    for (int i = 0; i < 4; ++i) {
        const auto params = preset(i);
        const auto st = gh_summary_stats(params);
        const double values[] = {st.mean, st.variance, st.skewness, st.ex_kurtosis};
        for (int k = 0; k < 4; ++k) digits &= matches_printed(values[k], printed[i][k]);

        const GHDensity f(params);
        const double sd = std::sqrt(st.variance);
        IntegrationOptions opt;
        opt.abs_tol = 1e-300;
        opt.rel_tol = 1e-13;
        opt.scale = sd;
        opt.center = st.mean;
        const auto moment = [&](int k, double c) {
            return adaptive_integrate([&](double y) { return std::pow(y - c, k) * f(y); }, -kInf, kInf, opt).value;
        };
        const double mean = moment(1, 0.0);
        const double mu2 = moment(2, mean), mu3 = moment(3, mean), mu4 = moment(4, mean);
        const double skew = mu3 / std::pow(mu2, 1.5), kurt = mu4 / (mu2 * mu2) - 3.0;
        worst_route = std::max({worst_route, std::abs(mean - st.mean) / sd, std::abs(mu2 / st.variance - 1.0),
                                std::abs(skew - st.skewness), std::abs(kurt - st.ex_kurtosis)});
    }
    agree = worst_route <= 1e-7;
    report(7, convention && digits && agree, "summary statistics of the four parameter sets",
           fmt("sampled excess kurtosis %.3f", sample_excess) + (digits ? ", 16/16 within printed precision" : ", digit MISMATCH") +
               fmt(", integration route max dev %.1e", worst_route));
}

void criterion8() {
    const std::vector<double> levels = {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99};
    const double printed_sd[7][4] = {
        {100, 98, 99, 99},    {300, 299, 298, 300}, {449, 447, 444, 444}, {513, 514, 511, 512},
        {463, 458, 458, 456}, {294, 295, 298, 298}, {100, 99, 99, 98},
    };
    const std::size_t count = 1'000'000;
    bool pass = true;
    double worst_z = 0.0, worst_sd_ratio = 0.0;
    const RngStream root(777);
    for (int s = 0; s < 4; ++s) {
        const auto params = preset(s);
        const auto pts = percentiles(params, levels);
        auto draws = sample_gh_parallel(params, 50, count, root.substream(s));
        std::sort(draws.begin(), draws.end());
        for (std::size_t j = 0; j < levels.size(); ++j) {
            const double q = levels[j];
            const double se = std::sqrt(q * (1.0 - q) / count);
            const double below = std::lower_bound(draws.begin(), draws.end(), pts.y[j]) - draws.begin();
            const double z = std::abs(below / count - pts.cdf[j]) / se;
            const double ratio = std::abs(se * 1e6 / printed_sd[j][s] - 1.0);
            worst_z = std::max(worst_z, z);
            worst_sd_ratio = std::max(worst_sd_ratio, ratio);
            pass &= z <= 5.0 && ratio <= 0.2;
        }
    }
    report(8, pass, "Monte Carlo CDF at seven percentiles, 1e6 draws",
           fmt("max |error|/se %.2f", worst_z) + fmt(", max sd deviation from printed %.1f%%", 100 * worst_sd_ratio));
}

void criterion9() {
    RngStream rng(99);
    const auto x = sample_ig_exact(IGParams(1.0, 1.0), 100000, rng);
    const Sigma one(1.0);
    std::vector<double> v;
    v.reserve(x.size());
    for (double xi : x) v.push_back(std::pow(phi(one, xi), 2));
    std::sort(v.begin(), v.end());
    const double d = testing::ks_statistic(v, [](double t) { return 2.0 * normal_cdf(std::sqrt(t)) - 1.0; });
    const double pv = testing::ks_p_value(d, v.size());
    report(9, pv > 0.01, "exact IG sampler, chi-squared(1) KS test", fmt("D %.5f", d) + fmt(", p-value %.3f", pv));
}

void criterion10() {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        const auto params = preset(i);
        const NormalMixture reference(params, 200);
        for (int d = 1; d <= 9; ++d) {
            const double y = reference.quantile(d / 10.0);
            worst = std::max(worst, std::abs(cdf_by_integration(params, y) - mixture_cdf_bruteforce(params, y)));
        }
    }
    report(10, worst <= 1e-10, "oracle routes agree at the deciles", fmt("max difference %.2e", worst));
}

void criterion11() {
    bool pass = true;
    std::string detail;
    for (int i = 0; i < 4; ++i) {
        const auto params = preset(i);
        const auto& pts = percentile_cache[i];
        cached_gig_rule(params.mixing(), 50);
        std::vector<double> quad_ms, oracle_ms;
        double sink = 0.0;
        for (int r = 0; r < 20; ++r) {
            quad_ms.push_back(time_ms([&] {
                const NormalMixture mix(params, 50);
                for (double y : pts.y) sink += mix.cdf(y);
            }));
            oracle_ms.push_back(time_ms([&] {
                for (double y : pts.y) sink += cdf_by_integration(params, y, 2e-3);
            }));
        }
        const double ratio = median(oracle_ms) / median(quad_ms);
        pass &= ratio >= 10.0 && std::isfinite(sink);
        detail += std::string(i ? ", set" : "set") + std::to_string(i + 1) + fmt(" %.0fx", ratio);
    }
    report(11, pass, "quadrature CDF at least 10x faster than the oracle", detail);
}

}  // namespace

int main() {
    for (int i = 0; i < 4; ++i) percentile_cache.push_back(percentiles(preset(i), hundredths()));
    const std::vector<std::function<void()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                         criterion5, criterion6, criterion7, criterion8,
                                                         criterion9, criterion10, criterion11};
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i]();
        } catch (const std::exception& e) {
            report(static_cast<int>(i + 1), false, "threw", e.what());
        }
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
