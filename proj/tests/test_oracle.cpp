#include "ghq/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "ghq/errors.hpp"
#include "ghq/gh_distribution.hpp"
#include "ghq/mixture.hpp"
#include "ghq/special_functions.hpp"
#include "test_support.hpp"

namespace ghq {
namespace {

using testing::preset;

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(AdaptiveIntegrate, ElementaryIntegrals) {
    EXPECT_NEAR(adaptive_integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-14).value, 2.0,
                1e-14);
    EXPECT_NEAR(adaptive_integrate([](double x) { return std::exp(-x); }, 0.0, kInf, 1e-14).value, 1.0, 1e-14);
    EXPECT_NEAR(adaptive_integrate([](double x) { return 1.0 / (1.0 + x * x); }, -kInf, kInf, 1e-13).value,
                std::numbers::pi, 1e-12);
    EXPECT_NEAR(adaptive_integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-12).value, 2.0, 1e-10);
    EXPECT_NEAR(adaptive_integrate([](double x) { return std::exp(x); }, 1.0, 0.0, 1e-14).value, 1.0 - std::exp(1.0),
                1e-14);
    EXPECT_EQ(adaptive_integrate([](double x) { return x; }, 2.0, 2.0, 1e-14).value, 0.0);
}

TEST(AdaptiveIntegrate, Densities) {
    EXPECT_NEAR(adaptive_integrate([](double x) { return normal_pdf(x); }, -kInf, kInf, 1e-14).value, 1.0, 1e-13);
    const IGParams ig(1.0, 1.0);
    EXPECT_NEAR(adaptive_integrate([&](double x) { return ig_density(ig, x); }, 0.0, kInf, 1e-14).value, 1.0, 1e-12);
    const auto set1 = preset(0);
    EXPECT_NEAR(adaptive_integrate([&](double y) { return gh_density(set1, y); }, -kInf, 0.0, 1e-14).value, 0.5,
                1e-12);
}

TEST(AdaptiveIntegrate, ReportsErrorAndCounts) {
    const auto r = adaptive_integrate([](double x) { return std::cos(x); }, 0.0, 1.0, 1e-12);
    EXPECT_LE(std::abs(r.value - std::sin(1.0)), 1e-14);
    EXPECT_LE(r.error, 1e-12);
    EXPECT_GE(r.intervals, 1);
    EXPECT_EQ(r.evaluations % 21, 0);
}

TEST(AdaptiveIntegrate, Errors) {
    IntegrationOptions opt;
    opt.abs_tol = 1e-15;
    opt.rel_tol = 1e-15;
    opt.max_intervals = 3;
    try {
        adaptive_integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, opt);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_TRUE(std::isfinite(e.partial()));
        EXPECT_GT(e.error_estimate(), 0.0);
    }
    EXPECT_THROW(adaptive_integrate([](double x) { return x; }, std::nan(""), 1.0, 1e-10), DomainError);
    EXPECT_THROW(adaptive_integrate([](double x) { return x; }, 0.0, 1.0, 0.0), ParameterError);
    EXPECT_THROW(adaptive_integrate([](double) { return std::nan(""); }, 0.0, 1.0, 1e-10), DomainError);
}

TEST(CdfByIntegration, SymmetryAndComplement) {
    EXPECT_NEAR(cdf_by_integration(preset(0), 0.0), 0.5, 1e-14);
    EXPECT_NEAR(mixture_cdf_bruteforce(preset(0), 0.0), 0.5, 1e-14);
    for (int i = 0; i < 4; ++i) {
        const auto params = preset(i);
        const double y = gh_summary_stats(params).mean;
        EXPECT_NEAR(cdf_by_integration(params, y) + sf_by_integration(params, y), 1.0, 1e-13);
        EXPECT_NEAR(mixture_cdf_bruteforce(params, y) + mixture_sf_bruteforce(params, y), 1.0, 1e-13);
    }
}

TEST(CdfByIntegration, RoutesAgreeAtMedian) {
    for (int i = 0; i < 4; ++i) {
        const auto params = preset(i);
        const double y = gh_quantile(params, 0.5, 100);
        EXPECT_NEAR(cdf_by_integration(params, y), mixture_cdf_bruteforce(params, y), 1e-10) << "set" << i + 1;
    }
}

TEST(CdfByIntegration, AgreesWithLargeQuadrature) {
    for (int i = 0; i < 3; ++i) {
        const auto params = preset(i);
        const NormalMixture mix(params, 150);
        for (double q : {0.05, 0.5, 0.95}) {
            const double y = mix.quantile(q);
            EXPECT_NEAR(cdf_by_integration(params, y), mix.cdf(y), 1e-8) << "set" << i + 1;
        }
    }
}

TEST(CdfByIntegration, IgMixingReduction) {
    // p = -1/2 with beta = 0: the mixture route integrates IG(1, 1) directly.
    const GHParams params(0.0, 0.0, 1.0, 1.0, -0.5);
    const IGParams ig(1.0, 1.0);
    const double y = -1.3;
    const double direct =
        adaptive_integrate([&](double x) { return normal_cdf(y / std::sqrt(x)) * ig_density(ig, x); }, 0.0, kInf, 1e-14)
            .value;
    EXPECT_NEAR(mixture_cdf_bruteforce(params, y), direct, 1e-13);
}

TEST(CdfByIntegration, RejectsLooseOrInvalidTolerance) {
    EXPECT_THROW(cdf_by_integration(preset(0), 0.0, 0.0), ParameterError);
    EXPECT_THROW(cdf_by_integration(preset(0), 0.0, 1e-15), ParameterError);
    EXPECT_THROW(cdf_by_integration(preset(0), std::nan("")), DomainError);
}

}  // namespace
}  // namespace ghq
