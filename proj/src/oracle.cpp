#include "ghq/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "ghq/errors.hpp"
#include "ghq/gh_distribution.hpp"
#include "ghq/special_functions.hpp"

namespace ghq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK dqk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the odd-indexed Kronrod nodes.
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

template <typename F>
Segment gauss_kronrod(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double res_k = fc * kWgk[10];
    double res_g = 0.0;
    double res_abs = std::abs(res_k);
    std::array<double, 10> f1{};
    std::array<double, 10> f2{};
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        const double sum = f1[j] + f2[j];
        res_k += kWgk[j] * sum;
        res_abs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) res_g += kWg[j / 2] * sum;
    }
    const double mean = 0.5 * res_k;
    double res_asc = kWgk[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j) res_asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

    const double width = std::abs(half);
    double err = std::abs((res_k - res_g) * half);
    res_asc *= width;
    res_abs *= width;
    if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    // Rounding floor; summed over segments it stays at 10 eps times the integral of |f|.
    err = std::max(err, 10.0 * kEps * res_abs);
    return {a, b, res_k * half, err};
}

template <typename F>
IntegrationResult integrate_finite(const F& f, double a, double b, const IntegrationOptions& opt) {
    std::priority_queue<Segment> queue;
    Segment first = gauss_kronrod(f, a, b);
    double total = first.value;
    double total_err = first.error;
    queue.push(first);
    int evaluations = 21;

    auto converged = [&] { return total_err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };
    while (!converged()) {
        if (static_cast<int>(queue.size()) >= opt.max_intervals) {
            throw ConvergenceError("adaptive_integrate: subdivision limit reached", total, total_err);
        }
        const Segment worst = queue.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > std::min(worst.a, worst.b) && mid < std::max(worst.a, worst.b))) {
            throw ConvergenceError("adaptive_integrate: interval cannot be subdivided further", total, total_err);
        }
        queue.pop();
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        evaluations += 42;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
    }

    // Re-sum to shed the drift of the running totals.
    double value = 0.0;
    double error = 0.0;
    const int intervals = static_cast<int>(queue.size());
    std::vector<Segment> parts;
    parts.reserve(queue.size());
    while (!queue.empty()) {
        parts.push_back(queue.top());
        queue.pop();
    }
    std::sort(parts.begin(), parts.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
    for (const auto& s : parts) {
        value += s.value;
        error += s.error;
    }
    return {value, error, intervals, evaluations};
}

}  // namespace

IntegrationResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                                     const IntegrationOptions& opt) {
    if (std::isnan(a) || std::isnan(b)) throw DomainError("adaptive_integrate: NaN limit");
    if (!(opt.abs_tol > 0.0) || !(opt.rel_tol >= 0.0) || !std::isfinite(opt.abs_tol) || !std::isfinite(opt.rel_tol)) {
        throw ParameterError("adaptive_integrate: tolerances must be positive and finite");
    }
    if (opt.max_intervals < 1) throw ParameterError("adaptive_integrate: max_intervals must be positive");
    if (!(opt.scale > 0.0) || !std::isfinite(opt.scale)) throw ParameterError("adaptive_integrate: scale must be positive");
    if (a == b) return {0.0, 0.0, 0, 0};
    if (a > b) {
        auto r = adaptive_integrate(f, b, a, opt);
        r.value = -r.value;
        return r;
    }
    const double s = opt.scale;
    auto guarded = [&f](double x) {
        if (!std::isfinite(x)) return 0.0;
        const double v = f(x);
        if (std::isnan(v)) throw DomainError("adaptive_integrate: integrand returned NaN");
        return v;
    };
    const bool lower_inf = std::isinf(a);
    const bool upper_inf = std::isinf(b);
    if (lower_inf && upper_inf) {
        IntegrationOptions half = opt;
        half.abs_tol *= 0.5;
        const auto left = adaptive_integrate(f, a, opt.center, half);
        const auto right = adaptive_integrate(f, opt.center, b, half);
        return {left.value + right.value, left.error + right.error, left.intervals + right.intervals,
                left.evaluations + right.evaluations};
    }
    if (upper_inf) {
        auto g = [&](double t) {
            const double u = 1.0 - t;
            return guarded(a + s * t / u) * s / (u * u);
        };
        return integrate_finite(g, 0.0, 1.0, opt);
    }
    if (lower_inf) {
        auto g = [&](double t) {
            const double u = 1.0 - t;
            return guarded(b - s * t / u) * s / (u * u);
        };
        return integrate_finite(g, 0.0, 1.0, opt);
    }
    return integrate_finite(guarded, a, b, opt);
}

IntegrationResult adaptive_integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    IntegrationOptions opt;
    opt.abs_tol = tol;
    opt.rel_tol = tol;
    return adaptive_integrate(f, a, b, opt);
}

namespace {

IntegrationOptions tail_options(double tol, double scale) {
    IntegrationOptions opt;
    opt.abs_tol = std::numeric_limits<double>::min();
    opt.rel_tol = tol;
    opt.scale = scale;
    return opt;
}

// Lower tail integral of the density when lower is set, upper tail otherwise.
double density_tail(const GHParams& params, double y, double tol, bool lower) {
    const auto stats = gh_summary_stats(params);
    const GHDensity density(params);
    auto f = [&density](double x) { return density(x); };
    const auto opt = tail_options(tol, std::sqrt(stats.variance));
    const double inf = std::numeric_limits<double>::infinity();
    return lower ? adaptive_integrate(f, -inf, y, opt).value : adaptive_integrate(f, y, inf, opt).value;
}

// Mixture tail: integral over xi of N(+-(y - mu - beta s xi)/sqrt(s xi)) f_GIG(xi | sigma, sigma, p).
double mixture_tail(const GHParams& params, double y, double tol, bool lower) {
    const double sigma = params.sigma();
    const double s = params.delta() / params.gamma();
    const GIGDensity mixing(GIGParams(sigma, sigma, params.p()));
    const double dy = y - params.mu();
    const double bs = params.beta() * s;
    auto f = [&](double xi) {
        const double arg = (dy - bs * xi) / std::sqrt(s * xi);
        return (lower ? normal_cdf(arg) : normal_ccdf(arg)) * mixing(xi);
    };
    const auto opt = tail_options(tol, 1.0);
    const double inf = std::numeric_limits<double>::infinity();
    // Split at xi = 1, the centre of the standardised mixing law.
    const double near = adaptive_integrate(f, 0.0, 1.0, opt).value;
    const double far = adaptive_integrate(f, 1.0, inf, opt).value;
    return near + far;
}

double center_of(const GHParams& params) { return gh_summary_stats(params).mean; }

void check_reference_args(double y, double tol) {
    if (std::isnan(y)) throw DomainError("oracle: y is NaN");
    if (!(tol >= 1e-14) || !std::isfinite(tol)) throw ParameterError("oracle: tol must be at least 1e-14");
}

}  // namespace

double cdf_by_integration(const GHParams& params, double y, double tol) {
    check_reference_args(y, tol);
    if (y <= center_of(params)) return density_tail(params, y, tol, true);
    return 1.0 - density_tail(params, y, tol, false);
}

double sf_by_integration(const GHParams& params, double y, double tol) {
    check_reference_args(y, tol);
    if (y > center_of(params)) return density_tail(params, y, tol, false);
    return 1.0 - density_tail(params, y, tol, true);
}

double mixture_cdf_bruteforce(const GHParams& params, double y, double tol) {
    check_reference_args(y, tol);
    if (y <= center_of(params)) return mixture_tail(params, y, tol, true);
    return 1.0 - mixture_tail(params, y, tol, false);
}

double mixture_sf_bruteforce(const GHParams& params, double y, double tol) {
    check_reference_args(y, tol);
    if (y > center_of(params)) return mixture_tail(params, y, tol, false);
    return 1.0 - mixture_tail(params, y, tol, true);
}

}  // namespace ghq
