#include "ghq/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "ghq/errors.hpp"

namespace ghq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Taylor coefficients of 1/Gamma(x) about 0: 1/Gamma(x) = sum_k c[k] x^k.
constexpr std::array<double, 31> kRecipGamma = {
    0.0,
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
    1.1866922547516003326e-18,
    1.4123806553180317816e-18,
    -2.2987456844353702066e-19,
    1.7144063219273374334e-20,
};

// Temme's auxiliary gamma quantities for |mu| <= 1/2:
//   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
//   gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
// With 1/Gamma(1+x) = sum_{k>=1} c[k] x^{k-1}, the odd/even split gives both
// without the cancellation of the direct differences.
struct TemmeGammas {
    double gam1;
    double gam2;
    double gampl;  // 1/Gamma(1+mu)
    double gammi;  // 1/Gamma(1-mu)
};

TemmeGammas temme_gammas(double mu) {
    double gam1 = 0.0;
    double gam2 = 0.0;
    const double mu2 = mu * mu;
    // Horner over the even and odd coefficient subsequences, highest first.
    for (int k = 30; k >= 2; k -= 2) gam1 = gam1 * mu2 + kRecipGamma[k];
    for (int k = 29; k >= 1; k -= 2) gam2 = gam2 * mu2 + kRecipGamma[k];
    gam1 = -gam1;
    return {gam1, gam2, gam2 - mu * gam1, gam2 + mu * gam1};
}

// e^x K_mu(x) and e^x K_{mu+1}(x) for |mu| <= 1/2.
struct KPair {
    double k_mu;
    double k_mu1;
};

KPair temme_series(double mu, double x) {
    const double half_x = 0.5 * x;
    const double pimu = std::numbers::pi * mu;
    const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    const double d = -std::log(half_x);
    double e = mu * d;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const auto [gam1, gam2, gampl, gammi] = temme_gammas(mu);

    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    const double dd = half_x * half_x;
    double sum1 = p;
    for (int i = 1; i < 500; ++i) {
        ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu * mu);
        c *= dd / i;
        p /= i - mu;
        q /= i + mu;
        const double del = c * ff;
        sum += del;
        sum1 += c * (p - i * ff);
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    const double scale = std::exp(x);
    return {sum * scale, sum1 * (2.0 / x) * scale};
}

// Steed's continued fraction CF2 (Temme's normalisation), valid for x >= 2.
KPair steed_cf2(double mu, double x) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu * mu;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < 100000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    const double k_mu = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
    const double k_mu1 = k_mu * (mu + x + 0.5 - a1 * h) / x;
    return {k_mu, k_mu1};
}

}  // namespace

double bessel_k_scaled(double p, double z) {
    if (!(z > 0.0)) throw DomainError("bessel_k: argument must be positive");
    if (!std::isfinite(p)) throw DomainError("bessel_k: order must be finite");

    const double nu = std::abs(p);
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;

    auto [k_mu, k_mu1] = z < 2.0 ? temme_series(mu, z) : steed_cf2(mu, z);
    const double two_over_z = 2.0 / z;
    for (int i = 1; i <= nl; ++i) {
        const double next = (mu + i) * two_over_z * k_mu1 + k_mu;
        k_mu = k_mu1;
        k_mu1 = next;
        if (!std::isfinite(k_mu1) && i < nl) {
            throw RangeError("bessel_k: overflow in order recurrence");
        }
    }
    if (!std::isfinite(k_mu)) throw RangeError("bessel_k: result overflows");
    return k_mu;
}

double bessel_k(double p, double z) {
    const double scaled = bessel_k_scaled(p, z);
    const double value = scaled * std::exp(-z);
    if (!std::isfinite(value)) throw RangeError("bessel_k: result overflows");
    return value;
}

double normal_pdf(double z) {
    constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;
    return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

double normal_cdf(double z) {
    if (z > 0.0) return 1.0 - normal_ccdf(z);
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double normal_ccdf(double z) {
    if (z < 0.0) return 1.0 - normal_cdf(z);
    return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

namespace {

// Wichura's AS 241 (PPND16), lower half u < 1/2.
double quantile_lower(double u) {
    const double q = u - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((r * 2509.0809287301226727 + 33430.575583588128105) * r +
                     67265.770927008700853) * r + 45921.953931549871457) * r +
                   13731.693765509461125) * r + 1971.5909503065514427) * r +
                 133.14166789178437745) * r + 3.387132872796366608) /
               (((((((r * 5226.495278852854561 + 28729.085735721942674) * r +
                     39307.89580009271061) * r + 21213.794301586595867) * r +
                   5394.1960214247511077) * r + 687.1870074920579083) * r +
                 42.313330701600911252) * r + 1.0);
    }
    double r = std::sqrt(-std::log(u));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((r * 7.7454501427834140764e-4 + .0227238449892691845833) * r +
                    .24178072517745061177) * r + 1.27045825245236838258) * r +
                  3.64784832476320460504) * r + 5.7694972214606914055) * r +
                4.6303378461565452959) * r + 1.42343711074968357734) /
              (((((((r * 1.05075007164441684324e-9 + 5.475938084995344946e-4) * r +
                    .0151986665636164571966) * r + .14810397642748007459) * r +
                  .68976733498510000455) * r + 1.6763848301838038494) * r +
                2.05319162663775882187) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((r * 2.01033439929228813265e-7 + 2.71155556874348757815e-5) * r +
                    .0012426609473880784386) * r + .026532189526576123093) * r +
                  .29656057182850489123) * r + 1.7848265399172913358) * r +
                5.4637849111641143699) * r + 6.6579046435011037772) /
              (((((((r * 2.04426310338993978564e-15 + 1.4215117583164458887e-7) * r +
                    1.8463183175100546818e-5) * r + 7.868691311456132591e-4) * r +
                  .0148753612908506148525) * r + .13692988092273580531) * r +
                .59983220655588793769) * r + 1.0);
    }
    return -val;
}

}  // namespace

double normal_quantile(double u) {
    if (!(u > 0.0 && u < 1.0)) throw DomainError("normal_quantile: probability must lie in (0, 1)");
    if (u == 0.5) return 0.0;
    if (u < 0.5) return quantile_lower(u);
    return -quantile_lower(1.0 - u);
}

}  // namespace ghq
