#include "reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ghq/errors.hpp"
#include "ghq/gh_distribution.hpp"
#include "ghq/mixture.hpp"
#include "ghq/oracle.hpp"
#include "ghq/presets.hpp"
#include "ghq/quadrature.hpp"
#include "ghq/sampling.hpp"

namespace ghq::cli {

namespace {

constexpr int kReferenceSize = 200;

GHParams preset_params(const std::string& name) {
    const auto found = find_preset(name);
    if (!found) throw ParameterError("unknown preset " + name);
    return from_alpha_parameterization(*found);
}

std::vector<std::string> all_sets() {
    std::vector<std::string> names;
    for (const auto& p : parameter_presets()) names.push_back(p.name);
    return names;
}

// Percentile points y_j located on a large mixture, with exact CDF values from the oracle.
struct Percentiles {
    std::vector<double> y;
    std::vector<double> exact;
};

Percentiles percentiles(const GHParams& params, const std::vector<double>& levels) {
    const NormalMixture reference(params, kReferenceSize);
    Percentiles out;
    for (double q : levels) {
        const double y = reference.quantile(q);
        out.y.push_back(y);
        out.exact.push_back(cdf_by_integration(params, y));
    }
    return out;
}

std::vector<double> hundredths() {
    std::vector<double> q;
    for (int j = 1; j <= 99; ++j) q.push_back(j / 100.0);
    return q;
}

double max_error(const NormalMixture& mix, const Percentiles& pts) {
    double worst = 0.0;
    for (std::size_t j = 0; j < pts.y.size(); ++j) worst = std::max(worst, std::abs(mix.cdf(pts.y[j]) - pts.exact[j]));
    return worst;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

Document fig1() {
    Document doc;
    doc.command = "reproduce fig1";
    doc.columns = {"n", "r", "exact", "quadrature", "rel_error"};
    const IGParams ig(1.0, 1.0);
    const GIGParams gig(1.0, 1.0, -0.5);
    for (int n : {10, 20}) {
        const auto rule = ig_rule(ig, n);
        for (int i = 0; i <= 4 * (n + 5); ++i) {
            const double r = 0.25 * i;
            const double exact = gig_moment(gig, r);
            const double quad = rule.integrate([r](double x) { return std::pow(x, r); });
            doc.rows.push_back({std::int64_t{n}, r, exact, quad, quad / exact - 1.0});
        }
    }
    return doc;
}

Document fig2() {
    Document doc;
    doc.command = "reproduce fig2";
    doc.columns = {"p", "sigma", "n", "exact", "quadrature", "rel_error"};
    for (double p : {-0.5, 1.0}) {
        for (double s : {0.5, 0.75, 1.0, 1.5, 2.0}) {
            const GIGParams gig(s, s, p);
            const double t = 0.4 * s * s;
            const double exact = gig_mgf(gig, t);
            for (int n = 2; n <= 60; n += 2) {
                const double quad = gig_mgf_quad(gig, t, n);
                doc.rows.push_back({p, s, std::int64_t{n}, exact, quad, quad / exact - 1.0});
            }
        }
    }
    return doc;
}

Document fig3() {
    Document doc;
    doc.command = "reproduce fig3";
    doc.columns = {"set", "n", "max_error"};
    for (const auto& name : all_sets()) {
        const auto params = preset_params(name);
        const auto pts = percentiles(params, hundredths());
        for (int n = 10; n <= 150; n += 10) {
            doc.rows.push_back({name, std::int64_t{n}, max_error(NormalMixture(params, n), pts)});
        }
    }
    return doc;
}

Document table1() {
    Document doc;
    doc.command = "reproduce table1";
    doc.columns = {"set", "mu", "alpha", "beta", "delta", "p", "sigma", "mean", "variance", "skewness", "ex_kurtosis"};
    for (const auto& preset : parameter_presets()) {
        const auto params = from_alpha_parameterization(preset.params);
        const auto st = gh_summary_stats(params);
        const auto& a = preset.params;
        doc.rows.push_back({preset.name, a.mu(), a.alpha(), a.beta(), a.delta(), a.p(), params.sigma(), st.mean,
                            st.variance, st.skewness, st.ex_kurtosis});
    }
    return doc;
}

Document table3(int n) {
    Document doc;
    doc.command = "reproduce table3";
    doc.meta["n"] = n;
    doc.columns = {"q", "set1", "set2", "set3", "set4"};
    const double tails[] = {1e-9, 1e-6, 1e-3};
    std::vector<std::vector<Cell>> rows;
    const char* labels[] = {"1e-9", "1e-6", "1e-3", "1-1e-3", "1-1e-6", "1-1e-9"};
    for (const char* label : labels) rows.push_back({std::string(label)});
    for (const auto& name : all_sets()) {
        const auto params = preset_params(name);
        const NormalMixture mix(params, n);
        const NormalMixture reference(params, kReferenceSize);
        for (int i = 0; i < 3; ++i) {
            const double y = reference.quantile(tails[i]);
            rows[i].push_back(mix.cdf(y) - cdf_by_integration(params, y));
            const double z = reference.quantile(1.0 - tails[i]);
            // Upper tail: F_n - F = S - S_n, kept in survival form for precision.
            rows[5 - i].push_back(sf_by_integration(params, z) - mix.sf(z));
        }
    }
    doc.rows = std::move(rows);
    return doc;
}

Document table4(const ReproduceOptions& opt) {
    Document doc;
    doc.command = "reproduce table4";
    doc.meta["n"] = opt.n;
    doc.meta["count"] = opt.count;
    doc.meta["repetitions"] = opt.reps;
    doc.meta["seed"] = opt.seed;
    doc.meta["unit"] = 1e-6;
    doc.columns = {"set", "percentile", "bias", "sd", "binomial_sd"};
    const std::vector<double> levels = {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99};
    const RngStream root(opt.seed);
    const auto names = all_sets();
    for (std::size_t s = 0; s < names.size(); ++s) {
        const auto params = preset_params(names[s]);
        const auto pts = percentiles(params, levels);
        std::vector<std::vector<double>> diffs(levels.size());
        const RngStream set_stream = root.substream(s);
        for (int rep = 0; rep < opt.reps; ++rep) {
            auto draws = sample_gh_parallel(params, opt.n, opt.count, set_stream.substream(rep));
            std::sort(draws.begin(), draws.end());
            for (std::size_t j = 0; j < levels.size(); ++j) {
                const auto below = std::lower_bound(draws.begin(), draws.end(), pts.y[j]) - draws.begin();
                diffs[j].push_back(static_cast<double>(below) / draws.size() - pts.exact[j]);
            }
        }
        for (std::size_t j = 0; j < levels.size(); ++j) {
            double m = 0.0;
            for (double d : diffs[j]) m += d;
            m /= diffs[j].size();
            double v = 0.0;
            for (double d : diffs[j]) v += (d - m) * (d - m);
            const double sd = diffs[j].size() > 1 ? std::sqrt(v / (diffs[j].size() - 1)) : 0.0;
            const double q = levels[j];
            doc.rows.push_back({names[s], std::int64_t(std::lround(100 * q)), m * 1e6, sd * 1e6,
                                std::sqrt(q * (1.0 - q) / opt.count) * 1e6});
        }
    }
    return doc;
}

}  // namespace

const std::vector<std::string>& reproduce_targets() {
    static const std::vector<std::string> targets = {"fig1",   "fig2",   "fig3",  "table1",
                                                     "table2", "table3", "table4"};
    return targets;
}

Document bench(const std::vector<std::string>& sets, int n, int reps, double oracle_tol) {
    if (reps < 1) throw ParameterError("bench: reps must be positive");
    Document doc;
    doc.command = "bench";
    doc.meta["n"] = n;
    doc.meta["repetitions"] = reps;
    doc.meta["oracle_tol"] = oracle_tol;
    doc.columns = {"set", "quadrature_error", "quadrature_ms", "oracle_error", "oracle_ms", "speedup"};
    for (const auto& name : sets) {
        const auto params = preset_params(name);
        const auto pts = percentiles(params, hundredths());
        cached_gig_rule(params.mixing(), n);
        std::vector<double> quad_ms, oracle_ms;
        std::vector<double> quad_vals(pts.y.size()), oracle_vals(pts.y.size());
        for (int r = 0; r < reps; ++r) {
            quad_ms.push_back(time_ms([&] {
                const NormalMixture mix(params, n);
                for (std::size_t j = 0; j < pts.y.size(); ++j) quad_vals[j] = mix.cdf(pts.y[j]);
            }));
            oracle_ms.push_back(time_ms([&] {
                for (std::size_t j = 0; j < pts.y.size(); ++j) oracle_vals[j] = cdf_by_integration(params, pts.y[j], oracle_tol);
            }));
        }
        double quad_err = 0.0, oracle_err = 0.0;
        for (std::size_t j = 0; j < pts.y.size(); ++j) {
            quad_err = std::max(quad_err, std::abs(quad_vals[j] - pts.exact[j]));
            oracle_err = std::max(oracle_err, std::abs(oracle_vals[j] - pts.exact[j]));
        }
        const double qm = median(quad_ms), om = median(oracle_ms);
        doc.rows.push_back({name, quad_err, qm, oracle_err, om, om / qm});
    }
    return doc;
}

Document reproduce(const std::string& target, const ReproduceOptions& options) {
    if (target == "fig1") return fig1();
    if (target == "fig2") return fig2();
    if (target == "fig3") return fig3();
    if (target == "table1") return table1();
    if (target == "table2") {
        auto doc = bench(all_sets(), options.n, options.reps, options.bench_tol);
        doc.command = "reproduce table2";
        return doc;
    }
    if (target == "table3") return table3(options.n);
    if (target == "table4") return table4(options);
    throw ParameterError("unknown reproduce target " + target);
}

}  // namespace ghq::cli
