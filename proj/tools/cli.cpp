#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ghq/errors.hpp"
#include "ghq/gh_distribution.hpp"
#include "ghq/mixture.hpp"
#include "ghq/oracle.hpp"
#include "ghq/presets.hpp"
#include "ghq/quadrature.hpp"
#include "ghq/sampling.hpp"
#include "output.hpp"
#include "reproduce.hpp"

namespace ghq::cli {

namespace {

namespace fs = std::filesystem;

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParamOptions {
    std::string set;
    double mu = kUnset;
    double alpha = kUnset;
    double beta = kUnset;
    double gamma = kUnset;
    double delta = kUnset;
    double p = kUnset;
};

struct CommonOptions {
    int n = 50;
    std::string format = "csv";
    std::string out;
};

struct BatchOptions {
    std::vector<double> values;
    std::string input;
};

void add_params(CLI::App* cmd, ParamOptions& o) {
    std::vector<std::string> names;
    for (const auto& p : parameter_presets()) names.push_back(p.name);
    cmd->add_option("--set", o.set, "Preset parameter set")->check(CLI::IsMember(names));
    cmd->add_option("--mu", o.mu, "Location mu");
    cmd->add_option("--alpha", o.alpha, "Tail parameter alpha = sqrt(beta^2 + gamma^2)");
    cmd->add_option("--beta", o.beta, "Skewness parameter beta");
    cmd->add_option("--gamma", o.gamma, "Mixing parameter gamma (instead of --alpha)");
    cmd->add_option("--delta", o.delta, "Scale parameter delta");
    cmd->add_option("--p", o.p, "Shape parameter p");
}

void add_common(CLI::App* cmd, CommonOptions& c, bool with_n = true) {
    if (with_n) cmd->add_option("--n", c.n, "Quadrature size")->capture_default_str();
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    cmd->add_option("--out", c.out, "Output file (relative to GHQ_OUTPUT_DIR when set)");
}

void add_batch(CLI::App* cmd, BatchOptions& b, const std::string& flag, const std::string& what) {
    cmd->add_option(flag, b.values, what)->delimiter(',');
    cmd->add_option("--input", b.input, "File of evaluation points, one per line");
}

GHParams resolve_params(const ParamOptions& o) {
    const auto given = [](double v) { return !std::isnan(v); };
    if (given(o.alpha) && given(o.gamma)) throw UsageError("--alpha and --gamma are mutually exclusive");
    std::optional<GHParams> base;
    if (!o.set.empty()) base = from_alpha_parameterization(*find_preset(o.set));
    const auto pick = [&](double v, double from_base, double fallback) {
        if (given(v)) return v;
        return base ? from_base : fallback;
    };
    const double mu = pick(o.mu, base ? base->mu() : 0.0, 0.0);
    const double beta = pick(o.beta, base ? base->beta() : 0.0, 0.0);
    const double p = pick(o.p, base ? base->p() : 0.0, -0.5);
    const double delta = pick(o.delta, base ? base->delta() : 0.0, kUnset);
    if (!given(delta)) throw UsageError("missing --delta (or --set)");
    if (given(o.alpha)) {
        return from_alpha_parameterization(GHParamsAlpha(mu, o.alpha, beta, delta, p));
    }
    if (given(o.gamma)) return GHParams(mu, beta, o.gamma, delta, p);
    if (!base) throw UsageError("missing --alpha or --gamma (or --set)");
    if (given(o.beta)) {
        // Preset alpha kept fixed when only beta changes.
        return from_alpha_parameterization(GHParamsAlpha(mu, base->alpha(), beta, delta, p));
    }
    return GHParams(mu, beta, base->gamma(), delta, p);
}

double parse_value(const std::string& text, const std::string& source) {
    double v = 0.0;
    std::size_t used = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("cannot parse number '" + text + "' in " + source);
    }
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size()) throw UsageError("cannot parse number '" + text + "' in " + source);
    return v;
}

std::vector<double> batch_values(const BatchOptions& b, const std::string& flag) {
    std::vector<double> values = b.values;
    if (!b.input.empty()) {
        std::ifstream in(b.input);
        if (!in) throw UsageError("cannot open input file " + b.input);
        std::string line;
        while (std::getline(in, line)) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            const auto last = line.find_last_not_of(" \t\r");
            values.push_back(parse_value(line.substr(first, last - first + 1), b.input));
        }
    }
    if (values.empty()) throw UsageError("no evaluation points: give " + flag + " or --input");
    return values;
}

fs::path output_dir() {
    const char* env = std::getenv("GHQ_OUTPUT_DIR");
    return env && *env ? fs::path(env) : fs::path();
}

fs::path resolve_out(const std::string& out) {
    fs::path path(out);
    if (path.is_relative() && !output_dir().empty()) path = output_dir() / path;
    return path;
}

void emit(const Document& doc, const CommonOptions& c, std::ostream& out) {
    const auto write = [&](std::ostream& os) {
        if (c.format == "json") {
            write_json(doc, os);
        } else {
            write_csv(doc, os);
        }
    };
    if (c.out.empty()) {
        write(out);
        return;
    }
    const fs::path path = resolve_out(c.out);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + path.string());
    write(file);
    if (!file) throw UsageError("failed writing " + path.string());
}

Document evaluate(const std::string& command, const GHParams& params, int n, const std::string& column,
                  const std::vector<double>& xs, const std::function<double(double)>& f) {
    Document doc;
    doc.command = command;
    doc.params = params;
    doc.meta["n"] = n;
    doc.columns = {column, "value"};
    for (double x : xs) doc.rows.push_back({x, f(x)});
    return doc;
}

struct ErrorInfo {
    int code;
    std::string type;
};

void report_error(const ErrorInfo& info, const std::string& message, const CommonOptions* c, std::ostream& out,
                  std::ostream& err) {
    err << "error: " << message << '\n';
    if (c && c->format == "json") {
        nlohmann::ordered_json j;
        j["error"] = {{"type", info.type}, {"exit_code", info.code}, {"message", message}};
        out << j.dump(2) << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized hyperbolic distribution via inverse Gaussian quadrature", "ghq"};
    app.require_subcommand(1);

    ParamOptions po;
    CommonOptions co;
    BatchOptions bo;

    // quad
    std::string kind = "gig";
    bool raw = false;
    auto* quad = app.add_subcommand("quad", "Emit the IG or GIG quadrature rule of the mixing distribution");
    add_params(quad, po);
    add_common(quad, co);
    quad->add_option("--kind", kind, "Rule type")->check(CLI::IsMember({"ig", "gig"}))->capture_default_str();
    quad->add_flag("--raw", raw, "Skip weight renormalisation");

    // density
    bool mixing_density = false;
    auto* density = app.add_subcommand("density", "GH density, or GIG mixing density with --mixing");
    add_params(density, po);
    add_common(density, co, false);
    add_batch(density, bo, "--y", "Evaluation points");
    density->add_flag("--mixing", mixing_density, "Evaluate the GIG mixing density instead");

    // moments
    auto* moments = app.add_subcommand("moments", "Moments E X^r of the mixing distribution");
    add_params(moments, po);
    add_common(moments, co);
    add_batch(moments, bo, "--r", "Moment orders");
    moments->add_flag("--raw", raw, "Quadrature without weight renormalisation");

    // mgf
    bool mixing_mgf = false;
    auto* mgf = app.add_subcommand("mgf", "Moment generating function, closed form and quadrature");
    add_params(mgf, po);
    add_common(mgf, co);
    add_batch(mgf, bo, "--t", "Arguments t");
    mgf->add_flag("--mixing", mixing_mgf, "MGF of the GIG mixing distribution");

    // stats
    auto* stats = app.add_subcommand("stats", "Mean, variance, skewness and excess kurtosis");
    add_params(stats, po);
    add_common(stats, co, false);

    // cdf
    bool upper = false;
    auto* cdf = app.add_subcommand("cdf", "Quadrature CDF");
    add_params(cdf, po);
    add_common(cdf, co);
    add_batch(cdf, bo, "--y", "Evaluation points");
    cdf->add_flag("--upper", upper, "Survival function P(Y > y)");

    // quantile
    auto* quantile = app.add_subcommand("quantile", "Inverse of the quadrature CDF");
    add_params(quantile, po);
    add_common(quantile, co);
    add_batch(quantile, bo, "--q", "Probabilities");

    // price
    bool put = false;
    auto* price = app.add_subcommand("price", "Undiscounted European option price on S = e^Y");
    add_params(price, po);
    add_common(price, co);
    add_batch(price, bo, "--strike", "Strikes");
    price->add_flag("--put", put, "Price puts instead of calls");

    // expect
    std::string g = "y";
    int m = 0;
    auto* expect = app.add_subcommand("expect", "E g(Y) by compound quadrature");
    add_params(expect, po);
    add_common(expect, co);
    add_batch(expect, bo, "--arg", "Argument a of g");
    expect->add_option("--g", g, "y: Y^a, exp: e^{aY}, indicator: 1{Y < a}, call: max(e^Y - a, 0)")
        ->check(CLI::IsMember({"y", "exp", "indicator", "call"}))
        ->capture_default_str();
    expect->add_option("--m", m, "Gauss-Hermite size (default n)");

    // sample
    std::uint64_t count = 1000;
    std::uint64_t seed = 1;
    bool antithetic = false;
    bool binary = false;
    unsigned threads = 0;
    auto* sample = app.add_subcommand("sample", "Draw GH variates from the quadrature mixture");
    add_params(sample, po);
    add_common(sample, co);
    sample->add_option("--count", count, "Number of draws")->capture_default_str();
    sample->add_option("--seed", seed, "Random seed")->capture_default_str();
    sample->add_flag("--antithetic", antithetic, "Pair (U, Z) with (1 - U, -Z)");
    sample->add_flag("--binary", binary, "Little-endian 64-bit floats instead of text");
    sample->add_option("--threads", threads, "Worker threads (0: hardware); output does not depend on it");

    // oracle-cdf
    double tol = 1e-14;
    std::string route = "density";
    auto* oracle = app.add_subcommand("oracle-cdf", "Reference CDF by adaptive integration");
    add_params(oracle, po);
    add_common(oracle, co, false);
    add_batch(oracle, bo, "--y", "Evaluation points");
    oracle->add_option("--tol", tol, "Relative tolerance (>= 1e-14)")->capture_default_str();
    oracle->add_option("--route", route, "density: integrate the GH density; mixture: integrate over the mixing law")
        ->check(CLI::IsMember({"density", "mixture"}))
        ->capture_default_str();
    oracle->add_flag("--upper", upper, "Survival function P(Y > y)");

    // bench
    int reps = 20;
    std::vector<std::string> bench_sets;
    double bench_tol = 2e-3;
    auto* bench_cmd = app.add_subcommand("bench", "Timing of 99 percentile CDFs, quadrature against the oracle");
    add_common(bench_cmd, co);
    bench_cmd->add_option("--reps", reps, "Repetitions; medians are reported")->capture_default_str();
    bench_cmd->add_option("--sets", bench_sets, "Preset names (default all)")->delimiter(',');
    bench_cmd->add_option("--tol", bench_tol, "Oracle tolerance")->capture_default_str();

    // reproduce
    std::string target;
    ReproduceOptions ro;
    auto targets = reproduce_targets();
    targets.push_back("all");
    auto* repro = app.add_subcommand("reproduce", "Regenerate figure data and tables as CSV");
    add_common(repro, co);
    repro->add_option("--target", target, "fig1|fig2|fig3|table1..table4|all")->required()->check(CLI::IsMember(targets));
    repro->add_option("--reps", ro.reps, "Timing repetitions (table2) or Monte Carlo sets (table4)")->capture_default_str();
    repro->add_option("--count", ro.count, "Draws per Monte Carlo set (table4)")->capture_default_str();
    repro->add_option("--seed", ro.seed, "Random seed (table4)")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*quad) {
            const auto params = resolve_params(po);
            const auto mixing = params.mixing();
            const auto rule = kind == "ig" ? ig_rule(IGParams(mixing.gamma(), mixing.delta()), co.n)
                                           : gig_rule(mixing, co.n, !raw);
            Document doc;
    doc.command = "quad";
    doc.params = params;
            doc.meta["kind"] = kind;
            doc.meta["n"] = co.n;
            doc.meta["renormalized"] = kind == "gig" && !raw;
            doc.meta["degraded"] = rule.degraded();
            doc.meta["weight_sum"] = rule.weight_sum();
            doc.columns = {"k", "node", "weight"};
            for (std::size_t k = 0; k < rule.size(); ++k) {
                doc.rows.push_back({static_cast<std::int64_t>(k + 1), rule.node(k), rule.weight(k)});
            }
            emit(doc, co, out);
        } else if (*density) {
            const auto params = resolve_params(po);
            const auto xs = batch_values(bo, "--y");
            Document doc;
            if (mixing_density) {
                const GIGDensity f(params.mixing());
                doc = evaluate("density", params, 0, "x", xs, [&](double x) { return f(x); });
            } else {
                const GHDensity f(params);
                doc = evaluate("density", params, 0, "y", xs, [&](double y) { return f(y); });
            }
            doc.meta.erase("n");
            doc.meta["mixing"] = mixing_density;
            emit(doc, co, out);
        } else if (*moments) {
            const auto params = resolve_params(po);
            const auto mixing = params.mixing();
            const auto rule = gig_rule(mixing, co.n, !raw);
            Document doc;
    doc.command = "moments";
    doc.params = params;
            doc.meta["n"] = co.n;
            doc.meta["renormalized"] = !raw;
            doc.columns = {"r", "exact", "quadrature", "rel_error"};
            for (double r : batch_values(bo, "--r")) {
                const double exact = gig_moment(mixing, r);
                const double q = rule.integrate([r](double x) { return std::pow(x, r); });
                doc.rows.push_back({r, exact, q, q / exact - 1.0});
            }
            emit(doc, co, out);
        } else if (*mgf) {
            const auto params = resolve_params(po);
            const auto mixing = params.mixing();
            Document doc;
    doc.command = "mgf";
    doc.params = params;
            doc.meta["n"] = co.n;
            doc.meta["mixing"] = mixing_mgf;
            doc.columns = {"t", "exact", "quadrature", "rel_error"};
            for (double t : batch_values(bo, "--t")) {
                double exact = 0.0, q = 0.0;
                if (mixing_mgf) {
                    exact = gig_mgf(mixing, t);
                    q = gig_mgf_quad(mixing, t, co.n);
                } else {
                    exact = gh_mgf(params, t);
                    q = std::exp(params.mu() * t) * gig_mgf_quad(mixing, params.beta() * t + 0.5 * t * t, co.n);
                }
                doc.rows.push_back({t, exact, q, q / exact - 1.0});
            }
            emit(doc, co, out);
        } else if (*stats) {
            const auto params = resolve_params(po);
            const auto st = gh_summary_stats(params);
            Document doc;
    doc.command = "stats";
    doc.params = params;
            doc.columns = {"mean", "variance", "skewness", "ex_kurtosis"};
            doc.rows.push_back({st.mean, st.variance, st.skewness, st.ex_kurtosis});
            emit(doc, co, out);
        } else if (*cdf) {
            const auto params = resolve_params(po);
            const NormalMixture mix(params, co.n);
            auto doc = evaluate("cdf", params, co.n, "y", batch_values(bo, "--y"),
                                [&](double y) { return upper ? mix.sf(y) : mix.cdf(y); });
            doc.meta["upper"] = upper;
            emit(doc, co, out);
        } else if (*quantile) {
            const auto params = resolve_params(po);
            const NormalMixture mix(params, co.n);
            emit(evaluate("quantile", params, co.n, "q", batch_values(bo, "--q"),
                          [&](double q) { return mix.quantile(q); }),
                 co, out);
        } else if (*price) {
            const auto params = resolve_params(po);
            const NormalMixture mix(params, co.n);
            auto doc = evaluate("price", params, co.n, "strike", batch_values(bo, "--strike"),
                                [&](double k) { return put ? mix.put_price(k) : mix.call_price(k); });
            doc.meta["type"] = put ? "put" : "call";
            emit(doc, co, out);
        } else if (*expect) {
            const auto params = resolve_params(po);
            const NormalMixture mix(params, co.n);
            const int mm = m > 0 ? m : co.n;
            std::vector<double> a_values = bo.values;
            if (a_values.empty() && bo.input.empty()) a_values.push_back(1.0);
            else a_values = batch_values(bo, "--arg");
            Document doc;
    doc.command = "expect";
    doc.params = params;
            doc.meta["n"] = co.n;
            doc.meta["m"] = mm;
            doc.meta["g"] = g;
            doc.columns = {"arg", "value"};
            for (double a : a_values) {
                std::function<double(double)> fn;
                if (g == "y") fn = [a](double y) { return std::pow(y, a); };
                if (g == "exp") fn = [a](double y) { return std::exp(a * y); };
                if (g == "indicator") fn = [a](double y) { return y < a ? 1.0 : 0.0; };
                if (g == "call") fn = [a](double y) { return std::max(std::exp(y) - a, 0.0); };
                doc.rows.push_back({a, mix.expectation(fn, mm)});
            }
            emit(doc, co, out);
        } else if (*sample) {
            const auto params = resolve_params(po);
            const auto draws = sample_gh_parallel(params, co.n, count, RngStream(seed), antithetic, threads);
            const auto write = [&](std::ostream& os) {
                if (binary) {
                    for (double v : draws) {
                        std::uint64_t bits;
                        std::memcpy(&bits, &v, sizeof bits);
                        char bytes[8];
                        for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
                        os.write(bytes, 8);
                    }
                } else if (co.format == "json") {
                    nlohmann::ordered_json j;
                    j["command"] = "sample";
                    j["params"] = params_to_json(params);
                    j["n"] = co.n;
                    j["seed"] = seed;
                    j["antithetic"] = antithetic;
                    j["values"] = draws;
                    os << j.dump(2) << '\n';
                } else {
                    for (double v : draws) os << format_number(v) << '\n';
                }
            };
            if (co.out.empty()) {
                write(out);
            } else {
                const auto path = resolve_out(co.out);
                std::ofstream file(path, std::ios::binary);
                if (!file) throw UsageError("cannot open output file " + path.string());
                write(file);
            }
        } else if (*oracle) {
            const auto params = resolve_params(po);
            const bool mixture = route == "mixture";
            auto doc = evaluate("oracle-cdf", params, 0, "y", batch_values(bo, "--y"), [&](double y) {
                if (mixture) return upper ? mixture_sf_bruteforce(params, y, tol) : mixture_cdf_bruteforce(params, y, tol);
                return upper ? sf_by_integration(params, y, tol) : cdf_by_integration(params, y, tol);
            });
            doc.meta.erase("n");
            doc.meta["route"] = route;
            doc.meta["tol"] = tol;
            doc.meta["upper"] = upper;
            emit(doc, co, out);
        } else if (*bench_cmd) {
            if (bench_sets.empty()) {
                for (const auto& p : parameter_presets()) bench_sets.push_back(p.name);
            }
            for (const auto& s : bench_sets) {
                if (!find_preset(s)) throw UsageError("unknown preset " + s);
            }
            emit(bench(bench_sets, co.n, reps, bench_tol), co, out);
        } else if (*repro) {
            ro.n = co.n;
            if (target != "all") {
                emit(reproduce(target, ro), co, out);
            } else {
                fs::path dir = co.out.empty() ? output_dir() : resolve_out(co.out);
                if (dir.empty()) dir = ".";
                fs::create_directories(dir);
                for (const auto& t : reproduce_targets()) {
                    CommonOptions file_opts = co;
                    file_opts.out = (dir / (t + (co.format == "json" ? ".json" : ".csv"))).string();
                    emit(reproduce(t, ro), file_opts, out);
                    out << file_opts.out << '\n';
                }
            }
        }
    } catch (const UsageError& e) {
        report_error({kUsage, "usage_error"}, e.what(), &co, out, err);
        return kUsage;
    } catch (const fs::filesystem_error& e) {
        report_error({kUsage, "io_error"}, e.what(), &co, out, err);
        return kUsage;
    } catch (const ConvergenceError& e) {
        report_error({kConvergence, "convergence_error"}, e.what(), &co, out, err);
        return kConvergence;
    } catch (const DomainError& e) {
        report_error({kNumerical, "domain_error"}, e.what(), &co, out, err);
        return kNumerical;
    } catch (const SizeError& e) {
        report_error({kNumerical, "size_error"}, e.what(), &co, out, err);
        return kNumerical;
    } catch (const ParameterError& e) {
        report_error({kNumerical, "parameter_error"}, e.what(), &co, out, err);
        return kNumerical;
    } catch (const RangeError& e) {
        report_error({kNumerical, "range_error"}, e.what(), &co, out, err);
        return kNumerical;
    } catch (const DivergenceError& e) {
        report_error({kNumerical, "divergence_error"}, e.what(), &co, out, err);
        return kNumerical;
    }
    return kSuccess;
}

}  // namespace ghq::cli
