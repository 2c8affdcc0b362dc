#include "fishan/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fishan/dynamics.hpp"
#include "fishan/errors.hpp"
#include "fishan/io.hpp"
#include "fishan/kde.hpp"
#include "fishan/measures.hpp"
#include "fishan/windows.hpp"

namespace fishan::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitDomain = 4;
constexpr int kExitQuadrature = 5;

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open output file: " + path);
    }
    out << content;
    out.flush();
    if (!out) {
        throw ConfigError("failed while writing output file: " + path);
    }
}

struct ParametricArgs {
    std::string family;
    std::optional<double> sigma, theta, k, mu, lambda;
};

double required_param(const std::optional<double>& v, const char* flag, const char* family) {
    if (!v) {
        throw ConfigError(std::string(flag) + " is required for family '" + family + "'");
    }
    return *v;
}

void reject_param(const std::optional<double>& v, const char* flag, const char* family) {
    if (v) {
        throw ConfigError(std::string(flag) + " is not a parameter of family '" + family + "'");
    }
}

ParametricModel build_model(const ParametricArgs& a) {
    if (a.family == "gaussian") {
        reject_param(a.theta, "--theta", "gaussian");
        reject_param(a.k, "--k", "gaussian");
        reject_param(a.lambda, "--lambda", "gaussian");
        reject_param(a.mu, "--mu", "gaussian");
        return Gaussian{required_param(a.sigma, "--sigma", "gaussian")};
    }
    if (a.family == "gamma") {
        reject_param(a.sigma, "--sigma", "gamma");
        reject_param(a.lambda, "--lambda", "gamma");
        reject_param(a.mu, "--mu", "gamma");
        return Gamma{required_param(a.theta, "--theta", "gamma"),
                     required_param(a.k, "--k", "gamma")};
    }
    if (a.family == "weibull") {
        reject_param(a.sigma, "--sigma", "weibull");
        reject_param(a.theta, "--theta", "weibull");
        return Weibull{a.mu.value_or(0.0), required_param(a.lambda, "--lambda", "weibull"),
                       required_param(a.k, "--k", "weibull")};
    }
    if (a.family == "lognormal") {
        reject_param(a.theta, "--theta", "lognormal");
        reject_param(a.k, "--k", "lognormal");
        reject_param(a.lambda, "--lambda", "lognormal");
        return LogNormal{a.mu.value_or(0.0), required_param(a.sigma, "--sigma", "lognormal")};
    }
    throw ConfigError("unknown family '" + a.family +
                      "' (expected gaussian, gamma, weibull or lognormal)");
}

std::pair<double, double> parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw ConfigError("--point expects 'sep,fim', got '" + text + "'");
    }
    try {
        const double sep = std::stod(text.substr(0, comma));
        const double fim = std::stod(text.substr(comma + 1));
        if (!(sep > 0.0) || !(fim > 0.0) || !std::isfinite(sep) || !std::isfinite(fim)) {
            throw ConfigError("--point coordinates must be positive finite reals");
        }
        return {sep, fim};
    } catch (const std::invalid_argument&) {
        throw ConfigError("--point expects two numbers, got '" + text + "'");
    } catch (const std::out_of_range&) {
        throw ConfigError("--point value out of range in '" + text + "'");
    }
}

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"Fisher-Shannon analysis of time series: entropy power, Fisher information,"
                 " complexity, windowed pipelines and the logistic-map experiment"};
    app.require_subcommand(1);

    // ---- analyze ----------------------------------------------------------
    auto* analyze = app.add_subcommand(
        "analyze", "Windowed SEP/FIM/FSC over an index,value CSV time series");
    std::string an_input, an_output = "-";
    WindowSpec an_spec;
    double an_rel_tol = EstimateOptions{}.quad_rel_tol;
    analyze->add_option("--input", an_input, "input CSV (header, then index,value rows)")
        ->required();
    analyze->add_option("--output", an_output, "output CSV path, '-' for stdout");
    analyze->add_option("--width", an_spec.width, "window width, index units")->required();
    analyze->add_option("--stride", an_spec.stride,
                        "window stride, index units (default: width, non-overlapping)");
    analyze->add_option("--min-points", an_spec.min_points,
                        "minimum observations per window")->capture_default_str();
    analyze->add_option("--rel-tol", an_rel_tol, "relative tolerance of the measure integrals")
        ->capture_default_str();
    analyze->callback([&] {
        if (an_spec.stride <= 0.0) an_spec.stride = an_spec.width;
        const TimeSeries series = ingest_csv(an_input);
        EstimateOptions opts;
        opts.quad_rel_tol = an_rel_tol;
        const auto windows = windowed_measures(series, an_spec, opts);
        write_output(an_output, windows_csv(windows));
    });

    // ---- estimate ---------------------------------------------------------
    auto* estimate = app.add_subcommand(
        "estimate", "Whole-sample SEP/FIM/FSC and plug-in bandwidth for a CSV series");
    std::string es_input, es_output = "-";
    double es_rel_tol = EstimateOptions{}.quad_rel_tol;
    estimate->add_option("--input", es_input, "input CSV")->required();
    estimate->add_option("--output", es_output, "output CSV path, '-' for stdout");
    estimate->add_option("--rel-tol", es_rel_tol, "relative tolerance of the measure integrals")
        ->capture_default_str();
    estimate->callback([&] {
        const TimeSeries series = ingest_csv(es_input);
        const Sample sample(series.values());
        const Bandwidth h = sj_dpi_bandwidth(sample);
        EstimateOptions opts;
        opts.quad_rel_tol = es_rel_tol;
        const InfoTriple triple = estimate_measures(sample, h, opts);
        write_output(es_output, estimate_csv(sample.size(), h.value(), triple));
    });

    // ---- parametric -------------------------------------------------------
    auto* parametric = app.add_subcommand(
        "parametric", "Closed-form SEP/FIM/FSC of a parametric family");
    ParametricArgs pa;
    std::string pa_output = "-";
    parametric->add_option("--family", pa.family, "gaussian | gamma | weibull | lognormal")
        ->required();
    parametric->add_option("--sigma", [&pa](const CLI::results_t& r) {
        pa.sigma = std::stod(r[0]); return true; }, "gaussian/lognormal sigma");
    parametric->add_option("--theta", [&pa](const CLI::results_t& r) {
        pa.theta = std::stod(r[0]); return true; }, "gamma scale");
    parametric->add_option("--k", [&pa](const CLI::results_t& r) {
        pa.k = std::stod(r[0]); return true; }, "gamma/weibull shape (FIM needs k > 2)");
    parametric->add_option("--mu", [&pa](const CLI::results_t& r) {
        pa.mu = std::stod(r[0]); return true; }, "weibull location / lognormal mu");
    parametric->add_option("--lambda", [&pa](const CLI::results_t& r) {
        pa.lambda = std::stod(r[0]); return true; }, "weibull scale");
    parametric->add_option("--output", pa_output, "output CSV path, '-' for stdout");
    parametric->callback([&] {
        write_output(pa_output, triple_csv(parametric_measures(build_model(pa))));
    });

    // ---- logistic ---------------------------------------------------------
    auto* logistic = app.add_subcommand(
        "logistic", "Logistic-map sweep: windowed measures along the control parameter,"
                    " with per-window Lyapunov exponents");
    SweepConfig sw;
    sw.per_c.n_iterations = 1000;
    WindowSpec lo_spec;
    lo_spec.width = 2.5e-3;  // sweep window width along c
    std::string lo_output = "-";
    double lo_rel_tol = EstimateOptions{}.quad_rel_tol;
    std::optional<double> noise_sigma;
    logistic->add_option("--c-lo", sw.c_lo, "sweep start")->capture_default_str();
    logistic->add_option("--c-hi", sw.c_hi, "sweep end")->capture_default_str();
    logistic->add_option("--c-step", sw.c_step, "control-parameter grid step")->capture_default_str();
    logistic->add_option("--iterations", sw.per_c.n_iterations,
                         "kept iterations per grid value")->capture_default_str();
    logistic->add_option("--burn-in", sw.per_c.burn_in, "discarded transient iterations")->capture_default_str();
    logistic->add_option("--x0", sw.per_c.x0, "initial condition")->capture_default_str();
    auto* nv = logistic->add_option("--noise-variance", sw.noise_variance,
                                    "variance of the added centered Gaussian noise")->capture_default_str();
    logistic
        ->add_option("--noise-sigma",
                     [&noise_sigma](const CLI::results_t& r) {
                         noise_sigma = std::stod(r[0]);
                         return true;
                     },
                     "standard deviation of the added noise (alternative to --noise-variance)")
        ->excludes(nv);
    logistic->add_option("--seed", sw.seed, "noise generator seed")->capture_default_str();
    logistic->add_option("--width", lo_spec.width, "window width along c")->capture_default_str();
    logistic->add_option("--stride", lo_spec.stride, "window stride along c")->required();
    logistic->add_option("--min-points", lo_spec.min_points,
                         "minimum observations per window")->capture_default_str();
    logistic->add_option("--rel-tol", lo_rel_tol, "relative tolerance of the measure integrals")
        ->capture_default_str();
    logistic->add_option("--output", lo_output, "output CSV path, '-' for stdout");
    logistic->callback([&] {
        if (noise_sigma) {
            sw.noise_variance = *noise_sigma * *noise_sigma;
        }
        const SweepResult sweep = bifurcation_sweep(sw);
        EstimateOptions opts;
        opts.quad_rel_tol = lo_rel_tol;
        const auto windows = windowed_measures(sweep.series, lo_spec, opts);
        std::vector<double> lyapunov;
        lyapunov.reserve(windows.size());
        for (const auto& w : windows) {
            // Lyapunov at the grid value nearest the window center.
            const double pos = (w.center - sw.c_lo) / sw.c_step;
            const auto i = static_cast<std::size_t>(
                std::clamp(std::llround(pos), 0LL,
                           static_cast<long long>(sweep.c_grid.size()) - 1));
            lyapunov.push_back(sweep.lyapunov[i].value);
        }
        write_output(lo_output, sweep_csv(windows, lyapunov, sw.noise_variance));
    });

    // ---- fsip -------------------------------------------------------------
    auto* fsip = app.add_subcommand(
        "fsip", "Iso-complex curves and points of the Fisher-Shannon information plane");
    std::vector<double> complexities;
    std::vector<std::string> point_args;
    double fs_sep_lo = 0.1, fs_sep_hi = 10.0;
    std::size_t fs_points = 256;
    std::string fs_output = "-";
    fsip->add_option("--complexity", complexities,
                     "iso-complex curve level sep*fim = c (repeatable, c >= 1)");
    fsip->add_option("--point", point_args, "extra plane point as 'sep,fim' (repeatable)");
    fsip->add_option("--sep-lo", fs_sep_lo, "curve SEP range start")->capture_default_str();
    fsip->add_option("--sep-hi", fs_sep_hi, "curve SEP range end")->capture_default_str();
    fsip->add_option("--points", fs_points, "points per curve")->capture_default_str();
    fsip->add_option("--output", fs_output, "output CSV path, '-' for stdout");
    fsip->callback([&] {
        if (complexities.empty() && point_args.empty()) {
            throw ConfigError("fsip: nothing to emit; give --complexity and/or --point");
        }
        std::vector<FsipRow> rows;
        for (double c : complexities) {
            for (const auto& [sep, fim] : iso_complex_curve(c, fs_sep_lo, fs_sep_hi, fs_points)) {
                rows.push_back(FsipRow{sep, fim, c, true});
            }
        }
        for (const auto& text : point_args) {
            const auto [sep, fim] = parse_point(text);
            rows.push_back(FsipRow{sep, fim, sep * fim, false});
        }
        write_output(fs_output, fsip_csv(rows));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli_code = app.exit(e);
        return cli_code == 0 ? kExitOk : kExitConfig;
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "error (config): " << e.what() << '\n';
        return kExitConfig;
    } catch (const ParseError& e) {
        std::cerr << "error (parse): " << e.what() << '\n';
        return kExitData;
    } catch (const DataError& e) {
        std::cerr << "error (data): " << e.what() << '\n';
        return kExitData;
    } catch (const QuadratureError& e) {
        std::cerr << "error (quadrature): " << e.what() << '\n';
        return kExitQuadrature;
    } catch (const DomainError& e) {
        std::cerr << "error (domain): " << e.what() << '\n';
        return kExitDomain;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace fishan::cli
