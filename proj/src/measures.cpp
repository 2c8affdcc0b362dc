#include "fishan/measures.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "fishan/errors.hpp"
#include "fishan/kde.hpp"
#include "fishan/special.hpp"

namespace fishan {

namespace {

// Density values below this are treated as zero inside log/1/f integrands
// (the p log p and (f')^2/f limits vanish there).
constexpr double kDensityFloor = 1e-300;

constexpr double kTwoPi = 2.0 * constants::pi;

void require_positive_param(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string("parametric_measures: ") + name +
                          " must be positive and finite");
    }
}

// Initial subdivision hints for the adaptive integrator: a decimated set of
// order statistics, each bracketed at +-8h. The brackets keep every kernel
// bump (tail mass beyond 8h is ~1e-15 of the bump) inside panels of its own
// scale; a bump sitting exactly on a panel edge could otherwise be skipped
// by the open Kronrod nodes of both neighbouring panels.
std::vector<double> data_breakpoints(const Sample& sample, double h) {
    const auto& s = sample.sorted();
    const std::size_t n = s.size();
    const std::size_t step = std::max<std::size_t>(1, n / 256);
    std::vector<double> pts;
    pts.reserve(3 * (n / step + 2));
    auto add = [&](double x) {
        pts.push_back(x - 8.0 * h);
        pts.push_back(x);
        pts.push_back(x + 8.0 * h);
    };
    for (std::size_t i = 0; i < n; i += step) add(s[i]);
    add(s.back());
    return pts;
}

QuadratureOptions quad_options(const EstimateOptions& opts, double abs_tol) {
    QuadratureOptions q;
    q.rel_tol = opts.quad_rel_tol;
    q.abs_tol = abs_tol;
    q.max_panels = opts.quad_max_panels;
    return q;
}

}  // namespace

InfoTriple InfoTriple::from_sep_fim(double sep, double fim) {
    if (!(sep > 0.0) || !std::isfinite(sep) || !(fim > 0.0) || !std::isfinite(fim)) {
        throw DomainError("InfoTriple: sep and fim must be positive and finite");
    }
    return InfoTriple{sep, fim, sep * fim};
}

InfoTriple parametric_measures(const ParametricModel& model) {
    return std::visit(
        [](const auto& m) -> InfoTriple {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Gaussian>) {
                require_positive_param(m.sigma, "sigma");
                const double sep = m.sigma * m.sigma;
                return InfoTriple::from_sep_fim(sep, 1.0 / sep);
            } else if constexpr (std::is_same_v<T, Gamma>) {
                require_positive_param(m.theta, "theta");
                require_positive_param(m.k, "k");
                if (!(m.k > 2.0)) {
                    throw ShapeDomainError("parametric_measures: Gamma FIM requires shape k > 2");
                }
                const double log_sep = 2.0 * (std::log(m.theta) + log_gamma(m.k) +
                                              (1.0 - m.k) * digamma(m.k) + m.k) -
                                       std::log(kTwoPi) - 1.0;
                const double fim = 1.0 / ((m.k - 2.0) * m.theta * m.theta);
                return InfoTriple::from_sep_fim(std::exp(log_sep), fim);
            } else if constexpr (std::is_same_v<T, Weibull>) {
                require_positive_param(m.lambda, "lambda");
                require_positive_param(m.k, "k");
                if (!std::isfinite(m.mu)) {
                    throw DomainError("parametric_measures: Weibull mu must be finite");
                }
                if (!(m.k > 2.0)) {
                    throw ShapeDomainError(
                        "parametric_measures: Weibull FIM requires shape k > 2");
                }
                const double alpha = (m.k - 1.0) / m.k;
                const double one_minus_alpha = 1.0 - alpha;  // = 1/k
                const double sep = one_minus_alpha * one_minus_alpha * m.lambda * m.lambda *
                                   std::exp(2.0 * alpha * constants::euler_mascheroni + 1.0) /
                                   kTwoPi;
                const double fim = alpha * alpha /
                                   (one_minus_alpha * one_minus_alpha * m.lambda * m.lambda) *
                                   gamma_fn(2.0 * alpha - 1.0);
                return InfoTriple::from_sep_fim(sep, fim);
            } else {
                static_assert(std::is_same_v<T, LogNormal>);
                require_positive_param(m.sigma, "sigma");
                if (!std::isfinite(m.mu)) {
                    throw DomainError("parametric_measures: LogNormal mu must be finite");
                }
                const double s2 = m.sigma * m.sigma;
                const double sep = s2 * std::exp(2.0 * m.mu);
                const double fim = (1.0 + 1.0 / s2) * std::exp(2.0 * (s2 - m.mu));
                return InfoTriple::from_sep_fim(sep, fim);
            }
        },
        model);
}

double entropy_estimate(const Sample& sample, const Bandwidth& h, const EstimateOptions& opts) {
    const auto [lo, hi] = support_window(sample, h);
    const auto breakpoints = data_breakpoints(sample, h.value());
    return integrate(
        [&](double x) {
            const double f = density_at(sample, h, x);
            return f < kDensityFloor ? 0.0 : -f * std::log(f);
        },
        lo, hi, breakpoints, quad_options(opts, 1e-12));
}

double entropy_estimate(const Sample& sample, const EstimateOptions& opts) {
    return entropy_estimate(sample, sj_dpi_bandwidth(sample), opts);
}

double sep_estimate(const Sample& sample, const Bandwidth& h, const EstimateOptions& opts) {
    return std::exp(2.0 * entropy_estimate(sample, h, opts)) / (kTwoPi * constants::e);
}

double sep_estimate(const Sample& sample, const EstimateOptions& opts) {
    return sep_estimate(sample, sj_dpi_bandwidth(sample), opts);
}

double fim_estimate(const Sample& sample, const Bandwidth& h, const EstimateOptions& opts) {
    const auto [lo, hi] = support_window(sample, h);
    const auto breakpoints = data_breakpoints(sample, h.value());
    return integrate(
        [&](double x) {
            const double f = density_at(sample, h, x);
            if (f < kDensityFloor) return 0.0;
            const double df = density_derivative_at(sample, h, x);
            return df * df / f;
        },
        lo, hi, breakpoints, quad_options(opts, 0.0));
}

double fim_estimate(const Sample& sample, const EstimateOptions& opts) {
    return fim_estimate(sample, sj_dpi_bandwidth(sample), opts);
}

InfoTriple estimate_measures(const Sample& sample, const Bandwidth& h,
                             const EstimateOptions& opts) {
    const double sep = sep_estimate(sample, h, opts);
    const double fim = fim_estimate(sample, h, opts);
    return InfoTriple::from_sep_fim(sep, fim);
}

double fsc_estimate(const Sample& sample, const EstimateOptions& opts) {
    return estimate_measures(sample, sj_dpi_bandwidth(sample), opts).fsc;
}

FsipPoint fsip_point(const InfoTriple& triple, double tol) {
    if (tol < 0.0 || !std::isfinite(tol)) {
        throw DomainError("fsip_point: tolerance must be non-negative");
    }
    return FsipPoint{triple.sep, triple.fim, triple.sep * triple.fim >= 1.0 - tol};
}

namespace {

double stepped_ulps(double v, int k) {
    while (k > 0) {
        v = std::nextafter(v, std::numeric_limits<double>::infinity());
        --k;
    }
    while (k < 0) {
        v = std::nextafter(v, -std::numeric_limits<double>::infinity());
        ++k;
    }
    return v;
}

// Nudge (sep, fim) within a few ulps of (sep, c/sep) until the rounded
// product sep*fim equals c exactly. Products in that neighbourhood step by
// about one ulp of c, so the scan always finds a hit in practice.
bool make_product_exact(double& sep, double& fim, double c) {
    constexpr int kOffsets[] = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6, 7, -7, 8, -8};
    for (int ds : kOffsets) {
        const double s = stepped_ulps(sep, ds);
        if (!(s > 0.0)) continue;
        const double f0 = c / s;
        for (int df : kOffsets) {
            const double f = stepped_ulps(f0, df);
            if (s * f == c) {
                sep = s;
                fim = f;
                return true;
            }
        }
    }
    fim = c / sep;
    return false;
}

}  // namespace

std::vector<std::pair<double, double>> iso_complex_curve(double c, double sep_lo, double sep_hi,
                                                         std::size_t points) {
    if (!(c >= 1.0) || !std::isfinite(c)) {
        throw DomainError("iso_complex_curve: complexity below 1 is unreachable");
    }
    if (!(sep_lo > 0.0) || !(sep_hi > sep_lo) || !std::isfinite(sep_hi)) {
        throw DomainError("iso_complex_curve: need 0 < sep_lo < sep_hi");
    }
    if (points < 2) {
        throw DomainError("iso_complex_curve: need at least 2 points");
    }
    const double log_lo = std::log(sep_lo);
    const double log_hi = std::log(sep_hi);
    std::vector<std::pair<double, double>> curve;
    curve.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        double sep;
        if (i == 0) {
            sep = sep_lo;
        } else if (i + 1 == points) {
            sep = sep_hi;
        } else {
            const double t = static_cast<double>(i) / static_cast<double>(points - 1);
            sep = std::exp(log_lo + t * (log_hi - log_lo));
        }
        double fim = c / sep;
        make_product_exact(sep, fim, c);
        curve.emplace_back(sep, fim);
    }
    return curve;
}

std::pair<double, double> de_bruijn_check(const Gaussian& model, double sigma_z, double t_step) {
    require_positive_param(model.sigma, "sigma");
    require_positive_param(sigma_z, "sigma_z");
    require_positive_param(t_step, "t_step");
    const double var = model.sigma * model.sigma;
    const double var_z = sigma_z * sigma_z;
    const auto entropy = [](double v) { return 0.5 * std::log(kTwoPi * constants::e * v); };
    const double lhs = (entropy(var + t_step * var_z) - entropy(var)) / t_step;
    const double rhs = 0.5 * var_z / var;
    return {lhs, rhs};
}

}  // namespace fishan
