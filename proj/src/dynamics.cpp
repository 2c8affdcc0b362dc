#include "fishan/dynamics.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "fishan/errors.hpp"
#include "fishan/special.hpp"

namespace fishan {

namespace {

void validate(const LogisticConfig& cfg) {
    if (!(cfg.c >= 0.0 && cfg.c <= 4.0)) {
        throw ConfigError("logistic map: c must lie in [0, 4]");
    }
    if (!(cfg.x0 >= 0.0 && cfg.x0 <= 1.0)) {
        throw ConfigError("logistic map: x0 must lie in [0, 1]");
    }
}

double burn(const LogisticConfig& cfg) {
    double x = cfg.x0;
    for (std::size_t i = 0; i < cfg.burn_in; ++i) {
        x = cfg.c * x * (1.0 - x);
    }
    return x;
}

// Deterministic standard-normal stream: mt19937_64 bits mapped to (0, 1],
// paired through the Box-Muller transform.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]: keeps the log finite
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * constants::pi * u2;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return r * std::cos(angle);
    }

private:
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;  // [0, 1)
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace

std::vector<double> logistic_trajectory(const LogisticConfig& cfg) {
    validate(cfg);
    double x = burn(cfg);
    std::vector<double> out;
    out.reserve(cfg.n_iterations);
    for (std::size_t i = 0; i < cfg.n_iterations; ++i) {
        x = cfg.c * x * (1.0 - x);
        out.push_back(x);
    }
    return out;
}

std::vector<double> add_gaussian_noise(std::vector<double> values, double variance,
                                       std::uint64_t seed) {
    if (!(variance >= 0.0) || !std::isfinite(variance)) {
        throw ConfigError("add_gaussian_noise: variance must be non-negative");
    }
    if (variance == 0.0) {
        return values;
    }
    NormalStream stream(seed);
    const double sd = std::sqrt(variance);
    for (double& v : values) {
        v += sd * stream.next();
    }
    return values;
}

LyapunovValue lyapunov_logistic(const LogisticConfig& cfg) {
    validate(cfg);
    if (cfg.n_iterations < 1000) {
        throw ConfigError("lyapunov_logistic: need at least 1000 iterations");
    }
    double x = burn(cfg);
    double acc = 0.0;
    for (std::size_t i = 0; i < cfg.n_iterations; ++i) {
        const double derivative = std::abs(cfg.c * (1.0 - 2.0 * x));
        if (derivative == 0.0) {
            return {-std::numeric_limits<double>::infinity(), true};
        }
        acc += std::log(derivative);
        x = cfg.c * x * (1.0 - x);
    }
    return {acc / static_cast<double>(cfg.n_iterations), false};
}

SweepResult bifurcation_sweep(const SweepConfig& cfg) {
    if (!(cfg.c_lo >= 0.0 && cfg.c_lo < cfg.c_hi && cfg.c_hi <= 4.0)) {
        throw ConfigError("bifurcation_sweep: need 0 <= c_lo < c_hi <= 4");
    }
    if (!(cfg.c_step > 0.0) || !std::isfinite(cfg.c_step)) {
        throw ConfigError("bifurcation_sweep: c_step must be positive");
    }
    if (cfg.per_c.n_iterations == 0) {
        throw ConfigError("bifurcation_sweep: per-c trajectory length must be positive");
    }
    const auto grid_size =
        static_cast<std::size_t>(std::floor((cfg.c_hi - cfg.c_lo) / cfg.c_step + 1e-9)) + 1;

    std::vector<double> c_grid, index, values;
    std::vector<LyapunovValue> lyapunov;
    c_grid.reserve(grid_size);
    lyapunov.reserve(grid_size);
    index.reserve(grid_size * cfg.per_c.n_iterations);
    values.reserve(grid_size * cfg.per_c.n_iterations);

    for (std::size_t i = 0; i < grid_size; ++i) {
        const double c = cfg.c_lo + static_cast<double>(i) * cfg.c_step;
        LogisticConfig per_c = cfg.per_c;
        per_c.c = c;
        const auto trajectory = logistic_trajectory(per_c);

        // Lyapunov from the same noiseless orbit.
        double acc = 0.0;
        bool degenerate = false;
        double x = burn(per_c);
        for (std::size_t t = 0; t < per_c.n_iterations; ++t) {
            const double derivative = std::abs(c * (1.0 - 2.0 * x));
            if (derivative == 0.0) {
                degenerate = true;
                break;
            }
            acc += std::log(derivative);
            x = c * x * (1.0 - x);
        }
        lyapunov.push_back(degenerate
                               ? LyapunovValue{-std::numeric_limits<double>::infinity(), true}
                               : LyapunovValue{acc / static_cast<double>(per_c.n_iterations),
                                               false});
        c_grid.push_back(c);
        index.insert(index.end(), trajectory.size(), c);
        values.insert(values.end(), trajectory.begin(), trajectory.end());
    }

    values = add_gaussian_noise(std::move(values), cfg.noise_variance, cfg.seed);
    return SweepResult{TimeSeries(std::move(index), std::move(values),
                                  IndexOrdering::non_decreasing),
                       std::move(c_grid), std::move(lyapunov)};
}

}  // namespace fishan
