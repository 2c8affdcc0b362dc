#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fishan/windows.hpp"

namespace fishan {

// Logistic map x_{n+1} = c x_n (1 - x_n) on the unit interval.
struct LogisticConfig {
    double c = 4.0;                 // control parameter, in [0, 4]
    double x0 = 0.5;                // initial condition, in [0, 1]
    std::size_t n_iterations = 0;   // values kept after burn-in
    std::size_t burn_in = 200;      // discarded transient iterations
};

// Iterates the map burn_in + n_iterations times and returns the final
// n_iterations values (the first returned value is the iterate after x0).
std::vector<double> logistic_trajectory(const LogisticConfig& cfg);

// values + i.i.d. N(0, variance) from a seeded deterministic generator
// (mt19937_64 driving a Box-Muller transform). variance = 0 is the identity.
std::vector<double> add_gaussian_noise(std::vector<double> values, double variance,
                                       std::uint64_t seed);

// Lyapunov exponent of the logistic map along a trajectory:
//   (1/n) sum log|c (1 - 2 x_i)| over the post-burn-in iterates.
// If any derivative factor is exactly zero the exponent is -infinity; that is
// reported through the degenerate flag rather than as a bare value.
struct LyapunovValue {
    double value;
    bool degenerate;
};

// Requires n_iterations >= 1000.
LyapunovValue lyapunov_logistic(const LogisticConfig& cfg);

struct SweepConfig {
    double c_lo = 3.5;
    double c_hi = 4.0;
    double c_step = 2.5e-4;
    LogisticConfig per_c;          // template; its c field is ignored
    double noise_variance = 0.0;   // added to the emitted values only
    std::uint64_t seed = 1;
};

// One trajectory per grid value of c, pooled into a parameter-indexed series
// (index = c), plus the per-c Lyapunov exponents computed on the noiseless
// trajectories. Deterministic for a fixed config and seed.
struct SweepResult {
    TimeSeries series;
    std::vector<double> c_grid;
    std::vector<LyapunovValue> lyapunov;
};

SweepResult bifurcation_sweep(const SweepConfig& cfg);

}  // namespace fishan
