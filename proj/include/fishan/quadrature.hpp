#pragma once

#include <functional>
#include <span>
#include <utility>

#include "fishan/sample.hpp"

namespace fishan {

struct QuadratureOptions {
    // Accept when the accumulated error bound is <= max(abs_tol, rel_tol*|I|).
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    // Subdivision budget; exceeding it raises QuadratureError with the best
    // estimate reached.
    std::size_t max_panels = 20000;
};

// Globally adaptive Gauss-Kronrod (7,15) integration of fn over [a, b].
double integrate(const std::function<double(double)>& fn, double a, double b,
                 const QuadratureOptions& opts = {});

// Same, with interior breakpoints seeding the initial subdivision. Points
// outside (a, b) are ignored. Useful for integrands with known structure
// (e.g. kernel density estimates, whose features sit at the data points).
double integrate(const std::function<double(double)>& fn, double a, double b,
                 std::span<const double> interior_breakpoints,
                 const QuadratureOptions& opts = {});

// Finite integration window for KDE functionals: [min - 10h, max + 10h].
// The kernel mass outside is below 1e-20 of the total.
std::pair<double, double> support_window(const Sample& sample, const Bandwidth& h);

}  // namespace fishan
