#include "fishan/special.hpp"

#include <cmath>
#include <string>

#include "fishan/errors.hpp"

namespace fishan {

namespace {

void require_positive(double x, const char* fn) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(fn) + ": argument must be a positive finite real, got " +
                          std::to_string(x));
    }
}

}  // namespace

double gamma_fn(double x) {
    require_positive(x, "gamma_fn");
    return std::tgamma(x);
}

double log_gamma(double x) {
    require_positive(x, "log_gamma");
    return std::lgamma(x);
}

double digamma(double x) {
    require_positive(x, "digamma");
    // Recurrence shift into the asymptotic regime, then the Stirling-type
    // series psi(x) ~ log x - 1/(2x) - sum B_{2k}/(2k x^{2k}).
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // B2/2, -B4/4, ... through B14/14; truncation error < 5e-17 for x >= 10.
    const double series =
        inv2 * (1.0 / 12.0 +
                inv2 * (-1.0 / 120.0 +
                        inv2 * (1.0 / 252.0 +
                                inv2 * (-1.0 / 240.0 +
                                        inv2 * (1.0 / 132.0 +
                                                inv2 * (-691.0 / 32760.0 +
                                                        inv2 * (1.0 / 12.0)))))));
    return acc + std::log(x) - 0.5 * inv - series;
}

}  // namespace fishan
